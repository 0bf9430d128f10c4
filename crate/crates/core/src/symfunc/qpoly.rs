use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Serialized as a JSON object `{exponent: coefficient}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "BTreeMap<i64, i64>", into = "BTreeMap<i64, i64>")]
pub struct QPoly {
    terms: BTreeMap<i64, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, 1)
    }

    /// `coeff * q^exp`.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = QPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        QPoly::monomial(exp, 1)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }
}

impl From<BTreeMap<i64, i64>> for QPoly {
    fn from(map: BTreeMap<i64, i64>) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in map {
            p.add_term(e, c);
        }
        p
    }
}

impl From<QPoly> for BTreeMap<i64, i64> {
    fn from(p: QPoly) -> Self {
        p.terms
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    /// Ascending exponents: `1+q`, `q^2`, `2q^-1-q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().enumerate() {
            let term = if e == 0 {
                c.to_string()
            } else {
                let mono = if e == 1 {
                    "q".to_string()
                } else {
                    format!("q^{e}")
                };
                match c {
                    1 => mono,
                    -1 => format!("-{mono}"),
                    _ => format!("{c}{mono}"),
                }
            };
            if idx > 0 && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl FromStr for QPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(QPoly::zero());
        }
        // Split into signed terms; a sign directly after '^' belongs to an exponent.
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);

        let bad = || Error::Parse(format!("polynomial {s:?}"));
        let mut poly = QPoly::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        1
                    } else {
                        body[..pos].parse::<i64>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<i64>()
                            .map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            poly.add_term(exp, sign * coeff);
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        let p = &QPoly::one() + &QPoly::q_pow(1);
        assert_eq!(p.to_string(), "1+q");
        assert_eq!(QPoly::q_pow(2).to_string(), "q^2");
        assert_eq!(QPoly::monomial(-1, 2).to_string(), "2q^-1");
        assert_eq!((&QPoly::one() - &QPoly::q_pow(3)).to_string(), "1-q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = QPoly::monomial(3, 2);
        p.add_term(3, -2);
        assert!(p.is_zero());
        let from_map: QPoly = BTreeMap::from([(1, 0), (2, 5)]).into();
        assert_eq!(from_map, QPoly::monomial(2, 5));
    }

    #[test]
    fn arithmetic() {
        let a = &QPoly::one() + &QPoly::q_pow(1);
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "1+2q+q^2");
        assert_eq!(sq.eval_one(), 4);
        assert_eq!(a.shift(-2).to_string(), "q^-2+q^-1");
        assert_eq!(a.invert_q().to_string(), "q^-1+1");
    }

    #[test]
    fn json_shape() {
        let p: QPoly = "q+q^2".parse().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"1":1,"2":1}"#);
        let back: QPoly = serde_json::from_str(r#"{"-1":3,"0":0}"#).unwrap();
        assert_eq!(back, QPoly::monomial(-1, 3));
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(terms in proptest::collection::btree_map(-6i64..6, -4i64..4, 0..5)) {
            let p: QPoly = terms.into();
            prop_assert_eq!(p.to_string().parse::<QPoly>().unwrap(), p.clone());
            let json = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<QPoly>(&json).unwrap(), p);
        }
    }
}
