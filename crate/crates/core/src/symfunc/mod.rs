//! Partitions, tableaux, charge, and Kostka-Foulkes polynomials.
//!
//! Everything here is computed straight from semistandard tableaux, so it
//! serves as the reference side when crystal-theoretic characters are checked.

mod partition;
mod qpoly;
mod tableau;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use partition::Partition;
pub use qpoly::QPoly;
pub use tableau::{build_t_mu, enumerate_ssyt, word_charge, Tableau};

use crate::error::{Error, Result};

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> Result<usize> {
    Ok(enumerate_ssyt(lambda, mu)?.len())
}

/// `K_{lambda,mu}(q)`: the sum of `q^charge(T)` over tableaux of shape
/// `lambda` and content `mu`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let mut poly = QPoly::zero();
    for t in enumerate_ssyt(lambda, mu.parts())? {
        poly.add_term(t.charge()? as i64, 1);
    }
    Ok(poly)
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=n`
/// (hook-content formula).
pub fn schur_dim(lambda: &Partition, n: usize) -> Result<u128> {
    if lambda.len() > n {
        return Err(Error::Unsupported(format!(
            "partition {lambda} has more than {n} parts"
        )));
    }
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            num *= (n + c - r) as u128;
            den *= ((len - c - 1) + (conj.part(c) - r - 1) + 1) as u128;
        }
    }
    Ok(num / den)
}

/// Milne polynomial `sum_lambda K_{lambda,mu}(q) s_lambda`, restricted to
/// `l(lambda) <= n`.
pub fn milne(mu: &Partition, n: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for lambda in Partition::all(mu.size(), n) {
        out.add(lambda.clone(), &kostka_foulkes(&lambda, mu)?);
    }
    Ok(out)
}

/// A finite sum `sum_lambda c_lambda(q) s_lambda` with Laurent coefficients.
///
/// JSON form: `{"2,1": {"0": 1, "1": 1}, ...}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurExpansion(BTreeMap<Partition, QPoly>);

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn add(&mut self, lambda: Partition, poly: &QPoly) {
        let entry = self.0.entry(lambda.clone()).or_default();
        *entry += poly;
        if entry.is_zero() {
            self.0.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.0.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shift(&self, k: i64) -> Self {
        SchurExpansion(
            self.0
                .iter()
                .map(|(l, p)| (l.clone(), p.shift(k)))
                .collect(),
        )
    }

    /// Dimension at `q = 1`: `sum_lambda c_lambda(1) dim V_lambda` for `gl_n`.
    pub fn dimension(&self, n: usize) -> Result<i128> {
        let mut total = 0i128;
        for (lambda, poly) in &self.0 {
            total += poly.eval_one() as i128 * schur_dim(lambda, n)? as i128;
        }
        Ok(total)
    }

    /// `{"2,1": "1+q", ...}`.
    pub fn to_text_map(&self) -> BTreeMap<String, String> {
        self.0
            .iter()
            .map(|(l, p)| (l.to_string(), p.to_string()))
            .collect()
    }

    pub fn from_text_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let mut out = SchurExpansion::new();
        for (l, p) in map {
            out.add(l.parse()?, &p.parse()?);
        }
        Ok(out)
    }

    /// Partitions whose coefficients differ, with `(self, other)` values.
    pub fn diff(&self, other: &SchurExpansion) -> BTreeMap<Partition, (QPoly, QPoly)> {
        self.0
            .keys()
            .chain(other.0.keys())
            .filter_map(|l| {
                let (a, b) = (self.coeff(l), other.coeff(l));
                (a != b).then(|| (l.clone(), (a, b)))
            })
            .collect()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.0.iter().map(|(l, p)| format!("({p})s({l})")).collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka_number(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka_number(&p(&[3]), &[1, 1, 1]).unwrap(), 1);
        for size in 1..=6 {
            for lam in Partition::all(size, size) {
                assert_eq!(kostka_number(&lam, lam.parts()).unwrap(), 1);
            }
        }
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(
            kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            poly("q+q^2")
        );
        assert_eq!(
            kostka_foulkes(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
            poly("q^3")
        );
        assert_eq!(
            kostka_foulkes(&p(&[4, 2]), &p(&[3, 2, 1])).unwrap(),
            poly("q+q^2")
        );
        assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn milne_examples() {
        let m = milne(&p(&[1, 1, 1]), 2).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.coeff(&p(&[2, 1])), poly("q+q^2"));
        assert_eq!(m.coeff(&p(&[3])), poly("q^3"));
        for n in 1..4 {
            let m = milne(&p(&[2]), n).unwrap();
            assert_eq!(m.len(), 1);
            assert_eq!(m.coeff(&p(&[2])), QPoly::one());
        }
        let m3 = milne(&p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(m3.coeff(&p(&[1, 1, 1])), QPoly::one());
        assert_eq!(m3.len(), 3);
    }

    #[test]
    fn schur_dims() {
        assert_eq!(schur_dim(&p(&[2, 1]), 2).unwrap(), 2);
        assert_eq!(schur_dim(&p(&[3]), 2).unwrap(), 4);
        assert_eq!(schur_dim(&p(&[1, 1, 1, 1]), 4).unwrap(), 1);
        assert_eq!(schur_dim(&p(&[2, 1]), 3).unwrap(), 8);
        assert!(schur_dim(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_dim_counts_tableaux() {
        // Brute force: sum Kostka numbers over all contents in 1..=n.
        fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 0 {
                return if total == 0 { vec![vec![]] } else { vec![] };
            }
            (0..=total)
                .flat_map(|first| {
                    compositions(total - first, parts - 1)
                        .into_iter()
                        .map(move |mut rest| {
                            rest.insert(0, first);
                            rest
                        })
                })
                .collect()
        }
        for n in 1..=3 {
            for size in 0..=4 {
                for lam in Partition::all(size, n) {
                    let brute: usize = compositions(size, n)
                        .iter()
                        .map(|c| kostka_number(&lam, c).unwrap())
                        .sum();
                    assert_eq!(schur_dim(&lam, n).unwrap(), brute as u128, "{lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn milne_dimension_is_h_mu() {
        fn binom(a: u128, b: u128) -> u128 {
            (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
        }
        for size in 1..=5 {
            for mu in Partition::all(size, size) {
                for n in 1..=4usize {
                    let dim = milne(&mu, n).unwrap().dimension(n).unwrap();
                    let expected: u128 = mu
                        .parts()
                        .iter()
                        .map(|&m| binom((n + m - 1) as u128, m as u128))
                        .product();
                    assert_eq!(dim as u128, expected, "mu={mu} n={n}");
                }
            }
        }
    }

    #[test]
    fn expansion_text_map() {
        let mut e = SchurExpansion::new();
        e.add(p(&[2, 1]), &poly("1+q"));
        e.add(p(&[3]), &poly("q^2"));
        let text = e.to_text_map();
        assert_eq!(
            serde_json::to_string(&text).unwrap(),
            r#"{"2,1":"1+q","3":"q^2"}"#
        );
        assert_eq!(SchurExpansion::from_text_map(&text).unwrap(), e);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<SchurExpansion>(&json).unwrap(), e);
        e.add(p(&[3]), &poly("-q^2"));
        assert_eq!(e.len(), 1);
    }
}
