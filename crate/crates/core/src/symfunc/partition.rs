use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Reads a content vector (trailing zeros allowed) as a partition.
    pub fn from_content(content: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(content.len());
        let mut seen_zero = false;
        for &c in content {
            if c < 0 || (seen_zero && c > 0) {
                return Err(Error::InvalidPartition(format!("{content:?}")));
            }
            if c == 0 {
                seen_zero = true;
            } else {
                parts.push(c as usize);
            }
        }
        Partition::new(parts)
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition(Vec::new());
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `size` with at most `max_len` parts, in decreasing
    /// lexicographic order.
    pub fn all(size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(
            rest: usize,
            max_part: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2, 1, 1]).conjugate(), p(&[4, 2]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::default().conjugate(), Partition::default());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for size in 0..=10 {
            for lam in Partition::all(size, size) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), size);
            }
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_content(&[1, 0, 1]).is_err());
        assert_eq!(Partition::from_content(&[2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(4, 2), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn text_round_trip() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2]).to_string(), "2,2");
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
    }
}
