use std::fmt;

use super::elem::{ClWeight, Dir, DomWeight, Elem};
use crate::error::{Error, Result};

/// Outcome of bracket cancellation over a sequence of `(eps_i, phi_i)` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    /// Factor hit by f~_i (leftmost uncancelled `+`).
    pub lower_at: Option<usize>,
    /// Factor hit by e~_i (rightmost uncancelled `-`).
    pub raise_at: Option<usize>,
    pub eps: u32,
    pub phi: u32,
}

/// Each factor contributes `-^eps +^phi`, left to right; a `+` cancels
/// against a later `-`. With two factors this is Kashiwara's rule: f~ acts
/// on the left iff `phi(left) > eps(right)`, e~ iff `phi(left) >= eps(right)`.
pub fn reduce_signature<I>(factors: I) -> Signature
where
    I: IntoIterator<Item = (u32, u32)>,
{
    let mut pluses: Vec<(usize, u32)> = Vec::new();
    let mut raise_at = None;
    let mut eps = 0;
    for (idx, (e, p)) in factors.into_iter().enumerate() {
        let mut minus = e;
        while minus > 0 {
            let Some(top) = pluses.last_mut() else { break };
            let m = minus.min(top.1);
            top.1 -= m;
            minus -= m;
            if top.1 == 0 {
                pluses.pop();
            }
        }
        if minus > 0 {
            raise_at = Some(idx);
            eps += minus;
        }
        if p > 0 {
            pluses.push((idx, p));
        }
    }
    Signature {
        lower_at: pluses.first().map(|&(idx, _)| idx),
        raise_at,
        eps,
        phi: pluses.iter().map(|&(_, c)| c).sum(),
    }
}

/// A finite tensor product `b_1 (x) ... (x) b_m`, written left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor(pub Vec<Elem>);

impl Tensor {
    pub fn signature(&self, i: usize) -> Signature {
        reduce_signature(self.0.iter().map(|b| (b.eps(i), b.phi(i))))
    }

    pub fn eps(&self, i: usize) -> u32 {
        self.signature(i).eps
    }

    pub fn phi(&self, i: usize) -> u32 {
        self.signature(i).phi
    }

    /// Index of the factor the operator would act on, if it does not kill the tensor.
    pub fn acting_factor(&self, i: usize, dir: Dir) -> Option<usize> {
        let sig = self.signature(i);
        match dir {
            Dir::Raise => sig.raise_at,
            Dir::Lower => sig.lower_at,
        }
    }

    pub fn apply(&self, i: usize, dir: Dir) -> Option<Tensor> {
        let at = self.acting_factor(i, dir)?;
        let mut factors = self.0.clone();
        factors[at] = factors[at]
            .apply(i, dir)
            .expect("signature picks an active factor");
        Some(Tensor(factors))
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Elem::to_string).collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Weight of a truncated path: the head's dominant weight plus body content.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWeight {
    pub head: DomWeight,
    pub content: ClWeight,
}

impl PathWeight {
    pub fn pairing(&self, i: usize) -> i64 {
        self.head.pairing(i) as i64 + self.content.pairing(i)
    }
}

/// `u_head (x) b_J (x) ... (x) b_1`: the frozen tail is absorbed into the
/// highest-weight factor `u_head` (`eps_i = 0`, `phi_i = <head, h_i>`).
/// `body[0]` sits next to the head; the last body entry is `p(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncatedPath {
    pub head: DomWeight,
    pub body: Vec<Elem>,
}

impl TruncatedPath {
    pub fn new(head: DomWeight, body: Vec<Elem>) -> Result<Self> {
        let n = head.rank();
        if let Some(b) = body.iter().find(|b| b.rank() != n) {
            return Err(Error::InvalidElement(format!(
                "{b} has rank {} but head has rank {n}",
                b.rank()
            )));
        }
        Ok(TruncatedPath { head, body })
    }

    pub fn rank(&self) -> usize {
        self.head.rank()
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }

    /// `p(j)`, counting from the right end starting at 1.
    pub fn factor(&self, j: usize) -> &Elem {
        &self.body[self.body.len() - j]
    }

    /// Signature with the head as factor 0.
    pub fn signature(&self, i: usize) -> Signature {
        let head = std::iter::once((0, self.head.pairing(i)));
        reduce_signature(head.chain(self.body.iter().map(|b| (b.eps(i), b.phi(i)))))
    }

    pub fn eps(&self, i: usize) -> u32 {
        self.signature(i).eps
    }

    pub fn phi(&self, i: usize) -> u32 {
        self.signature(i).phi
    }

    /// Applies e~_i or f~_i. `Ok(None)` means the operator kills the path;
    /// `Err(FrozenBoundary)` means f~_i would have to act on the head.
    pub fn apply(&self, i: usize, dir: Dir) -> Result<Option<TruncatedPath>> {
        let sig = self.signature(i);
        let at = match dir {
            Dir::Raise => sig.raise_at,
            Dir::Lower => sig.lower_at,
        };
        match at {
            None => Ok(None),
            Some(0) => Err(Error::FrozenBoundary),
            Some(idx) => {
                let mut body = self.body.clone();
                body[idx - 1] = body[idx - 1]
                    .apply(i, dir)
                    .expect("signature picks an active factor");
                Ok(Some(TruncatedPath {
                    head: self.head.clone(),
                    body,
                }))
            }
        }
    }

    /// Body position (1-based from the left) acted on, if any.
    pub fn acting_position(&self, i: usize, dir: Dir) -> Option<usize> {
        let sig = self.signature(i);
        match dir {
            Dir::Raise => sig.raise_at,
            Dir::Lower => sig.lower_at,
        }
    }

    pub fn weight(&self) -> PathWeight {
        let mut content = ClWeight::zero(self.rank());
        for b in &self.body {
            content.add(&b.content());
        }
        PathWeight {
            head: self.head.clone(),
            content,
        }
    }

    /// Killed by every e~_i with `i != 0`.
    pub fn is_classically_highest(&self) -> bool {
        (1..self.rank()).all(|i| self.signature(i).raise_at.is_none())
    }

    pub fn rotate(&self, s: usize) -> TruncatedPath {
        TruncatedPath {
            head: self.head.rotate(s),
            body: self.body.iter().map(|b| b.rotate(s)).collect(),
        }
    }

    /// Parses `u[m_0,...,m_{n-1}] | b_J | ... | b_1`.
    pub fn parse(s: &str) -> Result<TruncatedPath> {
        let mut pieces = s.split('|').map(str::trim);
        let head = pieces
            .next()
            .and_then(|h| h.strip_prefix("u[")?.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("path {s:?}: missing u[...] head")))?;
        let labels = head
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("path head {head:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let head = DomWeight::new(labels)?;
        let body = pieces
            .map(|p| Elem::parse(p, head.rank()))
            .collect::<Result<Vec<_>>>()?;
        TruncatedPath::new(head, body)
    }
}

impl fmt::Display for TruncatedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{}]", self.head)?;
        for b in &self.body {
            write!(f, " | {b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(x: &[u32]) -> Elem {
        Elem::row(x).unwrap()
    }

    #[test]
    fn two_factor_rule() {
        let t = Tensor(vec![row(&[1, 0]), row(&[1, 0])]);
        let t1 = t.apply(1, Dir::Lower).unwrap();
        assert_eq!(t1, Tensor(vec![row(&[0, 1]), row(&[1, 0])]));
        let t2 = t1.apply(1, Dir::Lower).unwrap();
        assert_eq!(t2, Tensor(vec![row(&[0, 1]), row(&[0, 1])]));
        assert_eq!(t2.apply(1, Dir::Lower), None);
        assert_eq!(
            Tensor(vec![row(&[1, 0]), row(&[0, 1])]).apply(1, Dir::Raise),
            None
        );
    }

    #[test]
    fn head_is_frozen() {
        let head = DomWeight::fundamental(3, 0, 2);
        let p = TruncatedPath::new(head.clone(), vec![row(&[2, 0, 0])]).unwrap();
        assert_eq!(p.signature(0).raise_at, None);
        let lowered = p.apply(1, Dir::Lower).unwrap().unwrap();
        assert_eq!(lowered.body, vec![row(&[1, 1, 0])]);
        assert_eq!(p.apply(0, Dir::Lower), Ok(None));
        let bare = TruncatedPath::new(head, vec![row(&[0, 0, 2])]).unwrap();
        assert_eq!(bare.apply(0, Dir::Lower), Err(Error::FrozenBoundary));
    }

    #[test]
    fn head_string_lengths() {
        let p = TruncatedPath::new(DomWeight::fundamental(4, 0, 3), vec![]).unwrap();
        assert_eq!(p.eps(0), 0);
        assert_eq!(p.phi(0), 3);
        for i in 1..4 {
            assert_eq!((p.eps(i), p.phi(i)), (0, 0));
        }
    }

    #[test]
    fn weight_and_encoding() {
        let p = TruncatedPath::new(
            DomWeight::fundamental(2, 0, 1),
            vec![row(&[1, 0]), row(&[0, 1])],
        )
        .unwrap();
        let w = p.weight();
        assert_eq!(w.content, ClWeight(vec![1, 1]));
        assert_eq!(w.pairing(0), 1);
        assert_eq!(w.pairing(1), 0);
        assert_eq!(p.to_string(), "u[1,0] | 1,0 | 0,1");
        assert_eq!(TruncatedPath::parse(&p.to_string()).unwrap(), p);
        assert!(TruncatedPath::parse("1,0 | 0,1").is_err());
    }
}
