use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kashiwara operator direction: `Raise` is e~_i, `Lower` is f~_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    Raise,
    Lower,
}

/// Dominant weight `sum_i m_i Lambda_i`, stored as the labels `m_i`, `i in Z/nZ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DomWeight(Vec<u32>);

impl DomWeight {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::InvalidRank(labels.len()));
        }
        Ok(DomWeight(labels))
    }

    /// `level * Lambda_r` with `r` taken mod `n`.
    pub fn fundamental(n: usize, r: i64, level: u32) -> Self {
        let mut labels = vec![0; n];
        labels[r.rem_euclid(n as i64) as usize] = level;
        DomWeight(labels)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    /// `<lambda, h_i>`.
    pub fn pairing(&self, i: usize) -> u32 {
        self.0[i % self.0.len()]
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Dynkin rotation `Lambda_i -> Lambda_{i+s}`.
    pub fn rotate(&self, s: usize) -> Self {
        let n = self.0.len();
        let mut labels = vec![0; n];
        for (i, &m) in self.0.iter().enumerate() {
            labels[(i + s) % n] = m;
        }
        DomWeight(labels)
    }

    /// All dominant weights of the given level.
    pub fn all_of_level(n: usize, level: u32) -> Vec<DomWeight> {
        compositions(level, n).into_iter().map(DomWeight).collect()
    }
}

impl fmt::Display for DomWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&labels.join(","))
    }
}

/// Level-zero classical weight given by letter content: entry `a-1` counts
/// letter `a`. The pairing with `h_i` is `c_{i-1} - c_i` read cyclically, so
/// `h_0` pairs letter `n` against letter `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClWeight(pub Vec<i64>);

impl ClWeight {
    pub fn zero(n: usize) -> Self {
        ClWeight(vec![0; n])
    }

    pub fn pairing(&self, i: usize) -> i64 {
        let n = self.0.len();
        let i = i % n;
        self.0[(i + n - 1) % n] - self.0[i]
    }

    pub fn add(&mut self, other: &[i64]) {
        for (a, b) in self.0.iter_mut().zip(other) {
            *a += b;
        }
    }

    /// Shifts by `-alpha_i`.
    pub fn sub_simple_root(&mut self, i: usize) {
        let n = self.0.len();
        let i = i % n;
        self.0[(i + n - 1) % n] -= 1;
        self.0[i] += 1;
    }
}

/// Element `(x_0, ..., x_{n-1})` of the symmetric-power crystal `B^{1,l}`;
/// coordinate `x_{a-1}` counts letter `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowElem {
    coords: Vec<u32>,
}

impl RowElem {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidRank(coords.len()));
        }
        Ok(RowElem { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn level(&self) -> u32 {
        self.coords.iter().sum()
    }

    pub fn eps(&self, i: usize) -> u32 {
        self.coords[i % self.rank()]
    }

    pub fn phi(&self, i: usize) -> u32 {
        let n = self.rank();
        self.coords[(i % n + n - 1) % n]
    }

    /// e~_i moves a unit from `x_i` to `x_{i-1}`; f~_i moves it back.
    pub fn apply(&self, i: usize, dir: Dir) -> Option<RowElem> {
        let n = self.rank();
        let i = i % n;
        let prev = (i + n - 1) % n;
        let (from, to) = match dir {
            Dir::Raise => (i, prev),
            Dir::Lower => (prev, i),
        };
        if self.coords[from] == 0 {
            return None;
        }
        let mut coords = self.coords.clone();
        coords[from] -= 1;
        coords[to] += 1;
        Some(RowElem { coords })
    }

    pub fn rotate(&self, s: usize) -> RowElem {
        let n = self.rank();
        let mut coords = vec![0; n];
        for (r, &x) in self.coords.iter().enumerate() {
            coords[(r + s) % n] = x;
        }
        RowElem { coords }
    }
}

/// Element of the column crystal `B^{k,1}`: a strictly increasing k-subset of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColElem {
    n: usize,
    letters: Vec<usize>,
}

impl ColElem {
    pub fn new(n: usize, mut letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        letters.sort_unstable();
        if letters.windows(2).any(|w| w[0] == w[1]) || letters.iter().any(|&a| a == 0 || a > n) {
            return Err(Error::InvalidElement(format!(
                "{letters:?} is not a subset of 1..={n}"
            )));
        }
        if letters.is_empty() || letters.len() >= n {
            return Err(Error::ColumnHeight {
                k: letters.len(),
                n,
            });
        }
        Ok(ColElem { n, letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.letters.len()
    }

    fn contains(&self, a: usize) -> bool {
        self.letters.binary_search(&a).is_ok()
    }

    /// Letters exchanged by the index-`i` operators: `(a, a+1)`, and `(n, 1)` for `i = 0`.
    fn letter_pair(&self, i: usize) -> (usize, usize) {
        let a = if i.is_multiple_of(self.n) {
            self.n
        } else {
            i % self.n
        };
        (a, a % self.n + 1)
    }

    pub fn eps(&self, i: usize) -> u32 {
        let (a, b) = self.letter_pair(i);
        (self.contains(b) && !self.contains(a)) as u32
    }

    pub fn phi(&self, i: usize) -> u32 {
        let (a, b) = self.letter_pair(i);
        (self.contains(a) && !self.contains(b)) as u32
    }

    pub fn apply(&self, i: usize, dir: Dir) -> Option<ColElem> {
        let (a, b) = self.letter_pair(i);
        let (from, to) = match dir {
            Dir::Lower => (a, b),
            Dir::Raise => (b, a),
        };
        if !self.contains(from) || self.contains(to) {
            return None;
        }
        let mut letters: Vec<usize> = self
            .letters
            .iter()
            .map(|&x| if x == from { to } else { x })
            .collect();
        letters.sort_unstable();
        Some(ColElem { n: self.n, letters })
    }

    pub fn rotate(&self, s: usize) -> ColElem {
        let mut letters: Vec<usize> = self
            .letters
            .iter()
            .map(|&a| (a - 1 + s) % self.n + 1)
            .collect();
        letters.sort_unstable();
        ColElem { n: self.n, letters }
    }
}

/// An element of one of the supported finite crystals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Row(RowElem),
    Col(ColElem),
}

impl Elem {
    pub fn row(coords: &[u32]) -> Result<Elem> {
        RowElem::new(coords.to_vec()).map(Elem::Row)
    }

    pub fn col(n: usize, letters: &[usize]) -> Result<Elem> {
        ColElem::new(n, letters.to_vec()).map(Elem::Col)
    }

    pub fn rank(&self) -> usize {
        match self {
            Elem::Row(b) => b.rank(),
            Elem::Col(b) => b.rank(),
        }
    }

    pub fn kind(&self) -> CrystalKind {
        match self {
            Elem::Row(b) => CrystalKind::Row {
                n: b.rank(),
                l: b.level(),
            },
            Elem::Col(b) => CrystalKind::Column {
                n: b.rank(),
                k: b.height(),
            },
        }
    }

    pub fn eps(&self, i: usize) -> u32 {
        match self {
            Elem::Row(b) => b.eps(i),
            Elem::Col(b) => b.eps(i),
        }
    }

    pub fn phi(&self, i: usize) -> u32 {
        match self {
            Elem::Row(b) => b.phi(i),
            Elem::Col(b) => b.phi(i),
        }
    }

    pub fn apply(&self, i: usize, dir: Dir) -> Option<Elem> {
        match self {
            Elem::Row(b) => b.apply(i, dir).map(Elem::Row),
            Elem::Col(b) => b.apply(i, dir).map(Elem::Col),
        }
    }

    /// `varepsilon(b) = sum_i eps_i(b) Lambda_i`.
    pub fn eps_weight(&self) -> DomWeight {
        DomWeight((0..self.rank()).map(|i| self.eps(i)).collect())
    }

    /// `varphi(b) = sum_i phi_i(b) Lambda_i`.
    pub fn phi_weight(&self) -> DomWeight {
        DomWeight((0..self.rank()).map(|i| self.phi(i)).collect())
    }

    pub fn content(&self) -> Vec<i64> {
        match self {
            Elem::Row(b) => b.coords().iter().map(|&x| x as i64).collect(),
            Elem::Col(b) => {
                let mut c = vec![0; b.rank()];
                for &a in b.letters() {
                    c[a - 1] = 1;
                }
                c
            }
        }
    }

    pub fn rotate(&self, s: usize) -> Elem {
        match self {
            Elem::Row(b) => Elem::Row(b.rotate(s)),
            Elem::Col(b) => Elem::Col(b.rotate(s)),
        }
    }

    /// Parses `x0,x1,...` (row) or `{a<b<...}` (column, needs `n`).
    pub fn parse(s: &str, n: usize) -> Result<Elem> {
        let s = s.trim();
        let bad = |e: &dyn fmt::Display| Error::Parse(format!("element {s:?}: {e}"));
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let letters = inner
                .split('<')
                .map(|t| t.trim().parse::<usize>().map_err(|e| bad(&e)))
                .collect::<Result<Vec<_>>>()?;
            if letters.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad(&"letters must increase"));
            }
            return Elem::col(n, &letters);
        }
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| bad(&e)))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != n {
            return Err(bad(&format!("expected {n} coordinates")));
        }
        Elem::row(&coords)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Row(b) => {
                let xs: Vec<String> = b.coords().iter().map(u32::to_string).collect();
                f.write_str(&xs.join(","))
            }
            Elem::Col(b) => {
                let xs: Vec<String> = b.letters().iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", xs.join("<"))
            }
        }
    }
}

/// One of the finite affine crystals handled here: `B^{1,l}` or `B^{k,1}` of `sl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CrystalKind {
    Row { n: usize, l: u32 },
    Column { n: usize, k: usize },
}

impl CrystalKind {
    pub fn row(n: usize, l: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if l == 0 {
            return Err(Error::InvalidElement("row crystal of level 0".into()));
        }
        Ok(CrystalKind::Row { n, l })
    }

    pub fn column(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if k == 0 || k >= n {
            return Err(Error::ColumnHeight { k, n });
        }
        Ok(CrystalKind::Column { n, k })
    }

    pub fn rank(&self) -> usize {
        match *self {
            CrystalKind::Row { n, .. } | CrystalKind::Column { n, .. } => n,
        }
    }

    pub fn level(&self) -> u32 {
        match *self {
            CrystalKind::Row { l, .. } => l,
            CrystalKind::Column { .. } => 1,
        }
    }

    /// All elements, sorted.
    pub fn elements(&self) -> Vec<Elem> {
        match *self {
            CrystalKind::Row { n, l } => compositions(l, n)
                .into_iter()
                .map(|coords| Elem::Row(RowElem { coords }))
                .collect(),
            CrystalKind::Column { n, k } => subsets(n, k)
                .into_iter()
                .map(|letters| Elem::Col(ColElem { n, letters }))
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, b: &Elem) -> bool {
        b.kind() == *self
    }

    /// The classical highest-weight element (all letters as small as possible).
    pub fn highest(&self) -> Elem {
        match *self {
            CrystalKind::Row { n, l } => {
                let mut coords = vec![0; n];
                coords[0] = l;
                Elem::Row(RowElem { coords })
            }
            CrystalKind::Column { n, k } => Elem::Col(ColElem {
                n,
                letters: (1..=k).collect(),
            }),
        }
    }

    /// The unique `b` with `varphi(b) = lambda`.
    pub fn ground_element(&self, lambda: &DomWeight) -> Result<Elem> {
        let mut hits = self
            .elements()
            .into_iter()
            .filter(|b| &b.phi_weight() == lambda);
        match (hits.next(), hits.next()) {
            (Some(b), None) => Ok(b),
            (None, _) => Err(Error::Perfectness(format!(
                "no element of {self} has phi = [{lambda}]"
            ))),
            (Some(_), Some(_)) => Err(Error::Perfectness(format!(
                "several elements of {self} have phi = [{lambda}]"
            ))),
        }
    }
}

impl fmt::Display for CrystalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalKind::Row { n, l } => write!(f, "B^{{1,{l}}}(n={n})"),
            CrystalKind::Column { n, k } => write!(f, "B^{{{k},1}}(n={n})"),
        }
    }
}

/// Compositions of `total` into `parts` nonnegative parts, lexicographically.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            rec(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=n {
            cur.push(a);
            rec(a + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(x: &[u32]) -> Elem {
        Elem::row(x).unwrap()
    }

    fn col(n: usize, s: &[usize]) -> Elem {
        Elem::col(n, s).unwrap()
    }

    #[test]
    fn row_operators() {
        assert_eq!(row(&[1, 1, 0]).apply(1, Dir::Lower), Some(row(&[0, 2, 0])));
        assert_eq!(row(&[0, 0, 2]).apply(0, Dir::Lower), Some(row(&[1, 0, 1])));
        assert_eq!(row(&[0, 0, 2]).apply(1, Dir::Lower), None);
        assert_eq!(row(&[1, 0, 1]).apply(0, Dir::Raise), Some(row(&[0, 0, 2])));
    }

    #[test]
    fn column_operators() {
        assert_eq!(col(4, &[1, 3]).apply(1, Dir::Lower), Some(col(4, &[2, 3])));
        assert_eq!(col(4, &[2, 4]).apply(0, Dir::Lower), Some(col(4, &[1, 2])));
        assert_eq!(col(4, &[2, 3]).apply(2, Dir::Lower), None);
        assert_eq!(col(4, &[1, 2]).apply(0, Dir::Raise), Some(col(4, &[2, 4])));
    }

    #[test]
    fn string_lengths() {
        let b = row(&[1, 1]);
        assert_eq!((b.eps(1), b.phi(1)), (1, 1));
        let top = row(&[3, 0, 0, 0]);
        assert_eq!(top.phi(1), 3);
        let mut cur = top.clone();
        for _ in 0..3 {
            cur = cur.apply(1, Dir::Lower).unwrap();
        }
        assert_eq!(cur.apply(1, Dir::Lower), None);
    }

    #[test]
    fn sizes() {
        assert_eq!(CrystalKind::row(3, 2).unwrap().size(), 6);
        assert_eq!(CrystalKind::row(4, 3).unwrap().size(), 20);
        assert_eq!(CrystalKind::column(5, 2).unwrap().size(), 10);
        assert!(CrystalKind::column(3, 3).is_err());
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(row(&[2, 0, 0]).rotate(1), row(&[0, 2, 0]));
        assert_eq!(col(4, &[3, 4]).rotate(1), col(4, &[1, 4]));
        assert_eq!(
            DomWeight::fundamental(3, 0, 2).rotate(1),
            DomWeight::fundamental(3, 1, 2)
        );
    }

    #[test]
    fn rotation_intertwines_operators() {
        for kind in [
            CrystalKind::row(3, 2).unwrap(),
            CrystalKind::column(4, 2).unwrap(),
        ] {
            let n = kind.rank();
            for b in kind.elements() {
                for s in 0..n {
                    for i in 0..n {
                        for dir in [Dir::Raise, Dir::Lower] {
                            assert_eq!(
                                b.apply(i, dir).map(|x| x.rotate(s)),
                                b.rotate(s).apply(i + s, dir)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn encodings() {
        assert_eq!(row(&[0, 1, 2]).to_string(), "0,1,2");
        assert_eq!(col(4, &[1, 3]).to_string(), "{1<3}");
        assert_eq!(Elem::parse("{1<3}", 4).unwrap(), col(4, &[1, 3]));
        assert_eq!(Elem::parse("0,1,2", 3).unwrap(), row(&[0, 1, 2]));
        assert!(Elem::parse("{3<1}", 4).is_err());
        assert!(Elem::parse("1,2", 3).is_err());
    }

    #[test]
    fn ground_elements() {
        let b = CrystalKind::row(3, 2).unwrap();
        assert_eq!(
            b.ground_element(&DomWeight::fundamental(3, 0, 2)).unwrap(),
            row(&[0, 0, 2])
        );
        let c = CrystalKind::column(4, 2).unwrap();
        assert_eq!(
            c.ground_element(&DomWeight::fundamental(4, 0, 1)).unwrap(),
            col(4, &[3, 4])
        );
        assert!(b.ground_element(&DomWeight::fundamental(3, 0, 1)).is_err());
    }
}
