//! Combinatorial R-matrix and energy functions.
//!
//! Both are built by propagation from the anchor `u_{B1} (x) u_{B2}` (the
//! tensor of classical highest elements) along Kashiwara edges of every color.
//! Propagation doubles as a uniqueness check: any disagreement is reported as
//! [`Error::Conflict`] instead of being resolved silently.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde_json::json;

use crate::crystal::{CrystalKind, Dir, Elem, Tensor, TruncatedPath};
use crate::error::{Error, Result};

type Pair = (Elem, Elem);

fn tensor(p: &Pair) -> Tensor {
    Tensor(vec![p.0.clone(), p.1.clone()])
}

fn untensor(t: Tensor) -> Pair {
    let mut it = t.0.into_iter();
    (
        it.next().expect("two factors"),
        it.next().expect("two factors"),
    )
}

fn step(p: &Pair, i: usize, dir: Dir) -> Option<Pair> {
    tensor(p).apply(i, dir).map(untensor)
}

fn pair_key(p: &Pair) -> String {
    format!("{} | {}", p.0, p.1)
}

/// The crystal isomorphism `B1 (x) B2 -> B2 (x) B1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMap {
    left: CrystalKind,
    right: CrystalKind,
    table: BTreeMap<Pair, Pair>,
}

impl RMap {
    pub fn left(&self) -> CrystalKind {
        self.left
    }

    pub fn right(&self) -> CrystalKind {
        self.right
    }

    pub fn get(&self, a: &Elem, b: &Elem) -> Option<&Pair> {
        self.table.get(&(a.clone(), b.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pair, &Pair)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, String> = self
            .table
            .iter()
            .map(|(k, v)| (pair_key(k), pair_key(v)))
            .collect();
        json!({ "left": self.left, "right": self.right, "map": map })
    }
}

/// Builds R by sending the anchor to `u_{B2} (x) u_{B1}` and pushing images
/// along e~_i and f~_i for every `i`.
pub fn combinatorial_r(left: CrystalKind, right: CrystalKind) -> Result<RMap> {
    let n = left.rank();
    if right.rank() != n {
        return Err(Error::Unsupported(format!(
            "{left} and {right} have different ranks"
        )));
    }
    let anchor = (left.highest(), right.highest());
    let image = (right.highest(), left.highest());
    let mut table = BTreeMap::new();
    table.insert(anchor.clone(), image);
    let mut queue = VecDeque::from([anchor]);
    while let Some(x) = queue.pop_front() {
        let y = table[&x].clone();
        for i in 0..n {
            for dir in [Dir::Raise, Dir::Lower] {
                match (step(&x, i, dir), step(&y, i, dir)) {
                    (None, None) => {}
                    (Some(x2), Some(y2)) => match table.get(&x2) {
                        Some(seen) if *seen != y2 => {
                            return Err(Error::Conflict(format!(
                                "R({}) is both [{}] and [{}]",
                                pair_key(&x2),
                                pair_key(seen),
                                pair_key(&y2)
                            )))
                        }
                        Some(_) => {}
                        None => {
                            table.insert(x2.clone(), y2);
                            queue.push_back(x2);
                        }
                    },
                    _ => {
                        return Err(Error::Conflict(format!(
                            "operator ({i}, {dir:?}) is defined on only one side of [{}] -> [{}]",
                            pair_key(&x),
                            pair_key(&y)
                        )))
                    }
                }
            }
        }
    }
    if table.len() != left.size() * right.size() {
        return Err(Error::Disconnected(format!("{left} (x) {right}")));
    }
    Ok(RMap { left, right, table })
}

/// Local energy `H` on `B1 (x) B2`, normalized by `H(anchor) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyTable {
    left: CrystalKind,
    right: CrystalKind,
    anchor: Pair,
    values: BTreeMap<Pair, i64>,
}

impl EnergyTable {
    pub fn anchor(&self) -> &Pair {
        &self.anchor
    }

    pub fn get(&self, a: &Elem, b: &Elem) -> Option<i64> {
        self.values.get(&(a.clone(), b.clone())).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pair, i64)> {
        self.values.iter().map(|(k, &v)| (k, v))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, i64> =
            self.values.iter().map(|(k, &v)| (pair_key(k), v)).collect();
        json!({ "left": self.left, "right": self.right, "anchor": pair_key(&self.anchor), "values": map })
    }
}

/// Change of `H` along `x -> e~_i x`: `+1` when `i = 0` and e~_0 acts on the
/// left factor of both `x` and `R(x)`, `-1` when on the right factor of both,
/// `0` otherwise.
fn local_step(r: &RMap, x: &Pair, i: usize) -> i64 {
    if i != 0 {
        return 0;
    }
    let y = &r.table[x];
    match (
        tensor(x).acting_factor(0, Dir::Raise),
        tensor(y).acting_factor(0, Dir::Raise),
    ) {
        (Some(0), Some(0)) => 1,
        (Some(1), Some(1)) => -1,
        _ => 0,
    }
}

/// Propagates the local energy rule from the anchor over the whole tensor.
pub fn energy_table(r: &RMap) -> Result<EnergyTable> {
    let n = r.left.rank();
    let anchor = (r.left.highest(), r.right.highest());
    let mut values = BTreeMap::from([(anchor.clone(), 0i64)]);
    let mut queue = VecDeque::from([anchor.clone()]);
    while let Some(x) = queue.pop_front() {
        let h = values[&x];
        for i in 0..n {
            for dir in [Dir::Raise, Dir::Lower] {
                let Some(x2) = step(&x, i, dir) else { continue };
                let h2 = match dir {
                    Dir::Raise => h + local_step(r, &x, i),
                    Dir::Lower => h - local_step(r, &x2, i),
                };
                match values.get(&x2) {
                    Some(&seen) if seen != h2 => {
                        return Err(Error::Conflict(format!(
                            "H({}) is both {seen} and {h2}",
                            pair_key(&x2)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        values.insert(x2.clone(), h2);
                        queue.push_back(x2);
                    }
                }
            }
        }
    }
    if values.len() != r.len() {
        return Err(Error::Disconnected(format!("{} (x) {}", r.left, r.right)));
    }
    let table = EnergyTable {
        left: r.left,
        right: r.right,
        anchor,
        values,
    };
    verify_local_rule(r, &table)?;
    Ok(table)
}

/// Re-checks the local rule on every e~_i edge of the table.
pub fn verify_local_rule(r: &RMap, h: &EnergyTable) -> Result<()> {
    for (x, &hx) in &h.values {
        for i in 0..r.left.rank() {
            if let Some(x2) = step(x, i, Dir::Raise) {
                let expected = hx + local_step(r, x, i);
                if h.values[&x2] != expected {
                    return Err(Error::Conflict(format!(
                        "local rule fails on {} with color {i}",
                        pair_key(x)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// R-matrices and energy tables for every ordered pair of a set of crystals.
#[derive(Clone, Debug, Default)]
pub struct EnergyBook {
    entries: HashMap<(CrystalKind, CrystalKind), (RMap, EnergyTable)>,
}

impl EnergyBook {
    pub fn for_kinds(kinds: &[CrystalKind]) -> Result<Self> {
        let mut book = EnergyBook::default();
        for &a in kinds {
            for &b in kinds {
                book.ensure(a, b)?;
            }
        }
        Ok(book)
    }

    pub fn ensure(&mut self, left: CrystalKind, right: CrystalKind) -> Result<()> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.entries.entry((left, right)) {
            let r = combinatorial_r(left, right)?;
            let h = energy_table(&r)?;
            e.insert((r, h));
        }
        Ok(())
    }

    fn entry(&self, left: CrystalKind, right: CrystalKind) -> Result<&(RMap, EnergyTable)> {
        self.entries.get(&(left, right)).ok_or_else(|| {
            Error::Unsupported(format!("no R-matrix prepared for {left} (x) {right}"))
        })
    }

    pub fn r_map(&self, left: CrystalKind, right: CrystalKind) -> Result<&RMap> {
        Ok(&self.entry(left, right)?.0)
    }

    pub fn table(&self, left: CrystalKind, right: CrystalKind) -> Result<&EnergyTable> {
        Ok(&self.entry(left, right)?.1)
    }

    /// `H(a (x) b)`.
    pub fn h(&self, a: &Elem, b: &Elem) -> Result<i64> {
        let table = self.table(a.kind(), b.kind())?;
        table
            .get(a, b)
            .ok_or_else(|| Error::InvalidElement(format!("{a} | {b} is not in the energy table")))
    }

    /// `R(a (x) b)`.
    pub fn r(&self, a: &Elem, b: &Elem) -> Result<Pair> {
        let map = self.r_map(a.kind(), b.kind())?;
        map.get(a, b)
            .cloned()
            .ok_or_else(|| Error::InvalidElement(format!("{a} | {b} is not in the R-matrix")))
    }
}

/// Energy of a homogeneous path relative to a ground-state path of the same
/// shape: `sum_{j=1}^{J} j * [H(p(j+1) (x) p(j)) - H(g(j+1) (x) g(j))]`, where
/// position `J+1` of both is the ground element attached to the shared head.
pub fn homogeneous_energy(
    book: &EnergyBook,
    p: &TruncatedPath,
    ground: &TruncatedPath,
) -> Result<i64> {
    if p.head != ground.head || p.len() != ground.len() {
        return Err(Error::Unsupported(format!(
            "path [{p}] and ground [{ground}] differ in shape"
        )));
    }
    let Some(first) = ground.body.first() else {
        return Ok(0);
    };
    let next = first.kind().ground_element(&p.head)?;
    let big_j = p.len();
    let mut total = 0;
    for j in 1..=big_j {
        let (pa, ga) = if j == big_j {
            (&next, &next)
        } else {
            (p.factor(j + 1), ground.factor(j + 1))
        };
        let term = book.h(pa, p.factor(j))? - book.h(ga, ground.factor(j))?;
        total += j as i64 * term;
    }
    Ok(total)
}

/// `table[j][i] = b_j^{(i)}` (0-based, `i <= j`): `b_j` carried leftwards to
/// position `i` through the R-matrices, with
/// `R(b_i (x) b_j^{(i+1)}) = b_j^{(i)} (x) b_i'`.
pub fn promoted_factors(book: &EnergyBook, body: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let mut table = Vec::with_capacity(body.len());
    for (j, bj) in body.iter().enumerate() {
        let mut row = vec![bj.clone(); j + 1];
        for i in (0..j).rev() {
            row[i] = book.r(&body[i], &row[i + 1])?.0;
        }
        table.push(row);
    }
    Ok(table)
}

/// Per-position energies `E^{(j)} = sum_{i<j} H(b_i (x) b_j^{(i+1)})`, in body order.
pub fn energy_terms(book: &EnergyBook, body: &[Elem]) -> Result<Vec<i64>> {
    let table = promoted_factors(book, body)?;
    (0..body.len())
        .map(|j| {
            (0..j)
                .map(|i| book.h(&body[i], &table[j][i + 1]))
                .sum::<Result<i64>>()
        })
        .collect()
}

/// `E(p) = sum_j E^{(j)}(p)` for `p = u (x) b_1 (x) ... (x) b_m`.
pub fn inhomogeneous_energy(book: &EnergyBook, p: &TruncatedPath) -> Result<i64> {
    Ok(energy_terms(book, &p.body)?.into_iter().sum())
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
    fn r_on_equal_crystals_is_identity() {
        for kind in [
            CrystalKind::row(3, 2).unwrap(),
            CrystalKind::column(4, 2).unwrap(),
        ] {
            let r = combinatorial_r(kind, kind).unwrap();
            assert!(r.iter().all(|(x, y)| x == y));
        }
    }

    #[test]
    fn r_anchor_and_inverse() {
        let b1 = CrystalKind::row(3, 1).unwrap();
        let b2 = CrystalKind::column(3, 2).unwrap();
        let r12 = combinatorial_r(b1, b2).unwrap();
        let r21 = combinatorial_r(b2, b1).unwrap();
        assert_eq!(
            r12.get(&row(&[1, 0, 0]), &col(3, &[1, 2])).unwrap(),
            &(col(3, &[1, 2]), row(&[1, 0, 0]))
        );
        assert_eq!(r12.len(), 9);
        for (x, y) in r12.iter() {
            assert_eq!(r21.get(&y.0, &y.1).unwrap(), x);
        }
    }

    #[test]
    fn energy_on_two_letters() {
        let b = CrystalKind::row(2, 1).unwrap();
        let h = energy_table(&combinatorial_r(b, b).unwrap()).unwrap();
        let (a, z) = (row(&[1, 0]), row(&[0, 1]));
        assert_eq!(h.get(&a, &a), Some(0));
        assert_eq!(h.get(&z, &a), Some(0));
        assert_eq!(h.get(&z, &z), Some(0));
        assert_eq!(h.get(&a, &z), Some(-1));
    }

    #[test]
    fn energy_is_deterministic() {
        let b1 = CrystalKind::column(4, 3).unwrap();
        let b2 = CrystalKind::column(4, 1).unwrap();
        let r = combinatorial_r(b1, b2).unwrap();
        assert_eq!(
            energy_table(&r).unwrap(),
            energy_table(&combinatorial_r(b1, b2).unwrap()).unwrap()
        );
        assert_eq!(r, combinatorial_r(b1, b2).unwrap());
    }

    #[test]
    fn promotion_table_small_cases() {
        let b = CrystalKind::row(3, 2).unwrap();
        let book = EnergyBook::for_kinds(&[b]).unwrap();
        let body = vec![row(&[2, 0, 0])];
        assert_eq!(
            promoted_factors(&book, &body).unwrap(),
            vec![vec![row(&[2, 0, 0])]]
        );
        assert_eq!(
            inhomogeneous_energy(
                &book,
                &TruncatedPath {
                    head: crate::crystal::DomWeight::fundamental(3, 0, 2),
                    body
                }
            )
            .unwrap(),
            0
        );

        // Homogeneous: R is the identity, so b_j^{(i)} = b_i for i < j.
        let body = vec![row(&[2, 0, 0]), row(&[0, 1, 1]), row(&[1, 0, 1])];
        let t = promoted_factors(&book, &body).unwrap();
        for j in 0..3 {
            assert_eq!(t[j][j], body[j]);
            for i in 0..j {
                assert_eq!(t[j][i], body[i]);
            }
        }
    }

    #[test]
    fn two_factor_inhomogeneous_energy_is_h() {
        let b = CrystalKind::row(2, 1).unwrap();
        let book = EnergyBook::for_kinds(&[b]).unwrap();
        for x in b.elements() {
            for y in b.elements() {
                let p = TruncatedPath {
                    head: crate::crystal::DomWeight::fundamental(2, 0, 1),
                    body: vec![x.clone(), y.clone()],
                };
                assert_eq!(
                    inhomogeneous_energy(&book, &p).unwrap(),
                    book.h(&x, &y).unwrap()
                );
            }
        }
    }

    #[test]
    fn json_export() {
        let b = CrystalKind::row(2, 1).unwrap();
        let r = combinatorial_r(b, b).unwrap();
        let h = energy_table(&r).unwrap();
        let v = h.to_json();
        assert_eq!(v["values"]["1,0 | 0,1"], -1);
        assert_eq!(r.to_json()["map"]["0,1 | 1,0"], "0,1 | 1,0");
    }
}
