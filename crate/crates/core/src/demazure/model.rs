use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::setup::DemazureSetup;
use crate::crystal::{CrystalGraph, Dir, Elem, TruncatedPath};
use crate::error::{Error, Result};
use crate::weyl::Word;

/// A set of truncated paths reached from a seed by lowering closures, with
/// the number of `f~_c` steps (for one fixed color `c`) needed to reach each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalSubset {
    degrees: BTreeMap<TruncatedPath, i64>,
    traversed: BTreeSet<(TruncatedPath, TruncatedPath, usize)>,
    graded_color: usize,
}

impl CrystalSubset {
    pub fn paths(&self) -> impl Iterator<Item = &TruncatedPath> {
        self.degrees.keys()
    }

    pub fn path_set(&self) -> BTreeSet<TruncatedPath> {
        self.degrees.keys().cloned().collect()
    }

    pub fn degrees(&self) -> &BTreeMap<TruncatedPath, i64> {
        &self.degrees
    }

    pub fn degree(&self, p: &TruncatedPath) -> Option<i64> {
        self.degrees.get(p).copied()
    }

    pub fn graded_color(&self) -> usize {
        self.graded_color
    }

    /// Edges used while building the closure.
    pub fn traversed(&self) -> &BTreeSet<(TruncatedPath, TruncatedPath, usize)> {
        &self.traversed
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn contains(&self, p: &TruncatedPath) -> bool {
        self.degrees.contains_key(p)
    }

    /// All `f~_i` edges between members.
    pub fn graph(&self) -> CrystalGraph<TruncatedPath> {
        CrystalGraph::induced(self.degrees.keys().cloned())
    }

    /// True when every `e~_i` maps the set into itself (or to zero).
    pub fn is_raise_closed(&self) -> bool {
        self.degrees.keys().all(|p| {
            (0..p.rank()).all(|i| match p.apply(i, Dir::Raise) {
                Ok(Some(q)) => self.contains(&q),
                Ok(None) => true,
                Err(_) => false,
            })
        })
    }

    /// Relabels every path through `rotate(s)`; degrees are kept.
    pub fn rotate(&self, s: usize) -> CrystalSubset {
        let n = self.degrees.keys().next().map_or(1, TruncatedPath::rank);
        CrystalSubset {
            degrees: self
                .degrees
                .iter()
                .map(|(p, &d)| (p.rotate(s), d))
                .collect(),
            traversed: self
                .traversed
                .iter()
                .map(|(a, b, i)| (a.rotate(s), b.rotate(s), (i + s) % n))
                .collect(),
            graded_color: (self.graded_color + s) % n,
        }
    }
}

/// `{start}` closed under `f~_i` for each letter of `word`, rightmost first.
/// Degrees count the `f~_{graded_color}` steps; a path reached with two
/// different counts is reported as a conflict.
pub fn demazure_closure(
    start: TruncatedPath,
    word: &Word,
    graded_color: usize,
    cap: usize,
) -> Result<CrystalSubset> {
    let mut degrees = BTreeMap::from([(start, 0i64)]);
    let mut traversed = BTreeSet::new();
    for i in word.action_order() {
        let mut queue: VecDeque<TruncatedPath> = degrees.keys().cloned().collect();
        while let Some(x) = queue.pop_front() {
            let Some(y) = x.apply(i, Dir::Lower)? else {
                continue;
            };
            let deg = degrees[&x] + i64::from(i == graded_color);
            match degrees.get(&y) {
                Some(&old) if old != deg => {
                    return Err(Error::Conflict(format!(
                        "[{y}] reached with degrees {old} and {deg}"
                    )));
                }
                Some(_) => {}
                None => {
                    degrees.insert(y.clone(), deg);
                    if degrees.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    queue.push_back(y.clone());
                }
            }
            traversed.insert((x, y, i));
        }
    }
    Ok(CrystalSubset {
        degrees,
        traversed,
        graded_color,
    })
}

/// `B_w(lambda)` inside paths of length `big_j`, graded by `f~_0` steps.
pub fn demazure_paths(
    setup: &DemazureSetup,
    word: &Word,
    big_j: usize,
    cap: usize,
) -> Result<CrystalSubset> {
    let needed = word.len().div_ceil(setup.d());
    if big_j < needed {
        return Err(Error::Unsupported(format!(
            "truncation {big_j} is shorter than the {needed} positions a word of length {} can reach",
            word.len()
        )));
    }
    demazure_closure(setup.ground_state(big_j)?, word, 0, cap)
}

/// Cartesian product of factor sets, leftmost factor first.
pub(crate) fn product_paths(
    head: &crate::crystal::DomWeight,
    factors: &[Vec<Elem>],
    cap: usize,
) -> Result<BTreeSet<TruncatedPath>> {
    let total = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.len()));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::CapExceeded(cap));
    }
    let mut bodies: Vec<Vec<Elem>> = vec![Vec::new()];
    for f in factors {
        bodies = bodies
            .into_iter()
            .flat_map(|body| {
                f.iter().map(move |b| {
                    let mut next = body.clone();
                    next.push(b.clone());
                    next
                })
            })
            .collect();
    }
    bodies
        .into_iter()
        .map(|body| TruncatedPath::new(head.clone(), body))
        .collect()
}

/// The product `u_{lambda_J} (x) bbar_J (x) ... (x) bbar_{j+1} (x) B^{(j)}_a (x) B^{(x)(j-1)}`
/// for `steps = (j-1)d + a`, padded with frozen ground elements to length `big_j`.
pub fn demazure_model(
    setup: &DemazureSetup,
    steps: usize,
    big_j: usize,
    cap: usize,
) -> Result<BTreeSet<TruncatedPath>> {
    if steps == 0 {
        return Ok(BTreeSet::from([setup.ground_state(big_j)?]));
    }
    let (j, a) = setup.block_of(steps);
    if big_j < j {
        return Err(Error::Unsupported(format!(
            "truncation {big_j} is shorter than block {j}"
        )));
    }
    let (ground, weights) = setup.ground_data(big_j)?;
    let everything = setup.kind().elements();
    let mut factors: Vec<Vec<Elem>> = Vec::with_capacity(big_j);
    for pos in (1..=big_j).rev() {
        let f = match pos.cmp(&j) {
            std::cmp::Ordering::Greater => vec![ground[pos - 1].clone()],
            std::cmp::Ordering::Equal => setup.build_bja(j, a)?.into_iter().collect(),
            std::cmp::Ordering::Less => everything.clone(),
        };
        factors.push(f);
    }
    product_paths(&weights[big_j], &factors, cap)
}

/// Drops the frozen factors next to the head, keeping the `keep` rightmost
/// positions. Fails unless the dropped factors are the ground elements.
pub fn strip_frozen(
    setup: &DemazureSetup,
    p: &TruncatedPath,
    keep: usize,
) -> Result<TruncatedPath> {
    let (ground, weights) = setup.ground_data(p.len())?;
    if p.head != weights[p.len()] || keep > p.len() {
        return Err(Error::Unsupported(format!(
            "[{p}] does not come from {setup}"
        )));
    }
    for pos in keep + 1..=p.len() {
        if p.factor(pos) != &ground[pos - 1] {
            return Err(Error::Unsupported(format!(
                "position {pos} of [{p}] is not frozen"
            )));
        }
    }
    TruncatedPath::new(weights[keep].clone(), p.body[p.len() - keep..].to_vec())
}

/// Closure-versus-product comparison for one `w^{(K)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub steps: usize,
    pub truncation: usize,
    pub word: String,
    pub closure_size: usize,
    pub model_size: usize,
    pub sets_equal: bool,
    pub edges_equal: bool,
    /// Every edge used by the closure is an edge of the model graph.
    pub traversed_in_model: bool,
    pub raise_closed: bool,
    /// Up to ten paths in the model but not in the closure.
    pub missing: Vec<String>,
    /// Up to ten paths in the closure but not in the model.
    pub extra: Vec<String>,
    pub passed: bool,
}

/// Compares `B_{w^{(K)}}(lambda)` with its product model, as node sets and as
/// colored graphs.
pub fn verify_iso(
    setup: &DemazureSetup,
    steps: usize,
    truncation: Option<usize>,
    cap: usize,
) -> Result<IsoReport> {
    let big_j = truncation.unwrap_or_else(|| setup.default_truncation(steps));
    let word = setup.word(steps)?;
    let closure = demazure_paths(setup, &word, big_j, cap)?;
    let model = demazure_model(setup, steps, big_j, cap)?;
    let closure_set = closure.path_set();
    let closure_graph = closure.graph();
    let model_graph = CrystalGraph::induced(model.iter().cloned());
    let model_edges = model_graph.edge_set();
    let sample = |a: &BTreeSet<TruncatedPath>, b: &BTreeSet<TruncatedPath>| -> Vec<String> {
        a.difference(b)
            .take(10)
            .map(TruncatedPath::to_string)
            .collect()
    };
    let sets_equal = closure_set == model;
    let edges_equal = closure_graph.edge_set() == model_edges;
    let traversed_in_model = closure.traversed().iter().all(|e| model_edges.contains(e));
    let raise_closed = closure.is_raise_closed();
    Ok(IsoReport {
        steps,
        truncation: big_j,
        word: word.to_string(),
        closure_size: closure.len(),
        model_size: model.len(),
        sets_equal,
        edges_equal,
        traversed_in_model,
        raise_closed,
        missing: sample(&model, &closure_set),
        extra: sample(&closure_set, &model),
        passed: sets_equal && edges_equal && traversed_in_model && raise_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_NODE_CAP;

    #[test]
    fn empty_word_gives_ground_state() {
        let s = DemazureSetup::row(3, 2).unwrap();
        let c = demazure_paths(&s, &Word::empty(3), 2, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(c.path_set(), BTreeSet::from([s.ground_state(2).unwrap()]));
        assert_eq!(c.degree(&s.ground_state(2).unwrap()), Some(0));
    }

    #[test]
    fn small_closures() {
        let s = DemazureSetup::row(2, 1).unwrap();
        let c = demazure_paths(&s, &Word::parse("0 1 0", 2).unwrap(), 4, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(c.len(), 8);
        let s = DemazureSetup::row(3, 2).unwrap();
        let c = demazure_paths(&s, &s.word(1).unwrap(), 2, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(c.len(), 3);
        let degrees: BTreeSet<i64> = c.degrees().values().copied().collect();
        assert_eq!(degrees, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn short_truncation_is_rejected() {
        let s = DemazureSetup::row(2, 1).unwrap();
        let word = s.word(3).unwrap();
        assert!(demazure_paths(&s, &word, 2, DEFAULT_NODE_CAP).is_err());
        assert_eq!(
            demazure_paths(&s, &word, 3, DEFAULT_NODE_CAP)
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn model_sizes() {
        let s = DemazureSetup::row(2, 1).unwrap();
        assert_eq!(demazure_model(&s, 3, 4, DEFAULT_NODE_CAP).unwrap().len(), 8);
        let s = DemazureSetup::row(3, 2).unwrap();
        assert_eq!(demazure_model(&s, 1, 2, DEFAULT_NODE_CAP).unwrap().len(), 3);
        assert_eq!(
            demazure_model(&s, 4, 3, DEFAULT_NODE_CAP).unwrap().len(),
            36
        );
    }

    #[test]
    fn iso_small() {
        let s = DemazureSetup::row(2, 1).unwrap();
        for k in 0..=4 {
            let r = verify_iso(&s, k, None, DEFAULT_NODE_CAP).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn strip_keeps_the_tail() {
        let s = DemazureSetup::row(2, 1).unwrap();
        let g = s.ground_state(3).unwrap();
        assert_eq!(strip_frozen(&s, &g, 1).unwrap(), s.ground_state(1).unwrap());
        let moved = g.apply(0, Dir::Lower).unwrap().unwrap();
        assert_eq!(strip_frozen(&s, &moved, 1).unwrap().len(), 1);
        assert!(strip_frozen(&s, &moved, 0).is_err());
    }
}
