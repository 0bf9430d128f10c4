//! Kirillov-Reshetikhin type crystals `B^{1,l}` and `B^{k,1}` of affine
//! `sl_n`, tensor products under the signature rule, truncated paths, and
//! closure under Kashiwara operators.

mod elem;
mod graph;
mod tensor;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;

pub use elem::{ClWeight, ColElem, CrystalKind, Dir, DomWeight, Elem, RowElem};
pub use graph::{crystal_closure, CrystalGraph, CrystalNode, DEFAULT_NODE_CAP};
pub use tensor::{reduce_signature, PathWeight, Signature, Tensor, TruncatedPath};

/// Paths with every e~_i (`i != 0`) vanishing.
pub fn classical_highest<'a>(
    paths: impl IntoIterator<Item = &'a TruncatedPath>,
) -> Vec<&'a TruncatedPath> {
    paths
        .into_iter()
        .filter(|p| p.is_classically_highest())
        .collect()
}

/// Computable consequences of perfectness at level `l` (necessary conditions,
/// not the full definition).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub kind: CrystalKind,
    pub level: u32,
    /// `b -> varphi(b)` is a bijection from `{b : <varphi(b), c> = l}` onto level-`l` dominant weights.
    pub phi_bijective: bool,
    /// Same for `varepsilon`.
    pub eps_bijective: bool,
    /// `<varepsilon(b), c> >= l` for every `b`.
    pub eps_level_bound: bool,
    /// `B (x) B` is connected under all `e~_i`, `f~_i`.
    pub tensor_square_connected: bool,
}

impl PerfectnessReport {
    pub fn holds(&self) -> bool {
        self.phi_bijective
            && self.eps_bijective
            && self.eps_level_bound
            && self.tensor_square_connected
    }
}

pub fn perfectness_witnesses(kind: CrystalKind) -> Result<PerfectnessReport> {
    let level = kind.level();
    let n = kind.rank();
    let elements = kind.elements();
    let targets: BTreeSet<DomWeight> = DomWeight::all_of_level(n, level).into_iter().collect();
    let bijective = |f: &dyn Fn(&Elem) -> DomWeight| {
        let images: Vec<DomWeight> = elements
            .iter()
            .map(f)
            .filter(|w| w.level() == level)
            .collect();
        let distinct: BTreeSet<DomWeight> = images.iter().cloned().collect();
        distinct.len() == images.len() && distinct == targets
    };
    let phi_bijective = bijective(&Elem::phi_weight);
    let eps_bijective = bijective(&Elem::eps_weight);
    let eps_level_bound = elements.iter().all(|b| b.eps_weight().level() >= level);

    let ops: Vec<(usize, Dir)> = (0..n)
        .flat_map(|i| [(i, Dir::Raise), (i, Dir::Lower)])
        .collect();
    let anchor = Tensor(vec![kind.highest(), kind.highest()]);
    let square = crystal_closure([anchor], &ops, DEFAULT_NODE_CAP)?;
    let tensor_square_connected = square.len() == elements.len() * elements.len();

    Ok(PerfectnessReport {
        kind,
        level,
        phi_bijective,
        eps_bijective,
        eps_level_bound,
        tensor_square_connected,
    })
}
