use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::crystal::{
    crystal_closure, perfectness_witnesses, CrystalKind, Dir, DomWeight, Elem, PerfectnessReport,
    TruncatedPath, DEFAULT_NODE_CAP,
};
use crate::error::{Error, Result};
use crate::weyl::{is_increasing_chain, word_r, word_wk, Word};

/// How step `(j, a)` picks its simple reflection `i^{(j)}_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Scheme {
    /// `i^{(j)}_a = a - j` (rows, `d = n - 1`).
    Sliding,
    /// Block `j` is `R^{(k)}_{-k(j-1)}` read right to left (`d = k(n-k)`).
    Rectangular { k: usize },
    /// Step `s` uses `letters[s-1]`; only steps up to `letters.len()` exist.
    Explicit { letters: Vec<usize> },
}

/// A highest weight `lambda = l Lambda_0`, a perfect crystal `B` of level
/// `l`, and the reflection scheme producing the words `w^{(K)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemazureSetup {
    kind: CrystalKind,
    lambda: DomWeight,
    d: usize,
    scheme: Scheme,
}

impl DemazureSetup {
    /// `B^{1,l}` with `lambda = l Lambda_0`.
    pub fn row(n: usize, l: u32) -> Result<Self> {
        let kind = CrystalKind::row(n, l)?;
        Ok(DemazureSetup {
            kind,
            lambda: DomWeight::fundamental(n, 0, l),
            d: n - 1,
            scheme: Scheme::Sliding,
        })
    }

    /// `B^{k,1}` with `lambda = Lambda_0`.
    pub fn column(n: usize, k: usize) -> Result<Self> {
        let kind = CrystalKind::column(n, k)?;
        Ok(DemazureSetup {
            kind,
            lambda: DomWeight::fundamental(n, 0, 1),
            d: k * (n - k),
            scheme: Scheme::Rectangular { k },
        })
    }

    /// Replaces the scheme with explicit letters (step `s` uses `letters[s-1]`).
    pub fn with_letters(mut self, letters: Vec<usize>) -> Self {
        self.scheme = Scheme::Explicit { letters };
        self
    }

    pub fn kind(&self) -> CrystalKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn level(&self) -> u32 {
        self.kind.level()
    }

    pub fn lambda(&self) -> &DomWeight {
        &self.lambda
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    /// Column height `k` of the family (1 for rows).
    pub fn height(&self) -> usize {
        match self.kind {
            CrystalKind::Row { .. } => 1,
            CrystalKind::Column { k, .. } => k,
        }
    }

    /// `(j, a)` with `steps = (j-1)d + a`, `1 <= a <= d`.
    pub fn block_of(&self, steps: usize) -> (usize, usize) {
        let j = (steps - 1) / self.d + 1;
        (j, steps - (j - 1) * self.d)
    }

    /// `i^{(j)}_a`.
    pub fn letter(&self, j: usize, a: usize) -> Result<usize> {
        let n = self.rank();
        match &self.scheme {
            Scheme::Sliding => Ok((a + n * j - j) % n),
            Scheme::Rectangular { k } => {
                let block = word_r(*k, -((k * (j - 1)) as i64), n)?;
                Ok(block.letters()[block.len() - a])
            }
            Scheme::Explicit { letters } => letters
                .get((j - 1) * self.d + a - 1)
                .copied()
                .ok_or_else(|| {
                    Error::Unsupported(format!("explicit scheme has no step ({j}, {a})"))
                }),
        }
    }

    /// `w^{(steps)}`.
    pub fn word(&self, steps: usize) -> Result<Word> {
        // validate every step first so the closure below cannot fail
        for s in 1..=steps {
            let (j, a) = self.block_of(s);
            self.letter(j, a)?;
        }
        Ok(word_wk(self.rank(), self.d, steps, |j, a| {
            self.letter(j, a).expect("validated above")
        }))
    }

    /// Default truncation for `steps`: `ceil(steps / d) + 1`.
    pub fn default_truncation(&self, steps: usize) -> usize {
        steps.div_ceil(self.d) + 1
    }

    /// Ground elements `b_1, ..., b_J` and weights `lambda_0, ..., lambda_J`,
    /// from `b_j = b(lambda_{j-1})` and `lambda_j = varepsilon(b_j)`.
    pub fn ground_data(&self, big_j: usize) -> Result<(Vec<Elem>, Vec<DomWeight>)> {
        ground_sequence(&vec![self.kind; big_j], &self.lambda)
    }

    /// `u_{lambda_J} (x) b_J (x) ... (x) b_1`.
    pub fn ground_state(&self, big_j: usize) -> Result<TruncatedPath> {
        let (elems, weights) = self.ground_data(big_j)?;
        let body = elems.into_iter().rev().collect();
        TruncatedPath::new(weights[big_j].clone(), body)
    }

    /// `B^{(j)}_a`: `{b_j}` closed successively under `f~_{i^{(j)}_1}, ..., f~_{i^{(j)}_a}`.
    pub fn build_bja(&self, j: usize, a: usize) -> Result<BTreeSet<Elem>> {
        let (elems, _) = self.ground_data(j)?;
        let mut set: BTreeSet<Elem> = BTreeSet::from([elems[j - 1].clone()]);
        for step in 1..=a {
            let i = self.letter(j, step)?;
            set = crystal_closure(set, &[(i, Dir::Lower)], DEFAULT_NODE_CAP)?
                .nodes()
                .iter()
                .cloned()
                .collect();
        }
        Ok(set)
    }

    /// Checks the four hypotheses for `j <= depth`.
    pub fn check_conditions(&self, depth: usize) -> Result<ConditionReport> {
        let perfect = perfectness_witnesses(self.kind)?;
        let all: BTreeSet<Elem> = self.kind.elements().into_iter().collect();
        let (_, weights) = self.ground_data(depth)?;
        let mut full_fluctuation = true;
        let mut weight_bound = true;
        for (j, lambda_j) in weights.iter().enumerate().take(depth + 1).skip(1) {
            let mut prev = self.build_bja(j, 0)?;
            for a in 1..=self.d {
                let i = self.letter(j, a)?;
                let bound = lambda_j.pairing(i);
                if prev.iter().any(|b| bound > b.eps(i)) {
                    weight_bound = false;
                }
                prev = crystal_closure(prev, &[(i, Dir::Lower)], DEFAULT_NODE_CAP)?
                    .nodes()
                    .iter()
                    .cloned()
                    .collect();
            }
            if prev != all {
                full_fluctuation = false;
            }
        }
        let chain: Vec<Word> = (0..=depth * self.d)
            .map(|s| self.word(s))
            .collect::<Result<_>>()?;
        let increasing_chain = is_increasing_chain(&chain)?;
        Ok(ConditionReport {
            depth,
            perfect,
            full_fluctuation,
            weight_bound,
            increasing_chain,
            note: "perfectness is checked through necessary conditions only",
        })
    }
}

impl fmt::Display for DemazureSetup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} with lambda=[{}], d={}",
            self.kind, self.lambda, self.d
        )
    }
}

/// Ground data for a body of (possibly different) crystals listed from the
/// right end: `kinds[0]` holds `b_1`.
pub fn ground_sequence(
    kinds: &[CrystalKind],
    lambda: &DomWeight,
) -> Result<(Vec<Elem>, Vec<DomWeight>)> {
    let mut weights = vec![lambda.clone()];
    let mut elems = Vec::with_capacity(kinds.len());
    for kind in kinds {
        let b = kind.ground_element(weights.last().expect("nonempty"))?;
        weights.push(b.eps_weight());
        elems.push(b);
    }
    Ok((elems, weights))
}

/// Outcome of checking hypotheses (I)-(IV) up to a depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub depth: usize,
    /// (I), through its computable witnesses.
    pub perfect: PerfectnessReport,
    /// (II): `B^{(j)}_d = B`.
    pub full_fluctuation: bool,
    /// (III): `<lambda_j, h_i> <= eps_i(b)` on `B^{(j)}_{a-1}`.
    pub weight_bound: bool,
    /// (IV): the words `w^{(K)}` strictly increase.
    pub increasing_chain: bool,
    pub note: &'static str,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.perfect.holds() && self.full_fluctuation && self.weight_bound && self.increasing_chain
    }
}
