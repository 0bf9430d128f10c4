use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::model::{demazure_closure, demazure_paths, product_paths, strip_frozen, CrystalSubset};
use super::setup::{ground_sequence, ConditionReport, DemazureSetup};
use crate::crystal::{CrystalKind, DomWeight, Elem, TruncatedPath};
use crate::energy::{homogeneous_energy, inhomogeneous_energy, EnergyBook};
use crate::error::{Error, Result};
use crate::symfunc::{build_t_mu, kostka_foulkes, milne, Partition, QPoly, SchurExpansion};
use crate::weyl::{word_wmu, Word};

/// `sum q^{degree(p)} s_{content(p)}` over the classically highest paths.
pub fn graded_character<'a>(
    paths: impl IntoIterator<Item = (&'a TruncatedPath, i64)>,
) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for (p, degree) in paths {
        if !p.is_classically_highest() {
            continue;
        }
        let content = p.weight().content.0;
        let lambda = Partition::from_content(&content)
            .map_err(|_| Error::NonDominantHighest(content.clone()))?;
        out.add(lambda, &QPoly::q_pow(degree));
    }
    Ok(out)
}

/// Classically highest members of `u_head (x) factors[0] (x) factors[1] (x) ...`.
/// A path can only be highest if the part left of any cut is, so prefixes
/// are pruned as they grow.
pub fn highest_paths(
    head: &DomWeight,
    factors: &[Vec<Elem>],
    cap: usize,
) -> Result<Vec<TruncatedPath>> {
    let mut layer = vec![TruncatedPath::new(head.clone(), Vec::new())?];
    for f in factors {
        let mut next = Vec::new();
        for p in &layer {
            for b in f {
                let mut body = p.body.clone();
                body.push(b.clone());
                let q = TruncatedPath::new(head.clone(), body)?;
                if q.is_classically_highest() {
                    next.push(q);
                }
            }
            if next.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// `E_0 = l a (L - n(a+1)/2)` with `a = floor(L/n)`.
pub fn e0(n: usize, l: u32, big_l: usize) -> i64 {
    let (n, l, big_l) = (n as i64, i64::from(l), big_l as i64);
    let a = big_l / n;
    l * (a * big_l - n * a * (a + 1) / 2)
}

/// The rotated picture `u_{l Lambda_0} (x) B^{(x)L}` of `B_{w^{(Ld)}}(l Lambda_{kL})`.
#[derive(Clone, Debug)]
pub struct HomogeneousModel {
    setup: DemazureSetup,
    big_l: usize,
    shift: usize,
    ground: TruncatedPath,
    book: EnergyBook,
}

impl HomogeneousModel {
    pub fn new(setup: &DemazureSetup, big_l: usize) -> Result<Self> {
        let n = setup.rank();
        let shift = (setup.height() * big_l) % n;
        let ground = setup.ground_state(big_l)?.rotate(shift);
        debug_assert_eq!(ground.head, DomWeight::fundamental(n, 0, setup.level()));
        let book = EnergyBook::for_kinds(&[setup.kind()])?;
        Ok(HomogeneousModel {
            setup: setup.clone(),
            big_l,
            shift,
            ground,
            book,
        })
    }

    pub fn setup(&self) -> &DemazureSetup {
        &self.setup
    }

    /// Dynkin rotation `kL mod n` taking the theorem's head `u_{l Lambda_{-kL}}` to `u_{l Lambda_0}`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn ground(&self) -> &TruncatedPath {
        &self.ground
    }

    pub fn book(&self) -> &EnergyBook {
        &self.book
    }

    /// `D(p)`, zero on the ground state.
    pub fn energy(&self, p: &TruncatedPath) -> Result<i64> {
        homogeneous_energy(&self.book, p, &self.ground)
    }

    pub fn all_paths(&self, cap: usize) -> Result<BTreeSet<TruncatedPath>> {
        let factors = vec![self.setup.kind().elements(); self.big_l];
        product_paths(&self.ground.head, &factors, cap)
    }

    pub fn highest_paths(&self, cap: usize) -> Result<Vec<TruncatedPath>> {
        let factors = vec![self.setup.kind().elements(); self.big_l];
        highest_paths(&self.ground.head, &factors, cap)
    }

    /// Character graded by the energy `D`.
    pub fn character(&self, cap: usize) -> Result<SchurExpansion> {
        let highest = self.highest_paths(cap)?;
        let graded = highest
            .iter()
            .map(|p| Ok((p, self.energy(p)?)))
            .collect::<Result<Vec<_>>>()?;
        graded_character(graded)
    }

    /// `B_{w^{(Ld)}}` built by closure in the theorem's frame, trimmed to
    /// length `L`, rotated, and graded by counting the rotated `f~_0` steps.
    pub fn closure(&self, cap: usize) -> Result<CrystalSubset> {
        let steps = self.big_l * self.setup.d();
        let word = self.setup.word(steps)?;
        let n = self.setup.rank();
        let big_j = self.setup.default_truncation(steps);
        let start = self.setup.ground_state(big_j)?;
        let closure = demazure_closure(start, &word, (n - self.shift) % n, cap)?;
        let mut trimmed = BTreeMap::new();
        for (p, &deg) in closure.degrees() {
            trimmed.insert(strip_frozen(&self.setup, p, self.big_l)?, deg);
        }
        let trimmed_start = self.setup.ground_state(self.big_l)?;
        let rebuilt = demazure_closure(trimmed_start, &word, (n - self.shift) % n, cap)?;
        if rebuilt.degrees() != &trimmed {
            return Err(Error::Conflict(
                "closure changes when the frozen tail is removed".into(),
            ));
        }
        Ok(rebuilt.rotate(self.shift))
    }

    /// Character graded by closure degrees.
    pub fn closure_character(&self, cap: usize) -> Result<SchurExpansion> {
        let closure = self.closure(cap)?;
        graded_character(closure.degrees().iter().map(|(p, &d)| (p, d)))
    }
}

/// `e^{-l Lambda_0} ch V_{w^{(Ld)}}(l Lambda_{kL})`, graded by energy.
pub fn homogeneous_character(
    setup: &DemazureSetup,
    big_l: usize,
    cap: usize,
) -> Result<SchurExpansion> {
    HomogeneousModel::new(setup, big_l)?.character(cap)
}

/// A pair of differing coefficients in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub lhs: String,
    pub rhs: String,
}

fn diff_map(lhs: &SchurExpansion, rhs: &SchurExpansion) -> BTreeMap<String, DiffEntry> {
    lhs.diff(rhs)
        .into_iter()
        .map(|(l, (a, b))| {
            (
                l.to_string(),
                DiffEntry {
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                },
            )
        })
        .collect()
}

/// Energy-graded character against `q^{-E_0}` times the Milne polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaReport {
    pub setup: DemazureSetup,
    #[serde(rename = "L")]
    pub big_l: usize,
    pub condition_report: ConditionReport,
    pub e0: i64,
    /// `q^{E_0} K~_lambda(q)`.
    pub lhs_expansion: BTreeMap<String, String>,
    /// `K_{lambda,(l^L)}(q)` from charge.
    pub rhs_expansion: BTreeMap<String, String>,
    /// Closure degrees give the same character as the energy.
    pub routes_agree: bool,
    pub equal: bool,
    pub diff: BTreeMap<String, DiffEntry>,
    pub passed: bool,
}

pub fn verify_kostka(n: usize, l: u32, big_l: usize, cap: usize) -> Result<KostkaReport> {
    let setup = DemazureSetup::row(n, l)?;
    let condition_report = setup.check_conditions(big_l.max(1))?;
    let model = HomogeneousModel::new(&setup, big_l)?;
    let character = model.character(cap)?;
    let routes_agree = model.closure_character(cap)? == character;
    let e0 = e0(n, l, big_l);
    let lhs = character.shift(e0);
    let rhs = milne(&Partition::rectangle(big_l, l as usize), n)?;
    let equal = lhs == rhs;
    Ok(KostkaReport {
        e0,
        lhs_expansion: lhs.to_text_map(),
        rhs_expansion: rhs.to_text_map(),
        routes_agree,
        equal,
        diff: diff_map(&lhs, &rhs),
        passed: equal && routes_agree && condition_report.all_pass(),
        setup,
        big_l,
        condition_report,
    })
}

/// `u_{Lambda_0} (x) B^{mu_1,1} (x) ... (x) B^{mu_m,1}`, `b_1` next to the head.
#[derive(Clone, Debug)]
pub struct InhomSetup {
    n: usize,
    mu: Partition,
    kinds: Vec<CrystalKind>,
    book: EnergyBook,
}

impl InhomSetup {
    pub fn new(n: usize, mu: &Partition) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        let kinds = mu
            .parts()
            .iter()
            .map(|&k| CrystalKind::column(n, k))
            .collect::<Result<Vec<_>>>()?;
        let distinct: BTreeSet<CrystalKind> = kinds.iter().copied().collect();
        let book = EnergyBook::for_kinds(&distinct.into_iter().collect::<Vec<_>>())?;
        Ok(InhomSetup {
            n,
            mu: mu.clone(),
            kinds,
            book,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn kinds(&self) -> &[CrystalKind] {
        &self.kinds
    }

    pub fn book(&self) -> &EnergyBook {
        &self.book
    }

    /// `Lambda_{|mu|}`.
    pub fn lambda(&self) -> DomWeight {
        DomWeight::fundamental(self.n, self.mu.size() as i64, 1)
    }

    /// Ground state built from the right end, where the weight is `Lambda_{|mu|}`.
    pub fn ground_state(&self) -> Result<TruncatedPath> {
        let reversed: Vec<CrystalKind> = self.kinds.iter().rev().copied().collect();
        let (elems, weights) = ground_sequence(&reversed, &self.lambda())?;
        let head = weights.last().expect("nonempty").clone();
        TruncatedPath::new(head, elems.into_iter().rev().collect())
    }

    /// `w_mu`.
    pub fn word(&self) -> Result<Word> {
        word_wmu(&self.mu, self.n)
    }

    pub fn model(&self, cap: usize) -> Result<BTreeSet<TruncatedPath>> {
        let factors: Vec<Vec<Elem>> = self.kinds.iter().map(CrystalKind::elements).collect();
        product_paths(&self.ground_state()?.head, &factors, cap)
    }

    pub fn highest_paths(&self, cap: usize) -> Result<Vec<TruncatedPath>> {
        let factors: Vec<Vec<Elem>> = self.kinds.iter().map(CrystalKind::elements).collect();
        highest_paths(&self.ground_state()?.head, &factors, cap)
    }

    pub fn energy(&self, p: &TruncatedPath) -> Result<i64> {
        inhomogeneous_energy(&self.book, p)
    }

    /// `sum q^{E(p) - E(pbar)} s_{content(p)}`.
    pub fn character(&self, cap: usize) -> Result<SchurExpansion> {
        let base = self.energy(&self.ground_state()?)?;
        let highest = self.highest_paths(cap)?;
        let graded = highest
            .iter()
            .map(|p| Ok((p, self.energy(p)? - base)))
            .collect::<Result<Vec<_>>>()?;
        graded_character(graded)
    }

    /// Closure of the ground state under `w_mu`, graded by `f~_0` steps.
    pub fn closure(&self, cap: usize) -> Result<CrystalSubset> {
        demazure_closure(self.ground_state()?, &self.word()?, 0, cap)
    }
}

/// `q^{c(T_mu)} sum_lambda K_{lambda',mu}(q^{-1}) s_lambda` over `l(lambda) <= n`,
/// with the charge `c(T_mu)`.
pub fn inhomogeneous_rhs(n: usize, mu: &Partition) -> Result<(usize, SchurExpansion)> {
    let charge = build_t_mu(mu, n)?.charge()?;
    let mut out = SchurExpansion::new();
    for lambda in Partition::all(mu.size(), n) {
        let k = kostka_foulkes(&lambda.conjugate(), mu)?;
        out.add(lambda, &k.invert_q().shift(charge as i64));
    }
    Ok((charge, out))
}

/// Inhomogeneous character against the charge formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InhomReport {
    pub n: usize,
    pub mu: Partition,
    pub word: String,
    /// `c(T_mu)`.
    pub charge: usize,
    /// `E(pbar)`; with `H` anchored at zero this comes out as `-c(T_mu)`.
    pub ground_energy: i64,
    pub model_size: usize,
    pub closure_size: usize,
    pub closure_matches_model: bool,
    /// Closure degrees equal `E(p) - E(pbar)` on every path.
    pub degrees_match_energy: bool,
    pub lhs_expansion: BTreeMap<String, String>,
    pub rhs_expansion: BTreeMap<String, String>,
    pub equal: bool,
    pub diff: BTreeMap<String, DiffEntry>,
    pub passed: bool,
}

pub fn verify_inhom(n: usize, mu: &Partition, cap: usize) -> Result<InhomReport> {
    let setup = InhomSetup::new(n, mu)?;
    let ground = setup.ground_state()?;
    let ground_energy = setup.energy(&ground)?;
    let model = setup.model(cap)?;
    let closure = setup.closure(cap)?;
    let closure_matches_model = closure.path_set() == model;
    let mut degrees_match_energy = true;
    for (p, &d) in closure.degrees() {
        if setup.energy(p)? - ground_energy != d {
            degrees_match_energy = false;
            break;
        }
    }
    let lhs = setup.character(cap)?;
    let (charge, rhs) = inhomogeneous_rhs(n, mu)?;
    let equal = lhs == rhs;
    Ok(InhomReport {
        n,
        mu: mu.clone(),
        word: setup.word()?.to_string(),
        charge,
        ground_energy,
        model_size: model.len(),
        closure_size: closure.len(),
        closure_matches_model,
        degrees_match_energy,
        lhs_expansion: lhs.to_text_map(),
        rhs_expansion: rhs.to_text_map(),
        equal,
        diff: diff_map(&lhs, &rhs),
        passed: equal && closure_matches_model && degrees_match_energy,
    })
}

/// Character of `B_w(lambda)` for an arbitrary word, graded by `f~_0` steps
/// (no rotation; the head is `u_{lambda_J}`).
pub fn word_character(
    setup: &DemazureSetup,
    word: &Word,
    big_j: usize,
    cap: usize,
) -> Result<SchurExpansion> {
    let closure = demazure_paths(setup, word, big_j, cap)?;
    graded_character(closure.degrees().iter().map(|(p, &d)| (p, d)))
}
