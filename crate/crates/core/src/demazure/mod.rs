//! Demazure crystals `B_w(lambda)` as lowering closures of the ground-state
//! path, the explicit tensor-product models they are compared with, and the
//! graded characters read off from them.

mod character;
mod model;
mod setup;

pub use character::{
    e0, graded_character, highest_paths, homogeneous_character, inhomogeneous_rhs, verify_inhom,
    verify_kostka, word_character, DiffEntry, HomogeneousModel, InhomReport, InhomSetup,
    KostkaReport,
};
pub use model::{
    demazure_closure, demazure_model, demazure_paths, strip_frozen, verify_iso, CrystalSubset,
    IsoReport,
};
pub use setup::{ground_sequence, ConditionReport, DemazureSetup, Scheme};
