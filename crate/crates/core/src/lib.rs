//! Path realization of Demazure crystals for affine `sl_n`.
//!
//! The crate builds Demazure crystals as closures of the ground-state path
//! under Kashiwara lowering operators, compares them with explicit tensor
//! product models, grades them through energy functions computed from the
//! combinatorial R-matrix, and checks the resulting characters against
//! Kostka-Foulkes polynomials obtained independently from the charge
//! statistic on tableaux.
//!
//! Modules, bottom up:
//!
//! - [`symfunc`]: partitions, tableaux, charge, Kostka-Foulkes and Milne polynomials
//! - [`crystal`]: `B^{1,l}` and `B^{k,1}`, tensor products, paths, closures
//! - [`weyl`]: affine permutations and the reduced words used for Demazure crystals
//! - [`energy`]: combinatorial R-matrix, local energy `H`, path energies
//! - [`demazure`]: ground states, Demazure closures, tensor models, characters
//! - [`cli`]: the command implementations behind the `demazure` binary

pub mod cli;
pub mod crystal;
pub mod demazure;
pub mod energy;
pub mod error;
pub mod symfunc;
pub mod weyl;

pub use error::{Error, Result};
