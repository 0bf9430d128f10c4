//! Graded character of a homogeneous path model next to the Kostka-Foulkes side.
//!
//! Usage: cargo run --example homogeneous_character -- [n] [l] [L]

use demazure_crystals::crystal::DEFAULT_NODE_CAP;
use demazure_crystals::demazure::{verify_kostka, DemazureSetup, HomogeneousModel};

fn main() -> demazure_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let l: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let big_l: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let setup = DemazureSetup::row(n, l)?;
    let model = HomogeneousModel::new(&setup, big_l)?;
    println!("{setup}, L = {big_l}, ground {}", model.ground());
    for p in model.highest_paths(DEFAULT_NODE_CAP)? {
        println!("  highest {p}  D = {}", model.energy(&p)?);
    }
    println!("character: {}", model.character(DEFAULT_NODE_CAP)?);

    let report = verify_kostka(n, l, big_l, DEFAULT_NODE_CAP)?;
    println!(
        "E0 = {}, Kostka-Foulkes side agrees: {}",
        report.e0, report.passed
    );
    Ok(())
}
