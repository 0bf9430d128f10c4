//! Inhomogeneous column paths graded by energy, compared with charge.
//!
//! Usage: cargo run --example inhomogeneous_character -- [n] [mu]

use demazure_crystals::crystal::DEFAULT_NODE_CAP;
use demazure_crystals::demazure::{verify_inhom, InhomSetup};
use demazure_crystals::symfunc::Partition;

fn main() -> demazure_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let mu: Partition = args.next().as_deref().unwrap_or("3,2,1").parse()?;

    let inhom = InhomSetup::new(n, &mu)?;
    println!("n = {n}, mu = {mu}, word [{}]", inhom.word()?);
    println!("ground state {}", inhom.ground_state()?);
    for p in inhom.highest_paths(DEFAULT_NODE_CAP)? {
        println!("  highest {p}  E = {}", inhom.energy(&p)?);
    }
    let report = verify_inhom(n, &mu, DEFAULT_NODE_CAP)?;
    println!("character: {}", inhom.character(DEFAULT_NODE_CAP)?);
    println!(
        "charge of T_mu {}, matches sum of K_(lambda' mu): {}",
        report.charge, report.passed
    );
    Ok(())
}
