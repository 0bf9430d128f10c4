//! Demazure crystal from a reduced word, emitted as Graphviz DOT on stdout.
//!
//! Usage: cargo run --example demazure_crystal -- [n] [l] [K] | dot -Tsvg > b.svg

use demazure_crystals::crystal::DEFAULT_NODE_CAP;
use demazure_crystals::demazure::{demazure_paths, verify_iso, DemazureSetup};

fn main() -> demazure_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let l: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let steps: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let setup = DemazureSetup::row(n, l)?;
    let word = setup.word(steps)?;
    let big_j = setup.default_truncation(steps);
    let closure = demazure_paths(&setup, &word, big_j, DEFAULT_NODE_CAP)?;

    let report = verify_iso(&setup, steps, Some(big_j), DEFAULT_NODE_CAP)?;
    eprintln!(
        "{setup}, word [{word}], ground state {}",
        setup.ground_state(big_j)?
    );
    eprintln!(
        "{} paths; matches the product model: {}",
        closure.len(),
        report.passed
    );
    print!("{}", closure.graph().to_dot("demazure"));
    Ok(())
}
