//! The combinatorial R-matrix and local energy on a pair of crystals.
//!
//! Usage: cargo run --example energy_function

use demazure_crystals::crystal::CrystalKind;
use demazure_crystals::energy::{combinatorial_r, energy_table};

fn main() -> demazure_crystals::Result<()> {
    let pairs = [
        (CrystalKind::row(2, 1)?, CrystalKind::row(2, 1)?),
        (CrystalKind::row(3, 1)?, CrystalKind::row(3, 2)?),
        (CrystalKind::column(4, 2)?, CrystalKind::column(4, 1)?),
    ];
    for (a, b) in pairs {
        let r = combinatorial_r(a, b)?;
        let h = energy_table(&r)?;
        println!(
            "{a} (x) {b} -> {b} (x) {a}, H normalized at {} (x) {}",
            h.anchor().0,
            h.anchor().1
        );
        for ((x, y), (x2, y2)) in r.iter() {
            println!(
                "  {x} (x) {y}  ->  {x2} (x) {y2}   H = {}",
                h.get(x, y).unwrap_or_default()
            );
        }
    }
    Ok(())
}
