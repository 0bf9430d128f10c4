//! The single-row and single-column crystals, their operators and tensor products.
//!
//! Usage: cargo run --example sl_n_crystals

use demazure_crystals::crystal::{perfectness_witnesses, CrystalKind, Dir, Tensor};

fn main() -> demazure_crystals::Result<()> {
    for kind in [CrystalKind::row(3, 2)?, CrystalKind::column(4, 2)?] {
        println!("{kind}: {} elements", kind.size());
        for b in kind.elements() {
            let arrows: Vec<String> = (0..kind.rank())
                .filter_map(|i| b.apply(i, Dir::Lower).map(|c| format!("f{i} -> {c}")))
                .collect();
            println!(
                "  {b:<12} eps {}  phi {}  {}",
                b.eps_weight(),
                b.phi_weight(),
                arrows.join(", ")
            );
        }
        let report = perfectness_witnesses(kind)?;
        println!("  perfect of level {}: {}", kind.level(), report.holds());
    }

    // signature rule on a three-fold tensor: f~ acts at the leftmost uncancelled +
    let row = CrystalKind::row(3, 1)?;
    let els = row.elements();
    let t = Tensor(vec![els[0].clone(), els[1].clone(), els[0].clone()]);
    println!("\n{t}");
    for i in 0..3 {
        let image = t
            .apply(i, Dir::Lower)
            .map_or("0".to_string(), |u| u.to_string());
        println!(
            "  color {i}: eps {} phi {}  f{i} -> {image}",
            t.eps(i),
            t.phi(i)
        );
    }
    Ok(())
}
