//! Kostka-Foulkes polynomials from charge, and the Milne polynomial they assemble into.
//!
//! Usage: cargo run --example kostka_foulkes -- [size] [n]

use demazure_crystals::symfunc::{build_t_mu, kostka_foulkes, milne, Partition};

fn main() -> demazure_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let size: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let all = Partition::all(size, size);
    println!("K_{{lambda,mu}}(q) for |lambda| = {size}, rows lambda, columns mu");
    let header: Vec<String> = all
        .iter()
        .map(|mu| format!("{:>16}", mu.to_string()))
        .collect();
    println!("{:>10} |{}", "", header.join(""));
    for lambda in &all {
        let row: Vec<String> = all
            .iter()
            .map(|mu| {
                format!(
                    "{:>16}",
                    kostka_foulkes(lambda, mu)
                        .map(|k| k.to_string())
                        .unwrap_or_default()
                )
            })
            .collect();
        println!("{:>10} |{}", lambda.to_string(), row.join(""));
    }

    println!();
    for mu in Partition::all(size, size) {
        // T_mu needs every part to fit in n letters
        let Ok(t) = build_t_mu(&mu, n) else { continue };
        println!("mu = {mu}: T_mu = {:?}, charge {}", t.rows(), t.charge()?);
        println!("  Milne polynomial in {n} variables: {}", milne(&mu, n)?);
    }
    Ok(())
}
