//! Reduced words in the affine Weyl group of type A.
//!
//! Usage: cargo run --example weyl_words -- [n] [k]

use demazure_crystals::demazure::DemazureSetup;
use demazure_crystals::symfunc::Partition;
use demazure_crystals::weyl::{word_wmu, AffinePerm};

fn main() -> demazure_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);

    let setup = if k == 1 {
        DemazureSetup::row(n, 1)?
    } else {
        DemazureSetup::column(n, k)?
    };
    println!("{setup}");
    for big_l in 1..=3 {
        let word = setup.word(big_l * setup.d())?;
        let perm = AffinePerm::from_word(&word);
        println!(
            "  L={big_l}: [{word}]  window {:?}  length {}",
            perm.window(),
            perm.length()
        );
    }

    let mu = Partition::new(vec![3, 2, 1])?;
    let w = word_wmu(&mu, 4)?;
    println!(
        "\nw_mu for mu = {mu}, n = 4: [{w}], reduced: {}",
        w.is_reduced()
    );
    Ok(())
}
