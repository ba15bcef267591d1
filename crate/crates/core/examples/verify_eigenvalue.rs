//! Builds the Mermin operator and checks its GHZ eigenvalue exactly.
//!
//! Run with `cargo run --release --example verify_eigenvalue`.

use qutrit_mermin::mermin::{build_mermin, verify_eigenvalue};

fn main() -> qutrit_mermin::Result<()> {
    let op = build_mermin(3, 3, 0)?;
    println!("M for three qutrits ({} terms):", op.len());
    for t in op.terms() {
        println!("  {} · {}", t.weight_value(), t.word);
    }
    println!();
    for n in 1..=8 {
        for variant in 0..3 {
            let op = build_mermin(3, n, variant)?;
            let lambda = verify_eigenvalue(&op)?;
            println!(
                "N={n} c={variant}: {:>5} terms, eigenvalue {lambda}",
                op.len()
            );
        }
    }
    Ok(())
}
