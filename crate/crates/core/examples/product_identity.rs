//! Expands the product form into words and compares with the operator.
//!
//! Run with `cargo run --release --example product_identity`.

use qutrit_mermin::mermin::{expand_general_identity, expand_identity};

fn main() -> qutrit_mermin::Result<()> {
    for n in 1..=6 {
        let r = expand_identity(n)?;
        println!(
            "d=3 N={n}: {:>4} words, {:>3} survive, {:>4} cancel, {}",
            r.words,
            r.survived,
            r.vanished,
            if r.holds() {
                "identity holds"
            } else {
                "MISMATCH"
            }
        );
    }
    for (d, n) in [(5, 2), (5, 3), (7, 2)] {
        let r = expand_general_identity(d, n)?;
        println!(
            "d={d} N={n}: {} words, {} survive, holds: {}",
            r.words,
            r.survived,
            r.holds()
        );
    }
    Ok(())
}
