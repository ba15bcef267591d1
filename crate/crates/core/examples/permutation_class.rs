//! Assignments built from permuted factor rows.
//!
//! Permuting some sites but not all leaves the triangle-inequality bound
//! (1/3)Σ_r Π|F_r| below the uniform value; the attained |v| is lower still.
//!
//! Run with `cargo run --release --example permutation_class`.

use qutrit_mermin::hidden_variables::{permutation_class_max, uniform_value};

fn main() -> qutrit_mermin::Result<()> {
    for n in 2..=9 {
        let r = permutation_class_max(n)?;
        println!(
            "N={n}: bound {:>9.4}  attained {:>9.4}  all sites permuted {:>9.4}  uniform {:>5}",
            r.bound,
            r.attained,
            r.all_sites_value,
            uniform_value(n)
        );
    }
    Ok(())
}
