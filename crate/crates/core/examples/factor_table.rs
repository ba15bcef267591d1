//! The nine (R, S) rows of single-site factors.
//!
//! Run with `cargo run --example factor_table`.

use qutrit_mermin::hidden_variables::{factor_table, hv_value_product};

fn main() -> qutrit_mermin::Result<()> {
    let names = ["1", "ω", "ω²"];
    for row in factor_table() {
        let cells: Vec<String> = row
            .entries
            .iter()
            .map(|e| format!("{:<9}", e.display()))
            .collect();
        println!(
            "R={:<2} S={:<2}  {}",
            names[row.r as usize],
            names[row.s as usize],
            cells.join(" ")
        );
    }

    // the uniform assignment versus one that mixes rows
    let uniform = hv_value_product(&[0, 0, 0, 0], &[0, 0, 0, 0])?;
    let mixed = hv_value_product(&[0, 1, 2, 0], &[0, 2, 1, 0])?;
    println!("\nN=4 uniform: |v| = {:.6}", uniform.magnitude);
    println!("N=4 mixed:   |v| = {:.6}", mixed.magnitude);
    Ok(())
}
