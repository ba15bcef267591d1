//! Words on which the uniform hidden-variable model contradicts quantum mechanics.
//!
//! Run with `cargo run --example ghz_contradictions`.

use qutrit_mermin::hidden_variables::{
    all_witnesses, ghz_contradiction_count, quantum_value, uniform_value,
};

fn main() -> qutrit_mermin::Result<()> {
    for w in all_witnesses(3)? {
        println!(
            "{}  k={}  quantum {}  hidden variable {}",
            w.word, w.position, w.quantum, w.hidden_variable
        );
    }
    println!();
    for n in 1..=12 {
        let count = ghz_contradiction_count(n)?;
        println!(
            "N={n:>2}: N_GHZ = {count:>6} = (2/3)({} - {}), N_GHZ/M_Q = {:.4}",
            quantum_value(n),
            uniform_value(n),
            count as f64 / quantum_value(n) as f64
        );
    }
    Ok(())
}
