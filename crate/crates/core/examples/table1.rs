//! Quantum eigenvalue, classical maximum and violation ratio, with the
//! classical column confirmed by exhaustive search.
//!
//! Run with `cargo run --release --example table1`.

use qutrit_mermin::report::{cmd_table1, OutputFormat};

fn main() -> qutrit_mermin::Result<()> {
    let out = cmd_table1(3, 7, true, 1)?;
    print!("{}", out.render(OutputFormat::Human));
    for f in &out.failures {
        eprintln!("mismatch: {f}");
    }
    Ok(())
}
