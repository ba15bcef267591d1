//! CSV of quantum versus classical growth, ready for plotting.
//!
//! Run with `cargo run --example scaling > scaling.csv`.

use qutrit_mermin::report::{cmd_scaling, OutputFormat};

fn main() -> qutrit_mermin::Result<()> {
    print!("{}", cmd_scaling(25)?.render(OutputFormat::Csv));
    Ok(())
}
