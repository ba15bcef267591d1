//! Exhaustive classical maximum, in ratio and full modes.
//!
//! Run with `cargo run --release --example hidden_variable_search`.

use qutrit_mermin::hidden_variables::{exhaustive_search, uniform_value, SearchMode};

fn main() -> qutrit_mermin::Result<()> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    for n in 1..=7 {
        let r = exhaustive_search(n, SearchMode::Ratio, workers)?;
        println!(
            "ratio N={n}: max {:>8.4} (uniform value {:>3}), {:>5} maximizers of {:>7}, uniform optimal: {}",
            r.max_magnitude,
            uniform_value(n),
            r.num_maximizers,
            r.assignments_scanned,
            r.uniform_is_maximizer
        );
    }
    for n in 1..=4 {
        let r = exhaustive_search(n, SearchMode::Full, workers)?;
        let check = r.reduction_check.expect("full mode checks the reduction");
        println!(
            "full  N={n}: max {:>8.4}, {} assignments, {} disagree with their ratio reduction",
            r.max_magnitude, check.checked, check.mismatches
        );
    }
    Ok(())
}
