//! The construction for odd prime d: eigenvalues, uniform factors, and the
//! uniform-optimality probe for d = 5.
//!
//! Run with `cargo run --release --example generalized_d`.

use qutrit_mermin::generalized_d::{
    conjecture_search, uniform_factors, verify_general_eigenvalue, GeneralConfig,
};

fn main() -> qutrit_mermin::Result<()> {
    for (d, n) in [(3, 4), (5, 2), (5, 3), (7, 2)] {
        let lambda = verify_general_eigenvalue(&GeneralConfig::new(d, n)?)?;
        println!("d={d} N={n}: eigenvalue {lambda}");
    }
    for d in [3, 5, 7] {
        let f = uniform_factors(d)?;
        let mags: Vec<String> = f.magnitudes().iter().map(|m| format!("{m:.4}")).collect();
        let parseval: f64 = f.magnitudes().iter().map(|m| m * m).sum();
        println!(
            "d={d}: |factors| = [{}], Σ|F|² = {parseval:.6}",
            mags.join(", ")
        );
    }
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let r = conjecture_search(5, 2, workers)?;
    println!(
        "d=5 N=2: max {:.6}, uniform {:.6}, uniform optimal: {}, {} maximizers",
        r.max_magnitude, r.uniform_value, r.uniform_optimal, r.num_maximizers
    );
    Ok(())
}
