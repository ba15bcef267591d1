//! Exact arithmetic in Z[α], α = e^{2πi/9}.
//!
//! Run with `cargo run --example cyclotomic_arith`.

use qutrit_mermin::cyclotomic::CycInt;
use qutrit_mermin::hidden_variables::{constant_a, constant_b, constant_c, factors};

fn main() -> qutrit_mermin::Result<()> {
    let alpha = CycInt::root_of_unity(1, 9)?;
    let omega = CycInt::root_of_unity(3, 9)?;

    // α^6 is not in the basis {1, α, ..., α^5}; Φ_9 folds it back
    let alpha6 = CycInt::root_of_unity(6, 9)?;
    println!("alpha^6           = {alpha6}");
    println!(
        "1 + ω + ω²        = {}",
        &(&CycInt::one(9)? + &omega) + &(&omega * &omega)
    );
    println!(
        "alpha^9           = {}",
        (0..9).fold(CycInt::one(9)?, |acc, _| &acc * &alpha)
    );

    // the three single-site factors at R = S = 1
    let f = factors(0, 0);
    for (name, x, reference) in [
        ("A", &f.a, constant_a()),
        ("B", &f.b, constant_b()),
        ("C", &f.c, constant_c()),
    ] {
        println!(
            "{name} = {:<28} |{name}|^2 = {:<28} |{name}| = {:.6} (closed form {:.6})",
            x.to_string(),
            x.norm_squared().to_string(),
            x.magnitude(),
            reference
        );
    }
    println!("A·B·C             = {}", &(&f.a * &f.b) * &f.c);
    Ok(())
}
