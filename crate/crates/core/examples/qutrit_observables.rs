//! The local observables X, Y, V and how words act on GHZ states.
//!
//! Run with `cargo run --example qutrit_observables`.

use qutrit_mermin::qudit_ops::{
    apply, bloch_check, eigenvalue_on_ghz, ghz_state, rotation_check, LocalObservable, SettingWord,
};

fn main() -> qutrit_mermin::Result<()> {
    let obs = [
        ("X", LocalObservable::qutrit_x()),
        ("Y", LocalObservable::qutrit_y()),
        ("V", LocalObservable::qutrit_v()),
    ];
    for (name, o) in &obs {
        println!("{name}:");
        for row in o.matrix() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| format!("{:>10}", c.to_string()))
                .collect();
            println!("   {}", cells.join(" "));
        }
        println!("   Z W Z^-1 = ω W: {}", bloch_check(o));
    }
    println!(
        "X -> Y under the α-rotation: {}",
        rotation_check(&obs[0].1, &obs[1].1)
    );
    println!(
        "V -> X under the α-rotation: {}",
        rotation_check(&obs[2].1, &obs[0].1)
    );
    println!(
        "Y -> V under the α-rotation: {} (takes two steps back)",
        rotation_check(&obs[1].1, &obs[2].1)
    );

    // words on |Ψ_0⟩ for three qutrits
    let psi = ghz_state(0, 3, 3)?;
    for w in ["XXX", "XYV", "YYY", "VVV", "XXY"] {
        let word = SettingWord::parse_qutrit(w)?;
        let image = apply(&word, &psi)?;
        match eigenvalue_on_ghz(&word, 0) {
            Ok(lambda) => println!("{w}: position {}, eigenvalue {lambda}", word.position()),
            Err(_) => println!(
                "{w}: position {}, not an eigenoperator (maps onto {} basis states of a different GHZ)",
                word.position(),
                image.support_size()
            ),
        }
    }
    Ok(())
}
