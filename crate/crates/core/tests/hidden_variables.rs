//! Classical values: brute-force oracle, ratio reduction, factor table, closed forms.

use num_complex::Complex64;
use proptest::prelude::*;
use qutrit_mermin::cyclotomic::{CycInt, PhaseExponent};
use qutrit_mermin::hidden_variables::{
    constant_a, constant_b, constant_c, exhaustive_search, factor_table, factors,
    ghz_contradiction_count, hv_value_direct, hv_value_product, permutation_class_max, power_sum,
    quantum_value, uniform_value, uniform_value_float, violation_ratio, HvAssignment, SearchMode,
};
use qutrit_mermin::mermin::{build_mermin, counts_by_position};

fn omega(e: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / 3.0)
}

/// Max |v| over all 27^N assignments, from the operator's definition in floats:
/// words with k ∈ {0, 3, 6}, weight e^{−2πik/9}, letters X, Y, V at rotations 0, 1, −1.
fn brute_force_max(n: usize) -> f64 {
    let rot = [0i64, 1, -1];
    let words: Vec<(Vec<usize>, Complex64)> = (0..3usize.pow(n as u32))
        .filter_map(|idx| {
            let letters: Vec<usize> = (0..n).map(|i| idx / 3usize.pow(i as u32) % 3).collect();
            let k = letters.iter().map(|&l| rot[l]).sum::<i64>().rem_euclid(9);
            (k % 3 == 0).then(|| {
                let w = Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * k as f64 / 9.0);
                (letters, w)
            })
        })
        .collect();
    let mut best: f64 = 0.0;
    for a in 0..27usize.pow(n as u32) {
        let vals: Vec<[u32; 3]> = (0..n)
            .map(|i| {
                let s = a / 27usize.pow(i as u32) % 27;
                [(s % 3) as u32, (s / 3 % 3) as u32, (s / 9) as u32]
            })
            .collect();
        let v: Complex64 = words
            .iter()
            .map(|(letters, w)| {
                w * omega(letters.iter().zip(&vals).map(|(&l, v)| v[l]).sum::<u32>() % 3)
            })
            .sum();
        best = best.max(v.norm());
    }
    best
}

#[test]
fn search_matches_brute_force_oracle() {
    for n in 1..=3 {
        let oracle = brute_force_max(n);
        for mode in [SearchMode::Ratio, SearchMode::Full] {
            let r = exhaustive_search(n, mode, 2).unwrap();
            assert!(
                (r.max_magnitude - oracle).abs() < 1e-9,
                "N={n} {mode:?}: {} vs {oracle}",
                r.max_magnitude
            );
        }
    }
}

#[test]
fn full_and_ratio_modes_agree() {
    for n in 1..=4 {
        let full = exhaustive_search(n, SearchMode::Full, 2).unwrap();
        let ratio = exhaustive_search(n, SearchMode::Ratio, 2).unwrap();
        assert_eq!(full.reduction_check.as_ref().unwrap().mismatches, 0);
        assert_eq!(
            full.reduction_check.as_ref().unwrap().checked,
            27u64.pow(n as u32)
        );
        assert_eq!(full.max_scaled_norm, ratio.max_scaled_norm);
        // each ratio class is hit by 3^N full assignments
        assert_eq!(
            full.num_maximizers,
            ratio.num_maximizers * 3u64.pow(n as u32)
        );
    }
}

#[test]
fn search_maximum_is_uniform_value() {
    for n in 3..=6 {
        let r = exhaustive_search(n, SearchMode::Ratio, 3).unwrap();
        let m_c = uniform_value(n);
        assert_eq!(r.max_scaled_norm.as_integer(), Some(9 * m_c * m_c), "N={n}");
        assert!(r.uniform_is_maximizer);
    }
}

fn assignment() -> impl Strategy<Value = HvAssignment> {
    (1usize..=6)
        .prop_flat_map(|n| prop::collection::vec(prop::array::uniform3(0u8..3), n))
        .prop_map(|v| HvAssignment::new(v).unwrap())
}

proptest! {
    #[test]
    fn product_form_equals_direct_sum(a in assignment()) {
        // 3·v_direct = ω^{Σ x_i} · (Π𝒜 + Πℬ + Π𝒞)
        let op = build_mermin(3, a.sites(), 0).unwrap();
        let direct = hv_value_direct(&a, &op).unwrap();
        let ratios = a.ratios();
        let product = hv_value_product(&ratios.r, &ratios.s).unwrap();
        let rotated = product.scaled.mul_root(PhaseExponent::new(3 * a.x_phase() as i64, 9));
        prop_assert_eq!(direct.scale(3), rotated);
        prop_assert!((direct.magnitude() - product.magnitude).abs() < 1e-9);
    }
}

#[test]
fn factor_magnitudes_are_conserved() {
    let mut reference = [constant_a(), constant_b(), constant_c()];
    reference.sort_by(f64::total_cmp);
    for r in 0..3 {
        for s in 0..3 {
            let f = factors(r, s);
            let mut mags = [f.a.magnitude(), f.b.magnitude(), f.c.magnitude()];
            mags.sort_by(f64::total_cmp);
            for (x, y) in mags.iter().zip(&reference) {
                assert!((x - y).abs() < 1e-12, "({r}, {s})");
            }
            // exact: the three norms sum to 9
            let total = &(&f.a.norm_squared() + &f.b.norm_squared()) + &f.c.norm_squared();
            assert_eq!(total.as_integer(), Some(9));
        }
    }
}

#[test]
fn factor_table_rows_are_frozen() {
    let expected = [
        ["A", "B", "-C"],
        ["A(40°)", "B(-80°)", "C(-20°)"],
        ["A(-40°)", "B(80°)", "C(20°)"],
        ["B", "-C", "A"],
        ["-C", "A", "B"],
        ["C(20°)", "A(-40°)", "B(80°)"],
        ["C(-20°)", "A(40°)", "B(-80°)"],
        ["B(80°)", "C(20°)", "A(-40°)"],
        ["B(-80°)", "C(-20°)", "A(40°)"],
    ];
    let rs = [
        (0, 0),
        (1, 0),
        (0, 2),
        (1, 2),
        (2, 1),
        (2, 0),
        (0, 1),
        (1, 1),
        (2, 2),
    ];
    let table = factor_table();
    for ((row, want), (r, s)) in table.iter().zip(&expected).zip(rs) {
        assert_eq!((row.r, row.s), (r, s));
        let shown: Vec<String> = row.entries.iter().map(|e| e.display()).collect();
        assert_eq!(shown, want.to_vec());
        for e in &row.entries {
            // phases from the exact value, measured independently
            let z = e.value.to_complex();
            assert!(
                (z.arg().to_degrees() - e.phase_degrees).abs() < 1e-9
                    || (e.phase_degrees - 180.0).abs() < 1e-9
            );
        }
    }
}

#[test]
fn power_sum_recurrence_matches_floats() {
    for n in 1..=20 {
        let exact = uniform_value(n) as f64;
        let float = uniform_value_float(n);
        assert!(
            (exact - float).abs() <= 1e-9 * exact.max(1.0),
            "N={n}: {exact} vs {float}"
        );
        assert_eq!(power_sum(n) % 3, 0);
    }
}

#[test]
fn counts_give_uniform_value() {
    // at the uniform point a word at k contributes ω^{−k/3}, so v = n₀ − n₃ (n₃ = n₆)
    for n in 1..=12 {
        let c = counts_by_position(3, n).unwrap();
        assert_eq!(c.at(0) as i64 - c.at(3) as i64, uniform_value(n), "N={n}");
        let direct = hv_value_direct(
            &HvAssignment::uniform(n.min(8)),
            &build_mermin(3, n.min(8), 0).unwrap(),
        )
        .unwrap();
        assert_eq!(direct.as_integer(), Some(uniform_value(n.min(8))));
    }
}

#[test]
fn contradiction_count_identity() {
    for n in 1..=30 {
        let count = ghz_contradiction_count(n).unwrap() as i64;
        assert_eq!(3 * count, 2 * (quantum_value(n) - uniform_value(n)));
    }
}

#[test]
fn contradiction_fraction_converges_slowly() {
    let fraction = |n: usize| ghz_contradiction_count(n).unwrap() as f64 / quantum_value(n) as f64;
    assert!((fraction(12) - 2.0 / 3.0).abs() > 0.08);
    let first = (1..=39)
        .find(|&n| (fraction(n) - 2.0 / 3.0).abs() < 0.01)
        .unwrap();
    assert!(first > 20, "first N within 0.01 of 2/3 is {first}");
    for n in 3..39 {
        assert!(fraction(n + 1) > fraction(n));
    }
}

#[test]
fn violation_ratio_growth() {
    let rate = violation_ratio(20) / violation_ratio(19);
    assert!((1.1838..=1.1858).contains(&rate), "{rate}");
    assert_eq!(violation_ratio(7), 729.0 / 225.0);
}

#[test]
fn permutation_class_at_three_sites() {
    let r = permutation_class_max(3).unwrap();
    assert!((r.bound - 4.064).abs() < 1e-3, "{}", r.bound);
    assert!((r.attained - 3.0).abs() < 1e-9);
    assert!(r.attained <= r.bound && r.bound < 6.0);
    assert!((r.all_sites_value - 6.0).abs() < 1e-9);
}

#[test]
fn exact_value_on_uniform_point_is_integer() {
    for n in 1..=7 {
        let v = hv_value_product(&vec![0; n], &vec![0; n]).unwrap();
        assert_eq!(v.scaled, CycInt::from_int(3 * uniform_value(n), 9).unwrap());
    }
}
