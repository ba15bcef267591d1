//! Local hidden-variable values of the qutrit Mermin operator.
//!
//! A hidden-variable model assigns every local setting a definite value in
//! `{1, ω, ω²}`. The magnitude of the resulting classical value depends only
//! on the per-site ratios `R = v(Y)/v(X)` and `S = v(V)/v(X)`, and factorizes
//! as `|v| = (1/3)|Π 𝒜(R_i,S_i) + Π ℬ(R_i,S_i) + Π 𝒞(R_i,S_i)|`.
//!
//! At the uniform point (`R = S = 1`) the factors are the real numbers
//! `A = 1 + 2cos(2π/9)`, `B = 1 + 2cos(4π/9)` and `−C = 1 + 2cos(8π/9)`. They
//! are the roots of `x³ − 3x² + 3`, so the power sums `p_N = A^N + B^N + (−C)^N`
//! obey `p_N = 3p_{N−1} − 3p_{N−3}` and the classical bound `p_N / 3` is an
//! integer.

pub mod search;

use serde::Serialize;

use crate::cyclotomic::{CycInt, PhaseExponent};
use crate::error::{Error, Result};
use crate::mermin::{build_mermin, counts_by_position, MerminOperator};
use crate::qudit_ops::{eigenvalue_on_ghz, rotation_letter, SettingWord};
use search::{
    round_degrees, run_chunks, scan_ratio_space, summarize_terms, RatioSpace, Tally, TermSummary,
};

pub use search::TOLERANCE;

const M: u32 = 9;

/// Largest ratio-mode search space (`9^N`).
pub const RATIO_SEARCH_CAP: u128 = 1_000_000_000;
/// Largest full-mode search space (`27^N`).
pub const FULL_SEARCH_CAP: u128 = 100_000_000;

/// `A = 1 + 2cos(2π/9)`.
pub fn constant_a() -> f64 {
    1.0 + 2.0 * (std::f64::consts::TAU / 9.0).cos()
}

/// `B = 1 + 2cos(4π/9)`.
pub fn constant_b() -> f64 {
    1.0 + 2.0 * (2.0 * std::f64::consts::TAU / 9.0).cos()
}

/// `C = −(1 + 2cos(8π/9))`, positive.
pub fn constant_c() -> f64 {
    -(1.0 + 2.0 * (4.0 * std::f64::consts::TAU / 9.0).cos())
}

/// Full hidden-variable assignment: per site, the `ω`-exponents of `v(X)`, `v(Y)`, `v(V)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HvAssignment {
    values: Vec<[u8; 3]>,
}

/// Ratio form: per site, `R_i = ω^{r[i]}` and `S_i = ω^{s[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioAssignment {
    pub r: Vec<u8>,
    pub s: Vec<u8>,
}

impl HvAssignment {
    pub fn new(values: Vec<[u8; 3]>) -> Result<Self> {
        if values.iter().flatten().any(|&e| e > 2) {
            return Err(Error::InvalidParameter(
                "hidden-variable exponents must be 0, 1 or 2".into(),
            ));
        }
        Ok(Self { values })
    }

    /// Every local value equal to one.
    pub fn uniform(n: usize) -> Self {
        Self {
            values: vec![[0; 3]; n],
        }
    }

    pub fn sites(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[[u8; 3]] {
        &self.values
    }

    pub fn ratios(&self) -> RatioAssignment {
        let r = self.values.iter().map(|v| (v[1] + 3 - v[0]) % 3).collect();
        let s = self.values.iter().map(|v| (v[2] + 3 - v[0]) % 3).collect();
        RatioAssignment { r, s }
    }

    /// Exponent of `Π_i v(X_i)`, the global phase between direct and product forms.
    pub fn x_phase(&self) -> u32 {
        self.values.iter().map(|v| v[0] as u32).sum::<u32>() % 3
    }

    /// `ω`-exponent predicted for a single setting word.
    fn word_exponent(&self, word: &SettingWord) -> u32 {
        word.rotations()
            .zip(&self.values)
            .map(|(j, v)| v[rotation_letter(3, j) as usize] as u32)
            .sum::<u32>()
            % 3
    }

    /// Predicted value `Π_i v(letter_i)` of a word.
    pub fn word_value(&self, word: &SettingWord) -> CycInt {
        PhaseExponent::new(3 * self.word_exponent(word) as i64, M).to_cycint()
    }
}

fn check_qutrit_operator(op: &MerminOperator, n: usize) -> Result<()> {
    if op.dimension() != 3 {
        return Err(Error::InvalidDimension(op.dimension()));
    }
    if op.sites() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("N={}", op.sites()),
            found: format!("N={n}"),
        });
    }
    Ok(())
}

/// `v(M) = Σ_terms weight · Π_i v(letter_i)`, exactly.
pub fn hv_value_direct(a: &HvAssignment, op: &MerminOperator) -> Result<CycInt> {
    check_qutrit_operator(op, a.sites())?;
    let mut powers = [0i64; M as usize];
    for term in op.terms() {
        let e = term.weight.exponent() as usize + 3 * a.word_exponent(&term.word) as usize;
        powers[e % M as usize] += 1;
    }
    CycInt::from_powers(M, &powers)
}

/// Classical value from the product form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HvValue {
    /// `Π 𝒜 + Π ℬ + Π 𝒞`, i.e. `3·v` up to the phase `Π v(X_i)`.
    pub scaled: CycInt,
    pub magnitude: f64,
}

/// `(1/3)|Π ℬ(R_i,S_i) + Π 𝒞(R_i,S_i) + Π 𝒜(R_i,S_i)|`, evaluated exactly then measured.
pub fn hv_value_product(r: &[u8], s: &[u8]) -> Result<HvValue> {
    if r.len() != s.len() || r.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: format!("{} S ratios", r.len()),
            found: s.len().to_string(),
        });
    }
    if r.iter().chain(s).any(|&e| e > 2) {
        return Err(Error::InvalidParameter(
            "ratio exponents must be 0, 1 or 2".into(),
        ));
    }
    let space = RatioSpace::new(3)?;
    let options: Vec<usize> = r
        .iter()
        .zip(s)
        .map(|(&r, &s)| space.option_of(&[r, s]))
        .collect();
    let scaled = space.scaled_value(&options);
    let magnitude = scaled.magnitude() / 3.0;
    Ok(HvValue { scaled, magnitude })
}

/// The three single-site factors `(𝒜, ℬ, 𝒞)` at `(R, S) = (ω^r, ω^s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorTriple {
    pub a: CycInt,
    pub b: CycInt,
    pub c: CycInt,
}

pub fn factors(r: u8, s: u8) -> FactorTriple {
    let space = RatioSpace::new(3).unwrap();
    let o = space.option_of(&[r, s]);
    FactorTriple {
        a: space.factor(o, 0).clone(),
        b: space.factor(o, 1).clone(),
        c: space.factor(o, 2).clone(),
    }
}

/// One factor entry: magnitude label and phase in degrees, in `(−180, 180]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorEntry {
    pub label: char,
    pub magnitude: f64,
    pub phase_degrees: f64,
    pub value: CycInt,
}

impl FactorEntry {
    /// Compact rendering: `A`, `−C`, `B(80°)`.
    pub fn display(&self) -> String {
        match self.phase_degrees {
            0.0 => self.label.to_string(),
            180.0 => format!("-{}", self.label),
            p => format!("{}({}°)", self.label, p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorRow {
    pub r: u8,
    pub s: u8,
    pub entries: [FactorEntry; 3],
}

/// Row order of the factor table, as `(R, S)` exponents.
pub const FACTOR_TABLE_ORDER: [(u8, u8); 9] = [
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

/// Magnitudes and phases of `𝒜, ℬ, 𝒞` for all nine `(R, S)`.
pub fn factor_table() -> Vec<FactorRow> {
    let space = RatioSpace::new(3).unwrap();
    FACTOR_TABLE_ORDER
        .iter()
        .map(|&(r, s)| {
            let o = space.option_of(&[r, s]);
            let entry = |k: u32| {
                let value = space.factor(o, k).clone();
                let z = value.to_complex();
                FactorEntry {
                    label: space.label_of(z.norm()).unwrap_or('?'),
                    magnitude: z.norm(),
                    phase_degrees: round_degrees(z.arg().to_degrees()),
                    value,
                }
            };
            FactorRow {
                r,
                s,
                entries: [entry(0), entry(1), entry(2)],
            }
        })
        .collect()
}

/// Power sum `p_N = A^N + B^N + (−C)^N` from the integer recurrence.
pub fn power_sum(n: usize) -> i64 {
    let mut p = [3i64, 3, 9];
    if n < 3 {
        return p[n];
    }
    for _ in 3..=n {
        let next = 3i64
            .checked_mul(p[2])
            .and_then(|x| x.checked_sub(3i64.checked_mul(p[0])?))
            .expect("power sum overflow");
        p = [p[1], p[2], next];
    }
    p[2]
}

/// Classical value at the uniform point, `p_N / 3`, exactly.
pub fn uniform_value(n: usize) -> i64 {
    power_sum(n) / 3
}

/// `(A^N + B^N ± C^N)/3` in floating point.
pub fn uniform_value_float(n: usize) -> f64 {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let n = n as i32;
    (constant_a().powi(n) + constant_b().powi(n) + sign * constant_c().powi(n)) / 3.0
}

/// Quantum eigenvalue `3^{N−1}`.
pub fn quantum_value(n: usize) -> i64 {
    3i64.checked_pow(n as u32 - 1).expect("3^(N-1) overflow")
}

/// `M_Q / M_C`.
pub fn violation_ratio(n: usize) -> f64 {
    quantum_value(n) as f64 / uniform_value(n) as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// `9^N` ratio assignments.
    Ratio,
    /// `27^N` full assignments, checked against their ratio reductions.
    Full,
}

/// Full-mode cross-check of the ratio reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub checked: u64,
    pub mismatches: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub d: u32,
    pub n: usize,
    pub mode: SearchMode,
    pub max_magnitude: f64,
    /// Exact `|d·v|²` at the maximum.
    pub max_scaled_norm: CycInt,
    /// Per product term at the argmax: magnitude, phase and factor multiset.
    pub max_class: Vec<TermSummary>,
    /// Lexicographically smallest maximizer. Ratio mode: per site the ratio exponents
    /// `(R, S)`; full mode: per site the exponents of `(v(X), v(Y), v(V))`.
    pub argmax: Vec<Vec<u8>>,
    pub num_maximizers: u64,
    pub assignments_scanned: u64,
    pub uniform_is_maximizer: bool,
    pub reduction_check: Option<ReductionCheck>,
}

/// Exhaustive maximum of `|v(M₀)|` over hidden-variable assignments.
pub fn exhaustive_search(n: usize, mode: SearchMode, workers: usize) -> Result<SearchResult> {
    match mode {
        SearchMode::Ratio => ratio_search(3, n, RATIO_SEARCH_CAP, workers),
        SearchMode::Full => full_search(n, workers),
    }
}

pub(crate) fn ratio_search(d: u32, n: usize, cap: u128, workers: usize) -> Result<SearchResult> {
    let space = RatioSpace::new(d)?;
    let scan = scan_ratio_space(&space, n, cap, workers)?;
    let best = scan.tally.best.expect("nonempty search space");
    Ok(SearchResult {
        d,
        n,
        mode: SearchMode::Ratio,
        max_magnitude: best.shadow.max(0.0).sqrt() / d as f64,
        max_scaled_norm: best.norm,
        max_class: summarize_terms(&space, &scan.best_options),
        argmax: scan
            .best_options
            .iter()
            .map(|&o| space.exponents(o))
            .collect(),
        num_maximizers: scan.tally.count,
        assignments_scanned: scan.tally.scanned,
        uniform_is_maximizer: best.index == 0,
        reduction_check: None,
    })
}

fn full_search(n: usize, workers: usize) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let size = 27u128.checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > FULL_SEARCH_CAP {
        return Err(Error::SearchSpaceTooLarge {
            size,
            cap: FULL_SEARCH_CAP,
        });
    }
    let op = build_mermin(3, n, 0)?;
    let space = RatioSpace::new(3)?;
    // exact |3v|² of every ratio assignment
    let ratio_norms: Vec<CycInt> = (0..9usize.pow(n as u32))
        .map(|mut idx| {
            let mut options = vec![0usize; n];
            for slot in options.iter_mut().rev() {
                *slot = idx % 9;
                idx /= 9;
            }
            space.scaled_value(&options).norm_squared()
        })
        .collect();
    let terms: Vec<(u32, Vec<usize>)> = op
        .terms()
        .iter()
        .map(|t| {
            let letters = t
                .word
                .rotations()
                .map(|j| rotation_letter(3, j) as usize)
                .collect();
            (t.weight.exponent() / 3, letters)
        })
        .collect();

    let per_site = 27u64;
    let len = search::prefix_len(per_site, n);
    let chunks = per_site.pow(len as u32);
    let tail = per_site.pow((n - len) as u32);
    let mismatches = std::sync::atomic::AtomicU64::new(0);

    let tally = run_chunks(chunks, workers, |chunk| {
        let mut tally = Tally::default();
        let mut values = vec![[0u8; 3]; n];
        for index in chunk * tail..(chunk + 1) * tail {
            let mut rest = index;
            for v in values.iter_mut().rev() {
                let digit = (rest % 27) as u8;
                rest /= 27;
                *v = [digit / 9, (digit / 3) % 3, digit % 3];
            }
            let mut powers = [0i64; M as usize];
            for (w, letters) in &terms {
                let e = letters
                    .iter()
                    .zip(&values)
                    .map(|(&l, v)| v[l] as u32)
                    .sum::<u32>()
                    + w;
                powers[3 * (e % 3) as usize] += 1;
            }
            let value = CycInt::from_powers(M, &powers).unwrap();
            let norm = value.norm_squared().scale(9);
            let ratio_index = values.iter().fold(0usize, |acc, v| {
                acc * 9 + space.option_of(&[(v[1] + 3 - v[0]) % 3, (v[2] + 3 - v[0]) % 3])
            });
            if norm != ratio_norms[ratio_index] {
                mismatches.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            let shadow = space.real_shadow(&norm);
            tally.offer(norm, shadow, index);
        }
        tally
    });

    let best = tally.best.expect("nonempty search space");
    let mut argmax = vec![Vec::new(); n];
    let mut rest = best.index;
    for slot in argmax.iter_mut().rev() {
        let digit = (rest % 27) as u8;
        rest /= 27;
        *slot = vec![digit / 9, (digit / 3) % 3, digit % 3];
    }
    let options: Vec<usize> = argmax
        .iter()
        .map(|v| space.option_of(&[(v[1] + 3 - v[0]) % 3, (v[2] + 3 - v[0]) % 3]))
        .collect();
    Ok(SearchResult {
        d: 3,
        n,
        mode: SearchMode::Full,
        max_magnitude: best.shadow.max(0.0).sqrt() / 3.0,
        max_scaled_norm: best.norm,
        max_class: summarize_terms(&space, &options),
        argmax,
        num_maximizers: tally.count,
        assignments_scanned: tally.scanned,
        uniform_is_maximizer: best.index == 0,
        reduction_check: Some(ReductionCheck {
            checked: tally.scanned,
            mismatches: mismatches.into_inner(),
        }),
    })
}

/// Classical values reachable by pure per-site permutations of the factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermutationClassReport {
    pub n: usize,
    /// Largest `(1/3)Σ_r Π_i |F_r|` over the class: the triangle-inequality bound.
    pub bound: f64,
    /// Largest `|v(M₀)|` actually attained in the class.
    pub attained: f64,
    /// Per-site `(R, S)` exponents of the first assignment reaching `bound`.
    pub bound_argmax: Vec<[u8; 2]>,
    pub attained_argmax: Vec<[u8; 2]>,
    /// `|v|` with every site permuted the same way.
    pub all_sites_value: f64,
    pub assignments: u64,
}

/// Scans assignments whose sites take the identity row `(1, 1)` or a pure cyclic
/// permutation row `(ω, ω²)` / `(ω², ω)`, permuting a proper nonempty subset of sites.
pub fn permutation_class_max(n: usize) -> Result<PermutationClassReport> {
    if !(2..=12).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "permutation class needs 2 <= N <= 12, got {n}"
        )));
    }
    let space = RatioSpace::new(3)?;
    let rows = [
        space.option_of(&[0, 0]),
        space.option_of(&[1, 2]),
        space.option_of(&[2, 1]),
    ];
    let mut report = PermutationClassReport {
        n,
        bound: f64::NEG_INFINITY,
        attained: f64::NEG_INFINITY,
        bound_argmax: Vec::new(),
        attained_argmax: Vec::new(),
        all_sites_value: 0.0,
        assignments: 0,
    };
    for pattern in 0..3u64.pow(n as u32) {
        let mut rest = pattern;
        let mut choice = vec![0usize; n];
        for c in choice.iter_mut().rev() {
            *c = (rest % 3) as usize;
            rest /= 3;
        }
        let permuted = choice.iter().filter(|&&c| c != 0).count();
        if permuted == 0 || permuted == n {
            continue;
        }
        report.assignments += 1;
        let options: Vec<usize> = choice.iter().map(|&c| rows[c]).collect();
        let attained = space.scaled_value(&options).magnitude() / 3.0;
        let bound: f64 = (0..3)
            .map(|r| {
                options
                    .iter()
                    .map(|&o| space.factor(o, r).magnitude())
                    .product::<f64>()
            })
            .sum::<f64>()
            / 3.0;
        let encode = |opts: &[usize]| {
            opts.iter()
                .map(|&o| {
                    let e = space.exponents(o);
                    [e[0], e[1]]
                })
                .collect()
        };
        if bound > report.bound + TOLERANCE {
            report.bound = bound;
            report.bound_argmax = encode(&options);
        }
        if attained > report.attained + TOLERANCE {
            report.attained = attained;
            report.attained_argmax = encode(&options);
        }
    }
    let all_same = vec![rows[1]; n];
    report.all_sites_value = space.scaled_value(&all_same).magnitude() / 3.0;
    Ok(report)
}

/// `N_GHZ`: number of words at circle positions 3 and 6.
///
/// Also checks the identity `N_GHZ = (2/3)(M_Q − M_C)`.
pub fn ghz_contradiction_count(n: usize) -> Result<u64> {
    let counts = counts_by_position(3, n)?;
    let count = counts.at(3) + counts.at(6);
    let expected = 2 * (quantum_value(n) - uniform_value(n));
    if 3 * count as i64 != expected {
        return Err(Error::VerificationMismatch(format!(
            "N={n}: {count} words at k=3,6 but (2/3)(M_Q - M_C) = {}/3",
            expected
        )));
    }
    Ok(count)
}

/// A single GHZ contradiction: quantum eigenvalue versus the uniform prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub word: SettingWord,
    pub position: u32,
    pub quantum: CycInt,
    pub hidden_variable: CycInt,
    pub contradiction: bool,
}

/// Witness record for a word at circle position 3 or 6.
pub fn contradiction_witness(word: &SettingWord) -> Result<Witness> {
    if word.dimension() != 3 {
        return Err(Error::InvalidDimension(word.dimension()));
    }
    let position = word.position();
    if position != 3 && position != 6 {
        return Err(Error::InvalidParameter(format!(
            "word {word} sits at position {position}, not 3 or 6"
        )));
    }
    let quantum = eigenvalue_on_ghz(word, 0)?;
    let hidden_variable = HvAssignment::uniform(word.len()).word_value(word);
    let contradiction = quantum != hidden_variable;
    Ok(Witness {
        word: word.clone(),
        position,
        quantum,
        hidden_variable,
        contradiction,
    })
}

/// Witnesses for every word at positions 3 and 6.
pub fn all_witnesses(n: usize) -> Result<Vec<Witness>> {
    let total = 3u64
        .checked_pow(n as u32)
        .filter(|&t| t <= crate::mermin::MAX_WORDS)
        .ok_or_else(|| Error::InvalidParameter(format!("N = {n} too large")))?;
    (0..total)
        .map(|i| SettingWord::from_index(3, n, i))
        .filter(|w| matches!(w.position(), 3 | 6))
        .map(|w| contradiction_witness(&w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_values() {
        let op3 = build_mermin(3, 3, 0).unwrap();
        let v = hv_value_direct(&HvAssignment::uniform(3), &op3).unwrap();
        assert_eq!(v.as_integer(), Some(6));
        let op2 = build_mermin(3, 2, 0).unwrap();
        assert_eq!(
            hv_value_direct(&HvAssignment::uniform(2), &op2)
                .unwrap()
                .as_integer(),
            Some(3)
        );
        let op1 = build_mermin(3, 1, 0).unwrap();
        for e in 0..3u8 {
            let a = HvAssignment::new(vec![[e, 1, 2]]).unwrap();
            let v = hv_value_direct(&a, &op1).unwrap();
            assert_eq!(v, PhaseExponent::new(3 * e as i64, 9).to_cycint());
        }
    }

    #[test]
    fn product_values() {
        let v3 = hv_value_product(&[0; 3], &[0; 3]).unwrap();
        assert_eq!(v3.scaled.as_integer(), Some(18));
        assert!((v3.magnitude - 6.0).abs() < 1e-12);
        assert!((hv_value_product(&[0; 4], &[0; 4]).unwrap().magnitude - 15.0).abs() < 1e-12);
        assert_eq!(
            hv_value_product(&[0; 2], &[0; 2])
                .unwrap()
                .scaled
                .as_integer(),
            Some(9)
        );
        assert!(hv_value_product(&[0; 2], &[0; 3]).is_err());
        assert!(hv_value_product(&[3], &[0]).is_err());
    }

    #[test]
    fn recurrence_matches_float() {
        for n in 1..=20 {
            let exact = power_sum(n) as f64 / 3.0;
            let float = uniform_value_float(n);
            assert!(
                (exact - float).abs() < 1e-6 * float.max(1.0),
                "N={n}: {exact} vs {float}"
            );
        }
        let mc: Vec<i64> = (2..=7).map(uniform_value).collect();
        assert_eq!(mc, vec![3, 6, 15, 36, 90, 225]);
    }

    #[test]
    fn contradiction_counts() {
        let got: Vec<u64> = [2, 3, 4, 6, 7]
            .iter()
            .map(|&n| ghz_contradiction_count(n).unwrap())
            .collect();
        assert_eq!(got, vec![0, 2, 8, 102, 336]);
    }

    #[test]
    fn witnesses() {
        let yyy = contradiction_witness(&SettingWord::parse_qutrit("YYY").unwrap()).unwrap();
        assert_eq!(yyy.quantum, PhaseExponent::new(3, 9).to_cycint());
        assert_eq!(yyy.hidden_variable.as_integer(), Some(1));
        assert!(yyy.contradiction);
        let vvv = contradiction_witness(&SettingWord::parse_qutrit("VVV").unwrap()).unwrap();
        assert_eq!(vvv.quantum, PhaseExponent::new(6, 9).to_cycint());
        assert!(vvv.contradiction);
        assert!(contradiction_witness(&SettingWord::parse_qutrit("XYV").unwrap()).is_err());
        assert_eq!(all_witnesses(4).unwrap().len(), 8);
    }

    #[test]
    fn ratios() {
        assert!((violation_ratio(3) - 1.5).abs() < 1e-12);
        assert!((violation_ratio(2) - 1.0).abs() < 1e-12);
        assert!((violation_ratio(7) - 3.24).abs() < 1e-12);
    }

    #[test]
    fn factor_table_first_rows() {
        let table = factor_table();
        let shown: Vec<String> = table[0].entries.iter().map(FactorEntry::display).collect();
        assert_eq!(shown, vec!["A", "B", "-C"]);
        let shown: Vec<String> = table[1].entries.iter().map(FactorEntry::display).collect();
        assert_eq!(shown, vec!["A(40°)", "B(-80°)", "C(-20°)"]);
    }
}
