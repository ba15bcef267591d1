//! The Mermin operator as a weighted list of setting words.
//!
//! Variant `c` collects every word whose circle position satisfies
//! `k ≡ c (mod d)` and weights it by `ω^{−(k−c)/d}`, so that each term has
//! `|Ψ_c⟩` as an eigenstate with eigenvalue exactly one. For qutrits and
//! `c = 0` these are the words at `k = 0, 3, 6` with weights `1, ω², ω`.
//!
//! The variants `c = 1, 2` follow the same shifted rule for every `N`; the
//! construction is only drawn explicitly for three and four qutrits, so larger
//! `N` for those variants is an extrapolation by rotational covariance.

use serde::Serialize;

use crate::cyclotomic::{validate_dimension, CycInt, PhaseExponent};
use crate::error::{Error, Result};
use crate::qudit_ops::{apply_to_label, ghz_state, letter_rotation, SettingWord, StateVector};

/// Upper bound on the number of words enumerated when building an operator.
pub const MAX_WORDS: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub word: SettingWord,
    /// Root-of-unity weight `α^e`.
    #[serde(serialize_with = "serialize_phase")]
    pub weight: PhaseExponent,
}

fn serialize_phase<S: serde::Serializer>(
    p: &PhaseExponent,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u32(p.exponent())
}

impl Term {
    pub fn weight_value(&self) -> CycInt {
        self.weight.to_cycint()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MerminOperator {
    d: u32,
    n: usize,
    variant: u32,
    terms: Vec<Term>,
}

impl MerminOperator {
    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn sites(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> u32 {
        self.variant
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight_of(&self, word: &SettingWord) -> Option<PhaseExponent> {
        self.terms
            .binary_search_by_key(&word.index(), |t| t.word.index())
            .ok()
            .map(|i| self.terms[i].weight)
    }
}

pub(crate) fn word_count(d: u32, n: usize) -> Option<u64> {
    (d as u64).checked_pow(n as u32)
}

/// Builds the variant-`c` Mermin operator for `N` sites of dimension `d`.
pub fn build_mermin(d: u32, n: usize, variant: u32) -> Result<MerminOperator> {
    validate_dimension(d)?;
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    if variant >= d {
        return Err(Error::InvalidParameter(format!(
            "variant {variant} outside [0, {d})"
        )));
    }
    let total = word_count(d, n)
        .filter(|&t| t <= MAX_WORDS)
        .ok_or(Error::SearchSpaceTooLarge {
            size: (d as u128).saturating_pow(n as u32),
            cap: MAX_WORDS as u128,
        })?;
    let m = d * d;
    let mut terms = Vec::with_capacity((total / d as u64) as usize);
    for index in 0..total {
        let word = SettingWord::from_index(d, n, index);
        let k = word.position();
        if (k as i64 - variant as i64).rem_euclid(d as i64) == 0 {
            // ω^{−(k−c)/d} = α^{c−k}
            let weight = PhaseExponent::new(variant as i64 - k as i64, m);
            terms.push(Term { word, weight });
        }
    }
    Ok(MerminOperator {
        d,
        n,
        variant,
        terms,
    })
}

/// Applies the operator to `|Ψ_c⟩` and returns the exact eigenvalue.
///
/// Fails with [`Error::NotEigenstate`] when the image is not proportional to `|Ψ_c⟩`.
pub fn verify_eigenvalue(op: &MerminOperator) -> Result<CycInt> {
    let target = ghz_state(op.variant as i64, op.d, op.n)?;
    let mut image = StateVector::zero(op.d, op.n)?;
    for term in &op.terms {
        for (label, amp) in target.iter() {
            let (to, phase) = apply_to_label(&term.word, label);
            image.add_amplitude(to, amp.mul_root(phase.compose(term.weight)));
        }
    }
    image.ratio_to(&target).ok_or_else(|| {
        Error::NotEigenstate(format!(
            "Mermin operator d={} N={} variant {} has image with support {}",
            op.d,
            op.n,
            op.variant,
            image.support_size()
        ))
    })
}

/// Number of words at each circle position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionCounts {
    pub d: u32,
    pub counts: Vec<u64>,
}

impl PositionCounts {
    pub fn at(&self, k: u32) -> u64 {
        self.counts[k as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Closed-form multinomial count of words per circle position.
pub fn counts_by_position(d: u32, n: usize) -> Result<PositionCounts> {
    validate_dimension(d)?;
    if word_count(d, n).is_none() || n > 60 {
        return Err(Error::InvalidParameter(format!(
            "N = {n} too large for exact counts"
        )));
    }
    let m = (d * d) as i64;
    let rotations: Vec<i64> = (0..d).map(|a| letter_rotation(d, a) as i64).collect();
    let mut counts = vec![0u64; m as usize];
    // Pascal rows for binomials up to n.
    let mut binom = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = binom[i - 1][j - 1] + if j < i { binom[i - 1][j] } else { 0 };
        }
    }
    // enumerate compositions (n_0, …, n_{d−1}) of n
    #[allow(clippy::too_many_arguments)]
    fn walk(
        letter: usize,
        remaining: usize,
        ways: u128,
        rotation: i64,
        rotations: &[i64],
        binom: &[Vec<u128>],
        m: i64,
        counts: &mut [u64],
    ) {
        if letter == rotations.len() - 1 {
            let k = (rotation + rotations[letter] * remaining as i64).rem_euclid(m) as usize;
            counts[k] += u64::try_from(ways).expect("count overflow");
            return;
        }
        for take in 0..=remaining {
            walk(
                letter + 1,
                remaining - take,
                ways * binom[remaining][take],
                rotation + rotations[letter] * take as i64,
                rotations,
                binom,
                m,
                counts,
            );
        }
    }
    walk(0, n, 1, 0, &rotations, &binom, m, &mut counts);
    Ok(PositionCounts { d, counts })
}

/// Term-by-term comparison of a product-form expansion against [`build_mermin`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub d: u32,
    pub n: usize,
    pub words: u64,
    pub vanished: u64,
    pub survived: u64,
    pub mismatches: Vec<String>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Largest `N` accepted by the identity expansions.
pub const MAX_IDENTITY_SITES: usize = 6;

fn expand_with(
    d: u32,
    n: usize,
    coeff: impl Fn(u32, i32) -> PhaseExponent,
) -> Result<IdentityReport> {
    if n == 0 || n > MAX_IDENTITY_SITES {
        return Err(Error::InvalidParameter(format!(
            "identity expansion supports 1 <= N <= {MAX_IDENTITY_SITES}, got {n}"
        )));
    }
    let op = build_mermin(d, n, 0)?;
    let m = d * d;
    let total = word_count(d, n).expect("small");
    let mut report = IdentityReport {
        d,
        n,
        words: total,
        vanished: 0,
        survived: 0,
        mismatches: Vec::new(),
    };
    for index in 0..total {
        let word = SettingWord::from_index(d, n, index);
        // coefficient of this word in Σ_r ⊗_i (Σ_j c_r(j) W_j)
        let mut coefficient = CycInt::zero(m)?;
        for r in 0..d {
            let mut product = CycInt::one(m)?;
            for j in word.rotations() {
                product = &product * &coeff(r, j).to_cycint();
            }
            coefficient = &coefficient + &product;
        }
        let expected = match op.weight_of(&word) {
            Some(w) => w.to_cycint().scale(d as i64),
            None => CycInt::zero(m)?,
        };
        if coefficient.is_zero() {
            report.vanished += 1;
        } else {
            report.survived += 1;
        }
        if coefficient != expected {
            report.mismatches.push(format!(
                "{word}: expansion gives {coefficient}, operator has {expected}"
            ));
        }
    }
    Ok(report)
}

/// Expands `3·M₀ = Σ_{r=0}^{2} ⊗_i (X_i + ω^r α² Y_i + ω^{−r} α^{−2} V_i)` for qutrits
/// and compares it with the operator built from circle positions.
pub fn expand_identity(n: usize) -> Result<IdentityReport> {
    expand_with(3, n, |r, j| {
        // X: 1, Y: ω^r α², V: ω^{−r} α^{−2}
        PhaseExponent::new(j as i64 * (3 * r as i64 + 2), 9)
    })
}

/// Generalized expansion `d·M₀ = Σ_{r<d} ⊗_i (Σ_j ω^{rj} α^{−j} W_j)`.
pub fn expand_general_identity(d: u32, n: usize) -> Result<IdentityReport> {
    validate_dimension(d)?;
    expand_with(d, n, |r, j| mixing_phase(d, r, j))
}

/// Mixing coefficient `ω^{rj} α^{−j}` of setting `j` in the `r`-th product factor.
pub fn mixing_phase(d: u32, r: u32, j: i32) -> PhaseExponent {
    PhaseExponent::new(j as i64 * (d as i64 * r as i64 - 1), d * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega(p: i64) -> PhaseExponent {
        PhaseExponent::new(3 * p, 9)
    }

    #[test]
    fn three_qutrit_operator() {
        let op = build_mermin(3, 3, 0).unwrap();
        assert_eq!(op.len(), 9);
        let w = |s: &str| op.weight_of(&SettingWord::parse_qutrit(s).unwrap());
        assert_eq!(w("XXX"), Some(omega(0)));
        for p in ["XYV", "XVY", "YXV", "YVX", "VXY", "VYX"] {
            assert_eq!(w(p), Some(omega(0)), "{p}");
        }
        assert_eq!(w("YYY"), Some(omega(2)));
        assert_eq!(w("VVV"), Some(omega(1)));
        assert_eq!(w("XXY"), None);
    }

    #[test]
    fn small_operators() {
        let op = build_mermin(3, 2, 0).unwrap();
        let words: Vec<String> = op.terms().iter().map(|t| t.word.to_string()).collect();
        assert_eq!(words, vec!["XX", "YV", "VY"]);
        assert!(op.terms().iter().all(|t| t.weight.exponent() == 0));
        let op1 = build_mermin(3, 1, 0).unwrap();
        assert_eq!(op1.len(), 1);
        assert_eq!(op1.terms()[0].word.to_string(), "X");
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(build_mermin(3, 0, 0).is_err());
        assert!(build_mermin(3, 2, 3).is_err());
        assert!(build_mermin(4, 2, 0).is_err());
    }

    #[test]
    fn eigenvalues() {
        let ev = |n, c| {
            verify_eigenvalue(&build_mermin(3, n, c).unwrap())
                .unwrap()
                .as_integer()
        };
        assert_eq!(ev(3, 0), Some(9));
        assert_eq!(ev(5, 0), Some(81));
        assert_eq!(ev(4, 1), Some(27));
    }

    #[test]
    fn corrupted_operator_is_not_eigen() {
        let mut op = build_mermin(3, 3, 0).unwrap();
        op.terms[0].word = SettingWord::parse_qutrit("XXY").unwrap();
        assert!(matches!(
            verify_eigenvalue(&op),
            Err(Error::NotEigenstate(_))
        ));
    }

    #[test]
    fn position_counts_examples() {
        let c3 = counts_by_position(3, 3).unwrap();
        assert_eq!((c3.at(0), c3.at(3), c3.at(6)), (7, 1, 1));
        let c4 = counts_by_position(3, 4).unwrap();
        assert_eq!((c4.at(0), c4.at(3), c4.at(6)), (19, 4, 4));
        let c1 = counts_by_position(3, 1).unwrap();
        assert_eq!(c1.counts, vec![1, 1, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn identity_small() {
        let r1 = expand_identity(1).unwrap();
        assert!(r1.holds());
        assert_eq!((r1.survived, r1.vanished), (1, 2));
        let r3 = expand_identity(3).unwrap();
        assert!(r3.holds(), "{:?}", r3.mismatches);
        assert_eq!((r3.words, r3.survived, r3.vanished), (27, 9, 18));
        assert!(expand_identity(7).is_err());
    }
}
