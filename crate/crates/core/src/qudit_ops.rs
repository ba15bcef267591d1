//! Local observables, tensor-product setting words and GHZ states.
//!
//! A local observable `W_j = Z^{j/d} X Z^{-j/d}` is a monomial matrix: it maps
//! basis state `|n⟩` to `|n+1⟩` with the phase `α^{j(1 − d·δ_{n,d−1})}`. For
//! qutrits, `j = 0, +1, −1` give the settings `X`, `Y`, `V`.
//!
//! Basis labels of an `N`-site register are integers in base `d`, site 1 being
//! the least significant digit.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::{validate_dimension, CycInt, PhaseExponent};
use crate::error::{Error, Result};

/// Phase exponent (in units of `α = e^{2πi/d²}`) that `W_j` attaches to `|n⟩ → |n+1⟩`.
pub fn shift_phase(d: u32, rotation: i64, n: u32) -> PhaseExponent {
    let wrap = if n == d - 1 { d as i64 } else { 0 };
    PhaseExponent::new(rotation * (1 - wrap), d * d)
}

/// Rotation index of the `a`-th letter of the local alphabet: `0, 1, …, (d−1)/2, −(d−1)/2, …, −1`.
pub fn letter_rotation(d: u32, a: u32) -> i32 {
    debug_assert!(a < d);
    if a <= (d - 1) / 2 {
        a as i32
    } else {
        a as i32 - d as i32
    }
}

/// Inverse of [`letter_rotation`].
pub fn rotation_letter(d: u32, j: i32) -> u32 {
    j.rem_euclid(d as i32) as u32
}

/// A one-site monomial observable: column `n` has a single entry `α^{phase[n]}` in row `target[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalObservable {
    d: u32,
    rotation: Option<i64>,
    targets: Vec<u32>,
    phases: Vec<PhaseExponent>,
}

impl LocalObservable {
    /// `W_j = Z^{j/d} X Z^{−j/d}`.
    pub fn rotated(d: u32, rotation: i64) -> Result<Self> {
        validate_dimension(d)?;
        Ok(Self {
            d,
            rotation: Some(rotation),
            targets: (0..d).map(|n| (n + 1) % d).collect(),
            phases: (0..d).map(|n| shift_phase(d, rotation, n)).collect(),
        })
    }

    pub fn qutrit_x() -> Self {
        Self::rotated(3, 0).unwrap()
    }

    pub fn qutrit_y() -> Self {
        Self::rotated(3, 1).unwrap()
    }

    pub fn qutrit_v() -> Self {
        Self::rotated(3, -1).unwrap()
    }

    /// An arbitrary monomial observable. `targets` must be a permutation of `0..d`.
    pub fn monomial(d: u32, targets: Vec<u32>, phases: Vec<i64>) -> Result<Self> {
        validate_dimension(d)?;
        if targets.len() != d as usize || phases.len() != d as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("{d} columns"),
                found: format!("{} targets, {} phases", targets.len(), phases.len()),
            });
        }
        let mut seen = vec![false; d as usize];
        for &t in &targets {
            if t >= d || std::mem::replace(&mut seen[t as usize], true) {
                return Err(Error::InvalidParameter(format!(
                    "targets {targets:?} are not a permutation"
                )));
            }
        }
        Ok(Self {
            d,
            rotation: None,
            targets,
            phases: phases
                .into_iter()
                .map(|p| PhaseExponent::new(p, d * d))
                .collect(),
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    /// Rotation index `j`, if this observable was built as `W_j`.
    pub fn rotation(&self) -> Option<i64> {
        self.rotation
    }

    pub fn phase_table(&self) -> &[PhaseExponent] {
        &self.phases
    }

    pub fn targets(&self) -> &[u32] {
        &self.targets
    }

    /// Dense matrix, `matrix[row][col]`.
    pub fn matrix(&self) -> Vec<Vec<CycInt>> {
        let m = self.d * self.d;
        let zero = CycInt::zero(m).unwrap();
        let mut out = vec![vec![zero; self.d as usize]; self.d as usize];
        for col in 0..self.d as usize {
            out[self.targets[col] as usize][col] = self.phases[col].to_cycint();
        }
        out
    }
}

/// Conjugates `matrix` by `diag(α^{step·n})`: entry `(a, b)` gains `α^{step·(a−b)}`.
fn conjugate_by_diagonal(matrix: &[Vec<CycInt>], d: u32, step: i64) -> Vec<Vec<CycInt>> {
    let m = d * d;
    matrix
        .iter()
        .enumerate()
        .map(|(a, row)| {
            row.iter()
                .enumerate()
                .map(|(b, x)| x.mul_root(PhaseExponent::new(step * (a as i64 - b as i64), m)))
                .collect()
        })
        .collect()
}

/// Checks `Z W Z⁻¹ = ω W` exactly on every column of the observable's matrix.
pub fn bloch_check(obs: &LocalObservable) -> bool {
    let d = obs.d;
    let matrix = obs.matrix();
    let conj = conjugate_by_diagonal(&matrix, d, d as i64);
    let omega = PhaseExponent::new(d as i64, d * d);
    matrix
        .iter()
        .zip(&conj)
        .all(|(row, crow)| row.iter().zip(crow).all(|(x, y)| x.mul_root(omega) == *y))
}

/// Checks the defining rotation `Z^{1/d} W Z^{−1/d} = next`, e.g. `X → Y` for qutrits.
pub fn rotation_check(obs: &LocalObservable, next: &LocalObservable) -> bool {
    obs.d == next.d && conjugate_by_diagonal(&obs.matrix(), obs.d, 1) == next.matrix()
}

/// Tensor product of local settings, one rotation index per site.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SettingWord {
    d: u32,
    letters: Vec<i8>,
}

impl SettingWord {
    pub fn new(d: u32, rotations: &[i32]) -> Result<Self> {
        validate_dimension(d)?;
        let half = ((d - 1) / 2) as i32;
        if let Some(j) = rotations.iter().find(|j| j.abs() > half) {
            return Err(Error::InvalidParameter(format!(
                "rotation index {j} outside ±{half}"
            )));
        }
        Ok(Self {
            d,
            letters: rotations.iter().map(|&j| j as i8).collect(),
        })
    }

    /// Parses a qutrit word such as `"XYV"`.
    pub fn parse_qutrit(s: &str) -> Result<Self> {
        let rotations = s
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(0),
                'Y' | 'y' => Ok(1),
                'V' | 'v' => Ok(-1),
                other => Err(Error::InvalidParameter(format!(
                    "unknown qutrit setting '{other}'"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(3, &rotations)
    }

    /// Word number `index` in lexicographic order (site 1 most significant,
    /// letters ordered as in [`letter_rotation`]).
    pub fn from_index(d: u32, n: usize, mut index: u64) -> Self {
        let mut letters = vec![0i8; n];
        for slot in letters.iter_mut().rev() {
            *slot = letter_rotation(d, (index % d as u64) as u32) as i8;
            index /= d as u64;
        }
        Self { d, letters }
    }

    /// Inverse of [`SettingWord::from_index`].
    pub fn index(&self) -> u64 {
        self.letters.iter().fold(0u64, |acc, &j| {
            acc * self.d as u64 + rotation_letter(self.d, j as i32) as u64
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn rotations(&self) -> impl Iterator<Item = i32> + '_ {
        self.letters.iter().map(|&j| j as i32)
    }

    /// Net rotation `Σ j_i`, not reduced.
    pub fn net_rotation(&self) -> i64 {
        self.letters.iter().map(|&j| j as i64).sum()
    }

    /// Circle position `k = Σ j_i mod d²`.
    pub fn position(&self) -> u32 {
        self.net_rotation().rem_euclid((self.d * self.d) as i64) as u32
    }

    /// Every letter rotated one step, `j → j + 1`; `None` if a letter would leave the alphabet.
    pub fn rotated(&self) -> Option<Self> {
        let half = ((self.d - 1) / 2) as i8;
        if self.letters.contains(&half) {
            return None;
        }
        Some(Self {
            d: self.d,
            letters: self.letters.iter().map(|&j| j + 1).collect(),
        })
    }
}

/// Free-function form of [`SettingWord::position`].
pub fn word_position(word: &SettingWord) -> u32 {
    word.position()
}

impl fmt::Display for SettingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 3 {
            for &j in &self.letters {
                let c = match j {
                    0 => 'X',
                    1 => 'Y',
                    _ => 'V',
                };
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|j| j.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl Serialize for SettingWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Unnormalized state with exact amplitudes, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    d: u32,
    n: usize,
    amplitudes: BTreeMap<u64, CycInt>,
}

impl StateVector {
    pub fn zero(d: u32, n: usize) -> Result<Self> {
        validate_dimension(d)?;
        if n == 0 || (d as f64).powi(n as i32) > u64::MAX as f64 / 2.0 {
            return Err(Error::InvalidParameter(format!(
                "unsupported register size N = {n}"
            )));
        }
        Ok(Self {
            d,
            n,
            amplitudes: BTreeMap::new(),
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn sites(&self) -> usize {
        self.n
    }

    /// Adds `amplitude` to the component on `label`, dropping it if the sum vanishes.
    pub fn add_amplitude(&mut self, label: u64, amplitude: CycInt) {
        use std::collections::btree_map::Entry;
        match self.amplitudes.entry(label) {
            Entry::Vacant(e) => {
                if !amplitude.is_zero() {
                    e.insert(amplitude);
                }
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &amplitude;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn amplitude(&self, label: u64) -> Option<&CycInt> {
        self.amplitudes.get(&label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &CycInt)> {
        self.amplitudes.iter().map(|(&k, v)| (k, v))
    }

    pub fn support_size(&self) -> usize {
        self.amplitudes.len()
    }

    /// Label of `|r r … r⟩`.
    pub fn aligned_label(d: u32, n: usize, r: u32) -> u64 {
        let repunit = (0..n).fold(0u64, |acc, _| acc * d as u64 + 1);
        r as u64 * repunit
    }

    /// Returns `λ` with `self = λ·other`, or `None` when the states are not proportional.
    ///
    /// `other` must have a root-of-unity amplitude on its smallest label.
    pub fn ratio_to(&self, other: &StateVector) -> Option<CycInt> {
        if self.d != other.d || self.n != other.n {
            return None;
        }
        let (&label, pivot) = other.amplitudes.iter().next()?;
        let m = self.d * self.d;
        if pivot.norm_squared() != CycInt::one(m).ok()? {
            return None;
        }
        let lambda = match self.amplitudes.get(&label) {
            Some(a) => a * &pivot.conjugate(),
            None => CycInt::zero(m).ok()?,
        };
        if lambda.is_zero() {
            return self.amplitudes.is_empty().then_some(lambda);
        }
        if self.amplitudes.len() != other.amplitudes.len() {
            return None;
        }
        let proportional = other
            .amplitudes
            .iter()
            .all(|(l, b)| self.amplitudes.get(l).is_some_and(|a| *a == &lambda * b));
        proportional.then_some(lambda)
    }
}

/// `|Ψ_k⟩ = Σ_r α^{kr} |r r … r⟩`, without the `1/√d` normalization.
pub fn ghz_state(k: i64, d: u32, n: usize) -> Result<StateVector> {
    let mut state = StateVector::zero(d, n)?;
    let m = d * d;
    for r in 0..d {
        let amp = CycInt::root_of_unity(k * r as i64, m)?;
        state.add_amplitude(StateVector::aligned_label(d, n, r), amp);
    }
    Ok(state)
}

/// Image of one basis label under a word: the shifted label and the accumulated phase.
pub fn apply_to_label(word: &SettingWord, label: u64) -> (u64, PhaseExponent) {
    let d = word.d as u64;
    let m = word.d * word.d;
    let mut rest = label;
    let mut place = 1u64;
    let mut out = 0u64;
    let mut phase = PhaseExponent::zero(m);
    for &j in &word.letters {
        let digit = (rest % d) as u32;
        rest /= d;
        phase = phase.compose(shift_phase(word.d, j as i64, digit));
        out += ((digit as u64 + 1) % d) * place;
        place *= d;
    }
    (out, phase)
}

/// Applies a setting word to a state.
pub fn apply(word: &SettingWord, state: &StateVector) -> Result<StateVector> {
    if word.d != state.d || word.len() != state.n {
        return Err(Error::DimensionMismatch {
            expected: format!("d={}, N={}", state.d, state.n),
            found: format!("d={}, N={}", word.d, word.len()),
        });
    }
    let mut out = StateVector::zero(state.d, state.n)?;
    for (label, amp) in state.iter() {
        let (target, phase) = apply_to_label(word, label);
        out.add_amplitude(target, amp.mul_root(phase));
    }
    Ok(out)
}

/// Exact eigenvalue of `word` on `|Ψ_variant⟩`, computed by applying the word.
///
/// Only words at positions `k ≡ variant (mod d)` are eigenoperators; others are rejected.
pub fn eigenvalue_on_ghz(word: &SettingWord, variant: u32) -> Result<CycInt> {
    let position = word.position();
    if (position as i64 - variant as i64).rem_euclid(word.d as i64) != 0 {
        return Err(Error::NotEigenoperator { position, variant });
    }
    let target = ghz_state(variant as i64, word.d, word.len())?;
    let image = apply(word, &target)?;
    image
        .ratio_to(&target)
        .ok_or_else(|| Error::NotEigenstate(format!("word {word} on GHZ state {variant}")))
}
