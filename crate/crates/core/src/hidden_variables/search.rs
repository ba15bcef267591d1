//! Exhaustive search over hidden-variable ratio assignments.
//!
//! For local dimension `d`, the classical value of the Mermin operator is
//! `v = (1/d) Σ_r Π_i F_r(ρ_i)` up to a global phase, where `ρ_i` collects the
//! `d−1` ratios `v(W_j)/v(X)` at site `i` and
//! `F_r(ρ) = Σ_j ω^{rj} α^{−j} ρ_j`. The engine scans every assignment in
//! lexicographic order, keeping exact prefix products.
//!
//! The space is cut into a fixed number of chunks (independent of the worker
//! count) and chunk results are merged in order, so every field of the result
//! is identical for any number of workers.

use std::cmp::Ordering;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{validate_dimension, CycInt, PhaseExponent};
use crate::error::{Error, Result};
use crate::mermin::mixing_phase;
use crate::qudit_ops::letter_rotation;

/// Relative tolerance for float-shadow comparisons of `|d·v|²`.
pub const TOLERANCE: f64 = 1e-9;

/// Minimum number of chunks the search space is split into.
const MIN_CHUNKS: u64 = 64;

/// `F_r(ρ) = Σ_j ω^{rj} α^{−j} ρ_j` for one site, with `ρ_X = 1` and the other
/// ratios given as `ω`-exponents in alphabet order of the non-`X` letters.
pub fn site_factor(d: u32, ratio_exponents: &[u8], r: u32) -> Result<CycInt> {
    validate_dimension(d)?;
    if ratio_exponents.len() != d as usize - 1 {
        return Err(Error::DimensionMismatch {
            expected: format!("{} ratios", d - 1),
            found: ratio_exponents.len().to_string(),
        });
    }
    let m = d * d;
    let mut powers = vec![0i64; m as usize];
    for a in 0..d {
        let ratio = if a == 0 {
            0
        } else {
            ratio_exponents[a as usize - 1] as i64
        };
        let phase = mixing_phase(d, r, letter_rotation(d, a))
            .compose(PhaseExponent::new(ratio * d as i64, m));
        powers[phase.exponent() as usize] += 1;
    }
    CycInt::from_powers(m, &powers)
}

/// Per-site factor table `F_r(ρ)` for every ratio tuple `ρ`.
#[derive(Debug, Clone)]
pub struct RatioSpace {
    d: u32,
    /// `factors[option][r]`
    factors: Vec<Vec<CycInt>>,
    /// Float shadows of `factors`.
    shadows: Vec<Vec<Complex64>>,
    cos_table: Vec<f64>,
    sin_table: Vec<f64>,
    labels: Vec<f64>,
}

impl RatioSpace {
    pub fn new(d: u32) -> Result<Self> {
        validate_dimension(d)?;
        let m = d * d;
        let options = (d as usize).pow(d - 1);
        let mut factors = Vec::with_capacity(options);
        for option in 0..options {
            let exps = Self::exponents_of(d, option);
            factors.push(
                (0..d)
                    .map(|r| site_factor(d, &exps, r))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let cos_table = (0..m)
            .map(|j| (std::f64::consts::TAU * j as f64 / m as f64).cos())
            .collect();
        let shadows = factors
            .iter()
            .map(|row| row.iter().map(CycInt::to_complex).collect())
            .collect();
        let sin_table = (0..m)
            .map(|j| (std::f64::consts::TAU * j as f64 / m as f64).sin())
            .collect();
        let mut labels: Vec<f64> = factors[0].iter().map(CycInt::magnitude).collect();
        labels.sort_by(|a, b| b.total_cmp(a));
        Ok(Self {
            d,
            factors,
            shadows,
            cos_table,
            sin_table,
            labels,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    /// Number of ratio tuples per site, `d^{d−1}`.
    pub fn options(&self) -> usize {
        self.factors.len()
    }

    /// `F_r` for the given per-site option.
    pub fn factor(&self, option: usize, r: u32) -> &CycInt {
        &self.factors[option][r as usize]
    }

    /// Ratio exponents (powers of `ω`) of an option, in alphabet order of the non-`X` letters.
    pub fn exponents(&self, option: usize) -> Vec<u8> {
        Self::exponents_of(self.d, option)
    }

    fn exponents_of(d: u32, mut option: usize) -> Vec<u8> {
        let mut out = vec![0u8; d as usize - 1];
        for slot in out.iter_mut().rev() {
            *slot = (option % d as usize) as u8;
            option /= d as usize;
        }
        out
    }

    pub fn option_of(&self, exponents: &[u8]) -> usize {
        exponents.iter().fold(0usize, |acc, &e| {
            acc * self.d as usize + (e as usize % self.d as usize)
        })
    }

    /// Exact `Σ_r Π_i F_r(option_i)`, i.e. `d·v` up to a global phase.
    pub fn scaled_value(&self, options: &[usize]) -> CycInt {
        let m = self.d * self.d;
        let mut sum = CycInt::zero(m).unwrap();
        for r in 0..self.d {
            let mut product = CycInt::one(m).unwrap();
            for &o in options {
                product = &product * self.factor(o, r);
            }
            sum = &sum + &product;
        }
        sum
    }

    /// Real part of the float shadow via a cached cosine table.
    pub(crate) fn real_shadow(&self, x: &CycInt) -> f64 {
        x.coeffs()
            .iter()
            .zip(&self.cos_table)
            .map(|(&c, &cos)| c as f64 * cos)
            .sum()
    }

    /// Squared modulus of the float shadow.
    pub(crate) fn norm_shadow(&self, x: &CycInt) -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for ((&c, &cos), &sin) in x.coeffs().iter().zip(&self.cos_table).zip(&self.sin_table) {
            re += c as f64 * cos;
            im += c as f64 * sin;
        }
        re * re + im * im
    }

    /// Magnitudes of the factors at the uniform point, largest first.
    pub fn label_magnitudes(&self) -> &[f64] {
        &self.labels
    }

    /// Letter label (`A`, `B`, …) of a magnitude, if it matches a uniform factor.
    pub fn label_of(&self, magnitude: f64) -> Option<char> {
        self.labels
            .iter()
            .position(|l| (l - magnitude).abs() < 1e-9)
            .map(|i| (b'A' + i as u8) as char)
    }
}

/// A candidate maximum: exact `|d·v|²`, its float shadow, and the assignment index.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub norm: CycInt,
    pub shadow: f64,
    pub index: u64,
}

/// Compares two exact real values through their shadows, falling back to exact
/// arithmetic when they agree within [`TOLERANCE`].
pub(crate) fn compare_norms(a: &CycInt, a_shadow: f64, b: &CycInt, b_shadow: f64) -> Ordering {
    let scale = a_shadow.abs().max(b_shadow.abs()).max(1.0);
    if (a_shadow - b_shadow).abs() > TOLERANCE * scale {
        return a_shadow.total_cmp(&b_shadow);
    }
    let diff = a - b;
    if diff.is_zero() {
        Ordering::Equal
    } else {
        diff.to_complex().re.total_cmp(&0.0)
    }
}

/// Running maximum over a lexicographically ordered stretch of assignments.
#[derive(Debug, Clone, Default)]
pub(crate) struct Tally {
    pub best: Option<Candidate>,
    pub count: u64,
    pub scanned: u64,
}

impl Tally {
    /// Offers an assignment whose exact norm is computed only if its shadow
    /// can reach the current maximum.
    pub fn offer_lazy(&mut self, shadow: f64, index: u64, norm: impl FnOnce() -> CycInt) {
        if let Some(b) = &self.best {
            let scale = shadow.abs().max(b.shadow.abs()).max(1.0);
            if shadow < b.shadow - TOLERANCE * scale {
                self.scanned += 1;
                return;
            }
        }
        self.offer(norm(), shadow, index);
    }

    /// Offers an assignment; callers must offer indices in increasing order.
    pub fn offer(&mut self, norm: CycInt, shadow: f64, index: u64) {
        self.scanned += 1;
        let ord = match &self.best {
            None => Ordering::Greater,
            Some(b) => compare_norms(&norm, shadow, &b.norm, b.shadow),
        };
        match ord {
            Ordering::Greater => {
                self.best = Some(Candidate {
                    norm,
                    shadow,
                    index,
                });
                self.count = 1;
            }
            Ordering::Equal => self.count += 1,
            Ordering::Less => {}
        }
    }

    /// Merges a tally covering later indices.
    pub fn merge(self, later: Tally) -> Tally {
        let scanned = self.scanned + later.scanned;
        let (best, count) = match (self.best, later.best) {
            (None, b) => (b, later.count),
            (a, None) => (a, self.count),
            (Some(a), Some(b)) => match compare_norms(&b.norm, b.shadow, &a.norm, a.shadow) {
                Ordering::Greater => (Some(b), later.count),
                Ordering::Equal => (Some(a), self.count + later.count),
                Ordering::Less => (Some(a), self.count),
            },
        };
        Tally {
            best,
            count,
            scanned,
        }
    }
}

/// Smallest prefix length whose chunk count reaches [`MIN_CHUNKS`].
pub(crate) fn prefix_len(per_site: u64, n: usize) -> usize {
    let mut len = 0;
    let mut chunks = 1u64;
    while len < n && chunks < MIN_CHUNKS {
        chunks *= per_site;
        len += 1;
    }
    len
}

/// Runs `scan(chunk)` for every chunk on a pool of `workers` threads and merges in order.
pub(crate) fn run_chunks<F>(chunks: u64, workers: usize, scan: F) -> Tally
where
    F: Fn(u64) -> Tally + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let tallies: Vec<Tally> = pool.install(|| (0..chunks).into_par_iter().map(&scan).collect());
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

/// Result of a ratio-space scan.
#[derive(Debug, Clone)]
pub(crate) struct RatioScan {
    pub tally: Tally,
    pub best_options: Vec<usize>,
}

/// Scans all `options^n` ratio assignments.
pub(crate) fn scan_ratio_space(
    space: &RatioSpace,
    n: usize,
    cap: u128,
    workers: usize,
) -> Result<RatioScan> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let per_site = space.options() as u64;
    let size = (per_site as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    let len = prefix_len(per_site, n);
    let chunks = per_site.pow(len as u32);
    let d = space.d;
    let m = d * d;

    let tally = run_chunks(chunks, workers, |chunk| {
        let mut products: Vec<Vec<CycInt>> = vec![vec![CycInt::one(m).unwrap(); d as usize]; n + 1];
        let mut rest = chunk;
        let mut prefix = vec![0usize; len];
        for slot in prefix.iter_mut().rev() {
            *slot = (rest % per_site) as usize;
            rest /= per_site;
        }
        for (depth, &o) in prefix.iter().enumerate() {
            for r in 0..d {
                products[depth + 1][r as usize] = &products[depth][r as usize] * space.factor(o, r);
            }
        }
        let mut tally = Tally::default();
        descend(space, chunk, &mut products[len..], &mut tally);
        tally
    });

    let best_index = tally.best.as_ref().map(|c| c.index).unwrap_or(0);
    let mut best_options = vec![0usize; n];
    let mut rest = best_index;
    for slot in best_options.iter_mut().rev() {
        *slot = (rest % per_site) as usize;
        rest /= per_site;
    }
    Ok(RatioScan {
        tally,
        best_options,
    })
}

/// Depth-first scan; `products[0]` holds the prefix products for the sites already fixed.
fn descend(space: &RatioSpace, index: u64, products: &mut [Vec<CycInt>], tally: &mut Tally) {
    let per_site = space.options() as u64;
    match products.len() {
        1 => {
            // every site fixed by the chunk prefix
            let sum = sum_terms(&products[0]);
            let shadow = space.norm_shadow(&sum);
            tally.offer_lazy(shadow, index, || sum.norm_squared());
        }
        2 => {
            // last site: float shadows first, exact products only for contenders
            let prefix = &products[0];
            let prefix_z: Vec<Complex64> = prefix.iter().map(CycInt::to_complex).collect();
            for o in 0..space.options() {
                let z: Complex64 = prefix_z
                    .iter()
                    .zip(&space.shadows[o])
                    .map(|(p, f)| p * f)
                    .sum();
                tally.offer_lazy(z.norm_sqr(), index * per_site + o as u64, || {
                    let mut sum = &prefix[0] * &space.factors[o][0];
                    for (p, f) in prefix[1..].iter().zip(&space.factors[o][1..]) {
                        sum = &sum + &(p * f);
                    }
                    sum.norm_squared()
                });
            }
        }
        _ => {
            let (head, tail) = products.split_at_mut(1);
            for o in 0..space.options() {
                for r in 0..space.d as usize {
                    tail[0][r] = &head[0][r] * space.factor(o, r as u32);
                }
                descend(space, index * per_site + o as u64, tail, tally);
            }
        }
    }
}

fn sum_terms(terms: &[CycInt]) -> CycInt {
    let mut sum = terms[0].clone();
    for p in &terms[1..] {
        sum = &sum + p;
    }
    sum
}

/// Summary of one product term `Π_i F_r(ρ_i)` at an assignment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermSummary {
    pub r: u32,
    pub magnitude: f64,
    pub phase_degrees: f64,
    /// Factor labels, e.g. `"A^2 B"`; empty when a factor matches no uniform magnitude.
    pub factors: String,
}

pub(crate) fn summarize_terms(space: &RatioSpace, options: &[usize]) -> Vec<TermSummary> {
    let m = space.d * space.d;
    (0..space.d)
        .map(|r| {
            let mut counts = vec![0usize; space.labels.len()];
            let mut labelled = true;
            let mut product = CycInt::one(m).unwrap();
            for &o in options {
                let f = space.factor(o, r);
                match space.label_of(f.magnitude()) {
                    Some(c) => counts[(c as u8 - b'A') as usize] += 1,
                    None => labelled = false,
                }
                product = &product * f;
            }
            let z = product.to_complex();
            let factors = if labelled {
                counts
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(i, &c)| {
                        let l = (b'A' + i as u8) as char;
                        if c == 1 {
                            l.to_string()
                        } else {
                            format!("{l}^{c}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            } else {
                String::new()
            };
            TermSummary {
                r,
                magnitude: z.norm(),
                phase_degrees: round_degrees(z.arg().to_degrees()),
                factors,
            }
        })
        .collect()
}

/// Rounds to 1e−9 degrees and maps −180 to 180 and −0 to 0.
pub(crate) fn round_degrees(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == -180.0 {
        180.0
    } else if r == 0.0 {
        0.0
    } else {
        r
    }
}
