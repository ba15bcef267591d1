//! Odd local dimension `d` with `d` measurement settings.
//!
//! The observables are `W_j = Z^{j/d} X Z^{−j/d}` for `j = −(d−1)/2 … (d−1)/2`,
//! the operator keeps words at circle positions `k ≡ 0 (mod d)`, and its
//! product form mixes the settings with `ω^{rj} α^{−j}`, `r = 0 … d−1`. At
//! `d = 3` everything reduces to the qutrit construction; for larger `d` the
//! observable set and weights are an extrapolation of it.
//!
//! Whether the uniform hidden-variable assignment is optimal for `d > 3` is an
//! open question; [`conjecture_search`] reports the outcome without assuming it.

use num_complex::Complex64;
use serde::Serialize;

use crate::cyclotomic::{validate_dimension, CycInt};
use crate::error::{Error, Result};
use crate::hidden_variables::search::{site_factor, TermSummary};
use crate::hidden_variables::{ratio_search, TOLERANCE};
use crate::mermin::{build_mermin, verify_eigenvalue, MerminOperator};

/// Cap on `d^{N−1}` for operator construction.
pub const MAX_TERMS: u64 = 10_000_000;
/// Cap on `d^N` for eigenvalue verification.
pub const MAX_EIGEN_WORDS: u64 = 1_000_000;
/// Cap on `d^{(d−1)N}` for the ratio-space search.
pub const CONJECTURE_SEARCH_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneralConfig {
    pub d: u32,
    /// Number of settings; always equal to `d`.
    pub s: u32,
    pub n: usize,
}

impl GeneralConfig {
    pub fn new(d: u32, n: usize) -> Result<Self> {
        validate_dimension(d)?;
        if d > 7 {
            return Err(Error::InvalidDimension(d));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        Ok(Self { d, s: d, n })
    }

    fn words(&self, exponent: usize) -> u64 {
        (self.d as u64)
            .checked_pow(exponent as u32)
            .unwrap_or(u64::MAX)
    }
}

pub fn build_general_mermin(cfg: &GeneralConfig) -> Result<MerminOperator> {
    let terms = cfg.words(cfg.n - 1);
    if terms > MAX_TERMS {
        return Err(Error::SearchSpaceTooLarge {
            size: terms as u128,
            cap: MAX_TERMS as u128,
        });
    }
    build_mermin(cfg.d, cfg.n, 0)
}

/// Exact eigenvalue on the `d`-level GHZ state; expected `d^{N−1}`.
pub fn verify_general_eigenvalue(cfg: &GeneralConfig) -> Result<CycInt> {
    let words = cfg.words(cfg.n);
    if words > MAX_EIGEN_WORDS {
        return Err(Error::SearchSpaceTooLarge {
            size: words as u128,
            cap: MAX_EIGEN_WORDS as u128,
        });
    }
    verify_eigenvalue(&build_general_mermin(cfg)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformFactor {
    /// Mixing index `r` of the product term.
    pub r: u32,
    pub exact: CycInt,
    pub real: f64,
    pub imag: f64,
    pub magnitude: f64,
}

/// Per-site factors at the uniform assignment, sorted by magnitude, largest first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformFactorSet {
    pub d: u32,
    pub factors: Vec<UniformFactor>,
}

impl UniformFactorSet {
    pub fn largest(&self) -> f64 {
        self.factors[0].magnitude
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.factors.iter().map(|f| f.magnitude).collect()
    }

    /// `(1/d)|Σ_r F_r^N|` from the float values.
    pub fn uniform_value(&self, n: usize) -> f64 {
        let sum: Complex64 = self
            .factors
            .iter()
            .map(|f| Complex64::new(f.real, f.imag).powi(n as i32))
            .sum();
        sum.norm() / self.d as f64
    }
}

pub fn uniform_factors(d: u32) -> Result<UniformFactorSet> {
    let uniform = vec![0u8; d as usize - 1];
    let mut factors: Vec<UniformFactor> = (0..d)
        .map(|r| {
            let exact = site_factor(d, &uniform, r)?;
            let z = exact.to_complex();
            Ok(UniformFactor {
                r,
                exact,
                real: z.re,
                imag: z.im,
                magnitude: z.norm(),
            })
        })
        .collect::<Result<_>>()?;
    factors.sort_by(|a, b| b.magnitude.total_cmp(&a.magnitude));
    Ok(UniformFactorSet { d, factors })
}

/// Exact classical value at the uniform point, `(1/d)|Σ_r F_r(1)^N|`.
pub fn uniform_value_exact(d: u32, n: usize) -> Result<f64> {
    let uniform = vec![0u8; d as usize - 1];
    let m = d * d;
    let mut sum = CycInt::zero(m)?;
    for r in 0..d {
        let f = site_factor(d, &uniform, r)?;
        let mut product = CycInt::one(m)?;
        for _ in 0..n {
            product = &product * &f;
        }
        sum = &sum + &product;
    }
    Ok(sum.magnitude() / d as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub d: u32,
    pub n: usize,
    pub max_magnitude: f64,
    pub uniform_value: f64,
    pub uniform_optimal: bool,
    /// `max − uniform`; zero when the uniform point is a maximizer.
    pub gap: f64,
    pub quantum_value: u64,
    pub num_maximizers: u64,
    pub assignments_scanned: u64,
    /// Per site, the `d−1` ratio exponents of the lexicographically smallest maximizer.
    pub argmax: Vec<Vec<u8>>,
    pub max_class: Vec<TermSummary>,
}

/// Exhaustive ratio-space search probing whether the uniform assignment is optimal.
pub fn conjecture_search(d: u32, n: usize, workers: usize) -> Result<ConjectureReport> {
    let cfg = GeneralConfig::new(d, n)?;
    let result = ratio_search(cfg.d, cfg.n, CONJECTURE_SEARCH_CAP, workers)?;
    let uniform_value = uniform_value_exact(d, n)?;
    let gap = result.max_magnitude - uniform_value;
    Ok(ConjectureReport {
        d,
        n,
        max_magnitude: result.max_magnitude,
        uniform_value,
        uniform_optimal: result.uniform_is_maximizer,
        gap: if result.uniform_is_maximizer || gap.abs() < TOLERANCE {
            0.0
        } else {
            gap
        },
        quantum_value: (d as u64).pow(n as u32 - 1),
        num_maximizers: result.num_maximizers,
        assignments_scanned: result.assignments_scanned,
        argmax: result.argmax,
        max_class: result.max_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mermin::expand_general_identity;

    #[test]
    fn config_validation() {
        assert!(GeneralConfig::new(5, 2).is_ok());
        assert!(GeneralConfig::new(4, 2).is_err());
        assert!(GeneralConfig::new(11, 2).is_err());
        assert!(GeneralConfig::new(5, 0).is_err());
        assert_eq!(GeneralConfig::new(5, 3).unwrap().s, 5);
    }

    #[test]
    fn term_counts() {
        let two = build_general_mermin(&GeneralConfig::new(5, 2).unwrap()).unwrap();
        assert_eq!(two.len(), 5);
        assert!(two.terms().iter().all(|t| t.word.position() == 0));
        assert_eq!(
            build_general_mermin(&GeneralConfig::new(5, 3).unwrap())
                .unwrap()
                .len(),
            25
        );
        assert_eq!(
            build_general_mermin(&GeneralConfig::new(3, 4).unwrap()).unwrap(),
            build_mermin(3, 4, 0).unwrap()
        );
    }

    #[test]
    fn eigenvalues() {
        let ev = |d, n| {
            verify_general_eigenvalue(&GeneralConfig::new(d, n).unwrap())
                .unwrap()
                .as_integer()
        };
        assert_eq!(ev(5, 2), Some(5));
        assert_eq!(ev(5, 3), Some(25));
        assert_eq!(ev(3, 4), Some(27));
        assert_eq!(ev(7, 3), Some(49));
    }

    #[test]
    fn product_form_survival_d5() {
        let report = expand_general_identity(5, 2).unwrap();
        assert!(report.holds(), "{:?}", report.mismatches);
        assert_eq!((report.survived, report.vanished), (5, 20));
    }

    #[test]
    fn factor_magnitudes() {
        let three = uniform_factors(3).unwrap();
        let mags = three.magnitudes();
        assert!((mags[0] - 2.532).abs() < 1e-3);
        assert!((mags[1] - 1.347).abs() < 1e-3);
        assert!((mags[2] - 0.879).abs() < 1e-3);
        let five = uniform_factors(5).unwrap();
        assert!((five.largest() - 4.6898).abs() < 1e-3);
        let parseval: f64 = five.magnitudes().iter().map(|m| m * m).sum();
        assert!((parseval - 25.0).abs() < 1e-6);
        assert!(five.factors.iter().all(|f| f.imag.abs() < 1e-12));
    }

    #[test]
    fn uniform_value_routes_agree() {
        for (d, n) in [(3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
            let exact = uniform_value_exact(d, n).unwrap();
            let float = uniform_factors(d).unwrap().uniform_value(n);
            assert!((exact - float).abs() < 1e-9, "d={d} N={n}");
        }
    }
}
