//! Exact arithmetic in the ring of cyclotomic integers `Z[α]`, where
//! `α = exp(2πi/m)` and `m = p²` for an odd prime `p`.
//!
//! Elements are kept in the power basis `1, α, …, α^(φ(m)−1)` reduced modulo
//! the cyclotomic polynomial `Φ_{p²}(x) = Σ_{j<p} x^{jp}`. The representation
//! is canonical, so equality and zero-testing are plain coefficient
//! comparisons.
//!
//! All coefficient arithmetic is checked; an overflow panics rather than
//! silently wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported local dimension.
pub const MAX_DIMENSION: u32 = 11;

type Coeffs = SmallVec<[i64; 8]>;

fn is_odd_prime(d: u32) -> bool {
    d >= 3
        && d % 2 == 1
        && (3..d)
            .step_by(2)
            .take_while(|p| p * p <= d)
            .all(|p| !d.is_multiple_of(p))
}

/// Validates a local dimension `d` (odd prime, at most [`MAX_DIMENSION`]).
pub fn validate_dimension(d: u32) -> Result<()> {
    if is_odd_prime(d) && d <= MAX_DIMENSION {
        Ok(())
    } else {
        Err(Error::InvalidDimension(d))
    }
}

/// Returns `d` such that `m = d²`, or an error when `m` is not a supported order.
pub fn dimension_of_order(m: u64) -> Result<u32> {
    let d = (m as f64).sqrt().round() as u64;
    if d * d != m || d > MAX_DIMENSION as u64 || !is_odd_prime(d as u32) {
        return Err(Error::InvalidOrder(m));
    }
    Ok(d as u32)
}

#[inline]
fn ck_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

#[inline]
fn ck_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

/// A root of unity `α^exponent`, with the exponent reduced to `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseExponent {
    exponent: u32,
    order: u32,
}

impl PhaseExponent {
    pub fn new(exponent: i64, order: u32) -> Self {
        assert!(order > 0);
        Self {
            exponent: exponent.rem_euclid(order as i64) as u32,
            order,
        }
    }

    pub fn zero(order: u32) -> Self {
        Self::new(0, order)
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn order(self) -> u32 {
        self.order
    }

    /// Product of the two roots of unity.
    pub fn compose(self, other: Self) -> Self {
        assert_eq!(self.order, other.order, "phase order mismatch");
        Self::new(self.exponent as i64 + other.exponent as i64, self.order)
    }

    pub fn inverse(self) -> Self {
        Self::new(-(self.exponent as i64), self.order)
    }

    pub fn to_cycint(self) -> CycInt {
        CycInt::root_of_unity(self.exponent as i64, self.order)
            .expect("phase order validated on construction")
    }

    /// Angle in degrees, in `[0, 360)`.
    pub fn degrees(self) -> f64 {
        360.0 * self.exponent as f64 / self.order as f64
    }
}

/// Exact element of `Z[α]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    order: u32,
    dim: u32,
    coeffs: Coeffs,
}

/// Free-function form of [`CycInt::root_of_unity`].
pub fn root_of_unity(j: i64, m: u32) -> Result<CycInt> {
    CycInt::root_of_unity(j, m)
}

impl CycInt {
    pub fn zero(m: u32) -> Result<Self> {
        let d = dimension_of_order(m as u64)?;
        Ok(Self {
            order: m,
            dim: d,
            coeffs: SmallVec::from_elem(0, (d * (d - 1)) as usize),
        })
    }

    pub fn from_int(value: i64, m: u32) -> Result<Self> {
        let mut z = Self::zero(m)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    pub fn one(m: u32) -> Result<Self> {
        Self::from_int(1, m)
    }

    /// Canonical representative of `α^j`.
    pub fn root_of_unity(j: i64, m: u32) -> Result<Self> {
        let mut powers = vec![0i64; m as usize];
        dimension_of_order(m as u64)?;
        powers[j.rem_euclid(m as i64) as usize] = 1;
        Self::from_powers(m, &powers)
    }

    /// Builds `Σ_e powers[e]·α^e` from a coefficient vector of length `m`.
    pub fn from_powers(m: u32, powers: &[i64]) -> Result<Self> {
        let d = dimension_of_order(m as u64)?;
        if powers.len() != m as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("{m} power coefficients"),
                found: powers.len().to_string(),
            });
        }
        Ok(Self {
            order: m,
            dim: d,
            coeffs: reduce(d, powers),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Local dimension `d` with `m = d²`.
    pub fn dimension(&self) -> u32 {
        self.dim
    }

    /// Power-basis coefficients, length `φ(m)`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = ck_add(*a, b);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = a.checked_sub(b).expect("cyclotomic coefficient overflow");
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let m = self.order as usize;
        let mut acc: SmallVec<[i64; 32]> = SmallVec::from_elem(0, m);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut e = i + j;
                if e >= m {
                    e -= m;
                }
                acc[e] = ck_add(acc[e], ck_mul(a, b));
            }
        }
        Ok(Self {
            order: self.order,
            dim: self.dim,
            coeffs: reduce(self.dim, &acc),
        })
    }

    /// Multiplies by the integer `k`.
    pub fn scale(&self, k: i64) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = ck_mul(*c, k);
        }
        out
    }

    /// Multiplies by the root of unity `α^phase`; cheaper than a general product.
    pub fn mul_root(&self, phase: PhaseExponent) -> Self {
        assert_eq!(phase.order(), self.order, "phase order mismatch");
        let m = self.order as usize;
        let shift = phase.exponent() as usize;
        let mut acc: SmallVec<[i64; 32]> = SmallVec::from_elem(0, m);
        for (i, &a) in self.coeffs.iter().enumerate() {
            let e = (i + shift) % m;
            acc[e] = a;
        }
        Self {
            order: self.order,
            dim: self.dim,
            coeffs: reduce(self.dim, &acc),
        }
    }

    /// Complex conjugate: `α^j ↦ α^(m−j)`.
    pub fn conjugate(&self) -> Self {
        let m = self.order as usize;
        let mut acc: SmallVec<[i64; 32]> = SmallVec::from_elem(0, m);
        for (i, &a) in self.coeffs.iter().enumerate() {
            acc[(m - i) % m] = a;
        }
        Self {
            order: self.order,
            dim: self.dim,
            coeffs: reduce(self.dim, &acc),
        }
    }

    /// `self · conjugate(self)`, the exact squared modulus.
    pub fn norm_squared(&self) -> Self {
        self.checked_mul(&self.conjugate()).expect("same order")
    }

    /// Floating-point shadow of the exact value.
    pub fn to_complex(&self) -> Complex64 {
        let step = std::f64::consts::TAU / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| Complex64::from_polar(c as f64, step * j as f64))
            .sum()
    }

    pub fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
}

/// Reduces `Σ powers[e] α^e` (exponents taken mod `m = d²`) to the canonical
/// basis. Uses `x^{d(d−1)} = −Σ_{t<d−1} x^{td}` on the top `d` exponents.
fn reduce(d: u32, powers: &[i64]) -> Coeffs {
    let d = d as usize;
    let phi = d * (d - 1);
    let mut out: Coeffs = SmallVec::from_slice(&powers[..phi]);
    for (offset, &c) in powers[phi..].iter().enumerate() {
        if c == 0 {
            continue;
        }
        for t in 0..d - 1 {
            let e = offset + t * d;
            out[e] = out[e]
                .checked_sub(c)
                .expect("cyclotomic coefficient overflow");
        }
    }
    out
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[m={}]({})", self.order, self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let abs = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (j, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "α")?,
                (1, _) => write!(f, "{abs}α")?,
                (_, 1) => write!(f, "α^{j}")?,
                _ => write!(f, "{abs}α^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycInt", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("coeffs", self.coeffs.as_slice())?;
        s.end()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            /// Panics when the operands have different orders.
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}
