//! Coefficient rings.
//!
//! Series carry one of two coefficient types: [`GaussRational`], a complex
//! number with arbitrary-precision rational real and imaginary parts, or
//! [`Complex64`], a double-precision complex float. Exact arithmetic is the
//! oracle of record throughout; floats exist for evaluating infinite outer
//! series where no closed form is registered. Float comparisons always go
//! through an explicit tolerance, never bitwise equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use num::Complex;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Default tolerance for float-mode zero tests. Overridable per call on the
/// operations that perform them.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Exact coefficient: Gaussian rational (re, im are `BigRational`).
pub type GaussRational = Complex<BigRational>;

/// Float coefficient: complex double.
pub type Complex64 = Complex<f64>;

/// The arithmetic a series coefficient must support.
///
/// `EXACT` distinguishes the two modes: exact implementations ignore
/// tolerance arguments and compare literally, float implementations never
/// compare bitwise.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// The rational `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Multiplicative inverse; `None` on literal zero.
    fn recip(&self) -> Option<Self>;

    /// Zero test. Exact mode ignores `tol`; float mode tests `|z| <= tol`.
    fn is_negligible(&self, tol: f64) -> bool;

    /// `|z|` as a double. Approximate in exact mode; used only by
    /// heuristics (radius estimates, probe diagnostics) and display.
    fn magnitude(&self) -> f64;

    /// Closeness test for assertions: `|a - b| <= tol * max(1, |a|, |b|)`.
    /// Exact mode falls back to literal equality.
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            return self == other;
        }
        let diff = (self.clone() - other.clone()).magnitude();
        diff <= tol * self.magnitude().max(other.magnitude()).max(1.0)
    }

    /// `acc += a * b`, the inner step of every convolution. Implementations
    /// override this to work by reference where cloning is expensive.
    fn mul_add(acc: &mut Self, a: &Self, b: &Self) {
        *acc = acc.clone() + a.clone() * b.clone();
    }
}

impl Coeff for GaussRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }

    fn from_int(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            return None;
        }
        let ns = self.norm_sqr();
        Some(Complex::new(&self.re / &ns, -&self.im / &ns))
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }

    fn mul_add(acc: &mut Self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        let prod = a * b;
        acc.re += prod.re;
        acc.im += prod.im;
    }
}

impl Coeff for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }

    fn from_int(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex::new(num as f64 / den as f64, 0.0)
    }

    fn recip(&self) -> Option<Self> {
        if self.norm_sqr() == 0.0 {
            return None;
        }
        Some(Complex::new(1.0, 0.0) / self)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// The Gaussian-rational imaginary unit, for the expression parser.
pub fn imaginary_unit() -> GaussRational {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// Lossy conversion from exact to float coefficients.
pub fn to_complex64(c: &GaussRational) -> Complex64 {
    Complex::new(
        c.re.to_f64().unwrap_or(f64::INFINITY),
        c.im.to_f64().unwrap_or(f64::INFINITY),
    )
}

/// `n!` in the coefficient domain.
pub(crate) fn factorial<C: Coeff>(n: usize) -> C {
    let mut acc = C::one();
    for i in 2..=n {
        acc = acc * C::from_int(i as i64);
    }
    acc
}

/// Pascal's triangle up to row `rows - 1`, in the coefficient domain.
/// `triangle[n][k] = C(n, k)`. Additive recurrence, so exact in both modes
/// and immune to integer overflow.
pub(crate) fn binomial_triangle<C: Coeff>(rows: usize) -> Vec<Vec<C>> {
    let mut triangle: Vec<Vec<C>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = vec![C::one(); n + 1];
        for k in 1..n {
            row[k] = triangle[n - 1][k - 1].clone() + triangle[n - 1][k].clone();
        }
        triangle.push(row);
    }
    triangle
}
