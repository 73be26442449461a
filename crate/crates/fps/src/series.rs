//! Truncated series: storage and fundamental arithmetic.
//!
//! A [`Series`] stores the coefficients of z^0 .. z^N for a truncation order
//! N. Every binary operation truncates to the minimum order of its operands,
//! which guarantees that every stored coefficient of the result is exact
//! relative to infinite-precision inputs. Where an operation instead treats a
//! series as exact polynomial data (all unstored coefficients literally
//! zero), its documentation says so.

use crate::coeff::{Coeff, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A formal power series truncated at order N: coefficients of z^0 .. z^N.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

/// Lower bound on deg(f) read off a truncation. The true degree is not
/// observable from finitely many coefficients, so a nonzero series only ever
/// yields `AtLeast`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    /// No nonzero coefficient stored.
    ZeroSeries,
    /// Greatest stored index with a nonzero coefficient; a lower bound.
    AtLeast(usize),
}

/// Result of [`Series::ord_deg`]: `ord` is exact within the truncation
/// (`None` marks +infinity, i.e. no stored coefficient is nonzero).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrdDeg {
    pub ord: Option<usize>,
    pub deg: DegreeBound,
}

impl fmt::Display for OrdDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ord {
            Some(n) => write!(f, "ord={n}")?,
            None => write!(f, "ord=inf")?,
        }
        match self.deg {
            DegreeBound::ZeroSeries => write!(f, ", deg: zero series"),
            DegreeBound::AtLeast(n) => write!(f, ", deg>={n} (truncated)"),
        }
    }
}

impl<C: Coeff> Series<C> {
    /// Wraps a coefficient vector; index n holds the coefficient of z^n.
    ///
    /// Panics if `coeffs` is empty (a truncation stores at least z^0).
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the z^0 coefficient");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![C::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Series::constant(C::one(), order)
    }

    pub fn constant(value: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = value;
        Series::new(coeffs)
    }

    /// The identity series z.
    pub fn identity(order: usize) -> Self {
        Series::monomial(C::one(), 1, order)
    }

    /// `value * z^degree`, truncated at `order` (zero if `degree > order`).
    pub fn monomial(value: C, degree: usize, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        if degree <= order {
            coeffs[degree] = value;
        }
        Series::new(coeffs)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(values: &[i64]) -> Self {
        assert!(!values.is_empty());
        Series::new(values.iter().map(|&v| C::from_int(v)).collect())
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of z^n, reading indices beyond the truncation as zero
    /// (the polynomial-data reading of a truncation).
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    /// Keeps coefficients up to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Self {
        let len = (order + 1).min(self.coeffs.len());
        Series::new(self.coeffs[..len].to_vec())
    }

    /// Extends with zeros up to `max(order, self.order())`. Valid only under
    /// the polynomial-data reading of the input.
    pub fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < order + 1 {
            coeffs.push(C::zero());
        }
        Series::new(coeffs)
    }

    /// Truncates or pads to exactly `order` (polynomial-data reading).
    pub fn resized(&self, order: usize) -> Self {
        self.truncated(order).padded(order)
    }

    fn aligned_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    /// Coefficientwise sum at the aligned order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.aligned_order(other);
        Series::new(
            (0..=n)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        )
    }

    /// Coefficientwise difference at the aligned order.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.aligned_order(other);
        Series::new(
            (0..=n)
                .map(|i| self.coeffs[i].clone() - other.coeffs[i].clone())
                .collect(),
        )
    }

    pub fn negated(&self) -> Self {
        Series::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scaled(&self, factor: &C) -> Self {
        Series::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// Cauchy product at the aligned order: c_n = sum_{k=0}^{n} a_k b_{n-k}.
    pub fn cauchy_mul(&self, other: &Self) -> Self {
        let n = self.aligned_order(other);
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_negligible(0.0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                C::mul_add(&mut coeffs[i + j], a, b);
            }
        }
        Series::new(coeffs)
    }

    /// k-fold Cauchy product; `pow(0)` is the constant one at this order.
    /// Coefficient n of the result is the n-th coefficient of f^k.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = acc.cauchy_mul(self);
        }
        acc
    }

    /// Multiplicative inverse at this truncation:
    /// `f.cauchy_mul(&f.mul_inverse()?)` is one. Exists iff a0 is nonzero.
    pub fn mul_inverse(&self) -> Result<Self> {
        self.mul_inverse_with_tol(DEFAULT_TOLERANCE)
    }

    pub fn mul_inverse_with_tol(&self, tol: f64) -> Result<Self> {
        if self.coeffs[0].is_negligible(tol) {
            return Err(Error::ZeroConstantTerm);
        }
        let a0_inv = self.coeffs[0].recip().ok_or(Error::ZeroConstantTerm)?;
        let n = self.order();
        let mut inv = Vec::with_capacity(n + 1);
        inv.push(a0_inv.clone());
        for m in 1..=n {
            // g_m = -(sum_{k=1}^{m} a_k g_{m-k}) / a_0
            let mut acc = C::zero();
            for k in 1..=m {
                C::mul_add(&mut acc, &self.coeffs[k], &inv[m - k]);
            }
            inv.push(-acc * a0_inv.clone());
        }
        Ok(Series::new(inv))
    }

    /// First formal derivative; truncation order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        self.derivative_k(1)
    }

    /// k-th formal derivative: coefficient n of the result is
    /// (n+k)!/n! * a_{n+k}. The order drops by k.
    pub fn derivative_k(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::DerivativeOrderTooLarge { k, order: self.order() });
        }
        let mut coeffs = self.coeffs.clone();
        for _ in 0..k {
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| C::from_int(n as i64) * c.clone())
                .collect();
        }
        Ok(Series::new(coeffs))
    }

    /// Least stored index with a nonzero coefficient; `None` marks +inf
    /// (the zero truncation).
    pub fn ord(&self) -> Option<usize> {
        self.ord_with_tol(DEFAULT_TOLERANCE)
    }

    pub fn ord_with_tol(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_negligible(tol))
    }

    /// ord and the flagged lower bound on deg readable from the truncation.
    pub fn ord_deg(&self) -> OrdDeg {
        self.ord_deg_with_tol(DEFAULT_TOLERANCE)
    }

    pub fn ord_deg_with_tol(&self, tol: f64) -> OrdDeg {
        let ord = self.ord_with_tol(tol);
        let deg = match self.coeffs.iter().rposition(|c| !c.is_negligible(tol)) {
            Some(n) => DegreeBound::AtLeast(n),
            None => DegreeBound::ZeroSeries,
        };
        OrdDeg { ord, deg }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible(tol))
    }

    /// f - a0: the nonunit part, same order.
    pub fn sub_constant(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = C::zero();
        Series::new(coeffs)
    }

    /// Re-expansion around a shifted center: the polynomial f(z + shift),
    /// exact at this truncation under the polynomial-data reading. Horner
    /// accumulation: result = (..(a_N * (z+shift) + a_{N-1}) * (z+shift)..).
    pub fn taylor_shift(&self, shift: &C) -> Self {
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul_by_linear(shift);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        acc
    }

    /// self * (z + c), truncated at this order.
    fn mul_by_linear(&self, c: &C) -> Self {
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            C::mul_add(&mut coeffs[i], a, c);
            if i < n {
                coeffs[i + 1] = coeffs[i + 1].clone() + a.clone();
            }
        }
        Series::new(coeffs)
    }

    /// Coefficientwise closeness at the aligned order (exact mode: equality).
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        let n = self.aligned_order(other);
        (0..=n).all(|i| self.coeffs[i].close_to(&other.coeffs[i], tol))
    }
}

/// Convolution of two coefficient slices truncated at `order`, reading
/// indices beyond either slice as zero. Used where an ord >= 1 argument shows
/// the out-of-range slots cannot contribute (the Lie bracket and the
/// invariant-field derivative), so the result is truncation-correct through
/// `order` even though the slices have different lengths.
pub(crate) fn convolve_trunc<C: Coeff>(a: &[C], b: &[C], order: usize) -> Vec<C> {
    let mut out = vec![C::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_negligible(0.0) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            C::mul_add(&mut out[i + j], ai, bj);
        }
    }
    out
}

impl<C: Coeff> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_negligible(0.0) && !(n == 0 && self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Series<C> {
        Series::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Series<C> {
        Series::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Series<C> {
        self.cauchy_mul(rhs)
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.negated()
    }
}
