//! Finite witnesses for the analytic behavior of the superposition operator
//! f -> g o f: the metric of pointwise convergence, the directional
//! derivative (g' o w) k, finite-difference probes of that derivative, and
//! Taylor-formula remainders.
//!
//! Truncations cannot certify limits, so every check here is a witness at a
//! finite sweep of step sizes, with exact arithmetic available to make the
//! polynomial cases literal identities.

use crate::analytic::AnalyticSeries;
use crate::coeff::{factorial, Coeff, GaussRational};
use crate::compose::{compose_general_with, gct_check_with, ProbeSettings, TailSumOptions};
use crate::error::{Error, Result};
use crate::series::Series;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;

/// Value of the series metric on a truncation, together with the bound on
/// whatever the unstored tail could contribute: each term of
/// d(f, g) = sum 2^-n |a_n - b_n| / (|a_n - b_n| + 1) is below 2^-n, so the
/// tail past order N adds at most 2^-N.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Metric {
    pub value: f64,
    pub tail_bound: f64,
}

/// Default float-mode step-size sweep for probes and remainder checks.
pub fn default_float_sweep() -> Vec<crate::coeff::Complex64> {
    [1e-2, 1e-3, 1e-4, 1e-5]
        .iter()
        .map(|&t| crate::coeff::Complex64::new(t, 0.0))
        .collect()
}

/// Default exact-mode sweep: rational step sizes keep the remainders exact.
pub fn default_exact_sweep() -> Vec<GaussRational> {
    vec![
        GaussRational::from_ratio(1, 10),
        GaussRational::from_ratio(1, 100),
        GaussRational::from_ratio(1, 1000),
    ]
}

/// The metric of pointwise convergence on the stored range, at the aligned
/// order.
pub fn metric<C: Coeff>(f: &Series<C>, g: &Series<C>) -> Metric {
    let order = f.order().min(g.order());
    let mut value = 0.0;
    let mut weight = 1.0;
    for n in 0..=order {
        let d = (f.coeff(n) - g.coeff(n)).magnitude();
        value += weight * d / (d + 1.0);
        weight *= 0.5;
    }
    Metric { value, tail_bound: weight * 2.0 }
}

/// Exact-rational metric value for series whose coefficient differences are
/// all real, where |a_n - b_n| is itself a rational. `None` when any
/// difference has a nonzero imaginary part. This is the oracle route for
/// the metric axioms.
pub fn metric_exact(f: &Series<GaussRational>, g: &Series<GaussRational>) -> Option<BigRational> {
    let order = f.order().min(g.order());
    let mut value = BigRational::zero();
    let mut weight = BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    for n in 0..=order {
        let diff = f.coeff(n) - g.coeff(n);
        if !diff.im.is_zero() {
            return None;
        }
        let d = diff.re.abs();
        value += &weight * &d / (&d + BigRational::one());
        weight *= &half;
    }
    Some(value)
}

/// Derivative of the superposition operator at base point w in direction k,
/// for a truncated (polynomial-data) outer series: (g' o w) k. Exact in
/// exact mode.
pub fn superposition_derivative_series<C: Coeff>(
    g: &Series<C>,
    w: &Series<C>,
    k: &Series<C>,
) -> Result<Series<C>> {
    // polynomial data: the derivative is fully known, so pad it back to
    // g's order instead of letting the truncation shrink the result
    let d = g.derivative_k(1)?.padded(g.order());
    let composed = crate::compose::compose_general_series(&d, w)?;
    Ok(composed.cauchy_mul(k))
}

/// Derivative of the superposition operator for an infinite outer series:
/// (g' o w) k, materialized at `order`.
pub fn superposition_derivative<C: Coeff>(
    g: &AnalyticSeries<C>,
    w: &Series<C>,
    k: &Series<C>,
    order: usize,
) -> Result<Series<C>> {
    superposition_derivative_with(g, w, k, order, &ProbeSettings::default(), &TailSumOptions::default())
}

pub fn superposition_derivative_with<C: Coeff>(
    g: &AnalyticSeries<C>,
    w: &Series<C>,
    k: &Series<C>,
    order: usize,
    probe: &ProbeSettings,
    sum: &TailSumOptions,
) -> Result<Series<C>> {
    let composed = compose_general_with(&g.derivative(), w, order, probe, sum)?;
    Ok(composed.cauchy_mul(k))
}

/// Record of one finite-difference sweep against the directional
/// derivative: for each step size t, the remainder series
/// (T_g(w + t k) - T_g(w)) / t - (g' o w) k and its sup-norm over the
/// stored coefficients.
#[derive(Clone, Debug)]
pub struct DerivativeProbe<C> {
    pub base: Series<C>,
    pub direction: Series<C>,
    /// Step sizes actually probed (admissible ones, in the given order).
    pub t_values: Vec<C>,
    /// Remainder series, one per admissible step size.
    pub remainders: Vec<Series<C>>,
}

impl<C: Coeff> DerivativeProbe<C> {
    /// Sup-norm of remainder i over coefficients 0..window.
    pub fn sup_norm(&self, i: usize, window: usize) -> f64 {
        self.remainders[i]
            .coeffs()
            .iter()
            .take(window)
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    /// Least-squares slope of log sup-norm against log |t| over the sweep,
    /// restricted to the first `window` coefficients. `None` when fewer
    /// than two points carry signal.
    pub fn fitted_slope(&self, window: usize) -> Option<f64> {
        let points: Vec<(f64, f64)> = self
            .t_values
            .iter()
            .enumerate()
            .filter_map(|(i, t)| {
                let norm = self.sup_norm(i, window);
                let t_mag = t.magnitude();
                (norm > 0.0 && t_mag > 0.0).then(|| (t_mag.ln(), norm.ln()))
            })
            .collect();
        fit_slope(&points)
    }

    /// True when the recorded sup-norms decrease monotonically with t.
    pub fn norms_decrease(&self, window: usize) -> bool {
        let norms: Vec<f64> = (0..self.t_values.len()).map(|i| self.sup_norm(i, window)).collect();
        norms.windows(2).all(|w| w[1] <= w[0])
    }
}

fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    (denom.abs() > 1e-12).then(|| (n * sxy - sx * sy) / denom)
}

fn validate_t_values<C: Coeff>(t_values: &[C]) -> Result<()> {
    if t_values.is_empty() {
        return Err(Error::PreconditionFailed("empty step-size sweep".into()));
    }
    let mags: Vec<f64> = t_values.iter().map(|t| t.magnitude()).collect();
    if mags.iter().any(|m| *m <= 0.0) {
        return Err(Error::PreconditionFailed("step sizes must be nonzero".into()));
    }
    if !mags.windows(2).all(|w| w[1] < w[0]) {
        return Err(Error::PreconditionFailed(
            "step sizes must decrease strictly toward zero".into(),
        ));
    }
    Ok(())
}

/// Finite-difference probe of the derivative for a truncated outer series.
/// Polynomial data composes with everything, so every step is admissible.
pub fn finite_difference_probe_series<C: Coeff>(
    g: &Series<C>,
    w: &Series<C>,
    k: &Series<C>,
    t_values: &[C],
) -> Result<DerivativeProbe<C>> {
    validate_t_values(t_values)?;
    let derivative = superposition_derivative_series(g, w, k)?;
    let base_value = crate::compose::compose_general_series(g, w)?;
    let mut remainders = Vec::with_capacity(t_values.len());
    for t in t_values {
        let t_inv = t.recip().ok_or_else(|| {
            Error::PreconditionFailed("step sizes must be invertible".into())
        })?;
        let stepped = w.add(&k.scaled(t));
        let value = crate::compose::compose_general_series(g, &stepped)?;
        let quotient = value.sub(&base_value).scaled(&t_inv);
        remainders.push(quotient.sub(&derivative));
    }
    Ok(DerivativeProbe {
        base: w.clone(),
        direction: k.clone(),
        t_values: t_values.to_vec(),
        remainders,
    })
}

/// Finite-difference probe for an infinite outer series. Step sizes that
/// push the base constant term outside the composability domain are
/// filtered out (the boundary-restricted limit convention); if none remain
/// the probe fails with [`Error::DomainExit`].
pub fn finite_difference_probe<C: Coeff>(
    g: &AnalyticSeries<C>,
    w: &Series<C>,
    k: &Series<C>,
    t_values: &[C],
    order: usize,
) -> Result<DerivativeProbe<C>> {
    finite_difference_probe_with(g, w, k, t_values, order, &ProbeSettings::default(), &TailSumOptions::default())
}

pub fn finite_difference_probe_with<C: Coeff>(
    g: &AnalyticSeries<C>,
    w: &Series<C>,
    k: &Series<C>,
    t_values: &[C],
    order: usize,
    probe: &ProbeSettings,
    sum: &TailSumOptions,
) -> Result<DerivativeProbe<C>> {
    validate_t_values(t_values)?;
    if !gct_check_with(g, w.constant_term(), probe).exists() {
        return Err(Error::DomainExit);
    }
    let admissible: Vec<C> = t_values
        .iter()
        .filter(|t| {
            let shifted = w.constant_term().clone() + k.coeff(0) * (*t).clone();
            gct_check_with(g, &shifted, probe).exists()
        })
        .cloned()
        .collect();
    if admissible.is_empty() {
        return Err(Error::DomainExit);
    }
    let derivative = superposition_derivative_with(g, w, k, order, probe, sum)?;
    let base_value = compose_general_with(g, w, order, probe, sum)?;
    let mut remainders = Vec::with_capacity(admissible.len());
    for t in &admissible {
        let t_inv = t.recip().ok_or_else(|| {
            Error::PreconditionFailed("step sizes must be invertible".into())
        })?;
        let stepped = w.add(&k.scaled(t));
        let value = compose_general_with(g, &stepped, order, probe, sum)?;
        let quotient = value.sub(&base_value).scaled(&t_inv);
        remainders.push(quotient.sub(&derivative));
    }
    Ok(DerivativeProbe {
        base: w.clone(),
        direction: k.clone(),
        t_values: admissible,
        remainders,
    })
}

/// Taylor-formula remainder for a truncated (polynomial-data) outer series:
/// g o (f + t k) - sum_{j=0}^{n} (t^j / j!) (g^(j) o f) k^j. Exact in exact
/// mode; identically zero once n reaches the degree of g.
pub fn taylor_remainder_series<C: Coeff>(
    g: &Series<C>,
    f: &Series<C>,
    k: &Series<C>,
    n: usize,
    t: &C,
) -> Result<Series<C>> {
    let stepped = f.add(&k.scaled(t));
    let mut remainder = crate::compose::compose_general_series(g, &stepped)?;
    let mut t_power = C::one();
    for j in 0..=n.min(g.order()) {
        let coeff = t_power.clone() * factorial::<C>(j).recip().expect("nonzero");
        let derivative = g.derivative_k(j)?.padded(g.order());
        let term = crate::compose::compose_general_series(&derivative, f)?
            .cauchy_mul(&k.pow(j))
            .scaled(&coeff);
        remainder = remainder.sub(&term);
        t_power = t_power * t.clone();
    }
    Ok(remainder)
}

/// Taylor-formula remainder for an infinite outer series, materialized at
/// `order`.
pub fn taylor_remainder<C: Coeff>(
    g: &AnalyticSeries<C>,
    f: &Series<C>,
    k: &Series<C>,
    n: usize,
    t: &C,
    order: usize,
) -> Result<Series<C>> {
    let probe = ProbeSettings::default();
    let sum = TailSumOptions::default();
    let stepped = f.add(&k.scaled(t));
    let mut remainder = compose_general_with(g, &stepped, order, &probe, &sum)?;
    let mut derivative = g.clone();
    let mut t_power = C::one();
    for j in 0..=n {
        let coeff = t_power.clone() * factorial::<C>(j).recip().expect("nonzero");
        let term = compose_general_with(&derivative, f, order, &probe, &sum)?
            .cauchy_mul(&k.pow(j))
            .scaled(&coeff);
        remainder = remainder.sub(&term);
        derivative = derivative.derivative();
        t_power = t_power * t.clone();
    }
    Ok(remainder)
}
