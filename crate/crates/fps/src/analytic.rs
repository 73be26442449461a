//! Infinite outer series.
//!
//! An [`AnalyticSeries`] is a total coefficient generator together with a
//! caller-supplied radius of convergence and an optional boundary flag. The
//! radius is never inferred silently; [`AnalyticSeries::estimate_radius`] is
//! an explicit ratio-test estimator whose output is labeled an estimate.
//!
//! A registered closed form for the shifted Taylor coefficients
//! g^(n)(a)/n! makes exact-mode general composition possible; without one,
//! only float-mode tail summation is available.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::series::Series;
use std::fmt;
use std::sync::Arc;

type Generator<C> = Arc<dyn Fn(usize) -> C + Send + Sync>;
type TaylorAt<C> = Arc<dyn Fn(&C, usize) -> Option<C> + Send + Sync>;

/// A formal power series given by a total coefficient generator, with
/// radius-of-convergence metadata for use as the outer series of a general
/// composition.
#[derive(Clone)]
pub struct AnalyticSeries<C> {
    generator: Generator<C>,
    radius: f64,
    boundary_summable: Option<bool>,
    taylor_at: Option<TaylorAt<C>>,
    label: String,
}

/// Where the composability domain { a0 + a1 z + ... : a0 in D } lives:
/// D is {0}, an open disk, a closed disk, or all of C.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DomainKind {
    OriginOnly,
    OpenDisk,
    ClosedDisk,
    Entire,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DomainClass {
    pub kind: DomainKind,
    pub radius: f64,
}

impl<C: Coeff> AnalyticSeries<C> {
    /// Wraps a generator with its radius of convergence (0 and +inf are
    /// allowed). The boundary flag starts unknown.
    pub fn new<F>(generator: F, radius: f64) -> Self
    where
        F: Fn(usize) -> C + Send + Sync + 'static,
    {
        assert!(radius >= 0.0, "radius of convergence is nonnegative");
        AnalyticSeries {
            generator: Arc::new(generator),
            radius,
            boundary_summable: None,
            taylor_at: None,
            label: String::from("anonymous"),
        }
    }

    /// Asserts whether every derivative series converges on the boundary
    /// |z| = radius. This is caller-supplied knowledge; the library only
    /// dispatches on it.
    pub fn with_boundary_summable(mut self, flag: Option<bool>) -> Self {
        self.boundary_summable = flag;
        self
    }

    /// Registers a closed form for the shifted Taylor coefficient
    /// g^(n)(a)/n!. Returning `None` signals the closed form does not apply
    /// at that center.
    pub fn with_taylor_at<F>(mut self, taylor_at: F) -> Self
    where
        F: Fn(&C, usize) -> Option<C> + Send + Sync + 'static,
    {
        self.taylor_at = Some(Arc::new(taylor_at));
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn coeff(&self, n: usize) -> C {
        (self.generator)(n)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn boundary_summable(&self) -> Option<bool> {
        self.boundary_summable
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The registered closed form, if any.
    pub fn taylor_at(&self, center: &C, n: usize) -> Option<C> {
        self.taylor_at.as_ref().and_then(|f| f(center, n))
    }

    pub fn has_taylor_at(&self) -> bool {
        self.taylor_at.is_some()
    }

    /// Materializes the truncation at the given order.
    pub fn truncate(&self, order: usize) -> Series<C> {
        Series::new((0..=order).map(|n| self.coeff(n)).collect())
    }

    /// The derivative series g', with generator, radius, boundary flag and
    /// any closed form carried over. The radius is unchanged by formal
    /// differentiation, and boundary summability quantifies over all
    /// derivative orders at once, so both transfer.
    pub fn derivative(&self) -> AnalyticSeries<C> {
        let parent = self.generator.clone();
        let generator: Generator<C> =
            Arc::new(move |n| C::from_int(n as i64 + 1) * parent(n + 1));
        let taylor_at = self.taylor_at.as_ref().map(|parent| {
            let parent = parent.clone();
            let lifted: TaylorAt<C> = Arc::new(move |center: &C, n: usize| {
                parent(center, n + 1).map(|t| C::from_int(n as i64 + 1) * t)
            });
            lifted
        });
        AnalyticSeries {
            generator,
            radius: self.radius,
            boundary_summable: self.boundary_summable,
            taylor_at,
            label: format!("{}'", self.label),
        }
    }

    /// Ratio-test radius estimate from the first `terms` coefficients:
    /// geometric mean of |b_n| / |b_{n+1}| over the last quarter of the
    /// nonzero sample. An estimate, never a substitute for the constructed
    /// radius.
    pub fn estimate_radius(&self, terms: usize) -> Option<f64> {
        let magnitudes: Vec<f64> = (0..terms).map(|n| self.coeff(n).magnitude()).collect();
        ratio_radius_estimate(&magnitudes)
    }
}

impl<C: Coeff> fmt::Debug for AnalyticSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticSeries")
            .field("label", &self.label)
            .field("radius", &self.radius)
            .field("boundary_summable", &self.boundary_summable)
            .field("closed_form", &self.taylor_at.is_some())
            .finish()
    }
}

/// Geometric-mean ratio estimate of the radius of convergence from a prefix
/// of coefficient magnitudes, taken over the last quarter of consecutive
/// nonzero pairs. `None` when fewer than two usable pairs exist.
pub(crate) fn ratio_radius_estimate(magnitudes: &[f64]) -> Option<f64> {
    let ratios: Vec<f64> = magnitudes
        .windows(2)
        .filter(|w| w[0] > 0.0 && w[1] > 0.0 && w[0].is_finite() && w[1].is_finite())
        .map(|w| w[0] / w[1])
        .collect();
    if ratios.len() < 2 {
        return None;
    }
    let tail = &ratios[ratios.len() - (ratios.len() / 4).max(2)..];
    let log_mean = tail.iter().map(|r| r.ln()).sum::<f64>() / tail.len() as f64;
    Some(log_mean.exp())
}

/// Classifies the composability domain of the outer series: origin-only for
/// radius 0, entire for infinite radius, and closed or open disk on a
/// caller-supplied boundary flag.
pub fn classify_domain<C: Coeff>(g: &AnalyticSeries<C>) -> Result<DomainClass> {
    let radius = g.radius();
    if radius == 0.0 {
        return Ok(DomainClass { kind: DomainKind::OriginOnly, radius });
    }
    if radius.is_infinite() {
        return Ok(DomainClass { kind: DomainKind::Entire, radius });
    }
    match g.boundary_summable() {
        Some(true) => Ok(DomainClass { kind: DomainKind::ClosedDisk, radius }),
        Some(false) => Ok(DomainClass { kind: DomainKind::OpenDisk, radius }),
        None => Err(Error::InsufficientMetadata),
    }
}
