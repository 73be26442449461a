//! The group of nonunit series with a nonzero linear term, under
//! composition, and its Lie algebra.
//!
//! Elements are plain truncated series behind validating newtypes: a
//! [`GroupElement`] has a_0 = 0 and a_1 != 0, an [`AlgebraElement`] only
//! a_0 = 0. The bracket is [f, g] = f g' - f' g; with ord >= 1 on both
//! sides the derivative index shift is absorbed, so inputs at order N give
//! a bracket trusted through order N and the Jacobi identity is exactly
//! assertable at the truncation.

use crate::coeff::{Coeff, DEFAULT_TOLERANCE};
use crate::compose::compose_nonunit_with_tol;
use crate::error::{Error, Result};
use crate::invert::reversion_with_tol;
use crate::series::{convolve_trunc, Series};
use std::fmt;

/// A nonunit series with a_1 != 0: an element of the composition group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<C> {
    series: Series<C>,
}

/// A nonunit series: an element of the Lie algebra (the tangent space at
/// the identity, flattened onto the same coefficient storage).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<C> {
    series: Series<C>,
}

impl<C: Coeff> GroupElement<C> {
    pub fn new(series: Series<C>) -> Result<Self> {
        Self::with_tol(series, DEFAULT_TOLERANCE)
    }

    /// The constant term must vanish exactly in both modes; only the
    /// nonzero-slope test goes through the tolerance.
    pub fn with_tol(series: Series<C>, tol: f64) -> Result<Self> {
        if !series.constant_term().is_negligible(0.0) {
            return Err(Error::NotNonunit);
        }
        if series.coeff(1).is_negligible(tol) {
            return Err(Error::ZeroLinearTerm);
        }
        Ok(GroupElement { series })
    }

    /// The identity element z.
    pub fn identity(order: usize) -> Self {
        GroupElement { series: Series::identity(order) }
    }

    pub fn series(&self) -> &Series<C> {
        &self.series
    }

    pub fn into_series(self) -> Series<C> {
        self.series
    }

    /// The coefficient of z, a homomorphism onto the multiplicative group
    /// of nonzero complex numbers.
    pub fn slope(&self) -> C {
        self.series.coeff(1)
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

impl<C: Coeff> AlgebraElement<C> {
    /// The constant term must vanish exactly.
    pub fn new(series: Series<C>) -> Result<Self> {
        if !series.constant_term().is_negligible(0.0) {
            return Err(Error::NotNonunit);
        }
        Ok(AlgebraElement { series })
    }

    pub fn series(&self) -> &Series<C> {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

impl<C: Coeff> fmt::Display for GroupElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}

/// Group law: composition g o f. The slope multiplies,
/// a_1(g o f) = a_1(g) a_1(f), so the result is again a valid element.
pub fn group_mul<C: Coeff>(g: &GroupElement<C>, f: &GroupElement<C>) -> GroupElement<C> {
    let series = compose_nonunit_with_tol(g.series(), f.series(), 0.0)
        .expect("group elements are nonunits");
    GroupElement { series }
}

/// Group inverse: the reversion, restricted to the group.
pub fn group_inv<C: Coeff>(f: &GroupElement<C>) -> GroupElement<C> {
    let series = reversion_with_tol(f.series(), 0.0)
        .expect("group elements have nonzero linear term");
    GroupElement { series }
}

/// The Lie bracket [f, g] = f g' - f' g on nonunit series. Inputs at order
/// N yield an output trusted through order N: coefficient n of f g' reads
/// g' only at indices below n because ord(f) >= 1, and symmetrically.
pub fn lie_bracket<C: Coeff>(f: &AlgebraElement<C>, g: &AlgebraElement<C>) -> AlgebraElement<C> {
    let order = f.order().min(g.order());
    let fd = derivative_coeffs(f.series());
    let gd = derivative_coeffs(g.series());
    let fg = convolve_trunc(f.series().coeffs(), &gd, order);
    let fdg = convolve_trunc(&fd, g.series().coeffs(), order);
    let coeffs = fg
        .into_iter()
        .zip(fdg)
        .map(|(a, b)| a - b)
        .collect();
    AlgebraElement { series: Series::new(coeffs) }
}

fn derivative_coeffs<C: Coeff>(f: &Series<C>) -> Vec<C> {
    f.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| C::from_int(n as i64) * c.clone())
        .collect()
}

/// Directional derivative of one left-invariant field along another,
/// evaluated at the group element g: g'' f2 f1 - g' f1' f2. Antisymmetrizing
/// and evaluating at g = z recovers the Lie bracket, which the tests assert.
pub fn invariant_field_derivative<C: Coeff>(
    g: &Series<C>,
    f1: &AlgebraElement<C>,
    f2: &AlgebraElement<C>,
) -> Series<C> {
    let order = g.order().min(f1.order()).min(f2.order());
    let gd = derivative_coeffs(g);
    let gdd: Vec<C> = g
        .coeffs()
        .iter()
        .enumerate()
        .skip(2)
        .map(|(n, c)| C::from_int((n * (n - 1)) as i64) * c.clone())
        .collect();
    // g'' f2 f1: the product f2 f1 has ord >= 2, absorbing both index shifts
    let f2f1 = convolve_trunc(f2.series().coeffs(), f1.series().coeffs(), order);
    let first = convolve_trunc(&gdd, &f2f1, order);
    // g' f1' f2: f2 alone has ord >= 1, absorbing the single shift
    let f1d = derivative_coeffs(f1.series());
    let f1df2 = convolve_trunc(&f1d, f2.series().coeffs(), order);
    let second = convolve_trunc(&gd, &f1df2, order);
    Series::new(first.into_iter().zip(second).map(|(a, b)| a - b).collect())
}

/// Similarity transformation S_g(f) = g o f o g^[-1]. Preserves the slope.
pub fn similarity<C: Coeff>(g: &GroupElement<C>, f: &GroupElement<C>) -> GroupElement<C> {
    group_mul(&group_mul(g, f), &group_inv(g))
}

/// Membership in the level set { a_1 z + ... : a_1 in G' } for a
/// caller-supplied predicate deciding the multiplicative subgroup G'. The
/// level sets are exactly the normal subgroups away from root-of-unity
/// slopes; closure under the group law is what the tests check.
pub fn levelset_member<C: Coeff>(
    f: &GroupElement<C>,
    slope_predicate: impl Fn(&C) -> bool,
) -> bool {
    slope_predicate(&f.slope())
}
