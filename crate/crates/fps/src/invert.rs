//! Composition inverses.
//!
//! Reversion of nonunit series uses the triangular recursion
//! b_1 = 1/a_1, b_n = -(b_1 a_n^(1) + ... + b_{n-1} a_n^(n-1)) / a_1^n
//! over cached powers of the input. For unit series the left composition
//! inverse is built two independent ways: a finite Taylor shift of the
//! reversion of f - a0, and back substitution against the generalized
//! Pascal matrix P(a0). The truncated identity always holds; whether the
//! infinite object exists is an analytic question the report answers only
//! heuristically, and says so.

use crate::analytic::ratio_radius_estimate;
use crate::coeff::{binomial_triangle, Coeff, DEFAULT_TOLERANCE};
use crate::compose::compose_general_series;
use crate::error::{Error, Result};
use crate::series::Series;
use std::fmt;

/// Generalized Pascal matrix truncated to dim x dim: row k, column n hold
/// C(n, k) A^(n-k) for n >= k, zero below the diagonal. Unit upper
/// triangular; P(0) is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct PascalMatrix<C> {
    shift: C,
    dim: usize,
    entries: Vec<Vec<C>>,
}

impl<C: Coeff> PascalMatrix<C> {
    pub fn shift(&self) -> &C {
        &self.shift
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row k, column n.
    pub fn entry(&self, k: usize, n: usize) -> C {
        self.entries[k][n].clone()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.entries
    }
}

/// P(A) truncated to dim x dim. `dim >= 1`.
pub fn pascal_matrix<C: Coeff>(shift: &C, dim: usize) -> PascalMatrix<C> {
    assert!(dim >= 1, "pascal matrix needs at least one row");
    let binom = binomial_triangle::<C>(dim);
    let mut entries = vec![vec![C::zero(); dim]; dim];
    for k in 0..dim {
        // walk column-wise along row k, carrying A^(n-k)
        let mut power = C::one();
        for n in k..dim {
            entries[k][n] = binom[n][k].clone() * power.clone();
            power = power * shift.clone();
        }
    }
    PascalMatrix { shift: shift.clone(), dim, entries }
}

/// Solves the truncated system P(A) b = c by back substitution from the
/// bottom row up. The truncated system is unit upper triangular, so this is
/// exact and division-free.
pub fn pascal_solve<C: Coeff>(shift: &C, rhs: &Series<C>) -> Series<C> {
    let dim = rhs.order() + 1;
    let binom = binomial_triangle::<C>(dim);
    let mut solution = vec![C::zero(); dim];
    for k in (0..dim).rev() {
        let mut acc = rhs.coeff(k);
        let mut power = shift.clone();
        for n in k + 1..dim {
            acc = acc - binom[n][k].clone() * power.clone() * solution[n].clone();
            power = power * shift.clone();
        }
        solution[k] = acc;
    }
    Series::new(solution)
}

/// Compositional inverse of a nonunit series with a nonzero linear term:
/// the unique g with g o f = z (and f o g = z) at the truncation.
pub fn reversion<C: Coeff>(f: &Series<C>) -> Result<Series<C>> {
    reversion_with_tol(f, DEFAULT_TOLERANCE)
}

pub fn reversion_with_tol<C: Coeff>(f: &Series<C>, tol: f64) -> Result<Series<C>> {
    if !f.constant_term().is_negligible(tol) {
        return Err(Error::NotNonunit);
    }
    let a1 = f.coeff(1);
    if a1.is_negligible(tol) {
        return Err(Error::ZeroLinearTerm);
    }
    let order = f.order();
    let a1_inv = a1.recip().ok_or(Error::ZeroLinearTerm)?;

    // cached powers: powers[k] holds f^(k+1), truncated at `order`
    let mut powers: Vec<Series<C>> = Vec::with_capacity(order);
    let mut current = f.clone();
    for _ in 1..=order {
        powers.push(current.clone());
        current = current.cauchy_mul(f);
    }

    let mut b = vec![C::zero(); order + 1];
    if order >= 1 {
        b[1] = a1_inv.clone();
    }
    let mut a1_pow_inv = a1_inv.clone(); // (a_1^n)^(-1) carried along
    for n in 2..=order {
        a1_pow_inv = a1_pow_inv * a1_inv.clone();
        let mut acc = C::zero();
        for k in 1..n {
            C::mul_add(&mut acc, &b[k], &powers[k - 1].coeff(n));
        }
        b[n] = -acc * a1_pow_inv.clone();
    }
    Ok(Series::new(b))
}

/// Epistemic status of a left-inverse candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftInverseExistence {
    /// The candidate provably inverts: a0 = 0, or f is affine, so the
    /// construction involves no infinite tail at all.
    ProvedFinite,
    /// The reversion-radius estimate clears |a0| with a factor-2 margin.
    HeuristicYes,
    /// The estimate falls below |a0| by a factor-2 margin.
    HeuristicNo,
    /// Not enough signal to lean either way.
    Unknown,
}

impl fmt::Display for LeftInverseExistence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LeftInverseExistence::ProvedFinite => "proved-finite",
            LeftInverseExistence::HeuristicYes => "heuristic-yes",
            LeftInverseExistence::HeuristicNo => "heuristic-no",
            LeftInverseExistence::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// Left-inverse construction output: the truncated candidate always
/// satisfies candidate o f = z at the truncation; the existence flag and
/// radius estimate report what can be said about the infinite object.
#[derive(Clone, Debug)]
pub struct LeftInverseReport<C> {
    pub candidate: Series<C>,
    pub existence: LeftInverseExistence,
    pub radius_estimate: Option<f64>,
    pub detail: String,
}

/// Left composition inverse of a (possibly unit) series with a1 != 0:
/// candidate g(z) = h(z - a0) where h = reversion(f - a0).
pub fn left_inverse<C: Coeff>(f: &Series<C>) -> Result<LeftInverseReport<C>> {
    left_inverse_with_tol(f, DEFAULT_TOLERANCE)
}

pub fn left_inverse_with_tol<C: Coeff>(f: &Series<C>, tol: f64) -> Result<LeftInverseReport<C>> {
    let a1 = f.coeff(1);
    if a1.is_negligible(tol) {
        return Err(Error::ZeroLinearTerm);
    }
    let a0 = f.coeff(0);
    let h = reversion_with_tol(&f.sub_constant(), tol)?;
    let candidate = h.taylor_shift(&-a0.clone());

    let magnitudes: Vec<f64> = h.coeffs().iter().map(|c| c.magnitude()).collect();
    let radius_estimate = ratio_radius_estimate(&magnitudes);

    let affine = f.coeffs().iter().skip(2).all(|c| c.is_negligible(tol));
    let (existence, detail) = if a0.is_negligible(tol) {
        (
            LeftInverseExistence::ProvedFinite,
            "nonunit input: the reversion itself is the inverse".to_string(),
        )
    } else if affine {
        (
            LeftInverseExistence::ProvedFinite,
            "affine input: the inverse (z - a0)/a1 is exact".to_string(),
        )
    } else {
        let mag_a0 = a0.magnitude();
        match radius_estimate {
            Some(r) if r > 2.0 * mag_a0 => (
                LeftInverseExistence::HeuristicYes,
                format!("estimated reversion radius {r:.4} exceeds |a0| = {mag_a0:.4} with margin"),
            ),
            Some(r) if r < 0.5 * mag_a0 => (
                LeftInverseExistence::HeuristicNo,
                format!("estimated reversion radius {r:.4} falls below |a0| = {mag_a0:.4} with margin"),
            ),
            Some(r) => (
                LeftInverseExistence::Unknown,
                format!("estimated reversion radius {r:.4} too close to |a0| = {mag_a0:.4} to call"),
            ),
            None => (
                LeftInverseExistence::Unknown,
                "too few nonzero reversion coefficients for a radius estimate".to_string(),
            ),
        }
    };
    Ok(LeftInverseReport { candidate, existence, radius_estimate, detail })
}

/// Asserts uniqueness of the left inverse at the truncation: checks that both
/// candidates compose with f to the identity (precondition), then compares
/// them coefficientwise.
pub fn uniqueness_check<C: Coeff>(
    f: &Series<C>,
    g1: &Series<C>,
    g2: &Series<C>,
) -> Result<bool> {
    for (which, g) in [("g1", g1), ("g2", g2)] {
        let composed = compose_general_series(g, f)?;
        let identity = Series::identity(composed.order());
        if !composed.close_to(&identity, DEFAULT_TOLERANCE) {
            return Err(Error::PreconditionFailed(format!(
                "{which} does not compose with f to z at the truncation"
            )));
        }
    }
    Ok(g1.close_to(g2, DEFAULT_TOLERANCE))
}
