//! Composition of truncated series.
//!
//! Three routes are implemented and cross-checked:
//!
//! * [`compose_nonunit`] -- Horner accumulation for a nonunit inner series,
//!   the production path;
//! * [`multinomial_oracle`] -- brute-force expansion over weighted partition
//!   tuples, exponentially slow, kept as an independent oracle;
//! * the matrix route in [`crate::matrix`].
//!
//! General composition with a nonzero inner constant term goes through the
//! shift identity g o f = g_D o (f - a0), where g_D collects the shifted
//! Taylor coefficients g^(n)(a0)/n!. Existence of those coefficients is the
//! business of [`gct_check`].

use crate::analytic::AnalyticSeries;
use crate::coeff::{factorial, Coeff, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::partition::PartitionSet;
use crate::series::Series;

/// Outcome of the existence check for `g o f` with `a0 = [z^0] f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GctOutcome {
    /// The composition exists.
    Exists,
    /// Some derivative series of g diverges at a0. `at_k` names the first
    /// derivative order the probe (or the radius comparison) pinned down;
    /// `None` when the failure is asserted by caller metadata but the probe
    /// could not locate the order within its depth.
    Fails { at_k: Option<usize> },
    /// On the boundary |a0| = r(g) with no caller flag, a finite probe may
    /// be unable to decide. This is a value, not an error.
    Inconclusive,
}

impl GctOutcome {
    pub fn exists(&self) -> bool {
        matches!(self, GctOutcome::Exists)
    }
}

/// Settings for the boundary divergence probe.
///
/// The probe examines the term magnitudes |n!/(n-k)! b_n a0^(n-k)| for each
/// derivative order k up to `max_k`. It declares divergence when either the
/// partial sums blow up monotonically past `growth_cap` times the leading
/// term, or the dyadic block sums fail to decay (trailing block ratios all
/// at least `block_ratio`), which is how a harmonic-like tail looks at any
/// finite depth. Anything else is inconclusive.
#[derive(Clone, Copy, Debug)]
pub struct ProbeSettings {
    /// Highest derivative order probed.
    pub max_k: usize,
    /// Terms sampled per derivative order.
    pub terms: usize,
    /// Monotone partial-sum growth beyond this factor counts as divergence.
    pub growth_cap: f64,
    /// Trailing dyadic block-sum ratio at or above this counts as divergence.
    pub block_ratio: f64,
    /// Tolerance for zero and radius-boundary comparisons.
    pub tol: f64,
}

impl Default for ProbeSettings {
    fn default() -> Self {
        ProbeSettings {
            max_k: 8,
            terms: 4096,
            growth_cap: 1e6,
            block_ratio: 0.9,
            tol: DEFAULT_TOLERANCE,
        }
    }
}

/// Existence check for the general composition, with default probe settings.
pub fn gct_check<C: Coeff>(g: &AnalyticSeries<C>, a0: &C) -> GctOutcome {
    gct_check_with(g, a0, &ProbeSettings::default())
}

/// Existence check for the general composition g o (a0 + ...).
///
/// The radius comparison decides the interior and exterior; on the boundary
/// the caller-supplied summability flag decides if present, otherwise the
/// partial-sum probe runs and may return [`GctOutcome::Inconclusive`].
pub fn gct_check_with<C: Coeff>(
    g: &AnalyticSeries<C>,
    a0: &C,
    settings: &ProbeSettings,
) -> GctOutcome {
    let radius = g.radius();
    let mag = a0.magnitude();

    if a0.is_negligible(settings.tol) {
        // nonunit inner series compose with everything
        return GctOutcome::Exists;
    }
    if radius.is_infinite() {
        return GctOutcome::Exists;
    }
    if radius == 0.0 {
        // every derivative series diverges away from the origin
        return GctOutcome::Fails { at_k: Some(0) };
    }
    if mag < radius - settings.tol {
        return GctOutcome::Exists;
    }
    if mag > radius + settings.tol {
        return GctOutcome::Fails { at_k: Some(0) };
    }

    // |a0| = r(g): boundary case
    match g.boundary_summable() {
        Some(true) => GctOutcome::Exists,
        Some(false) => {
            let located = probe_first_divergent_order(g, a0, settings);
            GctOutcome::Fails { at_k: located }
        }
        None => match probe_first_divergent_order(g, a0, settings) {
            Some(k) => GctOutcome::Fails { at_k: Some(k) },
            None => GctOutcome::Inconclusive,
        },
    }
}

/// Probes derivative orders 0..=max_k for divergence of
/// sum_n n!/(n-k)! b_n a0^(n-k), reporting the first order flagged.
fn probe_first_divergent_order<C: Coeff>(
    g: &AnalyticSeries<C>,
    a0: &C,
    settings: &ProbeSettings,
) -> Option<usize> {
    let mag_a0 = a0.magnitude();
    let abs_coeffs: Vec<f64> = (0..settings.terms).map(|n| g.coeff(n).magnitude()).collect();
    (0..=settings.max_k).find(|&k| {
        let terms: Vec<f64> = (k..settings.terms)
            .map(|n| {
                let mut falling = 1.0;
                for j in 0..k {
                    falling *= (n - j) as f64;
                }
                falling * abs_coeffs[n] * mag_a0.powi((n - k) as i32)
            })
            .collect();
        diverges(&terms, settings)
    })
}

/// Divergence heuristic on a sequence of nonnegative term magnitudes.
fn diverges(terms: &[f64], settings: &ProbeSettings) -> bool {
    let first_nonzero = match terms.iter().copied().find(|t| *t > 0.0) {
        Some(t) => t,
        None => return false,
    };
    if terms.iter().any(|t| !t.is_finite()) {
        return true;
    }

    // monotone blow-up of the partial sums past the growth cap
    let mut partial = 0.0f64;
    let mut monotone = true;
    for &t in terms {
        if t < 0.0 {
            monotone = false;
        }
        partial += t;
    }
    if monotone && partial > settings.growth_cap * first_nonzero {
        return true;
    }

    // dyadic block sums: a convergent tail decays block over block, a
    // harmonic-like divergent tail keeps the blocks level
    let mut blocks = Vec::new();
    let mut lo = 1usize;
    while 2 * lo <= terms.len() {
        blocks.push(terms[lo..2 * lo].iter().sum::<f64>());
        lo *= 2;
    }
    if blocks.len() < 5 {
        return false;
    }
    let tail = &blocks[3..];
    let level = tail
        .windows(2)
        .all(|w| w[0] > 0.0 && w[1] >= settings.block_ratio * w[0]);
    level
}

/// Composition with a nonunit inner series, by Horner accumulation from the
/// top coefficient down. Coefficient n of the result is
/// sum_{k=0}^{n} b_k a_n^(k), and the output is exact at the aligned
/// truncation in exact mode.
pub fn compose_nonunit<C: Coeff>(g: &Series<C>, f: &Series<C>) -> Result<Series<C>> {
    compose_nonunit_with_tol(g, f, DEFAULT_TOLERANCE)
}

pub fn compose_nonunit_with_tol<C: Coeff>(
    g: &Series<C>,
    f: &Series<C>,
    tol: f64,
) -> Result<Series<C>> {
    if !f.constant_term().is_negligible(tol) {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = g.order().min(f.order());
    let f = f.truncated(order);
    let mut acc = Series::constant(g.coeff(order), order);
    for k in (0..order).rev() {
        acc = acc.cauchy_mul(&f);
        acc = acc.add(&Series::constant(g.coeff(k), order));
    }
    Ok(acc)
}

/// General composition with a truncated outer series, which is exact
/// polynomial data at its truncation: g o f = g_D o (f - a0) with
/// g_D = g(z + a0) a finite Taylor shift. Exact in exact mode.
pub fn compose_general_series<C: Coeff>(g: &Series<C>, f: &Series<C>) -> Result<Series<C>> {
    compose_general_series_with_tol(g, f, DEFAULT_TOLERANCE)
}

pub fn compose_general_series_with_tol<C: Coeff>(
    g: &Series<C>,
    f: &Series<C>,
    tol: f64,
) -> Result<Series<C>> {
    let a0 = f.constant_term();
    if a0.is_negligible(tol) {
        return compose_nonunit_with_tol(g, f, tol);
    }
    let shifted = g.taylor_shift(a0);
    compose_nonunit_with_tol(&shifted, &f.sub_constant(), tol)
}

/// Options for materializing the shifted Taylor coefficients of an infinite
/// outer series in float mode.
#[derive(Clone, Copy, Debug)]
pub struct TailSumOptions {
    /// Stop once the ratio-estimated tail bound drops below this.
    pub tolerance: f64,
    /// Hard cap on summed terms; exceeding it raises `ToleranceNotMet`.
    pub max_terms: usize,
}

impl Default for TailSumOptions {
    fn default() -> Self {
        TailSumOptions { tolerance: DEFAULT_TOLERANCE, max_terms: 1_000_000 }
    }
}

/// General composition with an infinite outer series.
///
/// Runs the existence check first, then builds g_D at the requested order:
/// through the registered closed form where one applies, by float-mode tail
/// summation otherwise. Exact mode without an applicable closed form is an
/// error rather than a silently inexact partial sum.
pub fn compose_general<C: Coeff>(
    g: &AnalyticSeries<C>,
    f: &Series<C>,
    order: usize,
) -> Result<Series<C>> {
    compose_general_with(g, f, order, &ProbeSettings::default(), &TailSumOptions::default())
}

pub fn compose_general_with<C: Coeff>(
    g: &AnalyticSeries<C>,
    f: &Series<C>,
    order: usize,
    probe: &ProbeSettings,
    sum: &TailSumOptions,
) -> Result<Series<C>> {
    let a0 = f.constant_term();
    if a0.is_negligible(probe.tol) {
        // the shift vanishes; the truncated generator is all that is needed
        return compose_nonunit_with_tol(&g.truncate(order), f, probe.tol);
    }
    match gct_check_with(g, a0, probe) {
        GctOutcome::Exists => {}
        GctOutcome::Fails { at_k } => return Err(Error::CompositionDoesNotExist { at_k }),
        GctOutcome::Inconclusive => return Err(Error::GctInconclusive),
    }
    let mut shifted = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let coeff = match g.taylor_at(a0, n) {
            Some(c) => c,
            None => shifted_taylor_coeff_by_summation(g, a0, n, sum)?,
        };
        shifted.push(coeff);
    }
    compose_nonunit_with_tol(&Series::new(shifted), &f.sub_constant(), probe.tol)
}

/// g^(n)(a0)/n! = sum_{s>=n} C(s,n) b_s a0^(s-n) by direct summation, with a
/// ratio-estimated tail bound as the stopping rule. Float mode only: an
/// exact partial sum would not be exact, so exact mode must go through a
/// registered closed form.
fn shifted_taylor_coeff_by_summation<C: Coeff>(
    g: &AnalyticSeries<C>,
    a0: &C,
    n: usize,
    options: &TailSumOptions,
) -> Result<C> {
    if C::EXACT {
        return Err(Error::NoClosedForm);
    }
    // u_s = C(s, n) a0^(s-n), updated incrementally
    let mut u = C::one();
    let mut sum = C::zero();
    let mut prev_mag: Option<f64> = None;
    let mut quiet = 0usize;
    for step in 0..options.max_terms {
        let s = n + step;
        if step > 0 {
            let ratio = C::from_int(s as i64) * C::from_int((s - n) as i64).recip().unwrap();
            u = u.clone() * a0.clone() * ratio;
        }
        let term = u.clone() * g.coeff(s);
        sum = sum + term.clone();
        let mag = term.magnitude();
        if let Some(prev) = prev_mag {
            if prev > 0.0 && mag > 0.0 {
                let q = mag / prev;
                if q < 1.0 && mag * q / (1.0 - q) < options.tolerance {
                    quiet += 1;
                    if quiet >= 3 {
                        return Ok(sum);
                    }
                } else {
                    quiet = 0;
                }
            } else if mag == 0.0 {
                quiet += 1;
                if quiet >= 8 {
                    return Ok(sum);
                }
            }
        }
        prev_mag = Some(mag);
    }
    Err(Error::ToleranceNotMet { tol: options.tolerance, terms: options.max_terms })
}

/// Brute-force coefficient n of g o f for nonunit f, by explicit enumeration
/// of the weighted partition tuples:
/// c_n = sum_s sum_{R_{n,s}} b_s s!/(r_0! ... r_n!) a_0^{r_0} ... a_n^{r_n}.
/// Exponentially slow; used only as an independent oracle against the
/// production composition paths.
pub fn multinomial_oracle<C: Coeff>(g: &Series<C>, f: &Series<C>, n: usize) -> Result<C> {
    if !f.constant_term().is_negligible(DEFAULT_TOLERANCE) {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut total = C::zero();
    for s in 0..=n.min(g.order()) {
        let set = PartitionSet::new(n, s);
        for tuple in &set.elements {
            // a0 = 0 silences every tuple with r_0 > 0
            if tuple[0] > 0 {
                continue;
            }
            let mut term = g.coeff(s) * factorial::<C>(s);
            for (i, &r) in tuple.iter().enumerate().skip(1) {
                if r == 0 {
                    continue;
                }
                for _ in 0..r {
                    term = term * f.coeff(i);
                }
                term = term * factorial::<C>(r).recip().expect("factorial is nonzero");
            }
            total = total + term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Complex64, GaussRational};
    use crate::registry;
    use proptest::prelude::*;

    type S = Series<GaussRational>;

    #[test]
    fn fibonacci_composition() {
        // (1 + z + z^2 + ...) o (z + z^2) expands 1/(1 - z - z^2)
        let order = 4;
        let geo = S::new(vec![GaussRational::from_int(1); order + 1]);
        let f = S::from_ints(&[0, 1, 1, 0, 0]);
        let got = compose_nonunit(&geo, &f).unwrap();
        // oracle: multiplicative inverse of 1 - z - z^2
        let expect = S::from_ints(&[1, -1, -1, 0, 0]).mul_inverse().unwrap();
        assert_eq!(got, expect);
        assert_eq!(got, S::from_ints(&[1, 1, 2, 3, 5]));
    }

    #[test]
    fn identity_left_and_right() {
        let g = S::from_ints(&[2, -3, 5, 7]);
        assert_eq!(compose_nonunit(&g, &S::identity(3)).unwrap(), g);
        let f = S::from_ints(&[0, 4, -2, 1]);
        assert_eq!(compose_nonunit(&S::identity(3), &f).unwrap(), f);
    }

    #[test]
    fn nonunit_precondition() {
        let g = S::from_ints(&[1, 1]);
        let f = S::from_ints(&[1, 1]);
        assert!(matches!(compose_nonunit(&g, &f), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn oracle_hand_case() {
        // [z^2] (1 + z + z^2) o (z + z^2) = b1 a2 + b2 a1^2 = 2
        let g = S::from_ints(&[1, 1, 1]);
        let f = S::from_ints(&[0, 1, 1]);
        assert_eq!(multinomial_oracle(&g, &f, 2).unwrap(), GaussRational::from_int(2));
    }

    #[test]
    fn oracle_identity_inner() {
        let g = S::from_ints(&[3, 1, 4, 1, 5]);
        for n in 0..=4 {
            assert_eq!(multinomial_oracle(&g, &S::identity(4), n).unwrap(), g.coeff(n));
        }
    }

    #[test]
    fn pow_matches_partition_enumeration() {
        // [z^n] f^k is the monomial case g = z^k of the oracle
        let f = Series::new(vec![
            GaussRational::from_int(0),
            GaussRational::from_ratio(1, 2),
            GaussRational::from_int(-1),
            GaussRational::from_ratio(2, 3),
            GaussRational::from_int(1),
            GaussRational::from_int(0),
            GaussRational::from_ratio(-1, 5),
            GaussRational::from_int(2),
            GaussRational::from_int(1),
        ]);
        for k in 0..=8usize {
            let monomial = Series::monomial(GaussRational::from_int(1), k, 8);
            let power = f.pow(k);
            for n in 0..=8usize {
                assert_eq!(
                    power.coeff(n),
                    multinomial_oracle(&monomial, &f, n).unwrap(),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn polynomial_substitution() {
        // (1 + z^2) o (3 + z) = 10 + 6z + z^2
        let g = S::from_ints(&[1, 0, 1]);
        let f = S::from_ints(&[3, 1, 0]);
        assert_eq!(compose_general_series(&g, &f).unwrap(), S::from_ints(&[10, 6, 1]));
    }

    #[test]
    fn general_composition_with_zero_shift_is_nonunit_composition() {
        let g = S::from_ints(&[1, 2, 3, 4, 5]);
        let f = S::from_ints(&[0, 1, 1, 0, 0]);
        assert_eq!(
            compose_general_series(&g, &f).unwrap(),
            compose_nonunit(&g, &f).unwrap()
        );
    }

    #[test]
    fn geometric_outer_closed_form_is_exact() {
        // (sum z^n) o (1/2 + z) = 2/(1 - 2z): coefficients 2^(n+1)
        let g = registry::geometric::<GaussRational>();
        let f = S::from_ints(&[0, 1]).add(&S::constant(GaussRational::from_ratio(1, 2), 1));
        let f = f.padded(8);
        let got = compose_general(&g, &f, 8).unwrap();
        let expect = S::new((0..=8).map(|n| GaussRational::from_int(1 << (n + 1))).collect());
        assert_eq!(got, expect);
    }

    #[test]
    fn float_summation_matches_closed_form() {
        let g = registry::geometric::<Complex64>();
        let stripped = AnalyticSeries::new(|_| Complex64::from_int(1), 1.0)
            .with_boundary_summable(Some(false));
        let f = Series::<Complex64>::from_ints(&[0, 1])
            .add(&Series::constant(Complex64::from_ratio(1, 2), 1))
            .padded(8);
        let by_closed_form = compose_general(&g, &f, 8).unwrap();
        let by_summation = compose_general(&stripped, &f, 8).unwrap();
        assert!(by_summation.close_to(&by_closed_form, 1e-9));
    }

    #[test]
    fn exact_mode_without_closed_form_is_refused() {
        let stripped = AnalyticSeries::<GaussRational>::new(|_| Coeff::one(), 1.0);
        let f = S::from_ints(&[0, 1]).add(&S::constant(GaussRational::from_ratio(1, 2), 1));
        assert!(matches!(
            compose_general(&stripped, &f, 4),
            Err(Error::NoClosedForm)
        ));
    }

    #[test]
    fn gct_radius_zero_fails_immediately() {
        let fact = registry::factorial_series::<Complex64>();
        let half = Complex64::from_ratio(1, 2);
        assert_eq!(gct_check(&fact, &half), GctOutcome::Fails { at_k: Some(0) });
    }

    #[test]
    fn gct_interior_exists() {
        let geo = registry::geometric::<Complex64>();
        let half = Complex64::from_ratio(1, 2);
        assert_eq!(gct_check(&geo, &half), GctOutcome::Exists);
    }

    #[test]
    fn gct_boundary_probe_finds_second_derivative() {
        // sum z^n / n^3 at a0 = 1: g and g' converge, g'' is harmonic-like
        let g = registry::inverse_power::<Complex64>(3);
        let one = Complex64::from_int(1);
        assert_eq!(gct_check(&g, &one), GctOutcome::Fails { at_k: Some(2) });
    }

    #[test]
    fn gct_boundary_flag_short_circuits() {
        let g = registry::inverse_power::<Complex64>(4).with_boundary_summable(Some(true));
        let one = Complex64::from_int(1);
        assert_eq!(gct_check(&g, &one), GctOutcome::Exists);
    }

    #[test]
    fn gct_exterior_fails() {
        let geo = registry::geometric::<Complex64>();
        let two = Complex64::from_int(2);
        assert_eq!(gct_check(&geo, &two), GctOutcome::Fails { at_k: Some(0) });
    }

    fn arb_coeff() -> impl Strategy<Value = GaussRational> {
        (-3i64..=3, 1i64..=3).prop_map(|(a, b)| GaussRational::from_ratio(a, b))
    }

    fn arb_series(order: usize) -> impl Strategy<Value = S> {
        proptest::collection::vec(arb_coeff(), order + 1..=order + 1).prop_map(Series::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn composition_associates(
            h in arb_series(12),
            mut g in arb_series(12),
            mut f in arb_series(12),
        ) {
            g = g.sub_constant();
            f = f.sub_constant();
            let left = compose_nonunit(&compose_nonunit(&h, &g).unwrap(), &f).unwrap();
            let right = compose_nonunit(&h, &compose_nonunit(&g, &f).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn horner_matches_multinomial_oracle(g in arb_series(8), mut f in arb_series(8)) {
            f = f.sub_constant();
            let composed = compose_nonunit(&g, &f).unwrap();
            for n in 0..=8 {
                prop_assert_eq!(
                    composed.coeff(n),
                    multinomial_oracle(&g, &f, n).unwrap(),
                    "coefficient {}", n
                );
            }
        }

        #[test]
        fn taylor_shift_route_matches_direct_substitution(g in arb_series(8), f in arb_series(8)) {
            // direct polynomial substitution: Horner over full series ops,
            // no nonunit restriction, g treated as polynomial data
            let order = 8usize;
            let mut direct = Series::constant(g.coeff(order), order);
            for k in (0..order).rev() {
                direct = direct.cauchy_mul(&f);
                direct = direct.add(&Series::constant(g.coeff(k), order));
            }
            prop_assert_eq!(compose_general_series(&g, &f).unwrap(), direct);
        }
    }
}
