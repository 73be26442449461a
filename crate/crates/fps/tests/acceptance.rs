//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.
//!
//! Everything here is reproducible at desk scale: exact arithmetic where the
//! claim is an identity, seeded randomness for the randomized searches, and
//! pinned tolerances for the float-mode witnesses.

use fps::calculus::{
    default_exact_sweep, default_float_sweep, finite_difference_probe,
    finite_difference_probe_series, metric_exact, taylor_remainder, taylor_remainder_series,
};
use fps::coeff::imaginary_unit;
use fps::compose::{compose_general, compose_general_series, compose_nonunit, multinomial_oracle};
use fps::invert::{left_inverse, pascal_solve, reversion};
use fps::lie::{
    group_mul, invariant_field_derivative, lie_bracket, similarity, AlgebraElement, GroupElement,
};
use fps::registry::{geometric, geometric_tail, inverse_power};
use fps::{
    comp_matrix, gct_check, matrix_compose, pascal_matrix, Coeff, Complex64, GaussRational,
    GctOutcome, Series,
};
use num::rational::BigRational;
use num::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

type S = Series<GaussRational>;

fn q(num: i64, den: i64) -> GaussRational {
    GaussRational::from_ratio(num, den)
}

fn random_coeff(rng: &mut StdRng) -> GaussRational {
    let re = q(rng.gen_range(-2..=2), rng.gen_range(1..=2));
    let im = q(rng.gen_range(-2..=2), rng.gen_range(1..=2)) * imaginary_unit();
    re + im
}

fn random_series(rng: &mut StdRng, order: usize) -> S {
    Series::new((0..=order).map(|_| random_coeff(rng)).collect())
}

fn random_nonunit(rng: &mut StdRng, order: usize) -> S {
    let mut coeffs: Vec<GaussRational> = (0..=order).map(|_| random_coeff(rng)).collect();
    coeffs[0] = Coeff::zero();
    while coeffs[1].is_negligible(0.0) {
        coeffs[1] = random_coeff(rng);
    }
    Series::new(coeffs)
}

fn random_group_element(rng: &mut StdRng, order: usize) -> GroupElement<GaussRational> {
    GroupElement::new(random_nonunit(rng, order)).unwrap()
}

fn random_algebra_element(rng: &mut StdRng, order: usize) -> AlgebraElement<GaussRational> {
    let mut coeffs: Vec<GaussRational> = (0..=order).map(|_| random_coeff(rng)).collect();
    coeffs[0] = Coeff::zero();
    AlgebraElement::new(Series::new(coeffs)).unwrap()
}

#[test]
fn criterion_01_reversion_round_trip() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(101);
    let order = 16;
    for case in 0..200 {
        let f = random_nonunit(&mut rng, order);
        let g = reversion(&f).unwrap();
        assert_eq!(
            compose_nonunit(&g, &f).unwrap(),
            Series::identity(order),
            "case {case}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("PASS criterion 1: 200 exact reversion round-trips at order 16 in {elapsed:?}");
}

#[test]
fn criterion_02_catalan_witness() {
    let f = S::from_ints(&[0, 1, 1]).padded(8);
    let got = reversion(&f).unwrap();
    let expect = S::from_ints(&[0, 1, -1, 2, -5, 14, -42, 132, -429]);
    assert_eq!(got, expect);
    println!("PASS criterion 2: reversion(z + z^2) at order 8 is the signed Catalan sequence");
}

#[test]
fn criterion_03_oracle_triangle() {
    let mut rng = StdRng::seed_from_u64(103);
    let order = 8;
    for case in 0..50 {
        let g = random_series(&mut rng, order);
        let f = random_nonunit(&mut rng, order);
        let horner = compose_nonunit(&g, &f).unwrap();
        let by_matrix = matrix_compose(&g, &f);
        assert_eq!(horner, by_matrix, "case {case}: matrix route");
        for n in 0..=order {
            assert_eq!(
                horner.coeff(n),
                multinomial_oracle(&g, &f, n).unwrap(),
                "case {case}: oracle at coefficient {n}"
            );
        }
    }
    println!("PASS criterion 3: Horner = multinomial oracle = matrix route on 50 exact pairs at order 8");
}

#[test]
fn criterion_04_pascal_transpose_identity() {
    let mut rng = StdRng::seed_from_u64(104);
    for case in 0..20 {
        let a0 = random_coeff(&mut rng);
        let pascal = pascal_matrix(&a0, 12);
        let shift = Series::identity(11).add(&Series::constant(a0.clone(), 11));
        let matrix = comp_matrix(&shift, 11);
        for k in 0..12 {
            for n in 0..12 {
                assert_eq!(
                    pascal.entry(k, n),
                    matrix.transposed_entry(k, n),
                    "case {case}: entry ({k}, {n})"
                );
            }
        }
    }
    println!("PASS criterion 4: P(a0) equals the transposed composition matrix of z + a0, 20 random shifts");
}

#[test]
fn criterion_05_left_inverse_routes() {
    let mut rng = StdRng::seed_from_u64(105);
    for case in 0..100 {
        // random polynomial of degree <= 10 with a1 != 0, stored at order 10
        let degree = rng.gen_range(1..=10usize);
        let f = random_nonunit(&mut rng, degree);
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = random_coeff(&mut rng);
        let f = Series::new(coeffs).padded(10);

        let report = left_inverse(&f).unwrap();
        assert_eq!(
            compose_general_series(&report.candidate, &f).unwrap(),
            Series::identity(10),
            "case {case}: candidate o f != z mod z^11"
        );

        // independent Pascal-solve route at order 20, compared on the
        // leading coefficients
        let f20 = f.padded(20);
        let candidate20 = left_inverse(&f20).unwrap().candidate;
        let h20 = reversion(&f20.sub_constant()).unwrap();
        let by_pascal = pascal_solve(&f20.coeff(0), &h20);
        for n in 0..6 {
            assert_eq!(
                candidate20.coeff(n),
                by_pascal.coeff(n),
                "case {case}: pascal route coefficient {n}"
            );
        }
    }
    println!("PASS criterion 5: 100 left inverses compose to z mod z^11; Pascal route agrees on 6 leading coefficients at order 20");
}

#[test]
fn criterion_06_general_composition_closed_form() {
    let order = 12;
    // exact mode through the registered closed form
    let g = geometric::<GaussRational>();
    let f = Series::identity(order).add(&Series::constant(q(1, 2), order));
    let got = compose_general(&g, &f, order).unwrap();
    let expect = Series::new(
        (0..=order)
            .map(|n| GaussRational::from_int(1i64 << (n + 1)))
            .collect(),
    );
    assert_eq!(got, expect);

    // float mode within 1e-10 relative
    let gf = geometric::<Complex64>();
    let ff = Series::<Complex64>::identity(order)
        .add(&Series::constant(Complex64::from_ratio(1, 2), order));
    let got_float = compose_general(&gf, &ff, order).unwrap();
    for n in 0..=order {
        let expect = (1u64 << (n + 1)) as f64;
        let rel = (got_float.coeff(n).re - expect).abs() / expect;
        assert!(rel < 1e-10, "coefficient {n}: relative error {rel}");
        assert!(got_float.coeff(n).im.abs() < 1e-10);
    }
    println!("PASS criterion 6: (sum z^n) o (1/2 + z) has coefficients 2^(n+1), exact and float");
}

#[test]
fn criterion_07_discontinuity_witness() {
    let order = 24;
    // g is any series with b0 = 1/2
    let g = Series::identity(order)
        .add(&Series::constant(q(1, 2), order))
        .add(&Series::monomial(q(1, 3), 2, order));
    let zero = S::zero(order);
    let two = GaussRational::from_int(2);
    let mut previous: Option<BigRational> = None;
    for k in 1..=10usize {
        let scale = GaussRational::from_int(1i64 << k);
        let f_k = geometric_tail::<GaussRational>(k, scale);
        // the 0th coefficient of f_k o g is f_k(1/2) = 2, exactly
        let composed = compose_general(&f_k, &g, order).unwrap();
        assert_eq!(composed.coeff(0), two, "k = {k}");

        // while the truncations of f_k collapse to 0 in the metric
        let truncated = f_k.truncate(order);
        let distance = metric_exact(&truncated, &zero).unwrap();
        let bound = BigRational::new(BigInt::from(4), BigInt::from(1i64 << k));
        assert!(distance < bound, "k = {k}: d = {distance} !< {bound}");
        if let Some(prev) = previous {
            assert!(distance < prev, "k = {k}: metric did not decrease");
        }
        previous = Some(distance);
    }
    println!("PASS criterion 7: [z^0](f_k o g) = 2 for k = 1..10 while d(f_k, 0) sinks below 2^(2-k)");
}

#[test]
fn criterion_08_derivative_probe() {
    // float sweep for the geometric outer series
    let order = 8;
    let g = geometric::<Complex64>();
    let w = Series::<Complex64>::identity(order)
        .add(&Series::constant(Complex64::from_ratio(1, 2), order));
    let k = Series::<Complex64>::one(order).add(&Series::identity(order));
    let ts = default_float_sweep();
    let probe = finite_difference_probe(&g, &w, &k, &ts, order).unwrap();
    let slope = probe.fitted_slope(8).unwrap();
    assert!(
        (0.9..=1.1).contains(&slope),
        "log-log slope {slope} outside [0.9, 1.1]"
    );

    // exact mode: g = z^2 leaves remainder exactly t k^2
    let order = 6;
    let g2 = S::from_ints(&[0, 0, 1]).padded(order);
    let w2 = Series::identity(order).add(&Series::constant(q(1, 2), order));
    let k2 = S::from_ints(&[1, 1]).padded(order);
    let rational_ts = default_exact_sweep();
    let exact_probe = finite_difference_probe_series(&g2, &w2, &k2, &rational_ts).unwrap();
    for (i, t) in rational_ts.iter().enumerate() {
        assert_eq!(exact_probe.remainders[i], k2.cauchy_mul(&k2).scaled(t), "t index {i}");
    }
    println!("PASS criterion 8: probe slope {slope:.3} in [0.9, 1.1]; exact quadratic remainder is t k^2");
}

#[test]
fn criterion_09_taylor_formula() {
    // polynomial outer series of degree n: remainder at order n is zero
    let order = 8;
    for degree in 1..=3usize {
        let g = Series::new(
            (0..=degree)
                .map(|j| GaussRational::from_int(j as i64 + 1))
                .collect::<Vec<_>>(),
        )
        .padded(order);
        let f = S::from_ints(&[1, 1, 0, 2]).padded(order);
        let k = S::from_ints(&[0, 1, 1]).padded(order);
        let remainder = taylor_remainder_series(&g, &f, &k, degree, &q(1, 10)).unwrap();
        assert!(remainder.is_zero(0.0), "degree {degree}");
    }

    // infinite outer series: remainder / t^n shrinks by >= 5 per decade
    let g = geometric::<Complex64>();
    let order = 6;
    let f = Series::<Complex64>::identity(order)
        .add(&Series::constant(Complex64::from_ratio(1, 2), order));
    let k = Series::<Complex64>::one(order);
    for n in 1..=2usize {
        let mut previous: Option<f64> = None;
        for exp in 1..=3i32 {
            let t = 10f64.powi(-exp);
            let remainder =
                taylor_remainder(&g, &f, &k, n, &Complex64::new(t, 0.0), order).unwrap();
            let sup = remainder
                .coeffs()
                .iter()
                .map(|c| c.norm())
                .fold(0.0, f64::max);
            let scaled = sup / t.powi(n as i32);
            if let Some(prev) = previous {
                assert!(
                    scaled * 5.0 <= prev,
                    "n = {n}, t = {t}: {scaled} does not shrink 5x from {prev}"
                );
            }
            previous = Some(scaled);
        }
    }
    println!("PASS criterion 9: polynomial Taylor remainders vanish; geometric remainder/t^n shrinks >= 5x per decade, n = 1, 2");
}

#[test]
fn criterion_10_lie_algebra_suite() {
    let mut rng = StdRng::seed_from_u64(110);
    let order = 12;
    for case in 0..100 {
        let f = random_algebra_element(&mut rng, order);
        let g = random_algebra_element(&mut rng, order);
        let h = random_algebra_element(&mut rng, order);

        // antisymmetry
        assert_eq!(
            lie_bracket(&f, &g).series().clone(),
            lie_bracket(&g, &f).series().negated(),
            "case {case}: antisymmetry"
        );

        // bilinearity in the first slot (the second follows by antisymmetry)
        let alpha = random_coeff(&mut rng);
        let beta = random_coeff(&mut rng);
        let combo = AlgebraElement::new(
            f.series().scaled(&alpha).add(&g.series().scaled(&beta)),
        )
        .unwrap();
        assert_eq!(
            lie_bracket(&combo, &h).series().clone(),
            lie_bracket(&f, &h)
                .series()
                .scaled(&alpha)
                .add(&lie_bracket(&g, &h).series().scaled(&beta)),
            "case {case}: bilinearity"
        );

        // Jacobi identity
        let jacobi = lie_bracket(&lie_bracket(&f, &g), &h)
            .series()
            .add(lie_bracket(&lie_bracket(&g, &h), &f).series())
            .add(lie_bracket(&lie_bracket(&h, &f), &g).series());
        assert!(jacobi.is_zero(0.0), "case {case}: Jacobi");

        // invariant-field antisymmetrization at g = z recovers the bracket
        let z = Series::identity(order);
        let anti = invariant_field_derivative(&z, &f, &g)
            .sub(&invariant_field_derivative(&z, &g, &f));
        assert_eq!(anti, lie_bracket(&f, &g).series().clone(), "case {case}: field derivative");
    }

    // [z^2, z^3] = z^4
    let z2 = AlgebraElement::new(S::from_ints(&[0, 0, 1, 0, 0])).unwrap();
    let z3 = AlgebraElement::new(S::from_ints(&[0, 0, 0, 1, 0])).unwrap();
    assert_eq!(
        lie_bracket(&z2, &z3).series().clone(),
        S::from_ints(&[0, 0, 0, 0, 1])
    );
    println!("PASS criterion 10: bracket axioms and Jacobi exact on 100 random triples at order 12; [z^2, z^3] = z^4");
}

#[test]
fn criterion_11_group_similarity_suite() {
    let mut rng = StdRng::seed_from_u64(111);
    let order = 12;
    for case in 0..100 {
        let g = random_group_element(&mut rng, order);
        let f1 = random_group_element(&mut rng, order);
        let f2 = random_group_element(&mut rng, order);

        // the slope is a homomorphism onto the multiplicative group
        assert_eq!(
            group_mul(&g, &f1).slope(),
            g.slope() * f1.slope(),
            "case {case}: slope homomorphism"
        );

        // conjugation preserves the slope and respects the group law
        assert_eq!(similarity(&g, &f1).slope(), f1.slope(), "case {case}: slope preserved");
        assert_eq!(
            similarity(&g, &group_mul(&f1, &f2)),
            group_mul(&similarity(&g, &f1), &similarity(&g, &f2)),
            "case {case}: conjugation respects composition"
        );
    }
    println!("PASS criterion 11: slope homomorphism and similarity laws exact on 100 random pairs at order 12");
}

#[test]
fn criterion_12_gct_boundary_heuristic() {
    // the probe pins the divergence of the second derivative series
    let g3 = inverse_power::<Complex64>(3);
    let one = Complex64::from_int(1);
    assert_eq!(gct_check(&g3, &one), GctOutcome::Fails { at_k: Some(2) });

    // a caller-supplied boundary flag short-circuits the probe
    let g4 = inverse_power::<Complex64>(4).with_boundary_summable(Some(true));
    assert_eq!(gct_check(&g4, &one), GctOutcome::Exists);
    println!("PASS criterion 12: boundary probe reports fails_at_k=2 for sum z^n/n^3 at 1; flagged sum z^n/n^4 exists");
}
