//! The superposition operator f -> g o f is differentiable where it is
//! defined, with derivative (g' o w) k at base point w in direction k.
//! Finite differences verify the claim at a sweep of step sizes.
//!
//! Run with: cargo run --example derivative_probe

use fps::calculus::{
    finite_difference_probe, finite_difference_probe_series, superposition_derivative,
    taylor_remainder_series,
};
use fps::registry::geometric;
use fps::{Coeff, Complex64, GaussRational, Series};

fn main() {
    let order = 8;

    // exact witness: for g = z^2 the finite-difference remainder is t k^2,
    // literally
    let g = Series::<GaussRational>::from_ints(&[0, 0, 1]).padded(order);
    let w = Series::from_ints(&[1, 2, 0, 1]).padded(order);
    let k = Series::from_ints(&[0, 1, 1]).padded(order);
    let ts = vec![
        GaussRational::from_ratio(1, 10),
        GaussRational::from_ratio(1, 100),
        GaussRational::from_ratio(1, 1000),
    ];
    let probe = finite_difference_probe_series(&g, &w, &k, &ts).unwrap();
    for (i, t) in ts.iter().enumerate() {
        assert_eq!(probe.remainders[i], k.cauchy_mul(&k).scaled(t));
    }
    println!("g = z^2: finite-difference remainder equals t k^2 exactly");

    // float sweep against the geometric series at w = 1/2 + z, k = 1 + z:
    // the remainder sup-norm scales like t, slope 1 on a log-log fit
    let geo = geometric::<Complex64>();
    let w = Series::<Complex64>::identity(order)
        .add(&Series::constant(Complex64::from_ratio(1, 2), order));
    let k = Series::<Complex64>::one(order).add(&Series::identity(order));
    let ts: Vec<Complex64> = [1e-2, 1e-3, 1e-4, 1e-5]
        .iter()
        .map(|&t| Complex64::new(t, 0.0))
        .collect();
    let probe = finite_difference_probe(&geo, &w, &k, &ts, order).unwrap();
    println!("geometric outer, w = 1/2 + z, k = 1 + z:");
    for (i, t) in probe.t_values.iter().enumerate() {
        println!("  t = {:>8.0e}: remainder sup-norm {:.6e}", t.re, probe.sup_norm(i, 8));
    }
    println!("  log-log slope = {:.4}", probe.fitted_slope(8).unwrap());

    // the derivative itself, materialized: (g' o w) k
    let derivative = superposition_derivative(&geo, &w, &k, order).unwrap();
    println!("(g' o w) k = {derivative}");

    // Taylor remainders: a cubic outer series expanded to second order
    // leaves exactly t^3 k^3
    let cubic = Series::<GaussRational>::from_ints(&[0, 0, 0, 1]).padded(6);
    let f = Series::from_ints(&[0, 1, 2]).padded(6);
    let dir = Series::from_ints(&[1, 1]).padded(6);
    let t = GaussRational::from_ratio(1, 10);
    let remainder = taylor_remainder_series(&cubic, &f, &dir, 2, &t).unwrap();
    let t3 = t.clone() * t.clone() * t.clone();
    assert_eq!(remainder, dir.pow(3).scaled(&t3));
    println!("g = z^3, n = 2: Taylor remainder equals t^3 k^3 exactly");
}
