//! Left composition inverses of unit series.
//!
//! The candidate is a Taylor shift of the reversion of f - a0 and always
//! satisfies candidate o f = z at the truncation; whether the infinite
//! object exists is reported heuristically via a radius estimate.
//!
//! Run with: cargo run --example left_inverse

use fps::compose::compose_general_series;
use fps::invert::pascal_solve;
use fps::{left_inverse, reversion, GaussRational, Series};

fn main() {
    let order = 10;

    // affine series invert exactly
    let affine = Series::<GaussRational>::from_ints(&[2, 3]);
    let report = left_inverse(&affine).unwrap();
    println!("f = {affine}");
    println!("  candidate = {}", report.candidate);
    println!("  existence = {} ({})", report.existence, report.detail);

    // f = 1 + z + z^2: the reversion of f - 1 has radius ~ 1/4, well below
    // |a0| = 1, so the heuristic votes no -- yet the truncated identity
    // still holds
    let f = Series::<GaussRational>::from_ints(&[1, 1, 1]).padded(order);
    let report = left_inverse(&f).unwrap();
    println!("f = {f}");
    println!("  existence       = {}", report.existence);
    println!("  radius estimate = {:?}", report.radius_estimate);
    println!("  detail          = {}", report.detail);
    let composed = compose_general_series(&report.candidate, &f).unwrap();
    assert_eq!(composed, Series::identity(order));
    println!("  candidate o f   = {composed}");

    // the generalized Pascal system is the independent route to the same
    // coefficients: P(a0) b = c with c the reversion of f - a0
    let h = reversion(&f.sub_constant()).unwrap();
    let by_pascal = pascal_solve(&f.coeff(0), &h);
    assert_eq!(by_pascal, report.candidate);
    println!("  Pascal back substitution agrees with the Taylor-shift route");
}
