//! General composition: the inner series may have a nonzero constant term.
//!
//! Run with: cargo run --example compose_general

use fps::compose::compose_general_series;
use fps::registry::{factorial_series, geometric, inverse_power};
use fps::{compose_general, gct_check, Coeff, Complex64, GaussRational, GctOutcome, Series};

fn main() {
    let order = 8;

    // (sum z^n) o (1/2 + z): the outer series is infinite, the shift 1/2
    // sits inside the radius, and the registered closed form makes the
    // result exact: 2/(1 - 2z) with coefficients 2^(n+1)
    let geo = geometric::<GaussRational>();
    let f = Series::identity(order).add(&Series::constant(GaussRational::from_ratio(1, 2), order));
    let composed = compose_general(&geo, &f, order).unwrap();
    println!("(sum z^n) o (1/2 + z) = {composed}");

    // polynomial outer series compose with anything, exactly
    let g = Series::<GaussRational>::from_ints(&[1, 0, 1]);
    let shifted = Series::<GaussRational>::from_ints(&[3, 1, 0]);
    println!(
        "(1 + z^2) o (3 + z)   = {}",
        compose_general_series(&g, &shifted).unwrap()
    );

    // existence is decided before any coefficient is touched
    let factorial = factorial_series::<Complex64>();
    let half = Complex64::from_ratio(1, 2);
    match gct_check(&factorial, &half) {
        GctOutcome::Fails { at_k } => {
            println!("(sum n! z^n) o (1/2 + ...): fails, first divergent derivative k = {at_k:?}")
        }
        other => println!("unexpected: {other:?}"),
    }

    // on the boundary |a0| = r the probe inspects the derivative series
    let zeta3 = inverse_power::<Complex64>(3);
    let one = Complex64::from_int(1);
    println!("(sum z^n/n^3) at a0 = 1: {:?}", gct_check(&zeta3, &one));

    // a caller-supplied summability flag settles the boundary outright
    let zeta4 = inverse_power::<Complex64>(4).with_boundary_summable(Some(true));
    println!("(sum z^n/n^4, flagged) at a0 = 1: {:?}", gct_check(&zeta4, &one));
}
