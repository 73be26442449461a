//! The metric of pointwise convergence, and why joint continuity of
//! composition fails: a sequence f_k collapsing to zero in the metric whose
//! compositions with a fixed unit series keep constant term 2.
//!
//! Run with: cargo run --example metric_discontinuity

use fps::calculus::{metric, metric_exact};
use fps::registry::geometric_tail;
use fps::{compose_general, Coeff, GaussRational, Series};

fn main() {
    let order = 24;

    // d(f, g) weighs coefficient differences by 2^-n; a truncation also
    // reports the bound 2^-N on whatever the unseen tail could add
    let z = Series::<GaussRational>::identity(order);
    let zero = Series::zero(order);
    let d = metric(&zero, &z);
    println!("d(0, z) = {} (+ tail bound {})", d.value, d.tail_bound);

    // g is any unit series with constant term 1/2
    let g = Series::identity(order)
        .add(&Series::constant(GaussRational::from_ratio(1, 2), order));

    println!("\nf_k = 2^k (z^k + z^(k+1) + ...), composed with g = 1/2 + z:");
    for k in 1..=10usize {
        let f_k = geometric_tail::<GaussRational>(k, GaussRational::from_int(1 << k));
        let composed = compose_general(&f_k, &g, order).unwrap();
        let distance = metric_exact(&f_k.truncate(order), &zero).unwrap();
        println!(
            "  k = {k:2}: [z^0](f_k o g) = {}, d(f_k, 0) = {}",
            composed.coeff(0).re,
            distance
        );
        assert_eq!(composed.coeff(0), GaussRational::from_int(2));
    }
    println!("\nthe f_k vanish in the metric while every composition keeps [z^0] = 2,");
    println!("so (g, f) -> g o f admits no jointly continuous extension");
}
