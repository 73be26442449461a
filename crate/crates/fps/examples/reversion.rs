//! Compositional inversion of nonunit series.
//!
//! Run with: cargo run --example reversion

use fps::{compose_nonunit, reversion, GaussRational, Series};

fn main() {
    let order = 8;

    // f = z + z^2: its reversion carries the Catalan numbers with
    // alternating signs
    let f = Series::<GaussRational>::from_ints(&[0, 1, 1]).padded(order);
    let g = reversion(&f).unwrap();
    println!("f      = {f}");
    println!("f^[-1] = {g}");

    // the round trip lands back on the identity series, exactly
    let round = compose_nonunit(&g, &f).unwrap();
    assert_eq!(round, Series::identity(order));
    println!("g o f  = {round}");

    // reversion is an involution at the truncation
    assert_eq!(reversion(&g).unwrap(), f);
    println!("reversion(reversion(f)) == f holds exactly");

    // the linear case inverts the slope
    let double = Series::<GaussRational>::from_ints(&[0, 2]).padded(4);
    println!("reversion(2z) = {}", reversion(&double).unwrap());
}
