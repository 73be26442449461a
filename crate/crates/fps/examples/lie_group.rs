//! The group of nonunit series with nonzero slope, under composition, and
//! its Lie algebra with bracket [f, g] = f g' - f' g.
//!
//! Run with: cargo run --example lie_group

use fps::lie::{
    group_inv, group_mul, invariant_field_derivative, levelset_member, lie_bracket, similarity,
    AlgebraElement, GroupElement,
};
use fps::{Coeff, GaussRational, Series};

fn main() {
    let order = 6;

    // the group law is composition; slopes multiply
    let f = GroupElement::new(Series::<GaussRational>::from_ints(&[0, 1, 1]).padded(order)).unwrap();
    let g = GroupElement::new(Series::<GaussRational>::from_ints(&[0, 2, 0, 1]).padded(order)).unwrap();
    let product = group_mul(&g, &f);
    println!("g o f = {product}");
    assert_eq!(product.slope(), g.slope() * f.slope());

    // inverses are reversions; the round trip is the identity exactly
    let inv = group_inv(&f);
    assert_eq!(group_mul(&inv, &f), GroupElement::identity(order));
    println!("f^[-1] = {inv}");

    // the bracket of the corresponding Lie algebra
    let a = AlgebraElement::new(Series::<GaussRational>::from_ints(&[0, 0, 1]).padded(order)).unwrap();
    let b = AlgebraElement::new(Series::<GaussRational>::from_ints(&[0, 0, 0, 1]).padded(order)).unwrap();
    println!("[z^2, z^3] = {}", lie_bracket(&a, &b).series());

    // Jacobi closes exactly at the truncation
    let c = AlgebraElement::new(Series::<GaussRational>::from_ints(&[0, 1, 0, 0, 2]).padded(order)).unwrap();
    let jacobi = lie_bracket(&lie_bracket(&a, &b), &c)
        .series()
        .add(lie_bracket(&lie_bracket(&b, &c), &a).series())
        .add(lie_bracket(&lie_bracket(&c, &a), &b).series());
    assert!(jacobi.is_zero(0.0));
    println!("Jacobi identity holds exactly");

    // the bracket is the antisymmetrized derivative of left-invariant
    // fields, evaluated at the identity
    let z = Series::identity(order);
    let anti = invariant_field_derivative(&z, &a, &b)
        .sub(&invariant_field_derivative(&z, &b, &a));
    assert_eq!(anti, lie_bracket(&a, &b).series().clone());

    // conjugation preserves the slope
    let conjugated = similarity(&g, &f);
    println!("S_g(f) = {conjugated}");
    assert_eq!(conjugated.slope(), f.slope());

    // level sets of the slope are subgroups: here, slope = 1
    let unit_slope = |c: &GaussRational| *c == GaussRational::from_int(1);
    assert!(levelset_member(&f, unit_slope));
    assert!(!levelset_member(&g, unit_slope));
    assert!(levelset_member(&group_mul(&f, &group_inv(&f)), unit_slope));
    println!("slope level sets close under the group law");
}
