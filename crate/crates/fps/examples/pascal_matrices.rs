//! Generalized Pascal matrices and composition matrices.
//!
//! Run with: cargo run --example pascal_matrices

use fps::invert::pascal_solve;
use fps::{comp_matrix, matrix_compose, pascal_matrix, Coeff, GaussRational, Series};

fn main() {
    // P(1) is the classical Pascal triangle laid on its side
    let p = pascal_matrix(&GaussRational::from_int(1), 5);
    println!("P(1), 5x5:");
    for k in 0..5 {
        let row: Vec<String> = (0..5).map(|n| p.entry(k, n).re.to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    // P(a0) is the transposed composition matrix of z + a0
    let a0 = GaussRational::from_ratio(2, 3);
    let p = pascal_matrix(&a0, 6);
    let shift = Series::identity(5).add(&Series::constant(a0.clone(), 5));
    let c = comp_matrix(&shift, 5);
    for k in 0..6 {
        for n in 0..6 {
            assert_eq!(p.entry(k, n), c.transposed_entry(k, n));
        }
    }
    println!("P(2/3) equals the transposed composition matrix of z + 2/3");

    // the matrix route to composition doubles as an oracle for Horner
    let g = Series::<GaussRational>::from_ints(&[1, 1, 1, 1, 1]);
    let f = Series::<GaussRational>::from_ints(&[0, 1, 1, 0, 0]);
    let via_matrix = matrix_compose(&g, &f);
    println!("geometric(z + z^2) via the matrix route = {via_matrix}");

    // back substitution against the unit-triangular system P(a0) b = c
    let rhs = Series::<GaussRational>::from_ints(&[1, 1, 1]);
    let solved = pascal_solve(&GaussRational::from_int(1), &rhs);
    println!("P(1) b = (1, 1, 1)^T solves to {solved}");
}
