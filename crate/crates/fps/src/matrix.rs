//! Truncated composition matrices.
//!
//! Row k of the composition matrix of f lists the coefficients of f^k. The
//! matrix route c = C_f^T b is the second, independent implementation of
//! composition and serves as an oracle for the Horner-scheme one.

use crate::coeff::Coeff;
use crate::series::Series;

/// Truncated composition matrix: rows 0..=K, columns 0..=N, entry (k, n)
/// holding coefficient n of f^k.
#[derive(Clone, Debug, PartialEq)]
pub struct CompMatrix<C> {
    rows: Vec<Vec<C>>,
    source_order: usize,
}

impl<C: Coeff> CompMatrix<C> {
    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    /// Entry (k, n): coefficient n of f^k.
    pub fn entry(&self, k: usize, n: usize) -> C {
        self.rows
            .get(k)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Transposed entry (n, k), for checks against the Pascal matrix.
    pub fn transposed_entry(&self, n: usize, k: usize) -> C {
        self.entry(k, n)
    }
}

/// Rows 0..=k_max of the composition matrix of f, at f's truncation order.
/// Built by iterated Cauchy products.
pub fn comp_matrix<C: Coeff>(f: &Series<C>, k_max: usize) -> CompMatrix<C> {
    let order = f.order();
    let mut rows = Vec::with_capacity(k_max + 1);
    let mut power = Series::one(order);
    rows.push(power.coeffs().to_vec());
    for _ in 1..=k_max {
        power = power.cauchy_mul(f);
        rows.push(power.coeffs().to_vec());
    }
    if f.constant_term().is_negligible(0.0) {
        // nonunit source: the matrix is triangular in the sense that
        // coefficient n of f^k vanishes for n < k
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(k, row)| row.iter().take(k.min(row.len())).all(|c| c.is_negligible(0.0))));
    }
    CompMatrix { rows, source_order: order }
}

/// Composition through the matrix route: coefficient vector c = C_f^T b,
/// truncated at the aligned order. The outer series is polynomial data at
/// its truncation, so every column sum is finite; for a nonunit inner series
/// this reduces to the triangular product and matches `compose_nonunit`
/// exactly.
pub fn matrix_compose<C: Coeff>(g: &Series<C>, f: &Series<C>) -> Series<C> {
    let order = g.order().min(f.order());
    let matrix = comp_matrix(&f.truncated(order), g.order());
    let mut coeffs = vec![C::zero(); order + 1];
    for (k, row) in matrix.rows().iter().enumerate() {
        let b_k = g.coeff(k);
        if b_k.is_negligible(0.0) {
            continue;
        }
        for (n, entry) in row.iter().enumerate().take(order + 1) {
            C::mul_add(&mut coeffs[n], &b_k, entry);
        }
    }
    Series::new(coeffs)
}

/// Product of two composition matrices on their leading square blocks,
/// used by tests of the homomorphism property.
#[allow(clippy::needless_range_loop)]
pub fn matrix_product<C: Coeff>(a: &CompMatrix<C>, b: &CompMatrix<C>, dim: usize) -> Vec<Vec<C>> {
    let mut out = vec![vec![C::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = C::zero();
            for l in 0..dim {
                C::mul_add(&mut acc, &a.entry(i, l), &b.entry(l, j));
            }
            out[i][j] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRational;
    use crate::compose::compose_nonunit;
    use proptest::prelude::*;

    type S = Series<GaussRational>;

    #[test]
    fn identity_series_gives_identity_matrix() {
        let m = comp_matrix(&S::identity(2), 2);
        let expect: Vec<Vec<GaussRational>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ]
        .into_iter()
        .map(|row| row.into_iter().map(GaussRational::from_int).collect())
        .collect();
        assert_eq!(m.rows(), &expect[..]);
    }

    #[test]
    fn rows_of_z_plus_z2() {
        let f = S::from_ints(&[0, 1, 1, 0, 0]);
        let m = comp_matrix(&f, 2);
        assert_eq!(m.rows()[0], S::one(4).coeffs().to_vec());
        assert_eq!(m.rows()[1], f.coeffs().to_vec());
        assert_eq!(m.rows()[2], S::from_ints(&[0, 0, 1, 2, 1]).coeffs().to_vec());
    }

    #[test]
    fn matrix_compose_identity_inner() {
        let g = S::from_ints(&[4, -1, 2, 7]);
        assert_eq!(matrix_compose(&g, &S::identity(3)), g);
    }

    #[test]
    fn matrix_compose_affine_outer() {
        // (b0 + b1 z) o f = b0 + b1 f, with the outer padded to f's order
        let f = S::from_ints(&[3, 1, 5, 0]);
        let g = S::from_ints(&[10, 2, 0, 0]);
        let expect = S::from_ints(&[16, 2, 10, 0]);
        assert_eq!(matrix_compose(&g, &f), expect);
    }

    #[test]
    fn fibonacci_through_the_matrix_route() {
        let order = 4;
        let geo = S::new(vec![GaussRational::from_int(1); order + 1]);
        let f = S::from_ints(&[0, 1, 1, 0, 0]);
        assert_eq!(matrix_compose(&geo, &f), S::from_ints(&[1, 1, 2, 3, 5]));
    }

    fn arb_coeff() -> impl Strategy<Value = GaussRational> {
        (-3i64..=3, 1i64..=3).prop_map(|(a, b)| GaussRational::from_ratio(a, b))
    }

    fn arb_series(order: usize) -> impl Strategy<Value = S> {
        proptest::collection::vec(arb_coeff(), order + 1..=order + 1).prop_map(Series::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn matrix_route_matches_horner(g in arb_series(12), mut f in arb_series(12)) {
            f = f.sub_constant();
            prop_assert_eq!(
                matrix_compose(&g, &f),
                compose_nonunit(&g, &f).unwrap()
            );
        }

        #[test]
        fn composition_matrices_multiply(mut g in arb_series(8), mut f in arb_series(8)) {
            // nonunit case: row k of C_{g o f} lists (g o f)^k = g^k o f, so
            // C_{g o f} = C_g . C_f on leading blocks
            g = g.sub_constant();
            f = f.sub_constant();
            let gf = compose_nonunit(&g, &f).unwrap();
            let lhs = comp_matrix(&gf, 8);
            let prod = matrix_product(&comp_matrix(&g, 8), &comp_matrix(&f, 8), 9);
            for (k, row) in prod.iter().enumerate() {
                for (n, value) in row.iter().enumerate() {
                    prop_assert_eq!(lhs.entry(k, n), value.clone(), "entry ({}, {})", k, n);
                }
            }
        }
    }
}
