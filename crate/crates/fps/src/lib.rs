//! Truncated formal power series over the complex numbers.
//!
//! The crate implements series composition in full generality: the inner
//! series may have a nonzero constant term, in which case existence is an
//! analytic question answered by an explicit check, and evaluation goes
//! through a Taylor shift of the outer series. On top of that sit the
//! composition inverses (reversion of nonunit series, left inverses of unit
//! series via generalized Pascal systems), a finite-witness calculus for the
//! superposition operator f -> g o f (its metric, directional derivatives
//! and Taylor-formula remainders), and the group structure of nonunit
//! series under composition with its Lie bracket.
//!
//! Coefficients come in two modes: exact Gaussian rationals, the oracle of
//! record for every identity, and complex doubles for evaluating infinite
//! outer series numerically. Every binary operation truncates to the
//! minimum order of its operands, so stored coefficients are always exact
//! relative to infinite-precision inputs.
//!
//! Start with the runnable examples (`cargo run --example reversion`, etc.)
//! or the `fps` binary, a thin front end over [`cli`].

pub mod analytic;
pub mod calculus;
pub mod cli;
pub mod coeff;
pub mod compose;
pub mod error;
pub mod invert;
pub mod json;
pub mod lie;
pub mod matrix;
pub mod parse;
pub mod partition;
pub mod registry;
pub mod series;

pub use analytic::{classify_domain, AnalyticSeries, DomainClass, DomainKind};
pub use calculus::{metric, DerivativeProbe, Metric};
pub use coeff::{Coeff, Complex64, GaussRational, DEFAULT_TOLERANCE};
pub use compose::{
    compose_general, compose_general_series, compose_nonunit, gct_check, multinomial_oracle,
    GctOutcome, ProbeSettings,
};
pub use error::{Error, Result};
pub use invert::{
    left_inverse, pascal_matrix, pascal_solve, reversion, uniqueness_check, LeftInverseExistence,
    LeftInverseReport, PascalMatrix,
};
pub use json::{DynSeries, Mode};
pub use lie::{
    group_inv, group_mul, invariant_field_derivative, levelset_member, lie_bracket, similarity,
    AlgebraElement, GroupElement,
};
pub use matrix::{comp_matrix, matrix_compose, CompMatrix};
pub use parse::parse_series_expr;
pub use partition::PartitionSet;
pub use series::{DegreeBound, OrdDeg, Series};
