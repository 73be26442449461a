//! Built-in outer series, addressable by name from the CLI as
//! `--outer name` or `--outer name:param`.
//!
//! * `geometric`  -- sum z^n, radius 1, closed-form shifted Taylor
//!   coefficients 1/(1-a)^(n+1), so exact-mode composition works;
//! * `exp`        -- sum z^n/n!, entire;
//! * `invpow:p`   -- sum_{n>=1} z^n/n^p, radius 1, boundary behavior left to
//!   the caller flag;
//! * `factorial`  -- sum n! z^n, radius 0: only nonunit inner series compose.

use crate::analytic::AnalyticSeries;
use crate::coeff::{factorial, Coeff};
use crate::error::{Error, Result};

/// sum z^n with r = 1. Carries the closed form g^(n)(a)/n! = 1/(1-a)^(n+1)
/// and the boundary flag `no` (the series itself already diverges on
/// |z| = 1).
pub fn geometric<C: Coeff>() -> AnalyticSeries<C> {
    AnalyticSeries::new(|_| C::one(), 1.0)
        .with_boundary_summable(Some(false))
        .with_taylor_at(|a: &C, n: usize| {
            let base = (C::one() - a.clone()).recip()?;
            let mut acc = base.clone();
            for _ in 0..n {
                acc = acc * base.clone();
            }
            Some(acc)
        })
        .with_label("geometric")
}

/// sum z^n/n!, entire.
pub fn exp_series<C: Coeff>() -> AnalyticSeries<C> {
    AnalyticSeries::new(
        |n| factorial::<C>(n).recip().expect("factorial is nonzero"),
        f64::INFINITY,
    )
    .with_label("exp")
}

/// sum_{n>=1} z^n / n^p with r = 1. No closed form; boundary summability is
/// whatever the caller asserts.
pub fn inverse_power<C: Coeff>(p: u32) -> AnalyticSeries<C> {
    AnalyticSeries::new(
        move |n| {
            if n == 0 {
                C::zero()
            } else {
                let mut den = C::one();
                for _ in 0..p {
                    den = den * C::from_int(n as i64);
                }
                den.recip().expect("positive power of a positive integer")
            }
        },
        1.0,
    )
    .with_label(format!("invpow:{p}"))
}

/// sum n! z^n with r = 0: composes only with nonunit inner series.
pub fn factorial_series<C: Coeff>() -> AnalyticSeries<C> {
    AnalyticSeries::new(|n| factorial::<C>(n), 0.0).with_label("factorial")
}

/// scale * sum_{n>=start} z^n with r = 1: a geometric tail. The closed form
/// subtracts the missing head from the geometric one, so exact-mode
/// composition works; used to reproduce boundary pathologies of the
/// composition map where the truncated polynomial would not do.
pub fn geometric_tail<C: Coeff>(start: usize, scale: C) -> AnalyticSeries<C> {
    let gen_scale = scale.clone();
    AnalyticSeries::new(
        move |n| if n >= start { gen_scale.clone() } else { C::zero() },
        1.0,
    )
    .with_boundary_summable(Some(false))
    .with_taylor_at(move |a: &C, n: usize| {
        // g^(n)(a)/n! of z^start/(1-z) = geometric minus the head
        // (1 + z + ... + z^(start-1)), whose shifted coefficient is
        // sum_{j=n}^{start-1} C(j, n) a^(j-n)
        let base = (C::one() - a.clone()).recip()?;
        let mut geo = base.clone();
        for _ in 0..n {
            geo = geo * base.clone();
        }
        let mut head = C::zero();
        if n < start {
            // binomials by the multiplicative recurrence along the diagonal
            let mut binom = C::one();
            let mut power = C::one();
            for j in n..start {
                // binom = C(j, n), power = a^(j-n)
                head = head + binom.clone() * power.clone();
                let next = C::from_int((j + 1) as i64)
                    * C::from_int((j + 1 - n) as i64).recip().expect("nonzero");
                binom = binom * next;
                power = power * a.clone();
            }
        }
        Some((geo - head) * scale.clone())
    })
    .with_label(format!("geometric-tail:{start}"))
}

/// Resolves a `name` or `name:param` registry reference.
pub fn lookup<C: Coeff>(reference: &str) -> Result<AnalyticSeries<C>> {
    let (name, param) = match reference.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (reference, None),
    };
    match (name, param) {
        ("geometric", None) => Ok(geometric()),
        ("exp", None) => Ok(exp_series()),
        ("factorial", None) => Ok(factorial_series()),
        ("invpow", Some(p)) => {
            let p: u32 = p.parse().map_err(|_| {
                Error::PreconditionFailed(format!("invpow parameter must be a positive integer, got {p:?}"))
            })?;
            Ok(inverse_power(p))
        }
        ("invpow", None) => Err(Error::PreconditionFailed(
            "invpow needs a parameter, e.g. invpow:3".into(),
        )),
        _ => Err(Error::PreconditionFailed(format!(
            "unknown outer series {reference:?}; known: geometric, exp, invpow:p, factorial"
        ))),
    }
}
