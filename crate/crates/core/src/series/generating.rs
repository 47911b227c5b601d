//! Constructors for the generating functions whose reciprocals define the
//! number families, truncated at a caller-chosen order.

use super::TruncatedSeries;
use crate::error::{invalid, Result};
use crate::exact::{factorial_int, Rational};

/// `Σ_n a!/(a+2n)! t^{2n}`.
fn factorial_ratio_even(a: usize, order: usize) -> TruncatedSeries {
    let num = factorial_int(a);
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::from_bigints(num.clone(), factorial_int(a + k))
        } else {
            Rational::zero()
        }
    })
}

/// `F = ₁F₂(1; N+1, (2N+1)/2; t²/4) = Σ (2N)!/(2N+2n)! t^{2n}`, whose
/// reciprocal generates the hypergeometric Euler numbers.
pub fn gen_f(n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(factorial_ratio_even(2 * n, order))
}

/// `F* = ₁F₂(1; N, (2N+1)/2; t²/4) = Σ (2N-1)!/(2N+2n-1)! t^{2n}`; `N >= 1`.
pub fn gen_f_star(n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(invalid("F* needs N >= 1"));
    }
    Ok(factorial_ratio_even(2 * n - 1, order))
}

/// `F̂ = Σ (2N+1)!/(2N+2n+1)! t^{2n}`, whose reciprocal generates the
/// complementary hypergeometric Euler numbers.
pub fn gen_f_hat(n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(factorial_ratio_even(2 * n + 1, order))
}

/// The ladder family `Σ k!/(k+2n)! t^{2n}`. With `k = 2N - j` this is the
/// function written `F_{(j)}` for the parameter `N`, i.e.
/// `₁F₂(1; ⌊(k+2)/2⌋, ⌊(k+1)/2⌋ + 1/2; t²/4)`; `k = 0` is `cosh t` and
/// `k = 2N` is `F`.
pub fn gen_f_k(k: usize, order: usize) -> TruncatedSeries {
    factorial_ratio_even(k, order)
}

pub fn gen_cosh(order: usize) -> TruncatedSeries {
    factorial_ratio_even(0, order)
}

/// `sinh(t)/t = Σ t^{2n}/(2n+1)!`.
pub fn gen_sinh_over_t(order: usize) -> TruncatedSeries {
    factorial_ratio_even(1, order)
}

pub fn gen_sin(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            Rational::sign_power(k / 2) / Rational::from_integer(factorial_int(k))
        } else {
            Rational::zero()
        }
    })
}

pub fn gen_cos(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::sign_power(k / 2) / Rational::from_integer(factorial_int(k))
        } else {
            Rational::zero()
        }
    })
}

/// `₁F₁(1; N+1; t) = Σ N!/(N+n)! t^n`; `N >= 1`.
pub fn gen_hg_bernoulli_denom(n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(invalid("hypergeometric Bernoulli numbers need N >= 1"));
    }
    let num = factorial_int(n);
    Ok(TruncatedSeries::from_fn(order, |k| {
        Rational::from_bigints(num.clone(), factorial_int(n + k))
    }))
}

/// `₂F₁(1, N; N+1; -t) = Σ (-1)^n N/(N+n) t^n`; `N >= 1`.
pub fn gen_hg_cauchy_denom(n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(invalid("hypergeometric Cauchy numbers need N >= 1"));
    }
    Ok(TruncatedSeries::from_fn(order, |k| {
        Rational::sign_power(k) * Rational::new(n as i64, (n + k) as i64)
    }))
}
