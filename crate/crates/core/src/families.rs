//! Number tables for the four families, by convolution recurrence and by
//! series reciprocal.
//!
//! Tables hold the numbers themselves (`E_{N,n}`, not `E_{N,n}/n!`) and keep
//! explicit zeros at odd indices of the Euler-type families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{factorial_int, Rational};
use crate::series::{self, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `E_{N,n}`: reciprocal of `₁F₂(1; N+1, (2N+1)/2; t²/4)`.
    HgEuler,
    /// `Ê_{N,n}`: reciprocal of `Σ (2N+1)!/(2N+2n+1)! t^{2n}`.
    ComplementaryHgEuler,
    /// `B_{N,n}`: reciprocal of `₁F₁(1; N+1; t)`.
    HgBernoulli,
    /// `c_{N,n}`: reciprocal of `₂F₁(1, N; N+1; -t)`.
    HgCauchy,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::HgEuler,
        FamilyKind::ComplementaryHgEuler,
        FamilyKind::HgBernoulli,
        FamilyKind::HgCauchy,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::HgEuler => "hg-euler",
            FamilyKind::ComplementaryHgEuler => "comp-hg-euler",
            FamilyKind::HgBernoulli => "hg-bernoulli",
            FamilyKind::HgCauchy => "hg-cauchy",
        }
    }

    pub fn min_param(self) -> usize {
        match self {
            FamilyKind::HgEuler | FamilyKind::ComplementaryHgEuler => 0,
            FamilyKind::HgBernoulli | FamilyKind::HgCauchy => 1,
        }
    }

    pub fn is_euler_type(self) -> bool {
        matches!(self, FamilyKind::HgEuler | FamilyKind::ComplementaryHgEuler)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| invalid(format!("unknown family {s:?}")))
    }
}

/// A family together with its parameter `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyId {
    kind: FamilyKind,
    param: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, param: usize) -> Result<Self> {
        if param < kind.min_param() {
            return Err(invalid(format!(
                "{kind} needs N >= {}, got {param}",
                kind.min_param()
            )));
        }
        Ok(FamilyId { kind, param })
    }

    pub fn hg_euler(param: usize) -> Self {
        FamilyId {
            kind: FamilyKind::HgEuler,
            param,
        }
    }

    pub fn comp_hg_euler(param: usize) -> Self {
        FamilyId {
            kind: FamilyKind::ComplementaryHgEuler,
            param,
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// The parameter `N`.
    pub fn param(&self) -> usize {
        self.param
    }

    /// The series whose reciprocal is the exponential generating function.
    pub fn denominator(&self, order: usize) -> Result<TruncatedSeries> {
        match self.kind {
            FamilyKind::HgEuler => series::gen_f(self.param, order),
            FamilyKind::ComplementaryHgEuler => series::gen_f_hat(self.param, order),
            FamilyKind::HgBernoulli => series::gen_hg_bernoulli_denom(self.param, order),
            FamilyKind::HgCauchy => series::gen_hg_cauchy_denom(self.param, order),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(N={})", self.kind, self.param)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberTable {
    family: FamilyId,
    values: Vec<Rational>,
}

impl NumberTable {
    pub fn new(family: FamilyId, values: Vec<Rational>) -> Self {
        NumberTable { family, values }
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// The `n`-th number. Panics past the computed range.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    /// Values divided by `n!`, i.e. the generating-function coefficients.
    pub fn egf_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_egf(&self.values)
    }
}

fn factorials(max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for k in 1..=max {
        acc *= Rational::from(k);
        out.push(acc.clone());
    }
    out
}

/// `v_n = -n! a! Σ_{i<n/2} v_{2i} / ((a+n-2i)! (2i)!)` with `a = 2N + shift`.
fn euler_type_recurrence(shift: usize, param: usize, nmax: usize) -> Vec<Rational> {
    let a = 2 * param + shift;
    let fact = factorials(a + nmax);
    let mut v = vec![Rational::zero(); nmax + 1];
    v[0] = Rational::one();
    for n in (2..=nmax).step_by(2) {
        let sum: Rational = (0..n / 2)
            .map(|i| &v[2 * i] / (&fact[a + n - 2 * i] * &fact[2 * i]))
            .sum();
        v[n] = -(&fact[n] * &fact[a] * sum);
    }
    v
}

/// `E_{N,0..=nmax}` by the convolution recurrence
/// `E_{N,n} = -n! (2N)! Σ_{i=0}^{n/2-1} E_{N,2i} / ((2N+n-2i)! (2i)!)`.
pub fn hg_euler_recurrence(param: usize, nmax: usize) -> NumberTable {
    NumberTable::new(
        FamilyId::hg_euler(param),
        euler_type_recurrence(0, param, nmax),
    )
}

/// `Ê_{N,0..=nmax}` by
/// `Ê_{N,n} = -n! (2N+1)! Σ_{i=0}^{n/2-1} Ê_{N,2i} / ((2N+n-2i+1)! (2i)!)`.
pub fn comp_hg_euler_recurrence(param: usize, nmax: usize) -> NumberTable {
    NumberTable::new(
        FamilyId::comp_hg_euler(param),
        euler_type_recurrence(1, param, nmax),
    )
}

/// `v_n = -n! Σ_{i<n} v_i d_{n-i} / i!` for a denominator with `d_0 = 1`.
fn egf_recurrence(d: impl Fn(usize) -> Rational, nmax: usize) -> Vec<Rational> {
    let fact = factorials(nmax);
    let mut v: Vec<Rational> = Vec::with_capacity(nmax + 1);
    v.push(Rational::one());
    for n in 1..=nmax {
        let sum: Rational = (0..n).map(|i| &v[i] / &fact[i] * d(n - i)).sum();
        v.push(-(&fact[n] * sum));
    }
    v
}

/// `B_{N,n}` from `Σ_{i=0}^n B_{N,i} N! / (i! (N+n-i)!) = 0` for `n >= 1`.
pub fn hg_bernoulli_recurrence(param: usize, nmax: usize) -> Result<NumberTable> {
    let id = FamilyId::new(FamilyKind::HgBernoulli, param)?;
    let n_fact = factorial_int(param);
    let d = |j: usize| Rational::from_bigints(n_fact.clone(), factorial_int(param + j));
    Ok(NumberTable::new(id, egf_recurrence(d, nmax)))
}

/// `c_{N,n}` from `Σ_{i=0}^n c_{N,i} (-1)^{n-i} N / (i! (N+n-i)) = 0` for `n >= 1`.
pub fn hg_cauchy_recurrence(param: usize, nmax: usize) -> Result<NumberTable> {
    let id = FamilyId::new(FamilyKind::HgCauchy, param)?;
    let d = |j: usize| Rational::sign_power(j) * Rational::new(param as i64, (param + j) as i64);
    Ok(NumberTable::new(id, egf_recurrence(d, nmax)))
}

/// Recurrence route for any family.
pub fn recurrence(family: FamilyId, nmax: usize) -> Result<NumberTable> {
    let family = FamilyId::new(family.kind, family.param)?;
    match family.kind {
        FamilyKind::HgEuler => Ok(hg_euler_recurrence(family.param, nmax)),
        FamilyKind::ComplementaryHgEuler => Ok(comp_hg_euler_recurrence(family.param, nmax)),
        FamilyKind::HgBernoulli => hg_bernoulli_recurrence(family.param, nmax),
        FamilyKind::HgCauchy => hg_cauchy_recurrence(family.param, nmax),
    }
}

/// Definition route: `n!` times the coefficients of the reciprocal of the
/// family's denominator series.
pub fn via_series(family: FamilyId, nmax: usize) -> Result<NumberTable> {
    let family = FamilyId::new(family.kind, family.param)?;
    let values = family.denominator(nmax)?.reciprocal()?.egf_values();
    Ok(NumberTable::new(family, values))
}

/// Hypergeometric Bernoulli numbers, series route.
pub fn hg_bernoulli(param: usize, nmax: usize) -> Result<NumberTable> {
    via_series(FamilyId::new(FamilyKind::HgBernoulli, param)?, nmax)
}

/// Hypergeometric Cauchy numbers, series route.
pub fn hg_cauchy(param: usize, nmax: usize) -> Result<NumberTable> {
    via_series(FamilyId::new(FamilyKind::HgCauchy, param)?, nmax)
}

/// Classical Bernoulli numbers `B_0..=B_nmax` (`B_1 = -1/2`).
pub fn bernoulli_numbers(nmax: usize) -> Vec<Rational> {
    hg_bernoulli_recurrence(1, nmax)
        .expect("N = 1 is valid")
        .values
}

/// The printed polynomial closed forms for `k ∈ {2, 4, 6, 8}`.
pub fn closed_small(kind: FamilyKind, param: usize, k: usize) -> Result<Rational> {
    let n = param as i64;
    let r = |x: i64| Rational::from(x);
    let fact = |m: usize| Rational::from_integer(factorial_int(m));
    match kind {
        FamilyKind::HgEuler => {
            let p = |c: i64| r(2 * n + c);
            match k {
                2 => Ok(r(-2) / (p(1) * p(2))),
                4 => Ok(r(2) * fact(4) * r(4 * n + 5) / (p(1).pow(2) * p(2).pow(2) * p(3) * p(4))),
                6 => Ok(
                    r(4) * fact(6) * r(8 * n.pow(3) - 2 * n.pow(2) - 65 * n - 61)
                        / (p(1).pow(3) * p(2).pow(3) * p(3) * p(4) * p(5) * p(6)),
                ),
                8 => {
                    let poly = 16 * n.pow(6) - 44 * n.pow(5) - 516 * n.pow(4) - 667 * n.pow(3)
                        + 1283 * n.pow(2)
                        + 3126 * n
                        + 1662;
                    Ok(r(16) * fact(8) * r(poly)
                        / (p(1).pow(4)
                            * p(2).pow(4)
                            * p(3).pow(2)
                            * p(4).pow(2)
                            * p(6)
                            * p(7)
                            * p(8)))
                }
                _ => Err(invalid(format!("no closed form for index {k}"))),
            }
        }
        FamilyKind::ComplementaryHgEuler => {
            let p = |c: i64| r(2 * n + c);
            match k {
                2 => Ok(r(-2) / (p(2) * p(3))),
                4 => Ok(r(2) * fact(4) * r(4 * n + 7) / (p(2).pow(2) * p(3).pow(2) * p(4) * p(5))),
                6 => Ok(
                    r(4) * fact(6) * r(8 * n.pow(3) + 10 * n.pow(2) - 61 * n - 93)
                        / (p(2).pow(3) * p(3).pow(3) * p(4) * p(5) * p(6) * p(7)),
                ),
                8 => {
                    let poly = 32 * n.pow(6) + 8 * n.pow(5)
                        - 1132 * n.pow(4)
                        - 3538 * n.pow(3)
                        - 1063 * n.pow(2)
                        + 7280 * n
                        + 6858;
                    Ok(r(8) * fact(8) * r(poly)
                        / (p(2).pow(4)
                            * p(3).pow(4)
                            * p(4).pow(2)
                            * p(5).pow(2)
                            * p(7)
                            * p(8)
                            * p(9)))
                }
                _ => Err(invalid(format!("no closed form for index {k}"))),
            }
        }
        _ => Err(invalid(format!("no printed closed forms for {kind}"))),
    }
}
