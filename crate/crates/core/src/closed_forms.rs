//! Non-recurrence routes to the same numbers: composition sums (positive
//! parts, and non-negative parts with binomial weights), Toeplitz–Hessenberg
//! determinants, and Trudi expansions.
//!
//! All Euler-type routes take the number's own index `n` (even) and work
//! with `m = n/2` internally. Index 0 returns 1 on every route.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{
    binomial, compositions, convolution_powers, factorial, factorial_int, Rational,
};
use crate::families::{self, FamilyId, FamilyKind};
use crate::linalg::{hessenberg_det, hessenberg_minors, toeplitz_inverse, trudi_expand};
use crate::linalg::{HessenbergSpec, UnitLowerToeplitz};

/// Largest index the composition-sum routes accept by default.
pub const COMPOSITION_CAP: usize = 30;

/// `a!/(a+2k)!` for `k = 0..=m`, `a = 2N` (plain) or `2N + 1` (complementary).
fn euler_weights(kind: FamilyKind, param: usize, m: usize) -> Result<Vec<Rational>> {
    let a = match kind {
        FamilyKind::HgEuler => 2 * param,
        FamilyKind::ComplementaryHgEuler => 2 * param + 1,
        other => return Err(invalid(format!("{other} is not an Euler-type family"))),
    };
    let num = factorial_int(a);
    Ok((0..=m)
        .map(|k| Rational::from_bigints(num.clone(), factorial_int(a + 2 * k)))
        .collect())
}

fn half_index(n: usize) -> Result<usize> {
    if n % 2 == 1 {
        return Err(invalid(format!(
            "index {n} is odd; these routes take even n"
        )));
    }
    Ok(n / 2)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(invalid(format!("index {n} exceeds composition cap {cap}")));
    }
    Ok(())
}

/// `n! Σ_{r=1}^{m} (-1)^r Σ_{i_1+⋯+i_r = m, i_j >= 1} Π w_{i_j}`, enumerating
/// every composition of `m = n/2`.
pub fn euler_explicit_with_cap(
    kind: FamilyKind,
    param: usize,
    n: usize,
    cap: usize,
) -> Result<Rational> {
    let m = half_index(n)?;
    check_cap(n, cap)?;
    let w = euler_weights(kind, param, m)?;
    if m == 0 {
        return Ok(Rational::one());
    }
    let mut total = Rational::zero();
    for r in 1..=m {
        let inner: Rational = compositions(m, 1, r)
            .map(|c| c.parts().iter().map(|&i| &w[i]).product::<Rational>())
            .sum();
        total += Rational::sign_power(r) * inner;
    }
    Ok(factorial(n) * total)
}

/// `n! Σ_{k=1}^{n} (-1)^k C(n+1, k+1) Σ_{i_1+⋯+i_k = m, i_j >= 0} Π w_{i_j}`.
///
/// The inner sums range over compositions with zero parts (weight
/// `w_0 = 1`); their number grows like `C(m+k-1, k-1)`, so each inner sum is
/// evaluated as the coefficient `[x^m] W(x)^k` of a truncated convolution
/// power rather than term by term.
pub fn euler_binomial_with_cap(
    kind: FamilyKind,
    param: usize,
    n: usize,
    cap: usize,
) -> Result<Rational> {
    let m = half_index(n)?;
    check_cap(n, cap)?;
    let w = euler_weights(kind, param, m)?;
    if m == 0 {
        return Ok(Rational::one());
    }
    let powers = convolution_powers(&w, m, 0, n);
    let total: Rational = (1..=n)
        .map(|k| Rational::sign_power(k) * binomial(n + 1, k as i64 + 1) * &powers[k])
        .sum();
    Ok(factorial(n) * total)
}

/// `(-1)^m n! det H(w_1..w_m)`.
pub fn euler_det(kind: FamilyKind, param: usize, n: usize) -> Result<Rational> {
    let m = half_index(n)?;
    let w = euler_weights(kind, param, m)?;
    if m == 0 {
        return Ok(Rational::one());
    }
    let det = hessenberg_det(&HessenbergSpec::new(w[1..].to_vec()));
    Ok(Rational::sign_power(m) * factorial(n) * det)
}

/// `n! Σ_{t_1+2t_2+⋯+m t_m = m} multinomial(t) (-1)^{Σt} Π w_k^{t_k}`.
pub fn euler_trudi(kind: FamilyKind, param: usize, n: usize) -> Result<Rational> {
    let m = half_index(n)?;
    let w = euler_weights(kind, param, m)?;
    if m == 0 {
        return Ok(Rational::one());
    }
    // With a_0 = -1 the factor (-a_0)^{m-Σt} is 1 and Π(-w_k)^{t_k}
    // carries the (-1)^{Σt}.
    let negated: Vec<Rational> = w[1..].iter().map(|x| -x).collect();
    Ok(factorial(n) * trudi_expand(&negated, &-Rational::one()))
}

pub fn hg_euler_explicit(param: usize, n: usize) -> Result<Rational> {
    euler_explicit_with_cap(FamilyKind::HgEuler, param, n, COMPOSITION_CAP)
}

pub fn hg_euler_binomial(param: usize, n: usize) -> Result<Rational> {
    euler_binomial_with_cap(FamilyKind::HgEuler, param, n, COMPOSITION_CAP)
}

pub fn hg_euler_det(param: usize, n: usize) -> Result<Rational> {
    euler_det(FamilyKind::HgEuler, param, n)
}

pub fn hg_euler_trudi(param: usize, n: usize) -> Result<Rational> {
    euler_trudi(FamilyKind::HgEuler, param, n)
}

pub fn comp_hg_euler_explicit(param: usize, n: usize) -> Result<Rational> {
    euler_explicit_with_cap(FamilyKind::ComplementaryHgEuler, param, n, COMPOSITION_CAP)
}

pub fn comp_hg_euler_binomial(param: usize, n: usize) -> Result<Rational> {
    euler_binomial_with_cap(FamilyKind::ComplementaryHgEuler, param, n, COMPOSITION_CAP)
}

pub fn comp_hg_euler_det(param: usize, n: usize) -> Result<Rational> {
    euler_det(FamilyKind::ComplementaryHgEuler, param, n)
}

pub fn comp_hg_euler_trudi(param: usize, n: usize) -> Result<Rational> {
    euler_trudi(FamilyKind::ComplementaryHgEuler, param, n)
}

/// First-column entries and sign convention of the Bernoulli/Cauchy
/// determinant expressions.
fn glaisher_entries(kind: FamilyKind, param: usize, n: usize) -> Result<(Vec<Rational>, Rational)> {
    FamilyId::new(kind, param)?;
    match kind {
        FamilyKind::HgBernoulli => {
            let num = factorial_int(param);
            let entries = (1..=n)
                .map(|k| Rational::from_bigints(num.clone(), factorial_int(param + k)))
                .collect();
            Ok((entries, Rational::sign_power(n)))
        }
        FamilyKind::HgCauchy => {
            let entries = (1..=n)
                .map(|k| Rational::new(param as i64, (param + k) as i64))
                .collect();
            Ok((entries, Rational::one()))
        }
        other => Err(invalid(format!(
            "{other} has no Glaisher-type determinant here"
        ))),
    }
}

/// `B_{N,n} = (-1)^n n! det H(N!/(N+k)!)`.
pub fn hg_bernoulli_det(param: usize, n: usize) -> Result<Rational> {
    glaisher_det(FamilyKind::HgBernoulli, param, n)
}

/// `c_{N,n} = n! det H(N/(N+k))`.
pub fn hg_cauchy_det(param: usize, n: usize) -> Result<Rational> {
    glaisher_det(FamilyKind::HgCauchy, param, n)
}

pub fn bernoulli_det(n: usize) -> Result<Rational> {
    hg_bernoulli_det(1, n)
}

pub fn cauchy_det(n: usize) -> Result<Rational> {
    hg_cauchy_det(1, n)
}

fn glaisher_det(kind: FamilyKind, param: usize, n: usize) -> Result<Rational> {
    let (entries, sign) = glaisher_entries(kind, param, n)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    Ok(sign * factorial(n) * hessenberg_det(&HessenbergSpec::new(entries)))
}

/// The Bernoulli/Cauchy determinants expanded by Trudi's formula.
pub fn glaisher_trudi(kind: FamilyKind, param: usize, n: usize) -> Result<Rational> {
    let (entries, sign) = glaisher_entries(kind, param, n)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    Ok(sign * factorial(n) * trudi_expand(&entries, &Rational::one()))
}

/// Columns of the inverse pair: `((-1)^k v_{2k}/(2k)!)_{k=1..m}` from the
/// number table and the factorial ratios `(w_k)_{k=1..m}`.
fn inverse_pair_columns(
    kind: FamilyKind,
    param: usize,
    m: usize,
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let w = euler_weights(kind, param, m)?;
    let table = families::recurrence(FamilyId::new(kind, param)?, 2 * m)?;
    let signed = (1..=m)
        .map(|k| Rational::sign_power(k) * table.get(2 * k) / factorial(2 * k))
        .collect();
    Ok((signed, w[1..].to_vec()))
}

/// The matrix-inverse pair: dualizing the signed-number column
/// `(-1)^k E_{N,2k}/(2k)!` (or the `Ê` analogue) with [`toeplitz_inverse`]
/// gives exactly the factorial-ratio column, for `k = 1..=m`.
pub fn inverse_pair_check(kind: FamilyKind, param: usize, m: usize) -> Result<bool> {
    let (signed, weights) = inverse_pair_columns(kind, param, m)?;
    let dual = toeplitz_inverse(&UnitLowerToeplitz::new(signed));
    Ok(dual.column() == weights.as_slice())
}

/// `(-1)^k w_k = det H(v_2/2!, …, v_{2k}/(2k)!)` for every `k = 1..=m`.
pub fn inverse_determinant_check(kind: FamilyKind, param: usize, m: usize) -> Result<bool> {
    let (signed, weights) = inverse_pair_columns(kind, param, m)?;
    if m == 0 {
        return Ok(true);
    }
    let unsigned: Vec<Rational> = signed
        .iter()
        .enumerate()
        .map(|(i, s)| Rational::sign_power(i + 1) * s)
        .collect();
    let minors = hessenberg_minors(&HessenbergSpec::new(unsigned));
    Ok((1..=m).all(|k| minors[k] == Rational::sign_power(k) * &weights[k - 1]))
}

/// A computation route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    Recurrence,
    Series,
    Explicit,
    Binomial,
    Det,
    Trudi,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Recurrence,
        Method::Series,
        Method::Explicit,
        Method::Binomial,
        Method::Det,
        Method::Trudi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Series => "series",
            Method::Explicit => "explicit",
            Method::Binomial => "binomial",
            Method::Det => "det",
            Method::Trudi => "trudi",
        }
    }

    /// Whether the route exists for the family.
    pub fn supports(self, kind: FamilyKind) -> bool {
        match self {
            Method::Recurrence | Method::Series | Method::Det | Method::Trudi => true,
            Method::Explicit | Method::Binomial => kind.is_euler_type(),
        }
    }

    /// Whether the route computes index `n` of the family: Euler-type
    /// closed routes are defined at even indices, composition sums up to
    /// the cap.
    pub fn covers(self, kind: FamilyKind, n: usize) -> bool {
        match self {
            Method::Recurrence | Method::Series => true,
            _ if !self.supports(kind) => false,
            _ if kind.is_euler_type() && n % 2 == 1 => false,
            Method::Explicit | Method::Binomial => n <= COMPOSITION_CAP,
            Method::Det | Method::Trudi => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| invalid(format!("unknown method {s:?}")))
    }
}

/// `(n, value)` for every index in `0..=nmax` the route covers.
pub fn route_values(
    family: FamilyId,
    nmax: usize,
    method: Method,
) -> Result<Vec<(usize, Rational)>> {
    let family = FamilyId::new(family.kind(), family.param())?;
    let kind = family.kind();
    if !method.supports(kind) {
        return Err(invalid(format!(
            "method {method} is not available for {kind}"
        )));
    }
    let table = match method {
        Method::Recurrence => Some(families::recurrence(family, nmax)?),
        Method::Series => Some(families::via_series(family, nmax)?),
        _ => None,
    };
    if let Some(t) = table {
        return Ok(t.values().iter().cloned().enumerate().collect());
    }
    if matches!(method, Method::Explicit | Method::Binomial) && nmax > COMPOSITION_CAP {
        return Err(invalid(format!(
            "method {method} is capped at n <= {COMPOSITION_CAP}, requested {nmax}"
        )));
    }
    let param = family.param();
    (0..=nmax)
        .filter(|&n| method.covers(kind, n))
        .map(|n| {
            let v = match (method, kind.is_euler_type()) {
                (Method::Explicit, _) => euler_explicit_with_cap(kind, param, n, COMPOSITION_CAP),
                (Method::Binomial, _) => euler_binomial_with_cap(kind, param, n, COMPOSITION_CAP),
                (Method::Det, true) => euler_det(kind, param, n),
                (Method::Trudi, true) => euler_trudi(kind, param, n),
                (Method::Det, false) => glaisher_det(kind, param, n),
                (Method::Trudi, false) => glaisher_trudi(kind, param, n),
                _ => unreachable!("table routes handled above"),
            }?;
            Ok((n, v))
        })
        .collect()
}
