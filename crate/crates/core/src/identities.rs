//! Checkers for the identities and sums-of-products theorems. Each one
//! recomputes both sides from number tables (or series) and returns an
//! [`IdentityReport`] carrying the first failing index, if any.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial, factorial, multinomial, GaussianRational, Rational};
use crate::families::{bernoulli_numbers, comp_hg_euler_recurrence, hg_euler_recurrence};
use crate::series::{self, TruncatedSeries};

/// A counterexample: where the two sides first differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub indices: Vec<usize>,
    pub lhs: Rational,
    pub rhs: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<usize>,
    /// Inclusive index bounds that were checked.
    pub range: (usize, usize),
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, param: Option<usize>, range: (usize, usize)) -> Self {
        IdentityReport {
            identity: identity.into(),
            param,
            range,
            passed: true,
            first_failure: None,
        }
    }

    /// Compare one pair of sides; only the first mismatch is kept.
    pub fn record(&mut self, indices: &[usize], lhs: &Rational, rhs: &Rational) {
        self.record_noted(indices, lhs, rhs, None);
    }

    pub fn record_noted(
        &mut self,
        indices: &[usize],
        lhs: &Rational,
        rhs: &Rational,
        note: Option<&str>,
    ) {
        if lhs != rhs && self.first_failure.is_none() {
            self.passed = false;
            self.first_failure = Some(Failure {
                indices: indices.to_vec(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                note: note.map(str::to_string),
            });
        }
    }

    /// Fold another report's outcome into this one.
    pub fn absorb(&mut self, other: &IdentityReport) {
        if let (true, Some(f)) = (self.first_failure.is_none(), &other.first_failure) {
            let mut f = f.clone();
            f.note = Some(match f.note {
                Some(n) => format!("{}: {n}", other.identity),
                None => other.identity.clone(),
            });
            self.first_failure = Some(f);
            self.passed = false;
        }
    }
}

fn require_positive(param: usize, what: &str) -> Result<()> {
    if param == 0 {
        return Err(invalid(format!("{what} needs N >= 1")));
    }
    Ok(())
}

/// `Σ_{i=0}^n C(2n, 2i) E_{2i} = 0` for `1 <= n <= nmax`.
pub fn check_euler_pair_sum(nmax: usize) -> IdentityReport {
    let e = hg_euler_recurrence(0, 2 * nmax);
    let mut report = IdentityReport::new("euler-pair-sum", None, (1, nmax));
    for n in 1..=nmax {
        let lhs: Rational = (0..=n)
            .map(|i| binomial(2 * n, 2 * i as i64) * e.get(2 * i))
            .sum();
        report.record(&[n], &lhs, &Rational::zero());
    }
    report
}

/// `E_{1,n} = -(n-1) B_n` for `1 <= n <= nmax`.
pub fn check_e1_bernoulli(nmax: usize) -> IdentityReport {
    let e = hg_euler_recurrence(1, nmax);
    let b = bernoulli_numbers(nmax);
    let mut report = IdentityReport::new("e1-bernoulli", Some(1), (1, nmax));
    for n in 1..=nmax {
        let rhs = -(Rational::from(n as i64 - 1) * &b[n]);
        report.record(&[n], e.get(n), &rhs);
    }
    report
}

/// `Σ_{i=0}^n (i-1) B_i / ((n-i+2)! i!)` is 0 for even `n` and
/// `-B_{n+1}/n!` for odd `n`, `1 <= n <= nmax`.
pub fn check_bernoulli_lemma(nmax: usize) -> IdentityReport {
    let b = bernoulli_numbers(nmax + 1);
    let mut report = IdentityReport::new("bernoulli-lemma", None, (1, nmax));
    for n in 1..=nmax {
        let lhs: Rational = (0..=n)
            .map(|i| Rational::from(i as i64 - 1) * &b[i] / (factorial(n - i + 2) * factorial(i)))
            .sum();
        let rhs = if n % 2 == 0 {
            Rational::zero()
        } else {
            -(&b[n + 1] / factorial(n))
        };
        report.record(&[n], &lhs, &rhs);
    }
    report
}

/// `Y_{N,2}(n) = Σ_{i=0}^n C(2n, 2i) E_{N,2i} E_{N,2n-2i}`.
pub fn y2(param: usize, n: usize) -> Rational {
    let e = hg_euler_recurrence(param, 2 * n);
    y2_from(e.values(), n)
}

fn y2_from(e: &[Rational], n: usize) -> Rational {
    (0..=n)
        .map(|i| binomial(2 * n, 2 * i as i64) * &e[2 * i] * &e[2 * n - 2 * i])
        .sum()
}

/// `Y_{0,2}(n) = 2^{2n+2} (2^{2n+2} - 1) B_{2n+2} / (2n+2)` for `0 <= n <= nmax`.
pub fn check_tangent_closed_form(nmax: usize) -> IdentityReport {
    let e = hg_euler_recurrence(0, 2 * nmax);
    let b = bernoulli_numbers(2 * nmax + 2);
    let mut report = IdentityReport::new("tangent-closed-form", Some(0), (0, nmax));
    for n in 0..=nmax {
        let p = Rational::from(2).pow(2 * n as u32 + 2);
        let rhs = &p * (&p - Rational::one()) * &b[2 * n + 2] / Rational::from(2 * n + 2);
        report.record(&[n], &y2_from(e.values(), n), &rhs);
    }
    report
}

/// `Σ_{k=1}^{2n+2} Σ_{j=0}^k C(k,j) (-1)^{j+1} (k-2j)^{2n+2} / (2^k i^k k)`
/// in Gaussian rationals. The imaginary part must vanish.
pub fn tangent_complex_sum(n: usize) -> Result<Rational> {
    let top = 2 * n + 2;
    let mut acc = GaussianRational::zero();
    for k in 1..=top {
        let inner: Rational = (0..=k)
            .map(|j| {
                binomial(k, j as i64)
                    * Rational::sign_power(j + 1)
                    * Rational::from(k as i64 - 2 * j as i64).pow(top as u32)
            })
            .sum();
        let scale = inner / (Rational::from(2).pow(k as u32) * Rational::from(k));
        let inv_i_k = GaussianRational::i_pow(k).recip().expect("i^k is a unit");
        acc = &acc + &inv_i_k.scale(&scale);
    }
    if !acc.is_real() {
        return Err(Error::NonzeroImaginaryPart { n, im: acc.im });
    }
    Ok(acc.re)
}

pub fn check_tangent_complex_sum(nmax: usize) -> Result<IdentityReport> {
    let e = hg_euler_recurrence(0, 2 * nmax);
    let mut report = IdentityReport::new("tangent-complex-sum", Some(0), (0, nmax));
    for n in 0..=nmax {
        report.record(&[n], &tangent_complex_sum(n)?, &y2_from(e.values(), n));
    }
    Ok(report)
}

/// `tan x = Σ (-1)^n Y_{0,2}(n) x^{2n+1}/(2n+1)!`, with `tan = sin · (1/cos)`
/// as truncated series; even coefficients must vanish.
pub fn check_tan_maclaurin(nmax: usize) -> IdentityReport {
    let order = 2 * nmax + 1;
    let tan = series::gen_sin(order).mul(&series::gen_cos(order).reciprocal().expect("cos(0) = 1"));
    let e = hg_euler_recurrence(0, 2 * nmax);
    let mut report = IdentityReport::new("tan-maclaurin", Some(0), (0, nmax));
    for n in 0..=nmax {
        report.record(&[2 * n], tan.coeff(2 * n), &Rational::zero());
        let rhs = Rational::sign_power(n) * y2_from(e.values(), n) / factorial(2 * n + 1);
        report.record(&[2 * n + 1], tan.coeff(2 * n + 1), &rhs);
    }
    report
}

/// `Σ C(n,i) E_{N,i} E_{N,n-i} = Σ C(n,k) (2N-k)/(2N) E_{N,k} Ê_{N-1,n-k}`.
pub fn check_sumprod_pair(param: usize, nmax: usize) -> Result<IdentityReport> {
    require_positive(param, "pair sums of products")?;
    let e = hg_euler_recurrence(param, nmax);
    let h = comp_hg_euler_recurrence(param - 1, nmax);
    let two_n = Rational::from(2 * param);
    let mut report = IdentityReport::new("sumprod-pair", Some(param), (0, nmax));
    for n in 0..=nmax {
        let lhs = binomial_square(e.values(), n);
        let rhs: Rational = (0..=n)
            .map(|k| {
                binomial(n, k as i64) * (&two_n - Rational::from(k)) / &two_n
                    * e.get(k)
                    * h.get(n - k)
            })
            .sum();
        report.record(&[n], &lhs, &rhs);
    }
    Ok(report)
}

/// `Σ C(n,i) Ê_{N,i} Ê_{N,n-i} = Σ C(n,k) (2N-k+1)/(2N+1) Ê_{N,k} E_{N,n-k}`.
pub fn check_sumprod_pair_comp(param: usize, nmax: usize) -> Result<IdentityReport> {
    require_positive(param, "pair sums of products")?;
    let e = hg_euler_recurrence(param, nmax);
    let h = comp_hg_euler_recurrence(param, nmax);
    let d = Rational::from(2 * param + 1);
    let mut report = IdentityReport::new("sumprod-pair-comp", Some(param), (0, nmax));
    for n in 0..=nmax {
        let lhs = binomial_square(h.values(), n);
        let rhs: Rational = (0..=n)
            .map(|k| {
                binomial(n, k as i64) * (&d - Rational::from(k)) / &d * h.get(k) * e.get(n - k)
            })
            .sum();
        report.record(&[n], &lhs, &rhs);
    }
    Ok(report)
}

fn binomial_square(v: &[Rational], n: usize) -> Rational {
    (0..=n)
        .map(|i| binomial(n, i as i64) * &v[i] * &v[n - i])
        .sum()
}

/// Trinomial convolution `Σ_{i1+i2+i3=n} n!/(i1! i2! i3!) v_{i1} v_{i2} v_{i3}`.
pub fn trinomial_cube(v: &[Rational], n: usize) -> Rational {
    let mut acc = Rational::zero();
    for i1 in 0..=n {
        if v[i1].is_zero() {
            continue;
        }
        for i2 in 0..=n - i1 {
            let i3 = n - i1 - i2;
            if v[i2].is_zero() || v[i3].is_zero() {
                continue;
            }
            acc += multinomial(&[i1, i2, i3]) * &v[i1] * &v[i2] * &v[i3];
        }
    }
    acc
}

/// Trinomial sums of products of `E_{N,·}` against `E_{N,·}` and `Ê_{N-1,·}`.
pub fn check_sumprod_trinomial(param: usize, nmax: usize) -> Result<IdentityReport> {
    require_positive(param, "trinomial sums of products")?;
    let e = hg_euler_recurrence(param, nmax);
    let h = comp_hg_euler_recurrence(param - 1, nmax);
    let four_n = Rational::from(4 * param);
    let two_n = Rational::from(2 * param);
    let denom = Rational::from(8 * param * param);
    let mut report = IdentityReport::new("sumprod-trinomial", Some(param), (0, nmax));
    for n in 0..=nmax {
        let lhs = trinomial_cube(e.values(), n);
        let mut rhs = Rational::zero();
        for m in 0..=n {
            for k in 0..=m {
                let w = (&four_n - Rational::from(m)) * (&two_n - Rational::from(k)) / &denom;
                rhs += binomial(n, m as i64)
                    * binomial(m, k as i64)
                    * w
                    * e.get(k)
                    * h.get(n - m)
                    * h.get(m - k);
            }
        }
        report.record(&[n], &lhs, &rhs);
    }
    Ok(report)
}

/// Trinomial sums of products of `Ê_{N,·}` against `Ê_{N,·}` and `E_{N,·}`.
pub fn check_sumprod_trinomial_comp(param: usize, nmax: usize) -> Result<IdentityReport> {
    require_positive(param, "trinomial sums of products")?;
    let e = hg_euler_recurrence(param, nmax);
    let h = comp_hg_euler_recurrence(param, nmax);
    let d = Rational::from(2 * param + 1);
    let four_n2 = Rational::from(4 * param + 2);
    let denom = Rational::from(2) * &d * &d;
    let mut report = IdentityReport::new("sumprod-trinomial-comp", Some(param), (0, nmax));
    for n in 0..=nmax {
        let lhs = trinomial_cube(h.values(), n);
        let mut rhs = Rational::zero();
        for m in 0..=n {
            for k in 0..=m {
                let w = (&four_n2 - Rational::from(m)) * (&d - Rational::from(k)) / &denom;
                rhs += binomial(n, m as i64)
                    * binomial(m, k as i64)
                    * w
                    * h.get(k)
                    * e.get(n - m)
                    * e.get(m - k);
            }
        }
        report.record(&[n], &lhs, &rhs);
    }
    Ok(report)
}

fn compare_series(
    report: &mut IdentityReport,
    tag: usize,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    note: &str,
) {
    let order = lhs.order().min(rhs.order());
    for j in 0..=order {
        report.record_noted(&[tag, j], lhs.coeff(j), rhs.coeff(j), Some(note));
    }
}

/// The truncated-series identities around `F`, `F*`, `F̂` and the ladder
/// family, one report each. `N >= 1`.
pub fn series_identity_reports(param: usize, order: usize) -> Result<Vec<IdentityReport>> {
    require_positive(param, "series identities")?;
    let f = series::gen_f(param, order)?;
    let f_star = series::gen_f_star(param, order)?;
    let f_hat = series::gen_f_hat(param, order)?;
    let two_n = Rational::from(2 * param);
    let inv_f = f.reciprocal()?;
    let inv_f_star = f_star.reciprocal()?;
    let inv_f_hat = f_hat.reciprocal()?;
    let range = (0, order);
    let mut out = Vec::new();

    // 2N F + t F' = 2N F*
    let mut r = IdentityReport::new("f-derivative", Some(param), range);
    let lhs = f.scale(&two_n).add(&f.derivative().mul_t());
    compare_series(
        &mut r,
        0,
        &lhs,
        &f_star.scale(&two_n),
        "2N F + t F' = 2N F*",
    );
    out.push(r);

    // j G_j + t G_j' = j G_{j-1} along the ladder G_j = Σ j!/(j+2n)! t^{2n}, G_{2N} = F
    let mut r = IdentityReport::new("ladder", Some(param), range);
    for j in 1..=2 * param {
        let upper = series::gen_f_k(j, order);
        let lower = series::gen_f_k(j - 1, order);
        let jj = Rational::from(j);
        let lhs = upper.scale(&jj).add(&upper.derivative().mul_t());
        compare_series(&mut r, j, &lhs, &lower.scale(&jj), "ladder step");
    }
    out.push(r);

    // cosh t = Σ_{i=0}^k C(k,i) t^i/i! G_k^{(i)}, k = 0..=2N
    let mut r = IdentityReport::new("cosh-expansion", Some(param), range);
    let cosh = series::gen_cosh(order);
    for k in 0..=2 * param {
        let g = series::gen_f_k(k, order);
        let mut acc = TruncatedSeries::zero(order);
        let mut deriv = g.clone();
        for i in 0..=k {
            let coeff = binomial(k, i as i64) / factorial(i);
            acc = acc.add(&deriv.mul_t_pow(i).scale(&coeff));
            deriv = deriv.derivative();
        }
        compare_series(&mut r, k, &acc, &cosh, "cosh expansion");
    }
    out.push(r);

    // F' = -F² (1/F)'
    let mut r = IdentityReport::new("f-prime-via-reciprocal", Some(param), range);
    let rhs = f.mul(&f).mul(&inv_f.derivative()).neg();
    compare_series(&mut r, 0, &f.derivative(), &rhs, "F' = -F^2 (1/F)'");
    out.push(r);

    // 1/F² = (1/F*) (1/F - t/(2N) (1/F)')
    let mut r = IdentityReport::new("inverse-square", Some(param), range);
    let t_over = two_n.recip().expect("N >= 1");
    let bracket = inv_f.sub(&inv_f.derivative().mul_t().scale(&t_over));
    compare_series(
        &mut r,
        0,
        &inv_f.mul(&inv_f),
        &inv_f_star.mul(&bracket),
        "1/F^2",
    );
    out.push(r);

    // 1/F³ = (1/F*) (1/F² - t/(2N) (1/F)(1/F)') = (1/F*) (1/F² - t/(4N) (1/F²)')
    let mut r = IdentityReport::new("inverse-cube", Some(param), range);
    let inv_f2 = inv_f.mul(&inv_f);
    let inv_f3 = inv_f2.mul(&inv_f);
    let first = inv_f_star.mul(&inv_f2.sub(&inv_f.mul(&inv_f.derivative()).mul_t().scale(&t_over)));
    let four_n = Rational::from(4 * param).recip().expect("N >= 1");
    let second = inv_f_star.mul(&inv_f2.sub(&inv_f2.derivative().mul_t().scale(&four_n)));
    compare_series(&mut r, 0, &inv_f3, &first, "1/F^3, product form");
    compare_series(&mut r, 1, &inv_f3, &second, "1/F^3, derivative form");
    out.push(r);

    // (2N+1) F̂ + t F̂' = (2N+1) F, and the complementary square and cube
    let d = Rational::from(2 * param + 1);
    let d_inv = d.recip().expect("nonzero");
    let mut r = IdentityReport::new("complementary-series", Some(param), range);
    let lhs = f_hat.scale(&d).add(&f_hat.derivative().mul_t());
    compare_series(
        &mut r,
        0,
        &lhs,
        &f.scale(&d),
        "(2N+1) F^ + t F^' = (2N+1) F",
    );
    let inv_h2 = inv_f_hat.mul(&inv_f_hat);
    let rhs = inv_f.mul(&inv_f_hat.sub(&inv_f_hat.derivative().mul_t().scale(&d_inv)));
    compare_series(&mut r, 1, &inv_h2, &rhs, "1/F^^2");
    let half_d_inv = (Rational::from(2) * &d).recip().expect("nonzero");
    let rhs = inv_f.mul(&inv_h2.sub(&inv_h2.derivative().mul_t().scale(&half_d_inv)));
    compare_series(&mut r, 2, &inv_h2.mul(&inv_f_hat), &rhs, "1/F^^3");
    out.push(r);

    Ok(out)
}

/// All series identities for one `N`, folded into a single report.
pub fn check_series_identities(param: usize, order: usize) -> Result<IdentityReport> {
    let parts = series_identity_reports(param, order)?;
    let mut report = IdentityReport::new("series-identities", Some(param), (0, order));
    for p in &parts {
        report.absorb(p);
    }
    Ok(report)
}

/// Product rule and both quotient-rule forms on `samples` random
/// polynomials of degree `<= max_degree`, derivative orders `1..=max_order`.
/// Indices on failure are `[sample, rule, n, coefficient]` with rule 0 the
/// product rule, 1 and 2 the two quotient forms.
pub fn check_hasse_teichmuller(
    samples: usize,
    max_degree: usize,
    max_order: usize,
    seed: u64,
) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Room for every derivative order plus a non-trivial tail.
    let order = max_degree + max_order + 4;
    let mut report = IdentityReport::new("hasse-teichmuller", None, (1, max_order));
    let random_poly = |rng: &mut ChaCha8Rng, nonzero_constant: bool| {
        let degree = rng.gen_range(0..=max_degree);
        TruncatedSeries::from_fn(order, |k| {
            if k > degree {
                return Rational::zero();
            }
            let mut num = rng.gen_range(-9i64..=9);
            if k == 0 && nonzero_constant && num == 0 {
                num = 1;
            }
            Rational::new(num, rng.gen_range(1i64..=6))
        })
    };
    for sample in 0..samples {
        let k = rng.gen_range(2..=4);
        let factors: Vec<TruncatedSeries> = (0..k).map(|_| random_poly(&mut rng, false)).collect();
        let product = factors
            .iter()
            .skip(1)
            .fold(factors[0].clone(), |acc, f| acc.mul(f));
        let f = random_poly(&mut rng, true);
        let inv = f.reciprocal().expect("constant term is nonzero");
        for n in 1..=max_order {
            let lhs = product.hasse_teichmuller(n);
            let rhs = series::product_rule_sum(&factors, n);
            for j in 0..=lhs.order() {
                report.record_noted(
                    &[sample, 0, n, j],
                    lhs.coeff(j),
                    rhs.coeff(j),
                    Some("product rule"),
                );
            }
            let lhs = inv.hasse_teichmuller(n);
            let first = series::quotient_rule_compositions(&f, n).expect("invertible");
            let second = series::quotient_rule_binomial(&f, n).expect("invertible");
            for j in 0..=lhs.order() {
                report.record_noted(
                    &[sample, 1, n, j],
                    lhs.coeff(j),
                    first.coeff(j),
                    Some("quotient rule, parts >= 1"),
                );
                report.record_noted(
                    &[sample, 2, n, j],
                    lhs.coeff(j),
                    second.coeff(j),
                    Some("quotient rule, binomial form"),
                );
            }
        }
    }
    report
}
