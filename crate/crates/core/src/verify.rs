//! Named verification suites. A suite expands into independent [`Check`]s,
//! each producing one [`IdentityReport`]; callers may run them in any order
//! or in parallel and keep the plan order for output.

use std::fmt;
use std::str::FromStr;

use crate::closed_forms::{
    bernoulli_det, cauchy_det, glaisher_trudi, hg_bernoulli_det, hg_cauchy_det,
    inverse_determinant_check, inverse_pair_check, route_values, Method, COMPOSITION_CAP,
};
use crate::error::{invalid, Error, Result};
use crate::families::{self, bernoulli_numbers, closed_small, FamilyId, FamilyKind};
use crate::golden;
use crate::identities::{self, IdentityReport};
use crate::Rational;

const HT_SEED: u64 = 0x4854_5f73_7569_7465;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Table1,
    ClosedForms,
    E1Bernoulli,
    BernoulliLemma,
    EulerPairSum,
    Tangent,
    Routes,
    Sumprod,
    SeriesIdentities,
    HasseTeichmuller,
    Inversion,
    Determinants,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Table1,
        Suite::ClosedForms,
        Suite::E1Bernoulli,
        Suite::BernoulliLemma,
        Suite::EulerPairSum,
        Suite::Tangent,
        Suite::Routes,
        Suite::Sumprod,
        Suite::SeriesIdentities,
        Suite::HasseTeichmuller,
        Suite::Inversion,
        Suite::Determinants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::ClosedForms => "closed-forms",
            Suite::E1Bernoulli => "e1-bernoulli",
            Suite::BernoulliLemma => "bernoulli-lemma",
            Suite::EulerPairSum => "euler-pair-sum",
            Suite::Tangent => "tangent",
            Suite::Routes => "routes",
            Suite::Sumprod => "sumprod",
            Suite::SeriesIdentities => "series-identities",
            Suite::HasseTeichmuller => "hasse-teichmuller",
            Suite::Inversion => "inversion",
            Suite::Determinants => "determinants",
        }
    }

    /// Default index bound (`n`, truncation order or derivative order).
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Table1 => golden::TABLE1_MAX_INDEX,
            Suite::ClosedForms => 8,
            Suite::E1Bernoulli => 60,
            Suite::BernoulliLemma => 30,
            Suite::EulerPairSum => 20,
            Suite::Tangent => 12,
            Suite::Routes => 40,
            Suite::Sumprod => 30,
            Suite::SeriesIdentities => 24,
            Suite::HasseTeichmuller => 6,
            Suite::Inversion => 15,
            Suite::Determinants => 12,
        }
    }

    /// Default parameter range `N`.
    pub fn default_params(self) -> Vec<usize> {
        match self {
            Suite::Table1 | Suite::Routes | Suite::Inversion => (0..=6).collect(),
            Suite::ClosedForms => (0..=20).collect(),
            Suite::Sumprod => (1..=6).collect(),
            Suite::SeriesIdentities | Suite::Determinants => (1..=4).collect(),
            Suite::E1Bernoulli => vec![1],
            Suite::Tangent => vec![0],
            Suite::BernoulliLemma | Suite::EulerPairSum | Suite::HasseTeichmuller => Vec::new(),
        }
    }

    /// Expand into concrete checks; `max_n` and `param` override the defaults.
    pub fn plan(self, max_n: Option<usize>, param: Option<usize>) -> Result<Vec<Check>> {
        let m = max_n.unwrap_or_else(|| self.default_max_n());
        let params = match param {
            None => self.default_params(),
            Some(p) => {
                let fixed = matches!(
                    self,
                    Suite::E1Bernoulli
                        | Suite::Tangent
                        | Suite::BernoulliLemma
                        | Suite::EulerPairSum
                        | Suite::HasseTeichmuller
                );
                if fixed && !self.default_params().contains(&p) {
                    return Err(invalid(format!("suite {self} does not take N = {p}")));
                }
                if matches!(
                    self,
                    Suite::Sumprod | Suite::SeriesIdentities | Suite::Determinants
                ) && p == 0
                {
                    return Err(invalid(format!("suite {self} needs N >= 1")));
                }
                if self == Suite::Table1 && p > golden::TABLE1_MAX_PARAM {
                    return Err(invalid(format!(
                        "the reference table stops at N = {}",
                        golden::TABLE1_MAX_PARAM
                    )));
                }
                vec![p]
            }
        };
        let euler = [FamilyKind::HgEuler, FamilyKind::ComplementaryHgEuler];
        let glaisher = [FamilyKind::HgBernoulli, FamilyKind::HgCauchy];
        let mut out = Vec::new();
        match self {
            Suite::Table1 => {
                let m = m.min(golden::TABLE1_MAX_INDEX);
                out.extend(params.iter().map(|&p| Check::Table1 { param: p, max_n: m }));
            }
            Suite::ClosedForms => {
                for kind in euler {
                    for &p in &params {
                        out.push(Check::ClosedForms {
                            kind,
                            param: p,
                            max_k: m.min(8),
                        });
                    }
                }
            }
            Suite::E1Bernoulli => out.push(Check::E1Bernoulli(m)),
            Suite::BernoulliLemma => out.push(Check::BernoulliLemma(m)),
            Suite::EulerPairSum => out.push(Check::EulerPairSum(m)),
            Suite::Tangent => {
                out.push(Check::TangentClosedForm(m));
                out.push(Check::TangentComplexSum(m));
                out.push(Check::TanMaclaurin(m));
            }
            Suite::Routes => {
                for kind in euler {
                    for &p in &params {
                        out.push(Check::Routes {
                            family: FamilyId::new(kind, p)?,
                            max_n: m,
                            composition_max_n: m.min(COMPOSITION_CAP),
                        });
                    }
                }
            }
            Suite::Sumprod => {
                for &p in &params {
                    out.push(Check::SumprodPair(p, m));
                    out.push(Check::SumprodPairComp(p, m));
                    out.push(Check::SumprodTrinomial(p, m));
                    out.push(Check::SumprodTrinomialComp(p, m));
                }
            }
            Suite::SeriesIdentities => {
                out.extend(
                    params
                        .iter()
                        .map(|&p| Check::SeriesIdentities { param: p, order: m }),
                );
            }
            Suite::HasseTeichmuller => out.push(Check::HasseTeichmuller {
                samples: 100,
                max_degree: 10,
                max_order: m,
                seed: HT_SEED,
            }),
            Suite::Inversion => {
                for kind in euler {
                    for &p in &params {
                        out.push(Check::Inversion {
                            kind,
                            param: p,
                            max_m: m,
                        });
                    }
                }
            }
            Suite::Determinants => {
                out.push(Check::ClassicalDeterminants(m));
                for kind in glaisher {
                    for &p in &params {
                        out.push(Check::Determinants {
                            kind,
                            param: p,
                            max_n: m,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

/// One independent unit of verification work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Table1 {
        param: usize,
        max_n: usize,
    },
    ClosedForms {
        kind: FamilyKind,
        param: usize,
        max_k: usize,
    },
    E1Bernoulli(usize),
    BernoulliLemma(usize),
    EulerPairSum(usize),
    TangentClosedForm(usize),
    TangentComplexSum(usize),
    TanMaclaurin(usize),
    Routes {
        family: FamilyId,
        max_n: usize,
        composition_max_n: usize,
    },
    SumprodPair(usize, usize),
    SumprodPairComp(usize, usize),
    SumprodTrinomial(usize, usize),
    SumprodTrinomialComp(usize, usize),
    SeriesIdentities {
        param: usize,
        order: usize,
    },
    HasseTeichmuller {
        samples: usize,
        max_degree: usize,
        max_order: usize,
        seed: u64,
    },
    Inversion {
        kind: FamilyKind,
        param: usize,
        max_m: usize,
    },
    Determinants {
        kind: FamilyKind,
        param: usize,
        max_n: usize,
    },
    ClassicalDeterminants(usize),
}

impl Check {
    pub fn run(&self) -> Result<IdentityReport> {
        match *self {
            Check::Table1 { param, max_n } => check_table1(param, max_n),
            Check::ClosedForms { kind, param, max_k } => check_closed_forms(kind, param, max_k),
            Check::E1Bernoulli(m) => Ok(identities::check_e1_bernoulli(m)),
            Check::BernoulliLemma(m) => Ok(identities::check_bernoulli_lemma(m)),
            Check::EulerPairSum(m) => Ok(identities::check_euler_pair_sum(m)),
            Check::TangentClosedForm(m) => Ok(identities::check_tangent_closed_form(m)),
            Check::TangentComplexSum(m) => identities::check_tangent_complex_sum(m),
            Check::TanMaclaurin(m) => Ok(identities::check_tan_maclaurin(m)),
            Check::Routes {
                family,
                max_n,
                composition_max_n,
            } => check_route_agreement(family, max_n, composition_max_n),
            Check::SumprodPair(p, m) => identities::check_sumprod_pair(p, m),
            Check::SumprodPairComp(p, m) => identities::check_sumprod_pair_comp(p, m),
            Check::SumprodTrinomial(p, m) => identities::check_sumprod_trinomial(p, m),
            Check::SumprodTrinomialComp(p, m) => identities::check_sumprod_trinomial_comp(p, m),
            Check::SeriesIdentities { param, order } => {
                identities::check_series_identities(param, order)
            }
            Check::HasseTeichmuller {
                samples,
                max_degree,
                max_order,
                seed,
            } => Ok(identities::check_hasse_teichmuller(
                samples, max_degree, max_order, seed,
            )),
            Check::Inversion { kind, param, max_m } => check_inversion(kind, param, max_m),
            Check::Determinants { kind, param, max_n } => check_determinants(kind, param, max_n),
            Check::ClassicalDeterminants(m) => check_classical_determinants(m),
        }
    }
}

/// Every computation method against the reference table for one row.
pub fn check_table1(param: usize, max_n: usize) -> Result<IdentityReport> {
    let family = FamilyId::hg_euler(param);
    let max_n = max_n.min(golden::TABLE1_MAX_INDEX);
    let mut report = IdentityReport::new("table1", Some(param), (0, max_n));
    for (mi, method) in Method::ALL.into_iter().enumerate() {
        for (n, v) in route_values(family, max_n, method)? {
            if n % 2 == 0 {
                let cell = golden::table1_cell(param, n)?;
                report.record_noted(&[n, mi], &v, &cell, Some(method.name()));
            }
        }
    }
    Ok(report)
}

/// The printed closed forms for `k = 2, 4, 6, 8` against the recurrence. On a
/// mismatch the note carries the ratio printed/actual.
pub fn check_closed_forms(kind: FamilyKind, param: usize, max_k: usize) -> Result<IdentityReport> {
    let table = families::recurrence(FamilyId::new(kind, param)?, max_k.max(2))?;
    let name = match kind {
        FamilyKind::HgEuler => "closed-forms",
        _ => "closed-forms-comp",
    };
    let mut report = IdentityReport::new(name, Some(param), (2, max_k));
    for k in (2..=max_k.min(8)).step_by(2) {
        let printed = closed_small(kind, param, k)?;
        let actual = table.get(k);
        if report.passed && &printed != actual {
            let note = if actual.is_zero() {
                "actual value is zero".to_string()
            } else {
                format!("printed/actual = {}", &printed / actual)
            };
            report.record_noted(&[k], &printed, actual, Some(&note));
        }
    }
    Ok(report)
}

/// Every applicable method agrees with the recurrence at every index it
/// covers; the composition routes stop at `composition_max_n`.
pub fn check_route_agreement(
    family: FamilyId,
    max_n: usize,
    composition_max_n: usize,
) -> Result<IdentityReport> {
    let reference = families::recurrence(family, max_n)?;
    let mut report = IdentityReport::new("routes", Some(family.param()), (0, max_n));
    report.identity = format!("routes-{}", family.kind());
    for (mi, method) in Method::ALL.into_iter().enumerate() {
        if !method.supports(family.kind()) {
            continue;
        }
        let nmax = match method {
            Method::Explicit | Method::Binomial => composition_max_n.min(max_n),
            _ => max_n,
        };
        for (n, v) in route_values(family, nmax, method)? {
            report.record_noted(&[n, mi], &v, reference.get(n), Some(method.name()));
        }
    }
    Ok(report)
}

/// The matrix-inverse pair and the determinant duality for `m = 1..=max_m`.
pub fn check_inversion(kind: FamilyKind, param: usize, max_m: usize) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(format!("inversion-{kind}"), Some(param), (1, max_m));
    let yes = Rational::one();
    for m in 1..=max_m {
        let pair = if inverse_pair_check(kind, param, m)? {
            yes.clone()
        } else {
            Rational::zero()
        };
        report.record_noted(&[m, 0], &pair, &yes, Some("inverse pair"));
        let det = if inverse_determinant_check(kind, param, m)? {
            yes.clone()
        } else {
            Rational::zero()
        };
        report.record_noted(&[m, 1], &det, &yes, Some("determinant duality"));
    }
    Ok(report)
}

/// Hypergeometric Bernoulli/Cauchy determinants and their Trudi expansions
/// against the recurrence tables.
pub fn check_determinants(kind: FamilyKind, param: usize, max_n: usize) -> Result<IdentityReport> {
    let table = families::recurrence(FamilyId::new(kind, param)?, max_n)?;
    let mut report = IdentityReport::new(format!("determinants-{kind}"), Some(param), (0, max_n));
    for n in 0..=max_n {
        let det = match kind {
            FamilyKind::HgBernoulli => hg_bernoulli_det(param, n)?,
            _ => hg_cauchy_det(param, n)?,
        };
        report.record_noted(&[n, 0], &det, table.get(n), Some("determinant"));
        let trudi = glaisher_trudi(kind, param, n)?;
        report.record_noted(&[n, 1], &trudi, table.get(n), Some("trudi expansion"));
    }
    Ok(report)
}

/// Classical Bernoulli and Cauchy determinants against independent tables:
/// Bernoulli numbers from their own recurrence, Cauchy numbers of the first
/// kind as `∫_0^1 (x)_n dx` through Stirling numbers.
pub fn check_classical_determinants(max_n: usize) -> Result<IdentityReport> {
    let b = bernoulli_numbers(max_n);
    let c = cauchy_numbers(max_n);
    let mut report = IdentityReport::new("determinants-classical", Some(1), (0, max_n));
    for n in 0..=max_n {
        report.record_noted(&[n, 0], &bernoulli_det(n)?, &b[n], Some("bernoulli"));
        report.record_noted(&[n, 1], &cauchy_det(n)?, &c[n], Some("cauchy"));
    }
    Ok(report)
}

/// `c_n = ∫_0^1 x(x-1)⋯(x-n+1) dx`, expanding the falling factorial.
fn cauchy_numbers(max_n: usize) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let integral: Rational = poly
            .iter()
            .enumerate()
            .map(|(j, a)| a / Rational::from(j + 1))
            .sum();
        out.push(integral);
        let shift = Rational::from(n);
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (j, a) in poly.iter().enumerate() {
            next[j + 1] += a;
            next[j] -= &shift * a;
        }
        poly = next;
    }
    out
}

/// Run every check of a suite in plan order.
pub fn run_suite(
    suite: Suite,
    max_n: Option<usize>,
    param: Option<usize>,
) -> Result<Vec<IdentityReport>> {
    suite.plan(max_n, param)?.iter().map(Check::run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cauchy_oracle_first_values() {
        let c = cauchy_numbers(4);
        let expected = [
            Rational::one(),
            Rational::new(1, 2),
            Rational::new(-1, 6),
            Rational::new(1, 4),
            Rational::new(-19, 30),
        ];
        assert_eq!(c, expected);
    }

    #[test]
    fn small_suites_pass() {
        for s in [
            Suite::Table1,
            Suite::Tangent,
            Suite::EulerPairSum,
            Suite::Inversion,
        ] {
            for r in run_suite(s, Some(8), None).unwrap() {
                assert!(r.passed, "{r:?}");
            }
        }
        for r in run_suite(Suite::Determinants, Some(8), None).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn closed_forms_small_params() {
        for p in 0..=3 {
            assert!(
                check_closed_forms(FamilyKind::HgEuler, p, 8)
                    .unwrap()
                    .passed
            );
            assert!(
                check_closed_forms(FamilyKind::ComplementaryHgEuler, p, 8)
                    .unwrap()
                    .passed
            );
        }
    }

    #[test]
    fn parameter_overrides() {
        assert!(Suite::Sumprod.plan(None, Some(0)).is_err());
        assert!(Suite::Tangent.plan(None, Some(3)).is_err());
        assert!(Suite::Table1.plan(None, Some(7)).is_err());
        assert_eq!(Suite::Sumprod.plan(Some(4), Some(2)).unwrap().len(), 4);
    }
}
