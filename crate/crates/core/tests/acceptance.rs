//! One line per acceptance criterion, exact comparison throughout. Exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use hgnum::identities::{self, y2, IdentityReport};
use hgnum::verify::{Check, Suite};
use hgnum::{Rational, Result};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn summarize(reports: Result<Vec<IdentityReport>>) -> Outcome {
    match reports {
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
        Ok(reports) => match reports.iter().find(|r| !r.passed) {
            None => Outcome {
                passed: true,
                detail: format!("{} reports", reports.len()),
            },
            Some(r) => {
                let f = r
                    .first_failure
                    .as_ref()
                    .expect("failed report has a failure");
                Outcome {
                    passed: false,
                    detail: format!(
                        "{} N={:?} at {:?}: {} != {}{}",
                        r.identity,
                        r.param,
                        f.indices,
                        f.lhs,
                        f.rhs,
                        f.note
                            .as_ref()
                            .map(|n| format!(" ({n})"))
                            .unwrap_or_default()
                    ),
                }
            }
        },
    }
}

fn run_checks(checks: Vec<Check>) -> Result<Vec<IdentityReport>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || c.run())).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    })
}

fn suite(suite: Suite, max_n: usize) -> Result<Vec<IdentityReport>> {
    run_checks(suite.plan(Some(max_n), None)?)
}

fn criterion_1() -> Outcome {
    summarize(suite(Suite::Table1, 14))
}

fn criterion_2() -> Outcome {
    summarize(suite(Suite::ClosedForms, 8))
}

fn criterion_3() -> Outcome {
    summarize(Ok(vec![identities::check_e1_bernoulli(60)]))
}

fn criterion_4() -> Outcome {
    let listed: [i64; 8] = [1, -2, 16, -272, 7936, -353792, 22368256, -1903757312];
    let mut listed_report = IdentityReport::new("tangent-listed", Some(0), (0, 7));
    for (n, &v) in listed.iter().enumerate() {
        listed_report.record(&[n], &y2(0, n), &Rational::from(v));
    }
    let rest = (|| {
        Ok(vec![
            listed_report,
            identities::check_tangent_closed_form(8),
            identities::check_tangent_complex_sum(8)?,
            identities::check_tan_maclaurin(12),
        ])
    })();
    summarize(rest)
}

fn criterion_5() -> Outcome {
    summarize(suite(Suite::Routes, 40))
}

fn criterion_6() -> Outcome {
    summarize(suite(Suite::Sumprod, 30))
}

fn criterion_7() -> Outcome {
    summarize(suite(Suite::SeriesIdentities, 24))
}

fn criterion_8() -> Outcome {
    summarize(suite(Suite::HasseTeichmuller, 6))
}

fn criterion_9() -> Outcome {
    let mut checks = Suite::Inversion.plan(Some(15), None).unwrap_or_default();
    checks.extend(Suite::Determinants.plan(Some(12), None).unwrap_or_default());
    if checks.is_empty() {
        return Outcome {
            passed: false,
            detail: "no checks planned".into(),
        };
    }
    summarize(run_checks(checks))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table of E_{N,n}, N<=6, n<=14, every method", criterion_1),
        ("closed forms k=2..8, both families, N<=20", criterion_2),
        ("E_{1,n} = -(n-1)B_n, n<=60", criterion_3),
        (
            "tangent numbers: list, Bernoulli form, complex sum, tan series",
            criterion_4,
        ),
        (
            "method agreement, both families, N<=6, n<=40 (composition routes n<=30)",
            criterion_5,
        ),
        ("sums of products, four forms, 1<=N<=6, n<=30", criterion_6),
        ("series identities to order 24, 1<=N<=4", criterion_7),
        (
            "Hasse-Teichmueller product and quotient rules, 100 random series",
            criterion_8,
        ),
        (
            "inverse pairs, duality n<=15; determinants n<=12, N<=4",
            criterion_9,
        ),
    ];
    let mut all = true;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        all &= out.passed;
        println!(
            "criterion {}: {} | {} | {} | {:.2}s",
            i + 1,
            if out.passed { "PASS" } else { "FAIL" },
            label,
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
