//! `hgnum`: compute number tables, reproduce the reference table and run
//! the verification suites.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 methods disagree or the
//! table differs, 4 a verification suite failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hgnum::closed_forms::{route_values, Method, COMPOSITION_CAP};
use hgnum::families::{FamilyId, FamilyKind};
use hgnum::golden::{self, TABLE1_MAX_INDEX, TABLE1_MAX_PARAM};
use hgnum::identities::IdentityReport;
use hgnum::verify::{Check, Suite};
use hgnum::{Error, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "hgnum",
    version,
    about = "Exact hypergeometric Euler numbers and relatives"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a number table by one method or by all of them.
    Compute {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(long = "N")]
        param: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        /// recurrence, series, explicit, binomial, det, trudi or all
        #[arg(long, default_value = "recurrence", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print E_{N,n} for N <= 6, even n <= 14 and diff against the reference copy.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and emit a JSON report.
    Verify {
        /// A suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long = "N")]
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    One(Method),
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    if s == "all" {
        return Ok(MethodChoice::All);
    }
    s.parse()
        .map(MethodChoice::One)
        .map_err(|e: Error| e.to_string())
}

/// One computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    #[serde(rename = "N")]
    pub param: usize,
    pub n: usize,
    pub method: String,
    pub value: Rational,
}

#[derive(Debug, Serialize)]
struct VerifySummary<'a> {
    passed: bool,
    reports: &'a [IdentityReport],
}

/// Parse `args` and execute; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INVALID;
    }
    let result = match cli.command {
        Command::Compute {
            family,
            param,
            max_n,
            method,
            format,
            out,
        } => with_output(out.as_deref(), stdout, |w| {
            cmd_compute(family, param, max_n, method, format, w, stderr)
        }),
        Command::Table1 { out } => with_output(out.as_deref(), stdout, |w| cmd_table1(w, stderr)),
        Command::Verify {
            suite,
            max_n,
            param,
            out,
        } => with_output(out.as_deref(), stdout, |w| {
            cmd_verify(&suite, max_n, param, w, stderr)
        }),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Core(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// `HGNUM_THREADS` caps the worker pool.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("HGNUM_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|_| format!("HGNUM_THREADS must be a positive integer, got {raw:?}"))?;
    if n == 0 {
        return Err("HGNUM_THREADS must be positive".into());
    }
    // A second call in the same process (tests) finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn with_output(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<u8, CliError>,
) -> Result<u8, CliError> {
    match path {
        None => f(stdout),
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            let code = f(&mut w)?;
            w.flush()?;
            Ok(code)
        }
    }
}

/// All records for a request, sorted by family, N, n, method.
pub fn compute_records(
    kind: FamilyKind,
    param: usize,
    max_n: usize,
    method: MethodChoice,
) -> hgnum::Result<Vec<OutputRecord>> {
    let family = FamilyId::new(kind, param)?;
    let methods: Vec<(Method, usize)> = match method {
        MethodChoice::One(m) => vec![(m, max_n)],
        MethodChoice::All => Method::ALL
            .into_iter()
            .filter(|m| m.supports(kind))
            .map(|m| match m {
                Method::Explicit | Method::Binomial => (m, max_n.min(COMPOSITION_CAP)),
                _ => (m, max_n),
            })
            .collect(),
    };
    let tables: Vec<Vec<(usize, Rational)>> = methods
        .par_iter()
        .map(|&(m, nmax)| route_values(family, nmax, m))
        .collect::<hgnum::Result<_>>()?;
    let mut records: Vec<OutputRecord> = methods
        .iter()
        .zip(tables)
        .flat_map(|(&(m, _), values)| {
            values.into_iter().map(move |(n, value)| OutputRecord {
                family: kind.name().to_string(),
                param,
                n,
                method: m.name().to_string(),
                value,
            })
        })
        .collect();
    records.sort_by(|a, b| {
        (&a.family, a.param, a.n, &a.method).cmp(&(&b.family, b.param, b.n, &b.method))
    });
    Ok(records)
}

/// Indices where two methods gave different values.
pub fn disagreements(records: &[OutputRecord]) -> Vec<usize> {
    let mut by_n: BTreeMap<usize, &Rational> = BTreeMap::new();
    let mut bad = Vec::new();
    for r in records {
        match by_n.get(&r.n) {
            Some(v) if *v != &r.value => {
                if bad.last() != Some(&r.n) {
                    bad.push(r.n);
                }
            }
            Some(_) => {}
            None => {
                by_n.insert(r.n, &r.value);
            }
        }
    }
    bad
}

fn cmd_compute(
    kind: FamilyKind,
    param: usize,
    max_n: usize,
    method: MethodChoice,
    format: Format,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, CliError> {
    let records = compute_records(kind, param, max_n, method)?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if records.is_empty() {
                w.write_record(["family", "N", "n", "method", "value"])?;
            }
            for r in &records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
    }
    let bad = disagreements(&records);
    if bad.is_empty() {
        return Ok(EXIT_OK);
    }
    for n in bad {
        let vals: Vec<String> = records
            .iter()
            .filter(|r| r.n == n)
            .map(|r| format!("{}={}", r.method, r.value))
            .collect();
        writeln!(stderr, "methods disagree at n = {n}: {}", vals.join(", "))?;
    }
    Ok(EXIT_MISMATCH)
}

/// `(N, n, method, computed, reference)` for every mismatching cell.
type TableDiff = Vec<(usize, usize, Method, Rational, Rational)>;

/// Rows of the computed table by the recurrence, plus every cell where any
/// method departs from the reference copy.
pub fn table1_rows() -> hgnum::Result<(Vec<Vec<Rational>>, TableDiff)> {
    let per_param: Vec<hgnum::Result<(Vec<Rational>, TableDiff)>> = (0..=TABLE1_MAX_PARAM)
        .into_par_iter()
        .map(|param| {
            let family = FamilyId::hg_euler(param);
            let mut row = Vec::new();
            let mut diff = Vec::new();
            for method in Method::ALL {
                for (n, v) in route_values(family, TABLE1_MAX_INDEX, method)? {
                    if n % 2 == 1 {
                        continue;
                    }
                    let cell = golden::table1_cell(param, n)?;
                    if method == Method::Recurrence {
                        row.push(v.clone());
                    }
                    if v != cell {
                        diff.push((param, n, method, v, cell));
                    }
                }
            }
            Ok((row, diff))
        })
        .collect();
    let mut rows = Vec::new();
    let mut diff = Vec::new();
    for r in per_param {
        let (row, d) = r?;
        rows.push(row);
        diff.extend(d);
    }
    Ok((rows, diff))
}

fn cmd_table1(out: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, CliError> {
    let (rows, diff) = table1_rows()?;
    write!(out, "N")?;
    for n in (0..=TABLE1_MAX_INDEX).step_by(2) {
        write!(out, "\tn={n}")?;
    }
    writeln!(out)?;
    for (param, row) in rows.iter().enumerate() {
        write!(out, "{param}")?;
        for v in row {
            write!(out, "\t{v}")?;
        }
        writeln!(out)?;
    }
    if diff.is_empty() {
        return Ok(EXIT_OK);
    }
    for (param, n, method, got, want) in diff {
        writeln!(
            stderr,
            "- E_{{{param},{n}}} reference {want}\n+ E_{{{param},{n}}} {method} {got}"
        )?;
    }
    Ok(EXIT_MISMATCH)
}

/// Expand the requested suites into checks and run them in parallel,
/// keeping plan order.
pub fn verify_reports(
    suite: &str,
    max_n: Option<usize>,
    param: Option<usize>,
) -> hgnum::Result<Vec<IdentityReport>> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut checks: Vec<Check> = Vec::new();
    for s in suites {
        checks.extend(s.plan(max_n, param)?);
    }
    checks.par_iter().map(Check::run).collect()
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    param: Option<usize>,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, CliError> {
    let reports = match verify_reports(suite, max_n, param) {
        Ok(r) => r,
        Err(Error::NonzeroImaginaryPart { n, im }) => {
            writeln!(
                stderr,
                "tangent complex sum has imaginary part {im} at n = {n}"
            )?;
            return Ok(EXIT_VERIFY_FAILED);
        }
        Err(e) => return Err(e.into()),
    };
    let passed = reports.iter().all(|r| r.passed);
    serde_json::to_writer_pretty(
        &mut *out,
        &VerifySummary {
            passed,
            reports: &reports,
        },
    )?;
    writeln!(out)?;
    if passed {
        return Ok(EXIT_OK);
    }
    for r in reports.iter().filter(|r| !r.passed) {
        if let Some(f) = &r.first_failure {
            writeln!(
                stderr,
                "{} (N = {:?}) fails at {:?}: {} != {}",
                r.identity, r.param, f.indices, f.lhs, f.rhs
            )?;
        }
    }
    Ok(EXIT_VERIFY_FAILED)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["hgnum"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn single_record() {
        let (code, out, _) = run_capture(&[
            "compute", "--family", "hg-euler", "--N", "0", "--max-n", "0",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "family,N,n,method,value\nhg-euler,0,0,recurrence,1/1\n"
        );
    }

    #[test]
    fn invalid_parameters_exit_2() {
        let (code, _, err) = run_capture(&[
            "compute",
            "--family",
            "hg-bernoulli",
            "--N",
            "0",
            "--max-n",
            "4",
        ]);
        assert_eq!(code, EXIT_INVALID, "{err}");
        let (code, _, _) =
            run_capture(&["compute", "--family", "nope", "--N", "1", "--max-n", "4"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_capture(&["verify", "--suite", "nope"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_capture(&[
            "compute",
            "--family",
            "hg-cauchy",
            "--N",
            "1",
            "--max-n",
            "4",
            "--method",
            "explicit",
        ]);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn disagreement_detection() {
        let rec = |n, method: &str, v| OutputRecord {
            family: "hg-euler".into(),
            param: 0,
            n,
            method: method.into(),
            value: Rational::from(v),
        };
        let ok = vec![rec(0, "det", 1), rec(0, "series", 1), rec(2, "det", -1)];
        assert!(disagreements(&ok).is_empty());
        let bad = vec![
            rec(0, "det", 1),
            rec(0, "series", 1),
            rec(2, "det", -1),
            rec(2, "series", 1),
        ];
        assert_eq!(disagreements(&bad), vec![2]);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("compute"));
    }
}
