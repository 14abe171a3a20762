use std::ffi::OsString;
use std::fmt::Display;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use rank2p3_core::bounds::{self, bar_alpha, zeta};
use rank2p3_core::bundle::{delta, Diagnostic};
use rank2p3_core::euler::verify_lemma_identities;
use rank2p3_core::tables::{builtin_fixtures, has_failures, verify_table, Fixture};
use rank2p3_core::theorems::{forced_nonvanishing, NonVanishingReport, ReportNote};
use rank2p3_core::{BundleProfile, ChernClasses, CheckStatus, CohomologyTable, FirstChern, QuadraticValue};

use crate::format::parse_table_bytes;

#[derive(Parser, Debug)]
#[command(name = "rank2p3", version, about = "Cohomology bounds for normalized rank 2 bundles on P3")]
struct Cli {
    /// `records` prints one `key=value` fact per line.
    #[arg(long, value_enum, default_value_t = OutputFormat::Records, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Records,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bounds, forced non-vanishing range and constraints for one profile.
    #[command(allow_negative_numbers = true)]
    Report {
        #[arg(long)]
        c1: i64,
        #[arg(long)]
        c2: i64,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long)]
        gamma: Option<i64>,
    },
    /// Check a table file against every consequence of the theory.
    #[command(allow_negative_numbers = true)]
    Verify {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long)]
        gamma: Option<i64>,
    },
    /// Exhaustive check of the polynomial and binomial identities.
    #[command(allow_negative_numbers = true)]
    Identities {
        #[arg(long, default_value_t = -20)]
        n_min: i64,
        #[arg(long, default_value_t = 20)]
        n_max: i64,
        #[arg(long, default_value_t = -10)]
        alpha_min: i64,
        #[arg(long, default_value_t = 0)]
        alpha_max: i64,
    },
    /// One line of bounds per c2.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        c1: i64,
        #[arg(long)]
        c2_min: i64,
        #[arg(long)]
        c2_max: i64,
        #[arg(long)]
        alpha: Option<i64>,
    },
    /// List the built-in worked examples.
    Fixtures {
        /// Verify every fixture and fail on any mismatch.
        #[arg(long)]
        run: bool,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Out {
    format: OutputFormat,
    stdout: String,
    stderr: String,
}

impl Out {
    fn kv(&mut self, key: &str, value: impl Display) {
        let line = match self.format {
            OutputFormat::Records => format!("{key}={value}\n"),
            OutputFormat::Plain => format!("{key:<24} {value}\n"),
        };
        self.stdout.push_str(&line);
    }

    fn line(&mut self, line: impl Display) {
        self.stdout.push_str(&format!("{line}\n"));
    }

    fn err(&mut self, line: impl Display) {
        self.stderr.push_str(&format!("{line}\n"));
    }
}

/// A failure that ends the command with exit status 1.
struct Failed;

type Step = Result<(), Failed>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: text, stderr: String::new() },
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut out = Out { format: cli.format, stdout: String::new(), stderr: String::new() };
    let result = match cli.command {
        Command::Report { c1, c2, alpha, gamma } => report(&mut out, c1, c2, alpha, gamma),
        Command::Verify { file, alpha, gamma } => verify(&mut out, &file, alpha, gamma),
        Command::Identities { n_min, n_max, alpha_min, alpha_max } => identities(&mut out, n_min, n_max, alpha_min, alpha_max),
        Command::Sweep { c1, c2_min, c2_max, alpha } => sweep(&mut out, c1, c2_min, c2_max, alpha),
        Command::Fixtures { run } => fixtures(&mut out, run),
    };
    Outcome { code: if result.is_ok() { 0 } else { 1 }, stdout: out.stdout, stderr: out.stderr }
}

fn fail(out: &mut Out, message: impl Display) -> Failed {
    out.err(format!("error: {message}"));
    Failed
}

fn chern(out: &mut Out, c1: i64, c2: i64) -> Result<ChernClasses, Failed> {
    ChernClasses::new(c1, c2).map_err(|e| fail(out, e))
}

/// `1 (integer)` or `sqrt(13)-2 ~1.6056`.
fn show_bound(v: &QuadraticValue) -> String {
    match v.to_integer() {
        Some(k) => format!("{k} (integer)"),
        None => format!("{v} ~{:.4}", v.approx()),
    }
}

fn show_opt(v: Option<impl Display>) -> String {
    v.map_or_else(|| "na".to_string(), |v| v.to_string())
}

fn report(out: &mut Out, c1: i64, c2: i64, alpha: Option<i64>, gamma: Option<i64>) -> Step {
    let chern = chern(out, c1, c2)?;
    let profile = BundleProfile::new(chern, alpha, gamma).map_err(|e| fail(out, e))?;
    out.kv("c1", chern.c1);
    out.kv("c2", chern.c2);
    if let Some(a) = alpha {
        out.kv("alpha", a);
    }
    if let Some(g) = gamma {
        out.kv("gamma", g);
    }
    out.kv("stability", profile.stability);
    if let (Some(d), Some(r)) = (profile.delta, profile.instability_order()) {
        out.kv("delta", d);
        out.kv("instability_order", r);
    }
    if let Some(Diagnostic::OddC2WithOddC1) = chern.diagnostic() {
        out.kv("warning", Diagnostic::OddC2WithOddC1);
    }
    if let Ok(z) = zeta(chern) {
        out.kv("zeta", show_bound(&z));
        let b = bar_alpha(chern).map_err(|e| fail(out, e))?;
        out.kv("bar_alpha", b);
    }

    let report = forced_nonvanishing(&profile).map_err(|e| fail(out, e))?;
    print_report(out, &report);
    Ok(())
}

fn print_report(out: &mut Out, report: &NonVanishingReport) {
    for (kind, value) in &report.bounds {
        if kind.name() != "zeta" {
            out.kv(kind.name(), show_bound(value));
        }
    }
    let (lo, hi) = report.interval;
    out.kv("forced", format!("{lo}..{hi}"));
    for r in &report.ranges {
        out.kv(&format!("clause.{}", r.clause), format!("{}..{}", r.lo, r.hi));
    }
    for c in &report.conditional {
        out.kv(&format!("conditional.{}", c.clause), format!("needs {}", c.needs));
    }
    for c in &report.constraints {
        out.kv(&format!("constraint.{}", c.clause), c.describe());
    }
    for note in &report.notes {
        match note {
            ReportNote::IntegralEtaDelta(k) => out.kv("note", format!("eta={k} is an integer; n={k} included")),
            ReportNote::Parity(_) => {}
        }
    }
    if let Some(cmp) = &report.comparison {
        out.kv("gamma_bound", cmp.gamma_bound);
        out.kv("our_bound", cmp.our_bound);
        out.kv("verdict", cmp.verdict);
        if let Some(l) = cmp.literature_lower {
            out.kv("literature_lower", l);
        }
    }
}

/// Puts flag values for `alpha` and `gamma` into the table; a flag that
/// contradicts the file header is an error.
fn merge_levels(out: &mut Out, table: CohomologyTable, alpha: Option<i64>, gamma: Option<i64>) -> Result<CohomologyTable, Failed> {
    let pick = |out: &mut Out, name, file: Option<i64>, flag: Option<i64>| match (file, flag) {
        (Some(a), Some(b)) if a != b => Err(fail(out, format!("--{name} {b} conflicts with file header {name}={a}"))),
        (a, b) => Ok(a.or(b)),
    };
    let merged_alpha = pick(out, "alpha", table.alpha(), alpha)?;
    let merged_gamma = pick(out, "gamma", table.gamma(), gamma)?;
    if (merged_alpha, merged_gamma) == (table.alpha(), table.gamma()) {
        return Ok(table);
    }
    let rows = table.rows().map(|(_, r)| *r).collect();
    CohomologyTable::new(table.chern(), merged_alpha, merged_gamma, table.n_min(), rows)
        .map(|t| t.with_beta(table.beta()))
        .map_err(|e| fail(out, format!("invalid table: {e}")))
}

fn verify(out: &mut Out, file: &std::path::Path, alpha: Option<i64>, gamma: Option<i64>) -> Step {
    let bytes = std::fs::read(file).map_err(|e| fail(out, format!("{}: {e}", file.display())))?;
    let table = parse_table_bytes(&bytes).map_err(|e| fail(out, format!("{}: {e}", file.display())))?;
    let table = merge_levels(out, table, alpha, gamma)?;
    let profile = BundleProfile::new(table.chern(), table.alpha(), table.gamma())
        .map_err(|e| fail(out, e))?
        .with_beta(table.beta());
    let results = verify_table(&table, &profile).map_err(|e| fail(out, e))?;
    for r in &results {
        let status = match (&r.status, r.fatal) {
            (CheckStatus::Fail, false) => "fail (non-fatal)".to_string(),
            (s, _) => s.to_string(),
        };
        out.kv(&format!("check.{}", r.name), status);
        if r.failed() {
            for d in &r.details {
                out.err(format!("{}: {d}", r.name));
            }
        }
    }
    let failed = has_failures(&results);
    out.kv("result", if failed { "fail" } else { "pass" });
    if failed {
        Err(Failed)
    } else {
        Ok(())
    }
}

fn identities(out: &mut Out, n_min: i64, n_max: i64, alpha_min: i64, alpha_max: i64) -> Step {
    if n_min > n_max || alpha_min > alpha_max {
        return Err(fail(out, "empty range: minimum exceeds maximum"));
    }
    let report = verify_lemma_identities(n_min..=n_max, alpha_min..=alpha_max);
    for o in &report.outcomes {
        let status = match o.counterexample {
            None => format!("pass checked={}", o.checked),
            Some(c) => format!("fail n={} alpha={}", c.n, show_opt(c.alpha)),
        };
        out.kv(&format!("identity.{}", o.name), status);
    }
    let ok = report.all_pass();
    out.kv("result", if ok { "pass" } else { "fail" });
    if ok {
        Ok(())
    } else {
        Err(Failed)
    }
}

const SWEEP_COLUMNS: [&str; 7] = ["c2", "zeta_floor", "bar_alpha", "tau_floor", "eta_floor", "eta_alpha_floor", "forced_max"];

fn sweep(out: &mut Out, c1: i64, c2_min: i64, c2_max: i64, alpha: Option<i64>) -> Step {
    let c1 = FirstChern::try_from(c1).map_err(|e| fail(out, e))?;
    if c2_min > c2_max {
        return Err(fail(out, "empty range: --c2-min exceeds --c2-max"));
    }
    if out.format == OutputFormat::Plain {
        out.line(SWEEP_COLUMNS.join(","));
    }
    for c2 in c2_min..=c2_max {
        let chern = ChernClasses::normalized(c1, c2);
        let floor = |v: rank2p3_core::Result<QuadraticValue>| show_opt(v.ok().map(|v| v.floor()));
        let d = alpha.map(|a| delta(chern, a));
        let negative = alpha.filter(|a| *a < 0).zip(d);
        let forced = BundleProfile::new(chern, alpha, None)
            .and_then(|p| forced_nonvanishing(&p))
            .map(|r| r.max_forced());
        let values = [
            c2.to_string(),
            floor(zeta(chern)),
            show_opt(bar_alpha(chern).ok()),
            floor(bounds::tau(chern)),
            show_opt(negative.and_then(|(_, d)| bounds::eta_delta(c1, d).ok()).map(|v| v.floor())),
            show_opt(negative.and_then(|(a, d)| bounds::eta_alpha_delta(c1, a, d).ok()).map(|v| v.floor())),
            show_opt(forced.ok()),
        ];
        match out.format {
            OutputFormat::Records => {
                let fields: Vec<_> = SWEEP_COLUMNS.iter().zip(&values).map(|(k, v)| format!("{k}={v}")).collect();
                out.line(fields.join(" "));
            }
            OutputFormat::Plain => out.line(values.join(",")),
        }
    }
    Ok(())
}

fn run_fixture(f: &Fixture) -> Result<(), String> {
    let report = forced_nonvanishing(&f.profile).map_err(|e| e.to_string())?;
    if report.max_forced() != f.expected.forced_max {
        return Err(format!("forced max {} expected {}", report.max_forced(), f.expected.forced_max));
    }
    if bar_alpha(f.profile.chern).ok() != f.expected.bar_alpha {
        return Err("bar_alpha mismatch".into());
    }
    if let Some(n) = f.expected.nonvanishing.iter().find(|n| !report.is_forced(**n)) {
        return Err(format!("n={n} not forced"));
    }
    if let Some(table) = &f.table {
        let results = verify_table(table, &f.profile).map_err(|e| e.to_string())?;
        let failed: Vec<_> = results.iter().filter(|r| r.failed()).map(|r| r.name).collect();
        if !failed.is_empty() {
            return Err(format!("failing checks {}", failed.join(",")));
        }
    }
    Ok(())
}

fn fixtures(out: &mut Out, run: bool) -> Step {
    let mut any_failed = false;
    for f in builtin_fixtures() {
        let p = &f.profile;
        let mut desc = format!("c1={} c2={} alpha={} gamma={}", p.chern.c1, p.chern.c2, show_opt(p.alpha), show_opt(p.gamma));
        desc.push_str(&format!(" table={} forced_max={} title=\"{}\"", if f.table.is_some() { "yes" } else { "no" }, f.expected.forced_max, f.title));
        out.kv(&format!("fixture.{}", f.id), desc);
        for a in &f.annotations {
            let rel = if a.h1_nonzero { "!=0" } else { "=0" };
            out.kv(&format!("annotation.{}", f.id), format!("h1(E({})){rel} (not checked)", a.twist));
        }
        if run {
            match run_fixture(&f) {
                Ok(()) => out.kv(&format!("run.{}", f.id), "pass"),
                Err(e) => {
                    any_failed = true;
                    out.kv(&format!("run.{}", f.id), "fail");
                    out.err(format!("{}: {e}", f.id));
                }
            }
        }
    }
    if run {
        out.kv("result", if any_failed { "fail" } else { "pass" });
    }
    if any_failed {
        Err(Failed)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("rank2p3").chain(args.split_whitespace()))
    }

    #[test]
    fn report_integral_zeta() {
        let o = run_args("report --c1 -1 --c2 2 --alpha 1 --gamma 2");
        assert_eq!(o.code, 0, "{}", o.stderr);
        for line in ["zeta=1 (integer)", "bar_alpha=2", "forced=-1..1", "gamma_bound=0", "verdict=better"] {
            assert!(o.stdout.lines().any(|l| l == line), "missing {line} in\n{}", o.stdout);
        }
    }

    #[test]
    fn report_irrational_bound_has_approximation() {
        let o = run_args("report --c1 0 --c2 4");
        assert!(o.stdout.contains("zeta=sqrt(13)-2 ~1.6056"), "{}", o.stdout);
        assert!(!o.stdout.contains("conditional.integral-zeta"));
        assert!(o.stdout.contains("conditional.nonstable-range=needs alpha"));
    }

    #[test]
    fn report_refuses_inapplicable() {
        let o = run_args("report --c1 0 --c2 -5 --alpha 1");
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("theorem inapplicable: requires c2 > 0 or non-stability"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args("report --c1 0").code, 2);
        assert_eq!(run_args("report --c1 0 --c2 1 --bogus").code, 2);
        assert_eq!(run_args("frobnicate").code, 2);
        assert_eq!(run_args("--help").code, 0);
    }

    #[test]
    fn domain_errors_exit_one() {
        assert_eq!(run_args("report --c1 1 --c2 1").code, 1);
        assert_eq!(run_args("report --c1 0 --c2 4 --alpha 2 --gamma 1").code, 1);
        assert_eq!(run_args("sweep --c1 0 --c2-min 5 --c2-max 1").code, 1);
    }

    #[test]
    fn plain_format() {
        let o = run_args("--format plain sweep --c1 0 --c2-min 3 --c2-max 4 --alpha 0");
        let lines: Vec<_> = o.stdout.lines().collect();
        assert_eq!(lines[0], SWEEP_COLUMNS.join(","));
        assert_eq!(lines[2], "4,1,2,3,na,na,2");
    }
}
