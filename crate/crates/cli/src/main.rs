//! `interlace`: generate Boros–Moll rows, run exact verification sweeps and
//! check triangular-recurrence criteria from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when any check reports a
//! violation, 2 on usage or configuration errors.

mod output;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use interlace_core::boros_moll::{
    generate_row_dyadic, row_direct, triangle_recurrence, verify_recurrence, GenerationMethod,
    RecurrenceId,
};
use interlace_core::criterion::{
    criterion_report, family, parse_recurrence, sample_cone_recurrence, FamilyId,
    TriangularRecurrence, DEFAULT_STURM_UP_TO,
};
use interlace_core::inequality::{
    check_interlacing_pair, check_lemma_strlog, check_lemma_tl1, check_log_concave, check_theorem1,
    check_unimodal_middle, interlacing_depth, k_fold_log_concavity, sweep_pairs, sweep_rows,
};
use interlace_core::{CheckReport, CoefficientTriangle, Strictness, Violation};

use output::*;

const DEFAULT_M_CAP: usize = 2000;
/// Rows cross-checked against the direct formula before a sweep.
const CROSS_CHECK_ROWS: usize = 30;

#[derive(Debug, Parser)]
#[command(
    name = "interlace",
    version,
    about = "Exact Boros–Moll and interlacing log-concavity checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Worker threads for parallel sweeps (default: available cores).
    #[arg(long, env = "INTERLACE_WORKERS", global = true)]
    workers: Option<usize>,

    /// Largest degree accepted without complaint.
    #[arg(long, default_value_t = DEFAULT_M_CAP, global = true)]
    m_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Expand,
    Direct,
    Recurrence,
}

impl From<Method> for GenerationMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Expand => GenerationMethod::ExpandDefinition,
            Method::Direct => GenerationMethod::DirectSum,
            Method::Recurrence => GenerationMethod::Recurrence,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Unimodal,
    Logconcave,
    Interlacing,
    Theorem1,
    Strlog,
    Tl1,
    Recurrences,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one row of coefficients d_0(m), ..., d_m(m).
    Row {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Run verification sweeps over the triangle up to m_max.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        m_max: usize,
        /// Use strict comparisons where a property has both modes.
        #[arg(long)]
        strict: bool,
    },
    /// Check the sufficient interlacing conditions for a triangular recurrence.
    Criterion(CriterionArgs),
    /// Iterate the L operator and report how long log-concavity and interlacing survive.
    Explore {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        l_iterations: usize,
    },
}

#[derive(Debug, Args)]
struct CriterionArgs {
    /// pascal, stirling-cycle, stirling-second (bell), whitney or random.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    family: Option<String>,
    /// Family parameter (the m of whitney).
    #[arg(long)]
    param: Option<u64>,
    /// Recurrence description file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_STURM_UP_TO)]
    sturm_up_to: usize,
    /// Seed for `--family random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Usage and configuration problems; reported with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Rendered {
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(workers) = cli.workers {
        if workers == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    match run(&cli) {
        Ok(rendered) => {
            print!("{}", rendered.text);
            ExitCode::from(if rendered.passed { 0 } else { 1 })
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Rendered, UsageError> {
    let start = Instant::now();
    match &cli.command {
        Command::Row { m, method } => {
            check_cap(cli, *m, "--m")?;
            cmd_row(cli.format, *m, (*method).into(), start)
        }
        Command::Verify {
            property,
            m_max,
            strict,
        } => {
            if *m_max < 2 {
                return Err(UsageError(format!(
                    "--m-max must be at least 2, got {m_max}"
                )));
            }
            check_cap(cli, *m_max, "--m-max")?;
            cmd_verify(cli.format, *property, *m_max, *strict, start)
        }
        Command::Criterion(args) => {
            let rec = resolve_recurrence(args)?;
            cmd_criterion(cli.format, &rec, args, start)
        }
        Command::Explore {
            m_max,
            l_iterations,
        } => {
            if *l_iterations < 1 {
                return Err(UsageError("--l-iterations must be at least 1".into()));
            }
            check_cap(cli, *m_max, "--m-max")?;
            cmd_explore(cli.format, *m_max, *l_iterations, start)
        }
    }
}

fn check_cap(cli: &Cli, m: usize, flag: &str) -> Result<(), UsageError> {
    if m > cli.m_cap {
        return Err(UsageError(format!(
            "{flag} {m} exceeds the cap of {}; raise it with --m-cap",
            cli.m_cap
        )));
    }
    Ok(())
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn to_json<P: Serialize, R: Serialize>(record: &OutputRecord<P, R>) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("records serialize");
    s.push('\n');
    s
}

fn cmd_row(
    format: Format,
    m: usize,
    method: GenerationMethod,
    start: Instant,
) -> Result<Rendered, UsageError> {
    let row = generate_row_dyadic(m, method);
    let text = match format {
        Format::Json => to_json(&OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: "row".into(),
            parameters: RowParams {
                m,
                method: method.as_str().into(),
            },
            results: RowResults {
                degree: m,
                entries: row.iter().map(DyadicValue::from).collect(),
            },
            violations: Vec::new(),
            passed: true,
            timing_ms: elapsed_ms(start),
        }),
        Format::Csv => {
            let parts: Vec<String> = row.iter().map(|v| rational_str(&v.to_rational())).collect();
            format!("{}\n", parts.join(","))
        }
        Format::Pretty => {
            let mut out = format!(
                "P_{m}(x) coefficients via {method} (approx = decimal approximation, not exact)\n"
            );
            let _ = writeln!(out, "{:>5}  {:<40}  approx", "i", "exact d_i(m)");
            for (i, v) in row.iter().enumerate() {
                let exact = v.to_rational();
                let _ = writeln!(
                    out,
                    "{:>5}  {:<40}  ~{}",
                    i,
                    rational_str(&exact),
                    approx_decimal(&exact, 6)
                );
            }
            out
        }
    };
    Ok(Rendered { text, passed: true })
}

fn cross_check(tri: &CoefficientTriangle) -> CheckReport {
    let upto = CROSS_CHECK_ROWS.min(tri.max_degree());
    let parts: Vec<CheckReport> = (0..=upto)
        .into_par_iter()
        .map(|m| {
            let mut report = CheckReport::new("direct-formula cross-check", Strictness::NonStrict);
            let direct = row_direct(m);
            for (i, (a, b)) in tri
                .row(m)
                .entries()
                .iter()
                .zip(direct.entries())
                .enumerate()
            {
                report.record(a == b, || Violation {
                    m,
                    i: i as i64,
                    relation: "recurrence row = direct row",
                    lhs: a.clone(),
                    rhs: b.clone(),
                });
            }
            report
        })
        .collect();
    CheckReport::merged(
        "direct-formula cross-check",
        Strictness::NonStrict,
        interlace_core::DEFAULT_VIOLATION_CAP,
        parts,
    )
}

fn verify_reports(
    tri: &CoefficientTriangle,
    property: Property,
    strict: bool,
) -> Result<Vec<CheckReport>, UsageError> {
    let mode = Strictness::from_flag(strict);
    let wanted = |p: Property| property == p || property == Property::All;
    let mut reports = vec![cross_check(tri)];
    if wanted(Property::Recurrences) {
        for which in RecurrenceId::ALL {
            reports.push(verify_recurrence(tri, which)?);
        }
    }
    if wanted(Property::Unimodal) {
        reports.push(sweep_rows(
            tri,
            0,
            "unimodal-middle",
            Strictness::Strict,
            check_unimodal_middle,
        )?);
    }
    if wanted(Property::Logconcave) {
        reports.push(sweep_rows(tri, 0, "log-concave", mode, |r| {
            check_log_concave(r, strict)
        })?);
    }
    if wanted(Property::Interlacing) {
        reports.push(sweep_pairs(tri, 0, "interlacing", mode, |a, b| {
            check_interlacing_pair(a, b, strict)
        })?);
    }
    if wanted(Property::Theorem1) {
        reports.push(sweep_pairs(
            tri,
            2,
            "theorem1",
            Strictness::Strict,
            check_theorem1,
        )?);
    }
    if wanted(Property::Strlog) {
        reports.push(sweep_rows(
            tri,
            2,
            "strlog",
            Strictness::Strict,
            check_lemma_strlog,
        )?);
    }
    if wanted(Property::Tl1) {
        reports.push(sweep_pairs(
            tri,
            2,
            "tl1",
            Strictness::Strict,
            check_lemma_tl1,
        )?);
    }
    Ok(reports)
}

fn cmd_verify(
    format: Format,
    property: Property,
    m_max: usize,
    strict: bool,
    start: Instant,
) -> Result<Rendered, UsageError> {
    let tri = triangle_recurrence(m_max);
    let reports = verify_reports(&tri, property, strict)?;
    let passed = reports.iter().all(CheckReport::passed);
    let summaries: Vec<ReportSummary> = reports.iter().map(ReportSummary::from).collect();
    let violations = violations_of(&reports);
    let property_name = property
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let text = match format {
        Format::Json => to_json(&OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: "verify".into(),
            parameters: VerifyParams {
                property: property_name,
                m_max,
                strict,
            },
            results: VerifyResults { reports: summaries },
            violations,
            passed,
            timing_ms: elapsed_ms(start),
        }),
        Format::Csv => report_table_csv(&summaries) + &violations_csv(&violations),
        Format::Pretty => {
            let mut out = format!("verify {property_name} for 0 <= m <= {m_max}\n");
            out.push_str(&report_table_pretty(&summaries));
            out.push_str(&violations_pretty(&violations));
            let _ = writeln!(out, "overall: {}", if passed { "PASS" } else { "FAIL" });
            out
        }
    };
    Ok(Rendered { text, passed })
}

fn resolve_recurrence(args: &CriterionArgs) -> Result<TriangularRecurrence, UsageError> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        return parse_recurrence(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())));
    }
    let name = args
        .family
        .as_deref()
        .expect("clap enforces family or file");
    if name == "random" {
        return Ok(sample_cone_recurrence(args.seed));
    }
    let id = match (name, args.param) {
        ("whitney", Some(m)) => FamilyId::Whitney(m),
        (_, Some(_)) => return Err(UsageError(format!("family `{name}` takes no --param"))),
        (other, None) => other.parse::<FamilyId>()?,
    };
    Ok(family(id))
}

fn cmd_criterion(
    format: Format,
    rec: &TriangularRecurrence,
    args: &CriterionArgs,
    start: Instant,
) -> Result<Rendered, UsageError> {
    let report = criterion_report(rec, args.n_max, args.sturm_up_to)?;
    let passed = report.passed();
    let results = CriterionResults::from(&report);
    let violations = violations_of(report.reports());
    let text = match format {
        Format::Json => to_json(&OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: "criterion".into(),
            parameters: CriterionParams {
                recurrence: report.name.clone(),
                seed: report.seed,
                n_max: args.n_max,
                sturm_up_to: args.sturm_up_to,
            },
            results,
            violations,
            passed,
            timing_ms: elapsed_ms(start),
        }),
        Format::Csv => report_table_csv(&results.reports) + &violations_csv(&violations),
        Format::Pretty => {
            let mut out = format!("criterion for {} (n <= {})\n", report.name, args.n_max);
            if let Some(seed) = report.seed {
                let _ = writeln!(out, "seed: {seed}");
            }
            out.push_str(&report_table_pretty(&results.reports));
            out.push_str(&violations_pretty(&violations));
            let _ = writeln!(
                out,
                "real-rootedness verified by Sturm chains for n <= {}; Newton's inequality used as a necessary-condition proxy beyond",
                args.sturm_up_to
            );
            let _ = writeln!(
                out,
                "hypotheses: {}",
                if results.hypotheses_hold {
                    "hold"
                } else {
                    "FAIL"
                }
            );
            let _ = writeln!(
                out,
                "conclusion (non-strict interlacing on positive support): {}{}",
                if results.conclusion_holds {
                    "holds"
                } else {
                    "FAILS"
                },
                if results.strict_interlacing_observed {
                    " (strict observed)"
                } else {
                    ""
                }
            );
            out
        }
    };
    Ok(Rendered { text, passed })
}

fn cmd_explore(
    format: Format,
    m_max: usize,
    l_iterations: usize,
    start: Instant,
) -> Result<Rendered, UsageError> {
    let tri = triangle_recurrence(m_max);
    let k_fold: Vec<KFoldRecord> = tri
        .rows()
        .par_iter()
        .enumerate()
        .map(|(m, row)| KFoldRecord::new(m, &k_fold_log_concavity(row, l_iterations)))
        .collect();
    let depth: Vec<DepthRecord> = interlacing_depth(&tri, l_iterations)
        .iter()
        .map(DepthRecord::from)
        .collect();
    let text = match format {
        Format::Json => to_json(&OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: "explore".into(),
            parameters: ExploreParams {
                m_max,
                l_iterations,
            },
            results: ExploreResults {
                k_fold,
                interlacing_depth: depth,
            },
            violations: Vec::new(),
            passed: true,
            timing_ms: elapsed_ms(start),
        }),
        Format::Csv => {
            let mut out = String::from("m,k_fold_depth,failed_at\n");
            for r in &k_fold {
                let _ = writeln!(out, "{},{},{}", r.m, opt(r.depth), opt(r.failed_at));
            }
            out.push_str("\nj,pairs_checked,pairs_passed,pairs_skipped,first_failure,all_pass\n");
            for d in &depth {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    d.j,
                    d.pairs_checked,
                    d.pairs_passed,
                    d.pairs_skipped,
                    opt(d.first_failure),
                    d.all_pass
                );
            }
            out
        }
        Format::Pretty => {
            let mut out = format!(
                "iterated L operator on Boros–Moll rows, m <= {m_max}, up to {l_iterations} iterations (informational)\n\n"
            );
            let _ = writeln!(
                out,
                "{:>5}  {:>12}  {:>9}",
                "m", "k-fold depth", "failed at"
            );
            for r in &k_fold {
                let _ = writeln!(
                    out,
                    "{:>5}  {:>12}  {:>9}",
                    r.m,
                    opt(r.depth),
                    opt(r.failed_at)
                );
            }
            let _ = writeln!(
                out,
                "\n{:>3}  {:>8}  {:>8}  {:>8}  {:>13}",
                "j", "checked", "passed", "skipped", "first failure"
            );
            for d in &depth {
                let _ = writeln!(
                    out,
                    "{:>3}  {:>8}  {:>8}  {:>8}  {:>13}",
                    d.j,
                    d.pairs_checked,
                    d.pairs_passed,
                    d.pairs_skipped,
                    opt(d.first_failure)
                );
            }
            out
        }
    };
    Ok(Rendered { text, passed: true })
}
