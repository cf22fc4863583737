//! Machine-readable output records and their CSV / pretty renderings.

use num_bigint::BigInt;
use serde::Serialize;

use interlace_core::criterion::{CriterionReport, SturmResult};
use interlace_core::exact::format_rational;
use interlace_core::inequality::{DepthLevel, KFoldReport};
use interlace_core::{CheckReport, DyadicRational, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct OutputRecord<P: Serialize, R: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub parameters: P,
    pub results: R,
    pub violations: Vec<ViolationRecord>,
    pub passed: bool,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactValue {
    pub numerator: String,
    pub denominator: String,
}

impl From<&Rational> for ExactValue {
    fn from(value: &Rational) -> Self {
        Self {
            numerator: value.numer().to_string(),
            denominator: value.denom().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DyadicValue {
    pub numerator: String,
    pub exp2: String,
}

impl From<&DyadicRational> for DyadicValue {
    fn from(value: &DyadicRational) -> Self {
        Self {
            numerator: value.numerator().to_string(),
            exp2: value.exp2().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationRecord {
    pub property: String,
    pub m: usize,
    pub i: i64,
    pub relation: String,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportSummary {
    pub property: String,
    pub strictness: String,
    pub passed: bool,
    pub checked: usize,
    pub violation_count: usize,
}

impl From<&CheckReport> for ReportSummary {
    fn from(r: &CheckReport) -> Self {
        Self {
            property: r.property.clone(),
            strictness: r.strictness.as_str().to_string(),
            passed: r.passed(),
            checked: r.checked,
            violation_count: r.violation_count,
        }
    }
}

pub fn violations_of<'a>(
    reports: impl IntoIterator<Item = &'a CheckReport>,
) -> Vec<ViolationRecord> {
    reports
        .into_iter()
        .flat_map(|r| {
            r.violations.iter().map(move |v| ViolationRecord {
                property: r.property.clone(),
                m: v.m,
                i: v.i,
                relation: v.relation.to_string(),
                lhs: (&v.lhs).into(),
                rhs: (&v.rhs).into(),
            })
        })
        .collect()
}

// --- row ---------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct RowParams {
    pub m: usize,
    pub method: String,
}

#[derive(Debug, Serialize)]
pub struct RowResults {
    pub degree: usize,
    pub entries: Vec<DyadicValue>,
}

// --- verify ------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct VerifyParams {
    pub property: String,
    pub m_max: usize,
    pub strict: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyResults {
    pub reports: Vec<ReportSummary>,
}

// --- criterion ---------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct CriterionParams {
    pub recurrence: String,
    pub seed: Option<u64>,
    pub n_max: usize,
    pub sturm_up_to: usize,
}

#[derive(Debug, Serialize)]
pub struct SturmRecord {
    pub n: usize,
    pub degree: usize,
    pub real_root_count: usize,
    pub squarefree_degree: usize,
    pub all_real: bool,
}

#[derive(Debug, Serialize)]
pub struct CriterionResults {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub strict_interlacing_observed: bool,
    pub interlacing_pairs_skipped: usize,
    pub reports: Vec<ReportSummary>,
    pub sturm: Vec<SturmRecord>,
}

impl From<&CriterionReport> for CriterionResults {
    fn from(r: &CriterionReport) -> Self {
        Self {
            hypotheses_hold: r.hypotheses_hold(),
            conclusion_holds: r.conclusion_holds(),
            strict_interlacing_observed: r.strict_interlacing_observed,
            interlacing_pairs_skipped: r.interlacing_skipped,
            reports: r.reports().into_iter().map(ReportSummary::from).collect(),
            sturm: r.sturm.iter().enumerate().map(sturm_record).collect(),
        }
    }
}

fn sturm_record((n, s): (usize, &SturmResult)) -> SturmRecord {
    SturmRecord {
        n,
        degree: s.degree,
        real_root_count: s.real_root_count,
        squarefree_degree: s.squarefree_degree,
        all_real: s.all_real,
    }
}

// --- explore -----------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ExploreParams {
    pub m_max: usize,
    pub l_iterations: usize,
}

#[derive(Debug, Serialize)]
pub struct KFoldRecord {
    pub m: usize,
    pub depth: Option<usize>,
    pub failed_at: Option<usize>,
}

impl KFoldRecord {
    pub fn new(m: usize, r: &KFoldReport) -> Self {
        Self {
            m,
            depth: r.depth,
            failed_at: r.failed_at,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DepthRecord {
    pub j: usize,
    pub pairs_checked: usize,
    pub pairs_passed: usize,
    pub pairs_skipped: usize,
    pub first_failure: Option<usize>,
    pub all_pass: bool,
}

impl From<&DepthLevel> for DepthRecord {
    fn from(d: &DepthLevel) -> Self {
        Self {
            j: d.j,
            pairs_checked: d.pairs_checked,
            pairs_passed: d.pairs_passed,
            pairs_skipped: d.pairs_skipped,
            first_failure: d.first_failure,
            all_pass: d.all_pass(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExploreResults {
    pub k_fold: Vec<KFoldRecord>,
    pub interlacing_depth: Vec<DepthRecord>,
}

// --- rendering helpers -------------------------------------------------

pub fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn report_table_csv(reports: &[ReportSummary]) -> String {
    let mut out = String::from("property,strictness,passed,checked,violations\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.property, r.strictness, r.passed, r.checked, r.violation_count
        ));
    }
    out
}

pub fn violations_csv(violations: &[ViolationRecord]) -> String {
    if violations.is_empty() {
        return String::new();
    }
    let mut out = String::from("\nproperty,m,i,relation,lhs,rhs\n");
    for v in violations {
        out.push_str(&format!(
            "{},{},{},\"{}\",{},{}\n",
            v.property,
            v.m,
            v.i,
            v.relation,
            exact_str(&v.lhs),
            exact_str(&v.rhs)
        ));
    }
    out
}

fn exact_str(v: &ExactValue) -> String {
    if v.denominator == "1" {
        v.numerator.clone()
    } else {
        format!("{}/{}", v.numerator, v.denominator)
    }
}

pub fn report_table_pretty(reports: &[ReportSummary]) -> String {
    let width = reports
        .iter()
        .map(|r| r.property.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = format!(
        "{:<width$}  {:<10}  {:<6}  {:>9}  {:>10}\n",
        "property", "mode", "status", "checked", "violations"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<width$}  {:<10}  {:<6}  {:>9}  {:>10}\n",
            r.property,
            r.strictness,
            if r.passed { "PASS" } else { "FAIL" },
            r.checked,
            r.violation_count
        ));
    }
    out
}

pub fn violations_pretty(violations: &[ViolationRecord]) -> String {
    let mut out = String::new();
    for v in violations {
        out.push_str(&format!(
            "  {} at m={} i={}: {} (lhs = {}, rhs = {})\n",
            v.property,
            v.m,
            v.i,
            v.relation,
            exact_str(&v.lhs),
            exact_str(&v.rhs)
        ));
    }
    out
}

/// Decimal rendering with `digits` significant digits, rounded half up,
/// computed exactly so that huge values do not overflow.
pub fn approx_decimal(value: &Rational, digits: u32) -> String {
    use num_traits::{Signed, Zero};
    if value.is_zero() {
        return "0".into();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let num = value.numer().abs();
    let den = value.denom().clone();
    let ten = BigInt::from(10);
    // Decimal exponent estimate, corrected below.
    let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
    let scaled = |exp: i64| -> BigInt {
        let shift = digits as i64 - 1 - exp;
        if shift >= 0 {
            (&num * ten.pow(shift as u32) * 2 + &den) / (&den * 2)
        } else {
            (&num * 2 + &den * ten.pow((-shift) as u32)) / (&den * ten.pow((-shift) as u32) * 2)
        }
    };
    let lower = ten.pow(digits - 1);
    let upper = ten.pow(digits);
    let mut mantissa = scaled(exp);
    for _ in 0..4 {
        if mantissa >= upper {
            exp += 1;
        } else if mantissa < lower {
            exp -= 1;
        } else {
            break;
        }
        mantissa = scaled(exp);
    }
    let m = mantissa.to_string();
    let (head, tail) = m.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

pub fn rational_str(v: &Rational) -> String {
    format_rational(v)
}
