//! Boros–Moll coefficients `d_i(m)`.
//!
//! Three generators are provided and must agree exactly:
//!
//! * [`expand_pm`] expands the defining double sum over `(j, k)` of
//!   `(x+1)^j (x-1)^k` terms;
//! * [`row_direct`] evaluates the single-sum coefficient formula;
//! * [`triangle_recurrence`] runs the first Kauers–Paule recurrence row by row.
//!
//! Every `d_i(m)` is dyadic with `2^{2m} d_i(m)` an integer, so the hot paths
//! work on those scaled integers and only convert at the boundary.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, central_binomial, int, CoefficientRow, CoefficientTriangle, DyadicRational, Rational,
};
use crate::report::{CheckReport, Strictness, Violation};

/// Rows at least this wide are computed with a parallel inner loop.
const PARALLEL_ROW_WIDTH: usize = 96;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenerationMethod {
    ExpandDefinition,
    DirectSum,
    Recurrence,
}

impl GenerationMethod {
    pub const ALL: [GenerationMethod; 3] = [
        GenerationMethod::ExpandDefinition,
        GenerationMethod::DirectSum,
        GenerationMethod::Recurrence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GenerationMethod::ExpandDefinition => "expand",
            GenerationMethod::DirectSum => "direct",
            GenerationMethod::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for GenerationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenerationMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "expand" => Ok(GenerationMethod::ExpandDefinition),
            "direct" => Ok(GenerationMethod::DirectSum),
            "recurrence" => Ok(GenerationMethod::Recurrence),
            other => Err(format!(
                "unknown method `{other}` (expected expand, direct or recurrence)"
            )),
        }
    }
}

/// The four Kauers–Paule identities, in the order they are usually listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecurrenceId {
    /// `d_i(m+1)` from `d_{i-1}(m)` and `d_i(m)`.
    R1,
    /// `d_i(m+1)` from `d_i(m)` and `d_{i+1}(m)`.
    R2,
    /// `d_i(m+2)` from `d_i(m+1)` and `d_i(m)`.
    R3,
    /// Three-term relation inside a single row.
    R4,
}

impl RecurrenceId {
    pub const ALL: [RecurrenceId; 4] = [
        RecurrenceId::R1,
        RecurrenceId::R2,
        RecurrenceId::R3,
        RecurrenceId::R4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RecurrenceId::R1 => "recurrence-r1",
            RecurrenceId::R2 => "recurrence-r2",
            RecurrenceId::R3 => "recurrence-r3",
            RecurrenceId::R4 => "recurrence-r4",
        }
    }

    /// Rows needed for at least one instance of the identity.
    pub fn min_rows(self) -> usize {
        match self {
            RecurrenceId::R1 | RecurrenceId::R2 => 2,
            RecurrenceId::R3 => 3,
            RecurrenceId::R4 => 1,
        }
    }
}

fn dyadic_row(scaled: Vec<BigInt>, exp2: u64) -> Vec<DyadicRational> {
    scaled
        .into_iter()
        .map(|v| DyadicRational::new(v, exp2))
        .collect()
}

fn to_row(values: &[DyadicRational]) -> CoefficientRow {
    let entries = values.iter().map(DyadicRational::to_rational).collect();
    CoefficientRow::from_entries(entries).expect("generated rows are non-empty")
}

/// `x^t` coefficients of `(x+1)^j (x-1)^k`.
fn expand_factor(j: u64, k: u64) -> Vec<BigInt> {
    let plus: Vec<BigInt> = (0..=j).map(|a| binomial(j, a as i64)).collect();
    let minus: Vec<BigInt> = (0..=k)
        .map(|b| {
            let c = binomial(k, b as i64);
            if (k - b) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut out = vec![BigInt::zero(); (j + k + 1) as usize];
    for (a, p) in plus.iter().enumerate() {
        for (b, q) in minus.iter().enumerate() {
            out[a + b] += p * q;
        }
    }
    out
}

/// Coefficients of `P_m(x)` obtained by expanding the defining double sum
/// term by term. Quartic in `m`; intended as an oracle for small degrees.
pub fn expand_pm(m: usize) -> CoefficientRow {
    to_row(&expand_pm_dyadic(m))
}

pub fn expand_pm_dyadic(m: usize) -> Vec<DyadicRational> {
    let mm = m as u64;
    // Every term has denominator 2^{3(j+k)} with j + k <= m.
    let mut acc = vec![BigInt::zero(); m + 1];
    for j in 0..=mm {
        for k in 0..=(mm - j) {
            let weight = binomial(2 * mm + 1, 2 * j as i64)
                * binomial(mm - j, k as i64)
                * binomial(2 * (k + j), (k + j) as i64);
            let weight = weight << (3 * (mm - j - k));
            for (t, c) in expand_factor(j, k).into_iter().enumerate() {
                acc[t] += &weight * c;
            }
        }
    }
    dyadic_row(acc, 3 * mm)
}

/// `2^{2m} d_i(m)` for `i = 0..=m`, from the single-sum formula.
fn scaled_direct(m: usize) -> Vec<BigInt> {
    let mm = m as u64;
    let weights: Vec<BigInt> = (0..=mm)
        .map(|k| (central_binomial(mm - k) * binomial(mm + k, k as i64)) << k)
        .collect();
    let entry = |i: usize| -> BigInt {
        (i..=m)
            .map(|k| &weights[k] * binomial(k as u64, i as i64))
            .sum()
    };
    if m + 1 >= PARALLEL_ROW_WIDTH {
        (0..=m).into_par_iter().map(entry).collect()
    } else {
        (0..=m).map(entry).collect()
    }
}

/// Row `m` from the single-sum coefficient formula.
pub fn row_direct(m: usize) -> CoefficientRow {
    to_row(&row_direct_dyadic(m))
}

pub fn row_direct_dyadic(m: usize) -> Vec<DyadicRational> {
    dyadic_row(scaled_direct(m), 2 * m as u64)
}

/// Scaled rows `2^{2m} d_i(m)` for `m = 0..=m_max` via the first recurrence:
/// `(m+1) D_i(m+1) = 4(m+i) D_{i-1}(m) + 2(4m+2i+3) D_i(m)`.
fn scaled_triangle(m_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m_max + 1);
    rows.push(vec![BigInt::from(1)]);
    for m in 0..m_max {
        let prev = &rows[m];
        let step = |i: usize| -> BigInt {
            let mut num = BigInt::zero();
            if i >= 1 {
                num += &prev[i - 1] * (4 * (m + i));
            }
            if i <= m {
                num += &prev[i] * (2 * (4 * m + 2 * i + 3));
            }
            let (q, r) = num.div_rem(&BigInt::from(m + 1));
            debug_assert!(r.is_zero(), "non-integral scaled entry at m={m}, i={i}");
            q
        };
        let next: Vec<BigInt> = if m + 2 >= PARALLEL_ROW_WIDTH {
            (0..=m + 1).into_par_iter().map(step).collect()
        } else {
            (0..=m + 1).map(step).collect()
        };
        rows.push(next);
    }
    rows
}

/// Rows `0..=m_max` as dyadic values, generated by the first recurrence.
pub fn triangle_recurrence_dyadic(m_max: usize) -> Vec<Vec<DyadicRational>> {
    scaled_triangle(m_max)
        .into_iter()
        .enumerate()
        .map(|(m, row)| dyadic_row(row, 2 * m as u64))
        .collect()
}

/// The Boros–Moll triangle for `m = 0..=m_max`, built by recurrence.
/// Cost is `O(m_max^2)` big-integer operations.
pub fn triangle_recurrence(m_max: usize) -> CoefficientTriangle {
    let rows = triangle_recurrence_dyadic(m_max)
        .iter()
        .map(|row| to_row(row))
        .collect();
    CoefficientTriangle::new(rows).expect("recurrence rows are contiguous")
}

/// A single row by the chosen method.
pub fn generate_row(m: usize, method: GenerationMethod) -> CoefficientRow {
    to_row(&generate_row_dyadic(m, method))
}

pub fn generate_row_dyadic(m: usize, method: GenerationMethod) -> Vec<DyadicRational> {
    match method {
        GenerationMethod::ExpandDefinition => expand_pm_dyadic(m),
        GenerationMethod::DirectSum => row_direct_dyadic(m),
        GenerationMethod::Recurrence => triangle_recurrence_dyadic(m)
            .pop()
            .expect("triangle has at least one row"),
    }
}

fn q(v: usize) -> Rational {
    int(v as i64)
}

fn qi(v: i64) -> Rational {
    int(v)
}

/// Checks one of the four identities at every admissible index, with
/// out-of-range entries read as zero. Each identity is cleared of
/// denominators first so the comparison is a plain equality.
pub fn verify_recurrence(tri: &CoefficientTriangle, which: RecurrenceId) -> Result<CheckReport> {
    let available = tri.rows().len();
    if available < which.min_rows() {
        return Err(Error::TooFewRows {
            check: which.as_str(),
            needed: which.min_rows(),
            available,
        });
    }
    let m_max = tri.max_degree();
    let d = |m: usize, i: i64| tri.entry(m, i);

    let per_m = |m: usize| -> CheckReport {
        let mut report = CheckReport::new(which.as_str(), Strictness::NonStrict);
        let mi = m as i64;
        match which {
            RecurrenceId::R1 => {
                for i in 0..=mi + 1 {
                    let lhs = qi(2 * (mi + 1)) * d(m + 1, i);
                    let rhs = qi(2 * (mi + i)) * d(m, i - 1) + qi(4 * mi + 2 * i + 3) * d(m, i);
                    report.record(lhs == rhs, || violation(m, i, "d(m+1) from d(m)", lhs, rhs));
                }
            }
            RecurrenceId::R2 => {
                for i in 0..=mi {
                    let lhs = qi(2 * (mi + 1) * (mi + 1 - i)) * d(m + 1, i);
                    let rhs = qi((4 * mi - 2 * i + 3) * (mi + i + 1)) * d(m, i)
                        - qi(2 * i * (i + 1)) * d(m, i + 1);
                    report.record(lhs == rhs, || {
                        violation(m, i, "d(m+1) from d(m), descending", lhs, rhs)
                    });
                }
            }
            RecurrenceId::R3 => {
                for i in 0..=mi + 1 {
                    let lhs = qi(4 * (mi + 2 - i) * (mi + 1) * (mi + 2)) * d(m + 2, i);
                    let rhs = qi(2 * (mi + 1) * (-4 * i * i + 8 * mi * mi + 24 * mi + 19))
                        * d(m + 1, i)
                        - qi((mi + i + 1) * (4 * mi + 3) * (4 * mi + 5)) * d(m, i);
                    report.record(lhs == rhs, || {
                        violation(m, i, "d(m+2) from d(m+1), d(m)", lhs, rhs)
                    });
                }
            }
            RecurrenceId::R4 => {
                for i in 0..=mi + 1 {
                    let lhs = qi((mi + 2 - i) * (mi + i - 1)) * d(m, i - 2)
                        - qi((i - 1) * (2 * mi + 1)) * d(m, i - 1)
                        + qi(i * (i - 1)) * d(m, i);
                    let rhs = Rational::zero();
                    report.record(lhs == rhs, || {
                        violation(m, i, "in-row three-term", lhs, rhs)
                    });
                }
            }
        }
        report
    };

    let last_m = match which {
        RecurrenceId::R1 | RecurrenceId::R2 => m_max - 1,
        RecurrenceId::R3 => m_max - 2,
        RecurrenceId::R4 => m_max,
    };
    let parts: Vec<CheckReport> = (0..=last_m).into_par_iter().map(per_m).collect();
    Ok(CheckReport::merged(
        which.as_str(),
        Strictness::NonStrict,
        crate::report::DEFAULT_VIOLATION_CAP,
        parts,
    ))
}

fn violation(m: usize, i: i64, relation: &'static str, lhs: Rational, rhs: Rational) -> Violation {
    Violation {
        m,
        i,
        relation,
        lhs,
        rhs,
    }
}

/// `(d_n(n+1), d_{n+1}(n+1), d_n(n+2))` from their closed forms.
pub fn closed_forms(n: usize) -> (Rational, Rational, Rational) {
    let nn = n as u64;
    let two_pow = |e: u64| Rational::from_integer(BigInt::from(1) << e);
    let c1 = Rational::from_integer(central_binomial(nn + 1));
    let c2 = Rational::from_integer(central_binomial(nn + 2));

    let below_top = q(2 * n + 3) * &c1 / two_pow(nn + 2);
    let top = &c1 / two_pow(nn + 1);
    let next = q((n + 1) * (4 * n * n + 18 * n + 21)) * c2 / (two_pow(nn + 4) * q(2 * n + 3));
    (below_top, top, next)
}

/// `d_n(n+1) / d_{n+1}(n+1) = (2n+3)/2`, checked against the closed forms.
pub fn boundary_ratio(n: usize) -> Rational {
    let ratio = Rational::new(BigInt::from(2 * n + 3), BigInt::from(2));
    let (below_top, top, _) = closed_forms(n);
    assert_eq!(
        below_top / top,
        ratio,
        "boundary ratio identity failed at n={n}"
    );
    ratio
}

/// `d_m(m) = 2^{-m} C(2m, m)`.
pub fn leading_coefficient(m: usize) -> Rational {
    Rational::new(central_binomial(m as u64), BigInt::from(1) << m)
}
