use std::fmt;

use num_traits::{Signed, Zero};

use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// Coefficients `a_0, ..., a_m` of a degree-`m` polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientRow {
    degree: usize,
    entries: Vec<Rational>,
}

/// Validates `entries` against `degree` and builds a row.
pub fn make_row(degree: usize, entries: Vec<Rational>) -> Result<CoefficientRow> {
    CoefficientRow::new(degree, entries)
}

impl CoefficientRow {
    pub fn new(degree: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyRow);
        }
        if entries.len() != degree + 1 {
            return Err(Error::LengthMismatch {
                degree,
                expected: degree + 1,
                actual: entries.len(),
            });
        }
        // BigRational arithmetic keeps values reduced; re-reducing here
        // covers values assembled through `new_raw`.
        let entries = entries
            .into_iter()
            .map(|v| Rational::new(v.numer().clone(), v.denom().clone()))
            .collect();
        Ok(Self { degree, entries })
    }

    /// Row whose degree is implied by the number of entries.
    pub fn from_entries(entries: Vec<Rational>) -> Result<Self> {
        let degree = entries.len().checked_sub(1).ok_or(Error::EmptyRow)?;
        Self::new(degree, entries)
    }

    /// Convenience constructor from integers.
    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::from_entries(values.iter().map(|&v| super::int(v)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i`, or zero when `i` lies outside `0..=degree`.
    pub fn get(&self, i: i64) -> Rational {
        if i < 0 {
            return Rational::zero();
        }
        self.entries
            .get(i as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Borrowing variant of [`get`](Self::get) for in-range indices.
    pub fn at(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    /// Index of the first entry that is not strictly positive.
    pub fn first_non_positive(&self) -> Option<usize> {
        self.entries.iter().position(|v| !v.is_positive())
    }

    pub fn is_positive(&self) -> bool {
        self.first_non_positive().is_none()
    }

    /// Maximal contiguous window of strictly positive entries, provided every
    /// entry outside it is zero. Returns `(offset, window)`.
    pub fn positive_support(&self) -> Option<(usize, CoefficientRow)> {
        let start = self.entries.iter().position(|v| v.is_positive())?;
        let end = self.entries.iter().rposition(|v| v.is_positive())?;
        let inside_ok = self.entries[start..=end].iter().all(|v| v.is_positive());
        let outside_ok = self.entries[..start]
            .iter()
            .chain(&self.entries[end + 1..])
            .all(|v| v.is_zero());
        if !(inside_ok && outside_ok) {
            return None;
        }
        let window = self.entries[start..=end].to_vec();
        Some((start, CoefficientRow::from_entries(window).ok()?))
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// Replaces entry `i`; used for fault injection in tests and sweeps.
    pub fn with_entry(&self, i: usize, value: Rational) -> Self {
        let mut entries = self.entries.clone();
        entries[i] = value;
        Self {
            degree: self.degree,
            entries,
        }
    }
}

impl fmt::Display for CoefficientRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Rows `0..=m_max`, row `m` holding `m + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTriangle {
    rows: Vec<CoefficientRow>,
}

impl CoefficientTriangle {
    pub fn new(rows: Vec<CoefficientRow>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyRow);
        }
        for (index, row) in rows.iter().enumerate() {
            if row.degree() != index {
                return Err(Error::NonContiguousTriangle {
                    index,
                    degree: row.degree(),
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[CoefficientRow] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> &CoefficientRow {
        &self.rows[m]
    }

    /// Largest degree present.
    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T(m, i)` with the zero convention outside the triangle's row.
    pub fn entry(&self, m: usize, i: i64) -> Rational {
        self.rows[m].get(i)
    }

    pub fn truncated(&self, m_max: usize) -> Self {
        Self {
            rows: self.rows[..=m_max.min(self.max_degree())].to_vec(),
        }
    }

    /// Copy of the triangle with a single entry replaced.
    pub fn with_entry(&self, m: usize, i: usize, value: Rational) -> Self {
        let mut rows = self.rows.clone();
        rows[m] = rows[m].with_entry(i, value);
        Self { rows }
    }

    pub fn into_rows(self) -> Vec<CoefficientRow> {
        self.rows
    }
}
