//! Outcome records shared by every verification sweep.

use std::cmp::Ordering;
use std::fmt;

use crate::exact::{format_rational, rational_cmp, Rational};

/// Violations kept per report unless a caller asks for a different cap.
pub const DEFAULT_VIOLATION_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    Strict,
    NonStrict,
}

impl Strictness {
    pub fn from_flag(strict: bool) -> Self {
        if strict {
            Strictness::Strict
        } else {
            Strictness::NonStrict
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Strictness::Strict => "strict",
            Strictness::NonStrict => "non-strict",
        }
    }

    /// Whether `lhs < rhs` (strict) or `lhs <= rhs` holds.
    pub fn less(self, lhs: &Rational, rhs: &Rational) -> bool {
        match rational_cmp(lhs, rhs) {
            Ordering::Less => true,
            Ordering::Equal => self == Strictness::NonStrict,
            Ordering::Greater => false,
        }
    }

    /// Whether an ordering `lhs.cmp(rhs)` satisfies `lhs < rhs` (or `<=`).
    pub fn accepts_less(self, ord: Ordering) -> bool {
        ord == Ordering::Less || (ord == Ordering::Equal && self == Strictness::NonStrict)
    }

    /// Whether an ordering `lhs.cmp(rhs)` satisfies `lhs > rhs` (or `>=`).
    pub fn accepts_greater(self, ord: Ordering) -> bool {
        self.accepts_less(ord.reverse())
    }

    /// Whether `lhs > rhs` (strict) or `lhs >= rhs` holds.
    pub fn greater(self, lhs: &Rational, rhs: &Rational) -> bool {
        self.less(rhs, lhs)
    }
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failed instance: where it happened and both sides of the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub m: usize,
    pub i: i64,
    pub relation: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} i={} [{}] lhs={} rhs={}",
            self.m,
            self.i,
            self.relation,
            format_rational(&self.lhs),
            format_rational(&self.rhs)
        )
    }
}

/// Result of a sweep. `passed()` is true iff no instance failed; the stored
/// violation list is truncated at `cap` but `violation_count` is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub property: String,
    pub strictness: Strictness,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    pub cap: usize,
}

impl CheckReport {
    pub fn new(property: impl Into<String>, strictness: Strictness) -> Self {
        Self::with_cap(property, strictness, DEFAULT_VIOLATION_CAP)
    }

    pub fn with_cap(property: impl Into<String>, strictness: Strictness, cap: usize) -> Self {
        Self {
            property: property.into(),
            strictness,
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
            cap: cap.max(1),
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Counts one checked instance; builds and stores the violation if `ok`
    /// is false.
    pub fn record(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checked += 1;
        if !ok {
            self.push(violation());
        }
    }

    pub fn push(&mut self, violation: Violation) {
        self.violation_count += 1;
        if self.violations.len() < self.cap {
            self.violations.push(violation);
        }
    }

    /// Appends another report's results in order, respecting this cap.
    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        let room = self.cap.saturating_sub(self.violations.len());
        self.violations
            .extend(other.violations.into_iter().take(room));
    }

    /// Merges partial reports in iteration order.
    pub fn merged(
        property: impl Into<String>,
        strictness: Strictness,
        cap: usize,
        parts: impl IntoIterator<Item = CheckReport>,
    ) -> Self {
        let mut report = Self::with_cap(property, strictness, cap);
        for part in parts {
            report.merge(part);
        }
        report
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}): {}, {} checked, {} violations",
            self.property,
            self.strictness,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.violation_count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn violation(i: i64) -> Violation {
        Violation {
            m: 0,
            i,
            relation: "x",
            lhs: int(1),
            rhs: int(0),
        }
    }

    #[test]
    fn cap_truncates_list_not_count() {
        let mut report = CheckReport::with_cap("p", Strictness::Strict, 2);
        for i in 0..5 {
            report.record(false, || violation(i));
        }
        report.record(true, || unreachable!());
        assert_eq!(report.checked, 6);
        assert_eq!(report.violation_count, 5);
        assert_eq!(report.violations.len(), 2);
        assert!(!report.passed());
    }

    #[test]
    fn merge_keeps_order() {
        let mut a = CheckReport::with_cap("p", Strictness::Strict, 3);
        a.record(false, || violation(0));
        let mut b = CheckReport::with_cap("p", Strictness::Strict, 3);
        b.record(false, || violation(1));
        b.record(false, || violation(2));
        b.record(false, || violation(3));
        a.merge(b);
        let idx: Vec<i64> = a.violations.iter().map(|v| v.i).collect();
        assert_eq!(idx, vec![0, 1, 2]);
        assert_eq!(a.violation_count, 4);
    }

    #[test]
    fn strictness_comparisons() {
        assert!(Strictness::NonStrict.less(&int(1), &int(1)));
        assert!(!Strictness::Strict.less(&int(1), &int(1)));
        assert!(Strictness::Strict.greater(&int(2), &int(1)));
    }
}
