//! Triangular recurrences `T(n,k) = f(n,k) T(n-1,k) + g(n,k) T(n-1,k-1)` and
//! the sufficient conditions on `f` and `g` under which real-rooted rows are
//! interlacing log-concave.

mod expr;
mod sturm;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{int, ratio, CoefficientRow, CoefficientTriangle, Rational};
use crate::inequality::{check_interlacing_pair, check_newton};
use crate::report::{CheckReport, Strictness, Violation, DEFAULT_VIOLATION_CAP};

pub use expr::{parse_expr, parse_recurrence, Expr};
pub use sturm::{distinct_real_roots, from_roots, sturm_real_roots, SturmResult};

/// Default bound on rows checked with Sturm chains.
pub const DEFAULT_STURM_UP_TO: usize = 15;

/// Coefficient function `(n, k) -> value`; `None` where undefined.
pub type CoefficientFn = Arc<dyn Fn(u64, u64) -> Option<Rational> + Send + Sync>;

#[derive(Clone)]
pub struct TriangularRecurrence {
    name: String,
    f: CoefficientFn,
    g: CoefficientFn,
    base: CoefficientRow,
    support_start: usize,
    seed: Option<u64>,
}

impl fmt::Debug for TriangularRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TriangularRecurrence")
            .field("name", &self.name)
            .field("base", &self.base)
            .field("support_start", &self.support_start)
            .field("seed", &self.seed)
            .finish_non_exhaustive()
    }
}

impl TriangularRecurrence {
    pub fn new<F, G>(name: impl Into<String>, f: F, g: G) -> Self
    where
        F: Fn(u64, u64) -> Option<Rational> + Send + Sync + 'static,
        G: Fn(u64, u64) -> Option<Rational> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            f: Arc::new(f),
            g: Arc::new(g),
            base: CoefficientRow::from_integers(&[1]).expect("non-empty"),
            support_start: 0,
            seed: None,
        }
    }

    /// First column that may be non-zero in rows `n >= 1`.
    pub fn with_support_start(mut self, support_start: usize) -> Self {
        self.support_start = support_start;
        self
    }

    /// Row 0 of the triangle. Only degree-0 bases are meaningful.
    pub fn with_base(mut self, base: CoefficientRow) -> Self {
        self.base = base;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support_start(&self) -> usize {
        self.support_start
    }

    pub fn base(&self) -> &CoefficientRow {
        &self.base
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn f(&self, n: u64, k: u64) -> Option<Rational> {
        (self.f)(n, k)
    }

    pub fn g(&self, n: u64, k: u64) -> Option<Rational> {
        (self.g)(n, k)
    }

    fn f_at(&self, n: u64, k: u64) -> Result<Rational> {
        self.f(n, k).ok_or(Error::Undefined {
            function: "f",
            n,
            k,
        })
    }

    fn g_at(&self, n: u64, k: u64) -> Result<Rational> {
        self.g(n, k).ok_or(Error::Undefined {
            function: "g",
            n,
            k,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `(x+1)^n`.
    Pascal,
    /// Coefficients of the rising factorial `x(x+1)...(x+n-1)`.
    StirlingCycle,
    /// Bell polynomials.
    StirlingSecond,
    /// Whitney polynomials with parameter `m`.
    Whitney(u64),
}

impl FamilyId {
    pub fn slug(self) -> String {
        match self {
            FamilyId::Pascal => "pascal".into(),
            FamilyId::StirlingCycle => "stirling-cycle".into(),
            FamilyId::StirlingSecond => "stirling-second".into(),
            FamilyId::Whitney(m) => format!("whitney-{m}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = String;

    /// Accepts `pascal`, `stirling-cycle`, `stirling-second` (or `bell`) and
    /// `whitney` / `whitney-<m>`; a bare `whitney` means `m = 1`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pascal" => Ok(FamilyId::Pascal),
            "stirling-cycle" | "stirling1" => Ok(FamilyId::StirlingCycle),
            "stirling-second" | "stirling2" | "bell" => Ok(FamilyId::StirlingSecond),
            "whitney" => Ok(FamilyId::Whitney(1)),
            other => other
                .strip_prefix("whitney-")
                .and_then(|m| m.parse().ok())
                .map(FamilyId::Whitney)
                .ok_or_else(|| format!("unknown family `{other}`")),
        }
    }
}

/// Built-in recurrences; every one has `g = 1`.
pub fn family(id: FamilyId) -> TriangularRecurrence {
    let one = |_: u64, _: u64| Some(int(1));
    match id {
        FamilyId::Pascal => TriangularRecurrence::new(id.slug(), one, one),
        FamilyId::StirlingCycle => {
            TriangularRecurrence::new(id.slug(), |n, _| Some(int(n as i64 - 1)), one)
                .with_support_start(1)
        }
        FamilyId::StirlingSecond => {
            TriangularRecurrence::new(id.slug(), |_, k| Some(int(k as i64)), one)
                .with_support_start(1)
        }
        FamilyId::Whitney(m) => {
            TriangularRecurrence::new(id.slug(), move |_, k| Some(int(1 + (m * k) as i64)), one)
                .with_support_start(1)
        }
    }
}

/// Rows `0..=n_max`. `f` is only evaluated where `T(n-1,k)` can be non-zero
/// (`k <= n-1`) and `g` where `T(n-1,k-1)` can be (`k >= 1`).
pub fn build_triangle(rec: &TriangularRecurrence, n_max: usize) -> Result<CoefficientTriangle> {
    if rec.base.degree() != 0 {
        return Err(Error::InvalidParameter(format!(
            "base row must have degree 0, got {}",
            rec.base.degree()
        )));
    }
    let mut rows = vec![rec.base.clone()];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k < rec.support_start {
                next.push(Rational::zero());
                continue;
            }
            let mut value = Rational::zero();
            if k < n {
                let above = prev.at(k);
                if !above.is_zero() {
                    value += rec.f_at(n as u64, k as u64)? * above;
                }
            }
            if k >= 1 {
                let diag = prev.at(k - 1);
                if !diag.is_zero() {
                    value += rec.g_at(n as u64, k as u64)? * diag;
                }
            }
            next.push(value);
        }
        rows.push(CoefficientRow::new(n, next)?);
    }
    CoefficientTriangle::new(rows)
}

fn violation(
    n: usize,
    k: usize,
    relation: &'static str,
    lhs: Rational,
    rhs: Rational,
) -> Violation {
    Violation {
        m: n,
        i: k as i64,
        relation,
        lhs,
        rhs,
    }
}

/// Condition on `f`: for `1 <= n <= n_max-1`, `0 <= k <= n-1`,
/// `(n-k)k / ((n-k+1)(k+1)) f(n+1,k+1) <= f(n+1,k) <= f(n+1,k+1)`.
pub fn check_gen1(rec: &TriangularRecurrence, n_max: usize) -> Result<CheckReport> {
    let parts = (1..n_max)
        .into_par_iter()
        .map(|n| {
            let mut report = CheckReport::new("condition-f", Strictness::NonStrict);
            let nn = n as u64;
            for k in 0..n {
                let kk = k as u64;
                let lower = rec.f_at(nn + 1, kk)?;
                let upper = rec.f_at(nn + 1, kk + 1)?;
                let prefactor = ratio(((n - k) * k) as i64, ((n - k + 1) * (k + 1)) as i64);
                let scaled = prefactor * &upper;
                report.record(scaled <= lower, || {
                    violation(
                        n,
                        k,
                        "weighted f(n+1,k+1) <= f(n+1,k)",
                        scaled,
                        lower.clone(),
                    )
                });
                report.record(lower <= upper, || {
                    violation(n, k, "f(n+1,k) <= f(n+1,k+1)", lower.clone(), upper.clone())
                });
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::merged(
        "condition-f",
        Strictness::NonStrict,
        DEFAULT_VIOLATION_CAP,
        parts,
    ))
}

/// Condition on `g`: `g(n+1,k+1) <= g(n+1,k)` for `0 <= k <= n` and
/// `g(n+1,k) <= (n-k+1)(k+1) / ((n-k)k) g(n+1,k+1)` for `1 <= k <= n-1`.
pub fn check_gen2(rec: &TriangularRecurrence, n_max: usize) -> Result<CheckReport> {
    let parts = (1..n_max)
        .into_par_iter()
        .map(|n| {
            let mut report = CheckReport::new("condition-g", Strictness::NonStrict);
            let nn = n as u64;
            for k in 0..=n {
                let kk = k as u64;
                let here = rec.g_at(nn + 1, kk)?;
                let next = rec.g_at(nn + 1, kk + 1)?;
                report.record(next <= here, || {
                    violation(n, k, "g(n+1,k+1) <= g(n+1,k)", next.clone(), here.clone())
                });
                if (1..n).contains(&k) {
                    let factor = ratio(((n - k + 1) * (k + 1)) as i64, ((n - k) * k) as i64);
                    let bound = factor * &next;
                    report.record(here <= bound, || {
                        violation(n, k, "g(n+1,k) <= weighted g(n+1,k+1)", here.clone(), bound)
                    });
                }
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::merged(
        "condition-g",
        Strictness::NonStrict,
        DEFAULT_VIOLATION_CAP,
        parts,
    ))
}

/// Non-strict interlacing of consecutive rows restricted to their positive
/// supports. Pairs whose windows do not differ in length by one (for example
/// row 0 against row 1 when the support starts at column 1) are skipped.
///
/// Returns the non-strict report, the number of skipped pairs and whether
/// every checked pair also interlaced strictly.
pub fn check_support_interlacing(tri: &CoefficientTriangle) -> (CheckReport, usize, bool) {
    let outcomes: Vec<(CheckReport, bool, bool)> = tri
        .rows()
        .par_windows(2)
        .map(|pair| {
            let m = pair[0].degree();
            let mut report = CheckReport::new("support-interlacing", Strictness::NonStrict);
            let (lo, hi) = match (pair[0].positive_support(), pair[1].positive_support()) {
                (Some(lo), Some(hi)) => (lo.1, hi.1),
                (lo, _) => {
                    let bad = if lo.is_none() { m } else { m + 1 };
                    report.push(violation(
                        bad,
                        0,
                        "row has a non-contiguous or non-positive support",
                        Rational::zero(),
                        Rational::zero(),
                    ));
                    report.checked += 1;
                    return (report, false, false);
                }
            };
            if hi.degree() != lo.degree() + 1 {
                return (report, true, true);
            }
            let mut loose = check_interlacing_pair(&lo, &hi, false).expect("validated pair");
            let strict = check_interlacing_pair(&lo, &hi, true).expect("validated pair");
            for v in &mut loose.violations {
                v.m = m;
            }
            (loose, false, strict.passed())
        })
        .collect();
    let skipped = outcomes.iter().filter(|o| o.1).count();
    let strict = outcomes.iter().all(|o| o.2);
    let report = CheckReport::merged(
        "support-interlacing",
        Strictness::NonStrict,
        DEFAULT_VIOLATION_CAP,
        outcomes.into_iter().map(|o| o.0),
    );
    (report, skipped, strict)
}

/// Everything the sufficient condition needs, checked on one recurrence.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub name: String,
    pub seed: Option<u64>,
    pub n_max: usize,
    pub sturm_up_to: usize,
    pub condition_f: CheckReport,
    pub condition_g: CheckReport,
    /// One entry per row `0..=sturm_up_to`.
    pub sturm: Vec<SturmResult>,
    pub real_rooted: CheckReport,
    /// Newton's inequality on rows past `sturm_up_to`; a necessary condition
    /// for real-rootedness, used as a proxy where Sturm chains are not run.
    pub newton_proxy: CheckReport,
    pub interlacing: CheckReport,
    pub interlacing_skipped: usize,
    pub strict_interlacing_observed: bool,
}

impl CriterionReport {
    pub fn conditions_hold(&self) -> bool {
        self.condition_f.passed() && self.condition_g.passed()
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.conditions_hold() && self.real_rooted.passed() && self.newton_proxy.passed()
    }

    pub fn conclusion_holds(&self) -> bool {
        self.interlacing.passed()
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_hold() && self.conclusion_holds()
    }

    pub fn reports(&self) -> [&CheckReport; 5] {
        [
            &self.condition_f,
            &self.condition_g,
            &self.real_rooted,
            &self.newton_proxy,
            &self.interlacing,
        ]
    }
}

pub fn criterion_report(
    rec: &TriangularRecurrence,
    n_max: usize,
    sturm_up_to: usize,
) -> Result<CriterionReport> {
    if sturm_up_to > n_max {
        return Err(Error::InvalidParameter(format!(
            "sturm bound {sturm_up_to} exceeds n_max {n_max}"
        )));
    }
    let tri = build_triangle(rec, n_max)?;
    let condition_f = check_gen1(rec, n_max)?;
    let condition_g = check_gen2(rec, n_max)?;

    let sturm = tri.rows()[..=sturm_up_to]
        .par_iter()
        .map(sturm_real_roots)
        .collect::<Result<Vec<_>>>()?;
    let mut real_rooted = CheckReport::new("real-rooted (sturm)", Strictness::NonStrict);
    for (n, s) in sturm.iter().enumerate() {
        real_rooted.record(s.all_real, || {
            violation(
                n,
                0,
                "distinct real roots = square-free degree",
                int(s.real_root_count as i64),
                int(s.squarefree_degree as i64),
            )
        });
    }

    let newton_proxy = CheckReport::merged(
        "newton (real-rootedness proxy)",
        Strictness::NonStrict,
        DEFAULT_VIOLATION_CAP,
        tri.rows()[sturm_up_to + 1..]
            .par_iter()
            .map(check_newton)
            .collect::<Vec<_>>(),
    );

    let (interlacing, interlacing_skipped, strict) = check_support_interlacing(&tri);
    Ok(CriterionReport {
        name: rec.name().to_string(),
        seed: rec.seed(),
        n_max,
        sturm_up_to,
        condition_f,
        condition_g,
        sturm,
        real_rooted,
        newton_proxy,
        strict_interlacing_observed: strict && interlacing.passed(),
        interlacing,
        interlacing_skipped,
    })
}

fn small_nonneg(rng: &mut ChaCha8Rng, max_numer: i64) -> Rational {
    ratio(rng.random_range(0..=max_numer), rng.random_range(1..=3))
}

/// Draws a recurrence inside the cone of the sufficient condition:
/// `f = a + b k + c n`, `g = d + e n` with `a, b, c, e >= 0`, `d > 0` and
/// `a + c > 0`. These keep rows real-rooted (the row polynomial evolves as
/// `G_n = (a + cn + (d + en)x) G_{n-1} + b x G'_{n-1}`) and satisfy both
/// conditions on `f` and `g`.
pub fn sample_cone_recurrence(seed: u64) -> TriangularRecurrence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = small_nonneg(&mut rng, 4);
    let b = small_nonneg(&mut rng, 4);
    let c = small_nonneg(&mut rng, 2);
    let a = if a.is_zero() && c.is_zero() {
        int(1)
    } else {
        a
    };
    let d = small_nonneg(&mut rng, 3) + ratio(1, 2);
    let e = small_nonneg(&mut rng, 2);
    let support_start = rng.random_range(0..=1usize);
    let name = format!(
        "cone(seed={seed}): f = {} + {}k + {}n, g = {} + {}n",
        crate::exact::format_rational(&a),
        crate::exact::format_rational(&b),
        crate::exact::format_rational(&c),
        crate::exact::format_rational(&d),
        crate::exact::format_rational(&e),
    );
    debug_assert!(!d.is_negative());
    TriangularRecurrence::new(
        name,
        move |n, k| Some(&a + &b * int(k as i64) + &c * int(n as i64)),
        move |n, _| Some(&d + &e * int(n as i64)),
    )
    .with_support_start(support_start)
    .with_seed(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> CoefficientRow {
        CoefficientRow::from_integers(values).unwrap()
    }

    #[test]
    fn pascal_rows() {
        let tri = build_triangle(&family(FamilyId::Pascal), 4).unwrap();
        assert_eq!(tri.row(3), &ints(&[1, 3, 3, 1]));
        assert_eq!(tri.row(4), &ints(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn stirling_rows() {
        let s2 = build_triangle(&family(FamilyId::StirlingSecond), 5).unwrap();
        assert_eq!(s2.row(4), &ints(&[0, 1, 7, 6, 1]));
        assert_eq!(s2.row(4).sum(), int(15));
        assert_eq!(s2.row(5).sum(), int(52));
        let s1 = build_triangle(&family(FamilyId::StirlingCycle), 8).unwrap();
        assert_eq!(s1.row(4), &ints(&[0, 6, 11, 6, 1]));
        let mut factorial = 1i64;
        for n in 1..=8usize {
            factorial *= n as i64;
            assert_eq!(s1.row(n).sum(), int(factorial));
        }
    }

    #[test]
    fn whitney_replays_its_recurrence() {
        let tri = build_triangle(&family(FamilyId::Whitney(1)), 12).unwrap();
        for n in 1..=12usize {
            for k in 1..=n {
                let expected =
                    int(1 + k as i64) * tri.entry(n - 1, k as i64) + tri.entry(n - 1, k as i64 - 1);
                assert_eq!(tri.entry(n, k as i64), expected, "W(n={n},k={k})");
            }
            assert_eq!(tri.entry(n, 0), int(0));
        }
    }

    #[test]
    fn whitney_zero_is_not_stirling_second() {
        let w0 = build_triangle(&family(FamilyId::Whitney(0)), 6).unwrap();
        let s2 = build_triangle(&family(FamilyId::StirlingSecond), 6).unwrap();
        assert_ne!(w0, s2);
        // With f = 1 and the column-0 entries forced to zero, row n is C(n-1, k-1).
        assert_eq!(w0.row(4), &ints(&[0, 1, 3, 3, 1]));
    }

    #[test]
    fn condition_f_examples() {
        let s2 = family(FamilyId::StirlingSecond);
        assert!(check_gen1(&s2, 30).unwrap().passed());
        // n = 5, k = 2: weighted bound 3/2 <= 2 <= 3.
        assert_eq!(ratio(3 * 2, 4 * 3) * int(3), ratio(3, 2));
        assert!(check_gen1(&family(FamilyId::Pascal), 30).unwrap().passed());
        let decreasing = TriangularRecurrence::new(
            "dec",
            |n, k| Some(int(n as i64 - k as i64)),
            |_, _| Some(int(1)),
        );
        let report = check_gen1(&decreasing, 10).unwrap();
        assert!(!report.passed());
        assert_eq!(report.violations[0].relation, "f(n+1,k) <= f(n+1,k+1)");
    }

    #[test]
    fn condition_g_examples() {
        assert!(check_gen2(&family(FamilyId::Pascal), 40).unwrap().passed());
        assert!(check_gen2(&family(FamilyId::Whitney(2)), 100)
            .unwrap()
            .passed());
        let increasing =
            TriangularRecurrence::new("inc", |_, _| Some(int(1)), |_, k| Some(int(k as i64)));
        let report = check_gen2(&increasing, 10).unwrap();
        assert!(!report.passed());
        assert_eq!(report.violations[0].relation, "g(n+1,k+1) <= g(n+1,k)");
    }

    #[test]
    fn undefined_coefficient_is_reported() {
        let rec = parse_recurrence("f = 1/(n-3)\ng = 1\n").unwrap();
        assert_eq!(
            build_triangle(&rec, 5).unwrap_err(),
            Error::Undefined {
                function: "f",
                n: 3,
                k: 0
            }
        );
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("pascal".parse(), Ok(FamilyId::Pascal));
        assert_eq!("bell".parse(), Ok(FamilyId::StirlingSecond));
        assert_eq!("whitney-3".parse(), Ok(FamilyId::Whitney(3)));
        assert!("whitney-x".parse::<FamilyId>().is_err());
    }

    #[test]
    fn report_examples() {
        for (id, sturm) in [
            (FamilyId::Pascal, 15),
            (FamilyId::StirlingSecond, 15),
            (FamilyId::Whitney(2), 12),
        ] {
            let report = criterion_report(&family(id), 30, sturm).unwrap();
            assert!(report.hypotheses_hold(), "{id:?}");
            assert!(report.conclusion_holds(), "{id:?}");
        }
        assert!(criterion_report(&family(FamilyId::Pascal), 5, 6).is_err());
    }

    #[test]
    fn cone_samples_are_reproducible() {
        let a = build_triangle(&sample_cone_recurrence(7), 8).unwrap();
        let b = build_triangle(&sample_cone_recurrence(7), 8).unwrap();
        assert_eq!(a, b);
        assert_eq!(sample_cone_recurrence(7).seed(), Some(7));
    }
}
