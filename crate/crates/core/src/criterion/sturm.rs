//! Real-root counting with an exact Sturm chain.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{CoefficientRow, Rational};

/// Coefficients low to high with no trailing zeros; empty means zero.
type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect(),
    )
}

/// Divides by `|lc|`, keeping the sign pattern that Sturm counting relies on.
fn scale_abs_monic(p: Poly) -> Poly {
    match p.last() {
        Some(lc) => {
            let lc = lc.abs();
            p.into_iter().map(|c| c / &lc).collect()
        }
        None => p,
    }
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let lc = b.last().expect("division by zero polynomial");
    let mut rem = a.clone();
    if a.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rational::zero(); a.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let factor = top / lc;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &factor * c;
        }
        quot[shift] = factor;
    }
    (trim(quot), trim(rem))
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = scale_abs_monic(r);
    }
    scale_abs_monic(x)
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone()];
    let d = derivative(p);
    if d.is_empty() {
        return chain;
    }
    chain.push(scale_abs_monic(d));
    loop {
        let n = chain.len();
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(scale_abs_monic(r.into_iter().map(|c| -c).collect()));
    }
    chain
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_infinity(p: &Poly, negative: bool) -> Ordering {
    let lc = p.last().expect("chain polynomials are non-zero");
    let s = lc.cmp(&Rational::zero());
    if negative && degree(p) % 2 == 1 {
        s.reverse()
    } else {
        s
    }
}

/// Number of distinct real roots of `p` (given low to high).
pub fn distinct_real_roots(coefficients: &[Rational]) -> Result<usize> {
    let p = trim(coefficients.to_vec());
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(&p);
    let at_neg = variations(chain.iter().map(|q| sign_at_infinity(q, true)));
    let at_pos = variations(chain.iter().map(|q| sign_at_infinity(q, false)));
    Ok(at_neg - at_pos)
}

/// Root census of the polynomial `sum_k row[k] x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmResult {
    /// Degree after trailing zeros are trimmed.
    pub degree: usize,
    /// Distinct real roots.
    pub real_root_count: usize,
    /// Degree of `p / gcd(p, p')`.
    pub squarefree_degree: usize,
    /// Every root is real, multiplicities allowed.
    pub all_real: bool,
}

pub fn sturm_real_roots(row: &CoefficientRow) -> Result<SturmResult> {
    let p = trim(row.entries().to_vec());
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let real_root_count = distinct_real_roots(&p)?;
    let d = derivative(&p);
    let squarefree_degree = if d.is_empty() {
        0
    } else {
        let g = gcd(&p, &d);
        let (q, r) = div_rem(&p, &g);
        debug_assert!(r.is_empty());
        degree(&q)
    };
    Ok(SturmResult {
        degree: degree(&p),
        real_root_count,
        squarefree_degree,
        all_real: real_root_count == squarefree_degree,
    })
}

/// `prod (x - r)` low to high; small helper shared with tests and sampling.
pub fn from_roots(roots: &[Rational]) -> Vec<Rational> {
    let mut p = vec![Rational::one()];
    for r in roots {
        let mut next = vec![Rational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        p = next;
    }
    p
}
