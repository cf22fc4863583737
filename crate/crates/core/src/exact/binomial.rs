use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows of Pascal's triangle above this size are computed on demand rather
/// than stored; the full triangle to `n` costs `O(n^3)` bits.
const CACHE_LIMIT: u64 = 512;

/// Pascal-triangle memo, grown lazily and shared between threads.
#[derive(Debug, Default)]
pub struct BinomialCache {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Extends the stored triangle so that it covers row `n` (clamped to the
    /// cache limit). Call before a parallel section to avoid write contention.
    pub fn prefill(&self, n: u64) {
        let n = n.min(CACHE_LIMIT) as usize;
        if self.rows.read().expect("binomial cache poisoned").len() > n {
            return;
        }
        let mut rows = self.rows.write().expect("binomial cache poisoned");
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= n {
            let prev = rows.last().expect("non-empty");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for pair in prev.windows(2) {
                next.push(&pair[0] + &pair[1]);
            }
            next.push(BigInt::one());
            rows.push(next);
        }
    }

    pub fn get(&self, n: u64, k: i64) -> BigInt {
        if k < 0 || k as u64 > n {
            return BigInt::zero();
        }
        let k = k as u64;
        if n > CACHE_LIMIT {
            return multiplicative(n, k);
        }
        self.prefill(n);
        self.rows.read().expect("binomial cache poisoned")[n as usize][k as usize].clone()
    }
}

fn multiplicative(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

fn global() -> &'static BinomialCache {
    static CACHE: OnceLock<BinomialCache> = OnceLock::new();
    CACHE.get_or_init(BinomialCache::new)
}

/// `C(n, k)`, zero when `k` lies outside `[0, n]`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    global().get(n, k)
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigInt {
    binomial(2 * n, n as i64)
}
