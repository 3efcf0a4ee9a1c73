use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

/// Growable table of `n!`, shared between threads.
#[derive(Debug)]
pub struct FactorialCache {
    table: RwLock<Vec<Arc<BigUint>>>,
}

impl Default for FactorialCache {
    fn default() -> Self {
        Self::new()
    }
}

impl FactorialCache {
    pub fn new() -> FactorialCache {
        FactorialCache { table: RwLock::new(vec![Arc::new(BigUint::one())]) }
    }

    /// The process-wide cache.
    pub fn global() -> &'static FactorialCache {
        static CACHE: OnceLock<FactorialCache> = OnceLock::new();
        CACHE.get_or_init(FactorialCache::new)
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, n: usize) -> Arc<BigUint> {
        {
            let t = self.table.read().unwrap();
            if let Some(v) = t.get(n) {
                return v.clone();
            }
        }
        let mut t = self.table.write().unwrap();
        while t.len() <= n {
            let k = t.len();
            let next = t[k - 1].as_ref() * BigUint::from(k);
            t.push(Arc::new(next));
        }
        t[n].clone()
    }
}

/// `n!` from the global cache.
pub fn factorial(n: usize) -> Arc<BigUint> {
    FactorialCache::global().get(n)
}

/// `lo * (lo+1) * ... * hi`, or 1 when `hi < lo`.
pub fn rising(lo: u64, hi: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = lo;
    // multiply in u64 chunks to keep the bignum product count down
    let mut chunk: u64 = 1;
    while k <= hi {
        match chunk.checked_mul(k) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = k;
            }
        }
        k += 1;
    }
    acc * chunk
}
