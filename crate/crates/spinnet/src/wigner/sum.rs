use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::{factorial, rising};

/// A factorial `(c + s*k)!` in the denominator of a summand, `s = ±1`.
#[derive(Copy, Clone, Debug)]
pub(crate) struct DenFactorial {
    pub c: i64,
    pub s: i64,
}

impl DenFactorial {
    fn at(&self, k: i64) -> i64 {
        self.c + self.s * k
    }
}

/// The admissible `k` range keeping every denominator argument nonnegative.
pub(crate) fn summation_range(lo: i64, hi: i64, dens: &[DenFactorial]) -> Option<(i64, i64)> {
    let mut lo = lo;
    let mut hi = hi;
    for d in dens {
        if d.s > 0 {
            lo = lo.max(-d.c);
        } else {
            hi = hi.min(d.c);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// `sum_{k=lo}^{hi} (-1)^k num(k) / prod_i (c_i + s_i k)!`.
///
/// All summands are brought to the common denominator
/// `L = prod_i (max_k (c_i + s_i k))!`, so the inner loop is integer-only and
/// the single gcd happens when the result is formed.
pub(crate) fn alternating_factorial_sum(
    lo: i64,
    hi: i64,
    dens: &[DenFactorial],
    num: impl Fn(i64) -> BigUint,
) -> BigRational {
    if lo > hi {
        return BigRational::zero();
    }
    let tops: Vec<i64> = dens.iter().map(|d| d.at(lo).max(d.at(hi))).collect();
    let mut total = BigInt::zero();
    for k in lo..=hi {
        let mut t = num(k);
        for (d, &top) in dens.iter().zip(&tops) {
            let arg = d.at(k);
            debug_assert!(arg >= 0);
            if arg < top {
                t *= rising(arg as u64 + 1, top as u64);
            }
        }
        if k.rem_euclid(2) == 1 {
            total -= BigInt::from(t);
        } else {
            total += BigInt::from(t);
        }
    }
    let mut l = BigUint::one();
    for &top in &tops {
        l *= factorial(top as usize).as_ref();
    }
    BigRational::new(total, l.into())
}
