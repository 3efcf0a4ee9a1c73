use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow};

use super::RadicalRational;

static SIEVE: OnceLock<RwLock<(u64, Arc<Vec<u64>>)>> = OnceLock::new();

fn sieve(limit: u64) -> Vec<u64> {
    let n = limit.max(2) as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut k = i * i;
            while k <= n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

/// All primes up to at least `limit`, from a shared sieve that grows on demand.
pub fn primes_up_to(limit: u64) -> Arc<Vec<u64>> {
    let cell = SIEVE.get_or_init(|| RwLock::new((4096, Arc::new(sieve(4096)))));
    {
        let cur = cell.read().unwrap();
        if cur.0 >= limit {
            return cur.1.clone();
        }
    }
    let mut w = cell.write().unwrap();
    if w.0 < limit {
        let bound = limit.max(2 * w.0);
        *w = (bound, Arc::new(sieve(bound)));
    }
    w.1.clone()
}

/// Prime factorisation of a `u64` by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A rational number held as a sign and a vector of prime exponents.
///
/// Products of factorials are accumulated here with Legendre's formula, so the
/// square root of such a product splits into a rational and a squarefree part
/// without ever factoring a large integer.
#[derive(Clone, Debug)]
pub struct PrimePowers {
    primes: Arc<Vec<u64>>,
    bound: u64,
    exps: Vec<i64>,
    negative: bool,
    /// Factors larger than the sieve, kept as (prime, exponent).
    extra: Vec<(u64, i64)>,
}

impl PrimePowers {
    pub fn new(max_factor: u64) -> PrimePowers {
        let bound = max_factor.max(2);
        let primes = primes_up_to(bound);
        let exps = vec![0; primes.len()];
        PrimePowers { primes, bound, exps, negative: false, extra: Vec::new() }
    }

    fn index(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    fn add_prime(&mut self, p: u64, e: i64) {
        match self.index(p) {
            Some(i) => self.exps[i] += e,
            None => match self.extra.iter_mut().find(|(q, _)| *q == p) {
                Some(slot) => slot.1 += e,
                None => self.extra.push((p, e)),
            },
        }
    }

    /// Multiplies by `(n!)^k`.
    pub fn add_factorial(&mut self, n: u64, k: i64) {
        assert!(n <= self.bound, "factorial argument {n} beyond sieve bound {}", self.bound);
        for (i, &p) in self.primes.iter().enumerate() {
            if p > n {
                break;
            }
            let mut e = 0u64;
            let mut q = n / p;
            while q > 0 {
                e += q;
                q /= p;
            }
            self.exps[i] += k * e as i64;
        }
    }

    /// Multiplies by `n^k`; `n = 0` is rejected.
    pub fn add_integer(&mut self, n: i64, k: i64) {
        assert!(n != 0, "zero factor in PrimePowers");
        if n < 0 && k % 2 != 0 {
            self.negative = !self.negative;
        }
        for (p, e) in factor_u64(n.unsigned_abs()) {
            self.add_prime(p, k * e as i64);
        }
    }

    pub fn negate(&mut self) {
        self.negative = !self.negative;
    }

    fn entries(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.primes
            .iter()
            .copied()
            .zip(self.exps.iter().copied())
            .chain(self.extra.iter().copied())
            .filter(|&(_, e)| e != 0)
    }

    /// The exact rational value.
    pub fn to_rational(&self) -> BigRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, e) in self.entries() {
            let pw: BigUint = Pow::pow(&BigUint::from(p), e.unsigned_abs());
            if e > 0 {
                num *= pw;
            } else {
                den *= pw;
            }
        }
        let r = BigRational::new(num.into(), den.into());
        if self.negative {
            -r
        } else {
            r
        }
    }

    /// `sign * sqrt(|value|)` as a single radical term, the sign taken from the
    /// stored sign of the value.
    pub fn signed_sqrt(&self) -> RadicalRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let mut rad = BigUint::one();
        for (p, e) in self.entries() {
            let half = e.div_euclid(2);
            let odd = e.rem_euclid(2);
            let pb = BigUint::from(p);
            if half > 0 {
                num *= Pow::pow(&pb, half as u64);
            } else if half < 0 {
                den *= Pow::pow(&pb, (-half) as u64);
            }
            if odd == 1 {
                rad *= pb;
            }
        }
        let q = BigRational::new(num.into(), den.into());
        let q = if self.negative { -q } else { q };
        RadicalRational::from_term_unchecked(q, rad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn sieve_small() {
        let p = primes_up_to(30);
        assert_eq!(&p[..10], &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sieve_grows() {
        let p = primes_up_to(20_000);
        assert!(p.contains(&19_997));
    }

    #[test]
    fn factor() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
    }

    #[test]
    fn factorial_exponents() {
        let mut pp = PrimePowers::new(10);
        pp.add_factorial(10, 1);
        pp.add_factorial(7, -1);
        assert_eq!(pp.to_rational(), BigRational::from_integer(BigInt::from(720)));
        // sqrt(720) = 12 sqrt 5
        let r = pp.signed_sqrt();
        assert_eq!(r, RadicalRational::radical_normalize(&BigRational::from_integer(1.into()), 720));
    }
}
