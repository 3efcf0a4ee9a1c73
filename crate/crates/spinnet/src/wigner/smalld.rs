use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::sum::{summation_range, DenFactorial};
use crate::exactnum::{factorial, PrimePowers, RadicalRational, Spin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallDError {
    #[error("cos(beta) = {0} lies outside [-1, 1]")]
    CosineOutOfRange(BigRational),
    #[error("projection {m}/2 is not allowed for spin {j}")]
    BadProjection { j: Spin, m: i32 },
}

/// Wigner's reduced rotation matrix element `d^j_{m,mp}(beta)`.
///
/// The half-angle functions enter as the radicals `sqrt((1 ± cos beta)/2)`,
/// so every term of the sum is one radical times a rational and the result is
/// exact. Convention: `d^{1/2}_{1/2,-1/2} = +sin(beta/2)` and
/// `d^1_{1,-1} = (1 - cos beta)/2`.
pub fn wigner_small_d(j: Spin, m: i32, mp: i32, cos_beta: &BigRational) -> Result<RadicalRational, SmallDError> {
    let tj = j.twice() as i32;
    for x in [m, mp] {
        if x.abs() > tj || (tj + x) % 2 != 0 {
            return Err(SmallDError::BadProjection { j, m: x });
        }
    }
    if cos_beta.abs() > BigRational::one() {
        return Err(SmallDError::CosineOutOfRange(cos_beta.clone()));
    }
    let (tj, m, mp) = (tj as i64, m as i64, mp as i64);
    let jpm = (tj + m) / 2;
    let jmm = (tj - m) / 2;
    let jpp = (tj + mp) / 2;
    let jmp = (tj - mp) / 2;
    let shift = (m - mp) / 2;
    // k!, (j+m-k)!, (j-mp-k)!, (k-m+mp)!
    let dens = [
        DenFactorial { c: 0, s: 1 },
        DenFactorial { c: jpm, s: -1 },
        DenFactorial { c: jmp, s: -1 },
        DenFactorial { c: -shift, s: 1 },
    ];
    let Some((lo, hi)) = summation_range(0, i64::MAX, &dens) else {
        return Ok(RadicalRational::zero());
    };

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let c2 = (BigRational::one() + cos_beta) * &half;
    let s2 = (BigRational::one() - cos_beta) * &half;
    let cos_half = RadicalRational::sqrt_rational(&c2).expect("nonnegative");
    let sin_half = RadicalRational::sqrt_rational(&s2).expect("nonnegative");

    let mut pp = PrimePowers::new(tj.max(1) as u64);
    for n in [jpm, jmm, jpp, jmp] {
        pp.add_factorial(n as u64, 1);
    }
    let norm = pp.signed_sqrt();

    let mut total = RadicalRational::zero();
    for k in lo..=hi {
        let pc = jpm + jmp - 2 * k;
        let ps = 2 * k - shift;
        let mut den = BigInt::one();
        for d in &dens {
            den *= BigInt::from(factorial((d.c + d.s * k) as usize).as_ref().clone());
        }
        let sign = if (k - shift).rem_euclid(2) == 1 { -1 } else { 1 };
        let coeff = BigRational::new(BigInt::from(sign), den);
        let mut term = RadicalRational::from_rational(coeff);
        term = &term * &power(&cos_half, &c2, pc);
        term = &term * &power(&sin_half, &s2, ps);
        total += term;
    }
    Ok(&total * &norm)
}

/// `x^e` for `x = sqrt(sq)`, using the exact square for even parts.
fn power(x: &RadicalRational, sq: &BigRational, e: i64) -> RadicalRational {
    debug_assert!(e >= 0);
    if e == 0 {
        return RadicalRational::one();
    }
    if sq.is_zero() {
        return RadicalRational::zero();
    }
    let even = num_traits::pow(sq.clone(), (e / 2) as usize);
    let base = RadicalRational::from_rational(even);
    if e % 2 == 1 {
        &base * x
    } else {
        base
    }
}
