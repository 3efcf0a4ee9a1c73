use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::exactnum::Spin;
use crate::recoupling::NineJLabels;
use crate::wigner::{three_j, wigner_small_d};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymError {
    #[error("cos(theta) = {0} lies outside [-1, 1]")]
    Domain(BigRational),
    #[error("phase exponent {0}/2 is not an integer")]
    HalfIntegerPhase(i64),
}

fn phase(t: i64) -> Result<i8, AsymError> {
    if t % 2 != 0 {
        return Err(AsymError::HalfIntegerPhase(t));
    }
    Ok(if (t / 2).rem_euclid(2) == 0 { 1 } else { -1 })
}

fn half(t: u32) -> BigRational {
    BigRational::new(BigInt::from(t), BigInt::from(2))
}

/// Geometry of the `{a B C; D e F; G H i}` pattern with the six capitals large.
#[derive(Debug, Clone, PartialEq)]
pub struct Asym63Params {
    pub cos_theta: BigRational,
    pub gamma1: f64,
    pub gamma2: f64,
    pub phase: i8,
}

impl Asym63Params {
    pub fn new(l: &NineJLabels) -> Result<Self, AsymError> {
        let [_, b, c, d, e, f, g, h, _] = l.twice();
        let one = BigRational::one();
        let p = half(b + f) + &one;
        let q = half(d + h) + &one;
        let two_e1 = BigRational::from_integer(BigInt::from(e + 1));
        let cos_theta = (&two_e1 * &two_e1 - &p * &p - &q * &q) / (BigRational::from_integer(2.into()) * &p * &q);
        let third = |x: u32| 2.0 / 3.0 * (x as f64 / 2.0) + 1.0;
        let gamma1 = (third(b + c + f) * third(d + g + h)).sqrt();
        let gamma2 = (p.to_f64().unwrap() * q.to_f64().unwrap()).sqrt();
        let phase = phase(b as i64 + h as i64 - e as i64)?;
        Ok(Asym63Params { cos_theta, gamma1, gamma2, phase })
    }
}

fn small_d_or_zero(j: u32, m: i64, mp: i64, cos: &BigRational) -> f64 {
    if m.unsigned_abs() > j as u64 || mp.unsigned_abs() > j as u64 {
        return 0.0;
    }
    wigner_small_d(Spin::from_twice(j), m as i32, mp as i32, cos).map_or(0.0, |v| v.to_f64())
}

/// `(-1)^(B+H-e) / (G1 G2) d^a_{C-B,G-D}(theta) d^i_{F-C,H-G}(theta)` for
/// `{a B C; D e F; G H i}`.
pub fn approx_9j_63(l: &NineJLabels) -> Result<f64, AsymError> {
    let p = Asym63Params::new(l)?;
    if p.cos_theta.abs() > BigRational::one() {
        return Err(AsymError::Domain(p.cos_theta));
    }
    let [a, b, c, d, _, f, g, h, i] = l.twice().map(|x| x as i64);
    let d1 = small_d_or_zero(a as u32, c - b, g - d, &p.cos_theta);
    if d1 == 0.0 {
        return Ok(0.0);
    }
    let d2 = small_d_or_zero(i as u32, f - c, h - g, &p.cos_theta);
    Ok(p.phase as f64 / (p.gamma1 * p.gamma2) * d1 * d2)
}

/// Parameters of the `{A b C; d e f; G h I}` pattern with the corners large.
#[derive(Debug, Clone, PartialEq)]
pub struct Asym45Params {
    /// `(A + C + G + I) / 4`.
    pub x: BigRational,
    /// Twice `A - C - G + I`.
    pub epsilon: i64,
    pub phase: i8,
    /// Twice the projections `(C-A, G-I)` and `(G-A, C-I)` of the two 3j factors.
    pub proj1: (i64, i64),
    pub proj2: (i64, i64),
}

impl Asym45Params {
    pub fn new(l: &NineJLabels) -> Result<Self, AsymError> {
        let [a, b, c, d, _, _, g, _, i] = l.twice().map(|x| x as i64);
        let x = BigRational::new(BigInt::from(a + c + g + i), BigInt::from(8));
        Ok(Asym45Params {
            x,
            epsilon: a - c - g + i,
            phase: phase(b + c - d - g)?,
            proj1: (c - a, g - i),
            proj2: (g - a, c - i),
        })
    }

    /// Both 3j projection triples sum to zero.
    pub fn projection_sums_hold(&self) -> bool {
        self.proj1.0 + self.epsilon + self.proj1.1 == 0 && self.proj2.0 + self.epsilon + self.proj2.1 == 0
    }
}

fn three_j_or_zero(j: [u32; 3], m: [i64; 3]) -> f64 {
    if m.iter().zip(j).any(|(&m, j)| m.unsigned_abs() > j as u64) {
        return 0.0;
    }
    three_j(j, m.map(|x| x as i32)).to_f64()
}

/// `(-1)^(b+C-d-G) / (2X+1) (b e h; C-A, eps, G-I) (d e f; G-A, eps, C-I)` for
/// `{A b C; d e f; G h I}`; exactly 0 when a 3j selection rule fails.
pub fn approx_9j_45(l: &NineJLabels) -> Result<f64, AsymError> {
    let p = Asym45Params::new(l)?;
    let [_, b, _, d, e, f, _, h, _] = l.twice();
    let t1 = three_j_or_zero([b, e, h], [p.proj1.0, p.epsilon, p.proj1.1]);
    if t1 == 0.0 {
        return Ok(0.0);
    }
    let t2 = three_j_or_zero([d, e, f], [p.proj2.0, p.epsilon, p.proj2.1]);
    let denom = 2.0 * p.x.to_f64().unwrap() + 1.0;
    Ok(p.phase as f64 / denom * t1 * t2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recoupling::nine_j_twice;

    #[test]
    fn pinned_63_instance() {
        // large entries near 100, small a, e, i
        let t = [3, 203, 202, 204, 3, 201, 203, 204, 3];
        let l = NineJLabels::from_twice(t);
        assert!(l.is_admissible());
        let exact = nine_j_twice(t).to_f64();
        let approx = approx_9j_63(&l).unwrap();
        assert!(((approx - exact) / exact).abs() < 0.1, "{approx} vs {exact}");
    }

    #[test]
    fn pinned_45_instance() {
        let t = [202, 4, 204, 1, 4, 3, 203, 2, 201];
        let l = NineJLabels::from_twice(t);
        assert!(l.is_admissible());
        let exact = nine_j_twice(t).to_f64();
        let approx = approx_9j_45(&l).unwrap();
        assert!(((approx - exact) / exact).abs() < 0.1, "{approx} vs {exact}");
    }

    #[test]
    fn projection_bound_gives_zero() {
        // |C - B| = 3/2 > a = 1/2
        let l = NineJLabels::from_twice([1, 200, 203, 200, 2, 201, 201, 200, 1]);
        assert_eq!(approx_9j_63(&l).unwrap(), 0.0);
        // |eps| > e
        let l = NineJLabels::from_twice([200, 2, 200, 2, 0, 2, 200, 2, 204]);
        assert_eq!(approx_9j_45(&l).unwrap(), 0.0);
    }

    #[test]
    fn domain_error() {
        // e large against small B+F and D+H
        let l = NineJLabels::from_twice([0, 2, 2, 2, 20, 2, 2, 2, 0]);
        assert!(matches!(approx_9j_63(&l), Err(AsymError::Domain(_))));
    }
}
