use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::factor_u64;

/// An exact number `sum q_i * sqrt(r_i)` with rational `q_i` and distinct
/// squarefree radicands `r_i`.
///
/// Because square roots of distinct squarefree integers are linearly
/// independent over the rationals, two values are equal exactly when their
/// term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalRational {
    terms: BTreeMap<BigUint, BigRational>,
}

fn squarefree_split_u64(r: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    for (p, e) in factor_u64(r) {
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
    }
    (square, free)
}

/// Splits a small integer into `(s, f)` with `n = s^2 f` and `f` squarefree.
fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    if let Some(v) = n.to_u64() {
        let (s, f) = squarefree_split_u64(v);
        return (s.into(), f.into());
    }
    // slow path: trial division by all odd numbers
    let mut n = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &p;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    free *= n;
    (square, free)
}

impl RadicalRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_term_unchecked(q, BigUint::one())
    }

    /// Builds `q * sqrt(r)` for a radicand already known to be squarefree.
    pub(crate) fn from_term_unchecked(q: BigRational, r: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() && !r.is_zero() {
            terms.insert(r, q);
        }
        RadicalRational { terms }
    }

    /// `q * sqrt(r)` with the square part of `r` moved into the coefficient.
    pub fn radical_normalize(q: &BigRational, r: u64) -> Self {
        if r == 0 || q.is_zero() {
            return Self::zero();
        }
        let (s, f) = squarefree_split_u64(r);
        Self::from_term_unchecked(q * BigRational::from_integer(s.into()), f.into())
    }

    /// Like [`radical_normalize`](Self::radical_normalize) for big radicands.
    /// Factoring is by trial division, so keep `r` modest.
    pub fn radical_normalize_big(q: &BigRational, r: &BigUint) -> Self {
        if r.is_zero() || q.is_zero() {
            return Self::zero();
        }
        let (s, f) = squarefree_split(r);
        Self::from_term_unchecked(q * BigRational::from_integer(s.into()), f)
    }

    /// `sqrt(q)` for a nonnegative rational, or `None` when `q < 0`.
    pub fn sqrt_rational(q: &BigRational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        // sqrt(n/d) = s_n sqrt(f_n f_d) / (s_d f_d) with n = s_n^2 f_n, d = s_d^2 f_d
        let (sn, fnum) = squarefree_split(q.numer().magnitude());
        let (sd, fden) = squarefree_split(q.denom().magnitude());
        let coeff = BigRational::new(BigInt::from(sn), BigInt::from(sd * &fden));
        Some(Self::from_term_unchecked(coeff, fnum * fden))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    /// The value if it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RadicalRational { terms: self.terms.iter().map(|(r, q)| (r.clone(), q * k)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    fn add_term(&mut self, r: BigUint, q: BigRational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(r) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + q;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Sign of the value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.terms.len() {
            0 => 0,
            1 => {
                if self.terms.values().next().unwrap().is_positive() {
                    1
                } else {
                    -1
                }
            }
            _ => {
                let d = self.to_decimal(20);
                d.mantissa.sign_int()
            }
        }
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.to_decimal(21).to_string().parse().unwrap_or(f64::NAN)
    }

    /// The value to `digits` significant decimal digits.
    pub fn to_decimal(&self, digits: u32) -> Decimal {
        rr_to_float(self, digits)
    }
}

trait SignInt {
    fn sign_int(&self) -> i32;
}

impl SignInt for BigInt {
    fn sign_int(&self) -> i32 {
        match self.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

impl Neg for RadicalRational {
    type Output = RadicalRational;
    fn neg(mut self) -> RadicalRational {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl Neg for &RadicalRational {
    type Output = RadicalRational;
    fn neg(self) -> RadicalRational {
        -self.clone()
    }
}

impl AddAssign<&RadicalRational> for RadicalRational {
    fn add_assign(&mut self, rhs: &RadicalRational) {
        for (r, q) in &rhs.terms {
            self.add_term(r.clone(), q.clone());
        }
    }
}

impl AddAssign for RadicalRational {
    fn add_assign(&mut self, rhs: RadicalRational) {
        for (r, q) in rhs.terms {
            self.add_term(r, q);
        }
    }
}

impl Add<&RadicalRational> for &RadicalRational {
    type Output = RadicalRational;
    fn add(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalRational {
    type Output = RadicalRational;
    fn add(mut self, rhs: RadicalRational) -> RadicalRational {
        self += rhs;
        self
    }
}

impl Sub<&RadicalRational> for &RadicalRational {
    type Output = RadicalRational;
    fn sub(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.add_term(r.clone(), -q.clone());
        }
        out
    }
}

impl Sub for RadicalRational {
    type Output = RadicalRational;
    fn sub(self, rhs: RadicalRational) -> RadicalRational {
        &self - &rhs
    }
}

impl Mul<&RadicalRational> for &RadicalRational {
    type Output = RadicalRational;
    fn mul(self, rhs: &RadicalRational) -> RadicalRational {
        let mut out = RadicalRational::zero();
        for (r1, q1) in &self.terms {
            for (r2, q2) in &rhs.terms {
                // sqrt(r1) sqrt(r2) = g sqrt((r1/g)(r2/g)), squarefree since r1, r2 are
                let g = r1.gcd(r2);
                let r = (r1 / &g) * (r2 / &g);
                let q = q1 * q2 * BigRational::from_integer(g.into());
                out.add_term(r, q);
            }
        }
        out
    }
}

impl Mul for RadicalRational {
    type Output = RadicalRational;
    fn mul(self, rhs: RadicalRational) -> RadicalRational {
        &self * &rhs
    }
}

impl std::iter::Sum for RadicalRational {
    fn sum<I: Iterator<Item = RadicalRational>>(iter: I) -> Self {
        let mut acc = RadicalRational::zero();
        for v in iter {
            acc += v;
        }
        acc
    }
}

/// Exact sum of two values.
pub fn rr_add(a: &RadicalRational, b: &RadicalRational) -> RadicalRational {
    a + b
}

/// Exact product of two values.
pub fn rr_mul(a: &RadicalRational, b: &RadicalRational) -> RadicalRational {
    a * b
}

impl fmt::Display for RadicalRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if r.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{mag}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

/// A decimal approximation `mantissa * 10^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub mantissa: BigInt,
    pub exponent: i64,
}

impl Decimal {
    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Positional notation, e.g. `0.70710678`.
    pub fn to_plain_string(&self) -> String {
        if self.mantissa.is_zero() {
            return "0".to_string();
        }
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.magnitude().to_string();
        let body = if self.exponent >= 0 {
            format!("{digits}{}", "0".repeat(self.exponent as usize))
        } else {
            let shift = (-self.exponent) as usize;
            if digits.len() > shift {
                let (a, b) = digits.split_at(digits.len() - shift);
                format!("{a}.{b}")
            } else {
                format!("0.{}{digits}", "0".repeat(shift - digits.len()))
            }
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for Decimal {
    /// Scientific notation, parseable by `f64::from_str`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mantissa.is_zero() {
            return write!(f, "0e0");
        }
        let digits = self.mantissa.magnitude().to_string();
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let exp = self.exponent + digits.len() as i64 - 1;
        let (head, tail) = digits.split_at(1);
        if tail.is_empty() {
            write!(f, "{sign}{head}e{exp}")
        } else {
            write!(f, "{sign}{head}.{tail}e{exp}")
        }
    }
}

fn pow10(k: u64) -> BigUint {
    num_traits::pow(BigUint::from(10u32), k as usize)
}

fn decimal_len(n: &BigUint) -> u64 {
    if n.is_zero() {
        return 0;
    }
    n.to_string().len() as u64
}

/// floor-ish evaluation of `v * 10^p`; absolute error below `2 * terms`.
fn scaled_sum(v: &RadicalRational, p: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for (r, q) in &v.terms {
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        let mut inner = num * num * r;
        let mut divisor = den.clone();
        if p >= 0 {
            inner *= pow10(2 * p as u64);
        } else {
            divisor *= pow10((-p) as u64);
        }
        let root = inner.sqrt() / divisor;
        let t = BigInt::from(root);
        if q.is_negative() {
            acc -= t;
        } else {
            acc += t;
        }
    }
    acc
}

fn log10_estimate(r: &BigUint, q: &BigRational) -> i64 {
    let bits = q.numer().bits() as f64 - q.denom().bits() as f64 + r.bits() as f64 / 2.0;
    (bits * std::f64::consts::LOG10_2).floor() as i64
}

/// Decimal value of `v` correct to `digits` significant digits.
///
/// Each term is evaluated as an integer square root at a scale chosen from the
/// term magnitudes; the scale is raised until cancellation between terms still
/// leaves enough correct digits.
pub fn rr_to_float(v: &RadicalRational, digits: u32) -> Decimal {
    let digits = digits.max(1) as i64;
    if v.is_zero() {
        return Decimal { mantissa: BigInt::zero(), exponent: 0 };
    }
    let n = v.terms.len() as i64;
    let guard = 4 + (2 * n).to_string().len() as i64;
    let top = v.terms.iter().map(|(r, q)| log10_estimate(r, q)).max().unwrap();
    let mut p = digits + guard - top;
    loop {
        let s = scaled_sum(v, p);
        let len = decimal_len(s.magnitude()) as i64;
        if len >= digits + guard {
            let drop = (len - digits) as u64;
            let d = pow10(drop);
            let (quo, rem) = s.magnitude().div_rem(&d);
            let mut mag = quo;
            if rem * 2u32 >= d {
                mag += 1u32;
            }
            let mant = if s.is_negative() { -BigInt::from(mag) } else { BigInt::from(mag) };
            return Decimal { mantissa: mant, exponent: drop as i64 - p };
        }
        p += (digits + guard - len).max(1) + if len == 0 { 16 } else { 0 };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_examples() {
        let two_root2 = RadicalRational::radical_normalize(&q(1, 1), 8);
        assert_eq!(two_root2, RadicalRational::from_term_unchecked(q(2, 1), 2u32.into()));
        assert_eq!(RadicalRational::radical_normalize(&q(1, 3), 9), RadicalRational::one());
        assert_eq!(
            RadicalRational::radical_normalize(&q(-2, 1), 12),
            RadicalRational::from_term_unchecked(q(-4, 1), 3u32.into())
        );
        assert!(RadicalRational::radical_normalize(&q(5, 1), 0).is_zero());
    }

    #[test]
    fn field_examples() {
        let r2 = RadicalRational::radical_normalize(&q(1, 1), 2);
        let r3 = RadicalRational::radical_normalize(&q(1, 1), 3);
        assert!((&r2.scale_int(3) + &r2.scale_int(-3)).is_zero());
        assert_eq!(&r2 * &r2, RadicalRational::from_integer(2));
        assert_eq!(&r2 * &r3, RadicalRational::radical_normalize(&q(1, 1), 6));
        let r6 = RadicalRational::radical_normalize(&q(1, 1), 6);
        assert_eq!(&r6 * &r3, RadicalRational::radical_normalize(&q(3, 1), 2));
    }

    #[test]
    fn float_examples() {
        assert_eq!(RadicalRational::zero().to_f64(), 0.0);
        let half_root2 = RadicalRational::radical_normalize(&q(1, 2), 2);
        assert_eq!(half_root2.to_f64().to_string(), "0.7071067811865476");
        assert_eq!(RadicalRational::from_rational(q(1, 6)).to_f64().to_string(), "0.16666666666666666");
        let d = half_root2.to_decimal(30);
        assert_eq!(d.to_plain_string(), "0.707106781186547524400844362105");
    }

    #[test]
    fn float_with_cancellation() {
        // sqrt(2) - 1414213562373095/10^15 is about 4.9e-17
        let a = RadicalRational::radical_normalize(&q(1, 1), 2);
        let b = RadicalRational::from_rational(BigRational::new(
            1414213562373095i64.into(),
            1_000_000_000_000_000i64.into(),
        ));
        let d = (&a - &b).to_decimal(15);
        assert_eq!(d.to_string(), "4.88016887242097e-17");
    }

    #[test]
    fn sqrt_rational() {
        let v = RadicalRational::sqrt_rational(&q(1, 2)).unwrap();
        assert_eq!(v, RadicalRational::radical_normalize(&q(1, 2), 2));
        assert!(RadicalRational::sqrt_rational(&q(-1, 2)).is_none());
        let n = BigInt::from(3) << 70usize;
        let big = RadicalRational::sqrt_rational(&BigRational::from_integer(n)).unwrap();
        let expect = BigRational::from_integer(BigInt::one() << 35usize);
        assert_eq!(big, RadicalRational::from_term_unchecked(expect, 3u32.into()));
    }

    #[test]
    fn display_forms() {
        let v = &RadicalRational::radical_normalize(&q(-1, 3), 3) + &RadicalRational::from_rational(q(1, 2));
        assert_eq!(v.to_string(), "1/2 - 1/3*sqrt(3)");
    }
}
