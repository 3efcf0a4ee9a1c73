use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::memo::cached_six_j;
use super::ninej::{common_range, nine_j_twice, NineJLabels};
use super::threenj::RecouplingError;
use crate::exactnum::{phase_twice, PrimePowers, RadicalRational, Spin};

/// Left side minus right side of the Biedenharn–Elliott identity
/// `sum_x (-1)^(R+x) (2x+1) {a b x; c d p} {c d x; e f q} {e f x; b a r}
///  = {p q r; e a d} {p q r; f b c}`, with `R` the sum of the nine spins.
pub fn be_residual(s: [Spin; 9]) -> Result<RadicalRational, RecouplingError> {
    let [a, b, c, d, e, f, p, q, r] = s.map(|x| x.twice());
    let big_r: i64 = s.iter().map(|x| x.twice() as i64).sum();
    let mut lhs = RadicalRational::zero();
    for x in common_range(&[(a, b), (c, d), (e, f)]) {
        let s1 = cached_six_j([a, b, x, c, d, p]);
        if s1.is_zero() {
            continue;
        }
        let s2 = cached_six_j([c, d, x, e, f, q]);
        if s2.is_zero() {
            continue;
        }
        let s3 = cached_six_j([e, f, x, b, a, r]);
        if s3.is_zero() {
            continue;
        }
        let t = big_r + x as i64;
        if t % 2 != 0 {
            return Err(RecouplingError::HalfIntegerPhase(t));
        }
        let w = phase_twice(t) * (x as i64 + 1);
        lhs += (&(&s1 * &s2) * &s3).scale_int(w);
    }
    let rhs = &cached_six_j([p, q, r, e, a, d]) * &cached_six_j([p, q, r, f, b, c]);
    Ok(&lhs - &rhs)
}

/// Running variable of the 9j recursion in `N = {c a b; f d e; j g h}`:
/// the three diagonal entries.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RecursionVariable {
    C,
    D,
    H,
}

/// Pairs of running variables for the five-term recursion.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RecursionPair {
    CD,
    CH,
    DH,
}

impl RecursionPair {
    pub const ALL: [RecursionPair; 3] = [RecursionPair::CD, RecursionPair::CH, RecursionPair::DH];
}

/// Coefficients attached to one running variable `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionCoeffs {
    pub variable: RecursionVariable,
    /// `A_{q+1} / ((q+1)(2q+1))`.
    pub a_next: RadicalRational,
    /// `A_q / (q(2q+1))`.
    pub a_prev: RadicalRational,
    /// The diagonal coefficient (`C`, `D` or `H`).
    pub cosine: BigRational,
}

/// `A_q(pr, st)^2` as 1/256 times a product of eight integers built from
/// twice-values, or `None` when the product is negative.
fn area(q: u32, p: u32, r: u32, s: u32, t: u32) -> RadicalRational {
    let (q, p, r, s, t) = (q as i64, p as i64, r as i64, s as i64, t as i64);
    let f = [-p + r + q, p - r + q, p + r - q + 2, p + r + q + 2, -s + t + q, s - t + q, s + t - q + 2, s + t + q + 2];
    if f.contains(&0) {
        return RadicalRational::zero();
    }
    if f.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        // a negative squared area belongs to a symbol outside the triangle
        // domain, whose 9j factor is zero anyway
        return RadicalRational::zero();
    }
    let mut pp = PrimePowers::new(2);
    for x in f {
        pp.add_integer(x.abs(), 1);
    }
    pp.add_integer(2, -8);
    pp.signed_sqrt()
}

/// `j(j+1)` for a twice-value, as a rational.
fn jj(t: u32) -> BigRational {
    BigRational::new(BigInt::from(t as i64 * (t as i64 + 2)), BigInt::from(4))
}

/// `[a(a+1) - b(b+1) + c(c+1)][c(c+1) + f(f+1) - j(j+1)] / (c(c+1))`.
fn coeff_c(a: u32, b: u32, c: u32, f: u32, j: u32) -> BigRational {
    (jj(a) - jj(b) + jj(c)) * (jj(c) + jj(f) - jj(j)) / jj(c)
}

/// `[a(a+1) + d(d+1) - g(g+1)][d(d+1) + f(f+1) - e(e+1)] / (d(d+1))`.
fn coeff_d(a: u32, d: u32, g: u32, e: u32, f: u32) -> BigRational {
    (jj(a) + jj(d) - jj(g)) * (jj(d) + jj(f) - jj(e)) / jj(d)
}

fn normalise(a: RadicalRational, num: i64, den: i64) -> RadicalRational {
    a.scale(&BigRational::new(num.into(), den.into()))
}

/// Twice-values `(c, a, b, f, d, e, j, g, h)` read from `N = {c a b; f d e; j g h}`.
fn unpack(l: &NineJLabels) -> [u32; 9] {
    l.twice()
}

fn c_side(t: [u32; 9]) -> Result<RecursionCoeffs, RecouplingError> {
    let [c, a, b, f, _d, _e, j, _g, _h] = t;
    if c == 0 {
        return Err(RecouplingError::ZeroRunningVariable("c"));
    }
    let ci = c as i64;
    // q = c+1: (q)(2c+1) in twice units is ((c+2)/2)(c+1), and c(2c+1) is (c/2)(c+1)
    Ok(RecursionCoeffs {
        variable: RecursionVariable::C,
        a_next: normalise(area(c + 2, a, b, f, j), 2, (ci + 2) * (ci + 1)),
        a_prev: normalise(area(c, a, b, f, j), 2, ci * (ci + 1)),
        cosine: coeff_c(a, b, c, f, j),
    })
}

fn d_side(t: [u32; 9]) -> Result<RecursionCoeffs, RecouplingError> {
    let [_c, a, _b, f, d, e, _j, g, _h] = t;
    if d == 0 {
        return Err(RecouplingError::ZeroRunningVariable("d"));
    }
    let di = d as i64;
    Ok(RecursionCoeffs {
        variable: RecursionVariable::D,
        a_next: normalise(area(d + 2, e, f, a, g), 2, (di + 2) * (di + 1)),
        a_prev: normalise(area(d, e, f, a, g), 2, di * (di + 1)),
        cosine: coeff_d(a, d, g, e, f),
    })
}

/// `{c a b; f d e; j g h}` relabelled so that `h` takes the place of `d`:
/// `{c b a; j h g; f e d}`, an even permutation of rows and columns.
fn swap_d_h(t: [u32; 9]) -> [u32; 9] {
    let [c, a, b, f, d, e, j, g, h] = t;
    [c, b, a, j, h, g, f, e, d]
}

/// `{d e f; g h j; a b c}`, moving `d` into the `c` position.
fn rotate_to_d(t: [u32; 9]) -> [u32; 9] {
    let [c, a, b, f, d, e, j, g, h] = t;
    [d, e, f, g, h, j, a, b, c]
}

/// Coefficients of the five-term recursion for one running variable of
/// `N(c, d, h) = {c a b; f d e; j g h}`. The `h` coefficients are those of
/// `d` applied to the relabelled symbol `{c b a; j h g; f e d}`.
pub fn recursion_coeffs(labels: &NineJLabels, var: RecursionVariable) -> Result<RecursionCoeffs, RecouplingError> {
    let t = unpack(labels);
    match var {
        RecursionVariable::C => c_side(t),
        RecursionVariable::D => d_side(t),
        RecursionVariable::H => {
            let mut r = d_side(swap_d_h(t)).map_err(|_| RecouplingError::ZeroRunningVariable("h"))?;
            r.variable = RecursionVariable::H;
            Ok(r)
        }
    }
}

fn shifted(t: [u32; 9], pos: usize, delta: i64) -> RadicalRational {
    let v = t[pos] as i64 + delta;
    if v < 0 {
        return RadicalRational::zero();
    }
    let mut u = t;
    u[pos] = v as u32;
    nine_j_twice(u)
}

/// The (c, d) relation on twice-values `(c, a, b, f, d, e, j, g, h)`.
fn residual_cd(t: [u32; 9]) -> Result<RadicalRational, RecouplingError> {
    let cs = c_side(t)?;
    let ds = d_side(t)?;
    let n0 = nine_j_twice(t);
    let lhs = &(&(&cs.a_next * &shifted(t, 0, 2)) + &(&cs.a_prev * &shifted(t, 0, -2))) + &n0.scale(&cs.cosine);
    let rhs = &(&(&ds.a_next * &shifted(t, 4, 2)) + &(&ds.a_prev * &shifted(t, 4, -2))) + &n0.scale(&ds.cosine);
    Ok(&lhs - &rhs)
}

/// Left side minus right side of the five-term recursion for `pair`.
pub fn nine_j_recursion_residual(
    labels: &NineJLabels,
    pair: RecursionPair,
) -> Result<RadicalRational, RecouplingError> {
    let t = unpack(labels);
    match pair {
        RecursionPair::CD => residual_cd(t),
        RecursionPair::CH => residual_cd(swap_d_h(t)).map_err(|e| rename(e, "h")),
        RecursionPair::DH => residual_cd(rotate_to_d(t)).map_err(|e| match e {
            RecouplingError::ZeroRunningVariable("c") => RecouplingError::ZeroRunningVariable("d"),
            RecouplingError::ZeroRunningVariable("d") => RecouplingError::ZeroRunningVariable("h"),
            other => other,
        }),
    }
}

fn rename(e: RecouplingError, to: &'static str) -> RecouplingError {
    match e {
        RecouplingError::ZeroRunningVariable("d") => RecouplingError::ZeroRunningVariable(to),
        other => other,
    }
}

/// Arguments of the λ-exchange symmetry between 9j sums.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaArgs {
    /// `{a b x; d e f; g h j}` with `x` summed; entries in that order,
    /// the slot of `x` holding `c` (the spin coupled with λ).
    pub a: Spin,
    pub b: Spin,
    pub c: Spin,
    pub d: Spin,
    pub e: Spin,
    pub f: Spin,
    pub g: Spin,
    pub h: Spin,
    pub j: Spin,
    pub lambda: Spin,
    pub a_prime: Spin,
    pub f_prime: Spin,
}

/// Residual and the number of terms each side's sum ran over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaResidual {
    pub residual: RadicalRational,
    pub x_terms: usize,
    pub y_terms: usize,
}

/// Left minus right side of
/// `(-1)^(a+f+b+j) sum_x (-1)^(2x) (2x+1) {a b x; d e f; g h j} {a b x; c λ a'} {j f x; λ c f'}
///  = (-1)^(a'+f'+g+e) sum_y (-1)^(2y) (2y+1) {a' b c; y e f'; g h j} {f' e y; d λ f} {g a' y; λ d a}`.
///
/// The two outer phases are combined into `(-1)^(a+f+b+j-a'-f'-g-e)`, which
/// is integral whenever either side is nonzero.
pub fn lambda_symmetry_residual(p: &LambdaArgs) -> Result<LambdaResidual, RecouplingError> {
    let tw = |s: Spin| s.twice();
    let (a, b, c, d, e, f) = (tw(p.a), tw(p.b), tw(p.c), tw(p.d), tw(p.e), tw(p.f));
    let (g, h, j, lam, ap, fp) = (tw(p.g), tw(p.h), tw(p.j), tw(p.lambda), tw(p.a_prime), tw(p.f_prime));

    let mut lhs = RadicalRational::zero();
    let mut x_terms = 0;
    for x in common_range(&[(a, b), (c, lam), (j, f)]) {
        x_terms += 1;
        let s1 = cached_six_j([a, b, x, c, lam, ap]);
        let s2 = cached_six_j([j, f, x, lam, c, fp]);
        if s1.is_zero() || s2.is_zero() {
            continue;
        }
        let n = nine_j_twice([a, b, x, d, e, f, g, h, j]);
        let w = (x as i64 + 1) * if x % 2 == 1 { -1 } else { 1 };
        lhs += (&(&n * &s1) * &s2).scale_int(w);
    }
    let mut rhs = RadicalRational::zero();
    let mut y_terms = 0;
    for y in common_range(&[(fp, e), (d, lam), (g, ap)]) {
        y_terms += 1;
        let s1 = cached_six_j([fp, e, y, d, lam, f]);
        let s2 = cached_six_j([g, ap, y, lam, d, a]);
        if s1.is_zero() || s2.is_zero() {
            continue;
        }
        let n = nine_j_twice([ap, b, c, y, e, fp, g, h, j]);
        let w = (y as i64 + 1) * if y % 2 == 1 { -1 } else { 1 };
        rhs += (&(&n * &s1) * &s2).scale_int(w);
    }
    if lhs.is_zero() && rhs.is_zero() {
        return Ok(LambdaResidual { residual: RadicalRational::zero(), x_terms, y_terms });
    }
    let t = (a + f + b + j) as i64 - (ap + fp + g + e) as i64;
    if t % 2 != 0 {
        return Err(RecouplingError::HalfIntegerPhase(t));
    }
    let residual = &lhs.scale_int(phase_twice(t)) - &rhs;
    Ok(LambdaResidual { residual, x_terms, y_terms })
}

impl RecursionCoeffs {
    pub fn is_degenerate(&self) -> bool {
        self.a_next.is_zero() && self.a_prev.is_zero() && self.cosine.is_zero()
    }
}
