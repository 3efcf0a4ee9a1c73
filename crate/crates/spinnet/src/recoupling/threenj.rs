use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::memo::cached_six_j;
use super::ninej::common_range;
use crate::exactnum::{admissible_twice, phase_twice, RadicalRational, Spin};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThreeNJKind {
    /// Cartwheel family (Möbius ladder graphs).
    #[serde(rename = "I")]
    TypeI,
    /// Prism family.
    #[serde(rename = "II")]
    TypeII,
}

/// Labels `j1..jn`, `k1..kn`, `l1..ln` of a 3nj symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeNJLabels {
    pub kind: ThreeNJKind,
    pub j: Vec<Spin>,
    pub k: Vec<Spin>,
    pub l: Vec<Spin>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecouplingError {
    #[error("label lists have lengths {0}, {1}, {2}; they must agree")]
    LengthMismatch(usize, usize, usize),
    #[error("a 3nj symbol needs n >= 2, got n = {0}")]
    TooSmall(usize),
    #[error("{0} must be nonzero for this recursion")]
    ZeroRunningVariable(&'static str),
    #[error("phase exponent {0}/2 is not an integer")]
    HalfIntegerPhase(i64),
}

impl ThreeNJLabels {
    pub fn new(kind: ThreeNJKind, j: Vec<Spin>, k: Vec<Spin>, l: Vec<Spin>) -> Result<Self, RecouplingError> {
        if j.len() != k.len() || j.len() != l.len() {
            return Err(RecouplingError::LengthMismatch(j.len(), k.len(), l.len()));
        }
        if j.len() < 2 {
            return Err(RecouplingError::TooSmall(j.len()));
        }
        Ok(ThreeNJLabels { kind, j, k, l })
    }

    pub fn from_twice(kind: ThreeNJKind, j: &[u32], k: &[u32], l: &[u32]) -> Result<Self, RecouplingError> {
        let f = |v: &[u32]| v.iter().map(|&t| Spin::from_twice(t)).collect();
        Self::new(kind, f(j), f(k), f(l))
    }

    pub fn n(&self) -> usize {
        self.j.len()
    }

    /// The `2n` node triads, in the order of the graph generators: for type I
    /// `(j_i, j_{i+1}, l_i)`, `(k_i, k_{i+1}, l_i)` for `i < n`, then the two
    /// crossing nodes `(j_1, k_n, l_n)` and `(j_n, k_1, l_n)`; for type II the
    /// last two are `(j_n, j_1, l_n)` and `(k_n, k_1, l_n)`.
    pub fn triads(&self) -> Vec<[Spin; 3]> {
        let n = self.n();
        let (j, k, l) = (&self.j, &self.k, &self.l);
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n - 1 {
            out.push([j[i], j[i + 1], l[i]]);
            out.push([k[i], k[i + 1], l[i]]);
        }
        match self.kind {
            ThreeNJKind::TypeI => {
                out.push([j[0], k[n - 1], l[n - 1]]);
                out.push([j[n - 1], k[0], l[n - 1]]);
            }
            ThreeNJKind::TypeII => {
                out.push([j[n - 1], j[0], l[n - 1]]);
                out.push([k[n - 1], k[0], l[n - 1]]);
            }
        }
        out
    }

    pub fn is_admissible(&self) -> bool {
        self.triads().iter().all(|t| admissible_twice(t[0].twice(), t[1].twice(), t[2].twice()))
    }

    /// All labels as twice-values: `j` then `k` then `l`.
    pub fn twice(&self) -> Vec<u32> {
        self.j.iter().chain(&self.k).chain(&self.l).map(|s| s.twice()).collect()
    }
}

fn sign(t: i64) -> Result<i64, RecouplingError> {
    if t % 2 != 0 {
        return Err(RecouplingError::HalfIntegerPhase(t));
    }
    Ok(phase_twice(t))
}

/// Exact 3nj symbol of type I or II by recursion on `n`.
///
/// One step sums over `x` in the `l_{n-1}` slot of the `3(n-1)j` symbol,
/// weighted by `(2x+1)` and two 6j symbols. For type I the phase is
/// `(-1)^(j1-k1-j_{n-1}+k_{n-1})` and the 6j factors are
/// `{j1 k_{n-1} x; l_{n-1} l_n k_n} {k1 j_{n-1} x; l_{n-1} l_n j_n}`; type II
/// uses `(-1)^(j1-k1+j_{n-1}-k_{n-1})` with
/// `{k1 k_{n-1} x; l_{n-1} l_n k_n} {j1 j_{n-1} x; l_{n-1} l_n j_n}`.
///
/// For `n = 2` both kinds give the 6j `{j1 j2 l1; k1 k2 l2}`. Type I recursion
/// starts from that 6j with the extra phase `(-1)^(j1+j2+k1+k2)`, which makes
/// the `n = 3` value the 9j `{l3 k1 j3; j1 l1 j2; k3 k2 l2}`. Type II starts
/// from `n = 3`, the product `{l1 l2 l3; j3 j1 j2} {l1 l2 l3; k3 k1 k2}`.
pub fn three_nj(labels: &ThreeNJLabels) -> Result<RadicalRational, RecouplingError> {
    let n = labels.n();
    if labels.k.len() != n || labels.l.len() != n {
        return Err(RecouplingError::LengthMismatch(n, labels.k.len(), labels.l.len()));
    }
    if n < 2 {
        return Err(RecouplingError::TooSmall(n));
    }
    if !labels.is_admissible() {
        return Ok(RadicalRational::zero());
    }
    let tw = |v: &[Spin]| v.iter().map(|s| s.twice()).collect::<Vec<u32>>();
    let (j, k, l) = (tw(&labels.j), tw(&labels.k), tw(&labels.l));
    if n == 2 {
        return Ok(cached_six_j([j[0], j[1], l[0], k[0], k[1], l[1]]));
    }
    match labels.kind {
        ThreeNJKind::TypeI => type_one(&j, &k, &l),
        ThreeNJKind::TypeII => type_two(&j, &k, &l),
    }
}

fn type_one(j: &[u32], k: &[u32], l: &[u32]) -> Result<RadicalRational, RecouplingError> {
    let n = j.len();
    if n == 2 {
        // the base phase is applied by the n = 3 step, where it combines with
        // that step's phase into an integer exponent
        return Ok(cached_six_j([j[0], j[1], l[0], k[0], k[1], l[1]]));
    }
    let (j1, k1) = (j[0], k[0]);
    let (jp, kp, lp) = (j[n - 2], k[n - 2], l[n - 2]);
    let (jn, kn, ln) = (j[n - 1], k[n - 1], l[n - 1]);
    let mut total = RadicalRational::zero();
    let mut sub_l = l[..n - 1].to_vec();
    for x in common_range(&[(j1, kp), (k1, jp), (lp, ln)]) {
        let f1 = cached_six_j([j1, kp, x, lp, ln, kn]);
        if f1.is_zero() {
            continue;
        }
        let f2 = cached_six_j([k1, jp, x, lp, ln, jn]);
        if f2.is_zero() {
            continue;
        }
        sub_l[n - 2] = x;
        let inner = type_one(&j[..n - 1], &k[..n - 1], &sub_l)?;
        if inner.is_zero() {
            continue;
        }
        total += (&(&inner * &f1) * &f2).scale_int(x as i64 + 1);
    }
    if total.is_zero() {
        return Ok(total);
    }
    let mut phi = j1 as i64 - k1 as i64 - jp as i64 + kp as i64;
    if n == 3 {
        phi += (j[0] + j[1] + k[0] + k[1]) as i64;
    }
    Ok(total.scale_int(sign(phi)?))
}

fn type_two(j: &[u32], k: &[u32], l: &[u32]) -> Result<RadicalRational, RecouplingError> {
    let n = j.len();
    if n == 3 {
        let a = cached_six_j([l[0], l[1], l[2], j[2], j[0], j[1]]);
        if a.is_zero() {
            return Ok(a);
        }
        let b = cached_six_j([l[0], l[1], l[2], k[2], k[0], k[1]]);
        return Ok(&a * &b);
    }
    let (j1, k1) = (j[0], k[0]);
    let (jp, kp, lp) = (j[n - 2], k[n - 2], l[n - 2]);
    let (jn, kn, ln) = (j[n - 1], k[n - 1], l[n - 1]);
    let mut total = RadicalRational::zero();
    let mut sub_l = l[..n - 1].to_vec();
    for x in common_range(&[(k1, kp), (j1, jp), (lp, ln)]) {
        let f1 = cached_six_j([k1, kp, x, lp, ln, kn]);
        if f1.is_zero() {
            continue;
        }
        let f2 = cached_six_j([j1, jp, x, lp, ln, jn]);
        if f2.is_zero() {
            continue;
        }
        sub_l[n - 2] = x;
        let inner = type_two(&j[..n - 1], &k[..n - 1], &sub_l)?;
        if inner.is_zero() {
            continue;
        }
        total += (&(&inner * &f1) * &f2).scale_int(x as i64 + 1);
    }
    if total.is_zero() {
        return Ok(total);
    }
    let psi = j1 as i64 - k1 as i64 + jp as i64 - kp as i64;
    Ok(total.scale_int(sign(psi)?))
}
