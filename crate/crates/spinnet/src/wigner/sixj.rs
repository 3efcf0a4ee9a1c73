use serde::{Deserialize, Serialize};

use super::sum::{alternating_factorial_sum, summation_range, DenFactorial};
use super::threej::add_triangle;
use crate::exactnum::{admissible_twice, factorial, PrimePowers, RadicalRational, Spin};

/// Arguments of `{j1 j2 j3; j4 j5 j6}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SixJArgs(pub [Spin; 6]);

impl SixJArgs {
    pub fn from_twice(t: [u32; 6]) -> Self {
        SixJArgs(t.map(Spin::from_twice))
    }

    pub fn twice(&self) -> [u32; 6] {
        self.0.map(|s| s.twice())
    }

    /// The four triads `(j1 j2 j3) (j1 j5 j6) (j4 j2 j6) (j4 j5 j3)`.
    pub fn triads(&self) -> [[u32; 3]; 4] {
        let [a, b, c, d, e, f] = self.twice();
        [[a, b, c], [a, e, f], [d, b, f], [d, e, c]]
    }

    pub fn is_admissible(&self) -> bool {
        self.triads().iter().all(|t| admissible_twice(t[0], t[1], t[2]))
    }
}

/// The 24 argument orders related by tetrahedral symmetry.
pub fn six_j_symmetries(t: [u32; 6]) -> impl Iterator<Item = [u32; 6]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.into_iter().flat_map(move |p| {
        let cols = [(t[p[0]], t[p[0] + 3]), (t[p[1]], t[p[1] + 3]), (t[p[2]], t[p[2] + 3])];
        // swap upper and lower entries in an even number of columns
        [[false, false, false], [true, true, false], [true, false, true], [false, true, true]].into_iter().map(
            move |flip| {
                let mut out = [0u32; 6];
                for i in 0..3 {
                    let (u, l) = cols[i];
                    let (u, l) = if flip[i] { (l, u) } else { (u, l) };
                    out[i] = u;
                    out[i + 3] = l;
                }
                out
            },
        )
    })
}

/// Lexicographically smallest symmetric image, used as a memo key.
pub fn six_j_canonical(t: [u32; 6]) -> [u32; 6] {
    six_j_symmetries(t).min().unwrap()
}

/// Exact 6j symbol by the Racah single sum: one radical prefactor built from
/// the four triangle coefficients times a rational alternating sum.
pub fn wigner_6j(args: &SixJArgs) -> RadicalRational {
    if !args.is_admissible() {
        return RadicalRational::zero();
    }
    let tw = args.twice();
    let [a, b, c, d, e, f] = tw.map(|x| x as i64);
    let alpha = [(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2];
    let beta = [(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2];

    let top = *alpha.iter().max().unwrap() + 1;
    let mut pp = PrimePowers::new(top as u64);
    for t in args.triads() {
        add_triangle(&mut pp, t[0], t[1], t[2]);
    }

    let mut dens: Vec<DenFactorial> = alpha.iter().map(|&al| DenFactorial { c: -al, s: 1 }).collect();
    dens.extend(beta.iter().map(|&be| DenFactorial { c: be, s: -1 }));
    let Some((lo, hi)) = summation_range(0, i64::MAX, &dens) else {
        return RadicalRational::zero();
    };
    let s = alternating_factorial_sum(lo, hi, &dens, |t| factorial(t as usize + 1).as_ref().clone());
    pp.signed_sqrt().scale(&s)
}

/// Shorthand for [`wigner_6j`] on twice-values.
pub fn six_j(t: [u32; 6]) -> RadicalRational {
    wigner_6j(&SixJArgs::from_twice(t))
}
