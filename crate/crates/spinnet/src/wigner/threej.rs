use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::sum::{alternating_factorial_sum, summation_range, DenFactorial};
use crate::exactnum::{admissible_twice, phase_twice, PrimePowers, RadicalRational, Spin};

/// Arguments of `(j1 j2 j3; m1 m2 m3)`, projections twice-valued.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeJArgs {
    pub j: [Spin; 3],
    pub m: [i32; 3],
}

impl ThreeJArgs {
    pub fn new(j: [Spin; 3], m: [i32; 3]) -> Self {
        ThreeJArgs { j, m }
    }

    pub fn from_twice(j: [u32; 3], m: [i32; 3]) -> Self {
        ThreeJArgs { j: j.map(Spin::from_twice), m }
    }

    /// All selection rules: projection bounds and parities, `m1+m2+m3 = 0`,
    /// and the triangle condition.
    pub fn selection_rules_hold(&self) -> bool {
        let [a, b, c] = self.j.map(|s| s.twice() as i32);
        let [x, y, z] = self.m;
        x + y + z == 0
            && x.abs() <= a
            && y.abs() <= b
            && z.abs() <= c
            && (a + x) % 2 == 0
            && (b + y) % 2 == 0
            && (c + z) % 2 == 0
            && admissible_twice(a as u32, b as u32, c as u32)
    }
}

/// Adds `Δ(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!` (twice-valued input).
pub(crate) fn add_triangle(pp: &mut PrimePowers, a: u32, b: u32, c: u32) {
    let (a, b, c) = (a as u64, b as u64, c as u64);
    pp.add_factorial((a + b - c) / 2, 1);
    pp.add_factorial((a + c - b) / 2, 1);
    pp.add_factorial((b + c - a) / 2, 1);
    pp.add_factorial((a + b + c) / 2 + 1, -1);
}

/// Exact Wigner 3j symbol by the Racah single sum.
pub fn wigner_3j(args: &ThreeJArgs) -> RadicalRational {
    if !args.selection_rules_hold() {
        return RadicalRational::zero();
    }
    let [j1, j2, j3] = args.j.map(|s| s.twice() as i64);
    let [m1, m2, m3] = args.m.map(|m| m as i64);

    let mut pp = PrimePowers::new(((j1 + j2 + j3) / 2 + 1) as u64);
    add_triangle(&mut pp, j1 as u32, j2 as u32, j3 as u32);
    for (j, m) in [(j1, m1), (j2, m2), (j3, m3)] {
        pp.add_factorial(((j + m) / 2) as u64, 1);
        pp.add_factorial(((j - m) / 2) as u64, 1);
    }
    if phase_twice(j1 - j2 - m3) < 0 {
        pp.negate();
    }

    let dens = [
        DenFactorial { c: 0, s: 1 },
        DenFactorial { c: (j1 + j2 - j3) / 2, s: -1 },
        DenFactorial { c: (j1 - m1) / 2, s: -1 },
        DenFactorial { c: (j2 + m2) / 2, s: -1 },
        DenFactorial { c: (j3 - j2 + m1) / 2, s: 1 },
        DenFactorial { c: (j3 - j1 - m2) / 2, s: 1 },
    ];
    let Some((lo, hi)) = summation_range(0, i64::MAX, &dens) else {
        return RadicalRational::zero();
    };
    let s = alternating_factorial_sum(lo, hi, &dens, |_| BigUint::one());
    pp.signed_sqrt().scale(&s)
}

/// Shorthand for [`wigner_3j`] on twice-values.
pub fn three_j(j: [u32; 3], m: [i32; 3]) -> RadicalRational {
    wigner_3j(&ThreeJArgs::from_twice(j, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rr(q: (i64, i64), r: u64) -> RadicalRational {
        RadicalRational::radical_normalize(&BigRational::new(q.0.into(), q.1.into()), r)
    }

    #[test]
    fn singlet_coupling() {
        // (1 1 0; 1 -1 0) = (-1)^(1-1)/sqrt 3 ... with j - m = 0 the phase is +, so
        // the m = 1 entry is 1/sqrt 3 and m = 0 gives -1/sqrt 3
        assert_eq!(three_j([2, 2, 0], [2, -2, 0]), rr((1, 3), 3));
        assert_eq!(three_j([2, 2, 0], [0, 0, 0]), rr((-1, 3), 3));
        assert_eq!(three_j([1, 1, 0], [1, -1, 0]), rr((1, 2), 2));
    }

    #[test]
    fn selection_rule_zero() {
        assert!(three_j([2, 2, 2], [2, 0, 0]).is_zero());
        assert!(three_j([2, 2, 6], [0, 0, 0]).is_zero());
        assert!(three_j([2, 2, 2], [0, 0, 0]).is_zero());
    }

    #[test]
    fn one_one_one() {
        // (1 1 1; 1 -1 0) = 1/sqrt 6
        assert_eq!(three_j([2, 2, 2], [2, -2, 0]), rr((1, 6), 6));
    }
}
