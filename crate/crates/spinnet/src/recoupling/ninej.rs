use serde::{Deserialize, Serialize};

use super::memo::cached_six_j;
use crate::exactnum::{admissible_twice, RadicalRational, Spin};
use crate::wigner::six_j;

/// A 9j symbol `{a b c; d e f; g h i}`, stored row-major.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NineJLabels(pub [[Spin; 3]; 3]);

impl NineJLabels {
    pub fn from_twice(t: [u32; 9]) -> Self {
        let s = t.map(Spin::from_twice);
        NineJLabels([[s[0], s[1], s[2]], [s[3], s[4], s[5]], [s[6], s[7], s[8]]])
    }

    pub fn twice(&self) -> [u32; 9] {
        let r = &self.0;
        [r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]].map(|s| s.twice())
    }

    pub fn get(&self, row: usize, col: usize) -> Spin {
        self.0[row][col]
    }

    /// Rows then columns.
    pub fn triads(&self) -> [[u32; 3]; 6] {
        let t = self.twice();
        [
            [t[0], t[1], t[2]],
            [t[3], t[4], t[5]],
            [t[6], t[7], t[8]],
            [t[0], t[3], t[6]],
            [t[1], t[4], t[7]],
            [t[2], t[5], t[8]],
        ]
    }

    pub fn is_admissible(&self) -> bool {
        self.triads().iter().all(|t| admissible_twice(t[0], t[1], t[2]))
    }

    pub fn transpose(&self) -> Self {
        let r = &self.0;
        NineJLabels([[r[0][0], r[1][0], r[2][0]], [r[0][1], r[1][1], r[2][1]], [r[0][2], r[1][2], r[2][2]]])
    }

    /// Reorders rows by `p` (new row `i` is old row `p[i]`).
    pub fn permute_rows(&self, p: [usize; 3]) -> Self {
        NineJLabels([self.0[p[0]], self.0[p[1]], self.0[p[2]]])
    }

    pub fn permute_cols(&self, p: [usize; 3]) -> Self {
        self.transpose().permute_rows(p).transpose()
    }

    /// Sum of all nine twice-values.
    pub fn twice_sum(&self) -> u32 {
        self.twice().iter().sum()
    }
}

/// `x` values allowed by both triangles `(p q x)` and `(r s x)`, twice-valued.
pub(crate) fn common_range(pairs: &[(u32, u32)]) -> impl Iterator<Item = u32> {
    let lo = pairs.iter().map(|&(p, q)| p.abs_diff(q)).max().unwrap_or(0);
    let hi = pairs.iter().map(|&(p, q)| p + q).min().unwrap_or(0);
    let parity_ok = pairs.iter().all(|&(p, q)| (p + q) % 2 == (pairs[0].0 + pairs[0].1) % 2);
    let lo = if parity_ok { lo } else { hi + 1 };
    (lo..=hi).step_by(2)
}

/// Exact 9j symbol as a single sum over three 6j symbols:
/// `sum_x (-1)^(2x) (2x+1) {a b c; f i x} {d e f; b x h} {g h i; x a d}`.
pub fn nine_j(labels: &NineJLabels) -> RadicalRational {
    nine_j_via(labels, cached_six_j)
}

/// [`nine_j`] without touching the global 6j memo.
pub fn nine_j_uncached(labels: &NineJLabels) -> RadicalRational {
    nine_j_via(labels, six_j)
}

fn nine_j_via(labels: &NineJLabels, six: impl Fn([u32; 6]) -> RadicalRational) -> RadicalRational {
    if !labels.is_admissible() {
        return RadicalRational::zero();
    }
    let [a, b, c, d, e, f, g, h, i] = labels.twice();
    let mut total = RadicalRational::zero();
    for x in common_range(&[(a, i), (b, f), (d, h)]) {
        let s1 = six([a, b, c, f, i, x]);
        if s1.is_zero() {
            continue;
        }
        let s2 = six([d, e, f, b, x, h]);
        if s2.is_zero() {
            continue;
        }
        let s3 = six([g, h, i, x, a, d]);
        if s3.is_zero() {
            continue;
        }
        let w = (x as i64 + 1) * if x % 2 == 1 { -1 } else { 1 };
        total += (&(&s1 * &s2) * &s3).scale_int(w);
    }
    total
}

/// Shorthand for [`nine_j`] on twice-values.
pub fn nine_j_twice(t: [u32; 9]) -> RadicalRational {
    nine_j(&NineJLabels::from_twice(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wigner::contraction::contract_nine_j;

    #[test]
    fn matches_contraction_on_samples() {
        for t in [
            [2, 2, 0, 2, 2, 0, 0, 0, 0],
            [2, 2, 2, 2, 2, 2, 2, 2, 2],
            [1, 1, 2, 1, 1, 2, 2, 2, 4],
            [2, 1, 3, 1, 2, 3, 3, 3, 2],
            [4, 2, 2, 2, 3, 1, 2, 1, 1],
        ] {
            assert_eq!(nine_j_twice(t), contract_nine_j(t), "{t:?}");
        }
    }

    #[test]
    fn inadmissible_is_zero() {
        assert!(nine_j_twice([2, 2, 6, 2, 2, 2, 2, 2, 2]).is_zero());
    }

    #[test]
    fn transposition_invariance() {
        let l = NineJLabels::from_twice([2, 1, 3, 1, 2, 3, 3, 3, 2]);
        assert_eq!(nine_j(&l), nine_j(&l.transpose()));
    }

    #[test]
    fn ranges() {
        assert_eq!(common_range(&[(2, 2), (1, 3)]).collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!(common_range(&[(2, 2), (1, 2)]).count(), 0);
    }
}
