use serde::{Deserialize, Serialize};

use crate::recoupling::NineJLabels;

/// Positions of the large entries, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LargePattern {
    /// `{a B C; D e F; G H i}`.
    SixThree,
    /// `{A b C; d e f; G h I}`.
    FourFive,
}

impl LargePattern {
    pub fn mask(self) -> [bool; 9] {
        match self {
            LargePattern::SixThree => [false, true, true, true, false, true, true, true, false],
            LargePattern::FourFive => [true, false, true, false, false, false, true, false, true],
        }
    }
}

const PERMS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], false),
    ([1, 2, 0], false),
    ([2, 0, 1], false),
    ([1, 0, 2], true),
    ([0, 2, 1], true),
    ([2, 1, 0], true),
];

/// The 72 images of a 9j under row and column permutations and transposition,
/// each as (source index for every position, whether the sign may flip).
fn index_images() -> Vec<([usize; 9], bool)> {
    let mut out = Vec::with_capacity(72);
    for transpose in [false, true] {
        for (rp, rodd) in PERMS {
            for (cp, codd) in PERMS {
                let mut idx = [0usize; 9];
                for r in 0..3 {
                    for c in 0..3 {
                        let (sr, sc) = (rp[r], cp[c]);
                        idx[3 * r + c] = if transpose { 3 * sc + sr } else { 3 * sr + sc };
                    }
                }
                out.push((idx, rodd ^ codd));
            }
        }
    }
    out
}

/// Every symmetry image with its sign relative to the original.
pub fn nine_j_images(l: &NineJLabels) -> Vec<(NineJLabels, i8)> {
    let t = l.twice();
    let flip = if l.twice_sum().is_multiple_of(4) { 1 } else { -1 };
    index_images()
        .into_iter()
        .map(|(idx, odd)| (NineJLabels::from_twice(idx.map(|i| t[i])), if odd { flip } else { 1 }))
        .collect()
}

/// Moves the large entries named by `large` (row-major) into `pattern`.
/// Returns the rearranged symbol and the sign `s` with original = `s` times image.
pub fn to_pattern(l: &NineJLabels, large: [bool; 9], pattern: LargePattern) -> Option<(NineJLabels, i8)> {
    let t = l.twice();
    let flip = if l.twice_sum().is_multiple_of(4) { 1 } else { -1 };
    let want = pattern.mask();
    index_images()
        .into_iter()
        .find(|(idx, _)| idx.map(|i| large[i]) == want)
        .map(|(idx, odd)| (NineJLabels::from_twice(idx.map(|i| t[i])), if odd { flip } else { 1 }))
}
