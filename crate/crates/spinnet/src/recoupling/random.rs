//! Random admissible inputs for the identity checks.

use rand::Rng;

use super::identities::LambdaArgs;
use super::ninej::NineJLabels;
use super::threenj::{ThreeNJKind, ThreeNJLabels};
use crate::exactnum::Spin;

/// Uniform choice of `x` admissible with both `(a b x)` pairs and `x <= max`.
fn pick<R: Rng>(rng: &mut R, pairs: &[(u32, u32)], max: u32) -> Option<u32> {
    let lo = pairs.iter().map(|&(a, b)| a.abs_diff(b)).max()?;
    let hi = pairs.iter().map(|&(a, b)| a + b).min()?.min(max);
    let parity = (pairs[0].0 + pairs[0].1) % 2;
    if pairs.iter().any(|&(a, b)| (a + b) % 2 != parity) {
        return None;
    }
    let lo = lo + (lo % 2 != parity) as u32;
    if lo > hi {
        return None;
    }
    Some(lo + 2 * rng.gen_range(0..=(hi - lo) / 2))
}

/// `[a, b, c, d, e, f, p, q, r]` with every triad of both sides of the
/// Biedenharn–Elliott identity admissible.
pub fn random_be_spins<R: Rng>(rng: &mut R, max: u32) -> [Spin; 9] {
    loop {
        let mut go = || -> Option<[u32; 9]> {
            let (p, q) = (rng.gen_range(0..=max), rng.gen_range(0..=max));
            let r = pick(rng, &[(p, q)], max)?;
            let a = rng.gen_range(0..=max);
            let d = pick(rng, &[(p, a)], max)?;
            let e = pick(rng, &[(q, d), (a, r)], max)?;
            let b = rng.gen_range(0..=max);
            let c = pick(rng, &[(p, b)], max)?;
            let f = pick(rng, &[(q, c), (b, r)], max)?;
            Some([a, b, c, d, e, f, p, q, r])
        };
        if let Some(t) = go() {
            return t.map(Spin::from_twice);
        }
    }
}

/// A 9j with all six triads admissible, entries at most `max`.
pub fn random_nine_j<R: Rng>(rng: &mut R, max: u32) -> NineJLabels {
    loop {
        let mut go = || -> Option<[u32; 9]> {
            let (a, b, d, e) =
                (rng.gen_range(0..=max), rng.gen_range(0..=max), rng.gen_range(0..=max), rng.gen_range(0..=max));
            let c = pick(rng, &[(a, b)], max)?;
            let g = pick(rng, &[(a, d)], max)?;
            let f = pick(rng, &[(d, e)], max)?;
            let h = pick(rng, &[(b, e)], max)?;
            let i = pick(rng, &[(g, h), (c, f)], max)?;
            Some([a, b, c, d, e, f, g, h, i])
        };
        if let Some(t) = go() {
            return NineJLabels::from_twice(t);
        }
    }
}

/// Arguments for the λ-exchange check with the given twice-λ. The 9j
/// `{a b x0; d e f; g h j}` is admissible for some `x0` coupled to `c` by λ.
pub fn random_lambda_args<R: Rng>(rng: &mut R, twice_lambda: u32, max: u32) -> LambdaArgs {
    loop {
        let [a, b, x0, d, e, f, g, h, j] = random_nine_j(rng, max).twice();
        let Some(ap) = pick(rng, &[(a, twice_lambda)], max) else { continue };
        let Some(c) = pick(rng, &[(b, ap), (x0, twice_lambda)], max) else { continue };
        let Some(fp) = pick(rng, &[(f, twice_lambda), (j, c)], max) else { continue };
        let s = Spin::from_twice;
        return LambdaArgs {
            a: s(a),
            b: s(b),
            c: s(c),
            d: s(d),
            e: s(e),
            f: s(f),
            g: s(g),
            h: s(h),
            j: s(j),
            lambda: s(twice_lambda),
            a_prime: s(ap),
            f_prime: s(fp),
        };
    }
}

/// Labels with every triad admissible, by rejection.
pub fn random_three_nj<R: Rng>(rng: &mut R, kind: ThreeNJKind, n: usize, max: u32) -> ThreeNJLabels {
    loop {
        let mut draw = || (0..n).map(|_| rng.gen_range(0..=max)).collect::<Vec<_>>();
        let (j, k, l) = (draw(), draw(), draw());
        let labels = ThreeNJLabels::from_twice(kind, &j, &k, &l).expect("equal lengths");
        if labels.is_admissible() {
            return labels;
        }
    }
}
