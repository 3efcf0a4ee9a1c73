use super::threenj::{ThreeNJKind, ThreeNJLabels};
use crate::exactnum::{RadicalRational, Spin};
use crate::wigner::contraction::{End, SpinNetwork};

/// The 3nj symbol written as a network of `2n` Wigner 3j symbols.
///
/// Edges are numbered `j1..jn`, `k1..kn`, `l1..ln`. Nodes list their edges as
/// (incoming perimeter, outgoing perimeter, ray).
///
/// Type I: nodes `T0..T(n-1)`, `B0..B(n-1)`; the perimeter runs
/// `T0 -j1-> T1 -> ... -> T(n-1) -jn-> B0 -k1-> B1 -> ... -> B(n-1) -kn-> T0`
/// and the rays run `Ti -li-> Bi` with `ln` joining `T0` and `B0`. The edge
/// `jn` is reversed for odd `n` and `kn` for even `n`.
///
/// Type II: two cycles `Jn -j1-> J1 -j2-> ... -> Jn` and likewise for `K`,
/// with rungs `Ji -li-> Ki`. For even `n` the edges `j1` and `k1` are
/// reversed.
///
/// With these orientations the full contraction equals [`three_nj`](super::three_nj)
/// exactly.
pub fn magnetic_network(labels: &ThreeNJLabels) -> SpinNetwork {
    let n = labels.n();
    let spins: Vec<Spin> = labels.j.iter().chain(&labels.k).chain(&labels.l).copied().collect();
    let (je, ke, le) = (|i: usize| i - 1, |i: usize| n + i - 1, |i: usize| 2 * n + i - 1);
    let mut tail = vec![0usize; 3 * n];
    let mut head = vec![0usize; 3 * n];
    let mut reversed = vec![false; 3 * n];
    match labels.kind {
        ThreeNJKind::TypeI => {
            // T_i = i, B_i = n + i
            for i in 1..=n {
                tail[je(i)] = i - 1;
                head[je(i)] = if i == n { n } else { i };
                tail[ke(i)] = n + i - 1;
                head[ke(i)] = if i == n { 0 } else { n + i };
                let t = if i == n { 0 } else { i };
                tail[le(i)] = t;
                head[le(i)] = n + t;
            }
            if n % 2 == 1 {
                reversed[je(n)] = true;
            } else {
                reversed[ke(n)] = true;
            }
        }
        ThreeNJKind::TypeII => {
            // J_i = i - 1, K_i = n + i - 1
            for i in 1..=n {
                let prev = if i == 1 { n } else { i - 1 };
                tail[je(i)] = prev - 1;
                head[je(i)] = i - 1;
                tail[ke(i)] = n + prev - 1;
                head[ke(i)] = n + i - 1;
                tail[le(i)] = i - 1;
                head[le(i)] = n + i - 1;
            }
            if n.is_multiple_of(2) {
                reversed[je(1)] = true;
                reversed[ke(1)] = true;
            }
        }
    }
    let mut nodes = Vec::with_capacity(2 * n);
    for v in 0..2 * n {
        let pin = (0..2 * n).find(|&e| head[e] == v).expect("perimeter in");
        let pout = (0..2 * n).find(|&e| tail[e] == v).expect("perimeter out");
        let ray = (2 * n..3 * n).find(|&e| tail[e] == v || head[e] == v).expect("ray");
        let end = |e: usize| {
            let is_tail = tail[e] == v;
            if is_tail != reversed[e] {
                End::Tail
            } else {
                End::Head
            }
        };
        nodes.push([(pin, end(pin)), (pout, end(pout)), (ray, end(ray))]);
    }
    SpinNetwork::new(spins, nodes).expect("every edge has two ends")
}

/// Brute-force value of the 3nj symbol: the network of
/// [`magnetic_network`] summed over all magnetic quantum numbers.
pub fn magnetic_contraction(labels: &ThreeNJLabels) -> RadicalRational {
    if labels.n() == 2 {
        let t = labels.twice();
        return crate::wigner::contraction::contract_six_j([t[0], t[1], t[4], t[2], t[3], t[5]]);
    }
    magnetic_network(labels).contract()
}
