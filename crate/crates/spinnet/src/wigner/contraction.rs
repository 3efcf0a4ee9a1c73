//! Sums of products of 3j symbols over all magnetic quantum numbers.

use std::collections::HashMap;

use super::threej::three_j;
use crate::exactnum::{phase_twice, RadicalRational, Spin};

/// Which end of an edge a node sits on. The tail enters its 3j with `+m`,
/// the head with `-m`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum End {
    Tail,
    Head,
}

/// A closed network of 3j symbols: every edge joins a tail and a head, and
/// contributes the phase `(-1)^(j-m)`.
#[derive(Clone, Debug)]
pub struct SpinNetwork {
    spins: Vec<u32>,
    nodes: Vec<[(usize, End); 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetworkError {
    #[error("edge {0} does not have exactly one tail and one head")]
    BadEdge(usize),
    #[error("node refers to missing edge {0}")]
    MissingEdge(usize),
}

impl SpinNetwork {
    pub fn new(spins: Vec<Spin>, nodes: Vec<[(usize, End); 3]>) -> Result<Self, NetworkError> {
        let mut tails = vec![0; spins.len()];
        let mut heads = vec![0; spins.len()];
        for node in &nodes {
            for &(e, end) in node {
                if e >= spins.len() {
                    return Err(NetworkError::MissingEdge(e));
                }
                match end {
                    End::Tail => tails[e] += 1,
                    End::Head => heads[e] += 1,
                }
            }
        }
        if let Some(e) = (0..spins.len()).find(|&e| tails[e] != 1 || heads[e] != 1) {
            return Err(NetworkError::BadEdge(e));
        }
        Ok(SpinNetwork { spins: spins.iter().map(|s| s.twice()).collect(), nodes })
    }

    pub fn edge_count(&self) -> usize {
        self.spins.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Exhaustive contraction. Cost grows like `(2j+1)^(E-V+1)`.
    pub fn contract(&self) -> RadicalRational {
        let order = self.edge_order();
        // nodes become complete once the last of their edges is assigned
        let mut pos = vec![0usize; self.spins.len()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let mut closes: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
        for (n, node) in self.nodes.iter().enumerate() {
            let last = node.iter().map(|&(e, _)| pos[e]).max().unwrap();
            closes[last].push(n);
        }
        let mut ctx = Ctx {
            net: self,
            order: &order,
            closes: &closes,
            m: vec![0; self.spins.len()],
            cache: HashMap::new(),
            total: RadicalRational::zero(),
        };
        ctx.descend(0, RadicalRational::one());
        ctx.total
    }

    /// Edges in breadth-first order from node 0 so nodes close early.
    fn edge_order(&self) -> Vec<usize> {
        let mut seen_edge = vec![false; self.spins.len()];
        let mut seen_node = vec![false; self.nodes.len()];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.nodes.len() {
            if seen_node[start] {
                continue;
            }
            seen_node[start] = true;
            queue.push_back(start);
            while let Some(n) = queue.pop_front() {
                for &(e, _) in &self.nodes[n] {
                    if !seen_edge[e] {
                        seen_edge[e] = true;
                        order.push(e);
                    }
                }
                for (k, node) in self.nodes.iter().enumerate() {
                    if !seen_node[k] && node.iter().any(|&(e, _)| self.nodes[n].iter().any(|&(f, _)| f == e)) {
                        seen_node[k] = true;
                        queue.push_back(k);
                    }
                }
            }
        }
        order
    }
}

struct Ctx<'a> {
    net: &'a SpinNetwork,
    order: &'a [usize],
    closes: &'a [Vec<usize>],
    m: Vec<i32>,
    cache: HashMap<([u32; 3], [i32; 3]), RadicalRational>,
    total: RadicalRational,
}

impl Ctx<'_> {
    fn node_value(&mut self, n: usize) -> Option<RadicalRational> {
        let node = self.net.nodes[n];
        let mut j = [0u32; 3];
        let mut m = [0i32; 3];
        for (i, &(e, end)) in node.iter().enumerate() {
            j[i] = self.net.spins[e];
            m[i] = match end {
                End::Tail => self.m[e],
                End::Head => -self.m[e],
            };
        }
        if m.iter().sum::<i32>() != 0 {
            return None;
        }
        let v = self.cache.entry((j, m)).or_insert_with(|| three_j(j, m));
        if v.is_zero() {
            None
        } else {
            Some(v.clone())
        }
    }

    fn descend(&mut self, depth: usize, partial: RadicalRational) {
        if depth == self.order.len() {
            let t: i64 = self.net.spins.iter().zip(&self.m).map(|(&j, &m)| j as i64 - m as i64).sum();
            let v = if phase_twice(t) < 0 { -partial } else { partial };
            self.total += v;
            return;
        }
        let e = self.order[depth];
        let j = self.net.spins[e] as i32;
        for k in 0..=j {
            self.m[e] = -j + 2 * k;
            let mut p = partial.clone();
            let mut ok = true;
            for idx in 0..self.closes[depth].len() {
                let n = self.closes[depth][idx];
                match self.node_value(n) {
                    Some(v) => p = &p * &v,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.descend(depth + 1, p);
            }
        }
    }
}

/// The 6j symbol as a contraction of four 3j symbols.
pub fn contract_six_j(t: [u32; 6]) -> RadicalRational {
    use End::*;
    let spins = t.map(Spin::from_twice).to_vec();
    let nodes = vec![
        [(0, Head), (1, Head), (2, Head)],
        [(0, Tail), (4, Head), (5, Tail)],
        [(3, Tail), (1, Tail), (5, Head)],
        [(3, Head), (4, Tail), (2, Tail)],
    ];
    SpinNetwork::new(spins, nodes).expect("tetrahedron").contract()
}

/// The 9j symbol `{a b c; d e f; g h i}` as the sum over all projections of
/// the product of the three row 3j symbols and the three column 3j symbols.
pub fn contract_nine_j(t: [u32; 9]) -> RadicalRational {
    let [a, b, c, d, e, f, g, h, i] = t;
    let mut cache: HashMap<([u32; 3], [i32; 3]), RadicalRational> = HashMap::new();
    let mut tj = |j: [u32; 3], m: [i32; 3]| -> Option<RadicalRational> {
        let v = cache.entry((j, m)).or_insert_with(|| three_j(j, m));
        (!v.is_zero()).then(|| v.clone())
    };
    let proj = |s: u32| Spin::from_twice(s).projections().collect::<Vec<_>>();
    let ok = |s: u32, m: i32| m.unsigned_abs() <= s;
    let mut total = RadicalRational::zero();
    for &ma in &proj(a) {
        for &mb in &proj(b) {
            let mc = -ma - mb;
            if !ok(c, mc) {
                continue;
            }
            let Some(r1) = tj([a, b, c], [ma, mb, mc]) else { continue };
            for &md in &proj(d) {
                let mg = -ma - md;
                if !ok(g, mg) {
                    continue;
                }
                let Some(c1) = tj([a, d, g], [ma, md, mg]) else { continue };
                for &me in &proj(e) {
                    let mf = -md - me;
                    let mh = -mb - me;
                    let mi = -mc - mf;
                    if !ok(f, mf) || !ok(h, mh) || !ok(i, mi) || mg + mh + mi != 0 {
                        continue;
                    }
                    let rest = [
                        tj([d, e, f], [md, me, mf]),
                        tj([g, h, i], [mg, mh, mi]),
                        tj([b, e, h], [mb, me, mh]),
                        tj([c, f, i], [mc, mf, mi]),
                    ];
                    if rest.iter().any(|v| v.is_none()) {
                        continue;
                    }
                    let mut p = &r1 * &c1;
                    for v in rest.into_iter().flatten() {
                        p = &p * &v;
                    }
                    total += p;
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unbalanced_edges() {
        let spins = vec![Spin::from_twice(2); 3];
        let nodes = vec![[(0, End::Tail), (1, End::Tail), (2, End::Tail)]];
        assert!(matches!(SpinNetwork::new(spins, nodes), Err(NetworkError::BadEdge(0))));
    }

    #[test]
    fn theta_network_is_one() {
        // two 3j joined on all three edges: sum_m (3j)^2 times phases = 1 for
        // admissible triads when one node takes the reversed projections
        let spins = [2u32, 2, 2].map(Spin::from_twice).to_vec();
        let nodes =
            vec![[(0, End::Tail), (1, End::Tail), (2, End::Tail)], [(0, End::Head), (1, End::Head), (2, End::Head)]];
        let v = SpinNetwork::new(spins, nodes).unwrap().contract();
        assert_eq!(v, RadicalRational::one());
    }

    #[test]
    fn six_j_agrees_with_racah_sum() {
        use crate::wigner::six_j;
        for t in [[2, 2, 2, 2, 2, 2], [1, 1, 2, 1, 1, 2], [3, 2, 1, 2, 3, 4], [4, 4, 4, 2, 2, 2]] {
            assert_eq!(contract_six_j(t), six_j(t), "{t:?}");
        }
    }

    #[test]
    fn nine_j_all_ones() {
        // {1 1 1; 1 1 1; 1 1 1} = 0 by the odd-permutation symmetry
        assert!(contract_nine_j([2; 9]).is_zero());
        // {1 1 0; 1 1 0; 0 0 0} = {1 1 0; 1 1 0} = 1/3
        let v = contract_nine_j([2, 2, 0, 2, 2, 0, 0, 0, 0]);
        assert_eq!(v.as_rational().unwrap().to_string(), "1/3");
    }
}
