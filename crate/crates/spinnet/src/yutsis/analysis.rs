use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::graph::{YutsisError, YutsisGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingData {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub chi: i64,
}

/// `V - E + F` from the carried face list.
pub fn euler_characteristic(g: &YutsisGraph) -> Result<EmbeddingData, YutsisError> {
    let faces = g.faces.as_ref().ok_or(YutsisError::MissingFaces)?;
    let (v, e, f) = (g.node_count(), g.edge_count(), faces.len());
    Ok(EmbeddingData { v, e, f, chi: v as i64 - e as i64 + f as i64 })
}

/// Length of the shortest cycle; loops count 1 and parallel edges 2.
pub fn girth(g: &YutsisGraph) -> Option<usize> {
    let inc = g.incidence();
    let mut best: Option<usize> = None;
    for s in 0..g.node_count() {
        let mut dist = vec![usize::MAX; g.node_count()];
        let mut via = vec![usize::MAX; g.node_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &inc[u] {
                let edge = &g.edges[e];
                if edge.u == edge.v {
                    best = Some(1);
                    continue;
                }
                if e == via[u] {
                    continue;
                }
                let w = edge.other(u);
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A Hamiltonian cycle as a list of edge indices, found by backtracking from
/// node 0 in index order.
pub fn hamiltonian_cycle(g: &YutsisGraph) -> Option<Vec<usize>> {
    let n = g.node_count();
    if n == 0 {
        return None;
    }
    let inc = g.incidence();
    let mut on_path = vec![false; n];
    on_path[0] = true;
    let mut path = Vec::with_capacity(n);
    fn extend(
        g: &YutsisGraph,
        inc: &[Vec<usize>],
        at: usize,
        depth: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
    ) -> bool {
        let n = on_path.len();
        if depth == n {
            return inc[at].iter().any(|&e| {
                let closes = g.edges[e].other(at) == 0 && (n > 2 || !path.contains(&e));
                if closes {
                    path.push(e);
                }
                closes
            });
        }
        for &e in &inc[at] {
            let w = g.edges[e].other(at);
            if on_path[w] {
                continue;
            }
            // an unvisited neighbour of `at` other than `w` must keep an exit
            let stranded = inc[at].iter().any(|&f| {
                let z = g.edges[f].other(at);
                z != w
                    && !on_path[z]
                    && inc[z].iter().filter(|&&h| !on_path[g.edges[h].other(z)] || g.edges[h].other(z) == 0).count() < 2
            });
            if stranded {
                continue;
            }
            on_path[w] = true;
            path.push(e);
            if extend(g, inc, w, depth + 1, on_path, path) {
                return true;
            }
            path.pop();
            on_path[w] = false;
        }
        false
    }
    extend(g, &inc, 0, 1, &mut on_path, &mut path).then_some(path)
}

/// For a Hamiltonian cycle, each chord together with the shorter of the two
/// arcs it cuts off.
pub fn chord_cycles(g: &YutsisGraph, cycle: &[usize]) -> Option<Vec<Vec<usize>>> {
    let walk = g.face_walk(cycle)?;
    let m = walk.len();
    let mut pos = vec![usize::MAX; g.node_count()];
    for (i, &x) in walk.iter().enumerate() {
        pos[x] = i;
    }
    let mut out = Vec::new();
    for (e, edge) in g.edges.iter().enumerate() {
        if cycle.contains(&e) {
            continue;
        }
        let (a, b) = (pos[edge.u], pos[edge.v]);
        let (lo, hi) = (a.min(b), a.max(b));
        let inner: Vec<usize> = (lo..hi).map(|i| cycle[i]).collect();
        let outer: Vec<usize> = (hi..lo + m).map(|i| cycle[i % m]).collect();
        let mut c = if inner.len() <= outer.len() { inner } else { outer };
        c.push(e);
        out.push(c);
    }
    Some(out)
}

fn components_without(g: &YutsisGraph, removed: &[usize]) -> Vec<usize> {
    let n = g.node_count();
    let mut comp = vec![usize::MAX; n];
    let inc = g.incidence();
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &inc[u] {
                if removed.contains(&e) {
                    continue;
                }
                let w = g.edges[e].other(u);
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn is_nontrivial_cut(g: &YutsisGraph, triple: &[usize]) -> bool {
    let comp = components_without(g, triple);
    let parts = comp.iter().copied().max().map_or(0, |m| m + 1);
    if parts != 2 {
        return false;
    }
    let side = comp.iter().filter(|&&c| c == 0).count();
    side >= 2 && comp.len() - side >= 2
}

/// Every 3-edge cut splitting the graph into two parts of at least two
/// nodes each, as sorted edge-index triples.
pub fn all_cuts3(g: &YutsisGraph) -> Vec<[usize; 3]> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if is_nontrivial_cut(g, &[a, b, c]) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn nontrivial_cut3(g: &YutsisGraph) -> Option<[usize; 3]> {
    let m = g.edge_count();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if is_nontrivial_cut(g, &[a, b, c]) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn girths() {
        assert_eq!(girth(&tetrahedron()), Some(3));
        assert_eq!(girth(&prism_type2(3).unwrap()), Some(3));
        assert_eq!(girth(&cartwheel_type1(3).unwrap()), Some(4));
        assert_eq!(girth(&petersen()), Some(5));
    }

    #[test]
    fn hamiltonian() {
        assert!(hamiltonian_cycle(&petersen()).is_none());
        let c = hamiltonian_cycle(&complete_bipartite_33()).unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn prism_cut_is_the_rungs() {
        let g = prism_type2(3).unwrap();
        let cut = nontrivial_cut3(&g).unwrap();
        let mut labels: Vec<&str> = cut.iter().map(|&e| g.edges[e].label.as_str()).collect();
        labels.sort();
        assert_eq!(labels, ["l1", "l2", "l3"]);
        assert_eq!(all_cuts3(&g).len(), 1);
    }

    #[test]
    fn missing_faces() {
        assert_eq!(euler_characteristic(&petersen()), Err(YutsisError::MissingFaces));
    }
}
