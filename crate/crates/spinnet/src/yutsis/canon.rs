use serde::{Deserialize, Serialize};

use super::graph::{YutsisError, YutsisGraph};

pub const MAX_CANON_NODES: usize = 20;

/// Sorted edge list of the graph relabelled by its canonical node order.
/// Labels are empty strings unless the labelled form was requested.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub nodes: usize,
    pub edges: Vec<(usize, usize, String)>,
}

struct Canon<'a> {
    g: &'a YutsisGraph,
    adj: Vec<Vec<(usize, &'a str)>>,
    labelled: bool,
    best: Option<CanonicalForm>,
}

/// Replaces every value by its rank among the distinct values.
fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn cell_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

impl Canon<'_> {
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        loop {
            let sigs: Vec<(usize, Vec<(usize, &str)>)> = (0..colors.len())
                .map(|v| {
                    let mut nb: Vec<(usize, &str)> = self.adj[v].iter().map(|&(w, l)| (colors[w], l)).collect();
                    nb.sort();
                    (colors[v], nb)
                })
                .collect();
            let next = rank(&sigs);
            if cell_count(&next) == cell_count(&colors) {
                return next;
            }
            colors = next;
        }
    }

    fn form(&self, colors: &[usize]) -> CanonicalForm {
        let mut edges: Vec<(usize, usize, String)> = self
            .g
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (colors[e.u], colors[e.v]);
                let label = if self.labelled { e.label.clone() } else { String::new() };
                (a.min(b), a.max(b), label)
            })
            .collect();
        edges.sort();
        CanonicalForm { nodes: colors.len(), edges }
    }

    fn search(&mut self, colors: Vec<usize>) {
        let colors = self.refine(colors);
        let n = colors.len();
        if cell_count(&colors) == n {
            let f = self.form(&colors);
            if self.best.as_ref().is_none_or(|b| f < *b) {
                self.best = Some(f);
            }
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap();
        for v in (0..n).filter(|&v| colors[v] == target) {
            let split: Vec<usize> =
                colors.iter().enumerate().map(|(w, &c)| 2 * c + (c == target && w != v) as usize).collect();
            self.search(rank(&split));
        }
    }
}

fn canonical(g: &YutsisGraph, labelled: bool) -> Result<CanonicalForm, YutsisError> {
    let n = g.node_count();
    if n > MAX_CANON_NODES {
        return Err(YutsisError::TooLarge(n, MAX_CANON_NODES));
    }
    let mut adj: Vec<Vec<(usize, &str)>> = vec![Vec::new(); n];
    for e in &g.edges {
        let l = if labelled { e.label.as_str() } else { "" };
        adj[e.u].push((e.v, l));
        adj[e.v].push((e.u, l));
    }
    let mut c = Canon { g, adj, labelled, best: None };
    let init: Vec<Vec<&str>> = c
        .adj
        .iter()
        .map(|a| {
            let mut ls: Vec<&str> = a.iter().map(|p| p.1).collect();
            ls.sort();
            ls
        })
        .collect();
    c.search(rank(&init));
    Ok(c.best.unwrap_or(CanonicalForm { nodes: 0, edges: Vec::new() }))
}

/// Canonical form of the unlabelled multigraph by colour refinement with
/// individualisation; exhaustive over the search tree.
pub fn canonical_form(g: &YutsisGraph) -> Result<CanonicalForm, YutsisError> {
    canonical(g, false)
}

pub fn isomorphic(g1: &YutsisGraph, g2: &YutsisGraph) -> Result<bool, YutsisError> {
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(canonical(g1, false)? == canonical(g2, false)?)
}

/// Isomorphism that must also carry each edge label onto the same label.
pub fn isomorphic_labelled(g1: &YutsisGraph, g2: &YutsisGraph) -> Result<bool, YutsisError> {
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(canonical(g1, true)? == canonical(g2, true)?)
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn cartwheel_three_is_k33() {
        assert!(isomorphic(&cartwheel_type1(3).unwrap(), &complete_bipartite_33()).unwrap());
        assert!(!isomorphic(&cartwheel_type1(3).unwrap(), &prism_type2(3).unwrap()).unwrap());
    }

    #[test]
    fn permutation_invariance() {
        let g = petersen();
        let perm = [3, 7, 1, 0, 9, 2, 8, 5, 4, 6];
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute_nodes(&perm)).unwrap());
    }

    #[test]
    fn size_limit() {
        let g = prism_type2(11).unwrap();
        assert_eq!(canonical_form(&g), Err(YutsisError::TooLarge(22, 20)));
    }
}
