use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Spin;
use crate::recoupling::ThreeNJLabels;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YutsisError {
    #[error("n = {0} is below the minimum of 3")]
    TooSmall(usize),
    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),
    #[error("the two edges must be distinct")]
    IdenticalEdges,
    #[error("graph carries no face list")]
    MissingFaces,
    #[error("graph has {0} nodes, above the limit of {1}")]
    TooLarge(usize, usize),
    #[error("malformed bowtie site: {0}")]
    MalformedBowtie(&'static str),
    #[error("graph is not cubic: {0}")]
    NotCubic(String),
    #[error("unbound edge label {0}")]
    UnboundLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// A multigraph with named nodes, labelled edges and an optional face list.
///
/// Faces are closed walks written as edge indices in walking order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YutsisGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
}

impl YutsisGraph {
    pub fn new(nodes: Vec<String>, edges: Vec<Edge>, faces: Option<Vec<Vec<usize>>>) -> Self {
        YutsisGraph { nodes, edges, faces }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incident edge indices per node; a loop appears twice.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.u].push(i);
            inc[e.v].push(i);
        }
        inc
    }

    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().map(|e| (e.u == x) as usize + (e.v == x) as usize).sum()
    }

    pub fn edge_by_label(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Checks the cubic shape, the 2n/3n counts and, when present, that the
    /// faces are closed walks covering every edge exactly twice.
    pub fn validate(&self) -> Result<(), YutsisError> {
        for x in 0..self.nodes.len() {
            if self.degree(x) != 3 {
                return Err(YutsisError::NotCubic(format!("node {} has degree {}", self.nodes[x], self.degree(x))));
            }
        }
        if !self.nodes.len().is_multiple_of(2) || 2 * self.edges.len() != 3 * self.nodes.len() {
            return Err(YutsisError::NotCubic(format!("{} nodes, {} edges", self.nodes.len(), self.edges.len())));
        }
        if let Some(faces) = &self.faces {
            let mut count = vec![0usize; self.edges.len()];
            for f in faces {
                for &e in f {
                    *count.get_mut(e).ok_or(YutsisError::NoSuchEdge(e))? += 1;
                }
                if self.face_walk(f).is_none() {
                    return Err(YutsisError::NotCubic(format!("face {f:?} is not a closed walk")));
                }
            }
            if let Some(e) = count.iter().position(|&c| c != 2) {
                return Err(YutsisError::NotCubic(format!("edge {} lies on {} faces", self.edges[e].label, count[e])));
            }
        }
        Ok(())
    }

    /// Node sequence `n_0 .. n_{m-1}` with edge `f[i]` joining `n_i` and `n_{i+1}`.
    pub fn face_walk(&self, f: &[usize]) -> Option<Vec<usize>> {
        let m = f.len();
        if m == 0 {
            return None;
        }
        let first = &self.edges[f[0]];
        'start: for start in [first.u, first.v] {
            let mut walk = Vec::with_capacity(m);
            let mut at = start;
            for &e in f {
                let edge = &self.edges[e];
                if !edge.touches(at) {
                    continue 'start;
                }
                walk.push(at);
                at = edge.other(at);
            }
            if at == start {
                return Some(walk);
            }
        }
        None
    }

    /// Edge labels around each node.
    pub fn triads(&self) -> Vec<[String; 3]> {
        self.incidence()
            .into_iter()
            .map(|inc| {
                let mut t: Vec<String> = inc.iter().map(|&e| self.edges[e].label.clone()).collect();
                t.resize(3, String::new());
                [t[0].clone(), t[1].clone(), t[2].clone()]
            })
            .collect()
    }

    /// Node triads with every label replaced by its bound spin.
    pub fn bound_triads(&self, binding: &BTreeMap<String, Spin>) -> Result<Vec<[Spin; 3]>, YutsisError> {
        self.triads()
            .into_iter()
            .map(|t| {
                let get = |s: &String| binding.get(s).copied().ok_or_else(|| YutsisError::UnboundLabel(s.clone()));
                Ok([get(&t[0])?, get(&t[1])?, get(&t[2])?])
            })
            .collect()
    }

    /// A copy with node order shuffled by `perm` (new index of old node `i` is `perm[i]`).
    pub fn permute_nodes(&self, perm: &[usize]) -> YutsisGraph {
        let mut nodes = vec![String::new(); self.nodes.len()];
        for (i, name) in self.nodes.iter().enumerate() {
            nodes[perm[i]] = name.clone();
        }
        let edges = self.edges.iter().map(|e| Edge { u: perm[e.u], v: perm[e.v], label: e.label.clone() }).collect();
        YutsisGraph { nodes, edges, faces: self.faces.clone() }
    }
}

/// Binds the names `j1..jn`, `k1..kn`, `l1..ln` used by the generators.
pub fn label_binding(labels: &ThreeNJLabels) -> BTreeMap<String, Spin> {
    let mut out = BTreeMap::new();
    for (i, s) in labels.j.iter().enumerate() {
        out.insert(format!("j{}", i + 1), *s);
    }
    for (i, s) in labels.k.iter().enumerate() {
        out.insert(format!("k{}", i + 1), *s);
    }
    for (i, s) in labels.l.iter().enumerate() {
        out.insert(format!("l{}", i + 1), *s);
    }
    out
}
