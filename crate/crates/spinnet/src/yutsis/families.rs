use super::graph::{Edge, YutsisError, YutsisGraph};

fn edge(u: usize, v: usize, label: impl Into<String>) -> Edge {
    Edge { u, v, label: label.into() }
}

/// Type-I diagram drawn as a cartwheel.
///
/// Nodes `T0..T{n-1}` and `B0..B{n-1}` lie on the outer cycle
/// `T0 -j1- T1 ... T{n-1} -jn- B0 -k1- B1 ... B{n-1} -kn- T0`, and the rays
/// `li = Ti-Bi` (with `ln = T0-B0`) cross the wheel. Faces are the `n`
/// quadrilaterals `(l{i-1}, ji, li, ki)` plus the outer cycle.
pub fn cartwheel_type1(n: usize) -> Result<YutsisGraph, YutsisError> {
    if n < 3 {
        return Err(YutsisError::TooSmall(n));
    }
    let t = |i: usize| i;
    let b = |i: usize| n + i;
    let mut nodes: Vec<String> = (0..n).map(|i| format!("T{i}")).collect();
    nodes.extend((0..n).map(|i| format!("B{i}")));
    let mut edges = Vec::with_capacity(3 * n);
    // j_i at index i-1, k_i at n+i-1, l_i at 2n+i-1
    for i in 1..n {
        edges.push(edge(t(i - 1), t(i), format!("j{i}")));
    }
    edges.push(edge(t(n - 1), b(0), format!("j{n}")));
    for i in 1..n {
        edges.push(edge(b(i - 1), b(i), format!("k{i}")));
    }
    edges.push(edge(b(n - 1), t(0), format!("k{n}")));
    for i in 1..n {
        edges.push(edge(t(i), b(i), format!("l{i}")));
    }
    edges.push(edge(t(0), b(0), format!("l{n}")));
    let (j, k, l) = (|i: usize| i - 1, |i: usize| n + i - 1, |i: usize| 2 * n + i - 1);
    let mut faces = Vec::with_capacity(n + 1);
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        faces.push(vec![l(prev), j(i), l(i), k(i)]);
    }
    faces.push((0..2 * n).collect());
    Ok(YutsisGraph::new(nodes, edges, Some(faces)))
}

/// Type-II diagram: the `n`-gonal prism.
///
/// Node `Ji` carries `(ji, j{i+1}, li)` and `Ki` carries `(ki, k{i+1}, li)`
/// cyclically, so edge `ji` joins `J{i-1}` and `Ji`. Faces are the two
/// polygons and the `n` lateral quadrilaterals.
pub fn prism_type2(n: usize) -> Result<YutsisGraph, YutsisError> {
    if n < 3 {
        return Err(YutsisError::TooSmall(n));
    }
    let jn = |i: usize| (i + n - 1) % n;
    let kn = |i: usize| n + (i + n - 1) % n;
    let mut nodes: Vec<String> = (1..=n).map(|i| format!("J{i}")).collect();
    nodes.extend((1..=n).map(|i| format!("K{i}")));
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        edges.push(edge(jn(prev), jn(i), format!("j{i}")));
    }
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        edges.push(edge(kn(prev), kn(i), format!("k{i}")));
    }
    for i in 1..=n {
        edges.push(edge(jn(i), kn(i), format!("l{i}")));
    }
    let (j, k, l) = (|i: usize| i - 1, |i: usize| n + i - 1, |i: usize| 2 * n + i - 1);
    let mut faces = vec![(1..=n).map(j).collect::<Vec<_>>(), (1..=n).map(k).collect()];
    for i in 1..=n {
        let next = i % n + 1;
        faces.push(vec![l(i), j(next), l(next), k(next)]);
    }
    Ok(YutsisGraph::new(nodes, edges, Some(faces)))
}

/// The 6j diagram, labelled `{j1 j2 j3; j4 j5 j6}` with triads
/// `(j1 j2 j3) (j1 j5 j6) (j4 j2 j6) (j4 j5 j3)`.
pub fn tetrahedron() -> YutsisGraph {
    let nodes = ["a", "b", "c", "d"].map(String::from).to_vec();
    let edges = vec![
        edge(0, 1, "j1"),
        edge(0, 2, "j2"),
        edge(0, 3, "j3"),
        edge(2, 3, "j4"),
        edge(1, 3, "j5"),
        edge(1, 2, "j6"),
    ];
    let faces = vec![vec![0, 5, 1], vec![0, 4, 2], vec![1, 3, 2], vec![5, 3, 4]];
    YutsisGraph::new(nodes, edges, Some(faces))
}

pub fn complete_bipartite_33() -> YutsisGraph {
    let nodes = ["u1", "u2", "u3", "v1", "v2", "v3"].map(String::from).to_vec();
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push(edge(u, v, format!("e{}{}", u + 1, v - 2)));
        }
    }
    YutsisGraph::new(nodes, edges, None)
}

/// The Petersen graph: outer 5-cycle, inner pentagram and five spokes.
pub fn petersen() -> YutsisGraph {
    let nodes = (0..10).map(|i| format!("p{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(edge(i, (i + 1) % 5, format!("o{i}")));
        edges.push(edge(5 + i, 5 + (i + 2) % 5, format!("s{i}")));
        edges.push(edge(i, 5 + i, format!("r{i}")));
    }
    YutsisGraph::new(nodes, edges, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_validate() {
        for n in 3..=8 {
            cartwheel_type1(n).unwrap().validate().unwrap();
            prism_type2(n).unwrap().validate().unwrap();
        }
        tetrahedron().validate().unwrap();
        complete_bipartite_33().validate().unwrap();
        petersen().validate().unwrap();
    }

    #[test]
    fn too_small() {
        assert_eq!(cartwheel_type1(2), Err(YutsisError::TooSmall(2)));
        assert_eq!(prism_type2(1), Err(YutsisError::TooSmall(1)));
    }
}
