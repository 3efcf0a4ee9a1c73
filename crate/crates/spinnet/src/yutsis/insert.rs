use serde::{Deserialize, Serialize};

use super::graph::{Edge, YutsisError, YutsisGraph};

/// Labels for the square insertion: edge `e1` splits into a half next to its
/// `u` end (labelled `e1_near_u`) and a half keeping the old label; likewise
/// for `e2`. The new rung is labelled `rung`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareLabels {
    pub e1_near_u: String,
    pub e2_near_u: String,
    pub rung: String,
}

/// Labels for the twisted insertion on a ray with two flanks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BowtieLabels {
    /// Half of flank 1 adjacent to the ray.
    pub flank1_near: String,
    /// Half of flank 2 adjacent to the ray.
    pub flank2_near: String,
    /// New label of the old ray.
    pub ray: String,
    /// Label of the crossing edge joining the two new nodes; usually the old
    /// ray label.
    pub crossing: String,
}

/// Puts node `x` on `e1` and `y` on `e2`, joins them, and updates the faces.
/// `near1`/`near2` name the halves next to `at1`/`at2`.
#[allow(clippy::too_many_arguments)]
fn subdivide_pair(
    g: &YutsisGraph,
    e1: usize,
    at1: usize,
    near1: &str,
    e2: usize,
    at2: usize,
    near2: &str,
    rung_label: &str,
    prefer_face_with: Option<usize>,
) -> YutsisGraph {
    let mut out = g.clone();
    let x = out.nodes.len();
    let y = x + 1;
    out.nodes.push(format!("n{x}"));
    out.nodes.push(format!("n{y}"));
    let h1 = out.edges.len();
    let h2 = h1 + 1;
    let rung = h1 + 2;
    // e1 keeps the far half, h1 is the half touching at1
    let far1 = out.edges[e1].other(at1);
    out.edges[e1] = Edge { u: x, v: far1, label: g.edges[e1].label.clone() };
    out.edges.push(Edge { u: at1, v: x, label: near1.to_string() });
    let far2 = out.edges[e2].other(at2);
    out.edges[e2] = Edge { u: y, v: far2, label: g.edges[e2].label.clone() };
    out.edges.push(Edge { u: at2, v: y, label: near2.to_string() });
    out.edges.push(Edge { u: x, v: y, label: rung_label.to_string() });

    out.faces = g.faces.as_ref().and_then(|faces| {
        let shared: Vec<usize> =
            (0..faces.len()).filter(|&i| faces[i].contains(&e1) && faces[i].contains(&e2)).collect();
        let split = prefer_face_with
            .and_then(|p| shared.iter().copied().find(|&i| faces[i].contains(&p)))
            .or_else(|| shared.first().copied())?;
        let mut new_faces = Vec::with_capacity(faces.len() + 1);
        for (i, f) in faces.iter().enumerate() {
            let walk = g.face_walk(f)?;
            // alternating (node, edge) sequence with subdivided edges expanded
            let mut seq: Vec<(usize, usize)> = Vec::with_capacity(f.len() + 2);
            for (pos, &e) in f.iter().enumerate() {
                let from = walk[pos];
                let mut push_split = |orig: usize, at: usize, half: usize, mid: usize| {
                    if from == at {
                        seq.push((from, half));
                        seq.push((mid, orig));
                    } else {
                        seq.push((from, orig));
                        seq.push((mid, half));
                    }
                };
                if e == e1 {
                    push_split(e1, at1, h1, x);
                } else if e == e2 {
                    push_split(e2, at2, h2, y);
                } else {
                    seq.push((from, e));
                }
            }
            if i != split {
                new_faces.push(seq.iter().map(|p| p.1).collect());
                continue;
            }
            let px = seq.iter().position(|p| p.0 == x)?;
            let py = seq.iter().position(|p| p.0 == y)?;
            let m = seq.len();
            let arc = |from: usize, to: usize| {
                let mut v = Vec::new();
                let mut i = from;
                while i != to {
                    v.push(seq[i].1);
                    i = (i + 1) % m;
                }
                v.push(rung);
                v
            };
            new_faces.push(arc(px, py));
            new_faces.push(arc(py, px));
        }
        Some(new_faces)
    });
    out
}

/// Square insertion: a new node on each of `e1` and `e2`, joined by a rung.
///
/// When `e1` and `e2` share a face, that face is split in two and the face
/// list stays a valid double cover; otherwise the result carries no faces.
pub fn insert_square(g: &YutsisGraph, e1: usize, e2: usize, labels: &SquareLabels) -> Result<YutsisGraph, YutsisError> {
    if e1 == e2 {
        return Err(YutsisError::IdenticalEdges);
    }
    for e in [e1, e2] {
        if e >= g.edges.len() {
            return Err(YutsisError::NoSuchEdge(e));
        }
    }
    Ok(subdivide_pair(
        g,
        e1,
        g.edges[e1].u,
        &labels.e1_near_u,
        e2,
        g.edges[e2].u,
        &labels.e2_near_u,
        &labels.rung,
        None,
    ))
}

/// Twisted insertion on `ray` with flanks `flank1` (sharing one endpoint
/// of the ray) and `flank2` (sharing the other).
///
/// The flanks are subdivided, the halves touching the ray receive the new
/// flank labels, the old ray is relabelled, and the new crossing edge joins
/// the two new nodes. On a cartwheel with ray `ln` and flanks `jn`, `kn` this
/// yields the next cartwheel label for label.
pub fn insert_bowtie(
    g: &YutsisGraph,
    ray: usize,
    flank1: usize,
    flank2: usize,
    labels: &BowtieLabels,
) -> Result<YutsisGraph, YutsisError> {
    for e in [ray, flank1, flank2] {
        if e >= g.edges.len() {
            return Err(YutsisError::NoSuchEdge(e));
        }
    }
    if ray == flank1 || ray == flank2 || flank1 == flank2 {
        return Err(YutsisError::IdenticalEdges);
    }
    let r = &g.edges[ray];
    if r.u == r.v {
        return Err(YutsisError::MalformedBowtie("ray is a loop"));
    }
    let (f1, f2) = (&g.edges[flank1], &g.edges[flank2]);
    let (at1, at2) = if f1.touches(r.v) && f2.touches(r.u) && !f1.touches(r.u) && !f2.touches(r.v) {
        (r.v, r.u)
    } else if f1.touches(r.u) && f2.touches(r.v) && !f1.touches(r.v) && !f2.touches(r.u) {
        (r.u, r.v)
    } else {
        return Err(YutsisError::MalformedBowtie("flanks must touch opposite ends of the ray"));
    };
    let mut h = subdivide_pair(
        g,
        flank1,
        at1,
        &labels.flank1_near,
        flank2,
        at2,
        &labels.flank2_near,
        &labels.crossing,
        Some(ray),
    );
    h.edges[ray].label = labels.ray.clone();
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::super::families::{cartwheel_type1, prism_type2};
    use super::*;

    fn sorted_triads(g: &YutsisGraph) -> Vec<[String; 3]> {
        let mut t: Vec<_> = g
            .triads()
            .into_iter()
            .map(|mut x| {
                x.sort();
                x
            })
            .collect();
        t.sort();
        t
    }

    #[test]
    fn square_on_prism_gives_next_prism_labels() {
        for n in 3..7 {
            let g = prism_type2(n).unwrap();
            let e1 = g.edge_by_label("j1").unwrap();
            let e2 = g.edge_by_label("k1").unwrap();
            let labels = SquareLabels {
                e1_near_u: format!("j{}", n + 1),
                e2_near_u: format!("k{}", n + 1),
                rung: format!("l{}", n + 1),
            };
            let h = insert_square(&g, e1, e2, &labels).unwrap();
            h.validate().unwrap();
            assert_eq!(sorted_triads(&h), sorted_triads(&prism_type2(n + 1).unwrap()));
            assert_eq!(h.faces.as_ref().unwrap().len(), g.faces.as_ref().unwrap().len() + 1);
        }
    }

    #[test]
    fn bowtie_on_cartwheel_gives_next_cartwheel_labels() {
        for m in 3..7 {
            let g = cartwheel_type1(m).unwrap();
            let ray = g.edge_by_label(&format!("l{m}")).unwrap();
            let f1 = g.edge_by_label(&format!("j{m}")).unwrap();
            let f2 = g.edge_by_label(&format!("k{m}")).unwrap();
            let labels = BowtieLabels {
                flank1_near: format!("j{}", m + 1),
                flank2_near: format!("k{}", m + 1),
                ray: format!("l{}", m + 1),
                crossing: format!("l{m}"),
            };
            let h = insert_bowtie(&g, ray, f1, f2, &labels).unwrap();
            h.validate().unwrap();
            assert_eq!(sorted_triads(&h), sorted_triads(&cartwheel_type1(m + 1).unwrap()));
            let mut faces: Vec<Vec<String>> = h
                .faces
                .unwrap()
                .iter()
                .map(|f| {
                    let mut v: Vec<String> = f.iter().map(|&e| h.edges[e].label.clone()).collect();
                    v.sort();
                    v
                })
                .collect();
            faces.sort();
            let next = cartwheel_type1(m + 1).unwrap();
            let mut expect: Vec<Vec<String>> = next
                .faces
                .as_ref()
                .unwrap()
                .iter()
                .map(|f| {
                    let mut v: Vec<String> = f.iter().map(|&e| next.edges[e].label.clone()).collect();
                    v.sort();
                    v
                })
                .collect();
            expect.sort();
            assert_eq!(faces, expect);
        }
    }

    #[test]
    fn bad_sites() {
        let g = cartwheel_type1(3).unwrap();
        let l =
            BowtieLabels { flank1_near: "a".into(), flank2_near: "b".into(), ray: "c".into(), crossing: "d".into() };
        assert_eq!(insert_bowtie(&g, 0, 0, 1, &l), Err(YutsisError::IdenticalEdges));
        let ray = g.edge_by_label("l3").unwrap();
        let j1 = g.edge_by_label("j1").unwrap();
        let l1 = g.edge_by_label("l1").unwrap();
        assert!(matches!(insert_bowtie(&g, ray, j1, l1, &l), Err(YutsisError::MalformedBowtie(_))));
        let s = SquareLabels { e1_near_u: "a".into(), e2_near_u: "b".into(), rung: "c".into() };
        assert_eq!(insert_square(&g, 2, 2, &s), Err(YutsisError::IdenticalEdges));
    }
}
