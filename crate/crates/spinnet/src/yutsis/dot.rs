use std::fmt::Write;

use super::graph::YutsisGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering with one statement per node and per edge.
pub fn to_dot(g: &YutsisGraph) -> String {
    let mut out = String::from("graph yutsis {\n");
    for (i, name) in g.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(name)).unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  n{} -- n{} [label={}];", e.u, e.v, quote(&e.label)).unwrap();
    }
    out.push_str("}\n");
    out
}
