//! Graphviz output.
//!
//! Bipartite graphs put left vertex `a_i` at `(0, i)`. With a pairing the
//! right vertex `b_{π(i)}` sits at `(1, i)`, so each pair shares a height and
//! the edge set is symmetric about `x = 1/2`. Without one, `b_j` sits at
//! `(1, j)`. Positions are pinned (`!`) for `neato -n`.

use std::fmt::Write;

use mirrorgraph::{BipartiteGraph, LGraph, MirrorPairing};

pub fn bipartite_dot(name: &str, g: &BipartiteGraph, pairing: Option<&MirrorPairing>) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    s.push_str("  layout=neato;\n  node [shape=circle];\n");
    for i in 0..g.n1() {
        writeln!(s, "  a{i} [pos=\"0,{i}!\"];").unwrap();
    }
    let mut height: Vec<usize> = (0..g.n2()).collect();
    if let Some(p) = pairing {
        for i in 0..p.len() {
            height[p.image(i)] = i;
        }
    }
    let mut order: Vec<usize> = (0..g.n2()).collect();
    order.sort_by_key(|&j| height[j]);
    for j in order {
        writeln!(s, "  b{j} [pos=\"1,{}!\"];", height[j]).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(s, "  a{i} -- b{j};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn lgraph_dot(name: &str, h: &LGraph) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    for v in 0..h.n() {
        writeln!(s, "  v{v};").unwrap();
    }
    for (i, j) in h.edges() {
        writeln!(s, "  v{i} -- v{j};").unwrap();
    }
    s.push_str("}\n");
    s
}
