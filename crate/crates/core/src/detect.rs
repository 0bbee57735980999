//! Mirror detection for arbitrary balanced bipartite graphs.
//!
//! Three polynomial filters run first: balance, equal degree sequences, and
//! equal twin signatures. A valid pairing maps twin classes of `V₁` onto twin
//! classes of `V₂` (the neighbourhood of `φ(u)` is `φ⁻¹` of the neighbourhood
//! of `u`), so a twin class with no counterpart on the other side refutes the
//! mirror property outright. Whatever survives goes to an exact backtracking
//! search.

use std::collections::HashMap;

use crate::graph::BipartiteGraph;
use crate::pairing::MirrorPairing;

/// Multiset of `(degree, twin-class size)` over the twin classes of one side,
/// sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwinSignature(Vec<(usize, usize)>);

impl TwinSignature {
    pub fn classes(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Sum of class sizes, i.e. the number of vertices on that side.
    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(|&(_, size)| size).sum()
    }

    /// Size of the largest twin class (zero for an empty side).
    pub fn largest_class(&self) -> usize {
        self.0.iter().map(|&(_, size)| size).max().unwrap_or(0)
    }
}

/// Twin classes of each side: `class[v]` is the class id of vertex `v`, ids are
/// assigned in order of first appearance.
struct TwinClasses {
    class: Vec<usize>,
    size: Vec<usize>,
}

fn twin_classes(neighbourhoods: impl Iterator<Item = Vec<bool>>) -> TwinClasses {
    let mut ids: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut class = Vec::new();
    let mut size = Vec::new();
    for nb in neighbourhoods {
        let next = ids.len();
        let id = *ids.entry(nb).or_insert(next);
        if id == size.len() {
            size.push(0);
        }
        size[id] += 1;
        class.push(id);
    }
    TwinClasses { class, size }
}

fn left_twins(g: &BipartiteGraph) -> TwinClasses {
    twin_classes((0..g.n1()).map(|i| (0..g.n2()).map(|j| g.has_edge(i, j)).collect()))
}

fn right_twins(g: &BipartiteGraph) -> TwinClasses {
    twin_classes((0..g.n2()).map(|j| (0..g.n1()).map(|i| g.has_edge(i, j)).collect()))
}

fn signature(classes: &TwinClasses, degree: impl Fn(usize) -> usize) -> TwinSignature {
    let mut rep = vec![usize::MAX; classes.size.len()];
    for (v, &c) in classes.class.iter().enumerate() {
        rep[c] = rep[c].min(v);
    }
    let mut sig: Vec<(usize, usize)> = rep
        .iter()
        .zip(&classes.size)
        .map(|(&v, &size)| (degree(v), size))
        .collect();
    sig.sort_unstable_by(|a, b| b.cmp(a));
    TwinSignature(sig)
}

/// Twin signatures of `V₁` and `V₂`.
pub fn twin_signature(g: &BipartiteGraph) -> (TwinSignature, TwinSignature) {
    (
        signature(&left_twins(g), |i| g.left_degree(i)),
        signature(&right_twins(g), |j| g.right_degree(j)),
    )
}

/// Searches for a mirror pairing of `g`.
///
/// Rows are assigned in descending degree order (ties by index) and candidate
/// columns are tried in ascending index, so the result is deterministic.
/// Unbalanced graphs are refused with `None`.
pub fn find_mirror_pairing(g: &BipartiteGraph) -> Option<MirrorPairing> {
    if !g.is_balanced() {
        return None;
    }
    let n = g.n1();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.left_degree(i)));
    let rows = left_twins(g);
    let cols = right_twins(g);
    let mut search = PairingSearch {
        g,
        order,
        row_deg: g.left_degree_vec(),
        col_deg: g.right_degree_vec(),
        row_class_to_col: vec![None; rows.size.len()],
        col_class_to_row: vec![None; cols.size.len()],
        rows,
        cols,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
    };
    if search.extend() {
        Some(MirrorPairing::new(search.image).expect("complete assignment"))
    } else {
        None
    }
}

struct PairingSearch<'a> {
    g: &'a BipartiteGraph,
    order: Vec<usize>,
    row_deg: Vec<usize>,
    col_deg: Vec<usize>,
    rows: TwinClasses,
    cols: TwinClasses,
    row_class_to_col: Vec<Option<usize>>,
    col_class_to_row: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

impl PairingSearch<'_> {
    fn extend(&mut self) -> bool {
        let depth = self.assigned.len();
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        let rc = self.rows.class[i];
        for j in 0..self.g.n2() {
            if self.used[j] || self.col_deg[j] != self.row_deg[i] {
                continue;
            }
            let cc = self.cols.class[j];
            if self.rows.size[rc] != self.cols.size[cc] {
                continue;
            }
            let fresh = match (self.row_class_to_col[rc], self.col_class_to_row[cc]) {
                (Some(c), _) if c != cc => continue,
                (None, Some(_)) => continue,
                (Some(_), _) => false,
                (None, None) => true,
            };
            self.image[i] = j;
            if !self.consistent(i, j) {
                continue;
            }
            if fresh {
                self.row_class_to_col[rc] = Some(cc);
                self.col_class_to_row[cc] = Some(rc);
            }
            self.used[j] = true;
            self.assigned.push(i);
            if self.extend() {
                return true;
            }
            self.assigned.pop();
            self.used[j] = false;
            if fresh {
                self.row_class_to_col[rc] = None;
                self.col_class_to_row[cc] = None;
            }
        }
        self.image[i] = usize::MAX;
        false
    }

    /// `B[i][π(k)] = B[k][π(i)]` for every already assigned row `k`.
    fn consistent(&self, i: usize, j: usize) -> bool {
        self.assigned
            .iter()
            .all(|&k| self.g.has_edge(i, self.image[k]) == self.g.has_edge(k, j))
    }
}

/// Decides whether `g` is a mirror bipartite graph.
pub fn is_mirror(g: &BipartiteGraph) -> bool {
    if !g.is_balanced() || g.left_degrees() != g.right_degrees() {
        return false;
    }
    let (left, right) = twin_signature(g);
    if left != right {
        return false;
    }
    find_mirror_pairing(g).is_some()
}
