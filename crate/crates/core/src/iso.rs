//! Isomorphism of small bipartite graphs and a canonical form for them.
//!
//! Two independent routes are provided. [`bipartite_isomorphic`] searches for a
//! row bijection directly and checks that the column multisets then agree;
//! [`canonical_form`] computes the row-major minimal biadjacency matrix over all
//! row and column permutations. The lab module uses the latter for
//! deduplication and tests use the former to cross-check it.

use std::cmp::Ordering;

use crate::bits::BitMatrix;
use crate::graph::BipartiteGraph;

/// True iff some relabeling of `V₁` and `V₂` maps `g1` onto `g2`.
///
/// With `allow_side_swap`, a balanced `g1` may also have its stable sets
/// exchanged (transposed biadjacency matrix) before matching.
pub fn bipartite_isomorphic(g1: &BipartiteGraph, g2: &BipartiteGraph, allow_side_swap: bool) -> bool {
    if side_preserving_isomorphic(g1, g2) {
        return true;
    }
    allow_side_swap && g1.is_balanced() && g2.is_balanced() && side_preserving_isomorphic(&g1.transpose(), g2)
}

/// The side-swap convention used when none is given explicitly: swapping is
/// allowed when both sides have the same size and the same degree sequence.
pub fn default_side_swap(g: &BipartiteGraph) -> bool {
    g.is_balanced() && g.left_degrees() == g.right_degrees()
}

fn side_preserving_isomorphic(g1: &BipartiteGraph, g2: &BipartiteGraph) -> bool {
    if g1.n1() != g2.n1() || g1.n2() != g2.n2() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if g1.left_degrees() != g2.left_degrees() || g1.right_degrees() != g2.right_degrees() {
        return false;
    }
    let mut order: Vec<usize> = (0..g1.n1()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g1.left_degree(i)));
    let mut search = IsoSearch {
        g1,
        g2,
        order,
        deg1: g1.left_degree_vec(),
        deg2: g2.left_degree_vec(),
        used: vec![false; g2.n1()],
        sig1: g1
            .right_degree_vec()
            .into_iter()
            .map(|d| vec![d as u64])
            .collect(),
        sig2: g2
            .right_degree_vec()
            .into_iter()
            .map(|d| vec![d as u64])
            .collect(),
    };
    search.extend(0)
}

struct IsoSearch<'a> {
    g1: &'a BipartiteGraph,
    g2: &'a BipartiteGraph,
    order: Vec<usize>,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    used: Vec<bool>,
    // Per-column signature: degree followed by membership bits of the rows
    // matched so far, in matching order.
    sig1: Vec<Vec<u64>>,
    sig2: Vec<Vec<u64>>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let r1 = self.order[depth];
        let mut tried: Vec<usize> = Vec::new();
        for r2 in 0..self.g2.n1() {
            if self.used[r2] || self.deg2[r2] != self.deg1[r1] {
                continue;
            }
            // identical rows of g2 lead to identical subtrees
            if tried
                .iter()
                .any(|&t| self.g2.matrix().row(t) == self.g2.matrix().row(r2))
            {
                continue;
            }
            tried.push(r2);
            self.push_row(r1, r2);
            if self.column_multisets_agree() {
                self.used[r2] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[r2] = false;
            }
            self.pop_row();
        }
        false
    }

    fn push_row(&mut self, r1: usize, r2: usize) {
        for (c, s) in self.sig1.iter_mut().enumerate() {
            s.push(self.g1.has_edge(r1, c) as u64);
        }
        for (c, s) in self.sig2.iter_mut().enumerate() {
            s.push(self.g2.has_edge(r2, c) as u64);
        }
    }

    fn pop_row(&mut self) {
        self.sig1.iter_mut().for_each(|s| {
            s.pop();
        });
        self.sig2.iter_mut().for_each(|s| {
            s.pop();
        });
    }

    fn column_multisets_agree(&self) -> bool {
        let mut a: Vec<&Vec<u64>> = self.sig1.iter().collect();
        let mut b: Vec<&Vec<u64>> = self.sig2.iter().collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Row-major lexicographically minimal biadjacency matrix (`false < true`) over
/// all row and column permutations of `g`.
pub fn canonical_form(g: &BipartiteGraph) -> BipartiteGraph {
    let mut search = CanonSearch {
        m: g.matrix(),
        best: None,
    };
    let cells = if g.n2() == 0 {
        vec![]
    } else {
        vec![(0..g.n2()).collect()]
    };
    search.descend(&mut vec![false; g.n1()], &cells, &mut Vec::new());
    let rows = search.best.unwrap_or_default();
    BipartiteGraph::from_fn(g.n1(), g.n2(), |r, c| rows[r][c])
}

/// Canonical form when stable sets may also be exchanged: the smaller of the
/// canonical forms of `g` and its transpose. Only meaningful for balanced graphs.
pub fn canonical_form_with_swap(g: &BipartiteGraph) -> BipartiteGraph {
    let a = canonical_form(g);
    if !g.is_balanced() {
        return a;
    }
    let b = canonical_form(&g.transpose());
    match a.cmp_row_major(&b) {
        Ordering::Greater => b,
        _ => a,
    }
}

struct CanonSearch<'a> {
    m: &'a BitMatrix,
    best: Option<Vec<Vec<bool>>>,
}

impl CanonSearch<'_> {
    /// The row `r` would read as this string after all columns are sorted,
    /// given the ordered partition `cells` induced by the rows already placed.
    fn row_string(&self, r: usize, cells: &[Vec<usize>]) -> Vec<bool> {
        let mut s = Vec::with_capacity(self.m.cols());
        for cell in cells {
            let ones = cell.iter().filter(|&&c| self.m.get(r, c)).count();
            s.extend(std::iter::repeat_n(false, cell.len() - ones));
            s.extend(std::iter::repeat_n(true, ones));
        }
        s
    }

    fn refine(&self, r: usize, cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let (ones, zeros): (Vec<usize>, Vec<usize>) = cell.iter().partition(|&&c| self.m.get(r, c));
            if !zeros.is_empty() {
                out.push(zeros);
            }
            if !ones.is_empty() {
                out.push(ones);
            }
        }
        out
    }

    fn descend(&mut self, used: &mut Vec<bool>, cells: &[Vec<usize>], prefix: &mut Vec<Vec<bool>>) {
        let depth = prefix.len();
        if depth == self.m.rows() {
            let better = match &self.best {
                None => true,
                Some(best) => prefix.as_slice() < best.as_slice(),
            };
            if better {
                self.best = Some(prefix.clone());
            }
            return;
        }

        let mut candidates: Vec<(Vec<bool>, usize)> = Vec::new();
        for r in (0..self.m.rows()).filter(|&r| !used[r]) {
            if candidates.iter().any(|&(_, t)| self.m.row(t) == self.m.row(r)) {
                continue;
            }
            candidates.push((self.row_string(r, cells), r));
        }
        let min = candidates
            .iter()
            .map(|(s, _)| s)
            .min()
            .cloned()
            .expect("unused row");

        if let Some(best) = &self.best {
            match prefix
                .iter()
                .chain(std::iter::once(&min))
                .cmp(best[..=depth].iter())
            {
                Ordering::Greater => return,
                Ordering::Less | Ordering::Equal => {}
            }
        }

        for (s, r) in candidates.into_iter().filter(|(s, _)| *s == min) {
            let next = self.refine(r, cells);
            used[r] = true;
            prefix.push(s);
            self.descend(used, &next, prefix);
            prefix.pop();
            used[r] = false;
        }
    }
}
