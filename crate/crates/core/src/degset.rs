//! Realizations of degree sets.
//!
//! [`kapoor_realize`] builds a graph of order `max + 1` with a prescribed degree
//! set; [`degset_mirror_realize`] builds a mirror bipartite graph with stable
//! sets of size `max` whose two sides both have the prescribed degree set.
//! Every construction is checked against its postcondition before returning.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, SimpleGraph};
use crate::realize::{staircase, MirrorRealization};
use crate::sequence::DegreeSet;
use crate::transform::kronecker_k2;

/// A graph on `max(s) + 1` vertices whose set of distinct degrees is `s`.
///
/// For `s = {p₁}` this is `K_{p₁+1}`. Otherwise it is `K_{p_k}` joined to the
/// disjoint union of `R` and `p₁ - p₂` isolated vertices, where `R` is the
/// recursive graph for `{p₂ - p_k > … > p_{k-1} - p_k}` (a single vertex when
/// `k = 2`). Vertex order: the `K_{p_k}` block, then `R`, then the isolated
/// vertices.
pub fn kapoor_realize(s: &DegreeSet) -> Result<SimpleGraph> {
    let g = kapoor_matrix(s.as_slice());
    let g = SimpleGraph::from_edges(
        g.rows(),
        (0..g.rows())
            .flat_map(|i| (i + 1..g.rows()).map(move |j| (i, j)))
            .filter(|&(i, j)| g.get(i, j)),
    )?;
    if g.n() != s.max() + 1 {
        return Err(Error::InternalContradiction(format!(
            "order {} for degree set {s}",
            g.n()
        )));
    }
    if g.degree_set().as_ref() != Some(s) || g.degree_vec().contains(&0) {
        return Err(Error::InternalContradiction(format!(
            "degree set {:?} for requested {s}",
            g.degree_set()
        )));
    }
    Ok(g)
}

fn kapoor_matrix(p: &[usize]) -> BitMatrix {
    let k = p.len();
    if k == 1 {
        let n = p[0] + 1;
        return BitMatrix::from_fn(n, n, |i, j| i != j);
    }
    let pk = p[k - 1];
    let inner = if k == 2 {
        BitMatrix::new(1, 1)
    } else {
        let shifted: Vec<usize> = p[1..k - 1].iter().map(|&v| v - pk).collect();
        kapoor_matrix(&shifted)
    };
    let isolated = p[0] - p[1];
    let n = pk + inner.rows() + isolated;
    BitMatrix::from_fn(n, n, |i, j| {
        if i == j {
            false
        } else if i < pk || j < pk {
            true
        } else {
            let (a, b) = (i - pk, j - pk);
            a < inner.rows() && b < inner.rows() && inner.get(a, b)
        }
    })
}

/// Adds a new mirror pair `(a₀, b₀)` adjacent to everything on the opposite
/// side, each other included. Existing indices shift up by one.
pub fn augment_universal_pair(m: &MirrorRealization) -> Result<MirrorRealization> {
    let n = m.n() + 1;
    let old = m.graph();
    let graph = BipartiteGraph::from_fn(n, n, |i, j| i == 0 || j == 0 || old.has_edge(i - 1, j - 1));
    MirrorRealization::new(graph, m.pairing().with_new_front_pair())
}

/// Which construction [`degset_mirror_realize`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSetCase {
    /// Consecutive set `{l > l-1 > … > l-k+1}`: staircase of size `k` plus
    /// `l - k` universal pairs.
    Consecutive,
    /// First gap after position `gap` (1-based): Kapoor graph for the lowered
    /// set, tensored with `K₂`, then mirror edges on the lowered classes.
    Gap { gap: usize },
}

/// Picks the construction for `s`.
pub fn degree_set_case(s: &DegreeSet) -> DegreeSetCase {
    if s.is_consecutive() {
        return DegreeSetCase::Consecutive;
    }
    let p = s.as_slice();
    let gap = p
        .windows(2)
        .position(|w| w[0] - w[1] > 1)
        .expect("non-consecutive set has a gap")
        + 1;
    DegreeSetCase::Gap { gap }
}

/// A mirror bipartite graph with both stable sets of size `max(s)` and degree
/// set `s` on each side.
pub fn degset_mirror_realize(s: &DegreeSet) -> Result<MirrorRealization> {
    let m = match degree_set_case(s) {
        DegreeSetCase::Consecutive => {
            let mut m = staircase(s.len());
            for _ in 0..s.max() - s.len() {
                m = augment_universal_pair(&m)?;
            }
            m
        }
        DegreeSetCase::Gap { gap } => gap_construction(s, gap)?,
    };
    check_degree_set_realization(s, &m)?;
    Ok(m)
}

fn gap_construction(s: &DegreeSet, gap: usize) -> Result<MirrorRealization> {
    let p = s.as_slice();
    let lowered: Vec<usize> = p[..gap]
        .iter()
        .map(|&v| v - 1)
        .chain(p[gap..].iter().copied())
        .collect();
    let lowered = DegreeSet::new(lowered)
        .map_err(|e| Error::InternalContradiction(format!("lowered set of {s} collapsed: {e}")))?;
    let base = kapoor_realize(&lowered)?;
    let bump: Vec<usize> = p[..gap].iter().map(|&v| v - 1).collect();
    let (mut graph, pairing) = kronecker_k2(base.as_lgraph()).into_parts();
    for a in 0..base.n() {
        if bump.contains(&base.degree(a)) {
            if graph.has_edge(a, pairing.image(a)) {
                return Err(Error::InternalContradiction(format!(
                    "mirror edge at vertex {a} already present"
                )));
            }
            graph = graph.with_edge(a, pairing.image(a), true);
        }
    }
    MirrorRealization::new(graph, pairing)
}

fn check_degree_set_realization(s: &DegreeSet, m: &MirrorRealization) -> Result<()> {
    let g = m.graph();
    if g.n1() != s.max() || g.n2() != s.max() {
        return Err(Error::InternalContradiction(format!(
            "stable sets of size {}x{} for {s}",
            g.n1(),
            g.n2()
        )));
    }
    let left = DegreeSet::of_degrees(g.left_degree_vec());
    let right = DegreeSet::of_degrees(g.right_degree_vec());
    let isolated = g.left_degree_vec().contains(&0) || g.right_degree_vec().contains(&0);
    if left.as_ref() != Some(s) || right.as_ref() != Some(s) || isolated {
        return Err(Error::InternalContradiction(format!(
            "degree sets {left:?} / {right:?} for {s}"
        )));
    }
    Ok(())
}
