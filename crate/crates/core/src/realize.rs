//! Bigraphic tests and constructive realizations: plain bipartite, mirror
//! bipartite, l-graph, and the staircase family `(n, n-1, …, 1)`.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, LGraph};
use crate::pairing::MirrorPairing;
use crate::sequence::DegreeSequence;
use crate::transform::fold_to_lgraph;

/// A balanced bipartite graph together with a pairing certifying it is mirror.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MirrorRealization {
    graph: BipartiteGraph,
    pairing: MirrorPairing,
    left_order: Vec<usize>,
}

impl MirrorRealization {
    /// Fails with [`Error::Dimension`] on a size mismatch and
    /// [`Error::InvalidPairing`] if the pairing does not verify.
    pub fn new(graph: BipartiteGraph, pairing: MirrorPairing) -> Result<Self> {
        if !pairing.verify(&graph)? {
            return Err(Error::InvalidPairing);
        }
        let mut left_order: Vec<usize> = (0..graph.n1()).collect();
        left_order.sort_by_key(|&i| std::cmp::Reverse(graph.left_degree(i)));
        Ok(MirrorRealization {
            graph,
            pairing,
            left_order,
        })
    }

    pub fn empty() -> Self {
        Self::new(BipartiteGraph::empty(0, 0), MirrorPairing::identity(0)).expect("empty")
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn pairing(&self) -> &MirrorPairing {
        &self.pairing
    }

    /// `left_order[k]` is the row holding the `k`-th largest degree (ties by row index).
    pub fn left_order(&self) -> &[usize] {
        &self.left_order
    }

    /// Number of mirror pairs.
    pub fn n(&self) -> usize {
        self.graph.n1()
    }

    /// The realized sequence `P` (both sides carry it).
    pub fn sequence(&self) -> DegreeSequence {
        self.graph.left_degrees()
    }

    pub fn into_parts(self) -> (BipartiteGraph, MirrorPairing) {
        (self.graph, self.pairing)
    }
}

/// Gale–Ryser: `Σp = Σq` and `Σ_{i≤k} p_i ≤ Σ_j min(q_j, k)` for every `k`.
pub fn gale_ryser_check(p: &DegreeSequence, q: &DegreeSequence) -> bool {
    gale_ryser(p.as_slice(), q.as_slice())
}

fn gale_ryser(p: &[usize], q: &[usize]) -> bool {
    if p.iter().sum::<usize>() != q.iter().sum::<usize>() {
        return false;
    }
    // conj[t] = #{j : q_j > t}, so Σ_j min(q_j, k) = conj[0] + … + conj[k-1]
    let n = p.len();
    let mut conj = vec![0usize; n];
    for &v in q {
        for c in conj.iter_mut().take(v.min(n)) {
            *c += 1;
        }
    }
    let (mut lhs, mut rhs) = (0usize, 0usize);
    for k in 0..n {
        lhs += p[k];
        rhs += conj[k];
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Which side the bipartite Havel–Hakimi reduction deletes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    /// Always delete the largest element of the left sequence.
    #[default]
    Left,
    /// Alternate between the left and right sequences.
    Alternate,
}

/// Bipartite Havel–Hakimi: repeatedly delete the largest `p₁` and subtract one
/// from the `p₁` largest entries of the other sequence.
pub fn hh_check(p: &DegreeSequence, q: &DegreeSequence) -> bool {
    hh_check_with(p, q, Reduction::Left)
}

pub fn hh_check_with(p: &DegreeSequence, q: &DegreeSequence, reduction: Reduction) -> bool {
    let mut left = p.as_slice().to_vec();
    let mut right = q.as_slice().to_vec();
    let mut left_turn = true;
    loop {
        let (from, onto) = if left_turn {
            (&mut left, &mut right)
        } else {
            (&mut right, &mut left)
        };
        if from.is_empty() {
            return onto.iter().all(|&v| v == 0);
        }
        let d = from.remove(0);
        if d > onto.len() || (d > 0 && onto[d - 1] == 0) {
            return false;
        }
        // ties: the earliest positions in sorted order receive the subtraction
        for v in &mut onto[..d] {
            *v -= 1;
        }
        onto.sort_unstable_by(|a, b| b.cmp(a));
        if reduction == Reduction::Alternate {
            left_turn = !left_turn;
        }
    }
}

/// Realizes `(p, q)` so that row `i` has degree `p[i]` and column `j` has degree `q[j]`.
pub fn realize_bigraphic(p: &DegreeSequence, q: &DegreeSequence) -> Result<BipartiteGraph> {
    if !hh_check(p, q) {
        return Err(Error::NotBigraphic);
    }
    let mut matrix = BitMatrix::new(p.len(), q.len());
    let mut residual = q.as_slice().to_vec();
    let mut columns: Vec<usize> = (0..q.len()).collect();
    for (i, &d) in p.iter().enumerate() {
        columns.sort_by_key(|&j| std::cmp::Reverse(residual[j]));
        for &j in &columns[..d] {
            if residual[j] == 0 {
                return Err(Error::InternalContradiction(format!(
                    "row {i} ran out of columns with residual degree"
                )));
            }
            residual[j] -= 1;
            matrix.set(i, j, true);
        }
    }
    Ok(BipartiteGraph::from_matrix(matrix))
}

/// Builds a mirror bipartite graph realizing `(p, p)` by peeling off one
/// mirror pair at a time.
///
/// Each pass takes the vertex pair `{a₁, b₁}` of largest remaining degree
/// `p₁`, joins `a₁b₁`, and joins `a₁` to `b_i` and `b₁` to `a_i` for the next
/// `p₁ - 1` largest entries, which are then reduced by one and re-sorted. The
/// reduced sequence is re-checked every pass. Row `i` and column `i` form the
/// mirror pair, so the returned pairing is the identity and row `i` carries
/// degree `p[i]`.
pub fn mirror_realize(p: &DegreeSequence) -> Result<MirrorRealization> {
    if !gale_ryser_check(p, p) {
        return Err(Error::NotBigraphic);
    }
    let n = p.len();
    let mut matrix = BitMatrix::new(n, n);
    // (remaining degree, row) sorted by degree, ties in previous order
    let mut rest: Vec<(usize, usize)> = p.iter().copied().zip(0..n).collect();
    while !rest.is_empty() {
        let (p1, a1) = rest.remove(0);
        if p1 > rest.len() + 1 || rest[..p1.saturating_sub(1)].iter().any(|&(d, _)| d == 0) {
            return Err(Error::InternalContradiction(format!(
                "vertex {a1} of degree {p1} cannot be attached"
            )));
        }
        if p1 > 0 {
            matrix.set(a1, a1, true);
        }
        for (d, v) in rest.iter_mut().take(p1.saturating_sub(1)) {
            matrix.set(a1, *v, true);
            matrix.set(*v, a1, true);
            *d -= 1;
        }
        rest.sort_by_key(|&(d, _)| std::cmp::Reverse(d));
        let reduced: Vec<usize> = rest.iter().map(|&(d, _)| d).collect();
        if !gale_ryser(&reduced, &reduced) {
            return Err(Error::InternalContradiction(format!(
                "reduced sequence {reduced:?} is not bigraphic"
            )));
        }
    }
    MirrorRealization::new(BipartiteGraph::from_matrix(matrix), MirrorPairing::identity(n))
}

/// True iff some l-graph has degree sequence `p`; decided as `(p, p)` bigraphic.
pub fn loop_check(p: &DegreeSequence) -> bool {
    gale_ryser_check(p, p)
}

/// An l-graph realizing `p`, obtained by folding [`mirror_realize`].
pub fn loop_realize(p: &DegreeSequence) -> Result<LGraph> {
    if !loop_check(p) {
        return Err(Error::NotLoopGraphic);
    }
    fold_to_lgraph(&mirror_realize(p)?)
}

/// The unique realization of `((n,…,1), (n,…,1))`: `a_i` is adjacent to
/// `b_0 … b_{n-1-i}`.
///
/// Row `i` and column `i` both have degree `n - i`, and the biadjacency matrix
/// is symmetric, so the pairing is the identity.
pub fn staircase(n: usize) -> MirrorRealization {
    let graph = BipartiteGraph::from_fn(n, n, |i, j| i + j < n);
    MirrorRealization::new(graph, MirrorPairing::identity(n)).expect("staircase is symmetric")
}
