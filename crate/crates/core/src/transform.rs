//! Kronecker product with `K₂`, folding a mirror graph back to an l-graph, and
//! the bipartite complement.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, LGraph};
use crate::pairing::MirrorPairing;
use crate::realize::MirrorRealization;

/// `H ⊗ K₂` as a mirror bipartite graph.
///
/// Row `i` is `(a_i, 1)` and column `j` is `(a_j, 2)`, so the biadjacency
/// matrix is the adjacency matrix of `h` (loops on the diagonal) and the
/// pairing is the identity.
pub fn kronecker_k2(h: &LGraph) -> MirrorRealization {
    let graph = BipartiteGraph::from_matrix(h.matrix().clone());
    MirrorRealization::new(graph, MirrorPairing::identity(h.n())).expect("adjacency matrix is symmetric")
}

/// The l-graph `H` with `a_i a_j ∈ E(H)` iff `a_i φ(a_j) ∈ E(G)`.
pub fn fold_to_lgraph(m: &MirrorRealization) -> Result<LGraph> {
    fold_with_pairing(m.graph(), m.pairing())
}

/// Like [`fold_to_lgraph`] for an unchecked graph and pairing.
pub fn fold_with_pairing(g: &BipartiteGraph, pairing: &MirrorPairing) -> Result<LGraph> {
    if !pairing.verify(g)? {
        return Err(Error::InvalidPairing);
    }
    let n = pairing.len();
    let matrix = BitMatrix::from_fn(n, n, |i, j| g.has_edge(i, pairing.image(j)));
    LGraph::from_matrix(matrix)
}

/// `xy` is an edge of the result iff it is not an edge of `g`.
pub fn bipartite_complement(g: &BipartiteGraph) -> BipartiteGraph {
    BipartiteGraph::from_matrix(g.matrix().negate())
}

/// The complement keeps the same pairing valid.
pub fn complement_pairing(m: &MirrorRealization) -> Result<MirrorRealization> {
    MirrorRealization::new(bipartite_complement(m.graph()), m.pairing().clone())
}
