//! Mirror pairings: bijections `φ : V₁ → V₂` with `uφ(v) ∈ E ⇔ φ(u)v ∈ E`.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// A permutation `π` of `0..n`; `π(i) = j` means `φ(a_i) = b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MirrorPairing(Vec<usize>);

impl MirrorPairing {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(Error::NotPermutation(n));
            }
        }
        Ok(MirrorPairing(images))
    }

    pub fn identity(n: usize) -> Self {
        MirrorPairing((0..n).collect())
    }

    /// `π(i) = n - 1 - i`.
    pub fn reversal(n: usize) -> Self {
        MirrorPairing((0..n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Right partner of left vertex `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        MirrorPairing(inv)
    }

    /// The pairing transported along a relabeling `row_perm`, `col_perm`
    /// (as in [`BipartiteGraph::relabeled`]): `π' = τ ∘ π ∘ σ⁻¹`.
    pub fn relabeled(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            images[row_perm[i]] = col_perm[j];
        }
        MirrorPairing(images)
    }

    /// Prepends a new pair `(a_0, b_0)`, shifting every existing index by one.
    pub(crate) fn with_new_front_pair(&self) -> Self {
        let mut images = Vec::with_capacity(self.len() + 1);
        images.push(0);
        images.extend(self.0.iter().map(|j| j + 1));
        MirrorPairing(images)
    }

    /// Checks the mirror condition on `g`. Fails only on a size mismatch.
    pub fn verify(&self, g: &BipartiteGraph) -> Result<bool> {
        let n = self.len();
        if g.n1() != n {
            return Err(Error::Dimension {
                expected: n,
                found: g.n1(),
            });
        }
        if g.n2() != n {
            return Err(Error::Dimension {
                expected: n,
                found: g.n2(),
            });
        }
        Ok((0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, self.0[j]) == g.has_edge(j, self.0[i]))))
    }
}

/// True iff `M[i][j] = B[i][π(j)]` is symmetric.
pub fn verify_pairing(g: &BipartiteGraph, p: &MirrorPairing) -> Result<bool> {
    p.verify(g)
}
