//! Bipartite graphs, l-graphs (at most one loop per vertex) and simple graphs.
//!
//! All graph values are immutable once built; the `with_*` methods return new
//! values. Vertices are identified by position only.

use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::sequence::{DegreeSequence, DegreeSet};

/// A bipartite graph `G = (V₁ ∪ V₂, E)` given by its `n1 × n2` biadjacency matrix.
///
/// Row `i` is the left vertex `a_i`, column `j` the right vertex `b_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    matrix: BitMatrix,
}

impl BipartiteGraph {
    pub fn empty(n1: usize, n2: usize) -> Self {
        BipartiteGraph {
            matrix: BitMatrix::new(n1, n2),
        }
    }

    /// `K_{n1,n2}`.
    pub fn complete(n1: usize, n2: usize) -> Self {
        Self::from_fn(n1, n2, |_, _| true)
    }

    pub fn from_fn(n1: usize, n2: usize, f: impl FnMut(usize, usize) -> bool) -> Self {
        BipartiteGraph {
            matrix: BitMatrix::from_fn(n1, n2, f),
        }
    }

    /// Builds from `(left, right)` index pairs; duplicates and out-of-range indices are errors.
    pub fn from_edges(n1: usize, n2: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut matrix = BitMatrix::new(n1, n2);
        for (i, j) in edges {
            if i >= n1 {
                return Err(Error::IndexOutOfRange { index: i, size: n1 });
            }
            if j >= n2 {
                return Err(Error::IndexOutOfRange { index: j, size: n2 });
            }
            if matrix.get(i, j) {
                return Err(Error::DuplicateEdge(i, j));
            }
            matrix.set(i, j, true);
        }
        Ok(BipartiteGraph { matrix })
    }

    pub(crate) fn from_matrix(matrix: BitMatrix) -> Self {
        BipartiteGraph { matrix }
    }

    pub(crate) fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Size of the left stable set `V₁`.
    pub fn n1(&self) -> usize {
        self.matrix.rows()
    }

    /// Size of the right stable set `V₂`.
    pub fn n2(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_balanced(&self) -> bool {
        self.n1() == self.n2()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    pub fn edge_count(&self) -> usize {
        self.matrix.ones()
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n1()).flat_map(move |i| {
            (0..self.n2())
                .filter(move |&j| self.matrix.get(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn left_degree(&self, i: usize) -> usize {
        self.matrix.row_ones(i)
    }

    pub fn right_degree(&self, j: usize) -> usize {
        self.matrix.col_ones(j)
    }

    /// Row sums in row order (unsorted).
    pub fn left_degree_vec(&self) -> Vec<usize> {
        (0..self.n1()).map(|i| self.left_degree(i)).collect()
    }

    /// Column sums in column order (unsorted).
    pub fn right_degree_vec(&self) -> Vec<usize> {
        (0..self.n2()).map(|j| self.right_degree(j)).collect()
    }

    /// Degrees of `V₁`, sorted non-increasing.
    pub fn left_degrees(&self) -> DegreeSequence {
        DegreeSequence::sorted(self.left_degree_vec())
    }

    /// Degrees of `V₂`, sorted non-increasing.
    pub fn right_degrees(&self) -> DegreeSequence {
        DegreeSequence::sorted(self.right_degree_vec())
    }

    /// Swaps the roles of the two stable sets.
    pub fn transpose(&self) -> Self {
        BipartiteGraph {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn with_edge(&self, i: usize, j: usize, present: bool) -> Self {
        let mut matrix = self.matrix.clone();
        matrix.set(i, j, present);
        BipartiteGraph { matrix }
    }

    /// Relabels vertices: left vertex `i` becomes `row_perm[i]` and right vertex `j`
    /// becomes `col_perm[j]`.
    pub fn relabeled(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        assert_eq!(row_perm.len(), self.n1());
        assert_eq!(col_perm.len(), self.n2());
        let mut matrix = BitMatrix::new(self.n1(), self.n2());
        for (i, j) in self.edges() {
            matrix.set(row_perm[i], col_perm[j], true);
        }
        BipartiteGraph { matrix }
    }

    pub(crate) fn cmp_row_major(&self, other: &Self) -> std::cmp::Ordering {
        self.n1()
            .cmp(&other.n1())
            .then(self.n2().cmp(&other.n2()))
            .then_with(|| self.matrix.cmp_row_major(&other.matrix))
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}x{} ", self.n1(), self.n2())?;
        self.matrix.fmt(f)?;
        write!(f, ")")
    }
}

/// A graph with no multiple edges and at most one loop per vertex.
///
/// A loop contributes exactly one to its vertex's degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LGraph {
    matrix: BitMatrix,
}

impl LGraph {
    pub fn empty(n: usize) -> Self {
        LGraph {
            matrix: BitMatrix::new(n, n),
        }
    }

    /// Builds from `(i, j)` pairs; `(i, i)` is a loop. `(i, j)` and `(j, i)` name the same edge.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut matrix = BitMatrix::new(n, n);
        for (i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, size: n });
                }
            }
            if matrix.get(i, j) {
                return Err(Error::DuplicateEdge(i.min(j), i.max(j)));
            }
            matrix.set(i, j, true);
            matrix.set(j, i, true);
        }
        Ok(LGraph { matrix })
    }

    /// Builds from a predicate that must be symmetric.
    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        Self::from_matrix(BitMatrix::from_fn(n, n, f))
    }

    pub(crate) fn from_matrix(matrix: BitMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Dimension {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if let Some((i, j)) = matrix.first_asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(LGraph { matrix })
    }

    pub(crate) fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.matrix.get(v, v)
    }

    pub fn loop_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.has_loop(v)).count()
    }

    /// Edges `(i, j)` with `i <= j`, loops included, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |i| {
            (i..self.n())
                .filter(move |&j| self.matrix.get(i, j))
                .map(move |j| (i, j))
        })
    }

    /// Neighbours other than `v` itself, plus one for a loop.
    pub fn degree(&self, v: usize) -> usize {
        self.matrix.row_ones(v)
    }

    pub fn degree_vec(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence, sorted non-increasing.
    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence::sorted(self.degree_vec())
    }

    pub fn with_edge(&self, i: usize, j: usize, present: bool) -> Self {
        let mut matrix = self.matrix.clone();
        matrix.set(i, j, present);
        matrix.set(j, i, present);
        LGraph { matrix }
    }
}

impl fmt::Debug for LGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LGraph({} ", self.n())?;
        self.matrix.fmt(f)?;
        write!(f, ")")
    }
}

/// A loopless graph without multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    inner: LGraph,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            inner: LGraph::empty(n),
        }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            inner: LGraph::from_fn(n, |i, j| i != j).expect("symmetric"),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_lgraph(LGraph::from_edges(n, edges)?)
    }

    /// Fails with [`Error::NotSymmetric`] naming the vertex if `h` carries a loop.
    pub fn from_lgraph(h: LGraph) -> Result<Self> {
        if let Some(v) = (0..h.n()).find(|&v| h.has_loop(v)) {
            return Err(Error::NotSymmetric(v, v));
        }
        Ok(SimpleGraph { inner: h })
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.inner.has_edge(i, j)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inner.edges()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edges().count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    pub fn degree_vec(&self) -> Vec<usize> {
        self.inner.degree_vec()
    }

    pub fn degrees(&self) -> DegreeSequence {
        self.inner.degrees()
    }

    /// The set of distinct positive degrees; `None` for an edgeless graph.
    pub fn degree_set(&self) -> Option<DegreeSet> {
        DegreeSet::of_degrees(self.degree_vec())
    }

    pub fn as_lgraph(&self) -> &LGraph {
        &self.inner
    }

    pub fn into_lgraph(self) -> LGraph {
        self.inner
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({} ", self.n())?;
        self.inner.matrix.fmt(f)?;
        write!(f, ")")
    }
}
