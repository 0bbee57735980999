//! Isomorph-free enumeration of bipartite realizations at desk scale.
//!
//! Matrices are generated row by row. Columns that so far have identical
//! partial columns and identical target degree are interchangeable, so for each
//! row only the number of ones placed in each such cell is chosen; this removes
//! all column relabelings from the search. Remaining duplicates (row
//! relabelings and, optionally, side swaps) are removed by reducing every leaf
//! to its canonical form. A Gale–Ryser test on the residual degrees prunes
//! every dead branch.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::BitMatrix;
use crate::detect::find_mirror_pairing;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::iso::{canonical_form, canonical_form_with_swap};
use crate::pairing::MirrorPairing;
use crate::realize::gale_ryser_check;
use crate::sequence::DegreeSequence;

/// Default limit on backtracking nodes.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Identify a graph with its transpose. Only takes effect when both
    /// sequences coincide.
    pub allow_side_swap: bool,
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Shuffles the branching order. The output does not depend on it.
    pub shuffle_seed: Option<u64>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            allow_side_swap: true,
            budget: DEFAULT_BUDGET,
            shuffle_seed: None,
        }
    }
}

/// One isomorphism class, with a mirror pairing when the class is mirror.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassWitness {
    pub graph: BipartiteGraph,
    pub pairing: Option<MirrorPairing>,
}

impl ClassWitness {
    fn classify(graph: BipartiteGraph) -> Self {
        let pairing = find_mirror_pairing(&graph);
        ClassWitness { graph, pairing }
    }

    pub fn is_mirror(&self) -> bool {
        self.pairing.is_some()
    }
}

/// Counts of `Bipp(P,P)` and `Mirr(P,P)` with one witness per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub sequence: DegreeSequence,
    pub bipp_count: usize,
    pub mirr_count: usize,
    pub witnesses: Vec<ClassWitness>,
}

impl RealizationReport {
    /// Every realizing class is mirror.
    pub fn all_mirror(&self) -> bool {
        self.bipp_count == self.mirr_count
    }
}

/// One representative per isomorphism class of bipartite graphs realizing
/// `(p, q)`, each in canonical form, sorted row-major.
pub fn enumerate_realizations(
    p: &DegreeSequence,
    q: &DegreeSequence,
    allow_side_swap: bool,
) -> Result<Vec<BipartiteGraph>> {
    enumerate_realizations_with(
        p,
        q,
        &EnumerationOptions {
            allow_side_swap,
            ..Default::default()
        },
    )
}

pub fn enumerate_realizations_with(
    p: &DegreeSequence,
    q: &DegreeSequence,
    options: &EnumerationOptions,
) -> Result<Vec<BipartiteGraph>> {
    if !gale_ryser_check(p, q) {
        return Ok(Vec::new());
    }
    let mut e = Enumerator {
        p: p.as_slice().to_vec(),
        swap: options.allow_side_swap && p == q,
        budget: options.budget,
        nodes: 0,
        rng: options.shuffle_seed.map(ChaCha8Rng::seed_from_u64),
        found: HashSet::new(),
    };
    let q = q.as_slice();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for j in 0..q.len() {
        match cells.last_mut() {
            Some(cell) if q[cell[0]] == q[j] => cell.push(j),
            _ => cells.push(vec![j]),
        }
    }
    let mut matrix = BitMatrix::new(p.len(), q.len());
    e.row(0, &mut matrix, q.to_vec(), cells)?;
    let mut out: Vec<BipartiteGraph> = e.found.into_iter().collect();
    out.sort_by(|a, b| a.cmp_row_major(b));
    Ok(out)
}

struct Enumerator {
    p: Vec<usize>,
    swap: bool,
    budget: u64,
    nodes: u64,
    rng: Option<ChaCha8Rng>,
    found: HashSet<BipartiteGraph>,
}

impl Enumerator {
    fn row(
        &mut self,
        i: usize,
        matrix: &mut BitMatrix,
        residual: Vec<usize>,
        cells: Vec<Vec<usize>>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { limit: self.budget });
        }
        if i == self.p.len() {
            debug_assert!(residual.iter().all(|&r| r == 0));
            let g = BipartiteGraph::from_matrix(matrix.clone());
            let canon = if self.swap {
                canonical_form_with_swap(&g)
            } else {
                canonical_form(&g)
            };
            self.found.insert(canon);
            return Ok(());
        }
        let rest = DegreeSequence::new(self.p[i..].to_vec()).expect("sorted input");
        if !gale_ryser_check(&rest, &DegreeSequence::sorted(residual.clone())) {
            return Ok(());
        }

        // all columns of a cell share their residual degree
        let caps: Vec<usize> = cells
            .iter()
            .map(|c| if residual[c[0]] > 0 { c.len() } else { 0 })
            .collect();
        let mut splits = Vec::new();
        compositions(self.p[i], &caps, &mut Vec::new(), &mut splits);
        if let Some(rng) = self.rng.as_mut() {
            splits.shuffle(rng);
        }

        for split in splits {
            let mut next_residual = residual.clone();
            let mut next_cells = Vec::with_capacity(cells.len() * 2);
            for (cell, &k) in cells.iter().zip(&split) {
                for &j in &cell[..k] {
                    matrix.set(i, j, true);
                    next_residual[j] -= 1;
                }
                if k > 0 {
                    next_cells.push(cell[..k].to_vec());
                }
                if k < cell.len() {
                    next_cells.push(cell[k..].to_vec());
                }
            }
            let result = self.row(i + 1, matrix, next_residual, next_cells);
            for (cell, &k) in cells.iter().zip(&split) {
                for &j in &cell[..k] {
                    matrix.set(i, j, false);
                }
            }
            result?;
        }
        Ok(())
    }
}

/// All ways to write `total` as `k_0 + … + k_m` with `0 <= k_c <= caps[c]`.
fn compositions(total: usize, caps: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some((&cap, rest)) = caps.split_first() else {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    };
    let room: usize = rest.iter().sum();
    for k in total.saturating_sub(room)..=cap.min(total) {
        prefix.push(k);
        compositions(total - k, rest, prefix, out);
        prefix.pop();
    }
}

/// Classes of `Bipp(p, p)` with their mirror verdicts.
pub fn bipp_mirr_report(p: &DegreeSequence, options: &EnumerationOptions) -> Result<RealizationReport> {
    if !gale_ryser_check(p, p) {
        return Err(Error::NotBigraphic);
    }
    let witnesses: Vec<ClassWitness> = enumerate_realizations_with(p, p, options)?
        .into_iter()
        .map(ClassWitness::classify)
        .collect();
    Ok(RealizationReport {
        sequence: p.clone(),
        bipp_count: witnesses.len(),
        mirr_count: witnesses.iter().filter(|w| w.is_mirror()).count(),
        witnesses,
    })
}

/// All classes of `r`-regular bipartite graphs on `n + n` vertices with their
/// mirror verdicts.
pub fn regular_survey(n: usize, r: usize, options: &EnumerationOptions) -> Result<Vec<ClassWitness>> {
    let p = DegreeSequence::constant(r, n);
    Ok(enumerate_realizations_with(&p, &p, options)?
        .into_iter()
        .map(ClassWitness::classify)
        .collect())
}

/// A 3-regular bipartite graph on `6 + 6` vertices in which left vertices 0
/// and 1 are twins while no two right vertices are. It is therefore not
/// mirror.
#[rustfmt::skip]
pub fn twin_asymmetric_cubic() -> BipartiteGraph {
    BipartiteGraph::from_edges(
        6,
        6,
        [
            (0, 0), (0, 1), (0, 2),
            (1, 0), (1, 1), (1, 2),
            (2, 0), (2, 3), (2, 4),
            (3, 1), (3, 3), (3, 5),
            (4, 2), (4, 4), (4, 5),
            (5, 3), (5, 4), (5, 5),
        ],
    )
    .expect("valid edge list")
}

/// Disjoint union of even cycles `C_{2m}`, one per entry `m >= 2` of
/// `half_lengths`, with the reflection pairing `φ(v_{2i}) = v_{2m-1-2i}` on
/// each cycle.
///
/// On a cycle `v_0 … v_{2m-1}` the left vertices are `a_i = v_{2i}` and the
/// right vertices `b_i = v_{2i+1}`, placed in consecutive blocks.
pub fn even_cycle_union(half_lengths: &[usize]) -> (BipartiteGraph, MirrorPairing) {
    let n: usize = half_lengths.iter().sum();
    let mut edges = Vec::with_capacity(2 * n);
    let mut images = Vec::with_capacity(n);
    let mut offset = 0;
    for &m in half_lengths {
        assert!(m >= 2, "cycle half-length must be at least 2");
        for i in 0..m {
            edges.push((offset + i, offset + i));
            edges.push((offset + i, offset + (i + m - 1) % m));
            images.push(offset + m - 1 - i);
        }
        offset += m;
    }
    let g = BipartiteGraph::from_edges(n, n, edges).expect("distinct cycle edges");
    (g, MirrorPairing::new(images).expect("block reversal"))
}
