//! Mirror bipartite graphs and the degree sequences they realize.
//!
//! A bipartite graph `G = (V₁ ∪ V₂, E)` with `|V₁| = |V₂| = n` is *mirror* when
//! some bijection `φ : V₁ → V₂` satisfies `uφ(v) ∈ E ⇔ φ(u)v ∈ E`. Mirror
//! graphs are exactly the products `H ⊗ K₂` of l-graphs `H` (graphs with at
//! most one loop per vertex) with `K₂`, which ties three notions together: a
//! sequence `P` is loop graphic iff `(P, P)` is bigraphic iff some mirror
//! graph realizes `(P, P)`.
//!
//! The crate provides:
//!
//! - the value types [`DegreeSequence`], [`DegreeSet`], [`BipartiteGraph`],
//!   [`LGraph`], [`SimpleGraph`] and [`MirrorPairing`];
//! - bigraphic tests and constructive realizations ([`realize`]);
//! - the `⊗K₂` product, folding and bipartite complement ([`transform`]);
//! - exact mirror detection ([`detect`]);
//! - degree-set realizations of minimum order ([`degset`]);
//! - isomorph-free enumeration for small cases ([`lab`]).

mod bits;
pub mod degset;
pub mod detect;
pub mod error;
pub mod graph;
pub mod iso;
pub mod lab;
pub mod pairing;
pub mod realize;
pub mod sequence;
pub mod transform;

pub use degset::{augment_universal_pair, degset_mirror_realize, kapoor_realize, DegreeSetCase};
pub use detect::{find_mirror_pairing, is_mirror, twin_signature, TwinSignature};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, LGraph, SimpleGraph};
pub use iso::{bipartite_isomorphic, canonical_form, canonical_form_with_swap, default_side_swap};
pub use lab::{
    bipp_mirr_report, enumerate_realizations, enumerate_realizations_with, regular_survey, ClassWitness,
    EnumerationOptions, RealizationReport,
};
pub use pairing::{verify_pairing, MirrorPairing};
pub use realize::{
    gale_ryser_check, hh_check, hh_check_with, loop_check, loop_realize, mirror_realize, realize_bigraphic,
    staircase, MirrorRealization, Reduction,
};
pub use sequence::{DegreeSequence, DegreeSet};
pub use transform::{
    bipartite_complement, complement_pairing, fold_to_lgraph, fold_with_pairing, kronecker_k2,
};
