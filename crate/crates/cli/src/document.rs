//! JSON graph interchange documents.
//!
//! ```json
//! {"kind":"bipartite","n1":2,"n2":2,"edges":[[0,0],[1,1]],"pairing":[0,1]}
//! {"kind":"lgraph","n":2,"edges":[[0,0],[0,1]]}
//! ```
//!
//! Indices are 0-based. L-graph edges are written `[i, j]` with `i <= j`;
//! `i == j` is a loop. The writer emits edges sorted, which makes
//! `write(read(doc))` byte-identical for documents it produced.

use anyhow::{bail, ensure, Context, Result};
use mirrorgraph::{BipartiteGraph, LGraph, MirrorPairing, MirrorRealization, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GraphDocument {
    Bipartite {
        n1: usize,
        n2: usize,
        edges: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pairing: Option<Vec<usize>>,
    },
    Lgraph {
        n: usize,
        edges: Vec<[usize; 2]>,
    },
}

impl GraphDocument {
    pub fn from_bipartite(g: &BipartiteGraph, pairing: Option<&MirrorPairing>) -> Self {
        GraphDocument::Bipartite {
            n1: g.n1(),
            n2: g.n2(),
            edges: g.edges().map(|(i, j)| [i, j]).collect(),
            pairing: pairing.map(|p| p.as_slice().to_vec()),
        }
    }

    pub fn from_realization(m: &MirrorRealization) -> Self {
        Self::from_bipartite(m.graph(), Some(m.pairing()))
    }

    pub fn from_lgraph(h: &LGraph) -> Self {
        GraphDocument::Lgraph {
            n: h.n(),
            edges: h.edges().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self::from_lgraph(g.as_lgraph())
    }

    /// Parses and validates a document.
    pub fn read(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text).context("malformed graph document")?;
        doc.validate()?;
        Ok(doc)
    }

    /// Canonical serialization: compact JSON, sorted edges, trailing newline.
    pub fn write(&self) -> String {
        let mut doc = self.clone();
        match &mut doc {
            GraphDocument::Bipartite { edges, .. } => edges.sort_unstable(),
            GraphDocument::Lgraph { edges, .. } => {
                for e in edges.iter_mut() {
                    e.sort_unstable();
                }
                edges.sort_unstable();
            }
        }
        let mut s = serde_json::to_string(&doc).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GraphDocument::Bipartite {
                n1,
                n2,
                edges,
                pairing,
            } => {
                BipartiteGraph::from_edges(*n1, *n2, edges.iter().map(|e| (e[0], e[1])))
                    .context("invalid bipartite edge list")?;
                if let Some(p) = pairing {
                    ensure!(
                        n1 == n2 && p.len() == *n1,
                        "pairing needs n1 = n2 = {} entries",
                        p.len()
                    );
                    MirrorPairing::new(p.clone()).context("invalid pairing")?;
                }
            }
            GraphDocument::Lgraph { n, edges } => {
                if let Some(e) = edges.iter().find(|e| e[0] > e[1]) {
                    bail!("l-graph edge [{}, {}] must be written with i <= j", e[0], e[1]);
                }
                LGraph::from_edges(*n, edges.iter().map(|e| (e[0], e[1])))
                    .context("invalid l-graph edge list")?;
            }
        }
        Ok(())
    }

    pub fn to_bipartite(&self) -> Result<(BipartiteGraph, Option<MirrorPairing>)> {
        let GraphDocument::Bipartite {
            n1,
            n2,
            edges,
            pairing,
        } = self
        else {
            bail!("expected a bipartite document");
        };
        let g = BipartiteGraph::from_edges(*n1, *n2, edges.iter().map(|e| (e[0], e[1])))?;
        let p = pairing.clone().map(MirrorPairing::new).transpose()?;
        Ok((g, p))
    }

    pub fn to_lgraph(&self) -> Result<LGraph> {
        let GraphDocument::Lgraph { n, edges } = self else {
            bail!("expected an lgraph document");
        };
        Ok(LGraph::from_edges(*n, edges.iter().map(|e| (e[0], e[1])))?)
    }
}
