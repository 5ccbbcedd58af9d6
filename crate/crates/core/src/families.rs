//! Named base-graph families.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Edges of the 7-vertex example graph: a 4-cycle `1-2-4-3` sharing the edge
/// `{3,4}` with the triangle `{3,4,5}`, plus the pendant path `5-6-7`.
pub const FIGURE1_EDGES: [(Vertex, Vertex); 8] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (3, 4),
    (3, 5),
    (4, 5),
    (5, 6),
    (6, 7),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_n`, `n >= 2`.
    Complete(u32),
    /// `C_n`, `n >= 3`.
    Cycle(u32),
    /// `P_n` on `n >= 2` vertices.
    Path(u32),
    /// `K_{1,r}` with the centre as vertex 1, `r >= 1`.
    Star(u32),
    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    CompleteBipartite(u32, u32),
    Figure1,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Figure1 => "figure1",
        }
    }

    /// Parses a family name and its integer parameters.
    pub fn from_parts(name: &str, params: &[u32]) -> Result<Family> {
        let arity = |k: usize, family: &'static str| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::FamilyParameter {
                    family,
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let family = match name {
            "complete" => {
                arity(1, "complete")?;
                Family::Complete(params[0])
            }
            "cycle" => {
                arity(1, "cycle")?;
                Family::Cycle(params[0])
            }
            "path" => {
                arity(1, "path")?;
                Family::Path(params[0])
            }
            "star" => {
                arity(1, "star")?;
                Family::Star(params[0])
            }
            "complete_bipartite" => {
                arity(2, "complete_bipartite")?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "figure1" => {
                arity(0, "figure1")?;
                Family::Figure1
            }
            other => {
                return Err(Error::FamilyParameter {
                    family: "family",
                    reason: format!("unknown family {other:?}"),
                })
            }
        };
        family.validate()?;
        Ok(family)
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::FamilyParameter {
                family: self.name(),
                reason: reason.into(),
            })
        };
        match *self {
            Family::Complete(n) if n < 2 => bad("n must be at least 2"),
            Family::Cycle(n) if n < 3 => bad("n must be at least 3"),
            Family::Path(n) if n < 2 => bad("n must be at least 2"),
            Family::Star(r) if r < 1 => bad("r must be at least 1"),
            Family::CompleteBipartite(a, b) if a < 1 || b < 1 => bad("both parts need at least one vertex"),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let (order, edges): (u32, Vec<(Vertex, Vertex)>) = match *self {
            Family::Complete(n) => (
                n,
                (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect(),
            ),
            Family::Cycle(n) => (n, (1..=n).map(|u| (u, u % n + 1)).collect()),
            Family::Path(n) => (n, (1..n).map(|u| (u, u + 1)).collect()),
            Family::Star(r) => (r + 1, (2..=r + 1).map(|v| (1, v)).collect()),
            Family::CompleteBipartite(a, b) => (
                a + b,
                (1..=a)
                    .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
                    .collect(),
            ),
            Family::Figure1 => (7, FIGURE1_EDGES.to_vec()),
        };
        Graph::from_edges(order, edges)
    }
}
