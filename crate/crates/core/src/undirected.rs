//! Undirected graphs and their (possibly non-simple) orientations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Undirected simple graph. Edges are kept as `(min, max)` pairs in
/// lexicographic order, which is also the edge order used by the searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-edge at vertex {u}")));
            }
            if !adj[u].insert(v) {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {{{}, {}}}",
                    u.min(v),
                    u.max(v)
                )));
            }
            adj[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(UndirectedGraph {
            n,
            edges: list,
            index,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// The symmetric digraph with both arcs for every edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for &(u, v) in &self.edges {
            d.add_arc(u, v).expect("edges are valid");
            d.add_arc(v, u).expect("edges are valid");
        }
        d
    }

    /// Underlying graph of a digraph: `u ~ v` when at least one arc joins them.
    pub fn underlying(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| d.adjacent_pair(u, v))
                .map(move |v| (u, v))
        });
        Self::from_edges(n, edges).expect("digraph adjacency is simple")
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        });
        Self::from_edges(n, edges.collect::<Vec<_>>()).expect("complement is simple")
    }
}

/// Direction of one edge relative to its `(min, max)` endpoint order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeDirection {
    /// `min -> max`
    #[serde(rename = "fwd")]
    Forward,
    /// `max -> min`
    #[serde(rename = "bwd")]
    Backward,
    /// Both arcs: a reversible edge.
    Both,
}

impl EdgeDirection {
    pub fn keyword(self) -> &'static str {
        match self {
            EdgeDirection::Forward => "fwd",
            EdgeDirection::Backward => "bwd",
            EdgeDirection::Both => "both",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            EdgeDirection::Forward => EdgeDirection::Backward,
            EdgeDirection::Backward => EdgeDirection::Forward,
            EdgeDirection::Both => EdgeDirection::Both,
        }
    }

    pub(crate) fn code(self) -> u8 {
        self as u8
    }

    pub(crate) fn from_code(code: u8) -> Self {
        match code {
            0 => EdgeDirection::Forward,
            1 => EdgeDirection::Backward,
            2 => EdgeDirection::Both,
            _ => unreachable!("edge direction code {code}"),
        }
    }
}

/// An undirected graph with a direction assigned to every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: UndirectedGraph,
    assignment: Vec<EdgeDirection>,
}

impl Orientation {
    pub fn new(base: UndirectedGraph, assignment: Vec<EdgeDirection>) -> Result<Self> {
        if assignment.len() != base.edge_count() {
            return Err(Error::InvalidGraph(format!(
                "{} edge directions for {} edges",
                assignment.len(),
                base.edge_count()
            )));
        }
        Ok(Orientation { base, assignment })
    }

    /// Recovers the orientation of `base` realised by `d`. Fails when `d`
    /// has an arc off the base graph or leaves an edge unoriented.
    pub fn from_digraph(base: &UndirectedGraph, d: &Digraph) -> Result<Self> {
        if d.vertex_count() != base.vertex_count() {
            return Err(Error::InvalidGraph("vertex counts differ".into()));
        }
        for (u, v) in d.arcs() {
            if !base.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("arc ({u}, {v}) is not a base edge")));
            }
        }
        let assignment = base
            .edges()
            .iter()
            .map(|&(u, v)| match (d.has_arc(u, v), d.has_arc(v, u)) {
                (true, true) => Ok(EdgeDirection::Both),
                (true, false) => Ok(EdgeDirection::Forward),
                (false, true) => Ok(EdgeDirection::Backward),
                (false, false) => Err(Error::InvalidGraph(format!("edge {{{u}, {v}}} has no arc"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation {
            base: base.clone(),
            assignment,
        })
    }

    pub fn base(&self) -> &UndirectedGraph {
        &self.base
    }

    pub fn assignment(&self) -> &[EdgeDirection] {
        &self.assignment
    }

    pub fn direction(&self, u: usize, v: usize) -> Option<EdgeDirection> {
        self.base.edge_index(u, v).map(|i| self.assignment[i])
    }

    pub fn is_simple(&self) -> bool {
        !self.assignment.contains(&EdgeDirection::Both)
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::empty(self.base.vertex_count());
        for (&(u, v), dir) in self.base.edges().iter().zip(&self.assignment) {
            if matches!(dir, EdgeDirection::Forward | EdgeDirection::Both) {
                d.add_arc(u, v).expect("edges are valid");
            }
            if matches!(dir, EdgeDirection::Backward | EdgeDirection::Both) {
                d.add_arc(v, u).expect("edges are valid");
            }
        }
        d
    }

    /// Relabels vertices through `perm` (vertex `v` becomes `perm[v]`).
    /// `perm` must be an automorphism of the base graph.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.base.vertex_count();
        let arcs: Vec<(usize, usize)> = self.to_digraph().arcs().map(|(u, v)| (perm[u], perm[v])).collect();
        let d = Digraph::from_arcs(n, arcs)?;
        Self::from_digraph(&self.base, &d)
    }
}
