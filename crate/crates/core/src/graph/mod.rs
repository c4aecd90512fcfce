//! Simple graphs, multigraphs, matchings and coverings.
//!
//! Vertices are `0..vertex_count`. Every edge is stored in canonical form
//! `(min, max)`, and edge collections are kept sorted so that iteration order
//! is deterministic everywhere downstream.

mod cover;
mod format;
mod multi;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cover::{covering_induced_by_coloring, induced_multigraph, Covering, Matching};
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use multi::{delete_edge_instances, underlying_simple, Multigraph};

/// An unordered vertex pair in canonical `(min, max)` order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a loop; callers parsing untrusted input go through
    /// [`Edge::try_new`].
    pub fn new(u: usize, v: usize) -> Self {
        Self::try_new(u, v).expect("loop edge")
    }

    pub fn try_new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::Structural(format!("loop at vertex {u}")));
        }
        Ok(Edge(u.min(v), u.max(v)))
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn touches(self, w: usize) -> bool {
        self.0 == w || self.1 == w
    }

    pub fn is_adjacent(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::try_new(p[0], p[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

/// A finite undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            n: vertex_count,
            edges: Vec::new(),
            adj: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from vertex pairs. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(vertex_count: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let e = Edge::try_new(u, v)?;
        if e.v() >= self.n {
            return Err(Error::Structural(format!(
                "edge {e:?} has an endpoint outside 0..{}",
                self.n
            )));
        }
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.edges.insert(pos, e);
                insert_sorted(&mut self.adj[e.u()], e.v());
                insert_sorted(&mut self.adj[e.v()], e.u());
                Ok(true)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Position of `e` in [`SimpleGraph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

/// Named graphs used throughout the tests and the documentation.
pub mod named {
    use super::SimpleGraph;

    pub fn petersen() -> SimpleGraph {
        let mut pairs = Vec::with_capacity(15);
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        SimpleGraph::from_edges(10, pairs).unwrap()
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        assert!(n >= 3);
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, pairs).unwrap()
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> SimpleGraph {
        SimpleGraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonical() {
        let e = Edge::new(5, 2);
        assert_eq!((e.u(), e.v()), (2, 5));
        assert!(Edge::try_new(3, 3).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn out_of_range_endpoint_rejected() {
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = named::petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
