use std::collections::BTreeMap;

use super::{Edge, SimpleGraph};
use crate::error::{Error, Result};

/// A loopless multigraph: vertex pairs with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<Edge, usize>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            n: vertex_count,
            mult: BTreeMap::new(),
        }
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.vertex_count(),
            mult: g.edges().iter().map(|&e| (e, 1)).collect(),
        }
    }

    /// Adds `count` parallel instances of `e`.
    pub fn add(&mut self, e: Edge, count: usize) -> Result<()> {
        if e.v() >= self.n {
            return Err(Error::Structural(format!(
                "edge {e:?} has an endpoint outside 0..{}",
                self.n
            )));
        }
        if count > 0 {
            *self.mult.entry(e).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, e: Edge) -> usize {
        self.mult.get(&e).copied().unwrap_or(0)
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.values().sum()
    }

    /// Distinct vertex pairs with their multiplicities, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.mult.iter().map(|(&e, &c)| (e, c))
    }

    /// Every edge instance, parallel copies adjacent, pairs in lexicographic order.
    pub fn instances(&self) -> Vec<Edge> {
        self.pairs()
            .flat_map(|(e, c)| std::iter::repeat_n(e, c))
            .collect()
    }

    /// Degree counted with multiplicity.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for (e, c) in self.pairs() {
            deg[e.u()] += c;
            deg[e.v()] += c;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// `|E(h)| - |E(underlying_simple(h))|`: instances removable without
    /// losing a pair.
    pub fn surplus(&self) -> usize {
        self.edge_count() - self.mult.len()
    }
}

pub fn underlying_simple(h: &Multigraph) -> SimpleGraph {
    let mut g = SimpleGraph::new(h.n);
    for (e, _) in h.pairs() {
        g.add_edge(e.u(), e.v())
            .expect("multigraph pairs are valid edges");
    }
    g
}

/// Removes `count` surplus edge instances, never dropping a pair entirely.
///
/// Each step decrements a pair of maximum multiplicity, the lexicographically
/// smallest among ties.
pub fn delete_edge_instances(h: &Multigraph, count: usize) -> Result<Multigraph> {
    if count > h.surplus() {
        return Err(Error::Precondition(format!(
            "cannot delete {count} instances: only {} are surplus",
            h.surplus()
        )));
    }
    let mut out = h.clone();
    for _ in 0..count {
        let mut best: Option<(Edge, usize)> = None;
        for (e, c) in out.pairs() {
            if best.is_none_or(|(_, bc)| c > bc) {
                best = Some((e, c));
            }
        }
        let (e, _) = best.expect("surplus implies a pair exists");
        *out.mult.get_mut(&e).unwrap() -= 1;
    }
    Ok(out)
}
