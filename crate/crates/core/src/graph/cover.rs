use serde::{Deserialize, Serialize};

use super::{underlying_simple, Edge, Multigraph, SimpleGraph};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// A set of pairwise non-adjacent edges, kept in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching(Vec<Edge>);

impl Matching {
    pub fn empty() -> Self {
        Matching(Vec::new())
    }

    /// Duplicate edges collapse; two distinct edges sharing a vertex are an error.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(e.u()) || !seen.insert(e.v()) {
                return Err(Error::Structural(format!(
                    "edge {e:?} shares a vertex with another member"
                )));
            }
        }
        Ok(Matching(edges))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn covers_vertex(&self, v: usize) -> bool {
        self.0.iter().any(|e| e.touches(v))
    }

    pub fn is_subgraph_of(&self, g: &SimpleGraph) -> bool {
        self.0.iter().all(|&e| g.has_edge(e))
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = Error;

    fn try_from(edges: Vec<Edge>) -> Result<Self> {
        Matching::new(edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.0
    }
}

/// An ordered multiset of matchings. Repeats are allowed; equality ignores order.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Covering {
    pub matchings: Vec<Matching>,
}

impl Covering {
    pub fn new(matchings: Vec<Matching>) -> Self {
        Covering { matchings }
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matching> {
        self.matchings.iter()
    }

    /// Sum of member sizes, i.e. the edge count of the induced multigraph.
    pub fn total_size(&self) -> usize {
        self.matchings.iter().map(Matching::len).sum()
    }

    fn sorted(&self) -> Vec<&Matching> {
        let mut v: Vec<&Matching> = self.matchings.iter().collect();
        v.sort();
        v
    }
}

impl PartialEq for Covering {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for Covering {}

/// Multigraph whose multiplicity on `uv` counts the members of `c` containing `uv`.
pub fn induced_multigraph(g: &SimpleGraph, c: &Covering) -> Result<Multigraph> {
    let mut h = Multigraph::new(g.vertex_count());
    for (i, m) in c.iter().enumerate() {
        for &e in m.edges() {
            if !g.has_edge(e) {
                return Err(Error::InvalidCovering(format!(
                    "matching {i} contains {e:?}, which is not an edge of the graph"
                )));
            }
            h.add(e, 1)?;
        }
    }
    Ok(h)
}

/// Projects each colour class of a colouring of `h` back onto `g`.
///
/// `h` must have `g` as its underlying simple graph and `coloring` must be a
/// colouring of `h`. The result has one matching per colour, empty classes
/// included.
pub fn covering_induced_by_coloring(
    g: &SimpleGraph,
    h: &Multigraph,
    coloring: &EdgeColoring,
) -> Result<Covering> {
    if underlying_simple(h) != *g {
        return Err(Error::Structural(
            "multigraph's underlying simple graph differs from the graph".into(),
        ));
    }
    if coloring.host() != h {
        return Err(Error::Structural(
            "colouring is not a colouring of the multigraph".into(),
        ));
    }
    let matchings = coloring
        .classes()
        .into_iter()
        .map(Matching::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(Covering::new(matchings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn e(u: usize, v: usize) -> Edge {
        Edge::new(u, v)
    }

    #[test]
    fn matching_rejects_adjacent_edges() {
        assert!(Matching::new([e(0, 1), e(1, 2)]).is_err());
        assert_eq!(Matching::new([e(2, 3), e(0, 1), e(0, 1)]).unwrap().len(), 2);
    }

    #[test]
    fn repeated_matching_gives_multiplicity_two() {
        let g = named::path(2);
        let m = Matching::new([e(0, 1)]).unwrap();
        let h = induced_multigraph(&g, &Covering::new(vec![m.clone(), m])).unwrap();
        assert_eq!(h.multiplicity(e(0, 1)), 2);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn partition_covering_induces_the_graph() {
        let c4 = named::cycle(4);
        let c = Covering::new(vec![
            Matching::new([e(0, 1), e(2, 3)]).unwrap(),
            Matching::new([e(1, 2), e(0, 3)]).unwrap(),
        ]);
        let h = induced_multigraph(&c4, &c).unwrap();
        assert_eq!(h, Multigraph::from_simple(&c4));
    }

    #[test]
    fn non_edge_is_invalid_covering() {
        let g = named::path(3);
        let c = Covering::new(vec![Matching::new([e(0, 2)]).unwrap()]);
        assert!(matches!(
            induced_multigraph(&g, &c),
            Err(Error::InvalidCovering(_))
        ));
    }

    #[test]
    fn covering_equality_is_multiset_equality() {
        let a = Matching::new([e(0, 1)]).unwrap();
        let b = Matching::new([e(1, 2)]).unwrap();
        let x = Covering::new(vec![a.clone(), b.clone(), a.clone()]);
        let y = Covering::new(vec![b.clone(), a.clone(), a.clone()]);
        let z = Covering::new(vec![b.clone(), b, a]);
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn covering_json_shape() {
        let c = Covering::new(vec![Matching::new([e(2, 3), e(1, 0)]).unwrap()]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"matchings":[[[0,1],[2,3]]]}"#);
        let back: Covering = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Covering>(r#"{"matchings":[[[0,1],[1,2]]]}"#).is_err());
        assert!(serde_json::from_str::<Covering>(r#"{"matchings":[[[1,1]]]}"#).is_err());
    }
}
