//! Proper edge colourings of graphs and multigraphs.
//!
//! Colours are `0..k` internally. Colour classes are matchings of the host;
//! in a multigraph parallel instances always receive distinct colours.

mod equalize;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph, SimpleGraph};

pub use equalize::{equalize, equalize_traced, is_equalized};

/// A proper `k`-edge colouring of a multigraph.
///
/// `colors[i]` is the colour of `host.instances()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Multigraph,
    instances: Vec<Edge>,
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Validates that every instance has a colour below `k` and that each
    /// class is a matching.
    pub fn new(host: Multigraph, colors: Vec<usize>, k: usize) -> Result<Self> {
        let instances = host.instances();
        if colors.len() != instances.len() {
            return Err(Error::Precondition(format!(
                "{} colours given for {} edge instances",
                colors.len(),
                instances.len()
            )));
        }
        let c = EdgeColoring {
            host,
            instances,
            colors,
            k,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn of_simple(g: &SimpleGraph, colors: Vec<usize>, k: usize) -> Result<Self> {
        Self::new(Multigraph::from_simple(g), colors, k)
    }

    /// Builds the colouring whose class `i` is `classes[i]`; the host is the
    /// multiset union of the classes.
    pub fn from_classes(vertex_count: usize, classes: &[Vec<Edge>]) -> Result<Self> {
        let mut tagged: Vec<(Edge, usize)> = classes
            .iter()
            .enumerate()
            .flat_map(|(c, class)| class.iter().map(move |&e| (e, c)))
            .collect();
        tagged.sort_unstable();
        let mut host = Multigraph::new(vertex_count);
        for &(e, _) in &tagged {
            host.add(e, 1)?;
        }
        let colors = tagged.into_iter().map(|(_, c)| c).collect();
        Self::new(host, colors, classes.len())
    }

    fn validate(&self) -> Result<()> {
        let n = self.host.vertex_count();
        let mut seen = vec![usize::MAX; n * self.k.max(1)];
        for (i, (&e, &c)) in self.instances.iter().zip(&self.colors).enumerate() {
            if c >= self.k {
                return Err(Error::Precondition(format!(
                    "instance {i} ({e:?}) has colour {c} outside 0..{}",
                    self.k
                )));
            }
            for w in [e.u(), e.v()] {
                let slot = &mut seen[w * self.k + c];
                if *slot != usize::MAX {
                    return Err(Error::Precondition(format!(
                        "colour {c} appears twice at vertex {w}"
                    )));
                }
                *slot = i;
            }
        }
        Ok(())
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn instances(&self) -> &[Edge] {
        &self.instances
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Colour classes in colour order, each sorted.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.k];
        for (&e, &c) in self.instances.iter().zip(&self.colors) {
            classes[c].push(e);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn sum_of_squares(&self) -> usize {
        self.class_sizes().iter().map(|s| s * s).sum()
    }

    /// Removes `count` surplus instances from the host (see
    /// [`crate::graph::delete_edge_instances`]). Where a pair loses copies,
    /// the copies with the highest colours go.
    pub fn trim_surplus(&self, count: usize) -> Result<EdgeColoring> {
        let trimmed = crate::graph::delete_edge_instances(&self.host, count)?;
        let mut colors = Vec::with_capacity(trimmed.edge_count());
        let mut i = 0;
        for (e, old) in self.host.pairs() {
            let keep = trimmed.multiplicity(e);
            let mut group: Vec<usize> = self.colors[i..i + old].to_vec();
            group.sort_unstable();
            colors.extend_from_slice(&group[..keep]);
            i += old;
        }
        EdgeColoring::new(trimmed, colors, self.k)
    }

    pub(crate) fn with_colors(&self, colors: Vec<usize>) -> EdgeColoring {
        EdgeColoring {
            host: self.host.clone(),
            instances: self.instances.clone(),
            colors,
            k: self.k,
        }
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EdgeColoring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("classes", &self.classes())?;
        st.end()
    }
}

/// Backtracking search for a proper `k`-edge colouring of `h`.
///
/// The next instance coloured is the one with the fewest free colours (ties
/// to the lowest index), trying the lowest feasible colour first. A fresh
/// colour is only opened as the next unused index, and parallel copies of a
/// pair take increasing colours. Instances with more edges than `k` perfect
/// matchings could hold are rejected without search.
pub fn find_k_edge_coloring(h: &Multigraph, k: usize) -> Option<EdgeColoring> {
    find_k_edge_coloring_within(h, k, &Budget::unlimited()).expect("unlimited budget")
}

pub fn find_k_edge_coloring_within(
    h: &Multigraph,
    k: usize,
    budget: &Budget,
) -> Result<Option<EdgeColoring>> {
    if h.max_degree() > k {
        return Ok(None);
    }
    let instances = h.instances();
    let touched = (0..h.vertex_count())
        .filter(|&v| instances.iter().any(|e| e.touches(v)))
        .count();
    if instances.len() > k * (touched / 2) {
        return Ok(None);
    }
    let mut search = ColorSearch {
        instances: &instances,
        k,
        used: vec![false; h.vertex_count() * k.max(1)],
        colors: vec![UNCOLORED; instances.len()],
        budget,
    };
    if search.extend(0, 0)? {
        Ok(Some(EdgeColoring::new(h.clone(), search.colors, k)?))
    } else {
        Ok(None)
    }
}

const UNCOLORED: usize = usize::MAX;

struct ColorSearch<'a> {
    instances: &'a [Edge],
    k: usize,
    used: Vec<bool>,
    colors: Vec<usize>,
    budget: &'a Budget,
}

impl ColorSearch<'_> {
    /// Lowest colour an instance may take: above its previous parallel copy.
    fn floor(&self, idx: usize) -> usize {
        match idx.checked_sub(1) {
            Some(prev) if self.instances[prev] == self.instances[idx] => self.colors[prev] + 1,
            _ => 0,
        }
    }

    fn free(&self, idx: usize, c: usize) -> bool {
        let e = self.instances[idx];
        !self.used[e.u() * self.k + c] && !self.used[e.v() * self.k + c]
    }

    /// Most constrained uncoloured instance and its number of options.
    fn pick(&self, opened: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for idx in 0..self.instances.len() {
            if self.colors[idx] != UNCOLORED {
                continue;
            }
            // copies are coloured in index order
            if idx > 0
                && self.instances[idx - 1] == self.instances[idx]
                && self.colors[idx - 1] == UNCOLORED
            {
                continue;
            }
            let top = self.k.min(opened + 1);
            let options = (self.floor(idx)..top)
                .filter(|&c| self.free(idx, c))
                .count();
            if best.is_none_or(|(_, b)| options < b) {
                best = Some((idx, options));
                if options == 0 {
                    break;
                }
            }
        }
        best
    }

    fn extend(&mut self, depth: usize, opened: usize) -> Result<bool> {
        if depth == self.instances.len() {
            return Ok(true);
        }
        self.budget.tick("edge colouring search")?;
        let (idx, options) = self.pick(opened).expect("an uncoloured instance remains");
        if options == 0 {
            return Ok(false);
        }
        let e = self.instances[idx];
        let (u, v) = (e.u() * self.k, e.v() * self.k);
        for c in self.floor(idx)..self.k.min(opened + 1) {
            if self.used[u + c] || self.used[v + c] {
                continue;
            }
            self.used[u + c] = true;
            self.used[v + c] = true;
            self.colors[idx] = c;
            if self.extend(depth + 1, opened.max(c + 1))? {
                return Ok(true);
            }
            self.used[u + c] = false;
            self.used[v + c] = false;
        }
        self.colors[idx] = UNCOLORED;
        Ok(false)
    }
}

/// Exact chromatic index of a simple graph: `Δ` or `Δ + 1`.
pub fn chromatic_index(g: &SimpleGraph) -> usize {
    chromatic_index_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn chromatic_index_within(g: &SimpleGraph, budget: &Budget) -> Result<usize> {
    Ok(optimal_edge_coloring_within(g, budget)?.k())
}

/// A proper colouring of `g` with exactly `χ'(g)` colours.
pub fn optimal_edge_coloring_within(g: &SimpleGraph, budget: &Budget) -> Result<EdgeColoring> {
    let h = Multigraph::from_simple(g);
    let delta = g.max_degree();
    if let Some(c) = find_k_edge_coloring_within(&h, delta, budget)? {
        return Ok(c);
    }
    // Vizing: Δ + 1 always suffices for a simple graph.
    find_k_edge_coloring_within(&h, delta + 1, budget)?
        .ok_or_else(|| Error::Internal(format!("no {}-edge colouring exists", delta + 1)))
}

/// A `k`-edge colouring of `h` with class sizes all within one of each other.
pub fn equalized_k_coloring(h: &Multigraph, k: usize) -> Option<EdgeColoring> {
    equalized_k_coloring_within(h, k, &Budget::unlimited()).expect("unlimited budget")
}

pub fn equalized_k_coloring_within(
    h: &Multigraph,
    k: usize,
    budget: &Budget,
) -> Result<Option<EdgeColoring>> {
    Ok(find_k_edge_coloring_within(h, k, budget)?.map(|c| equalize(&c)))
}

/// An edge colouring of `g` with every class of size at most `m`, using
/// `max(χ'(g), ⌈|E|/m⌉)` colours.
pub fn optimal_m_bounded_coloring(g: &SimpleGraph, m: usize) -> Result<EdgeColoring> {
    optimal_m_bounded_coloring_within(g, m, &Budget::unlimited())
}

pub fn optimal_m_bounded_coloring_within(
    g: &SimpleGraph,
    m: usize,
    budget: &Budget,
) -> Result<EdgeColoring> {
    let chi = chromatic_index_within(g, budget)?;
    m_bounded_with_chi(g, m, chi, budget)
}

pub(crate) fn m_bounded_with_chi(
    g: &SimpleGraph,
    m: usize,
    chi: usize,
    budget: &Budget,
) -> Result<EdgeColoring> {
    if m == 0 {
        return Err(Error::Parameter("m must be at least 1".into()));
    }
    let k = chi.max(g.edge_count().div_ceil(m));
    equalized_k_coloring_within(&Multigraph::from_simple(g), k, budget)?
        .ok_or_else(|| Error::Internal(format!("graph with χ' = {chi} is not {k}-colourable")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn named_chromatic_indices() {
        assert_eq!(chromatic_index(&SimpleGraph::new(3)), 0);
        assert_eq!(chromatic_index(&named::cycle(4)), 2);
        assert_eq!(chromatic_index(&named::complete(3)), 3);
        assert_eq!(chromatic_index(&named::cycle(7)), 3);
        assert_eq!(chromatic_index(&named::complete(4)), 3);
        assert_eq!(chromatic_index(&named::complete(5)), 5);
        assert_eq!(chromatic_index(&named::petersen()), 4);
    }

    #[test]
    fn below_max_degree_is_uncolourable() {
        let h = Multigraph::from_simple(&named::star(4));
        assert!(find_k_edge_coloring(&h, 3).is_none());
        assert!(find_k_edge_coloring(&h, 4).is_some());
    }

    #[test]
    fn parallel_edges_get_distinct_colours() {
        let mut h = Multigraph::new(2);
        h.add(Edge::new(0, 1), 3).unwrap();
        assert!(find_k_edge_coloring(&h, 2).is_none());
        let c = find_k_edge_coloring(&h, 3).unwrap();
        assert_eq!(c.class_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn petersen_is_class_two() {
        let h = Multigraph::from_simple(&named::petersen());
        assert!(find_k_edge_coloring(&h, 3).is_none());
        let c = find_k_edge_coloring(&h, 4).unwrap();
        assert_eq!(c.k(), 4);
        assert_eq!(c.instances().len(), 15);
    }

    #[test]
    fn invalid_colourings_rejected() {
        let p3 = named::path(3);
        assert!(EdgeColoring::of_simple(&p3, vec![0, 0], 2).is_err());
        assert!(EdgeColoring::of_simple(&p3, vec![0, 2], 2).is_err());
        assert!(EdgeColoring::of_simple(&p3, vec![0], 2).is_err());
        assert!(EdgeColoring::of_simple(&p3, vec![0, 1], 2).is_ok());
    }

    #[test]
    fn from_classes_builds_host() {
        let e = Edge::new(0, 1);
        let c = EdgeColoring::from_classes(2, &[vec![e], vec![e]]).unwrap();
        assert_eq!(c.host().multiplicity(e), 2);
        assert_eq!(c.classes(), vec![vec![e], vec![e]]);
        assert!(EdgeColoring::from_classes(3, &[vec![e, Edge::new(1, 2)]]).is_err());
    }

    #[test]
    fn trim_surplus_drops_high_colours() {
        let e = Edge::new(0, 1);
        let c = EdgeColoring::from_classes(2, &[vec![e], vec![], vec![e]]).unwrap();
        let t = c.trim_surplus(1).unwrap();
        assert_eq!(t.class_sizes(), vec![1, 0, 0]);
    }

    #[test]
    fn json_shape() {
        let c = EdgeColoring::of_simple(&named::path(3), vec![1, 0], 2).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"k":2,"classes":[[[1,2]],[[0,1]]]}"#
        );
    }

    #[test]
    fn m_bounded_examples() {
        let c = optimal_m_bounded_coloring(&named::star(3), 1).unwrap();
        assert_eq!(c.class_sizes(), vec![1, 1, 1]);

        let p = named::petersen();
        let c = optimal_m_bounded_coloring(&p, 5).unwrap();
        let mut sizes = c.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4, 4, 4]);

        let c = optimal_m_bounded_coloring(&p, 3).unwrap();
        assert_eq!(c.class_sizes(), vec![3; 5]);
        assert!(optimal_m_bounded_coloring(&p, 0).is_err());
    }

    #[test]
    fn equalized_cycle_colourings() {
        let h = Multigraph::from_simple(&named::cycle(4));
        assert_eq!(
            equalized_k_coloring(&h, 2).unwrap().class_sizes(),
            vec![2, 2]
        );
        let mut sizes = equalized_k_coloring(&h, 3).unwrap().class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
        let p = Multigraph::from_simple(&named::petersen());
        let mut sizes = equalized_k_coloring(&p, 4).unwrap().class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4, 4, 4]);
    }
}
