//! Excessive `[m]`- and `[l,m]`-indices and their factorizations.
//!
//! `χ'_{[l,m]}(G)` is the least number of matchings, each of size in
//! `[l, m]`, whose union is `E(G)` (infinite when no such family exists).
//! It is evaluated through the closed form in terms of `|E|`, `χ'(G)` and
//! `χ'_{[l]}(G)`:
//!
//! | condition on `r = |E|/χ'` | value                |
//! |---------------------------|----------------------|
//! | `r >= m`                  | `⌈|E|/m⌉`            |
//! | `l <= r <= m`             | `χ'(G)`              |
//! | `r <= l`                  | `χ'_{[l]}(G)`        |
//!
//! The ratio is always compared by cross-multiplication. Every finite result
//! carries a witness covering.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::coloring::{self, equalize, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{
    covering_induced_by_coloring, Covering, Edge, Matching, Multigraph, SimpleGraph,
};
use crate::matching::{extend_to_lm_matching, is_lm_coverable, max_matching_with_forced};

/// A natural number or infinity; `Infinite` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexValue {
    Finite(usize),
    Infinite,
}

impl IndexValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            IndexValue::Finite(k) => Some(k),
            IndexValue::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, IndexValue::Finite(_))
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(k) => write!(f, "{k}"),
            IndexValue::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            IndexValue::Finite(k) => s.serialize_u64(*k as u64),
            IndexValue::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Which route produced an [`IndexResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    /// `|E|/χ' >= m`: value `⌈|E|/m⌉`.
    FormulaCeil,
    /// `l <= |E|/χ' <= m`: value `χ'`.
    FormulaChi,
    /// `|E|/χ' <= l`: value `χ'_{[l]}`.
    FormulaExcL,
    /// Fixed size `m` with `|E|/m >= χ'`: value `⌈|E|/m⌉`.
    LemmaCf,
    /// Exhaustive constrained colouring search.
    Search,
    NotCoverable,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

/// An index value together with the covering that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    value: IndexValue,
    witness: Option<Covering>,
    rule: Rule,
}

impl IndexResult {
    pub fn infinite() -> Self {
        IndexResult {
            value: IndexValue::Infinite,
            witness: None,
            rule: Rule::NotCoverable,
        }
    }

    /// A finite result whose value is the witness size. `rule` must not be
    /// [`Rule::NotCoverable`].
    pub fn finite(witness: Covering, rule: Rule) -> Self {
        assert_ne!(
            rule,
            Rule::NotCoverable,
            "finite result tagged not-coverable"
        );
        IndexResult {
            value: IndexValue::Finite(witness.len()),
            witness: Some(witness),
            rule,
        }
    }

    pub fn value(&self) -> IndexValue {
        self.value
    }

    pub fn witness(&self) -> Option<&Covering> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Covering> {
        self.witness
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    fn relabel(mut self, rule: Rule) -> Self {
        if self.value.is_finite() {
            self.rule = rule;
        }
        self
    }
}

/// Reasons a family of matchings fails to be an `[l,m]`-covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringDefect {
    BadBounds { l: usize, m: usize },
    NotASubgraph { index: usize, edge: Edge },
    SizeOutOfRange { index: usize, size: usize },
    Uncovered(Edge),
}

impl fmt::Display for CoveringDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringDefect::BadBounds { l, m } => write!(f, "l = {l} exceeds m = {m}"),
            CoveringDefect::NotASubgraph { index, edge } => {
                write!(f, "matching {index} uses {edge:?}, which is not an edge")
            }
            CoveringDefect::SizeOutOfRange { index, size } => {
                write!(
                    f,
                    "matching {index} has size {size} outside the allowed range"
                )
            }
            CoveringDefect::Uncovered(e) => write!(f, "edge {e:?} is not covered"),
        }
    }
}

/// Checks that every member of `c` is a matching of `g` of size in `[l, m]`
/// and that together they cover `E(g)`.
pub fn check_covering(
    g: &SimpleGraph,
    c: &Covering,
    l: usize,
    m: usize,
) -> std::result::Result<(), CoveringDefect> {
    if l > m {
        return Err(CoveringDefect::BadBounds { l, m });
    }
    let mut covered = vec![false; g.edge_count()];
    for (index, matching) in c.iter().enumerate() {
        if !(l..=m).contains(&matching.len()) {
            return Err(CoveringDefect::SizeOutOfRange {
                index,
                size: matching.len(),
            });
        }
        for &edge in matching.edges() {
            match g.edge_index(edge) {
                Some(i) => covered[i] = true,
                None => return Err(CoveringDefect::NotASubgraph { index, edge }),
            }
        }
    }
    match covered.iter().position(|&b| !b) {
        Some(i) => Err(CoveringDefect::Uncovered(g.edges()[i])),
        None => Ok(()),
    }
}

pub fn verify_covering(g: &SimpleGraph, c: &Covering, l: usize, m: usize) -> bool {
    check_covering(g, c, l, m).is_ok()
}

/// Post-hoc checks attached to a reported result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResultChecks {
    /// Value is at least `max(χ', ⌈|E|/m⌉)`.
    pub lower_bound: bool,
    /// Witness present, of matching cardinality, and a valid `[l,m]`-covering.
    pub verified: bool,
}

/// Evaluates indices of one graph, computing `χ'` once and memoising the
/// fixed-size indices it needs along the way.
pub struct IndexSolver<'a> {
    g: &'a SimpleGraph,
    chi: usize,
    budget: &'a Budget,
    m_cache: RefCell<BTreeMap<usize, IndexResult>>,
}

impl<'a> IndexSolver<'a> {
    pub fn new(g: &'a SimpleGraph, budget: &'a Budget) -> Result<Self> {
        let chi = coloring::chromatic_index_within(g, budget)?;
        Ok(IndexSolver {
            g,
            chi,
            budget,
            m_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.g
    }

    pub fn chromatic_index(&self) -> usize {
        self.chi
    }

    fn edges(&self) -> usize {
        self.g.edge_count()
    }

    /// `max(χ', ⌈|E|/m⌉)`, the universal lower bound on `χ'_{[l,m]}`.
    pub fn lower_bound(&self, m: usize) -> usize {
        self.chi.max(self.edges().div_ceil(m.max(1)))
    }

    pub fn checks(&self, r: &IndexResult, l: usize, m: usize) -> ResultChecks {
        let lower_bound = match r.value {
            IndexValue::Infinite => true,
            IndexValue::Finite(k) => k >= self.lower_bound(m),
        };
        let verified = match (&r.value, &r.witness) {
            (IndexValue::Infinite, None) => true,
            (IndexValue::Finite(k), Some(w)) => w.len() == *k && verify_covering(self.g, w, l, m),
            _ => false,
        };
        ResultChecks {
            lower_bound,
            verified,
        }
    }

    /// `χ'_{[m]}`: fewest matchings of size exactly `m` covering the edges.
    pub fn m_index(&self, m: usize) -> Result<IndexResult> {
        if m == 0 {
            return Err(Error::Parameter("m must be at least 1".into()));
        }
        if let Some(hit) = self.m_cache.borrow().get(&m) {
            return Ok(hit.clone());
        }
        let result = self.m_index_uncached(m)?;
        self.m_cache.borrow_mut().insert(m, result.clone());
        Ok(result)
    }

    fn m_index_uncached(&self, m: usize) -> Result<IndexResult> {
        if self.g.is_edgeless() {
            return Ok(IndexResult::finite(Covering::default(), Rule::LemmaCf));
        }
        if !is_lm_coverable(self.g, m) {
            return Ok(IndexResult::infinite());
        }
        if self.edges() >= m * self.chi {
            let w = self.exact_size_covering(m)?;
            return Ok(IndexResult::finite(w, Rule::LemmaCf));
        }
        self.search_m_index(m)
    }

    /// `⌈|E|/m⌉` matchings of size exactly `m` covering `E(g)`, assuming
    /// `|E| >= m·χ'`.
    ///
    /// An equalized `χ'`-colouring has every class of size at least `m`.
    /// Copies of `m` edges from existing classes are added as new classes
    /// until there are `k = ⌈|E|/m⌉` of them, surplus instances are trimmed
    /// down to exactly `k·m`, and the `k`-colouring is equalized, leaving
    /// every class with exactly `m` edges.
    fn exact_size_covering(&self, m: usize) -> Result<Covering> {
        let e = self.edges();
        let chi = self.chi;
        let k = e.div_ceil(m);
        debug_assert!(e >= m * chi && k >= chi);

        let base = coloring::equalized_k_coloring_within(
            &Multigraph::from_simple(self.g),
            chi,
            self.budget,
        )?
        .ok_or_else(|| Error::Internal(format!("no {chi}-edge colouring at χ' = {chi}")))?;
        let mut classes = base.classes();
        for j in 0..k - chi {
            let copy: Vec<Edge> = classes[j % chi].iter().take(m).copied().collect();
            classes.push(copy);
        }
        let padded = EdgeColoring::from_classes(self.g.vertex_count(), &classes)?;
        let trimmed = padded.trim_surplus(padded.instances().len() - k * m)?;
        let balanced = equalize(&trimmed);
        let cover = covering_induced_by_coloring(self.g, balanced.host(), &balanced)?;
        if cover.iter().any(|mm| mm.len() != m) {
            return Err(Error::Internal(format!(
                "padded colouring did not equalize to size {m}"
            )));
        }
        Ok(cover)
    }

    /// Smallest `k` admitting a `k`-edge colouring whose classes each extend
    /// to an `[m]`-matching. Bounded by `|E|`, which always succeeds on a
    /// coverable graph.
    fn search_m_index(&self, m: usize) -> Result<IndexResult> {
        let start = self.lower_bound(m);
        for k in start..=self.edges() {
            let mut s = ExtendableColoring {
                g: self.g,
                edges: self.g.edges(),
                k,
                m,
                classes: vec![Vec::new(); k],
                used: vec![false; self.g.vertex_count() * k],
                budget: self.budget,
            };
            if s.extend(0, 0)? {
                let mut members = Vec::with_capacity(k);
                for class in s.classes {
                    let forced = Matching::new(class)?;
                    let full = extend_to_lm_matching(self.g, &forced, m, m)?
                        .ok_or_else(|| Error::Internal("search class failed to extend".into()))?;
                    members.push(full);
                }
                return Ok(IndexResult::finite(Covering::new(members), Rule::Search));
            }
        }
        Err(Error::Internal(format!(
            "{m}-coverable graph has no [{m}]-covering with at most |E| matchings"
        )))
    }

    /// `χ'_{[l,m]}` via the three-case closed form.
    ///
    /// Where two cases overlap (`|E|/χ'` equal to `l` or `m`) every
    /// applicable case is evaluated and a disagreement is reported as
    /// [`Error::Internal`].
    pub fn lm_index(&self, l: usize, m: usize) -> Result<IndexResult> {
        check_lm(l, m)?;
        if self.g.is_edgeless() {
            return Ok(IndexResult::finite(Covering::default(), Rule::FormulaChi));
        }
        if !is_lm_coverable(self.g, l) {
            return Ok(IndexResult::infinite());
        }
        let (e, chi) = (self.edges(), self.chi);
        let ceil_case = e >= m * chi;
        let chi_case = l * chi <= e && e <= m * chi;
        let exc_case = e <= l * chi;

        let result = if ceil_case {
            IndexResult::finite(self.exact_size_covering(m)?, Rule::FormulaCeil)
        } else if chi_case {
            IndexResult::finite(self.equalized_chi_covering(l, m)?, Rule::FormulaChi)
        } else {
            self.m_index(l)?.relabel(Rule::FormulaExcL)
        };

        let mut overlaps = Vec::new();
        if ceil_case {
            overlaps.push(("ceil", IndexValue::Finite(e.div_ceil(m))));
        }
        if chi_case {
            overlaps.push(("chi", IndexValue::Finite(chi)));
        }
        if exc_case {
            overlaps.push(("exc_l", self.m_index(l)?.value));
        }
        if let Some((name, v)) = overlaps.iter().find(|(_, v)| *v != result.value) {
            return Err(Error::Internal(format!(
                "case {name} gives {v} but the primary case gives {} (l = {l}, m = {m})",
                result.value
            )));
        }
        Ok(result)
    }

    fn equalized_chi_covering(&self, l: usize, m: usize) -> Result<Covering> {
        let c = coloring::equalized_k_coloring_within(
            &Multigraph::from_simple(self.g),
            self.chi,
            self.budget,
        )?
        .ok_or_else(|| Error::Internal("graph is not χ'-colourable".into()))?;
        let cover = classes_as_covering(&c)?;
        if cover.iter().any(|mm| !(l..=m).contains(&mm.len())) {
            return Err(Error::Internal(format!(
                "equalized χ'-colouring has a class outside [{l}, {m}]"
            )));
        }
        Ok(cover)
    }

    /// Two-branch procedure: compare `χ'_{[1,m]}` with `χ'_{[1,l]}`; if the
    /// former is smaller, an equalized optimal `m`-bounded colouring is an
    /// excessive `[l,m]`-factorization, otherwise the answer is `χ'_{[l]}`.
    pub fn exc(&self, l: usize, m: usize) -> Result<IndexResult> {
        check_lm(l, m)?;
        if self.g.is_edgeless() {
            return Ok(IndexResult::finite(Covering::default(), Rule::FormulaChi));
        }
        let e = self.edges();
        let bounded_l = self.lower_bound(l);
        let bounded_m = self.lower_bound(m);
        let phi = coloring::m_bounded_with_chi(self.g, m, self.chi, self.budget)?;
        if bounded_m < bounded_l {
            let phi = equalize(&phi);
            let cover = classes_as_covering(&phi)?;
            if cover.iter().any(|mm| mm.len() < l) {
                return Err(Error::Internal(format!(
                    "equalized m-bounded colouring has a class smaller than l = {l}"
                )));
            }
            let rule = if e >= m * self.chi {
                Rule::FormulaCeil
            } else {
                Rule::FormulaChi
            };
            return Ok(IndexResult::finite(cover, rule));
        }
        Ok(self.m_index(l)?.relabel(Rule::FormulaExcL))
    }

    /// `min_{l <= i < m} χ'_{[i,i+1]}`; requires `l < m`.
    pub fn via_pairs(&self, l: usize, m: usize) -> Result<IndexValue> {
        if l == 0 || l >= m {
            return Err(Error::Parameter(format!(
                "need 1 <= l < m, got l = {l}, m = {m}"
            )));
        }
        let mut best = IndexValue::Infinite;
        for i in l..m {
            best = best.min(self.lm_index(i, i + 1)?.value);
        }
        Ok(best)
    }

    /// `χ'_{[l,∞]}`, evaluated as `χ'_{[l,|E|]}`.
    pub fn l_infinity(&self, l: usize) -> Result<IndexResult> {
        self.lm_index(l, unbounded_m(self.g, l))
    }
}

/// The upper size bound standing in for `m = ∞`.
pub fn unbounded_m(g: &SimpleGraph, l: usize) -> usize {
    g.edge_count().max(l)
}

fn check_lm(l: usize, m: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::Parameter("l must be at least 1".into()));
    }
    if l > m {
        return Err(Error::Parameter(format!("l = {l} exceeds m = {m}")));
    }
    Ok(())
}

fn classes_as_covering(c: &EdgeColoring) -> Result<Covering> {
    Ok(Covering::new(
        c.classes()
            .into_iter()
            .map(Matching::new)
            .collect::<Result<Vec<_>>>()?,
    ))
}

/// Backtracking over edge colourings in which each class stays extendable
/// to a matching of size exactly `m`.
struct ExtendableColoring<'a> {
    g: &'a SimpleGraph,
    edges: &'a [Edge],
    k: usize,
    m: usize,
    classes: Vec<Vec<Edge>>,
    used: Vec<bool>,
    budget: &'a Budget,
}

impl ExtendableColoring<'_> {
    fn extend(&mut self, idx: usize, opened: usize) -> Result<bool> {
        if idx == self.edges.len() {
            return Ok(true);
        }
        self.budget.tick("constrained colouring search")?;
        let e = self.edges[idx];
        let (u, v) = (e.u() * self.k, e.v() * self.k);
        for c in 0..self.k.min(opened + 1) {
            if self.used[u + c] || self.used[v + c] || self.classes[c].len() == self.m {
                continue;
            }
            self.classes[c].push(e);
            let forced = Matching::new(self.classes[c].iter().copied()).expect("proper class");
            if max_matching_with_forced(self.g, &forced)? >= self.m {
                self.used[u + c] = true;
                self.used[v + c] = true;
                if self.extend(idx + 1, opened.max(c + 1))? {
                    return Ok(true);
                }
                self.used[u + c] = false;
                self.used[v + c] = false;
            }
            self.classes[c].pop();
        }
        Ok(false)
    }
}

pub fn excessive_m_index(g: &SimpleGraph, m: usize) -> Result<IndexResult> {
    excessive_m_index_within(g, m, &Budget::unlimited())
}

pub fn excessive_m_index_within(g: &SimpleGraph, m: usize, budget: &Budget) -> Result<IndexResult> {
    IndexSolver::new(g, budget)?.m_index(m)
}

pub fn excessive_lm_index(g: &SimpleGraph, l: usize, m: usize) -> Result<IndexResult> {
    excessive_lm_index_within(g, l, m, &Budget::unlimited())
}

pub fn excessive_lm_index_within(
    g: &SimpleGraph,
    l: usize,
    m: usize,
    budget: &Budget,
) -> Result<IndexResult> {
    check_lm(l, m)?;
    IndexSolver::new(g, budget)?.lm_index(l, m)
}

pub fn exc_algorithm(g: &SimpleGraph, l: usize, m: usize) -> Result<IndexResult> {
    exc_algorithm_within(g, l, m, &Budget::unlimited())
}

pub fn exc_algorithm_within(
    g: &SimpleGraph,
    l: usize,
    m: usize,
    budget: &Budget,
) -> Result<IndexResult> {
    check_lm(l, m)?;
    IndexSolver::new(g, budget)?.exc(l, m)
}

pub fn lm_index_via_pairs(g: &SimpleGraph, l: usize, m: usize) -> Result<IndexValue> {
    if l == 0 || l >= m {
        return Err(Error::Parameter(format!(
            "need 1 <= l < m, got l = {l}, m = {m}"
        )));
    }
    IndexSolver::new(g, &Budget::unlimited())?.via_pairs(l, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn value(r: Result<IndexResult>) -> IndexValue {
        r.unwrap().value()
    }

    #[test]
    fn index_value_order() {
        assert!(IndexValue::Finite(100) < IndexValue::Infinite);
        assert!(IndexValue::Finite(3) < IndexValue::Finite(4));
        assert_eq!(
            serde_json::to_string(&IndexValue::Infinite).unwrap(),
            r#""infinity""#
        );
        assert_eq!(serde_json::to_string(&IndexValue::Finite(4)).unwrap(), "4");
        assert_eq!(Rule::FormulaExcL.to_string(), "FORMULA_EXC_L");
    }

    #[test]
    fn verify_covering_examples() {
        let c4 = named::cycle(4);
        let pm = Covering::new(vec![
            Matching::new([Edge::new(0, 1), Edge::new(2, 3)]).unwrap(),
            Matching::new([Edge::new(1, 2), Edge::new(0, 3)]).unwrap(),
        ]);
        assert!(verify_covering(&c4, &pm, 2, 2));
        assert!(!verify_covering(&c4, &pm, 3, 3));
        assert!(!verify_covering(&c4, &pm, 3, 2));
        let half = Covering::new(vec![pm.matchings[0].clone()]);
        assert_eq!(
            check_covering(&c4, &half, 1, 2),
            Err(CoveringDefect::Uncovered(Edge::new(0, 3)))
        );
        let foreign = Covering::new(vec![Matching::new([Edge::new(0, 2)]).unwrap()]);
        assert!(matches!(
            check_covering(&c4, &foreign, 1, 2),
            Err(CoveringDefect::NotASubgraph { .. })
        ));
    }

    #[test]
    fn m_index_examples() {
        let p = named::petersen();
        let r = excessive_m_index(&p, 3).unwrap();
        assert_eq!(r.value(), IndexValue::Finite(5));
        assert_eq!(r.rule(), Rule::LemmaCf);
        assert!(verify_covering(&p, r.witness().unwrap(), 3, 3));

        assert_eq!(
            value(excessive_m_index(&named::star(3), 2)),
            IndexValue::Infinite
        );

        let r = excessive_m_index(&p, 5).unwrap();
        assert_eq!(r.value(), IndexValue::Finite(5));
        assert_eq!(r.rule(), Rule::Search);
        assert!(verify_covering(&p, r.witness().unwrap(), 5, 5));
        assert!(excessive_m_index(&p, 0).is_err());
    }

    #[test]
    fn lm_index_examples() {
        let p = named::petersen();
        // 15/4 < 4, so this is the χ'_{[l]} case
        let r = excessive_lm_index(&p, 4, 5).unwrap();
        assert_eq!(r.value(), IndexValue::Finite(4));
        assert_eq!(r.rule(), Rule::FormulaExcL);
        assert!(verify_covering(&p, r.witness().unwrap(), 4, 5));

        for m in 1..=6 {
            assert_eq!(
                value(excessive_lm_index(&p, m, m)),
                value(excessive_m_index(&p, m))
            );
        }
        assert!(matches!(
            excessive_lm_index(&p, 0, 2),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            excessive_lm_index(&p, 3, 2),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn exc_examples() {
        let p = named::petersen();
        let r = exc_algorithm(&p, 4, 5).unwrap();
        assert_eq!(r.value(), IndexValue::Finite(4));
        assert!(verify_covering(&p, r.witness().unwrap(), 4, 5));
        assert_eq!(
            value(exc_algorithm(&named::star(3), 2, 3)),
            IndexValue::Infinite
        );
    }

    #[test]
    fn pairs_examples() {
        let p = named::petersen();
        assert_eq!(lm_index_via_pairs(&p, 3, 5).unwrap(), IndexValue::Finite(4));
        assert_eq!(
            lm_index_via_pairs(&named::path(2), 1, 2).unwrap(),
            IndexValue::Finite(1)
        );
        assert!(lm_index_via_pairs(&p, 3, 3).is_err());
    }

    #[test]
    fn edgeless_graph_needs_no_matchings() {
        let g = SimpleGraph::new(3);
        let r = excessive_lm_index(&g, 2, 3).unwrap();
        assert_eq!(r.value(), IndexValue::Finite(0));
        assert!(verify_covering(&g, r.witness().unwrap(), 2, 3));
        assert_eq!(value(excessive_m_index(&g, 4)), IndexValue::Finite(0));
        assert_eq!(value(exc_algorithm(&g, 1, 1)), IndexValue::Finite(0));
    }

    #[test]
    fn l_infinity_branches() {
        let p = named::petersen();
        let budget = Budget::unlimited();
        let s = IndexSolver::new(&p, &budget).unwrap();
        // 15/4 >= 3: the χ' branch
        assert_eq!(s.l_infinity(3).unwrap().value(), IndexValue::Finite(4));
        // 15/4 <= 5: the χ'_{[5]} branch
        assert_eq!(
            s.l_infinity(5).unwrap().value(),
            s.m_index(5).unwrap().value()
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = named::complete(11);
        let budget = Budget::new(std::time::Duration::ZERO);
        assert!(matches!(
            excessive_lm_index_within(&g, 1, 2, &budget),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
