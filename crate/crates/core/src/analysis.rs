//! Compatibility and coherence of a graph with respect to size windows `[l, m]`.
//!
//! A graph is `[l,m]`-compatible when `χ'_{[l,m]}` meets the lower bound
//! `max(χ', ⌈|E|/m⌉)`, and `[l,m]`-coherent when `χ'_{[l,m]}` equals
//! `min_{l <= i <= m} χ'_{[i]}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::excessive::{IndexSolver, IndexValue};
use crate::graph::SimpleGraph;
use crate::matching::matching_number;

/// `com(G)` and the compatibility function `f_G` over `1..=max_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport {
    /// Largest `m` for which the graph is `[m]`-compatible; 0 for an
    /// edgeless graph.
    pub com: usize,
    /// False for edgeless graphs, where neither quantity is meaningful.
    pub defined: bool,
    pub f_table: BTreeMap<usize, usize>,
}

impl CompatibilityReport {
    /// `m,f` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,f\n");
        for (m, f) in &self.f_table {
            writeln!(out, "{m},{f}").unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub l: usize,
    pub m: usize,
    pub coherent: bool,
    /// `χ'_{[l,m]}`.
    pub lhs: IndexValue,
    /// `min_{l <= i <= m} χ'_{[i]}`.
    pub rhs: IndexValue,
    /// `l < |E|/χ' < m` and `χ'_{[k]} > χ'` for `k = ⌈|E|/χ'⌉`. Always false
    /// on an edgeless graph.
    pub characterization_holds: bool,
}

/// Analyses sharing one [`IndexSolver`], so `χ'` and the `χ'_{[i]}` are
/// computed once per graph.
pub struct Analyzer<'a> {
    solver: IndexSolver<'a>,
}

impl<'a> Analyzer<'a> {
    pub fn new(g: &'a SimpleGraph, budget: &'a Budget) -> Result<Self> {
        Ok(Analyzer {
            solver: IndexSolver::new(g, budget)?,
        })
    }

    pub fn solver(&self) -> &IndexSolver<'a> {
        &self.solver
    }

    pub fn is_lm_compatible(&self, l: usize, m: usize) -> Result<bool> {
        let v = self.solver.lm_index(l, m)?.value();
        Ok(v == IndexValue::Finite(self.solver.lower_bound(m)))
    }

    pub fn compatibility_index(&self) -> Result<usize> {
        let g = self.solver.graph();
        if g.is_edgeless() {
            return Ok(0);
        }
        let mut com = 0;
        for m in 1..=matching_number(g) {
            if self.is_lm_compatible(m, m)? {
                com = m;
            }
        }
        Ok(com)
    }

    pub fn compatibility_function(&self, m: usize) -> Result<usize> {
        if m == 0 {
            return Err(Error::Parameter("m must be at least 1".into()));
        }
        if self.solver.graph().is_edgeless() {
            return Err(Error::Precondition(
                "compatibility function is undefined on an edgeless graph".into(),
            ));
        }
        for l in (1..=m).rev() {
            if self.is_lm_compatible(l, m)? {
                return Ok(l);
            }
        }
        Err(Error::Internal(format!("graph is not [1,{m}]-compatible")))
    }

    pub fn compatibility_report(&self, max_m: usize) -> Result<CompatibilityReport> {
        let defined = !self.solver.graph().is_edgeless();
        let mut f_table = BTreeMap::new();
        if defined {
            for m in 1..=max_m {
                f_table.insert(m, self.compatibility_function(m)?);
            }
        }
        Ok(CompatibilityReport {
            com: self.compatibility_index()?,
            defined,
            f_table,
        })
    }

    /// Builds the report and cross-checks the definition against the
    /// characterization; a mismatch is an [`Error::Internal`].
    pub fn coherence_report(&self, l: usize, m: usize) -> Result<CoherenceReport> {
        let lhs = self.solver.lm_index(l, m)?.value();
        let mut rhs = IndexValue::Infinite;
        for i in l..=m {
            rhs = rhs.min(self.solver.m_index(i)?.value());
        }
        let coherent = lhs == rhs;

        let g = self.solver.graph();
        let characterization_holds = if g.is_edgeless() {
            false
        } else {
            let (e, chi) = (g.edge_count(), self.solver.chromatic_index());
            let strictly_inside = l * chi < e && e < m * chi;
            strictly_inside
                && self.solver.m_index(e.div_ceil(chi))?.value() > IndexValue::Finite(chi)
        };
        if characterization_holds == coherent {
            return Err(Error::Internal(format!(
                "coherence by definition ({coherent}) disagrees with the characterization (l = {l}, m = {m})"
            )));
        }
        Ok(CoherenceReport {
            l,
            m,
            coherent,
            lhs,
            rhs,
            characterization_holds,
        })
    }
}

pub fn is_lm_compatible(g: &SimpleGraph, l: usize, m: usize) -> Result<bool> {
    Analyzer::new(g, &Budget::unlimited())?.is_lm_compatible(l, m)
}

pub fn compatibility_index(g: &SimpleGraph) -> Result<usize> {
    Analyzer::new(g, &Budget::unlimited())?.compatibility_index()
}

pub fn compatibility_function(g: &SimpleGraph, m: usize) -> Result<usize> {
    Analyzer::new(g, &Budget::unlimited())?.compatibility_function(m)
}

pub fn coherence_report(g: &SimpleGraph, l: usize, m: usize) -> Result<CoherenceReport> {
    Analyzer::new(g, &Budget::unlimited())?.coherence_report(l, m)
}
