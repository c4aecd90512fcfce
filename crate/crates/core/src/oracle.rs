//! Brute-force ground truth.
//!
//! Nothing here calls into [`crate::matching`], [`crate::coloring`] or
//! [`crate::excessive`] except [`small_graph_sweep`], which compares those
//! main-path routes against the enumerations below. Matchings are
//! enumerated directly, covers are found by exact set-cover search, and
//! colourings by vertex-colouring the line graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::excessive::{verify_covering, IndexResult, IndexSolver, IndexValue, Rule};
use crate::graph::{to_graph6, Covering, Edge, Matching, SimpleGraph};

pub const DEFAULT_MATCHING_CAP: usize = 2_000_000;

/// Every matching with between `l` and `m` edges, sorted, without duplicates.
pub fn all_matchings(g: &SimpleGraph, l: usize, m: usize) -> Result<Vec<Matching>> {
    all_matchings_capped(g, l, m, DEFAULT_MATCHING_CAP)
}

/// As [`all_matchings`], failing once more than `cap` matchings are found.
pub fn all_matchings_capped(
    g: &SimpleGraph,
    l: usize,
    m: usize,
    cap: usize,
) -> Result<Vec<Matching>> {
    struct Enum<'a> {
        edges: &'a [Edge],
        l: usize,
        m: usize,
        cap: usize,
        busy: Vec<bool>,
        current: Vec<Edge>,
        out: Vec<Matching>,
    }

    impl Enum<'_> {
        fn go(&mut self, i: usize) -> Result<()> {
            let done = i == self.edges.len() || self.current.len() == self.m;
            if done {
                if self.current.len() >= self.l {
                    if self.out.len() == self.cap {
                        return Err(Error::Precondition(format!(
                            "more than {} matchings; graph too large for enumeration",
                            self.cap
                        )));
                    }
                    self.out.push(Matching::new(self.current.iter().copied())?);
                }
                return Ok(());
            }
            if self.current.len() + (self.edges.len() - i) < self.l {
                return Ok(());
            }
            let e = self.edges[i];
            if !self.busy[e.u()] && !self.busy[e.v()] {
                self.busy[e.u()] = true;
                self.busy[e.v()] = true;
                self.current.push(e);
                self.go(i + 1)?;
                self.current.pop();
                self.busy[e.u()] = false;
                self.busy[e.v()] = false;
            }
            self.go(i + 1)
        }
    }

    if l > m {
        return Ok(Vec::new());
    }
    let mut en = Enum {
        edges: g.edges(),
        l,
        m,
        cap,
        busy: vec![false; g.vertex_count()],
        current: Vec::new(),
        out: Vec::new(),
    };
    en.go(0)?;
    en.out.sort();
    Ok(en.out)
}

/// Total number of matchings, the empty one included, by the recursion
/// `Φ(G) = Φ(G - e) + Φ(G - u - v)` on the first edge `e = uv`.
pub fn matching_count_recursive(g: &SimpleGraph) -> u64 {
    fn count(edges: &[Edge], removed: &mut Vec<bool>) -> u64 {
        let Some(pos) = edges
            .iter()
            .position(|e| !removed[e.u()] && !removed[e.v()])
        else {
            return 1;
        };
        let e = edges[pos];
        let rest = &edges[pos + 1..];
        let without = count(rest, removed);
        removed[e.u()] = true;
        removed[e.v()] = true;
        let with = count(rest, removed);
        removed[e.u()] = false;
        removed[e.v()] = false;
        without + with
    }
    count(g.edges(), &mut vec![false; g.vertex_count()])
}

/// `ν(g)` by exhaustive recursion over the lowest unmatched vertex.
pub fn matching_number_bruteforce(g: &SimpleGraph) -> usize {
    fn best(g: &SimpleGraph, from: usize, matched: &mut Vec<bool>) -> usize {
        let Some(v) = (from..g.vertex_count()).find(|&v| !matched[v]) else {
            return 0;
        };
        matched[v] = true;
        let mut top = best(g, v + 1, matched);
        for &w in g.neighbors(v) {
            if !matched[w] {
                matched[w] = true;
                top = top.max(1 + best(g, v + 1, matched));
                matched[w] = false;
            }
        }
        matched[v] = false;
        top
    }
    best(g, 0, &mut vec![false; g.vertex_count()])
}

/// Least `k` admitting a proper edge colouring, searching upward from `Δ`
/// by colouring the vertices of the line graph.
pub fn chromatic_index_bruteforce(g: &SimpleGraph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let conflicts: Vec<Vec<usize>> = (0..edges.len())
        .map(|i| (0..i).filter(|&j| edges[i].is_adjacent(edges[j])).collect())
        .collect();

    fn colour(i: usize, k: usize, conflicts: &[Vec<usize>], assigned: &mut Vec<usize>) -> bool {
        if i == conflicts.len() {
            return true;
        }
        for c in 0..k {
            if conflicts[i].iter().all(|&j| assigned[j] != c) {
                assigned[i] = c;
                if colour(i + 1, k, conflicts, assigned) {
                    return true;
                }
            }
        }
        false
    }

    let mut k = g.max_degree();
    loop {
        let mut assigned = vec![usize::MAX; edges.len()];
        assigned[0] = 0;
        if colour(1, k, &conflicts, &mut assigned) {
            return k;
        }
        k += 1;
    }
}

/// Exact minimum `[l,m]`-cover by branch and bound over [`all_matchings`].
///
/// Branches on the uncovered edge contained in the fewest candidate
/// matchings; prunes with `chosen + ⌈uncovered/m⌉ >= best`.
pub fn min_cover_bruteforce(g: &SimpleGraph, l: usize, m: usize) -> Result<IndexResult> {
    let ne = g.edge_count();
    if ne > 128 {
        return Err(Error::Precondition(format!(
            "{ne} edges exceed the 128-edge oracle limit"
        )));
    }
    if ne == 0 {
        return Ok(IndexResult::finite(Covering::default(), Rule::Search));
    }
    if l > m || m == 0 {
        return Ok(IndexResult::infinite());
    }
    let matchings = all_matchings(g, l.max(1), m)?;
    let masks: Vec<u128> = matchings
        .iter()
        .map(|mm| {
            mm.edges()
                .iter()
                .fold(0u128, |acc, &e| acc | 1u128 << g.edge_index(e).unwrap())
        })
        .collect();
    let containing: Vec<Vec<usize>> = (0..ne)
        .map(|i| {
            (0..masks.len())
                .filter(|&j| masks[j] >> i & 1 == 1)
                .collect()
        })
        .collect();
    if containing.iter().any(Vec::is_empty) {
        return Ok(IndexResult::infinite());
    }

    struct Bnb<'a> {
        masks: &'a [u128],
        containing: &'a [Vec<usize>],
        m: usize,
        chosen: Vec<usize>,
        best: Option<Vec<usize>>,
    }

    impl Bnb<'_> {
        fn go(&mut self, uncovered: u128) {
            if uncovered == 0 {
                if self
                    .best
                    .as_ref()
                    .is_none_or(|b| self.chosen.len() < b.len())
                {
                    self.best = Some(self.chosen.clone());
                }
                return;
            }
            let lb = self.chosen.len() + (uncovered.count_ones() as usize).div_ceil(self.m);
            if self.best.as_ref().is_some_and(|b| lb >= b.len()) {
                return;
            }
            let pivot = (0..self.containing.len())
                .filter(|&i| uncovered >> i & 1 == 1)
                .min_by_key(|&i| (self.containing[i].len(), i))
                .unwrap();
            let mut options: Vec<(u32, usize)> = self.containing[pivot]
                .iter()
                .map(|&j| ((self.masks[j] & uncovered).count_ones(), j))
                .collect();
            options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            for (_, j) in options {
                self.chosen.push(j);
                self.go(uncovered & !self.masks[j]);
                self.chosen.pop();
            }
        }
    }

    let full = if ne == 128 {
        u128::MAX
    } else {
        (1u128 << ne) - 1
    };
    let mut bnb = Bnb {
        masks: &masks,
        containing: &containing,
        m,
        chosen: Vec::new(),
        best: None,
    };
    bnb.go(full);
    let picked = bnb
        .best
        .expect("every edge has a candidate, so a cover exists");
    let cover = Covering::new(picked.into_iter().map(|j| matchings[j].clone()).collect());
    Ok(IndexResult::finite(cover, Rule::Search))
}

/// Scope of [`small_graph_sweep`].
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub max_m: usize,
    pub seed: u64,
    /// Random graphs drawn per vertex count above [`EXHAUSTIVE_LIMIT`].
    pub samples_per_size: usize,
}

/// Vertex counts up to this are enumerated exhaustively (all labeled graphs).
pub const EXHAUSTIVE_LIMIT: usize = 5;

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: 5,
            max_m: 5,
            seed: 0x5eed,
            samples_per_size: 40,
        }
    }
}

/// One disagreement between a main-path route and the oracle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub graph6: String,
    pub l: usize,
    pub m: usize,
    /// Which comparison failed, e.g. `formula`, `exc_witness`, `chromatic_index`.
    pub check: String,
    pub main: Value,
    pub oracle: Value,
}

impl Discrepancy {
    fn sort_key(&self) -> (&str, usize, usize, &str) {
        (&self.graph6, self.l, self.m, &self.check)
    }
}

/// All labeled graphs on `1..=EXHAUSTIVE_LIMIT` vertices (within
/// `max_vertices`), then seeded random samples for larger vertex counts.
pub fn sweep_graphs(cfg: &SweepConfig) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        if n <= EXHAUSTIVE_LIMIT {
            for mask in 0u64..1 << pairs.len() {
                let chosen = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
                out.push(SimpleGraph::from_edges(n, chosen.map(|(_, &p)| p)).unwrap());
            }
        } else {
            let mut rng =
                ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
            for _ in 0..cfg.samples_per_size {
                let p: f64 = rng.gen_range(0.15..0.6);
                let chosen: Vec<(usize, usize)> =
                    pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
                out.push(SimpleGraph::from_edges(n, chosen).unwrap());
            }
        }
    }
    out
}

/// Compares every main-path route with the oracle over [`sweep_graphs`].
/// An empty result means full agreement.
pub fn small_graph_sweep(cfg: &SweepConfig) -> Result<Vec<Discrepancy>> {
    small_graph_sweep_with(cfg, |solver, l, m| solver.lm_index(l, m))
}

/// As [`small_graph_sweep`], with the closed-form route replaced by `formula`.
pub fn small_graph_sweep_with<F>(cfg: &SweepConfig, formula: F) -> Result<Vec<Discrepancy>>
where
    F: Fn(&IndexSolver<'_>, usize, usize) -> Result<IndexResult> + Sync,
{
    let graphs = sweep_graphs(cfg);
    let per_graph: Vec<Vec<Discrepancy>> = graphs
        .par_iter()
        .map(|g| sweep_one(g, cfg.max_m, &formula))
        .collect::<Result<_>>()?;
    let mut all: Vec<Discrepancy> = per_graph.into_iter().flatten().collect();
    all.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(all)
}

fn json_value(v: IndexValue) -> Value {
    serde_json::to_value(v).expect("index values serialize")
}

fn sweep_one<F>(g: &SimpleGraph, max_m: usize, formula: &F) -> Result<Vec<Discrepancy>>
where
    F: Fn(&IndexSolver<'_>, usize, usize) -> Result<IndexResult>,
{
    let graph6 = to_graph6(g);
    let mut out = Vec::new();
    let mut report = |l: usize, m: usize, check: &str, main: Value, oracle: Value| {
        out.push(Discrepancy {
            graph6: graph6.clone(),
            l,
            m,
            check: check.to_string(),
            main,
            oracle,
        });
    };

    let budget = Budget::unlimited();
    let solver = IndexSolver::new(g, &budget)?;
    let chi_oracle = chromatic_index_bruteforce(g);
    if solver.chromatic_index() != chi_oracle {
        report(
            0,
            0,
            "chromatic_index",
            solver.chromatic_index().into(),
            chi_oracle.into(),
        );
    }
    let nu_main = crate::matching::matching_number(g);
    let nu_oracle = matching_number_bruteforce(g);
    if nu_main != nu_oracle {
        report(0, 0, "matching_number", nu_main.into(), nu_oracle.into());
    }

    for l in 1..=max_m {
        for m in l..=max_m {
            let truth = min_cover_bruteforce(g, l, m)?.value();
            let mut compare = |check: &str, outcome: Result<IndexResult>| match outcome {
                Ok(r) => {
                    if r.value() != truth {
                        report(l, m, check, json_value(r.value()), json_value(truth));
                    } else if !solver.checks(&r, l, m).verified {
                        report(
                            l,
                            m,
                            &format!("{check}_witness"),
                            json_value(r.value()),
                            json_value(truth),
                        );
                    }
                }
                Err(e) => report(l, m, check, Value::String(e.to_string()), json_value(truth)),
            };
            compare("formula", formula(&solver, l, m));
            compare("exc", solver.exc(l, m));
            if l == m {
                compare("m_index", solver.m_index(m));
            }
            if l < m {
                match solver.via_pairs(l, m) {
                    Ok(v) if v == truth => {}
                    Ok(v) => report(l, m, "pairs", json_value(v), json_value(truth)),
                    Err(e) => report(
                        l,
                        m,
                        "pairs",
                        Value::String(e.to_string()),
                        json_value(truth),
                    ),
                }
            }
        }
    }
    Ok(out)
}

/// Convenience for tests: does `c` witness the oracle's value?
pub fn witness_is_optimal(g: &SimpleGraph, c: &Covering, l: usize, m: usize) -> Result<bool> {
    let truth = min_cover_bruteforce(g, l, m)?.value();
    Ok(verify_covering(g, c, l, m) && IndexValue::Finite(c.len()) == truth)
}
