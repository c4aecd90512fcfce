//! Maximum matchings in general graphs and the forced-edge extension tests
//! behind coverability.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Matching, SimpleGraph};

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm restricted to the vertices with `active[v]`.
///
/// Free vertices are tried as roots in increasing order and the first
/// augmenting path found is used, so the result is deterministic.
struct Blossom<'a> {
    g: &'a SimpleGraph,
    active: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a SimpleGraph, active: &'a [bool]) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.vertex_count() {
            if self.active[root] && self.mate[root] == NONE {
                if let Some(end) = self.find_augmenting_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.in_queue.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_queue[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if !self.active[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn mates_to_matching(mate: &[usize]) -> Matching {
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| Edge::new(v, w));
    Matching::new(edges).expect("blossom output is a matching")
}

fn max_matching_on(g: &SimpleGraph, active: &[bool]) -> Matching {
    mates_to_matching(&Blossom::new(g, active).run())
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &SimpleGraph) -> Matching {
    max_matching_on(g, &vec![true; g.vertex_count()])
}

/// `ν(g)`, the size of a maximum matching.
pub fn matching_number(g: &SimpleGraph) -> usize {
    maximum_matching(g).len()
}

fn check_forced(g: &SimpleGraph, forced: &Matching) -> Result<()> {
    if !forced.is_subgraph_of(g) {
        return Err(Error::Precondition(
            "forced matching contains a non-edge of the graph".into(),
        ));
    }
    Ok(())
}

/// The forced edges plus a maximum matching of `g - V(forced)`.
fn extend_maximally(g: &SimpleGraph, forced: &Matching) -> Matching {
    let mut active = vec![true; g.vertex_count()];
    for e in forced.edges() {
        active[e.u()] = false;
        active[e.v()] = false;
    }
    let rest = max_matching_on(g, &active);
    Matching::new(forced.edges().iter().chain(rest.edges()).copied())
        .expect("disjoint by construction")
}

/// Maximum size of a matching of `g` that contains `forced`:
/// `|forced| + ν(g - V(forced))`.
pub fn max_matching_with_forced(g: &SimpleGraph, forced: &Matching) -> Result<usize> {
    check_forced(g, forced)?;
    Ok(extend_maximally(g, forced).len())
}

fn check_bounds(l: usize, m: usize) -> Result<()> {
    if l > m {
        return Err(Error::Parameter(format!("l = {l} exceeds m = {m}")));
    }
    Ok(())
}

/// Whether `n` is contained in some matching of size within `[l, m]`.
pub fn extends_to_lm_matching(g: &SimpleGraph, n: &Matching, l: usize, m: usize) -> Result<bool> {
    check_bounds(l, m)?;
    check_forced(g, n)?;
    Ok(n.len() <= m && extend_maximally(g, n).len() >= l)
}

/// Witness form of [`extends_to_lm_matching`].
///
/// Returns a matching of size exactly `max(l, |n|)` containing `n`. Surplus
/// non-forced edges are dropped from the lexicographic end.
pub fn extend_to_lm_matching(
    g: &SimpleGraph,
    n: &Matching,
    l: usize,
    m: usize,
) -> Result<Option<Matching>> {
    check_bounds(l, m)?;
    check_forced(g, n)?;
    if n.len() > m {
        return Ok(None);
    }
    let full = extend_maximally(g, n);
    let target = l.max(n.len());
    if full.len() < target {
        return Ok(None);
    }
    let mut extra: Vec<Edge> = full
        .edges()
        .iter()
        .copied()
        .filter(|&e| !n.contains(e))
        .collect();
    extra.truncate(target - n.len());
    let out = Matching::new(n.edges().iter().copied().chain(extra)).expect("subset of a matching");
    Ok(Some(out))
}

/// Every edge of `g` lies in a matching of size at least `l`.
pub fn is_lm_coverable(g: &SimpleGraph, l: usize) -> bool {
    if l > matching_number(g) && !g.is_edgeless() {
        return false;
    }
    g.edges().iter().all(|&e| {
        let single = Matching::new([e]).expect("single edge");
        extend_maximally(g, &single).len() >= l
    })
}
