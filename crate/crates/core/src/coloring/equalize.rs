use super::EdgeColoring;

/// Class sizes all lie in `{⌊|E|/k⌋, ⌈|E|/k⌉}`.
pub fn is_equalized(c: &EdgeColoring) -> bool {
    let sizes = c.class_sizes();
    match (sizes.iter().min(), sizes.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    }
}

/// Rebalances a proper `k`-edge colouring until all class sizes differ by at
/// most one.
///
/// Each step picks colours `a`, `b` with `|C_a| >= |C_b| + 2` (largest gap,
/// then smallest indices). `C_a ∪ C_b` is a disjoint union of alternating
/// paths and even cycles; some path has one more `a`-edge than `b`-edges,
/// and swapping the two colours along it moves one edge from `C_a` to `C_b`.
/// The path whose smallest vertex is smallest is used.
pub fn equalize(c: &EdgeColoring) -> EdgeColoring {
    equalize_traced(c).0
}

/// As [`equalize`], also returning `Σ|C|²` before the first step and after
/// every swap.
pub fn equalize_traced(c: &EdgeColoring) -> (EdgeColoring, Vec<usize>) {
    let n = c.host().vertex_count();
    let instances = c.instances();
    let mut colors = c.colors().to_vec();
    let mut sizes = c.class_sizes();
    let mut trace = vec![sizes.iter().map(|s| s * s).sum()];

    while let Some((a, b)) = widest_gap(&sizes) {
        // incidence lists of the two-coloured subgraph
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &col) in colors.iter().enumerate() {
            if col == a || col == b {
                inc[instances[i].u()].push(i);
                inc[instances[i].v()].push(i);
            }
        }

        let mut visited = vec![false; n];
        let mut chosen: Option<Vec<usize>> = None;
        for start in 0..n {
            if visited[start] || inc[start].is_empty() {
                continue;
            }
            let (verts, edges) = component(start, &inc, instances, &mut visited);
            let is_path = verts.iter().any(|&v| inc[v].len() == 1);
            let surplus_a = edges.iter().filter(|&&i| colors[i] == a).count();
            if is_path && 2 * surplus_a > edges.len() {
                chosen = Some(edges);
                break;
            }
        }
        let path = chosen.expect("an a-heavy alternating path exists when |C_a| >= |C_b| + 2");
        for i in path {
            colors[i] = if colors[i] == a { b } else { a };
        }
        sizes[a] -= 1;
        sizes[b] += 1;
        trace.push(sizes.iter().map(|s| s * s).sum());
    }
    (c.with_colors(colors), trace)
}

fn widest_gap(sizes: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (a, &sa) in sizes.iter().enumerate() {
        for (b, &sb) in sizes.iter().enumerate() {
            if sa >= sb + 2 && best.is_none_or(|(gap, _, _)| sa - sb > gap) {
                best = Some((sa - sb, a, b));
            }
        }
    }
    best.map(|(_, a, b)| (a, b))
}

fn component(
    start: usize,
    inc: &[Vec<usize>],
    instances: &[crate::graph::Edge],
    visited: &mut [bool],
) -> (Vec<usize>, Vec<usize>) {
    let mut verts = vec![start];
    let mut edges = Vec::new();
    let mut stack = vec![start];
    visited[start] = true;
    while let Some(v) = stack.pop() {
        for &i in &inc[v] {
            let e = instances[i];
            let w = if e.u() == v { e.v() } else { e.u() };
            if e.u() == v {
                // count each instance once, from its smaller endpoint
                edges.push(i);
            }
            if !visited[w] {
                visited[w] = true;
                verts.push(w);
                stack.push(w);
            }
        }
    }
    (verts, edges)
}
