use std::collections::VecDeque;

use super::{Graph, GraphError};

pub const DEFAULT_MINOR_BOUND: usize = 15;

pub fn k23_minor_free(g: &Graph) -> Result<bool, GraphError> {
    k23_minor_free_bounded(g, DEFAULT_MINOR_BOUND)
}

/// Decides whether `g` has no K₂,₃ minor.
///
/// K₂,₃ has maximum degree 3, so it is a minor exactly when some subdivision
/// of it is a subgraph: two branch vertices joined by three internally
/// disjoint paths, none of them a direct edge. For every vertex pair the
/// number of such paths is a unit-capacity vertex flow, stopped at 3.
pub fn k23_minor_free_bounded(g: &Graph, bound: usize) -> Result<bool, GraphError> {
    let n = g.n();
    if n > bound {
        return Err(GraphError::TooLarge { n, bound });
    }
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            if g.degree(b) >= 3 && disjoint_paths(g, a, b, 3) >= 3 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Internally vertex-disjoint `s`–`t` paths of length at least 2, up to `cap`.
fn disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // vertex v becomes v_in = 2v and v_out = 2v+1
    let m = 2 * n;
    let mut res = vec![0i32; m * m];
    for v in 0..n {
        res[(2 * v) * m + 2 * v + 1] = 1;
    }
    for (u, v) in g.edges() {
        if (u, v) == (s.min(t), s.max(t)) {
            continue;
        }
        res[(2 * u + 1) * m + 2 * v] = 1;
        res[(2 * v + 1) * m + 2 * u] = 1;
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    while flow < cap {
        prev.fill(usize::MAX);
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..m {
                if prev[y] == usize::MAX && res[x * m + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            res[x * m + y] -= 1;
            res[y * m + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}
