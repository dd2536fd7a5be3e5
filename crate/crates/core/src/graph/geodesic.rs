use std::collections::VecDeque;

use super::Graph;
use crate::closure::{ClosureOperator, ElementSet};

/// Unweighted all-pairs hop distances. Unreachable pairs have no distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    #[inline]
    fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// `w` lies on a shortest `u`–`v` path.
    #[inline]
    pub fn between(&self, u: usize, w: usize, v: usize) -> bool {
        let uv = self.raw(u, v);
        let uw = self.raw(u, w);
        let wv = self.raw(w, v);
        uv != UNREACHABLE && uw != UNREACHABLE && wv != UNREACHABLE && uw + wv == uv
    }
}

/// BFS from every vertex, `O(n·(n+m))`.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        for (t, dist) in g.bfs(s).into_iter().enumerate() {
            if let Some(x) = dist {
                d[s * n + t] = x;
            }
        }
    }
    DistanceMatrix { n, d }
}

/// `S` together with every vertex on some shortest path between two members of `S`.
pub fn interval(dist: &DistanceMatrix, s: &ElementSet) -> ElementSet {
    let members = s.to_vec();
    let mut out = s.clone();
    for w in 0..dist.n() {
        if out.contains(w) {
            continue;
        }
        let hit = members
            .iter()
            .enumerate()
            .any(|(i, &u)| members[i..].iter().any(|&v| dist.between(u, w, v)));
        if hit {
            out.insert(w);
        }
    }
    out
}

/// Geodesic closure by iterating [`interval`] until it stabilizes.
pub fn gamma_closure(dist: &DistanceMatrix, s: &ElementSet) -> ElementSet {
    let mut cur = s.clone();
    loop {
        let next = interval(dist, &cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Geodesic (shortest-path) convexity on a graph.
///
/// The closure is grown incrementally: every newly added vertex is paired with
/// all current members and the vertices between them are pulled in. This gives
/// the same fixed point as [`gamma_closure`].
#[derive(Debug, Clone)]
pub struct GeodesicClosure {
    dist: DistanceMatrix,
}

impl GeodesicClosure {
    pub fn new(g: &Graph) -> Self {
        GeodesicClosure { dist: apsp(g) }
    }

    pub fn from_distances(dist: DistanceMatrix) -> Self {
        GeodesicClosure { dist }
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Grows the convex set `base` by the vertices in `pending`. Returns `None`
    /// as soon as a vertex of `avoid` would be added.
    fn grow(
        &self,
        base: &ElementSet,
        pending: impl IntoIterator<Item = usize>,
        avoid: Option<&ElementSet>,
    ) -> Option<ElementSet> {
        let n = self.dist.n();
        let mut set = base.clone();
        let mut members = base.to_vec();
        let mut queue = VecDeque::new();
        for v in pending {
            if set.insert(v) {
                if avoid.is_some_and(|a| a.contains(v)) {
                    return None;
                }
                members.push(v);
                queue.push_back(v);
            }
        }
        while let Some(x) = queue.pop_front() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                i += 1;
                if y == x {
                    continue;
                }
                for w in 0..n {
                    if !set.contains(w) && self.dist.between(x, w, y) {
                        if avoid.is_some_and(|a| a.contains(w)) {
                            return None;
                        }
                        set.insert(w);
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        Some(set)
    }
}

impl ClosureOperator for GeodesicClosure {
    fn ground_size(&self) -> usize {
        self.dist.n()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        self.grow(&ElementSet::empty(self.dist.n()), set.iter(), None)
            .expect("nothing to avoid")
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        self.grow(closed, [e], Some(avoid))
    }
}

/// Geodesic closure specialized to trees: the closure of `S` is the smallest
/// subtree spanning `S`. Linear time per call, no distance matrix.
#[derive(Debug, Clone)]
pub struct TreeClosure {
    graph: Graph,
    parent: Vec<usize>,
    /// vertices in BFS order from the root 0
    order: Vec<usize>,
}

impl TreeClosure {
    /// Returns `None` unless `g` is a tree.
    pub fn new(g: &Graph) -> Option<Self> {
        if !g.is_tree() {
            return None;
        }
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        Some(TreeClosure {
            graph: g.clone(),
            parent,
            order,
        })
    }
}

impl ClosureOperator for TreeClosure {
    fn ground_size(&self) -> usize {
        self.graph.n()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        let n = self.graph.n();
        let total = set.len();
        if total <= 1 {
            return set.clone();
        }
        // below[v]: members of `set` in the subtree of v
        let mut below = vec![0usize; n];
        // parts[v]: subtrees hanging off v (children and the rest) that hold members
        let mut parts = vec![0usize; n];
        for &v in self.order.iter().rev() {
            if set.contains(v) {
                below[v] += 1;
            }
            let p = self.parent[v];
            if p != usize::MAX {
                below[p] += below[v];
                if below[v] > 0 {
                    parts[p] += 1;
                }
            }
        }
        let mut out = set.clone();
        for v in 0..n {
            let outside = usize::from(total > below[v]);
            if parts[v] + outside >= 2 {
                out.insert(v);
            }
        }
        out
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        if closed.contains(e) {
            return Some(closed.clone());
        }
        if avoid.contains(e) {
            return None;
        }
        if closed.is_empty() {
            return Some(ElementSet::singleton(self.graph.n(), e));
        }
        // walk from e towards the subtree; the first hit ends the only e–subtree path
        let n = self.graph.n();
        let mut from = vec![usize::MAX; n];
        from[e] = e;
        let mut queue = VecDeque::from([e]);
        let mut hit = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &v in self.graph.neighbors(u) {
                if from[v] == usize::MAX {
                    from[v] = u;
                    if closed.contains(v) {
                        hit = Some(u);
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        let mut out = closed.clone();
        let mut cur = hit.expect("tree is connected");
        loop {
            if avoid.contains(cur) {
                return None;
            }
            out.insert(cur);
            if cur == e {
                break;
            }
            cur = from[cur];
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances_and_interval() {
        let g = Graph::path(3);
        let d = apsp(&g);
        assert_eq!(d.get(0, 2), Some(2));
        let s = ElementSet::from_ids(3, [0, 2]);
        assert_eq!(interval(&d, &s), ElementSet::full(3));
    }

    #[test]
    fn k23_distances_interval_and_hull() {
        // parts {a,b} = {0,1}, {x,y,z} = {2,3,4}
        let g = Graph::complete_bipartite(2, 3);
        let d = apsp(&g);
        assert_eq!(d.get(2, 3), Some(2));
        assert_eq!(d.get(0, 1), Some(2));
        let xy = ElementSet::from_ids(5, [2, 3]);
        assert_eq!(interval(&d, &xy), ElementSet::from_ids(5, [0, 1, 2, 3]));
        assert_eq!(gamma_closure(&d, &xy), ElementSet::full(5));
        assert_eq!(GeodesicClosure::new(&g).close(&xy), ElementSet::full(5));
    }

    #[test]
    fn star_leaves_at_distance_two() {
        let d = apsp(&Graph::star(4));
        for u in 1..5 {
            for v in 1..5 {
                if u != v {
                    assert_eq!(d.get(u, v), Some(2));
                }
            }
        }
    }

    #[test]
    fn singleton_and_closed_sets_are_fixed() {
        let g = Graph::cycle(6);
        let op = GeodesicClosure::new(&g);
        let s = ElementSet::singleton(6, 4);
        assert_eq!(op.close(&s), s);
        let c = op.close(&ElementSet::from_ids(6, [0, 2]));
        assert_eq!(c, ElementSet::from_ids(6, [0, 1, 2]));
        assert_eq!(interval(op.distances(), &c), c);
    }

    #[test]
    fn disconnected_components_do_not_interact() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let op = GeodesicClosure::new(&g);
        let s = ElementSet::from_ids(4, [0, 2]);
        assert_eq!(op.close(&s), s);
        assert_eq!(apsp(&g).get(0, 3), None);
    }

    #[test]
    fn tree_closure_spans_path() {
        // 0-1-2-3 with a leaf 4 hanging off 1
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let t = TreeClosure::new(&g).unwrap();
        let s = ElementSet::from_ids(5, [3, 4]);
        assert_eq!(t.close(&s), ElementSet::from_ids(5, [1, 2, 3, 4]));
        let closed = ElementSet::from_ids(5, [2, 3]);
        assert_eq!(
            t.extend_avoiding(&closed, 0, &ElementSet::empty(5)),
            Some(ElementSet::from_ids(5, [0, 1, 2, 3]))
        );
        assert_eq!(t.extend_avoiding(&closed, 0, &ElementSet::singleton(5, 1)), None);
        assert!(TreeClosure::new(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn geodesic_extension_stops_at_avoided_vertex() {
        let g = Graph::path(5);
        let op = GeodesicClosure::new(&g);
        let closed = ElementSet::singleton(5, 0);
        assert_eq!(op.extend_avoiding(&closed, 4, &ElementSet::singleton(5, 2)), None);
        assert_eq!(
            op.extend_avoiding(&closed, 2, &ElementSet::singleton(5, 4)),
            Some(ElementSet::from_ids(5, [0, 1, 2]))
        );
    }
}
