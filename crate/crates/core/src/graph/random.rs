use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};
use crate::closure::ElementSet;

/// Uniform random labeled tree on `n ≥ 2` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "a random tree needs at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding keeps a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Graph::from_edges(n, edges).expect("decoded tree is simple")
}

/// Splits a tree into two complementary half-spaces by cutting a uniformly
/// chosen edge among those whose sides have size ratio in
/// `[1/ratio_bound, ratio_bound]`.
pub fn random_tree_halfspace_labeling(
    tree: &Graph,
    seed: u64,
    ratio_bound: f64,
) -> Result<(ElementSet, ElementSet), GraphError> {
    if !tree.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = tree.n();
    // BFS order and parents from root 0, then subtree sizes bottom-up
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in tree.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }
    let balanced: Vec<usize> = order
        .iter()
        .skip(1)
        .copied()
        .filter(|&v| {
            let r = size[v] as f64 / (n - size[v]) as f64;
            r >= 1.0 / ratio_bound && r <= ratio_bound
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let &cut = balanced
        .choose(&mut rng)
        .ok_or(GraphError::NoBalancedEdge(ratio_bound))?;

    // the side containing `cut` is its subtree
    let mut below = ElementSet::singleton(n, cut);
    for &v in order.iter().skip(1) {
        if below.contains(parent[v]) && v != cut {
            below.insert(v);
        }
    }
    let rest = below.complement();
    Ok((below, rest))
}

/// Erdős–Rényi graph `G(n, p)`; may be disconnected.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random spanning tree plus each remaining pair independently with
/// probability `p`. Always connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    if n == 1 {
        return Graph::from_edges(1, []).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, rng.gen());
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
