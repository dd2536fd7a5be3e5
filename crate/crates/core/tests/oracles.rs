// Independent reference implementations checked against the library.

use closure_sep::closure::{ClosureOperator, ElementSet, Side};
use closure_sep::euclid::{alpha_closure, AlphaClosure, PointSet};
use closure_sep::graph::{k23_minor_free, random_graph, Graph};
use closure_sep::lattice::{lattice_separate, partition_lattice, CoverChoice, IdealFilterResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = [i64; 3];

fn sub(a: P, b: P) -> P {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: P, b: P) -> P {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: P, b: P) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn det(a: P, b: P, c: P) -> i64 {
    dot(a, cross(b, c))
}

fn on_segment(p: P, q: P, x: P) -> bool {
    let (d, e) = (sub(q, p), sub(x, p));
    d != [0, 0, 0] && cross(d, e) == [0, 0, 0] && dot(d, e) >= 0 && dot(d, e) <= dot(d, d)
}

fn in_triangle(a: P, b: P, c: P, x: P) -> bool {
    let n = cross(sub(b, a), sub(c, a));
    if n == [0, 0, 0] || dot(n, sub(x, a)) != 0 {
        return false;
    }
    let s = [
        dot(n, cross(sub(b, a), sub(x, a))),
        dot(n, cross(sub(c, b), sub(x, b))),
        dot(n, cross(sub(a, c), sub(x, c))),
    ];
    s.iter().all(|&v| v >= 0) || s.iter().all(|&v| v <= 0)
}

fn in_tetrahedron(t: [P; 4], x: P) -> bool {
    let vol = det(sub(t[1], t[0]), sub(t[2], t[0]), sub(t[3], t[0]));
    if vol == 0 {
        return false;
    }
    // replace each vertex by x in turn; all signed volumes must agree with vol
    (0..4).all(|i| {
        let mut u = t;
        u[i] = x;
        let v = det(sub(u[1], u[0]), sub(u[2], u[0]), sub(u[3], u[0]));
        v == 0 || (v > 0) == (vol > 0)
    })
}

/// Carathéodory: `x` is in the hull iff it lies in a simplex spanned by at
/// most four generators. Degenerate simplices are covered by smaller ones.
fn exact_in_hull(gens: &[P], x: P) -> bool {
    let k = gens.len();
    for i in 0..k {
        if gens[i] == x {
            return true;
        }
        for j in i + 1..k {
            if on_segment(gens[i], gens[j], x) {
                return true;
            }
            for l in j + 1..k {
                if in_triangle(gens[i], gens[j], gens[l], x) {
                    return true;
                }
                for m in l + 1..k {
                    if in_tetrahedron([gens[i], gens[j], gens[l], gens[m]], x) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn exact_closure(pts: &[P], s: &ElementSet) -> ElementSet {
    let gens: Vec<P> = s.iter().map(|i| pts[i]).collect();
    ElementSet::from_ids(pts.len(), (0..pts.len()).filter(|&i| s.contains(i) || exact_in_hull(&gens, pts[i])))
}

fn grid_points(rng: &mut ChaCha8Rng, n: usize, dim: usize, range: i64) -> Vec<P> {
    (0..n)
        .map(|_| {
            let mut p = [0i64; 3];
            for c in p.iter_mut().take(dim) {
                *c = rng.gen_range(-range..=range);
            }
            p
        })
        .collect()
}

fn to_pointset(pts: &[P], dim: usize) -> PointSet {
    PointSet::new(dim, pts.iter().map(|p| p[..dim].iter().map(|&c| c as f64).collect())).unwrap()
}

fn check_alpha_against_exact(dim: usize, cases: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let n = rng.gen_range(4..=14);
        // a coarse grid produces many collinear and coplanar configurations
        let pts = grid_points(&mut rng, n, dim, 3);
        let ps = to_pointset(&pts, dim);
        let op = AlphaClosure::new(ps.clone());
        for _ in 0..6 {
            let k = rng.gen_range(1..=n.min(6));
            let s = ElementSet::from_ids(n, (0..k).map(|_| rng.gen_range(0..n)));
            let want = exact_closure(&pts, &s);
            assert_eq!(alpha_closure(&ps, &s).unwrap(), want, "points {pts:?}, generators {s:?}");
            assert_eq!(op.close(&s), want, "points {pts:?}, generators {s:?}");
            if let Some(e) = want.complement().first() {
                let mut grown = want.clone();
                grown.insert(e);
                let ext = op.extend_avoiding(&want, e, &ElementSet::empty(n));
                assert_eq!(ext, Some(exact_closure(&pts, &grown)), "points {pts:?}, extending {want:?} by {e}");
            }
        }
    }
}

#[test]
fn alpha_closure_matches_exact_oracle_in_the_plane() {
    check_alpha_against_exact(2, 150, 11);
}

#[test]
fn alpha_closure_matches_exact_oracle_in_space() {
    check_alpha_against_exact(3, 150, 12);
}

#[test]
fn exact_oracle_sanity() {
    let sq = [[0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0]];
    assert!(exact_in_hull(&sq, [1, 1, 0]));
    assert!(exact_in_hull(&sq, [2, 1, 0]));
    assert!(!exact_in_hull(&sq, [1, 1, 1]));
    assert!(!exact_in_hull(&sq, [3, 1, 0]));
    let tet = [[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4]];
    assert!(exact_in_hull(&tet, [1, 1, 1]));
    assert!(!exact_in_hull(&tet, [2, 2, 1]));
}

fn connected_within(g: &Graph, label: &[u8], b: u8) -> bool {
    let members: Vec<usize> = (0..g.n()).filter(|&v| label[v] == b).collect();
    let Some(&start) = members.first() else {
        return false;
    };
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] && label[v] == b {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == members.len()
}

/// Tries every assignment of vertices to five branch sets (or none):
/// branch sets 0,1 form one side, 2,3,4 the other.
fn brute_force_has_k23(g: &Graph) -> bool {
    let n = g.n();
    let mut label = vec![0u8; n];
    let total = 6usize.pow(n as u32);
    for mut code in 0..total {
        for l in label.iter_mut() {
            *l = (code % 6) as u8;
            code /= 6;
        }
        // canonical form up to swapping within a side keeps the search small
        let first = |b: u8| label.iter().position(|&l| l == b);
        let (f0, f1) = (first(0), first(1));
        let (f2, f3, f4) = (first(2), first(3), first(4));
        if f0.is_none() || f1.is_none() || f2.is_none() || f3.is_none() || f4.is_none() {
            continue;
        }
        if f0 > f1 || f2 > f3 || f3 > f4 {
            continue;
        }
        if !(0..5).all(|b| connected_within(g, &label, b)) {
            continue;
        }
        let touches = |x: u8, y: u8| g.edges().any(|(u, v)| (label[u] == x && label[v] == y) || (label[u] == y && label[v] == x));
        if (0..2).all(|x| (2..5).all(|y| touches(x, y))) {
            return true;
        }
    }
    false
}

#[test]
fn k23_detection_matches_branch_set_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut with_minor = 0;
    for i in 0..120 {
        let n = rng.gen_range(5..=7);
        let p = rng.gen_range(0.25..0.75);
        let g = random_graph(n, p, i);
        let brute = brute_force_has_k23(&g);
        with_minor += usize::from(brute);
        assert_eq!(k23_minor_free(&g).unwrap(), !brute, "graph {}", g.to_edge_list());
    }
    assert!(with_minor > 10 && with_minor < 110, "sample should mix both answers, got {with_minor}");
}

#[test]
fn k23_known_graphs() {
    for (g, has) in [
        (Graph::complete_bipartite(2, 3), true),
        (Graph::complete(5), true),
        (Graph::complete(4), false),
        (Graph::cycle(7), false),
        (Graph::complete_bipartite(1, 6), false),
    ] {
        assert_eq!(brute_force_has_k23(&g), has);
        assert_eq!(k23_minor_free(&g).unwrap(), !has);
    }
}

/// Block index per position, read back from a label such as `{1,2}{3}`.
fn parse_partition(label: &str) -> Vec<usize> {
    let mut owner = Vec::new();
    for (b, block) in label.trim_start_matches('{').trim_end_matches('}').split("}{").enumerate() {
        for p in block.split(',') {
            let p: usize = p.parse().unwrap();
            if owner.len() < p {
                owner.resize(p, usize::MAX);
            }
            owner[p - 1] = b;
        }
    }
    owner
}

/// `a` is coarser than (below) `b`: positions sharing a block in `b` share one in `a`.
fn coarser(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|x| (0..a.len()).all(|y| b[x] != b[y] || a[x] == a[y]))
}

#[test]
fn partition_lattice_generalization_is_maximal() {
    let p = partition_lattice(5).unwrap();
    let l = &p.lattice;
    let parts: Vec<Vec<usize>> = (0..l.len()).map(|x| parse_partition(l.label(x))).collect();
    let leq = |a: usize, b: usize| coarser(&parts[a], &parts[b]);
    for x in 0..l.len() {
        for y in 0..l.len() {
            assert_eq!(l.leq(x, y), leq(x, y), "{} vs {}", l.label(x), l.label(y));
        }
    }

    let atoms = |ts: [[&str; 5]; 2]| ElementSet::from_ids(l.len(), ts.iter().map(|t| p.atom(t).unwrap()));
    let a = atoms([["w", "x", "y", "y", "z"], ["w", "x", "y", "z", "z"]]);
    let b = atoms([["y", "y", "y", "y", "z"], ["y", "y", "y", "z", "y"]]);
    // least common generalization of the two negative atoms
    let sup_b = (0..l.len()).filter(|&x| b.iter().all(|e| leq(e, x))).find(|&x| (0..l.len()).all(|y| !b.iter().all(|e| leq(e, y)) || leq(x, y)));
    assert_eq!(sup_b, p.from_blocks(&[vec![1, 2, 3], vec![4], vec![5]]));

    let preferred_top = p.atom(&["w", "w", "x", "y", "z"]).unwrap();
    for choice in [CoverChoice::LowestIndex, CoverChoice::Preferred(vec![preferred_top])] {
        let sep = lattice_separate(l, &a, &b, &choice).unwrap();
        let IdealFilterResult::Separated { top_i, bot_f, ideal_side } = sep.result else {
            panic!("expected a separation");
        };
        assert_eq!(ideal_side, Side::B);
        assert!(b.iter().all(|e| leq(e, top_i)) && a.iter().all(|e| leq(bot_f, e)));
        assert!(!leq(bot_f, top_i), "ideal and filter overlap");
        // no strictly larger ideal avoids the filter, and symmetrically
        assert!((0..l.len()).filter(|&x| x != top_i && leq(top_i, x)).all(|x| leq(bot_f, x)));
        assert!((0..l.len()).filter(|&y| y != bot_f && leq(y, bot_f)).all(|y| leq(y, top_i)));
        if choice != CoverChoice::LowestIndex {
            assert_eq!(top_i, preferred_top);
        }
    }
}
