use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LatticeError;
use crate::closure::ElementSet;

pub const DEFAULT_LATTICE_BOUND: usize = 5000;

/// A finite lattice stored as its full order relation plus the Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    /// `up[a]` = `{x : a ≤ x}`
    up: Vec<ElementSet>,
    /// `down[a]` = `{x : x ≤ a}`
    down: Vec<ElementSet>,
    covu: Vec<Vec<usize>>,
    covl: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// Builds a lattice from Hasse edges `(child, parent)`. Extra transitive
/// edges are tolerated and dropped from the cover lists.
pub fn build_lattice(n: usize, covers: &[(usize, usize)]) -> Result<FiniteLattice, LatticeError> {
    FiniteLattice::from_covers(n, covers, None)
}

impl FiniteLattice {
    pub fn from_covers(n: usize, covers: &[(usize, usize)], labels: Option<Vec<String>>) -> Result<Self, LatticeError> {
        Self::check_size(n, DEFAULT_LATTICE_BOUND)?;
        let mut parents = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(c, p) in covers {
            for index in [c, p] {
                if index >= n {
                    return Err(LatticeError::IndexOutOfRange { index, n });
                }
            }
            if c == p {
                return Err(LatticeError::Cycle(c));
            }
            parents[c].push(p);
            indegree[p] += 1;
        }
        // Kahn order from the minimal elements upwards
        let mut order: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &p in &parents[v] {
                indegree[p] -= 1;
                if indegree[p] == 0 {
                    order.push(p);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap();
            return Err(LatticeError::Cycle(stuck));
        }
        let mut up = vec![ElementSet::empty(n); n];
        for &v in order.iter().rev() {
            let mut s = ElementSet::singleton(n, v);
            for &p in &parents[v] {
                s.union_with(&up[p]);
            }
            up[v] = s;
        }
        Self::from_up_sets(up, labels)
    }

    /// Builds a lattice from an order predicate `leq(a, b)` meaning `a ≤ b`.
    /// The predicate must be a partial order.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool, labels: Option<Vec<String>>) -> Result<Self, LatticeError> {
        Self::check_size(n, DEFAULT_LATTICE_BOUND)?;
        let up = (0..n)
            .map(|a| ElementSet::from_ids(n, (0..n).filter(|&b| a == b || leq(a, b))))
            .collect();
        Self::from_up_sets(up, labels)
    }

    fn check_size(n: usize, bound: usize) -> Result<(), LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > bound {
            return Err(LatticeError::TooLarge { n, bound });
        }
        Ok(())
    }

    fn from_up_sets(up: Vec<ElementSet>, labels: Option<Vec<String>>) -> Result<Self, LatticeError> {
        let n = up.len();
        let mut down = vec![ElementSet::empty(n); n];
        for (a, ups) in up.iter().enumerate() {
            for b in ups.iter() {
                down[b].insert(a);
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(LatticeError::Cycle(a));
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if least(&up, &up[a].intersection(&up[b])).is_none() {
                    return Err(LatticeError::NoSupremum(a, b));
                }
                if least(&down, &down[a].intersection(&down[b])).is_none() {
                    return Err(LatticeError::NoInfimum(a, b));
                }
            }
        }
        let all = ElementSet::full(n);
        let bottom = (0..n).find(|&a| up[a] == all).ok_or(LatticeError::NoInfimum(0, 0))?;
        let top = (0..n).find(|&a| down[a] == all).ok_or(LatticeError::NoSupremum(0, 0))?;
        let covers = |rel: &[ElementSet], other: &[ElementSet], a: usize| -> Vec<usize> {
            rel[a]
                .iter()
                .filter(|&b| b != a && rel[a].intersection(&other[b]).len() == 2)
                .collect()
        };
        let covu = (0..n).map(|a| covers(&up, &down, a)).collect();
        let covl = (0..n).map(|a| covers(&down, &up, a)).collect();
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        assert_eq!(labels.len(), n, "one label per element");
        Ok(FiniteLattice {
            labels,
            up,
            down,
            covu,
            covl,
            bottom,
            top,
        })
    }

    /// Boolean lattice of subsets of a `k`-set; element `i` is the subset with bitmask `i`.
    pub fn boolean(k: usize) -> Self {
        assert!(k <= 12, "boolean lattice too large");
        let n = 1usize << k;
        let labels = (0..n)
            .map(|m| format!("{{{}}}", (0..k).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        Self::from_order(n, |a, b| a & b == a, Some(labels)).expect("boolean lattice")
    }

    /// Chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_order(n, |a, b| a <= b, None).expect("chain")
    }

    /// Diamond: bottom 0, atoms 1, 2, 3, top 4.
    pub fn m3() -> Self {
        build_lattice(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("M3")
    }

    /// Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    pub fn n5() -> Self {
        build_lattice(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N5")
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.covu[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.covl[a]
    }

    /// Principal filter `[a)`.
    pub fn filter(&self, a: usize) -> &ElementSet {
        &self.up[a]
    }

    /// Principal ideal `(a]`.
    pub fn ideal(&self, a: usize) -> &ElementSet {
        &self.down[a]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        least(&self.up, &self.up[a].intersection(&self.up[b])).expect("lattice has joins")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        least(&self.down, &self.down[a].intersection(&self.down[b])).expect("lattice has meets")
    }

    /// Least upper bound of a non-empty set.
    pub fn sup(&self, s: &ElementSet) -> Option<usize> {
        let mut it = s.iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| self.join(acc, x)))
    }

    /// Greatest lower bound of a non-empty set.
    pub fn inf(&self, s: &ElementSet) -> Option<usize> {
        let mut it = s.iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| self.meet(acc, x)))
    }

    /// Length (number of edges) of a longest chain.
    pub fn height(&self) -> usize {
        let mut h = vec![0usize; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| self.down[a].len());
        for &a in &order {
            for &b in &self.covu[a] {
                h[b] = h[b].max(h[a] + 1);
            }
        }
        h[self.top]
    }

    /// Cover edges `(child, parent)`.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.covu[a].iter().map(move |&b| (a, b)))
            .collect()
    }

    /// Text format read by [`FromStr`]: element count, then `child parent` lines.
    pub fn to_cover_list(&self) -> String {
        let mut s = format!("{}\n", self.len());
        for (a, b) in self.cover_edges() {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// The element `u` of an up-closed (relative to `rel`) set whose own up-set
/// is the whole set, if any.
fn least(rel: &[ElementSet], set: &ElementSet) -> Option<usize> {
    let size = set.len();
    set.iter().find(|&u| rel[u].len() == size && rel[u].is_subset(set))
}

impl FromStr for FiniteLattice {
    type Err = LatticeError;

    /// First line `n`, then one `child parent` cover edge per line. Blank
    /// lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self, LatticeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, head) = lines.next().ok_or(LatticeError::Parse {
            line: 1,
            message: "missing element count".into(),
        })?;
        let n: usize = head.parse().map_err(|_| LatticeError::Parse {
            line,
            message: format!("bad element count {head:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| LatticeError::Parse {
                    line,
                    message: format!("expected \"child parent\", got {l:?}"),
                })?;
            match nums[..] {
                [c, p] if c < n && p < n => edges.push((c, p)),
                [_, _] => {
                    return Err(LatticeError::Parse {
                        line,
                        message: format!("element out of range for n = {n}"),
                    })
                }
                _ => {
                    return Err(LatticeError::Parse {
                        line,
                        message: format!("expected \"child parent\", got {l:?}"),
                    })
                }
            }
        }
        build_lattice(n, &edges)
    }
}

/// Random lattice of subsets of `{0..k}`: `generators` random subsets closed
/// under intersection, plus the full set, ordered by inclusion.
pub fn random_lattice(k: usize, generators: usize, seed: u64) -> FiniteLattice {
    assert!((1..=16).contains(&k), "ground set size must be in 1..=16");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = (1u32 << k) - 1;
    let mut sets = vec![full];
    for _ in 0..generators {
        let g: u32 = rng.gen::<u32>() & full;
        let mut fresh = vec![g];
        for &s in &sets {
            fresh.push(s & g);
        }
        for f in fresh {
            if !sets.contains(&f) {
                sets.push(f);
            }
        }
        // keep closed under intersection
        let mut i = 0;
        while i < sets.len() {
            for j in 0..i {
                let x = sets[i] & sets[j];
                if !sets.contains(&x) {
                    sets.push(x);
                }
            }
            i += 1;
        }
    }
    sets.sort_by_key(|s| (s.count_ones(), *s));
    let labels = sets.iter().map(|s| format!("{s:0k$b}")).collect();
    FiniteLattice::from_order(sets.len(), |a, b| sets[a] & sets[b] == sets[a], Some(labels)).expect("intersection-closed family")
}
