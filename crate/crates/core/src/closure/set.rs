use std::fmt;

const WORD: usize = 64;

/// Indexed finite universe. Element ids are `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    /// Panics if `size == 0`.
    pub fn new(size: usize) -> Self {
        assert!(size >= 1, "ground set must contain at least one element");
        GroundSet { size, labels: None }
    }

    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert!(!labels.is_empty(), "ground set must contain at least one element");
        GroundSet {
            size: labels.len(),
            labels: Some(labels),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Display name of element `id`, falling back to its index.
    pub fn label(&self, id: usize) -> String {
        match &self.labels {
            Some(l) => l[id].clone(),
            None => id.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == name),
            None => name.parse().ok().filter(|&i| i < self.size),
        }
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }
}

/// Subset of a ground set `{0, .., universe-1}` stored as fixed-width bit blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            blocks: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElementSet {
            universe,
            blocks: vec![u64::MAX; universe.div_ceil(WORD)],
        };
        s.trim();
        s
    }

    pub fn singleton(universe: usize, e: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(e);
        s
    }

    /// Panics on ids outside the universe.
    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.blocks[0] = mask;
            s.trim();
        }
        s
    }

    /// Low 64 bits as a mask. Requires `universe <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.universe <= WORD);
        self.blocks.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e < self.universe, "element {e} outside universe of size {}", self.universe);
        let (b, m) = (e / WORD, 1u64 << (e % WORD));
        let fresh = self.blocks[b] & m == 0;
        self.blocks[b] |= m;
        fresh
    }

    pub fn remove(&mut self, e: usize) -> bool {
        if e >= self.universe {
            return false;
        }
        let (b, m) = (e / WORD, 1u64 << (e % WORD));
        let had = self.blocks[b] & m != 0;
        self.blocks[b] &= !m;
        had
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e < self.universe && self.blocks[e / WORD] & (1u64 << (e % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "element sets over different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = ElementSet {
            universe: self.universe,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            block: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    block: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.block * WORD + bit);
            }
            self.block += 1;
            if self.block >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_is_trimmed() {
        let s = ElementSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.complement().is_empty());
        assert_eq!(s.iter().last(), Some(69));
    }

    #[test]
    fn ground_set_labels() {
        let g = GroundSet::with_labels(["a", "b", "c"]);
        assert_eq!(g.size(), 3);
        assert_eq!(g.index_of("c"), Some(2));
        assert_eq!(g.label(1), "b");
        assert_eq!(GroundSet::new(4).index_of("3"), Some(3));
        assert_eq!(GroundSet::new(4).index_of("4"), None);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        ElementSet::empty(3).insert(3);
    }

    fn arb_pair() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
        (1usize..150).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0..n, 0..40),
                proptest::collection::vec(0..n, 0..40),
            )
        })
    }

    proptest! {
        #[test]
        fn set_ops_agree_with_btreeset((n, xs, ys) in arb_pair()) {
            use std::collections::BTreeSet;
            let a = ElementSet::from_ids(n, xs.iter().copied());
            let b = ElementSet::from_ids(n, ys.iter().copied());
            let sa: BTreeSet<usize> = xs.into_iter().collect();
            let sb: BTreeSet<usize> = ys.into_iter().collect();
            prop_assert_eq!(a.union(&b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
            prop_assert_eq!(a.is_disjoint(&b), sa.is_disjoint(&sb));
            prop_assert_eq!(a.complement().len(), n - sa.len());
        }
    }
}
