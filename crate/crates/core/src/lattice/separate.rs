use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FiniteLattice, LatticeError};
use crate::closure::{ClosureOperator, ElementSet, Side};

/// Order interval `[inf S, sup S]`; empty for empty `S`.
pub fn lambda_closure(l: &FiniteLattice, s: &ElementSet) -> ElementSet {
    match (l.inf(s), l.sup(s)) {
        (Some(lo), Some(hi)) => l.filter(lo).intersection(l.ideal(hi)),
        _ => ElementSet::empty(l.len()),
    }
}

/// Order-interval closure of a lattice as a [`ClosureOperator`].
#[derive(Debug, Clone, Copy)]
pub struct LambdaClosure<'a> {
    lattice: &'a FiniteLattice,
}

impl<'a> LambdaClosure<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Self {
        LambdaClosure { lattice }
    }
}

impl ClosureOperator for LambdaClosure<'_> {
    fn ground_size(&self) -> usize {
        self.lattice.len()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        lambda_closure(self.lattice, set)
    }
}

/// Which qualifying cover to take when several could extend the ideal or filter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum CoverChoice {
    /// First qualifying cover in element-index order.
    #[default]
    LowestIndex,
    /// Covers scanned in a fresh random order at every step.
    Random(u64),
    /// Listed elements are scanned first, in list order.
    Preferred(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealFilterResult {
    /// `(top_i]` and `[bot_f)` are disjoint; `ideal_side` says which input
    /// lies in the ideal.
    Separated { top_i: usize, bot_f: usize, ideal_side: Side },
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSeparation {
    pub result: IdealFilterResult,
    /// Order-relation evaluations made by the decision and extension steps.
    pub order_tests: u64,
    /// Accepted cover moves.
    pub cover_steps: u64,
}

impl LatticeSeparation {
    pub fn ideal_filter(&self, l: &FiniteLattice) -> Option<(ElementSet, ElementSet)> {
        match self.result {
            IdealFilterResult::Separated { top_i, bot_f, .. } => Some((l.ideal(top_i).clone(), l.filter(bot_f).clone())),
            IdealFilterResult::No => None,
        }
    }

    pub fn is_partition(&self, l: &FiniteLattice) -> Option<bool> {
        self.ideal_filter(l).map(|(i, f)| i.union(&f).is_full())
    }
}

struct Counter<'a> {
    l: &'a FiniteLattice,
    tests: u64,
}

impl Counter<'_> {
    fn leq(&mut self, a: usize, b: usize) -> bool {
        self.tests += 1;
        self.l.leq(a, b)
    }
}

fn scan_order(covers: &[usize], choice: &CoverChoice, rng: &mut Option<ChaCha8Rng>) -> Vec<usize> {
    match choice {
        CoverChoice::LowestIndex => covers.to_vec(),
        CoverChoice::Random(_) => {
            let mut v = covers.to_vec();
            v.shuffle(rng.as_mut().expect("seeded"));
            v
        }
        CoverChoice::Preferred(first) => {
            let mut v: Vec<usize> = first.iter().copied().filter(|x| covers.contains(x)).collect();
            v.extend(covers.iter().filter(|x| !first.contains(x)));
            v
        }
    }
}

/// Maximal ideal/filter separation driven by upper and lower covers.
///
/// Decides separability from `sup A`, `inf A`, `sup B`, `inf B`, then grows
/// the ideal through upper covers of its top and afterwards the filter
/// through lower covers of its bottom, as long as they stay disjoint.
pub fn lattice_separate(
    l: &FiniteLattice,
    a: &ElementSet,
    b: &ElementSet,
    choice: &CoverChoice,
) -> Result<LatticeSeparation, LatticeError> {
    for (side, s) in [(Side::A, a), (Side::B, b)] {
        if s.universe() != l.len() {
            return Err(LatticeError::IndexOutOfRange { index: s.universe(), n: l.len() });
        }
        if s.is_empty() {
            return Err(LatticeError::EmptyInput(side));
        }
    }
    let (top_a, bot_a) = (l.sup(a).unwrap(), l.inf(a).unwrap());
    let (top_b, bot_b) = (l.sup(b).unwrap(), l.inf(b).unwrap());
    let mut c = Counter { l, tests: 0 };
    let (mut top_i, mut bot_f, ideal_side) = if !c.leq(bot_b, top_a) {
        (top_a, bot_b, Side::A)
    } else if !c.leq(bot_a, top_b) {
        (top_b, bot_a, Side::B)
    } else {
        return Ok(LatticeSeparation {
            result: IdealFilterResult::No,
            order_tests: c.tests,
            cover_steps: 0,
        });
    };

    let mut rng = match choice {
        CoverChoice::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut steps = 0;
    'up: loop {
        for u in scan_order(l.upper_covers(top_i), choice, &mut rng) {
            if !c.leq(bot_f, u) {
                top_i = u;
                steps += 1;
                continue 'up;
            }
        }
        break;
    }
    'down: loop {
        for d in scan_order(l.lower_covers(bot_f), choice, &mut rng) {
            if !c.leq(d, top_i) {
                bot_f = d;
                steps += 1;
                continue 'down;
            }
        }
        break;
    }
    Ok(LatticeSeparation {
        result: IdealFilterResult::Separated { top_i, bot_f, ideal_side },
        order_tests: c.tests,
        cover_steps: steps,
    })
}

pub const DISTRIBUTIVITY_BOUND: usize = 500;

/// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
pub fn is_distributive(l: &FiniteLattice) -> Result<bool, LatticeError> {
    let n = l.len();
    if n > DISTRIBUTIVITY_BOUND {
        return Err(LatticeError::TooLarge { n, bound: DISTRIBUTIVITY_BOUND });
    }
    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    for x in 0..n {
        for y in x..n {
            let (j, m) = (l.join(x, y) as u32, l.meet(x, y) as u32);
            join[x * n + y] = j;
            join[y * n + x] = j;
            meet[x * n + y] = m;
            meet[y * n + x] = m;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = meet[x * n + y] as usize;
            for z in y + 1..n {
                let lhs = meet[x * n + join[y * n + z] as usize];
                let rhs = join[xy * n + meet[x * n + z] as usize];
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Outcome of running the separation over many input pairs and comparing
/// "always a partition" with distributivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeKakutaniReport {
    pub distributive: bool,
    pub exhaustive: bool,
    pub runs: usize,
    pub non_partition_runs: usize,
    /// First input pair `((inf A, sup A), (inf B, sup B))` whose output left elements uncovered.
    pub first_gap: Option<((usize, usize), (usize, usize))>,
}

impl LatticeKakutaniReport {
    pub fn always_partition(&self) -> bool {
        self.non_partition_runs == 0
    }

    /// The two sides of the characterization agree.
    pub fn consistent(&self) -> bool {
        self.always_partition() == self.distributive
    }
}

/// Lattices up to this size are checked over every pair of order intervals.
const EXHAUSTIVE_BOUND: usize = 24;

/// Runs [`lattice_separate`] over input pairs with disjoint closures and
/// records whether every output partitions the lattice.
///
/// Every closed set is an order interval and the algorithm only looks at the
/// endpoints, so for small lattices all pairs of intervals are tried (with the
/// lowest-index cover choice). `trials` further pairs with random intervals
/// and random cover choices are added on top.
pub fn lattice_kakutani_check(l: &FiniteLattice, trials: usize, seed: u64) -> Result<LatticeKakutaniReport, LatticeError> {
    let distributive = is_distributive(l)?;
    let n = l.len();
    let intervals: Vec<(usize, usize)> = (0..n)
        .flat_map(|lo| l.filter(lo).iter().map(move |hi| (lo, hi)))
        .collect();
    let mut report = LatticeKakutaniReport {
        distributive,
        exhaustive: n <= EXHAUSTIVE_BOUND,
        runs: 0,
        non_partition_runs: 0,
        first_gap: None,
    };
    let mut run = |ia: (usize, usize), ib: (usize, usize), choice: &CoverChoice| {
        let a = ElementSet::from_ids(n, [ia.0, ia.1]);
        let b = ElementSet::from_ids(n, [ib.0, ib.1]);
        let out = lattice_separate(l, &a, &b, choice).expect("non-empty inputs");
        if let Some(p) = out.is_partition(l) {
            report.runs += 1;
            if !p {
                report.non_partition_runs += 1;
                report.first_gap.get_or_insert((ia, ib));
            }
        }
    };
    if n <= EXHAUSTIVE_BOUND {
        for &ia in &intervals {
            for &ib in &intervals {
                run(ia, ib, &CoverChoice::LowestIndex);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let ia = intervals[rng.gen_range(0..intervals.len())];
        let ib = intervals[rng.gen_range(0..intervals.len())];
        run(ia, ib, &CoverChoice::Random(rng.gen()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::verify_closure_laws;

    fn set(l: &FiniteLattice, ids: &[usize]) -> ElementSet {
        ElementSet::from_ids(l.len(), ids.iter().copied())
    }

    #[test]
    fn lambda_examples() {
        let b2 = FiniteLattice::boolean(2);
        assert_eq!(lambda_closure(&b2, &set(&b2, &[1, 2])), ElementSet::full(4));
        let c = FiniteLattice::chain(5);
        assert_eq!(lambda_closure(&c, &set(&c, &[1, 3])), set(&c, &[1, 2, 3]));
        assert_eq!(lambda_closure(&c, &set(&c, &[2])), set(&c, &[2]));
        assert_eq!(lambda_closure(&c, &ElementSet::empty(5)), ElementSet::empty(5));
        assert!(verify_closure_laws(&LambdaClosure::new(&FiniteLattice::n5()), 300, 2).all_pass());
    }

    #[test]
    fn bottom_against_top_takes_first_branch() {
        for l in [FiniteLattice::chain(2), FiniteLattice::m3(), FiniteLattice::boolean(3)] {
            let out = lattice_separate(&l, &set(&l, &[l.bottom()]), &set(&l, &[l.top()]), &CoverChoice::LowestIndex).unwrap();
            assert!(matches!(out.result, IdealFilterResult::Separated { ideal_side: Side::A, .. }));
        }
        // on the 2-chain the reverse input takes the second branch
        let l = FiniteLattice::chain(2);
        let out = lattice_separate(&l, &set(&l, &[1]), &set(&l, &[0]), &CoverChoice::LowestIndex).unwrap();
        assert_eq!(out.result, IdealFilterResult::Separated { top_i: 0, bot_f: 1, ideal_side: Side::B });
        // two branch tests, then one failed cover test in each loop
        assert_eq!(out.order_tests, 4);
    }

    #[test]
    fn overlapping_intervals_answer_no() {
        let l = FiniteLattice::chain(5);
        let out = lattice_separate(&l, &set(&l, &[0, 3]), &set(&l, &[2]), &CoverChoice::LowestIndex).unwrap();
        assert_eq!(out.result, IdealFilterResult::No);
        assert_eq!(
            lattice_separate(&l, &ElementSet::empty(5), &set(&l, &[2]), &CoverChoice::LowestIndex),
            Err(LatticeError::EmptyInput(Side::A))
        );
    }

    #[test]
    fn m3_atoms_leave_third_atom_uncovered() {
        let l = FiniteLattice::m3();
        let out = lattice_separate(&l, &set(&l, &[1]), &set(&l, &[2]), &CoverChoice::LowestIndex).unwrap();
        let (i, f) = out.ideal_filter(&l).unwrap();
        assert_eq!(i, set(&l, &[0, 1]));
        assert_eq!(f, set(&l, &[2, 4]));
        assert_eq!(out.is_partition(&l), Some(false));
    }

    #[test]
    fn distributivity() {
        assert_eq!(is_distributive(&FiniteLattice::boolean(3)), Ok(true));
        assert_eq!(is_distributive(&FiniteLattice::chain(6)), Ok(true));
        assert_eq!(is_distributive(&FiniteLattice::m3()), Ok(false));
        assert_eq!(is_distributive(&FiniteLattice::n5()), Ok(false));
    }

    #[test]
    fn kakutani_reports_are_consistent() {
        let b3 = lattice_kakutani_check(&FiniteLattice::boolean(3), 50, 1).unwrap();
        assert!(b3.distributive && b3.always_partition() && b3.exhaustive);
        let m3 = lattice_kakutani_check(&FiniteLattice::m3(), 50, 1).unwrap();
        assert!(!m3.distributive && !m3.always_partition() && m3.consistent());
        assert!(m3.first_gap.is_some());
    }
}
