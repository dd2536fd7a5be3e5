//! Exhaustive reference procedures for tiny ground sets.
//!
//! Everything here enumerates all `2^|E|` subsets, so the ground set size is
//! capped. The caps are configurable through [`BruteForce`].

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::operator::{ClosureOperator, InstrumentedClosure};
use super::separation::{mcs_separate, ExtensionOrder, SeparationOutcome};
use super::set::ElementSet;

pub const DEFAULT_ENUMERATION_BOUND: usize = 16;
pub const DEFAULT_KAKUTANI_BOUND: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("ground set has {size} elements, brute force is limited to {bound}")]
pub struct SizeError {
    pub size: usize,
    pub bound: usize,
}

/// Outcome of the exhaustive Kakutani test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KakutaniVerdict {
    Kakutani,
    /// Two disjoint closed sets that no half-space separates.
    NotKakutani {
        a: ElementSet,
        b: ElementSet,
    },
}

impl KakutaniVerdict {
    pub fn is_kakutani(&self) -> bool {
        matches!(self, KakutaniVerdict::Kakutani)
    }
}

/// Result of comparing the partition behavior of greedy separation with the
/// exhaustive Kakutani test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub kakutani: bool,
    pub runs: usize,
    pub non_partition_runs: usize,
    /// First input pair whose separation left elements uncovered.
    pub first_gap: Option<(ElementSet, ElementSet)>,
}

impl PartitionReport {
    /// Kakutani iff every run partitioned the ground set.
    pub fn consistent(&self) -> bool {
        self.kakutani == (self.non_partition_runs == 0)
    }
}

/// Brute-force oracles over an operator with a small ground set.
pub struct BruteForce<'a, C: ?Sized> {
    op: &'a C,
    enumeration_bound: usize,
    kakutani_bound: usize,
}

impl<'a, C: ClosureOperator + ?Sized> BruteForce<'a, C> {
    pub fn new(op: &'a C) -> Self {
        BruteForce {
            op,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            kakutani_bound: DEFAULT_KAKUTANI_BOUND,
        }
    }

    pub fn enumeration_bound(mut self, bound: usize) -> Self {
        self.enumeration_bound = bound.min(63);
        self
    }

    pub fn kakutani_bound(mut self, bound: usize) -> Self {
        self.kakutani_bound = bound.min(63);
        self
    }

    fn n(&self) -> usize {
        self.op.ground_size()
    }

    fn check(&self, bound: usize) -> Result<usize, SizeError> {
        let size = self.n();
        if size > bound {
            Err(SizeError { size, bound })
        } else {
            Ok(size)
        }
    }

    fn closed_masks(&self, bound: usize) -> Result<Vec<u64>, SizeError> {
        let n = self.check(bound)?;
        let mut seen = HashSet::new();
        for mask in 0..(1u64 << n) {
            let c = self.op.close(&ElementSet::from_mask(n, mask)).to_mask();
            seen.insert(c);
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_by_key(|m| (m.count_ones(), *m));
        Ok(out)
    }

    /// All fixed points of the operator, ordered by size then mask.
    pub fn closed_sets(&self) -> Result<Vec<ElementSet>, SizeError> {
        let n = self.n();
        Ok(self
            .closed_masks(self.enumeration_bound)?
            .into_iter()
            .map(|m| ElementSet::from_mask(n, m))
            .collect())
    }

    /// Closed sets whose complement is closed as well.
    pub fn half_spaces(&self) -> Result<Vec<ElementSet>, SizeError> {
        let n = self.n();
        let closed = self.closed_masks(self.enumeration_bound)?;
        Ok(half_space_masks(n, &closed)
            .into_iter()
            .map(|m| ElementSet::from_mask(n, m))
            .collect())
    }

    /// Every inclusion-maximal pair of disjoint closed sets `(H1, H2)` with
    /// `A ⊆ H1` and `B ⊆ H2`. Empty when `ρ(A)` and `ρ(B)` meet.
    pub fn maximal_separations(
        &self,
        a: &ElementSet,
        b: &ElementSet,
    ) -> Result<Vec<(ElementSet, ElementSet)>, SizeError> {
        let n = self.n();
        let closed = self.closed_masks(self.enumeration_bound)?;
        let (am, bm) = (a.to_mask(), b.to_mask());
        let left: Vec<u64> = closed.iter().copied().filter(|c| am & !c == 0).collect();
        let right: Vec<u64> = closed.iter().copied().filter(|c| bm & !c == 0).collect();

        let mut out = Vec::new();
        for &h1 in &left {
            for &h2 in &right {
                if h1 & h2 != 0 {
                    continue;
                }
                // a dominating pair exists iff one side alone can grow
                let grow1 = left.iter().any(|&d| d != h1 && h1 & !d == 0 && d & h2 == 0);
                let grow2 = right.iter().any(|&d| d != h2 && h2 & !d == 0 && d & h1 == 0);
                if !grow1 && !grow2 {
                    out.push((ElementSet::from_mask(n, h1), ElementSet::from_mask(n, h2)));
                }
            }
        }
        Ok(out)
    }

    /// Decides the Kakutani property by checking every pair of disjoint
    /// non-empty closed sets against the enumerated half-spaces.
    pub fn kakutani(&self) -> Result<KakutaniVerdict, SizeError> {
        let n = self.check(self.kakutani_bound)?;
        let closed = self.closed_masks(self.kakutani_bound)?;
        let halves = half_space_masks(n, &closed);
        let nonempty: Vec<u64> = closed.into_iter().filter(|&c| c != 0).collect();
        for (i, &c1) in nonempty.iter().enumerate() {
            for &c2 in &nonempty[i + 1..] {
                if c1 & c2 != 0 {
                    continue;
                }
                // the complement of a separating half-space separates the swapped pair
                let separable = halves.iter().any(|&h| c1 & !h == 0 && c2 & h == 0);
                if !separable {
                    return Ok(KakutaniVerdict::NotKakutani {
                        a: ElementSet::from_mask(n, c1),
                        b: ElementSet::from_mask(n, c2),
                    });
                }
            }
        }
        Ok(KakutaniVerdict::Kakutani)
    }

    /// Runs greedy separation on every pair of disjoint non-empty closed sets
    /// (ascending order) and on `trials` random input pairs with random orders,
    /// and compares "every output is a partition" with [`Self::kakutani`].
    pub fn partition_characterization(
        &self,
        trials: usize,
        seed: u64,
    ) -> Result<PartitionReport, SizeError> {
        let n = self.check(self.kakutani_bound)?;
        let kakutani = self.kakutani()?.is_kakutani();
        let closed = self.closed_masks(self.kakutani_bound)?;
        let nonempty: Vec<u64> = closed.into_iter().filter(|&c| c != 0).collect();
        let inst = InstrumentedClosure::new(self.op);

        let mut report = PartitionReport {
            kakutani,
            runs: 0,
            non_partition_runs: 0,
            first_gap: None,
        };
        let mut record = |a: &ElementSet, b: &ElementSet, order: &ExtensionOrder| {
            let out = mcs_separate(&inst, a, b, order).expect("inputs are non-empty");
            if let SeparationOutcome::Separated { .. } = out {
                report.runs += 1;
                if out.is_partition() == Some(false) {
                    report.non_partition_runs += 1;
                    report.first_gap.get_or_insert((a.clone(), b.clone()));
                }
            }
        };

        for &c1 in &nonempty {
            for &c2 in &nonempty {
                if c1 & c2 == 0 {
                    record(
                        &ElementSet::from_mask(n, c1),
                        &ElementSet::from_mask(n, c2),
                        &ExtensionOrder::Ascending,
                    );
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for _ in 0..trials {
            let am = rng.gen::<u64>() & full;
            let bm = rng.gen::<u64>() & full & !am;
            if am == 0 || bm == 0 {
                continue;
            }
            record(
                &ElementSet::from_mask(n, am),
                &ElementSet::from_mask(n, bm),
                &ExtensionOrder::Random(rng.gen()),
            );
        }
        Ok(report)
    }
}

fn half_space_masks(n: usize, closed: &[u64]) -> Vec<u64> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let set: HashSet<u64> = closed.iter().copied().collect();
    closed
        .iter()
        .copied()
        .filter(|c| set.contains(&(!c & full)))
        .collect()
}

/// All closed sets, with the default size bound.
pub fn enumerate_closed_sets<C: ClosureOperator + ?Sized>(
    op: &C,
) -> Result<Vec<ElementSet>, SizeError> {
    BruteForce::new(op).closed_sets()
}

pub fn brute_force_maximal_separations<C: ClosureOperator + ?Sized>(
    op: &C,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<Vec<(ElementSet, ElementSet)>, SizeError> {
    BruteForce::new(op).maximal_separations(a, b)
}

pub fn brute_force_kakutani<C: ClosureOperator + ?Sized>(
    op: &C,
) -> Result<KakutaniVerdict, SizeError> {
    BruteForce::new(op).kakutani()
}

pub fn check_partition_characterization<C: ClosureOperator + ?Sized>(
    op: &C,
    trials: usize,
    seed: u64,
) -> Result<PartitionReport, SizeError> {
    BruteForce::new(op).partition_characterization(trials, seed)
}
