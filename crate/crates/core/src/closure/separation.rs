use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::operator::{ClosureOperator, InstrumentedClosure};
use super::set::ElementSet;

/// Which of the two input sets a precondition error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparationError {
    #[error("input set {0:?} is empty")]
    EmptyInput(Side),
    #[error("input set {side:?} lives over {got} elements, operator over {expected}")]
    UniverseMismatch {
        side: Side,
        expected: usize,
        got: usize,
    },
}

/// Order in which unassigned elements are offered for extension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ExtensionOrder {
    /// Increasing element id.
    #[default]
    Ascending,
    /// Uniform random permutation drawn from the given seed.
    Random(u64),
    /// The listed elements first, in the given order; everything else ascending.
    Sequence(Vec<usize>),
}

impl ExtensionOrder {
    /// Full permutation of `0..n` realizing this order.
    pub fn permutation(&self, n: usize) -> Vec<usize> {
        match self {
            ExtensionOrder::Ascending => (0..n).collect(),
            ExtensionOrder::Random(seed) => {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                p
            }
            ExtensionOrder::Sequence(first) => {
                let mut seen = vec![false; n];
                let mut p = Vec::with_capacity(n);
                for &e in first.iter().filter(|&&e| e < n) {
                    if !seen[e] {
                        seen[e] = true;
                        p.push(e);
                    }
                }
                p.extend((0..n).filter(|&e| !seen[e]));
                p
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparationOutcome {
    Separated {
        h1: ElementSet,
        h2: ElementSet,
        closure_calls: u64,
    },
    Inseparable,
}

impl SeparationOutcome {
    pub fn is_separated(&self) -> bool {
        matches!(self, SeparationOutcome::Separated { .. })
    }

    /// `Some(true)` when the two closed sets cover the ground set.
    pub fn is_partition(&self) -> Option<bool> {
        match self {
            SeparationOutcome::Separated { h1, h2, .. } => Some(h1.union(h2).is_full()),
            SeparationOutcome::Inseparable => None,
        }
    }

    pub fn pair(&self) -> Option<(&ElementSet, &ElementSet)> {
        match self {
            SeparationOutcome::Separated { h1, h2, .. } => Some((h1, h2)),
            SeparationOutcome::Inseparable => None,
        }
    }
}

fn check_input(side: Side, set: &ElementSet, n: usize) -> Result<(), SeparationError> {
    if set.universe() != n {
        return Err(SeparationError::UniverseMismatch {
            side,
            expected: n,
            got: set.universe(),
        });
    }
    if set.is_empty() {
        return Err(SeparationError::EmptyInput(side));
    }
    Ok(())
}

/// Greedy maximal closed-set separation.
///
/// Closes `A` and `B`; if the closures meet the answer is `Inseparable`.
/// Otherwise every unassigned element is offered once, in `order`, first to
/// `H1` and then to `H2`, and accepted where the extended closure stays disjoint
/// from the other side. The result is a maximal disjoint pair of closed sets,
/// found with at most `2|E| - 2` closure evaluations.
///
/// `closure_calls` in the outcome counts the evaluations made by this run only.
pub fn mcs_separate<C: ClosureOperator>(
    op: &InstrumentedClosure<C>,
    a: &ElementSet,
    b: &ElementSet,
    order: &ExtensionOrder,
) -> Result<SeparationOutcome, SeparationError> {
    let n = op.ground_size();
    check_input(Side::A, a, n)?;
    check_input(Side::B, b, n)?;
    let start = op.calls();

    let mut h1 = op.close(a);
    let mut h2 = op.close(b);
    if h1.intersects(&h2) {
        return Ok(SeparationOutcome::Inseparable);
    }
    let mut free = h1.union(&h2).complement();

    for e in order.permutation(n) {
        if free.is_empty() {
            break;
        }
        if !free.remove(e) {
            continue;
        }
        if let Some(c) = op.extend_avoiding(&h1, e, &h2) {
            h1 = c;
            free.difference_with(&h1);
        } else if let Some(c) = op.extend_avoiding(&h2, e, &h1) {
            h2 = c;
            free.difference_with(&h2);
        }
    }

    Ok(SeparationOutcome::Separated {
        h1,
        h2,
        closure_calls: op.calls() - start,
    })
}

/// Convenience wrapper that instruments `op` for a single run.
pub fn separate<C: ClosureOperator>(
    op: C,
    a: &ElementSet,
    b: &ElementSet,
    order: &ExtensionOrder,
) -> Result<SeparationOutcome, SeparationError> {
    mcs_separate(&InstrumentedClosure::new(op), a, b, order)
}

/// Checks the maximality condition on a separated pair: no element outside
/// `H1 ∪ H2` can be added to either side without hitting the other.
pub fn is_maximal_pair<C: ClosureOperator + ?Sized>(
    op: &C,
    h1: &ElementSet,
    h2: &ElementSet,
) -> bool {
    h1.union(h2).complement().iter().all(|e| {
        let mut x1 = h1.clone();
        x1.insert(e);
        let mut x2 = h2.clone();
        x2.insert(e);
        op.close(&x1).intersects(h2) && op.close(&x2).intersects(h1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::IntervalClosure;

    fn chain(n: usize, ids: &[usize]) -> ElementSet {
        ElementSet::from_ids(n, ids.iter().map(|i| i - 1))
    }

    #[test]
    fn favorable_order_uses_three_calls() {
        let n = 9;
        let op = InstrumentedClosure::new(IntervalClosure::new(n));
        let out = mcs_separate(
            &op,
            &chain(n, &[2]),
            &chain(n, &[1]),
            &ExtensionOrder::Sequence(vec![n - 1]),
        )
        .unwrap();
        let (h1, h2) = out.pair().unwrap();
        assert_eq!(*h1, ElementSet::from_ids(n, 1..n));
        assert_eq!(*h2, chain(n, &[1]));
        assert_eq!(out, SeparationOutcome::Separated { h1: h1.clone(), h2: h2.clone(), closure_calls: 3 });
    }

    #[test]
    fn adversarial_order_hits_bound() {
        for n in 2..=20 {
            let op = InstrumentedClosure::new(IntervalClosure::new(n));
            let out = mcs_separate(&op, &chain(n, &[1]), &chain(n, &[2]), &ExtensionOrder::Ascending)
                .unwrap();
            let SeparationOutcome::Separated { h1, h2, closure_calls } = out else {
                panic!("chain inputs are separable");
            };
            assert_eq!(h1, chain(n, &[1]));
            assert_eq!(h2, ElementSet::from_ids(n, 1..n));
            assert_eq!(closure_calls as usize, 2 * n - 2);
        }
    }

    #[test]
    fn overlapping_closures_are_inseparable() {
        let op = InstrumentedClosure::new(IntervalClosure::new(5));
        let out = mcs_separate(&op, &chain(5, &[1, 3]), &chain(5, &[2]), &ExtensionOrder::Ascending).unwrap();
        assert_eq!(out, SeparationOutcome::Inseparable);
        assert_eq!(op.calls(), 2);
    }

    #[test]
    fn empty_inputs_rejected() {
        let op = InstrumentedClosure::new(IntervalClosure::new(5));
        let e = ElementSet::empty(5);
        assert_eq!(
            mcs_separate(&op, &e, &chain(5, &[1]), &ExtensionOrder::Ascending),
            Err(SeparationError::EmptyInput(Side::A))
        );
        assert_eq!(
            mcs_separate(&op, &chain(5, &[1]), &e, &ExtensionOrder::Ascending),
            Err(SeparationError::EmptyInput(Side::B))
        );
        assert!(matches!(
            mcs_separate(&op, &ElementSet::singleton(4, 0), &chain(5, &[1]), &ExtensionOrder::Ascending),
            Err(SeparationError::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn sequence_order_fills_in_remaining() {
        let p = ExtensionOrder::Sequence(vec![3, 1, 3, 9]).permutation(5);
        assert_eq!(p, vec![3, 1, 0, 2, 4]);
        let r = ExtensionOrder::Random(7).permutation(10);
        let mut s = r.clone();
        s.sort();
        assert_eq!(s, (0..10).collect::<Vec<_>>());
        assert_eq!(r, ExtensionOrder::Random(7).permutation(10));
    }
}
