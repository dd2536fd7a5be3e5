use std::cell::Cell;

use super::set::ElementSet;

/// A closure operator over the ground set `{0, .., ground_size()-1}`.
///
/// Implementations are expected to be extensive, monotone and idempotent.
/// None of that is checked at call time; see [`verify_closure_laws`](super::verify_closure_laws).
pub trait ClosureOperator {
    fn ground_size(&self) -> usize;

    fn close(&self, set: &ElementSet) -> ElementSet;

    /// Closure of `closed ∪ {e}`, or `None` if that closure meets `avoid`.
    ///
    /// `closed` must be a fixed point. Counts as a single closure evaluation;
    /// operators may override it to stop early or reuse the structure of `closed`.
    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        let mut x = closed.clone();
        x.insert(e);
        let c = self.close(&x);
        c.is_disjoint(avoid).then_some(c)
    }
}

impl<T: ClosureOperator + ?Sized> ClosureOperator for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        (**self).close(set)
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        (**self).extend_avoiding(closed, e, avoid)
    }
}

impl<T: ClosureOperator + ?Sized> ClosureOperator for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        (**self).close(set)
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        (**self).extend_avoiding(closed, e, avoid)
    }
}

/// Wraps a plain function as a closure operator.
#[derive(Clone)]
pub struct FnClosure<F> {
    size: usize,
    f: F,
}

impl<F> FnClosure<F>
where
    F: Fn(&ElementSet) -> ElementSet,
{
    pub fn new(size: usize, f: F) -> Self {
        FnClosure { size, f }
    }
}

impl<F> ClosureOperator for FnClosure<F>
where
    F: Fn(&ElementSet) -> ElementSet,
{
    fn ground_size(&self) -> usize {
        self.size
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        (self.f)(set)
    }
}

/// Closure operator with a call counter.
///
/// Every evaluation (`close` or `extend_avoiding`) adds exactly one. The
/// counter is never reset implicitly and is not meant to be shared between runs.
pub struct InstrumentedClosure<C> {
    inner: C,
    calls: Cell<u64>,
}

impl<C: ClosureOperator> InstrumentedClosure<C> {
    pub fn new(inner: C) -> Self {
        InstrumentedClosure {
            inner,
            calls: Cell::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    pub fn reset(&self) {
        self.calls.set(0);
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    pub fn into_inner(self) -> C {
        self.inner
    }

    fn tick(&self) {
        self.calls.set(self.calls.get() + 1);
    }
}

impl<C: ClosureOperator> ClosureOperator for InstrumentedClosure<C> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        self.tick();
        self.inner.close(set)
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        self.tick();
        self.inner.extend_avoiding(closed, e, avoid)
    }
}

/// `true` iff `ρ(X) = X`.
pub fn is_closed<C: ClosureOperator + ?Sized>(op: &C, x: &ElementSet) -> bool {
    op.close(x) == *x
}

/// `true` iff both `H` and its complement are closed.
pub fn is_half_space<C: ClosureOperator + ?Sized>(op: &C, h: &ElementSet) -> bool {
    is_closed(op, h) && is_closed(op, &h.complement())
}

/// Half-space separability test for systems the caller knows to be Kakutani:
/// answers whether `ρ(A)` and `ρ(B)` are disjoint, using exactly two closure calls.
///
/// On a non-Kakutani system a `true` answer only means the closures are disjoint.
pub fn hss_decide_kakutani<C: ClosureOperator + ?Sized>(
    op: &C,
    a: &ElementSet,
    b: &ElementSet,
) -> bool {
    op.close(a).is_disjoint(&op.close(b))
}

/// Interval closure on the chain `0 < 1 < .. < n-1`: `X ↦ [min X, max X]`.
#[derive(Debug, Clone, Copy)]
pub struct IntervalClosure {
    n: usize,
}

impl IntervalClosure {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        IntervalClosure { n }
    }
}

impl ClosureOperator for IntervalClosure {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        match (set.iter().next(), set.iter().last()) {
            (Some(lo), Some(hi)) => ElementSet::from_ids(self.n, lo..=hi),
            _ => ElementSet::empty(self.n),
        }
    }
}

/// Closed sets are all subsets of size at most `n/2`, plus the whole ground set.
///
/// With `without` set, that one half-sized set is dropped from the family, which
/// keeps it a closure system but destroys the Kakutani property.
#[derive(Debug, Clone)]
pub struct HalfSizeClosure {
    n: usize,
    without: Option<ElementSet>,
}

impl HalfSizeClosure {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        HalfSizeClosure { n, without: None }
    }

    /// Panics unless `dropped` has exactly `n/2` elements.
    pub fn without(n: usize, dropped: ElementSet) -> Self {
        assert_eq!(dropped.universe(), n);
        assert_eq!(dropped.len(), n / 2, "only half-sized sets may be dropped");
        HalfSizeClosure {
            n,
            without: Some(dropped),
        }
    }
}

impl ClosureOperator for HalfSizeClosure {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        if set.len() <= self.n / 2 && self.without.as_ref() != Some(set) {
            set.clone()
        } else {
            ElementSet::full(self.n)
        }
    }
}

/// Only `∅`, `{first}`, `{second}` and the ground set are closed.
#[derive(Debug, Clone, Copy)]
pub struct SingletonPairClosure {
    n: usize,
    first: usize,
    second: usize,
}

impl SingletonPairClosure {
    pub fn new(n: usize, first: usize, second: usize) -> Self {
        assert!(first < n && second < n && first != second);
        SingletonPairClosure { n, first, second }
    }
}

impl ClosureOperator for SingletonPairClosure {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        let keep = set.is_empty()
            || (set.len() == 1 && (set.contains(self.first) || set.contains(self.second)));
        if keep {
            set.clone()
        } else {
            ElementSet::full(self.n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(ids: &[usize]) -> ElementSet {
        // elements 1..=5 stored as 0..=4
        ElementSet::from_ids(5, ids.iter().map(|i| i - 1))
    }

    #[test]
    fn interval_closedness() {
        let op = IntervalClosure::new(5);
        assert!(is_closed(&op, &chain(&[2, 3])));
        assert!(!is_closed(&op, &chain(&[1, 3])));
        assert_eq!(op.close(&chain(&[1, 3])), chain(&[1, 2, 3]));
        assert!(is_closed(&op, &ElementSet::full(5)));
    }

    #[test]
    fn interval_half_spaces() {
        let op = IntervalClosure::new(5);
        assert!(is_half_space(&op, &chain(&[1, 2])));
        assert!(!is_half_space(&op, &chain(&[2, 3])));
        // ρ(∅) = ∅ here, so the empty set is a half-space
        assert!(is_half_space(&op, &ElementSet::empty(5)));
    }

    #[test]
    fn empty_set_not_half_space_when_rho_empty_nonempty() {
        let op = FnClosure::new(3, |x: &ElementSet| {
            let mut c = x.clone();
            c.insert(0);
            c
        });
        assert!(!is_half_space(&op, &ElementSet::empty(3)));
    }

    #[test]
    fn kakutani_decision_on_chain() {
        let op = IntervalClosure::new(5);
        assert!(hss_decide_kakutani(&op, &chain(&[1, 2]), &chain(&[4, 5])));
        assert!(!hss_decide_kakutani(&op, &chain(&[1, 3]), &chain(&[2])));
    }

    #[test]
    fn instrumented_counts_every_evaluation() {
        let op = InstrumentedClosure::new(IntervalClosure::new(5));
        assert!(hss_decide_kakutani(&op, &chain(&[1]), &chain(&[5])));
        assert_eq!(op.calls(), 2);
        let _ = op.extend_avoiding(&chain(&[1]), 2, &chain(&[5]));
        assert_eq!(op.calls(), 3);
        op.reset();
        assert_eq!(op.calls(), 0);
    }

    #[test]
    fn half_size_fixture() {
        let op = HalfSizeClosure::new(4);
        assert_eq!(op.close(&ElementSet::from_ids(4, [0, 1])).len(), 2);
        assert!(op.close(&ElementSet::from_ids(4, [0, 1, 2])).is_full());
        let dropped = ElementSet::from_ids(4, [0, 1]);
        let op = HalfSizeClosure::without(4, dropped.clone());
        assert!(op.close(&dropped).is_full());
        assert_eq!(op.close(&ElementSet::from_ids(4, [0])).len(), 1);
    }

    #[test]
    fn singleton_pair_fixture() {
        let op = SingletonPairClosure::new(4, 0, 1);
        assert_eq!(op.close(&ElementSet::singleton(4, 1)), ElementSet::singleton(4, 1));
        assert!(op.close(&ElementSet::singleton(4, 2)).is_full());
        assert!(op.close(&ElementSet::empty(4)).is_empty());
    }
}
