use std::cell::RefCell;

use super::lp::{feasible, LpError};
use super::{EuclidError, PointSet};
use crate::closure::{ClosureOperator, ElementSet};

pub const DEFAULT_EPS: f64 = 1e-9;

/// Is `q` a convex combination of the points `gens`, up to `eps`?
pub fn in_convex_hull(points: &PointSet, gens: &[usize], q: &[f64], eps: f64) -> Result<bool, EuclidError> {
    if gens.is_empty() {
        return Err(EuclidError::EmptyGenerators);
    }
    Ok(hull_contains(points, gens, q, eps)?)
}

fn hull_contains(points: &PointSet, gens: &[usize], q: &[f64], eps: f64) -> Result<bool, LpError> {
    let d = points.dim();
    let k = gens.len();
    if gens.iter().any(|&g| points.point(g) == q) {
        return Ok(true);
    }
    if !in_box(points, gens, q, eps) {
        return Ok(false);
    }
    // rows: one per coordinate, then sum of weights = 1
    let mut a = vec![0.0; (d + 1) * k];
    for (j, &g) in gens.iter().enumerate() {
        for (i, &x) in points.point(g).iter().enumerate() {
            a[i * k + j] = x;
        }
        a[d * k + j] = 1.0;
    }
    let mut b = q.to_vec();
    b.push(1.0);
    feasible(&a, &b, d + 1, k, eps)
}

fn in_box(points: &PointSet, gens: &[usize], q: &[f64], eps: f64) -> bool {
    (0..points.dim()).all(|i| {
        let (lo, hi) = gens.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &g| {
            let x = points.point(g)[i];
            (lo.min(x), hi.max(x))
        });
        q[i] >= lo - eps && q[i] <= hi + eps
    })
}

/// Do the convex hulls of `first` and `second` share a point?
pub fn hulls_intersect(points: &PointSet, first: &[usize], second: &[usize], eps: f64) -> Result<bool, EuclidError> {
    if first.is_empty() || second.is_empty() {
        return Err(EuclidError::EmptyGenerators);
    }
    Ok(hulls_meet(points, first, second, eps)?)
}

fn hulls_meet(points: &PointSet, first: &[usize], second: &[usize], eps: f64) -> Result<bool, LpError> {
    let d = points.dim();
    let (k1, k2) = (first.len(), second.len());
    let k = k1 + k2;
    // Σλ p - Σμ q = 0, Σλ = 1, Σμ = 1
    let mut a = vec![0.0; (d + 2) * k];
    for (j, &g) in first.iter().enumerate() {
        for (i, &x) in points.point(g).iter().enumerate() {
            a[i * k + j] = x;
        }
        a[d * k + j] = 1.0;
    }
    for (j, &g) in second.iter().enumerate() {
        for (i, &x) in points.point(g).iter().enumerate() {
            a[i * k + k1 + j] = -x;
        }
        a[(d + 1) * k + k1 + j] = 1.0;
    }
    let mut b = vec![0.0; d + 2];
    b[d] = 1.0;
    b[d + 1] = 1.0;
    feasible(&a, &b, d + 2, k, eps)
}

/// Elements whose points lie in the convex hull of the points of `x`.
pub fn alpha_closure(points: &PointSet, x: &ElementSet) -> Result<ElementSet, EuclidError> {
    AlphaClosure::new(points.clone()).try_close(x)
}

/// Convex-hull closure on a finite point set.
///
/// Hull membership is decided by a feasibility LP over the extreme points of
/// the current set only. Extreme points of recently produced closed sets are
/// cached, so repeated extension of the same two sets does not recompute them.
///
/// The [`ClosureOperator`] methods panic if an LP fails; use
/// [`AlphaClosure::try_close`] to get the error instead.
#[derive(Debug, Clone)]
pub struct AlphaClosure {
    points: PointSet,
    eps: f64,
    cache: RefCell<Vec<(ElementSet, Vec<usize>)>>,
}

const CACHE_SLOTS: usize = 8;

impl AlphaClosure {
    pub fn new(points: PointSet) -> Self {
        Self::with_eps(points, DEFAULT_EPS)
    }

    pub fn with_eps(points: PointSet, eps: f64) -> Self {
        assert!(eps > 0.0, "tolerance must be positive");
        AlphaClosure {
            points,
            eps,
            cache: RefCell::new(Vec::new()),
        }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    fn remember(&self, set: &ElementSet, gens: &[usize]) {
        let mut cache = self.cache.borrow_mut();
        cache.retain(|(s, _)| s != set);
        cache.insert(0, (set.clone(), gens.to_vec()));
        cache.truncate(CACHE_SLOTS);
    }

    /// Extreme points of `set`, from the cache when possible.
    fn generators(&self, set: &ElementSet) -> Result<Vec<usize>, LpError> {
        if let Some((_, g)) = self.cache.borrow().iter().find(|(s, _)| s == set) {
            return Ok(g.clone());
        }
        self.prune(set.to_vec())
    }

    /// Drops every candidate inside the hull of the others.
    fn prune(&self, mut gens: Vec<usize>) -> Result<Vec<usize>, LpError> {
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let g = gens.swap_remove(i);
            if hull_contains(&self.points, &gens, self.points.point(g), self.eps)? {
                continue;
            }
            gens.push(g);
            let last = gens.len() - 1;
            gens.swap(i, last);
            i += 1;
        }
        gens.sort_unstable();
        Ok(gens)
    }

    /// Adds to `base` every element outside `base ∪ skip` lying in conv(`gens`).
    fn absorb(&self, base: &ElementSet, skip: &ElementSet, gens: &[usize]) -> Result<ElementSet, LpError> {
        let mut out = base.clone();
        for e in 0..self.points.len() {
            if !base.contains(e)
                && !skip.contains(e)
                && hull_contains(&self.points, gens, self.points.point(e), self.eps)?
            {
                out.insert(e);
            }
        }
        Ok(out)
    }

    pub fn try_close(&self, x: &ElementSet) -> Result<ElementSet, EuclidError> {
        if x.is_empty() {
            return Ok(x.clone());
        }
        let gens = self.generators(x)?;
        let out = self.absorb(x, &ElementSet::empty(x.universe()), &gens)?;
        self.remember(&out, &gens);
        Ok(out)
    }

    fn try_extend(&self, closed: &ElementSet, e: usize, avoid: &ElementSet) -> Result<Option<ElementSet>, LpError> {
        if closed.contains(e) {
            return Ok(Some(closed.clone()));
        }
        if avoid.contains(e) {
            return Ok(None);
        }
        let mut gens = self.generators(closed)?;
        gens.push(e);
        if !avoid.is_empty() {
            let other = self.generators(avoid)?;
            if hulls_meet(&self.points, &gens, &other, self.eps)? {
                for a in avoid.iter() {
                    if hull_contains(&self.points, &gens, self.points.point(a), self.eps)? {
                        return Ok(None);
                    }
                }
            }
        }
        let mut base = closed.clone();
        base.insert(e);
        let out = self.absorb(&base, avoid, &gens)?;
        // e is extreme since it lies outside the closed set's hull
        let gens = self.prune(gens)?;
        self.remember(&out, &gens);
        Ok(Some(out))
    }
}

impl ClosureOperator for AlphaClosure {
    fn ground_size(&self) -> usize {
        self.points.len()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        self.try_close(set).expect("hull membership LP failed")
    }

    fn extend_avoiding(&self, closed: &ElementSet, e: usize, avoid: &ElementSet) -> Option<ElementSet> {
        self.try_extend(closed, e, avoid).expect("hull membership LP failed")
    }
}
