use super::{Graph, GeodesicClosure, GraphError};
use crate::closure::{ClosureOperator, ElementSet};

pub const DEFAULT_PASCH_BOUND: usize = 60;

/// Five vertices violating the Pasch axiom: `x ∈ γ{u,v}`, `y ∈ γ{u,w}` and
/// `γ{x,w} ∩ γ{y,v} = ∅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaschWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaschOutcome {
    Holds,
    Violated(PaschWitness),
}

impl PaschOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, PaschOutcome::Holds)
    }

    pub fn witness(&self) -> Option<PaschWitness> {
        match self {
            PaschOutcome::Holds => None,
            PaschOutcome::Violated(w) => Some(*w),
        }
    }
}

pub fn pasch_check(g: &Graph) -> Result<PaschOutcome, GraphError> {
    pasch_check_bounded(g, DEFAULT_PASCH_BOUND)
}

/// Exhaustive Pasch test over all quintuples. The hulls of all vertex pairs
/// are computed once, so the scan itself only intersects bitsets.
pub fn pasch_check_bounded(g: &Graph, bound: usize) -> Result<PaschOutcome, GraphError> {
    let n = g.n();
    if n > bound {
        return Err(GraphError::TooLarge { n, bound });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let op = GeodesicClosure::new(g);
    let mut hull = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            hull.push(if b < a {
                ElementSet::empty(n)
            } else {
                op.close(&ElementSet::from_ids(n, [a, b]))
            });
        }
    }
    let pair = |a: usize, b: usize| &hull[a.min(b) * n + a.max(b)];

    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in pair(u, v).iter() {
                    let xw = pair(x, w);
                    for y in pair(u, w).iter() {
                        if !xw.intersects(pair(y, v)) {
                            return Ok(PaschOutcome::Violated(PaschWitness { u, v, w, x, y }));
                        }
                    }
                }
            }
        }
    }
    Ok(PaschOutcome::Holds)
}
