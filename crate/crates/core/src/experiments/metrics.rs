use super::ExperimentError;
use crate::closure::ElementSet;

fn check(a: &ElementSet, b: &ElementSet, h1: &ElementSet, h2: &ElementSet) -> Result<(), ExperimentError> {
    if h1.intersects(h2) {
        return Err(ExperimentError::Precondition("output sets overlap".into()));
    }
    if !a.is_subset(h1) || !b.is_subset(h2) {
        return Err(ExperimentError::Precondition(
            "training sets are not contained in their output sets".into(),
        ));
    }
    Ok(())
}

/// Fraction of the non-training elements assigned by `(h1, h2)` that got the
/// right label. `None` when nothing outside the training sets was assigned.
pub fn accuracy(
    e1: &ElementSet,
    e2: &ElementSet,
    h1: &ElementSet,
    h2: &ElementSet,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<Option<f64>, ExperimentError> {
    check(a, b, h1, h2)?;
    let train = a.union(b);
    let h1 = h1.difference(&train);
    let h2 = h2.difference(&train);
    let assigned = h1.len() + h2.len();
    if assigned == 0 {
        return Ok(None);
    }
    let hits = h1.intersection(e1).len() + h2.intersection(e2).len();
    Ok(Some(hits as f64 / assigned as f64))
}

/// Fraction of the non-training elements assigned to either side. `None`
/// when the training sets cover the whole ground set.
pub fn coverage(
    a: &ElementSet,
    b: &ElementSet,
    h1: &ElementSet,
    h2: &ElementSet,
) -> Result<Option<f64>, ExperimentError> {
    check(a, b, h1, h2)?;
    let train = a.union(b);
    let rest = train.universe() - train.len();
    if rest == 0 {
        return Ok(None);
    }
    let assigned = h1.union(h2).difference(&train).len();
    Ok(Some(assigned as f64 / rest as f64))
}
