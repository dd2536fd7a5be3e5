// Two linearly separable point clouds in the plane, labelled from a few
// training points by maximal disjoint convex hulls.

use closure_sep::closure::{separate, ElementSet, ExtensionOrder};
use closure_sep::euclid::{generate_d2_instance, AlphaClosure, DEFAULT_MARGIN};
use closure_sep::experiments::{accuracy, coverage};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = generate_d2_instance(2, 100, DEFAULT_MARGIN, 3)?;
    let n = inst.labels.len();
    let e1 = ElementSet::from_ids(n, inst.positives());
    let e2 = ElementSet::from_ids(n, inst.negatives());
    let a = ElementSet::from_ids(n, inst.positives().take(10));
    let b = ElementSet::from_ids(n, inst.negatives().take(10));

    let op = AlphaClosure::new(inst.points.clone());
    let out = separate(op, &a, &b, &ExtensionOrder::Random(5))?;
    let (h1, h2) = out.pair().ok_or("training hulls overlap")?;
    let acc = accuracy(&e1, &e2, h1, h2, &a, &b)?;
    let cov = coverage(&a, &b, h1, h2)?;
    println!("H1: {} points, H2: {} points, unassigned: {}", h1.len(), h2.len(), n - h1.len() - h2.len());
    println!("accuracy: {:.3}, coverage: {:.3}", acc.unwrap_or(f64::NAN), cov.unwrap_or(f64::NAN));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
