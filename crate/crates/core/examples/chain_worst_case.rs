// Greedy separation on a chain with interval closure: the extension order
// decides between three closure calls and the `2n - 2` worst case.

use closure_sep::closure::{mcs_separate, ElementSet, ExtensionOrder, InstrumentedClosure, IntervalClosure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 10;
    let op = InstrumentedClosure::new(IntervalClosure::new(n));
    let first = ElementSet::singleton(n, 0);
    let second = ElementSet::singleton(n, 1);

    // A = {1}, B = {0}: offering the last element first absorbs everything at once
    let good = mcs_separate(&op, &second, &first, &ExtensionOrder::Sequence(vec![n - 1]))?;
    // A = {0}, B = {1}: ascending order grows B one element at a time
    let bad = mcs_separate(&op, &first, &second, &ExtensionOrder::Ascending)?;

    for (name, out) in [("favorable", &good), ("adversarial", &bad)] {
        let (h1, h2) = out.pair().ok_or("chain inputs are separable")?;
        println!("{name:>11}: H1 = {h1:?}, H2 = {h2:?}");
    }
    let calls = |o: &closure_sep::closure::SeparationOutcome| match o {
        closure_sep::closure::SeparationOutcome::Separated { closure_calls, .. } => *closure_calls,
        _ => 0,
    };
    println!("closure calls: {} vs {} (bound 2n-2 = {})", calls(&good), calls(&bad), 2 * n - 2);
    assert_eq!(calls(&good), 3);
    assert_eq!(calls(&bad) as usize, 2 * n - 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
