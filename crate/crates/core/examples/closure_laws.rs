// Randomized law checks for the closure operators, plus one broken operator
// to show a shrunk counterexample.

use closure_sep::closure::{verify_closure_laws, ElementSet, FnClosure};
use closure_sep::euclid::{generate_d2_instance, AlphaClosure};
use closure_sep::graph::{random_connected_graph, GeodesicClosure};
use closure_sep::lattice::{random_lattice, LambdaClosure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_connected_graph(20, 0.15, 4);
    let l = random_lattice(6, 10, 4);
    let pts = generate_d2_instance(2, 15, 0.05, 4)?.points;

    let reports = [
        ("geodesic", verify_closure_laws(&GeodesicClosure::new(&g), 300, 1)),
        ("interval", verify_closure_laws(&LambdaClosure::new(&l), 300, 1)),
        ("convex hull", verify_closure_laws(&AlphaClosure::new(pts), 100, 1)),
    ];
    for (name, r) in &reports {
        println!("{name:<12} {} trials, all laws hold: {}", r.trials, r.all_pass());
    }

    // adds the successor of every element: extensive and monotone, not idempotent
    let shift = FnClosure::new(8, |s: &ElementSet| {
        let mut out = s.clone();
        for e in s.iter().filter(|&e| e + 1 < 8) {
            out.insert(e + 1);
        }
        out
    });
    let r = verify_closure_laws(&shift, 200, 1);
    println!("shift        idempotency witness: {:?}", r.idempotency);
    assert!(r.idempotency.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
