// Exhaustive Kakutani test against the partition behavior of the greedy
// separation, for abstract closure systems and small lattices.

use closure_sep::closure::{check_partition_characterization, ElementSet, HalfSizeClosure, SingletonPairClosure};
use closure_sep::lattice::{lattice_kakutani_check, partition_lattice, FiniteLattice};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let full = HalfSizeClosure::new(6);
    let holed = HalfSizeClosure::without(6, ElementSet::from_ids(6, [0, 1, 2]));
    let pair = SingletonPairClosure::new(5, 0, 1);
    for (name, r) in [
        ("half-size", check_partition_characterization(&full, 100, 1)?),
        ("half-size minus one", check_partition_characterization(&holed, 100, 1)?),
        ("singleton pair", check_partition_characterization(&pair, 100, 1)?),
    ] {
        println!("{name:<20} kakutani={:<5} gaps={}/{} consistent={}", r.kakutani, r.non_partition_runs, r.runs, r.consistent());
    }

    let lattices = [
        ("2^3", FiniteLattice::boolean(3)),
        ("chain 5", FiniteLattice::chain(5)),
        ("M3", FiniteLattice::m3()),
        ("N5", FiniteLattice::n5()),
        ("partitions of 4", partition_lattice(4)?.lattice),
    ];
    for (name, l) in &lattices {
        let r = lattice_kakutani_check(l, 200, 1)?;
        println!("{name:<20} distributive={:<5} gaps={}/{} consistent={}", r.distributive, r.non_partition_runs, r.runs, r.consistent());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
