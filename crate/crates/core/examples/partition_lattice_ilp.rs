// Inductive generalization in the partition lattice of five positions: the
// separation finds the most general pattern covering the positive atoms
// and the most specific one covering the negative atom.

use closure_sep::closure::ElementSet;
use closure_sep::lattice::{lattice_separate, partition_lattice, CoverChoice};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = partition_lattice(5)?;
    let l = &p.lattice;
    println!("partitions of 5 positions: {}", l.len());

    let positives = [p.atom(&["a", "b", "c", "d", "d"]), p.atom(&["a", "b", "c", "c", "c"])];
    let negative = p.atom(&["a", "b", "b", "b", "b"]);
    let a = ElementSet::from_ids(l.len(), positives.iter().map(|x| x.expect("valid atom")));
    let b = ElementSet::singleton(l.len(), negative.ok_or("bad atom")?);
    let sep = lattice_separate(l, &a, &b, &CoverChoice::LowestIndex)?;
    let (ideal, filter) = sep.ideal_filter(l).ok_or("not separable")?;
    let top = l.sup(&ideal).ok_or("empty ideal")?;
    let bottom = l.inf(&filter).ok_or("empty filter")?;
    println!("ideal  ({} partitions) up to {}", ideal.len(), l.label(top));
    println!("filter ({} partitions) from {}", filter.len(), l.label(bottom));
    println!("partition of the lattice: {}", sep.is_partition(l) == Some(true));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
