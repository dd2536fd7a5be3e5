// Concept lattice of a small shapes context and an ideal/filter separation
// between two of its concepts.

use closure_sep::closure::ElementSet;
use closure_sep::lattice::{concept_lattice, is_distributive, lattice_separate, CoverChoice, FormalContext};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cl = concept_lattice(&FormalContext::shapes())?;
    let l = &cl.lattice;
    println!("{} concepts, distributive: {}", l.len(), is_distributive(l)?);
    for c in 0..l.len() {
        let covers: Vec<String> = l.upper_covers(c).iter().map(|&u| cl.concept_label(u)).collect();
        println!("  {:<16} < {}", cl.concept_label(c), covers.join(" "));
    }

    let a = cl.generated_by_objects(&["o4"])?;
    let b = cl.generated_by_objects(&["o1", "o2"])?;
    let sep = lattice_separate(
        l,
        &ElementSet::singleton(l.len(), a),
        &ElementSet::singleton(l.len(), b),
        &CoverChoice::LowestIndex,
    )?;
    let (ideal, filter) = sep.ideal_filter(l).ok_or("inputs are not separable")?;
    let show = |s: &ElementSet| s.iter().map(|c| cl.concept_label(c)).collect::<Vec<_>>().join(" ");
    println!("ideal:  {}", show(&ideal));
    println!("filter: {}", show(&filter));
    let rest = ideal.union(&filter).complement();
    println!("neither: {} ({} order tests)", show(&rest), sep.order_tests);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
