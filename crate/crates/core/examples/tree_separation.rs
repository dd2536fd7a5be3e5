// Separating vertex sets of a random tree. Trees are Kakutani, so every
// separation ends in a partition into two half-spaces.

use closure_sep::closure::{separate, ElementSet, ExtensionOrder};
use closure_sep::graph::{random_tree, GeodesicClosure, TreeClosure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = random_tree(40, 7);
    let a = ElementSet::from_ids(40, [3, 11]);
    let b = ElementSet::from_ids(40, [25]);

    let fast = TreeClosure::new(&tree).ok_or("not a tree")?;
    let generic = GeodesicClosure::new(&tree);
    let via_tree = separate(fast, &a, &b, &ExtensionOrder::Random(1))?;
    let via_apsp = separate(generic, &a, &b, &ExtensionOrder::Random(1))?;

    let (h1, h2) = via_tree.pair().ok_or("closures overlap")?;
    println!("H1 ({} vertices): {:?}", h1.len(), h1.to_vec());
    println!("H2 ({} vertices): {:?}", h2.len(), h2.to_vec());
    println!("partition: {}", via_tree.is_partition() == Some(true));
    assert_eq!(via_tree.pair(), via_apsp.pair());
    assert_eq!(via_tree.is_partition(), Some(true));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
