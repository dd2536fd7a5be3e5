// A small run of the tree vertex classification grid, written as CSV.

use closure_sep::experiments::{run_d1, write_summary_csv, D1Config};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = D1Config {
        tree_sizes: vec![100],
        train_sizes: vec![10, 40],
        trees_per_size: 3,
        trainsets_per_tree: 5,
        ..D1Config::default()
    };
    let report = run_d1(&cfg)?;
    print!("{}", write_summary_csv(&report.cells)?);
    println!("trees resampled for balance: {}", report.resampled_trees);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
