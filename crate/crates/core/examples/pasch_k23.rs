// The Pasch axiom, K2,3 minors and the Kakutani property on a few graphs.

use closure_sep::closure::brute_force_kakutani;
use closure_sep::graph::{k23_minor_free, pasch_check, GeodesicClosure, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("path P6", Graph::path(6)),
        ("cycle C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
        ("cycle C6", Graph::cycle(6)),
    ];
    println!("{:<9} {:>6} {:>9} {:>9}", "graph", "pasch", "k23-free", "kakutani");
    for (name, g) in &graphs {
        let pasch = pasch_check(g)?;
        let minor_free = k23_minor_free(g)?;
        let kakutani = brute_force_kakutani(&GeodesicClosure::new(g))?.is_kakutani();
        println!("{name:<9} {:>6} {minor_free:>9} {kakutani:>9}", pasch.holds());
        assert_eq!(pasch.holds(), kakutani);
        if minor_free {
            assert!(pasch.holds());
        }
        if let Some(w) = pasch.witness() {
            println!("          witness u={} v={} w={} x={} y={}", w.u, w.v, w.w, w.x, w.y);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
