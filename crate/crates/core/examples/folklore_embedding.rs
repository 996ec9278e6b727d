//! Any tree on k vertices sits inside any graph of chromatic number at
//! least k: peel down to a subgraph of minimum degree k - 1 and embed
//! greedily.
//!
//!     cargo run --example folklore_embedding

use ramsey_chromatic::chromatic::{chi_exact, DEFAULT_BUDGET};
use ramsey_chromatic::hunter::{embed_tree_folklore, is_embedding, mycielski_iterates, peel_to_min_degree, AcyclicPattern};
use ramsey_chromatic::Graph;

fn main() -> ramsey_chromatic::Result<()> {
    let g = mycielski_iterates(4).pop().unwrap();
    let chi = chi_exact(&g, DEFAULT_BUDGET).lower;
    println!("host: n={} m={} chi>={chi}", g.n(), g.m());
    let core = peel_to_min_degree(&g, chi - 1).unwrap();
    println!("core of minimum degree {}: {} vertices", chi - 1, core.vertices.len());

    // a spider with legs of length 1, 1 and 2
    let spider = AcyclicPattern::new(Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])?)?;
    for h in [AcyclicPattern::path(5), AcyclicPattern::star(4), spider] {
        let map = embed_tree_folklore(&g, &h, chi)?;
        assert!(is_embedding(&g, h.graph(), &map));
        println!("{:?} -> {map:?}", h.graph().edges().map(|e| e.to_string()).collect::<Vec<_>>());
    }

    match embed_tree_folklore(&g, &AcyclicPattern::path(6), chi) {
        Err(e) => println!("path on 6 vertices: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
