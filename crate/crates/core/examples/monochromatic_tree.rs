//! Every 2-edge-coloring of a k-chromatic graph has a monochromatic tree on
//! at least k vertices. The certificate comes with its witness: the red and
//! blue components form a bipartite multigraph whose proper edge coloring
//! is a proper vertex coloring of the graph with Δ colors.
//!
//!     cargo run --example monochromatic_tree

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_chromatic::chromatic::{chi_exact, verify_proper, DEFAULT_BUDGET};
use ramsey_chromatic::hunter::grotzsch;
use ramsey_chromatic::mono_tree::{
    build_dual, edge_color_dual, mono_tree_certificate, vertex_coloring_from_dual, verify_tree_certificate,
};
use ramsey_chromatic::EdgeColoring;

fn main() -> ramsey_chromatic::Result<()> {
    let g = grotzsch();
    let chi = chi_exact(&g, DEFAULT_BUDGET);
    println!("Grötzsch graph: n={} m={} chi={}", g.n(), g.m(), chi.upper);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ec = EdgeColoring::from_fn(&g, 2, |_| rng.gen_range(1..=2))?;

    let dual = build_dual(&g, &ec)?;
    println!("{} red and {} blue components, Δ = {}", dual.left.len(), dual.right.len(), dual.max_degree());
    let links = edge_color_dual(&dual);
    let vc = vertex_coloring_from_dual(&g, &dual, &links)?;
    println!("derived vertex coloring with {} classes, proper: {}", vc.k(), verify_proper(&g, &vc)?);

    let cert = mono_tree_certificate(&g, &ec, chi.lower)?;
    let color = if cert.color == 1 { "red" } else { "blue" };
    println!("{color} tree on {} vertices: {:?}", cert.vertices.len(), cert.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    verify_tree_certificate(&g, &ec, &cert).expect("certificate verifies");
    println!("{}", serde_json::to_string(&cert).unwrap());
    Ok(())
}
