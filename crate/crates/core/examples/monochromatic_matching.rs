//! Large monochromatic matchings in t-edge-colored graphs whose chromatic
//! number reaches the matching Ramsey number, found directly and through
//! the contraction of an optimal vertex coloring into a colored complete
//! graph.
//!
//!     cargo run --example monochromatic_matching

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_chromatic::chromatic::{chi_exact, DEFAULT_BUDGET};
use ramsey_chromatic::hunter::complete_multipartite;
use ramsey_chromatic::mono_matching::{
    find_mono_matching_checked, kiraly_route, ramsey_matching_number, verify_matching_certificate, MatchingTargets,
};
use ramsey_chromatic::EdgeColoring;

fn main() -> ramsey_chromatic::Result<()> {
    let targets: MatchingTargets = "3,2,2".parse()?;
    let r = ramsey_matching_number(&targets);
    println!("targets {:?}: R = {r}", targets.as_slice());

    let g = complete_multipartite(&[2, 1, 2, 1, 2, 1, 2, 1])?;
    let chi = chi_exact(&g, DEFAULT_BUDGET);
    println!("host: n={} m={} chi={}", g.n(), g.m(), chi.upper);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ec = EdgeColoring::from_fn(&g, targets.t(), |_| rng.gen_range(1..=targets.t()))?;

    let direct = find_mono_matching_checked(&g, &ec, &targets, chi.lower)?;
    verify_matching_certificate(&g, &ec, &direct).expect("direct certificate verifies");
    println!("direct: color {} matching {:?}", direct.color, direct.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>());

    let (reduced, lifted) = kiraly_route(&g, &ec, &targets, &chi.witness)?;
    verify_matching_certificate(&g, &ec, &lifted).expect("lifted certificate verifies");
    println!("contracted to K{} on classes {:?}", reduced.k, reduced.classes);
    for p in reduced.pairs.iter().take(4) {
        println!("  classes {}-{} get color {} from edge {}", p.a, p.b, p.color, p.provenance);
    }
    println!("lifted: color {} matching {:?}", lifted.color, lifted.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    Ok(())
}
