//! Looking for a graph with chromatic number R(H, H) and a 2-edge-coloring
//! without a monochromatic H, and reporting what each candidate search
//! concluded.
//!
//!     cargo run --release --example goodness_hunt

use ramsey_chromatic::hunter::{generate_candidates, hunt, AcyclicPattern, Candidate, CandidateKind, HuntLimits};

fn main() -> ramsey_chromatic::Result<()> {
    let mut candidates: Vec<Candidate> = Vec::new();
    for kind in [
        CandidateKind::Mycielski { count: 4 },
        CandidateKind::Cycles { lengths: vec![5, 7] },
        CandidateKind::CompleteMultipartite { parts: vec![2, 2, 2, 2, 2] },
        CandidateKind::Random { n: 12, p: 0.6, attempts: 8, min_chi: 5, chi_budget: 1_000_000, seed: 1 },
    ] {
        candidates.extend(generate_candidates(&kind)?);
    }

    let h = AcyclicPattern::path(4);
    let limits = HuntLimits { coloring_budget: 10_000_000, chi_budget: 10_000_000 };
    let report = hunt(&h, 2, 5, candidates, limits)?;
    for c in &report.candidates {
        println!("{:<24} n={:<3} chi={:<5} {:?} after {} colorings", c.id, c.n, c.chi.map_or("?".to_string(), |x| x.to_string()), c.status, c.colorings_examined);
    }
    match &report.counterexample {
        Some(x) => println!("counterexample on {}: {}", x.candidate, x.graph6),
        None => println!("no counterexample; conclusive: {}", report.conclusive()),
    }
    Ok(())
}
