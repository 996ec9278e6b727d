//! Small Ramsey numbers by exhaustive search over edge colorings of K_n,
//! checked against the closed form for matchings.
//!
//!     cargo run --release --example ramsey_search

use ramsey_chromatic::hunter::{ramsey_bruteforce, AcyclicPattern, DEFAULT_GUARD_BITS};
use ramsey_chromatic::mono_matching::{ramsey_matching_number, MatchingTargets};

fn threshold(patterns: &[AcyclicPattern]) -> ramsey_chromatic::Result<usize> {
    let mut n = 1;
    while !ramsey_bruteforce(patterns, n, DEFAULT_GUARD_BITS)?.arrowing {
        n += 1;
    }
    Ok(n)
}

fn main() -> ramsey_chromatic::Result<()> {
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
        let formula = ramsey_matching_number(&MatchingTargets::new(vec![a, b])?);
        let searched = threshold(&[AcyclicPattern::matching(a), AcyclicPattern::matching(b)])?;
        println!("R({a}K2, {b}K2): formula {formula}, search {searched}");
    }
    for spec in ["star:2", "star:3", "path:4", "path:5"] {
        let h: AcyclicPattern = spec.parse()?;
        println!("R({spec}, {spec}) = {}", threshold(&[h.clone(), h])?);
    }

    // the avoiding coloring one step below the threshold
    let p4 = AcyclicPattern::path(4);
    let below = ramsey_bruteforce(&[p4.clone(), p4], 4, DEFAULT_GUARD_BITS)?;
    let ec = below.avoiding_coloring.unwrap();
    println!("P4-free 2-coloring of K4: {:?}", ec.iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>());
    Ok(())
}
