//! Chromatic number bounds: greedy colorings, a clique lower bound, and the
//! exact branch-and-bound solver.
//!
//!     cargo run --release --example chromatic_number

use ramsey_chromatic::chromatic::{chi_exact, clique_lower, greedy_upper, Order, DEFAULT_BUDGET};
use ramsey_chromatic::hunter::{kneser, mycielski_iterates, petersen};
use ramsey_chromatic::Graph;

fn main() -> ramsey_chromatic::Result<()> {
    let mut graphs: Vec<(String, Graph)> = vec![("C7".into(), Graph::cycle(7)), ("petersen".into(), petersen())];
    for (i, g) in mycielski_iterates(5).into_iter().enumerate().skip(1) {
        graphs.push((format!("mycielski-{}", i + 1), g));
    }
    graphs.push(("kneser(7,2)".into(), kneser(7, 2)?));

    println!("{:<14} {:>3} {:>4} {:>6} {:>6} {:>6}", "graph", "n", "m", "clique", "greedy", "chi");
    for (name, g) in &graphs {
        let greedy = greedy_upper(g, &Order::Dsatur)?;
        let exact = chi_exact(g, DEFAULT_BUDGET);
        let chi = if exact.exact { exact.upper.to_string() } else { format!("{}..{}", exact.lower, exact.upper) };
        println!("{:<14} {:>3} {:>4} {:>6} {:>6} {:>6}", name, g.n(), g.m(), clique_lower(g), greedy.upper, chi);
    }

    // the witness is an explicit proper coloring
    let r = chi_exact(&petersen(), DEFAULT_BUDGET);
    println!("petersen classes: {:?}", r.witness.classes());
    println!("{}", serde_json::to_string(&r).unwrap());
    Ok(())
}
