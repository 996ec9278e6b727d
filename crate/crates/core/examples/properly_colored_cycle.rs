//! Filling the non-edges of a colored graph with an extra color 0 and
//! looking for a properly colored cycle (consecutive edges differ in
//! color) in the resulting complete graph.
//!
//!     cargo run --example properly_colored_cycle

use ramsey_chromatic::mono_matching::{extend_with_color_zero, find_properly_colored_cycle};
use ramsey_chromatic::{EdgeColoring, Graph};

fn main() -> ramsey_chromatic::Result<()> {
    // a 2-colored path: after extension the non-edges carry color 0
    let g = Graph::path(5);
    let ec = EdgeColoring::from_fn(&g, 2, |e| if e.u % 2 == 0 { 1 } else { 2 })?;
    let (k, extended) = extend_with_color_zero(&g, &ec)?;
    println!("K{} with {} edges of color 0", k.n(), extended.iter().filter(|&(_, c)| c == 0).count());
    match find_properly_colored_cycle(&k, &extended, 10)? {
        Some(cycle) => {
            let colors: Vec<usize> = (0..cycle.len())
                .map(|i| extended.color_of(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap())
                .collect();
            println!("properly colored cycle {cycle:?} with colors {colors:?}");
        }
        None => println!("no properly colored cycle"),
    }

    // a monochromatic triangle has none
    let k3 = Graph::complete(3);
    let mono = EdgeColoring::uniform(&k3, 1, 1);
    println!("monochromatic K3: {:?}", find_properly_colored_cycle(&k3, &mono, 10)?);
    Ok(())
}
