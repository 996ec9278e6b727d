//! Reading and writing graphs: edge lists, DIMACS and graph6.
//!
//!     cargo run --example graph_formats

use ramsey_chromatic::graph::io::{decode_graph6, encode_graph6, parse_graph, serialize_graph, Format};
use ramsey_chromatic::hunter::petersen;

fn main() -> ramsey_chromatic::Result<()> {
    // a leading line with a single number fixes the vertex count
    let edge_list = "6\n0 1\n1 2 # comments are fine\n2 0\n";
    let g = parse_graph(edge_list.as_bytes(), Format::EdgeList)?;
    println!("edge list: n={} m={} (vertices 3..5 isolated)", g.n(), g.m());

    let dimacs = "c a 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
    let c4 = parse_graph(dimacs.as_bytes(), Format::Dimacs)?;
    println!("dimacs: {:?}", c4.edges().map(|e| e.to_string()).collect::<Vec<_>>());

    let p = petersen();
    let g6 = encode_graph6(&p);
    println!("petersen as graph6: {g6}");
    assert_eq!(decode_graph6(&g6).unwrap(), p);

    println!("complement of C4 as DIMACS:\n{}", serialize_graph(&c4.complement(), Format::Dimacs));

    match parse_graph(b"0 1\n1 1\n", Format::EdgeList) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
