//! Build the embedded graph of the octahedron and print it as DOT.
//!
//! Run with `cargo run --example embedded_graph | dot -Tsvg > octahedron.svg`.

use simplicial_cheeger::corpus::gen_bipyramid;
use simplicial_cheeger::EmbeddedGraph;

fn main() -> Result<(), simplicial_cheeger::Error> {
    // The bipyramid over a square is the octahedron.
    let octahedron = gen_bipyramid(4)?;
    let graph = EmbeddedGraph::build(&octahedron)?;
    let degrees = graph.degrees();
    eprintln!(
        "{} vertices (edges of the octahedron), {} edges, degree {}",
        graph.order(),
        graph.edge_count(),
        degrees[0]
    );
    print!("{}", graph.export_dot());
    Ok(())
}
