//! Identify a bundled adjacency matrix as the embedded graph of a complex.

use simplicial_cheeger::corpus::{
    gen_bipyramid, gen_capped_antiprism, gen_complete_skeleton, get_fixture, is_isomorphic,
};
use simplicial_cheeger::{EmbeddedGraph, SimplicialComplex};

fn main() -> Result<(), simplicial_cheeger::Error> {
    let candidates: Vec<(&str, SimplicialComplex)> = vec![
        ("bipyramid-6", gen_bipyramid(6)?),
        ("capped-antiprism-3", gen_capped_antiprism(3)?),
        ("complete-skeleton-5", gen_complete_skeleton(5)?),
    ];
    for fixture in ["ex42-graph", "ex43-graph"] {
        let m = get_fixture(fixture)?.matrix()?;
        for (name, x) in &candidates {
            let g = EmbeddedGraph::build(x)?.adjacency_matrix();
            println!("{fixture} ~ embedded({name}): {}", is_isomorphic(&m, &g)?);
        }
    }
    Ok(())
}
