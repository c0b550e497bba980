//! Adjacency spectra of embedded graphs, and of a matrix given directly.

use simplicial_cheeger::corpus::{gen_boundary_simplex, gen_capped_antiprism, get_fixture};
use simplicial_cheeger::spectral::DEFAULT_TOL;
use simplicial_cheeger::{
    eigenvalues_symmetric, AdjacencyMatrix, EmbeddedGraph, SimplicialComplex,
};

fn show(name: &str, m: &AdjacencyMatrix) -> Result<(), simplicial_cheeger::Error> {
    let s = eigenvalues_symmetric(m, DEFAULT_TOL)?;
    let eig: Vec<String> = s.eigenvalues.iter().map(|x| format!("{x:.4}")).collect();
    println!(
        "{name}: lambda = {:.6}, residual <= {:.1e}",
        s.second_largest()?,
        s.residual_bound
    );
    println!("  [{}]", eig.join(", "));
    Ok(())
}

fn embedded(x: &SimplicialComplex) -> Result<AdjacencyMatrix, simplicial_cheeger::Error> {
    Ok(EmbeddedGraph::build(x)?.adjacency_matrix())
}

fn main() -> Result<(), simplicial_cheeger::Error> {
    show("K5", &AdjacencyMatrix::complete(5))?;
    show(
        "tetrahedron boundary",
        &embedded(&gen_boundary_simplex(3)?)?,
    )?;
    show(
        "capped antiprism (m = 3)",
        &embedded(&gen_capped_antiprism(3)?)?,
    )?;
    show(
        "bundled 4-regular matrix",
        &get_fixture("ex43-graph")?.matrix()?,
    )?;
    Ok(())
}
