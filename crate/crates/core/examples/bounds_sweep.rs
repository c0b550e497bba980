//! Compare the spectral lower bound with exact H across generated families.

use simplicial_cheeger::cheeger::theorem_bound;
use simplicial_cheeger::corpus::resolve;
use simplicial_cheeger::spectral::DEFAULT_TOL;
use simplicial_cheeger::{eigenvalues_symmetric, exact_h, EmbeddedGraph, SearchOptions};

fn main() -> Result<(), simplicial_cheeger::Error> {
    let names = [
        "simplex-closure-2",
        "simplex-closure-3",
        "simplex-closure-4",
        "boundary-simplex-3",
        "boundary-simplex-4",
        "boundary-simplex-5",
        "bipyramid-3",
        "bipyramid-5",
        "bipyramid-8",
        "complete-skeleton-6",
        "capped-antiprism-4",
    ];
    println!(
        "{:<22} {:>3} {:>10} {:>10} {:>10}",
        "complex", "n", "lambda", "bound", "H"
    );
    for name in names {
        let x = resolve(name)?.complex()?;
        let profile = x.profile()?;
        let graph = EmbeddedGraph::build(&x)?.adjacency_matrix();
        let lambda = eigenvalues_symmetric(&graph, DEFAULT_TOL)?.second_largest()?;
        let bound = theorem_bound(&profile, lambda)?;
        let h = exact_h(&x, &SearchOptions::default())?.value;
        println!(
            "{name:<22} {:>3} {lambda:>10.4} {bound:>10.4} {:>10}",
            profile.n,
            h.to_string()
        );
    }
    Ok(())
}
