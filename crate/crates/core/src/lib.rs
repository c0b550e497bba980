//! Cheeger-type constants of pure simplicial complexes.
//!
//! For a pure n-dimensional complex X with vertex set V, `H(X)` is the
//! minimum over nonempty proper `A ⊂ V` of
//! `|V| * |F(A, V \ A)| / (|A| * |V \ A|)`, where `F(A, V \ A)` is the set of
//! n-faces meeting both sides. The crate computes it exactly, builds the
//! embedded graph on the (n-1)-faces, and checks spectral lower bounds for
//! `H(X)` from the second adjacency eigenvalue of that graph.
//!
//! ```
//! use simplicial_cheeger::{exact_h, SearchOptions, SimplicialComplex};
//!
//! let triangle = SimplicialComplex::from_facets([[0u64, 1, 2]]).unwrap();
//! let cut = exact_h(&triangle, &SearchOptions::default()).unwrap();
//! assert_eq!(cut.value.to_string(), "3/2");
//! ```

pub mod cheeger;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod embedded;
pub mod error;
pub mod graph;
pub mod label;
pub mod rational;
pub mod spectral;

pub use cheeger::{
    all_minimizers, bound_2d, bound_nd, claim41_check, exact_h, exact_h_graph, full_report,
    graph_bounds, phi_graph, prt_h, theorem_bound, witness_b, BoundReport, Cut, ReportOptions,
    SearchOptions, Verdict,
};
pub use complex::{ComplexProfile, Simplex, SimplicialComplex};
pub use embedded::EmbeddedGraph;
pub use error::{Error, Result};
pub use graph::AdjacencyMatrix;
pub use label::VertexLabel;
pub use rational::Rational;
pub use spectral::{eigenvalues_symmetric, second_largest, Spectrum};
