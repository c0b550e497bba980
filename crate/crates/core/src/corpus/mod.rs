//! Fixtures for the published examples, parametric generators for complexes
//! with constant (n-1)-face degree, and a small-graph isomorphism check.

mod fixture;
mod generators;
mod iso;

pub use fixture::{fixture_names, get_fixture, Expected, Fixture, Payload, Provenance, Quantity};
pub use generators::{
    gen_bipyramid, gen_boundary_simplex, gen_capped_antiprism, gen_complete_skeleton,
    gen_simplex_closure, generator_families, resolve_generator,
};
pub use iso::{is_isomorphic, MAX_ISO_ORDER};

use crate::error::{Error, Result};

/// One line of `corpus list`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: &'static str,
    pub description: String,
}

pub fn list() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = fixture_names()
        .iter()
        .map(|name| {
            let f = get_fixture(name).expect("bundled fixture parses");
            CorpusEntry {
                name: f.name.clone(),
                kind: f.payload.kind(),
                description: f.description.clone(),
            }
        })
        .collect();
    out.extend(
        generator_families()
            .iter()
            .map(|(pattern, description)| CorpusEntry {
                name: (*pattern).to_string(),
                kind: "generator",
                description: (*description).to_string(),
            }),
    );
    out
}

/// A fixture by name, or a generated complex such as `bipyramid-6`.
pub fn resolve(name: &str) -> Result<Fixture> {
    match get_fixture(name) {
        Ok(f) => Ok(f),
        Err(Error::UnknownFixture(_)) => resolve_generator(name),
        Err(e) => Err(e),
    }
}
