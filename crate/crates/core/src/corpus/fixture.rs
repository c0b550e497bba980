use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;
use crate::label::VertexLabel;
use crate::rational::Rational;

const FIXTURES: &[(&str, &str)] = &[
    ("ex41", include_str!("../../data/ex41.json")),
    ("ex42-graph", include_str!("../../data/ex42-graph.json")),
    ("ex43-graph", include_str!("../../data/ex43-graph.json")),
    (
        "ex43-reconstruction",
        include_str!("../../data/ex43-reconstruction.json"),
    ),
];

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Printed in the published example.
    Published,
    /// Produced by an independent brute-force computation.
    Computed,
    /// Follows from a one-line count.
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Rational(Rational),
    Number(f64),
    Text(String),
}

impl Quantity {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Quantity::Rational(r) => Some(r.to_f64()),
            Quantity::Number(x) => Some(*x),
            Quantity::Text(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Quantity,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Complex(Vec<Vec<VertexLabel>>),
    Graph(AdjacencyMatrix),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Complex(_) => "complex",
            Payload::Graph(_) => "graph-matrix",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub payload: Payload,
    pub expected: BTreeMap<String, Expected>,
}

impl Fixture {
    pub fn complex(&self) -> Result<SimplicialComplex> {
        match &self.payload {
            Payload::Complex(facets) => SimplicialComplex::from_facets(facets.clone()),
            Payload::Graph(_) => Err(Error::InvalidParameter(format!(
                "{} is a graph fixture",
                self.name
            ))),
        }
    }

    pub fn matrix(&self) -> Result<AdjacencyMatrix> {
        match &self.payload {
            Payload::Graph(m) => Ok(m.clone()),
            Payload::Complex(_) => Err(Error::InvalidParameter(format!(
                "{} is a complex fixture",
                self.name
            ))),
        }
    }

    pub fn expected_f64(&self, key: &str) -> Option<f64> {
        self.expected.get(key).and_then(|e| e.value.as_f64())
    }

    pub fn expected_rational(&self, key: &str) -> Option<Rational> {
        match self.expected.get(key).map(|e| &e.value) {
            Some(Quantity::Rational(r)) => Some(r.clone()),
            _ => None,
        }
    }

    /// The fixture as a document in the format the command line reads.
    pub fn to_json(&self) -> String {
        let file = FixtureFile {
            name: Some(self.name.clone()),
            description: Some(self.description.clone()),
            facets: match &self.payload {
                Payload::Complex(f) => Some(f.clone()),
                Payload::Graph(_) => None,
            },
            adjacency: match &self.payload {
                Payload::Graph(m) => Some(
                    m.rows()
                        .into_iter()
                        .map(|r| r.into_iter().map(i64::from).collect())
                        .collect(),
                ),
                Payload::Complex(_) => None,
            },
            expected: self.expected.clone(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("fixture serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
struct FixtureFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<Vec<VertexLabel>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    adjacency: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    expected: BTreeMap<String, Expected>,
}

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn get_fixture(name: &str) -> Result<Fixture> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    let file: FixtureFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: format!("fixture {name}: {e}"),
    })?;
    let payload = match (file.facets, file.adjacency) {
        (Some(f), None) => Payload::Complex(f),
        (None, Some(rows)) => Payload::Graph(AdjacencyMatrix::from_rows(&rows)?),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "fixture {name} needs exactly one payload"
            )))
        }
    };
    Ok(Fixture {
        name: file.name.unwrap_or_else(|| name.to_string()),
        description: file.description.unwrap_or_default(),
        payload,
        expected: file.expected,
    })
}

/// Wraps a generated complex as an unannotated fixture.
pub(crate) fn generated(name: String, description: String, complex: &SimplicialComplex) -> Fixture {
    Fixture {
        name,
        description,
        payload: Payload::Complex(complex.facet_labels()),
        expected: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_load() {
        for name in fixture_names() {
            let f = get_fixture(name).unwrap();
            assert_eq!(f.name, name);
            assert!(!f.expected.is_empty());
        }
        assert_eq!(
            get_fixture("nope").unwrap_err(),
            Error::UnknownFixture("nope".into())
        );
    }

    #[test]
    fn ex41_payload_and_values() {
        let f = get_fixture("ex41").unwrap();
        let x = f.complex().unwrap();
        assert_eq!(x.num_vertices(), 3);
        assert_eq!(f.expected_rational("H"), Some(Rational::from_u64(3, 2)));
        assert_eq!(f.expected_f64("lambda"), Some(-1.0));
        assert_eq!(f.expected["H"].provenance, Provenance::Published);
    }

    #[test]
    fn matrices_are_symmetric_and_regular() {
        let m = get_fixture("ex42-graph").unwrap().matrix().unwrap();
        assert_eq!(m.order(), 10);
        assert!(m.check_regularity(6));
        let m = get_fixture("ex43-graph").unwrap().matrix().unwrap();
        assert_eq!(m.order(), 18);
        assert!(m.check_regularity(4));
        assert_eq!(m.trace(), 0);
    }

    #[test]
    fn json_round_trip() {
        for name in fixture_names() {
            let f = get_fixture(name).unwrap();
            let file: FixtureFile = serde_json::from_str(&f.to_json()).unwrap();
            assert_eq!(file.expected, f.expected);
        }
    }
}
