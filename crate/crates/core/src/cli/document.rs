//! Input documents: complexes as JSON or plain text, graphs as JSON matrices.
//!
//! JSON complex: `{"name": ..., "description": ..., "facets": [[label, ...], ...]}`.
//! Text complex: one facet per line, labels separated by whitespace, `#`
//! starts a comment, blank lines are skipped.
//! JSON graph: `{"adjacency": [[0, 1, ...], ...]}`, a symmetric 0/1 matrix.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::corpus::Expected;
use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;
use crate::label::VertexLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum InputFormat {
    #[default]
    Auto,
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub facets: Vec<Vec<VertexLabel>>,
    /// Present on corpus fixtures.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Expected>,
}

impl ComplexDocument {
    pub fn from_complex(complex: &SimplicialComplex, name: Option<String>) -> Self {
        ComplexDocument {
            name,
            description: None,
            facets: complex.facet_labels(),
            expected: BTreeMap::new(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.facets.clone())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Text form; metadata and expectations are not carried.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub adjacency: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Expected>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn utf8(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Syntax {
            line,
            column,
            message: "invalid UTF-8".into(),
        }
    })
}

fn detect(text: &str) -> InputFormat {
    match text.trim_start().chars().next() {
        Some('{') => InputFormat::Json,
        _ => InputFormat::Text,
    }
}

pub fn parse_complex_file(bytes: &[u8], format: InputFormat) -> Result<ComplexDocument> {
    let text = utf8(bytes)?;
    let format = match format {
        InputFormat::Auto => detect(text),
        f => f,
    };
    let doc = match format {
        InputFormat::Json => {
            let doc: ComplexDocument = serde_json::from_str(text).map_err(json_error)?;
            for (i, facet) in doc.facets.iter().enumerate() {
                check_facet(facet, i, None)?;
            }
            doc
        }
        _ => parse_text(text)?,
    };
    if doc.facets.is_empty() {
        return Err(Error::EmptyFacetList);
    }
    Ok(doc)
}

fn check_facet(facet: &[VertexLabel], index: usize, line: Option<usize>) -> Result<()> {
    if facet.is_empty() {
        return Err(Error::EmptyFacet { index });
    }
    let mut seen = BTreeSet::new();
    for l in facet {
        if !seen.insert(l) {
            return Err(Error::DuplicateVertex {
                facet: index,
                line,
                label: l.to_string(),
            });
        }
    }
    Ok(())
}

fn parse_text(text: &str) -> Result<ComplexDocument> {
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let facet: Vec<VertexLabel> = content.split_whitespace().map(VertexLabel::parse).collect();
        check_facet(&facet, facets.len(), Some(i + 1))?;
        facets.push(facet);
    }
    Ok(ComplexDocument {
        name: None,
        description: None,
        facets,
        expected: BTreeMap::new(),
    })
}

pub fn parse_graph_document(bytes: &[u8]) -> Result<GraphDocument> {
    serde_json::from_str(utf8(bytes)?).map_err(json_error)
}

pub fn parse_graph_file(bytes: &[u8]) -> Result<AdjacencyMatrix> {
    AdjacencyMatrix::from_rows(&parse_graph_document(bytes)?.adjacency)
}
