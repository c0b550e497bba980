//! Finite abstract simplicial complexes.
//!
//! A complex is stored as the downward closure of its facets. Vertices are
//! reindexed densely (`0..|V|`) in label order, and every face is a sorted
//! sequence of those indices, so iteration over faces is deterministic and
//! lexicographic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// Closure enumerates all subsets of each facet; facets above this size are rejected.
pub const MAX_FACET_VERTICES: usize = 20;

/// A face, as a strictly increasing list of dense vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex(Vec<usize>);

impl From<Vec<usize>> for Simplex {
    fn from(vertices: Vec<usize>) -> Self {
        Simplex::new(vertices)
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl Simplex {
    /// Builds a simplex from arbitrary indices (sorted and deduplicated).
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|vertices| - 1`. Panics on the empty simplex, which never occurs in a complex.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Bit mask of the vertex set; only valid for complexes with at most 64 vertices.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    /// The faces obtained by deleting one vertex, in lexicographic order.
    pub fn boundary(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, v)| *v)
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }
}

/// Result of [`SimplicialComplex::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub pure: bool,
    pub dimension: usize,
    pub connected: bool,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.pure && self.connected
    }
}

/// Degree statistics consumed by the bound formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexProfile {
    pub n: usize,
    pub num_vertices: usize,
    /// `|W|`, the number of (n-1)-faces.
    pub num_codim1: usize,
    /// Common number of n-faces on every (n-1)-face, if it is constant.
    pub degree_d: Option<usize>,
    /// Minimum over vertices of the number of (n-1)-faces containing the vertex.
    pub delta_min: usize,
}

impl ComplexProfile {
    /// `floor((n + 1) / 2)`.
    pub fn k(&self) -> usize {
        self.n.div_ceil(2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<VertexLabel>,
    faces_by_dim: Vec<BTreeSet<Simplex>>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Downward closure of the given facets. Input faces contained in other
    /// input faces are absorbed; repeated vertices inside one facet are merged.
    pub fn from_facets<I, F, L>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = L>,
        L: Into<VertexLabel>,
    {
        let raw: Vec<BTreeSet<VertexLabel>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(Into::into).collect())
            .collect();
        if raw.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        for (index, f) in raw.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFacet { index });
            }
            if f.len() > MAX_FACET_VERTICES {
                return Err(Error::FacetTooLarge {
                    index,
                    size: f.len(),
                    limit: MAX_FACET_VERTICES,
                });
            }
        }

        let labels: Vec<VertexLabel> = raw
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<&VertexLabel, usize> =
            labels.iter().enumerate().map(|(i, l)| (l, i)).collect();

        let mut input: Vec<Simplex> = raw
            .iter()
            .map(|f| Simplex(f.iter().map(|l| index[l]).collect()))
            .collect();
        input.sort();
        input.dedup();

        let max_len = input.iter().map(Simplex::len).max().unwrap_or(0);
        let mut faces_by_dim = vec![BTreeSet::new(); max_len];
        for f in &input {
            let verts = f.vertices();
            for bits in 1u32..(1u32 << verts.len()) {
                let sub: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, v)| *v)
                    .collect();
                faces_by_dim[sub.len() - 1].insert(Simplex(sub));
            }
        }

        let facets = maximal_faces(&input);
        Ok(SimplicialComplex {
            labels,
            faces_by_dim,
            facets,
        })
    }

    /// Builds a complex whose vertex labels are the given indices.
    pub fn from_index_facets(facets: &[Vec<usize>]) -> Result<Self> {
        Self::from_facets(
            facets
                .iter()
                .map(|f| f.iter().map(|&v| VertexLabel::Num(v as u64))),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    /// Dense index of a label.
    pub fn vertex_index(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Resolves labels to a sorted, deduplicated index set.
    pub fn subset<L: Clone + Into<VertexLabel>>(&self, labels: &[L]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            let l: VertexLabel = l.clone().into();
            match self.vertex_index(&l) {
                Some(i) => out.push(i),
                None => return Err(Error::UnknownVertex(l.to_string())),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Highest face dimension.
    pub fn dimension(&self) -> usize {
        self.faces_by_dim.len() - 1
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn faces_by_dim(&self) -> &[BTreeSet<Simplex>] {
        &self.faces_by_dim
    }

    pub fn num_faces(&self, k: usize) -> usize {
        self.faces_by_dim.get(k).map_or(0, BTreeSet::len)
    }

    pub fn contains_face(&self, face: &Simplex) -> bool {
        !face.is_empty()
            && self
                .faces_by_dim
                .get(face.dim())
                .is_some_and(|s| s.contains(face))
    }

    /// The k-dimensional faces.
    pub fn k_faces(&self, k: usize) -> Result<&BTreeSet<Simplex>> {
        self.faces_by_dim.get(k).ok_or(Error::DimensionOutOfRange {
            k,
            n: self.dimension(),
        })
    }

    pub fn is_pure(&self) -> bool {
        let n = self.dimension();
        self.facets.iter().all(|f| f.dim() == n)
    }

    /// Adjacency lists of the 1-skeleton.
    pub fn skeleton_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        if let Some(edges) = self.faces_by_dim.get(1) {
            for e in edges {
                let (a, b) = (e.0[0], e.0[1]);
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.num_vertices()).collect();
        induced_connected(&self.skeleton_neighbors(), &all)
    }

    pub fn validate(&self) -> Validation {
        Validation {
            pure: self.is_pure(),
            dimension: self.dimension(),
            connected: self.is_connected(),
        }
    }

    fn require_valid(&self) -> Result<usize> {
        if !self.is_pure() {
            let dims = self.facets.iter().map(Simplex::dim);
            let min = dims.clone().min().unwrap_or(0);
            return Err(Error::NotPure {
                min,
                max: self.dimension(),
            });
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.dimension())
    }

    /// Number of n-faces containing each (n-1)-face, in canonical face order.
    pub fn codim1_degrees(&self) -> Vec<usize> {
        let n = self.dimension();
        if n == 0 {
            return Vec::new();
        }
        let mut deg: BTreeMap<&Simplex, usize> =
            self.faces_by_dim[n - 1].iter().map(|f| (f, 0)).collect();
        for top in &self.faces_by_dim[n] {
            for b in top.boundary() {
                if let Some(c) = deg.get_mut(&b) {
                    *c += 1;
                }
            }
        }
        deg.into_values().collect()
    }

    /// `delta(v)`: the number of (n-1)-faces containing each vertex.
    pub fn vertex_deltas(&self) -> Vec<usize> {
        let n = self.dimension();
        let mut delta = vec![0; self.num_vertices()];
        if n == 0 {
            return delta;
        }
        for f in &self.faces_by_dim[n - 1] {
            for &v in f.vertices() {
                delta[v] += 1;
            }
        }
        delta
    }

    /// Degree statistics. Requires a pure, connected complex of dimension at least 1.
    pub fn profile(&self) -> Result<ComplexProfile> {
        let n = self.require_valid()?;
        if n == 0 {
            return Err(Error::WrongDimension {
                expected: ">= 1",
                found: 0,
            });
        }
        let degrees = self.codim1_degrees();
        let degree_d = match degrees.first() {
            Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
            _ => None,
        };
        let delta_min = self.vertex_deltas().into_iter().min().unwrap_or(0);
        Ok(ComplexProfile {
            n,
            num_vertices: self.num_vertices(),
            num_codim1: self.faces_by_dim[n - 1].len(),
            degree_d,
            delta_min,
        })
    }

    /// Whether the 1-skeleton subgraph induced by `subset` (dense indices) is connected.
    pub fn induced_subgraph_connected(&self, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&bad) = subset.iter().find(|&&v| v >= self.num_vertices()) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        Ok(induced_connected(&self.skeleton_neighbors(), subset))
    }

    /// Facets as label lists, in canonical order.
    pub fn facet_labels(&self) -> Vec<Vec<VertexLabel>> {
        self.facets
            .iter()
            .map(|f| {
                f.vertices()
                    .iter()
                    .map(|&v| self.labels[v].clone())
                    .collect()
            })
            .collect()
    }

    /// The same complex with every label passed through `map` (which should be injective).
    pub fn relabel<F: Fn(&VertexLabel) -> VertexLabel>(&self, map: F) -> Result<Self> {
        let facets: Vec<Vec<VertexLabel>> = self
            .facet_labels()
            .into_iter()
            .map(|f| f.iter().map(&map).collect())
            .collect();
        let out = Self::from_facets(facets)?;
        if out.num_vertices() != self.num_vertices() {
            return Err(Error::InvalidParameter(
                "relabeling is not injective".into(),
            ));
        }
        Ok(out)
    }

    /// Human-readable name of a face, e.g. `0,1,2`.
    pub fn face_name(&self, face: &Simplex) -> String {
        face.vertices()
            .iter()
            .map(|&v| self.labels[v].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Label set of a dense-index subset, formatted as `{a,b}`.
    pub fn subset_name(&self, subset: &[usize]) -> String {
        format!("{{{}}}", self.face_name(&Simplex::new(subset.to_vec())))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self
            .faces_by_dim
            .iter()
            .map(|s| s.len().to_string())
            .collect();
        write!(
            f,
            "complex(dim {}, f-vector [{}])",
            self.dimension(),
            counts.join(", ")
        )
    }
}

fn maximal_faces(input: &[Simplex]) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = input
        .iter()
        .filter(|f| !input.iter().any(|g| g.len() > f.len() && f.is_subset_of(g)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// BFS connectivity of the subgraph induced by `subset` in a graph given by adjacency lists.
pub(crate) fn induced_connected(adj: &[Vec<usize>], subset: &[usize]) -> bool {
    if subset.is_empty() {
        return true;
    }
    let mut inside = vec![false; adj.len()];
    for &v in subset {
        inside[v] = true;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([subset[0]]);
    seen[subset[0]] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if inside[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == subset.iter().collect::<BTreeSet<_>>().len()
}
