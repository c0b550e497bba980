//! The embedded graph of a pure n-complex: one vertex per (n-1)-face, and an
//! edge between two (n-1)-faces whenever some n-face contains both.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    n: usize,
    /// The set W, in lexicographic face order.
    vertices: Vec<Simplex>,
    names: Vec<String>,
    /// Edges `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
    /// The n-face containing both endpoints, aligned with `edges`.
    face_of_edge: Vec<Simplex>,
}

impl EmbeddedGraph {
    /// Builds the embedded graph. Each n-face contributes the C(n+1, 2) pairs
    /// of its boundary faces; a pair produced twice means the input is corrupt.
    pub fn build(complex: &SimplicialComplex) -> Result<Self> {
        if !complex.is_pure() {
            let min = complex.facets().iter().map(Simplex::dim).min().unwrap_or(0);
            return Err(Error::NotPure {
                min,
                max: complex.dimension(),
            });
        }
        let n = complex.dimension();
        if n == 0 {
            return Err(Error::WrongDimension {
                expected: ">= 1",
                found: 0,
            });
        }
        let vertices: Vec<Simplex> = complex.k_faces(n - 1)?.iter().cloned().collect();
        let index: BTreeMap<&Simplex, usize> =
            vertices.iter().enumerate().map(|(i, f)| (f, i)).collect();

        let mut owner: BTreeMap<(usize, usize), Simplex> = BTreeMap::new();
        for top in complex.k_faces(n)? {
            let bd: Vec<usize> = top.boundary().iter().map(|b| index[b]).collect();
            for (x, &a) in bd.iter().enumerate() {
                for &b in &bd[x + 1..] {
                    let key = (a.min(b), a.max(b));
                    if let Some(prev) = owner.insert(key, top.clone()) {
                        return Err(Error::InvariantViolation(format!(
                            "faces {} and {} lie in both {} and {}",
                            complex.face_name(&vertices[key.0]),
                            complex.face_name(&vertices[key.1]),
                            complex.face_name(&prev),
                            complex.face_name(top),
                        )));
                    }
                }
            }
        }
        let names = vertices.iter().map(|f| complex.face_name(f)).collect();
        let (edges, face_of_edge) = owner.into_iter().unzip();
        Ok(EmbeddedGraph {
            n,
            vertices,
            names,
            edges,
            face_of_edge,
        })
    }

    /// Dimension of the source complex.
    pub fn source_dimension(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Simplex] {
        &self.vertices
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, face: &Simplex) -> Option<usize> {
        self.vertices.binary_search(face).ok()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The n-face that contains both endpoints of the edge.
    pub fn face_of_edge(&self, a: usize, b: usize) -> Option<&Simplex> {
        let key = (a.min(b), a.max(b));
        self.edges
            .binary_search(&key)
            .ok()
            .map(|i| &self.face_of_edge[i])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        AdjacencyMatrix::from_edges(self.order(), &self.edges).expect("embedded edges are simple")
    }

    pub fn check_regularity(&self, expected_degree: usize) -> bool {
        self.degrees().iter().all(|&d| d == expected_degree)
    }

    /// DOT text: `graph {`, one `a -- b;` line per edge in lexicographic order, `}`.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "\"{}\" -- \"{}\";", self.names[a], self.names[b]);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(facets: &[Vec<usize>]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(facets).unwrap()
    }

    fn all_subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
        (0u32..1 << m)
            .filter(|b| b.count_ones() as usize == size)
            .map(|b| (0..m).filter(|i| b & (1 << i) != 0).collect())
            .collect()
    }

    #[test]
    fn single_triangle_gives_k3() {
        let g = EmbeddedGraph::build(&x(&[vec![0, 1, 2]])).unwrap();
        assert_eq!(g.vertex_names(), ["0,1", "0,2", "1,2"]);
        assert_eq!(
            g.adjacency_matrix().rows(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        assert_eq!(
            g.face_of_edge(2, 0).map(|f| f.vertices().to_vec()),
            Some(vec![0, 1, 2])
        );
    }

    #[test]
    fn tetrahedron_boundary_gives_octahedron() {
        let g = EmbeddedGraph::build(&x(&all_subsets(4, 3))).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 12));
        assert!(g.check_regularity(4));
        // Each edge is disjoint from exactly one other: the non-neighbour in the octahedron.
        let m = g.adjacency_matrix();
        for i in 0..6 {
            assert_eq!(m.neighbors(i).count(), 4);
        }
    }

    #[test]
    fn boundary_of_four_simplex_gives_triangular_graph() {
        let g = EmbeddedGraph::build(&x(&all_subsets(5, 4))).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 30));
        assert!(g.check_regularity(6));
        for (a, b) in g.edges() {
            let shared = g.vertices()[*a]
                .vertices()
                .iter()
                .filter(|v| g.vertices()[*b].contains(**v))
                .count();
            assert_eq!(shared, 2);
        }
    }

    #[test]
    fn bowtie_embedded_graph_is_disconnected() {
        let g = EmbeddedGraph::build(&x(&[vec![0, 1, 2], vec![2, 3, 4]])).unwrap();
        assert!(!g.adjacency_matrix().is_connected());
    }

    #[test]
    fn non_pure_is_rejected() {
        let err = EmbeddedGraph::build(&x(&[vec![0, 1, 2], vec![3, 4]])).unwrap_err();
        assert!(matches!(err, Error::NotPure { .. }));
    }

    #[test]
    fn dot_layout() {
        let g = EmbeddedGraph::build(&x(&[vec![0, 1, 2]])).unwrap();
        assert_eq!(
            g.export_dot(),
            "graph {\n\"0,1\" -- \"0,2\";\n\"0,1\" -- \"1,2\";\n\"0,2\" -- \"1,2\";\n}\n"
        );
        let g = EmbeddedGraph::build(&x(&all_subsets(4, 3))).unwrap();
        assert_eq!(
            g.export_dot()
                .lines()
                .filter(|l| l.contains(" -- "))
                .count(),
            12
        );
    }
}
