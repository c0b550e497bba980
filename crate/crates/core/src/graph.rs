//! Simple undirected graphs as validated 0/1 adjacency matrices.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Symmetric 0/1 matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    /// Validates and wraps a square row list.
    pub fn from_rows<T: Copy + Into<i64>>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare);
            }
            for (j, &x) in row.iter().enumerate() {
                match x.into() {
                    0 => entries.push(0),
                    1 => entries.push(1),
                    _ => return Err(Error::NotBinary { row: i, col: j }),
                }
            }
        }
        for i in 0..order {
            if entries[i * order + i] != 0 {
                return Err(Error::NonzeroDiagonal(i));
            }
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(AdjacencyMatrix { order, entries })
    }

    /// Graph on `0..order` with the given undirected edges. Loops and repeated edges are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut entries = vec![0u8; order * order];
        for &(a, b) in edges {
            if a >= order || b >= order {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) outside order {order}"
                )));
            }
            if a == b {
                return Err(Error::NonzeroDiagonal(a));
            }
            if entries[a * order + b] != 0 {
                return Err(Error::InvariantViolation(format!(
                    "repeated edge ({a}, {b})"
                )));
            }
            entries[a * order + b] = 1;
            entries[b * order + a] = 1;
        }
        Ok(AdjacencyMatrix { order, entries })
    }

    pub fn complete(order: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..order)
            .flat_map(|i| (i + 1..order).map(move |j| (i, j)))
            .collect();
        Self::from_edges(order, &edges).expect("complete graph edges are valid")
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Self::from_edges(order, &edges).expect("cycle edges are valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.order + j] != 0
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[u8]>::to_vec)
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| f64::from(x)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|i| self.neighbors(i).count()).collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&j| self.get(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().map(|&x| x as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|i| {
                (i + 1..self.order)
                    .filter(move |&j| self.get(i, j))
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn trace(&self) -> usize {
        (0..self.order).filter(|&i| self.get(i, i)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    /// True iff every vertex has degree `expected`.
    pub fn check_regularity(&self, expected: usize) -> bool {
        self.degrees().iter().all(|&d| d == expected)
    }

    /// The common degree, if the graph is regular and nonempty.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// Simultaneous row/column permutation: vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(Error::InvalidParameter(
                "permutation length differs from order".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Self::from_edges(self.order, &edges)
    }

    /// Neighbourhood bit masks. Only meaningful for order <= 64.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        (0..self.order)
            .map(|i| self.neighbors(i).fold(0u64, |m, j| m | (1u64 << j)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_errors() {
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![0u8, 1], vec![0, 0]]).unwrap_err(),
            Error::NotSymmetric { row: 0, col: 1 }
        );
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![0u8, 1]]).unwrap_err(),
            Error::NotSquare
        );
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![1u8]]).unwrap_err(),
            Error::NonzeroDiagonal(0)
        );
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![0i64, 2], vec![2, 0]]).unwrap_err(),
            Error::NotBinary { row: 0, col: 1 }
        );
    }

    #[test]
    fn regularity() {
        assert!(AdjacencyMatrix::complete(3).check_regularity(2));
        let p3 = AdjacencyMatrix::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!p3.check_regularity(1));
        assert_eq!(p3.regular_degree(), None);
        assert_eq!(AdjacencyMatrix::cycle(5).regular_degree(), Some(2));
    }

    #[test]
    fn connectivity_and_counts() {
        let two_triangles =
            AdjacencyMatrix::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.edge_count(), 6);
        assert!(AdjacencyMatrix::complete(4).is_connected());
        assert_eq!(AdjacencyMatrix::complete(4).edges().len(), 6);
    }
}
