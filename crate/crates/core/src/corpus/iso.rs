//! Backtracking isomorphism test for small graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;

pub const MAX_ISO_ORDER: usize = 20;

/// Per-vertex invariant: degree, triangles through the vertex, sorted neighbour degrees.
type Invariant = (u32, u32, Vec<u32>);

fn invariants(nbrs: &[u64]) -> Vec<Invariant> {
    nbrs.iter()
        .map(|&m| {
            let deg = m.count_ones();
            let mut tri = 0;
            let mut nd = Vec::with_capacity(deg as usize);
            let mut bits = m;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                tri += (nbrs[v] & m).count_ones();
                nd.push(nbrs[v].count_ones());
            }
            nd.sort_unstable();
            (deg, tri / 2, nd)
        })
        .collect()
}

pub fn is_isomorphic(g1: &AdjacencyMatrix, g2: &AdjacencyMatrix) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > MAX_ISO_ORDER {
            return Err(Error::BudgetExceeded {
                what: "isomorphism test",
                size: g.order(),
                limit: MAX_ISO_ORDER,
            });
        }
    }
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.order();
    let a = g1.neighbor_masks();
    let b = g2.neighbor_masks();
    let ia = invariants(&a);
    let ib = invariants(&b);

    let histogram = |inv: &[Invariant]| {
        let mut h: BTreeMap<Invariant, usize> = BTreeMap::new();
        for x in inv {
            *h.entry(x.clone()).or_default() += 1;
        }
        h
    };
    let class_sizes = histogram(&ia);
    if class_sizes != histogram(&ib) {
        return Ok(false);
    }

    // Visit order: prefer vertices with many already-placed neighbours, then rare classes.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| {
                let linked = (a[v] & placed).count_ones();
                (
                    linked,
                    std::cmp::Reverse(class_sizes[&ia[v]]),
                    a[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }

    let mut map = vec![usize::MAX; n];
    Ok(extend(0, &order, &a, &b, &ia, &ib, &mut map, 0))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    a: &[u64],
    b: &[u64],
    ia: &[Invariant],
    ib: &[Invariant],
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..b.len() {
        if used & (1 << w) != 0 || ia[u] != ib[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let in_a = a[u] & (1 << p) != 0;
            let in_b = b[w] & (1 << map[p]) != 0;
            in_a == in_b
        });
        if !consistent {
            continue;
        }
        map[u] = w;
        if extend(depth + 1, order, a, b, ia, ib, map, used | (1 << w)) {
            return true;
        }
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k3 = AdjacencyMatrix::complete(3);
        let tri = AdjacencyMatrix::from_edges(3, &[(2, 0), (1, 2), (0, 1)]).unwrap();
        assert!(is_isomorphic(&k3, &tri).unwrap());
        assert!(!is_isomorphic(&AdjacencyMatrix::complete(4), &AdjacencyMatrix::cycle(4)).unwrap());
        assert!(is_isomorphic(
            &AdjacencyMatrix::cycle(6),
            &AdjacencyMatrix::cycle(6)
                .permuted(&[3, 5, 0, 1, 4, 2])
                .unwrap()
        )
        .unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 versus two disjoint triangles: same degrees, different structure.
        let two = AdjacencyMatrix::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        assert!(!is_isomorphic(&AdjacencyMatrix::cycle(6), &two).unwrap());
    }

    #[test]
    fn guard() {
        let big = AdjacencyMatrix::cycle(21);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
