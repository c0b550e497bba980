//! Brute-force minimization over vertex subsets.
//!
//! Cuts are symmetric under `A <-> V \ A`, so vertex 0 is pinned into A and
//! only `2^(|V|-1) - 1` candidates are scanned. The minimum is taken by
//! exact cross-multiplication, ties going to the lexicographically smallest A.
//! With several workers the mask range is split into chunks; the reduction is
//! the same total order, so the answer does not depend on the schedule.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::{lex_cmp_masks, vec_to_mask, Cut, SearchOptions, HARD_VERTEX_LIMIT};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;
use crate::rational::{cmp_fractions, Rational};

/// Best candidate so far: (mask, crossing count).
type Best = Option<(u64, u64)>;

struct CutProblem<'a> {
    num_vertices: usize,
    crossing: &'a (dyn Fn(u64) -> Option<u64> + Sync),
}

impl CutProblem<'_> {
    fn value_cmp(&self, (ma, ca): (u64, u64), (mb, cb): (u64, u64)) -> Ordering {
        let v = self.num_vertices as u64;
        let sa = u64::from(ma.count_ones());
        let sb = u64::from(mb.count_ones());
        cmp_fractions(v * ca, sa * (v - sa), v * cb, sb * (v - sb))
    }

    fn better(&self, a: Best, b: Best) -> Best {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => {
                match self.value_cmp(x, y).then_with(|| lex_cmp_masks(x.0, y.0)) {
                    Ordering::Greater => Some(y),
                    _ => Some(x),
                }
            }
        }
    }

    /// Pinned candidates are `1 | (r << 1)` for `r` in `0..2^(|V|-1) - 1`.
    fn candidate(r: u64) -> u64 {
        1 | (r << 1)
    }

    fn scan(&self, lo: u64, hi: u64) -> Best {
        let mut best: Best = None;
        for r in lo..hi {
            let mask = Self::candidate(r);
            if let Some(c) = (self.crossing)(mask) {
                best = self.better(best, Some((mask, c)));
            }
        }
        best
    }

    fn solve(&self, workers: usize) -> Best {
        let total = (1u64 << (self.num_vertices - 1)) - 1;
        if workers <= 1 || total < 1024 {
            return self.scan(0, total);
        }
        let chunks = (workers as u64 * 16).min(total);
        let step = total.div_ceil(chunks);
        let run = || {
            (0..chunks)
                .into_par_iter()
                .map(|c| self.scan(c * step, ((c + 1) * step).min(total)))
                .reduce(|| None, |a, b| self.better(a, b))
        };
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(run),
            Err(_) => self.scan(0, total),
        }
    }
}

fn check_budget(what: &'static str, size: usize, limit: usize) -> Result<()> {
    let limit = limit.min(HARD_VERTEX_LIMIT);
    if size > limit {
        return Err(Error::BudgetExceeded { what, size, limit });
    }
    Ok(())
}

/// Top-face masks of a pure connected complex within the vertex guard.
fn top_face_masks(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<(usize, Vec<u64>)> {
    let v = complex.validate();
    if !v.pure {
        return Err(complex.profile().unwrap_err());
    }
    if !v.connected {
        return Err(Error::Disconnected);
    }
    if v.dimension == 0 {
        return Err(Error::WrongDimension {
            expected: ">= 1",
            found: 0,
        });
    }
    check_budget("complex", complex.num_vertices(), opts.max_vertices)?;
    let masks = complex
        .k_faces(v.dimension)?
        .iter()
        .map(|f| f.mask())
        .collect();
    Ok((v.dimension, masks))
}

/// Whether the subgraph induced by `mask` is connected, given neighbour masks.
pub(crate) fn mask_connected(nbrs: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= nbrs[v] & mask;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

fn skeleton_masks(complex: &SimplicialComplex) -> Vec<u64> {
    complex
        .skeleton_neighbors()
        .iter()
        .map(|l| vec_to_mask(l))
        .collect()
}

fn crossing_faces(faces: &[u64], full: u64, mask: u64) -> u64 {
    let out = full & !mask;
    faces
        .iter()
        .filter(|&&f| f & mask != 0 && f & out != 0)
        .count() as u64
}

/// Exact H: the minimum over nonempty proper A of `|V| |F(A, V\A)| / (|A| |V\A|)`,
/// where F counts the top faces meeting both sides.
///
/// With `prune_connected` on a 2-complex, candidates whose induced 1-skeleton
/// is disconnected are skipped; minimizers are always connected there, so the
/// value and the chosen minimizer are unchanged.
pub fn exact_h(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<Cut> {
    let (n, faces) = top_face_masks(complex, opts)?;
    let nv = complex.num_vertices();
    if nv < 2 {
        return Err(Error::NotProperSubset);
    }
    let full = (1u64 << nv) - 1;
    let prune = opts.prune_connected && n == 2;
    let nbrs = if prune {
        skeleton_masks(complex)
    } else {
        Vec::new()
    };
    let crossing = |mask: u64| {
        if prune && !mask_connected(&nbrs, mask) {
            return None;
        }
        Some(crossing_faces(&faces, full, mask))
    };
    let problem = CutProblem {
        num_vertices: nv,
        crossing: &crossing,
    };
    let (mask, c) = problem.solve(opts.workers).ok_or(Error::NotProperSubset)?;
    Ok(Cut::from_mask(mask, nv, c as usize))
}

/// Every minimizing A (both A and its complement), in lexicographic order.
pub fn all_minimizers(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<Vec<Cut>> {
    let best = exact_h(
        complex,
        &SearchOptions {
            prune_connected: false,
            ..*opts
        },
    )?;
    let (_, faces) = top_face_masks(complex, opts)?;
    let nv = complex.num_vertices();
    let full = (1u64 << nv) - 1;
    let v = nv as u64;
    let mut masks = Vec::new();
    for r in 0..(1u64 << (nv - 1)) - 1 {
        let mask = CutProblem::candidate(r);
        let c = crossing_faces(&faces, full, mask);
        let s = u64::from(mask.count_ones());
        let value = Rational::from_u64(v * c, s * (v - s));
        if value == best.value {
            masks.push((mask, c));
            masks.push((full & !mask, c));
        }
    }
    masks.sort_by(|a, b| lex_cmp_masks(a.0, b.0));
    Ok(masks
        .into_iter()
        .map(|(m, c)| Cut::from_mask(m, nv, c as usize))
        .collect())
}

/// True iff every minimizing A of a 2-complex induces a connected 1-skeleton subgraph.
pub fn minimizers_connected(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<bool> {
    let n = complex.dimension();
    if n != 2 {
        return Err(Error::WrongDimension {
            expected: "2",
            found: n,
        });
    }
    let nbrs = skeleton_masks(complex);
    Ok(all_minimizers(complex, opts)?
        .iter()
        .all(|cut| mask_connected(&nbrs, vec_to_mask(&cut.side_a))))
}

fn graph_guard(graph: &AdjacencyMatrix, opts: &SearchOptions) -> Result<Vec<u64>> {
    check_budget("graph", graph.order(), opts.max_graph_vertices)?;
    if !graph.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(graph.neighbor_masks())
}

fn crossing_edges(nbrs: &[u64], full: u64, mask: u64) -> u64 {
    let out = full & !mask;
    let mut bits = mask;
    let mut total = 0u64;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        total += u64::from((nbrs[v] & out).count_ones());
    }
    total
}

/// Graph Cheeger constant h(G) = min `|V| |E(A, V\A)| / (|A| |V\A|)`.
pub fn exact_h_graph(graph: &AdjacencyMatrix, opts: &SearchOptions) -> Result<Cut> {
    let nbrs = graph_guard(graph, opts)?;
    let nv = graph.order();
    if nv < 2 {
        return Err(Error::NoAdmissibleCut(nv));
    }
    let full = (1u64 << nv) - 1;
    let crossing = |mask: u64| Some(crossing_edges(&nbrs, full, mask));
    let problem = CutProblem {
        num_vertices: nv,
        crossing: &crossing,
    };
    let (mask, c) = problem
        .solve(opts.workers)
        .ok_or(Error::NoAdmissibleCut(nv))?;
    Ok(Cut::from_mask(mask, nv, c as usize))
}

/// phi(G) = min over `0 < |A| < |V|/2` (strict) of `|E(A, V\A)| / |A|`.
pub fn phi_graph(graph: &AdjacencyMatrix, opts: &SearchOptions) -> Result<Rational> {
    let nbrs = graph_guard(graph, opts)?;
    let nv = graph.order();
    let full = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    let mut best: Option<(u64, u64)> = None;
    for mask in 1..=full {
        let size = u64::from(mask.count_ones());
        if 2 * size >= nv as u64 {
            continue;
        }
        let e = crossing_edges(&nbrs, full, mask);
        best = match best {
            Some((be, bs)) if cmp_fractions(be, bs, e, size) != Ordering::Greater => Some((be, bs)),
            _ => Some((e, size)),
        };
    }
    let (e, s) = best.ok_or(Error::NoAdmissibleCut(nv))?;
    Ok(Rational::from_u64(e, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(facets: &[Vec<usize>]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(facets).unwrap()
    }

    fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
        (0u32..1 << m)
            .filter(|b| b.count_ones() as usize == size)
            .map(|b| (0..m).filter(|i| b & (1 << i) != 0).collect())
            .collect()
    }

    fn bipyramid(m: usize) -> SimplicialComplex {
        x(&(0..m)
            .flat_map(|i| [vec![i, (i + 1) % m, m], vec![i, (i + 1) % m, m + 1]])
            .collect::<Vec<_>>())
    }

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn single_triangle() {
        let cut = exact_h(&x(&[vec![0, 1, 2]]), &opts()).unwrap();
        assert_eq!(cut.value, Rational::from_u64(3, 2));
        assert_eq!(cut.side_a, vec![0]);
    }

    #[test]
    fn frozen_values() {
        // Values from an independent set-based enumeration.
        assert_eq!(
            exact_h(&x(&subsets(4, 3)), &opts()).unwrap().value,
            Rational::integer(4)
        );
        let c = exact_h(&x(&subsets(5, 4)), &opts()).unwrap();
        assert_eq!(c.value, Rational::from_u64(25, 6));
        assert_eq!((c.side_a.len(), c.crossing), (2, 5));
        assert_eq!(
            exact_h(&x(&subsets(4, 4)), &opts()).unwrap().value,
            Rational::integer(1)
        );
        assert_eq!(
            exact_h(&x(&subsets(5, 5)), &opts()).unwrap().value,
            Rational::from_u64(5, 6)
        );
        assert_eq!(
            exact_h(&bipyramid(6), &opts()).unwrap().value,
            Rational::integer(4)
        );
        assert_eq!(
            exact_h(&bipyramid(3), &opts()).unwrap().value,
            Rational::from_u64(15, 4)
        );
        assert_eq!(
            exact_h(&x(&subsets(5, 3)), &opts()).unwrap().value,
            Rational::from_u64(15, 2)
        );
    }

    #[test]
    fn pruning_and_workers_do_not_change_the_answer() {
        let b = bipyramid(7);
        let plain = exact_h(&b, &opts()).unwrap();
        let pruned = exact_h(
            &b,
            &SearchOptions {
                prune_connected: true,
                ..opts()
            },
        )
        .unwrap();
        let parallel = exact_h(
            &b,
            &SearchOptions {
                workers: 4,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(plain, pruned);
        assert_eq!(plain, parallel);
    }

    #[test]
    fn guards() {
        let b = bipyramid(6);
        let err = exact_h(
            &b,
            &SearchOptions {
                max_vertices: 5,
                ..opts()
            },
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                what: "complex",
                size: 8,
                limit: 5
            }
        );
        assert_eq!(
            exact_h(&x(&[vec![0, 1, 2], vec![3, 4, 5]]), &opts()).unwrap_err(),
            Error::Disconnected
        );
        assert!(matches!(
            exact_h(&x(&[vec![0, 1, 2], vec![2, 3]]), &opts()),
            Err(Error::NotPure { .. })
        ));
    }

    #[test]
    fn minimizers() {
        let t = x(&[vec![0, 1, 2]]);
        let all = all_minimizers(&t, &opts()).unwrap();
        assert_eq!(all.len(), 6);
        assert!(minimizers_connected(&t, &opts()).unwrap());
        assert!(minimizers_connected(&x(&subsets(4, 3)), &opts()).unwrap());
        assert!(minimizers_connected(&bipyramid(6), &opts()).unwrap());
        assert!(minimizers_connected(&x(&subsets(5, 4)), &opts()).is_err());
    }

    #[test]
    fn graph_constants() {
        let k3 = AdjacencyMatrix::complete(3);
        assert_eq!(
            exact_h_graph(&k3, &opts()).unwrap().value,
            Rational::integer(3)
        );
        assert_eq!(phi_graph(&k3, &opts()).unwrap(), Rational::integer(2));
        let c4 = AdjacencyMatrix::cycle(4);
        assert_eq!(
            exact_h_graph(&c4, &opts()).unwrap().value,
            Rational::integer(2)
        );
        // Strict |A| < |V|/2 admits only singletons on four vertices.
        assert_eq!(phi_graph(&c4, &opts()).unwrap(), Rational::integer(2));
        let apart = AdjacencyMatrix::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            exact_h_graph(&apart, &opts()).unwrap_err(),
            Error::DisconnectedGraph
        );
        assert_eq!(
            phi_graph(&AdjacencyMatrix::complete(2), &opts()).unwrap_err(),
            Error::NoAdmissibleCut(2)
        );
    }

    #[test]
    fn connectivity_masks() {
        let nbrs = vec![0b010, 0b101, 0b010];
        assert!(mask_connected(&nbrs, 0b011));
        assert!(!mask_connected(&nbrs, 0b101));
        assert!(mask_connected(&nbrs, 0b111));
        assert_eq!(super::super::mask_to_vec(0b101), vec![0, 2]);
    }
}
