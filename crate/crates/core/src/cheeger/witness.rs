//! Witness sets B in the embedded graph for a vertex cut A of the complex.
//!
//! B holds every (n-1)-face lying inside A, plus the lexicographically
//! smallest (n-1)-face that meets both A and V \ A. The three inequalities
//! tying the edge cut `(B, W \ B)` to the face cut `(A, V \ A)` are evaluated
//! exactly, with both sides reported.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::embedded::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl InequalityCheck {
    fn le(name: &str, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs <= rhs;
        InequalityCheck {
            name: name.to_string(),
            lhs,
            rhs,
            holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessB {
    pub side_a: Vec<usize>,
    pub side_b: Vec<Simplex>,
    /// Edges of the embedded graph between B and W \ B.
    pub boundary_edges: usize,
    /// Top faces meeting both A and V \ A.
    pub crossing_faces: usize,
    pub checks: Vec<InequalityCheck>,
}

impl WitnessB {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

struct Parts {
    n: usize,
    delta_min: u64,
    side_a: Vec<usize>,
    in_a: Vec<bool>,
    graph: EmbeddedGraph,
    in_b: Vec<bool>,
    boundary_edges: u64,
    crossing_faces: u64,
}

impl Parts {
    fn b_size(&self) -> u64 {
        self.in_b.iter().filter(|&&b| b).count() as u64
    }

    fn side_b(&self) -> Vec<Simplex> {
        self.graph
            .vertices()
            .iter()
            .zip(&self.in_b)
            .filter(|(_, &b)| b)
            .map(|(f, _)| f.clone())
            .collect()
    }
}

fn build(complex: &SimplicialComplex, side_a: &[usize]) -> Result<Parts> {
    let profile = complex.profile()?;
    let nv = complex.num_vertices();
    let side_a: Vec<usize> = side_a
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if side_a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&bad) = side_a.iter().find(|&&v| v >= nv) {
        return Err(Error::UnknownVertex(bad.to_string()));
    }
    if side_a.len() == nv {
        return Err(Error::NotProperSubset);
    }
    let mut in_a = vec![false; nv];
    for &v in &side_a {
        in_a[v] = true;
    }
    let meets_both = |f: &Simplex| {
        let inside = f.vertices().iter().filter(|&&v| in_a[v]).count();
        inside > 0 && inside < f.len()
    };

    let graph = EmbeddedGraph::build(complex)?;
    let mut in_b: Vec<bool> = graph
        .vertices()
        .iter()
        .map(|f| f.vertices().iter().all(|&v| in_a[v]))
        .collect();
    let chosen = graph
        .vertices()
        .iter()
        .position(meets_both)
        .ok_or(Error::NoCrossingFace)?;
    in_b[chosen] = true;

    let boundary_edges = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| in_b[a] != in_b[b])
        .count() as u64;
    let crossing_faces = complex
        .k_faces(profile.n)?
        .iter()
        .filter(|f| meets_both(f))
        .count() as u64;
    Ok(Parts {
        n: profile.n,
        delta_min: profile.delta_min as u64,
        side_a,
        in_a,
        graph,
        in_b,
        boundary_edges,
        crossing_faces,
    })
}

fn int(x: u64) -> Rational {
    Rational::from_u64(x, 1)
}

/// Witness for a 2-complex. Checks `|E(B,W\B)|/2 <= |F(A,V\A)|`, `|A| <= |B|`
/// and `|V\A| <= 2|W\B| / delta_min`.
pub fn witness_b_2d(complex: &SimplicialComplex, side_a: &[usize]) -> Result<WitnessB> {
    let n = complex.dimension();
    if n != 2 {
        return Err(Error::WrongDimension {
            expected: "2",
            found: n,
        });
    }
    let p = build(complex, side_a)?;
    let w = p.graph.order() as u64;
    let b = p.b_size();
    let outside = p.in_a.iter().filter(|&&x| !x).count() as u64;
    let checks = vec![
        InequalityCheck::le(
            "|E(B,W\\B)|/2 <= |F(A,V\\A)|",
            Rational::from_u64(p.boundary_edges, 2),
            int(p.crossing_faces),
        ),
        InequalityCheck::le("|A| <= |B|", int(p.side_a.len() as u64), int(b)),
        InequalityCheck::le(
            "|V\\A| <= 2|W\\B|/delta_min",
            int(outside),
            Rational::from_u64(2 * (w - b), p.delta_min),
        ),
    ];
    Ok(finish(p, checks))
}

/// Witness for n >= 3. Checks `|E(B,W\B)| <= k(n+1-k)|F(A,V\A)|`, `1 <= |B|`
/// and `|V\A| <= n|W\B| / delta_min`.
pub fn witness_b_nd(complex: &SimplicialComplex, side_a: &[usize]) -> Result<WitnessB> {
    let n = complex.dimension();
    if n < 3 {
        return Err(Error::WrongDimension {
            expected: ">= 3",
            found: n,
        });
    }
    let p = build(complex, side_a)?;
    let n = p.n as u64;
    let k = n.div_ceil(2);
    let w = p.graph.order() as u64;
    let b = p.b_size();
    let outside = p.in_a.iter().filter(|&&x| !x).count() as u64;
    let checks = vec![
        InequalityCheck::le(
            "|E(B,W\\B)| <= k(n+1-k)|F(A,V\\A)|",
            int(p.boundary_edges),
            int(k * (n + 1 - k) * p.crossing_faces),
        ),
        InequalityCheck::le("1 <= |B|", int(1), int(b)),
        InequalityCheck::le(
            "|V\\A| <= n|W\\B|/delta_min",
            int(outside),
            Rational::from_u64(n * (w - b), p.delta_min),
        ),
    ];
    Ok(finish(p, checks))
}

/// Dispatches on the dimension of the complex.
pub fn witness_b(complex: &SimplicialComplex, side_a: &[usize]) -> Result<WitnessB> {
    match complex.dimension() {
        2 => witness_b_2d(complex, side_a),
        n if n >= 3 => witness_b_nd(complex, side_a),
        n => Err(Error::WrongDimension {
            expected: ">= 2",
            found: n,
        }),
    }
}

fn finish(p: Parts, checks: Vec<InequalityCheck>) -> WitnessB {
    WitnessB {
        side_b: p.side_b(),
        side_a: p.side_a,
        boundary_edges: p.boundary_edges as usize,
        crossing_faces: p.crossing_faces as usize,
        checks,
    }
}

pub const CLAIM41_MAX_N: usize = 12;

/// For every split of the n-simplex vertex set into nonempty P and Q, the
/// number of (n-1)-faces meeting both. Returns the set of counts observed.
pub fn claim41_counts(n: usize) -> Result<BTreeSet<usize>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > CLAIM41_MAX_N {
        return Err(Error::BudgetExceeded {
            what: "simplex split enumeration",
            size: n,
            limit: CLAIM41_MAX_N,
        });
    }
    let m = n + 1;
    let full = (1u32 << m) - 1;
    // The (n-1)-faces are the vertex set minus one vertex.
    let faces: Vec<u32> = (0..m).map(|skip| full & !(1 << skip)).collect();
    let mut counts = BTreeSet::new();
    for p in 1..full {
        let q = full & !p;
        counts.insert(faces.iter().filter(|&&f| f & p != 0 && f & q != 0).count());
    }
    Ok(counts)
}

/// True iff every split count lies in `{n, n+1}`.
pub fn claim41_check(n: usize) -> Result<bool> {
    Ok(claim41_counts(n)?.iter().all(|&c| c == n || c == n + 1))
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

    fn sides(w: &WitnessB) -> Vec<(Rational, Rational)> {
        w.checks
            .iter()
            .map(|c| (c.lhs.clone(), c.rhs.clone()))
            .collect()
    }

    fn r(n: u64, d: u64) -> Rational {
        Rational::from_u64(n, d)
    }

    #[test]
    fn triangle_singleton() {
        let w = witness_b_2d(&x(&[vec![0, 1, 2]]), &[0]).unwrap();
        assert_eq!(w.side_b, vec![Simplex::new(vec![0, 1])]);
        assert_eq!(
            sides(&w),
            vec![(r(1, 1), r(1, 1)), (r(1, 1), r(1, 1)), (r(2, 1), r(2, 1))]
        );
        assert!(w.all_hold());
    }

    #[test]
    fn tetrahedron_boundary_singleton() {
        let w = witness_b_2d(&x(&subsets(4, 3)), &[0]).unwrap();
        assert_eq!(w.side_b, vec![Simplex::new(vec![0, 1])]);
        assert_eq!(
            sides(&w),
            vec![(r(2, 1), r(3, 1)), (r(1, 1), r(1, 1)), (r(3, 1), r(10, 3))]
        );
        assert!(w.all_hold());
    }

    #[test]
    fn bipyramid_apex() {
        let m = 6;
        let facets: Vec<Vec<usize>> = (0..m)
            .flat_map(|i| [vec![i, (i + 1) % m, m], vec![i, (i + 1) % m, m + 1]])
            .collect();
        let w = witness_b_2d(&x(&facets), &[m]).unwrap();
        assert!(w.all_hold(), "{:?}", w.checks);
    }

    #[test]
    fn higher_dimensional() {
        let w = witness_b_nd(&x(&[vec![0, 1, 2, 3]]), &[0]).unwrap();
        assert_eq!(w.side_b, vec![Simplex::new(vec![0, 1, 2])]);
        assert_eq!(
            sides(&w),
            vec![(r(3, 1), r(4, 1)), (r(1, 1), r(1, 1)), (r(3, 1), r(3, 1))]
        );

        let w = witness_b_nd(&x(&subsets(5, 4)), &[0, 1]).unwrap();
        assert_eq!(w.side_b, vec![Simplex::new(vec![0, 1, 2])]);
        assert_eq!(
            sides(&w),
            vec![(r(6, 1), r(20, 1)), (r(1, 1), r(1, 1)), (r(3, 1), r(9, 2))]
        );

        let w = witness_b_nd(&x(&[vec![0, 1, 2, 3, 4]]), &[0]).unwrap();
        assert!(w.all_hold());
    }

    #[test]
    fn errors() {
        let t = x(&[vec![0, 1, 2]]);
        assert_eq!(witness_b_2d(&t, &[]).unwrap_err(), Error::EmptySubset);
        assert_eq!(
            witness_b_2d(&t, &[0, 1, 2]).unwrap_err(),
            Error::NotProperSubset
        );
        assert!(matches!(
            witness_b_nd(&t, &[0]),
            Err(Error::WrongDimension { .. })
        ));
        assert!(matches!(
            witness_b_2d(&x(&[vec![0, 1, 2, 3]]), &[0]),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn claim_on_simplex_splits() {
        // Three vertices only split 1|2, so every count is 2.
        assert_eq!(claim41_counts(2).unwrap(), BTreeSet::from([2]));
        assert_eq!(claim41_counts(3).unwrap(), BTreeSet::from([3, 4]));
        for n in 2..=CLAIM41_MAX_N {
            assert!(claim41_check(n).unwrap(), "n={n}");
        }
        // An edge split into its two endpoints: no vertex meets both sides.
        assert_eq!(claim41_counts(1).unwrap(), BTreeSet::from([0]));
        assert!(!claim41_check(1).unwrap());
        assert!(claim41_check(13).is_err());
    }
}
