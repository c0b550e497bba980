//! Families of pure complexes with constant (n-1)-face degree.

use super::fixture::{generated, Fixture};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

const MAX_GENERATOR_SIZE: usize = 40;

fn check(name: &str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie in {min}..={max}, got {value}"
        )));
    }
    Ok(())
}

fn build(facets: Vec<Vec<usize>>) -> SimplicialComplex {
    SimplicialComplex::from_index_facets(&facets).expect("generator facets are nonempty")
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            if m - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// The closure of one n-simplex: D = 1 and delta_min = n.
pub fn gen_simplex_closure(n: usize) -> Result<SimplicialComplex> {
    check("n", n, 2, 19)?;
    Ok(build(vec![(0..=n).collect()]))
}

/// Boundary of the `n_plus_1`-simplex: a pure n-complex with D = 2.
pub fn gen_boundary_simplex(n_plus_1: usize) -> Result<SimplicialComplex> {
    check("n_plus_1", n_plus_1, 3, 12)?;
    Ok(build(k_subsets(n_plus_1 + 1, n_plus_1)))
}

/// Suspension of the m-cycle: equator `0..m`, apexes `m` and `m+1`.
pub fn gen_bipyramid(m: usize) -> Result<SimplicialComplex> {
    check("m", m, 3, MAX_GENERATOR_SIZE)?;
    let facets = (0..m)
        .flat_map(|i| {
            let j = (i + 1) % m;
            [vec![i, j, m], vec![i, j, m + 1]]
        })
        .collect();
    Ok(build(facets))
}

/// Every triangle on m vertices; each edge lies in m - 2 triangles.
pub fn gen_complete_skeleton(m: usize) -> Result<SimplicialComplex> {
    check("m", m, 3, 30)?;
    Ok(build(k_subsets(m, 3)))
}

/// The m-gonal antiprism with both m-gon ends coned off: a triangulated
/// sphere with `2m + 2` vertices, `6m` edges (each in two triangles) and `4m`
/// triangles. Cap vertices are `0` and `2m + 1`, the rings `1..=m` and `m+1..=2m`.
pub fn gen_capped_antiprism(m: usize) -> Result<SimplicialComplex> {
    check("m", m, 3, MAX_GENERATOR_SIZE)?;
    let top = |i: usize| 1 + i % m;
    let bottom = |i: usize| m + 1 + i % m;
    let low_cap = 2 * m + 1;
    let facets = (0..m)
        .flat_map(|i| {
            [
                vec![0, top(i), top(i + 1)],
                vec![top(i), top(i + 1), bottom(i)],
                vec![top(i + 1), bottom(i), bottom(i + 1)],
                vec![low_cap, bottom(i), bottom(i + 1)],
            ]
        })
        .collect();
    Ok(build(facets))
}

pub fn generator_families() -> &'static [(&'static str, &'static str)] {
    &[
        (
            "simplex-closure-<n>",
            "closure of one n-simplex (n >= 2), D = 1",
        ),
        (
            "boundary-simplex-<k>",
            "boundary of the k-simplex (k >= 3), dimension k-1, D = 2",
        ),
        ("bipyramid-<m>", "suspension of the m-cycle (m >= 3), D = 2"),
        (
            "complete-skeleton-<m>",
            "all triangles on m vertices (m >= 3), D = m-2",
        ),
        (
            "capped-antiprism-<m>",
            "m-gonal antiprism with coned ends (m >= 3), D = 2",
        ),
    ]
}

/// Resolves names such as `bipyramid-6`.
pub fn resolve_generator(name: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let (family, arg) = name.rsplit_once('-').ok_or_else(unknown)?;
    let k: usize = arg.parse().map_err(|_| unknown())?;
    let complex = match family {
        "simplex-closure" => gen_simplex_closure(k)?,
        "boundary-simplex" => gen_boundary_simplex(k)?,
        "bipyramid" => gen_bipyramid(k)?,
        "complete-skeleton" => gen_complete_skeleton(k)?,
        "capped-antiprism" => gen_capped_antiprism(k)?,
        _ => return Err(unknown()),
    };
    let description = generator_families()
        .iter()
        .find(|(p, _)| p.starts_with(family))
        .map(|(_, d)| (*d).to_string())
        .unwrap_or_default();
    Ok(generated(name.to_string(), description, &complex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexProfile;

    fn counts(x: &SimplicialComplex) -> Vec<usize> {
        (0..=x.dimension()).map(|k| x.num_faces(k)).collect()
    }

    fn profile(x: &SimplicialComplex) -> ComplexProfile {
        x.profile().unwrap()
    }

    #[test]
    fn simplex_closures() {
        let x = gen_simplex_closure(2).unwrap();
        assert_eq!(
            x.facet_labels(),
            vec![vec![0usize.into(), 1usize.into(), 2usize.into()]]
        );
        for n in 2..=6 {
            let p = profile(&gen_simplex_closure(n).unwrap());
            assert_eq!(
                (p.num_vertices, p.num_codim1, p.degree_d, p.delta_min),
                (n + 1, n + 1, Some(1), n)
            );
        }
        assert!(gen_simplex_closure(1).is_err());
    }

    #[test]
    fn boundary_simplices() {
        let p = profile(&gen_boundary_simplex(3).unwrap());
        assert_eq!((p.n, p.degree_d, p.delta_min), (2, Some(2), 3));
        let p = profile(&gen_boundary_simplex(4).unwrap());
        assert_eq!(
            (p.n, p.degree_d, p.delta_min, p.num_codim1),
            (3, Some(2), 6, 10)
        );
        let p = profile(&gen_boundary_simplex(5).unwrap());
        assert_eq!((p.n, p.degree_d), (4, Some(2)));
        assert!(gen_boundary_simplex(2).is_err());
    }

    #[test]
    fn bipyramids() {
        assert_eq!(counts(&gen_bipyramid(3).unwrap()), vec![5, 9, 6]);
        assert_eq!(counts(&gen_bipyramid(4).unwrap()), vec![6, 12, 8]);
        let p = profile(&gen_bipyramid(6).unwrap());
        // Equator vertices meet four edges, apexes six.
        assert_eq!(
            (p.num_vertices, p.num_codim1, p.degree_d, p.delta_min),
            (8, 18, Some(2), 4)
        );
        assert!(gen_bipyramid(2).is_err());
    }

    #[test]
    fn complete_skeletons() {
        assert_eq!(
            gen_complete_skeleton(3).unwrap(),
            gen_simplex_closure(2).unwrap()
        );
        assert_eq!(
            gen_complete_skeleton(4).unwrap(),
            gen_boundary_simplex(3).unwrap()
        );
        let p = profile(&gen_complete_skeleton(5).unwrap());
        assert_eq!((p.degree_d, p.num_codim1, p.delta_min), (Some(3), 10, 4));
    }

    #[test]
    fn capped_antiprisms() {
        let x = gen_capped_antiprism(3).unwrap();
        assert_eq!(counts(&x), vec![8, 18, 12]);
        let p = profile(&x);
        assert_eq!((p.degree_d, p.delta_min), (Some(2), 3));
        for m in 3..=7 {
            let p = profile(&gen_capped_antiprism(m).unwrap());
            assert_eq!(
                (p.num_vertices, p.num_codim1, p.degree_d, p.delta_min),
                (2 * m + 2, 6 * m, Some(2), m.min(5))
            );
        }
    }

    #[test]
    fn named_resolution() {
        assert_eq!(
            resolve_generator("bipyramid-5").unwrap().complex().unwrap(),
            gen_bipyramid(5).unwrap()
        );
        assert!(resolve_generator("bipyramid-x").is_err());
        assert!(resolve_generator("torus-7").is_err());
    }
}
