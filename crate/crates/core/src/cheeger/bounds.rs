//! Spectral lower bounds on H and the graph Cheeger sandwich.

use crate::complex::ComplexProfile;
use crate::error::{Error, Result};

fn require_d(profile: &ComplexProfile) -> Result<f64> {
    profile
        .degree_d
        .map(|d| d as f64)
        .ok_or(Error::NonConstantDegree)
}

/// Lower bound for 2-complexes: `|V| delta_min (2D - lambda) / (4 |W|)`.
pub fn bound_2d(profile: &ComplexProfile, lambda: f64) -> Result<f64> {
    if profile.n != 2 {
        return Err(Error::WrongDimension {
            expected: "2",
            found: profile.n,
        });
    }
    let d = require_d(profile)?;
    let v = profile.num_vertices as f64;
    let w = profile.num_codim1 as f64;
    Ok(v * profile.delta_min as f64 * (2.0 * d - lambda) / (4.0 * w))
}

/// Lower bound for n >= 3: `2 delta_min (nD - lambda) / (|W| n k (n+1-k))` with `k = floor((n+1)/2)`.
pub fn bound_nd(profile: &ComplexProfile, lambda: f64) -> Result<f64> {
    if profile.n < 3 {
        return Err(Error::WrongDimension {
            expected: ">= 3",
            found: profile.n,
        });
    }
    let d = require_d(profile)?;
    let n = profile.n;
    let k = profile.k();
    let w = profile.num_codim1 as f64;
    let denom = w * (n * k * (n + 1 - k)) as f64;
    Ok(2.0 * profile.delta_min as f64 * (n as f64 * d - lambda) / denom)
}

/// The applicable bound for the profile's dimension.
pub fn theorem_bound(profile: &ComplexProfile, lambda: f64) -> Result<f64> {
    match profile.n {
        2 => bound_2d(profile, lambda),
        n if n >= 3 => bound_nd(profile, lambda),
        n => Err(Error::WrongDimension {
            expected: ">= 2",
            found: n,
        }),
    }
}

/// `(d - lambda, 2 sqrt(2 d (d - lambda)))` for a d-regular graph.
pub fn graph_bounds(d: usize, lambda: f64) -> (f64, f64) {
    let d = d as f64;
    let gap = d - lambda;
    (gap, 2.0 * (2.0 * d * gap.max(0.0)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: usize, v: usize, w: usize, d: Option<usize>, delta: usize) -> ComplexProfile {
        ComplexProfile {
            n,
            num_vertices: v,
            num_codim1: w,
            degree_d: d,
            delta_min: delta,
        }
    }

    #[test]
    fn two_dimensional() {
        let b = bound_2d(&profile(2, 3, 3, Some(1), 2), -1.0).unwrap();
        assert!((b - 1.5).abs() < 1e-12);
        let lambda = 1.0 + 5f64.sqrt();
        let b = bound_2d(&profile(2, 8, 18, Some(2), 3), lambda).unwrap();
        assert!((b - (3.0 - 5f64.sqrt()) / 3.0).abs() < 1e-12);
        assert!((b - 0.254644).abs() < 1e-6);
        let b = bound_2d(&profile(2, 4, 6, Some(2), 3), 0.0).unwrap();
        assert!((b - 2.0).abs() < 1e-12);
    }

    #[test]
    fn higher_dimensional() {
        let b = bound_nd(&profile(3, 5, 10, Some(2), 6), 1.0).unwrap();
        assert!((b - 0.5).abs() < 1e-12);
        let b = bound_nd(&profile(3, 4, 4, Some(1), 3), -1.0).unwrap();
        assert!((b - 0.5).abs() < 1e-12);
        let b = bound_nd(&profile(4, 5, 5, Some(1), 4), -1.0).unwrap();
        assert!((b - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert_eq!(
            bound_2d(&profile(2, 4, 5, None, 2), 0.0).unwrap_err(),
            Error::NonConstantDegree
        );
        assert!(matches!(
            bound_2d(&profile(3, 5, 10, Some(2), 6), 0.0),
            Err(Error::WrongDimension { .. })
        ));
        assert!(matches!(
            bound_nd(&profile(2, 3, 3, Some(1), 2), 0.0),
            Err(Error::WrongDimension { .. })
        ));
        assert!(theorem_bound(&profile(1, 3, 3, Some(2), 2), 0.0).is_err());
    }

    #[test]
    fn graph_sandwich() {
        let (lo, hi) = graph_bounds(2, -1.0);
        assert_eq!(lo, 3.0);
        assert!((hi - 2.0 * 12f64.sqrt()).abs() < 1e-12);
        let (lo, hi) = graph_bounds(4, 0.0);
        assert_eq!(lo, 4.0);
        assert!((hi - 11.313708).abs() < 1e-6);
        let (lo, hi) = graph_bounds(6, 1.0);
        assert_eq!(lo, 5.0);
        assert!((hi - 15.491933).abs() < 1e-6);
    }
}
