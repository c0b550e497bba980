//! Dense symmetric eigenvalues by cyclic Jacobi rotations.
//!
//! The matrices here are adjacency matrices of embedded graphs, a few hundred
//! rows at most, so the full spectrum is computed and every eigenvalue is
//! certified by the residual of its accumulated eigenvector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;

pub const DEFAULT_TOL: f64 = 1e-9;
/// Tolerance for comparisons against irrational closed forms such as 1 + sqrt(5).
pub const IRRATIONAL_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Sorted descending, with multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Largest residual `|Mv - lambda v|` over the computed unit eigenvectors.
    pub residual_bound: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    /// Entry 1 of the descending list; equal to the top for disconnected graphs.
    pub fn second_largest(&self) -> Result<f64> {
        second_largest(self)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

/// Entry at index 1 of the descending multiplicity-counted spectrum.
pub fn second_largest(spectrum: &Spectrum) -> Result<f64> {
    spectrum
        .eigenvalues
        .get(1)
        .copied()
        .ok_or(Error::SpectrumTooSmall(spectrum.order()))
}

pub fn eigenvalues_symmetric(matrix: &AdjacencyMatrix, tol: f64) -> Result<Spectrum> {
    symmetric_eigenvalues(&matrix.to_f64(), matrix.order(), tol)
}

/// Eigenvalues of a dense symmetric matrix stored row-major.
pub fn symmetric_eigenvalues(a: &[f64], order: usize, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance);
    }
    if a.len() != order * order {
        return Err(Error::NotSquare);
    }
    for i in 0..order {
        for j in i + 1..order {
            if a[i * order + j] != a[j * order + i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }

    let (values, vectors) = jacobi(a, order)?;

    let mut residual_bound = 0.0f64;
    for (k, &lambda) in values.iter().enumerate() {
        let mut norm2 = 0.0;
        for i in 0..order {
            let mut mv = 0.0;
            for j in 0..order {
                mv += a[i * order + j] * vectors[j * order + k];
            }
            let r = mv - lambda * vectors[i * order + k];
            norm2 += r * r;
        }
        residual_bound = residual_bound.max(norm2.sqrt());
    }
    if residual_bound > tol {
        return Err(Error::ResidualTooLarge {
            residual: residual_bound,
            tol,
        });
    }

    let mut eigenvalues = values;
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        residual_bound,
    })
}

/// Returns eigenvalues and the column-major-by-index eigenvector matrix
/// (`v[i * n + k]` is component `i` of eigenvector `k`).
fn jacobi(input: &[f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut a = input.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = f64::EPSILON * frob.max(f64::MIN_POSITIVE);

    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| 2.0 * a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((values, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

/// `A <- J^T A J` for the plane rotation in (p, q) that zeroes `A[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
