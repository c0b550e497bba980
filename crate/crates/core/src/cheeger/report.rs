use serde::{Deserialize, Serialize};

use super::{
    exact_h, exact_h_graph, graph_bounds, minimizers_connected, theorem_bound, witness_b, Cut,
    SearchOptions, WitnessB,
};
use crate::complex::{ComplexProfile, SimplicialComplex};
use crate::embedded::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spectral::{eigenvalues_symmetric, Spectrum, DEFAULT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub search: SearchOptions,
    pub tol: f64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            search: SearchOptions::default(),
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// True, but only because the bound is non-positive.
    Vacuous,
    NotApplicable(String),
    /// Exact value not computed (over a brute-force guard).
    Skipped(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Spectral lower bound <= exact H.
    pub bound: Verdict,
    /// Bound and H agree within tolerance.
    pub equality: Option<bool>,
    /// Witness inequalities at the minimizing A.
    pub witness: Verdict,
    /// All minimizers induce connected 1-skeleton subgraphs (2-complexes).
    pub minimizers_connected: Verdict,
    /// `d - lambda <= h(G) <= 2 sqrt(2d(d - lambda))` on the embedded graph.
    pub graph_cheeger: Verdict,
}

impl Verdicts {
    pub fn any_fail(&self) -> bool {
        [
            &self.bound,
            &self.witness,
            &self.minimizers_connected,
            &self.graph_cheeger,
        ]
        .iter()
        .any(|v| v.is_fail())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedSummary {
    pub order: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub profile: ComplexProfile,
    pub k: usize,
    pub embedded: EmbeddedSummary,
    pub spectrum: Spectrum,
    pub lambda: f64,
    pub lower_bound: Option<f64>,
    pub exact_h: Option<Cut>,
    pub witness: Option<WitnessB>,
    pub graph_h: Option<Rational>,
    pub graph_bounds: Option<(f64, f64)>,
    pub verdicts: Verdicts,
}

fn skipped(err: &Error) -> Verdict {
    Verdict::Skipped(err.to_string())
}

/// Profile, embedded graph, spectrum, the applicable bound, exact H when
/// within the guard, the witness at the minimizer, and the verdicts.
pub fn full_report(complex: &SimplicialComplex, opts: &ReportOptions) -> Result<BoundReport> {
    let profile = complex.profile()?;
    let tol = opts.tol;
    let graph = EmbeddedGraph::build(complex)?;
    let matrix = graph.adjacency_matrix();
    let embedded = EmbeddedSummary {
        order: graph.order(),
        edges: graph.edge_count(),
        regular_degree: matrix.regular_degree(),
        connected: matrix.is_connected(),
    };
    let spectrum = eigenvalues_symmetric(&matrix, tol)?;
    // A single (n-1)-face cannot occur in a pure complex of dimension >= 1.
    let lambda = spectrum.second_largest()?;

    let lower_bound = match theorem_bound(&profile, lambda) {
        Ok(b) => Some(b),
        Err(Error::NonConstantDegree | Error::WrongDimension { .. }) => None,
        Err(e) => return Err(e),
    };

    let exact = match exact_h(complex, &opts.search) {
        Ok(cut) => Ok(cut),
        Err(e @ Error::BudgetExceeded { .. }) => Err(e),
        Err(e) => return Err(e),
    };

    let bound_verdict = match (lower_bound, &exact) {
        (None, _) if profile.n < 2 => Verdict::NotApplicable("dimension below 2".into()),
        (None, _) => Verdict::NotApplicable("non-constant D".into()),
        (Some(_), Err(e)) => skipped(e),
        (Some(b), Ok(cut)) => {
            let h = cut.value.to_f64();
            if b > h + tol {
                Verdict::Fail
            } else if b <= tol || !embedded.connected {
                Verdict::Vacuous
            } else {
                Verdict::Pass
            }
        }
    };
    let equality = match (lower_bound, &exact) {
        (Some(b), Ok(cut)) => Some((b - cut.value.to_f64()).abs() <= tol),
        _ => None,
    };

    let (witness, witness_verdict) = match &exact {
        _ if profile.n < 2 => (None, Verdict::NotApplicable("dimension below 2".into())),
        Err(e) => (None, skipped(e)),
        Ok(cut) => {
            let w = witness_b(complex, &cut.side_a)?;
            let v = if w.all_hold() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            (Some(w), v)
        }
    };

    let minimizer_verdict = if profile.n != 2 {
        Verdict::NotApplicable("only stated for 2-complexes".into())
    } else {
        match minimizers_connected(complex, &opts.search) {
            Ok(true) => Verdict::Pass,
            Ok(false) => Verdict::Fail,
            Err(e @ Error::BudgetExceeded { .. }) => skipped(&e),
            Err(e) => return Err(e),
        }
    };

    let (graph_h, bounds, graph_verdict) = match embedded.regular_degree {
        None => (
            None,
            None,
            Verdict::NotApplicable("embedded graph not regular".into()),
        ),
        Some(_) if !embedded.connected => (
            None,
            None,
            Verdict::NotApplicable("embedded graph disconnected".into()),
        ),
        Some(d) => {
            let (lo, hi) = graph_bounds(d, lambda);
            match exact_h_graph(&matrix, &opts.search) {
                Ok(cut) => {
                    let h = cut.value.to_f64();
                    let ok = lo <= h + tol && h <= hi + tol;
                    (
                        Some(cut.value),
                        Some((lo, hi)),
                        if ok { Verdict::Pass } else { Verdict::Fail },
                    )
                }
                Err(e @ Error::BudgetExceeded { .. }) => (None, Some((lo, hi)), skipped(&e)),
                Err(e) => return Err(e),
            }
        }
    };

    Ok(BoundReport {
        k: profile.k(),
        profile,
        embedded,
        spectrum,
        lambda,
        lower_bound,
        exact_h: exact.ok(),
        witness,
        graph_h,
        graph_bounds: bounds,
        verdicts: Verdicts {
            bound: bound_verdict,
            equality,
            witness: witness_verdict,
            minimizers_connected: minimizer_verdict,
            graph_cheeger: graph_verdict,
        },
    })
}
