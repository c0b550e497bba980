//! Exact Cheeger-type constants, their spectral lower bounds, and the
//! witness constructions that transfer a vertex cut of a complex to an edge
//! cut of its embedded graph.

mod bounds;
mod prt;
mod report;
mod search;
mod witness;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

pub use bounds::{bound_2d, bound_nd, graph_bounds, theorem_bound};
pub use prt::{prt_h, prt_minimizer, PrtPartition};
pub use report::{full_report, BoundReport, EmbeddedSummary, ReportOptions, Verdict, Verdicts};
pub use search::{all_minimizers, exact_h, exact_h_graph, minimizers_connected, phi_graph};
pub use witness::{
    claim41_check, claim41_counts, witness_b, witness_b_2d, witness_b_nd, InequalityCheck, WitnessB,
};

pub const DEFAULT_MAX_VERTICES: usize = 22;
pub const DEFAULT_MAX_GRAPH_VERTICES: usize = 24;
pub const DEFAULT_MAX_PRT_VERTICES: usize = 12;
/// Subsets are bit masks in a `u64`.
pub const HARD_VERTEX_LIMIT: usize = 63;

/// Guards and switches for the brute-force searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub max_vertices: usize,
    pub max_graph_vertices: usize,
    pub max_prt_vertices: usize,
    /// Skip candidate sets whose induced 1-skeleton is disconnected (2-complexes only).
    pub prune_connected: bool,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_graph_vertices: DEFAULT_MAX_GRAPH_VERTICES,
            max_prt_vertices: DEFAULT_MAX_PRT_VERTICES,
            prune_connected: false,
            workers: 1,
        }
    }
}

/// A vertex cut `(A, V \ A)` and its value `|V| * crossing / (|A| * |V \ A|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    /// Dense vertex indices of A, increasing.
    pub side_a: Vec<usize>,
    pub num_vertices: usize,
    /// Number of top faces (or graph edges) meeting both sides.
    pub crossing: usize,
    pub value: Rational,
}

impl Cut {
    pub fn complement(&self) -> Vec<usize> {
        (0..self.num_vertices)
            .filter(|v| !self.side_a.contains(v))
            .collect()
    }

    pub(crate) fn from_mask(mask: u64, num_vertices: usize, crossing: usize) -> Self {
        let size = mask.count_ones() as u64;
        let v = num_vertices as u64;
        Cut {
            side_a: mask_to_vec(mask),
            num_vertices,
            crossing,
            value: Rational::from_u64(v * crossing as u64, size * (v - size)),
        }
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1u64 << i) != 0).collect()
}

pub(crate) fn vec_to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | (1u64 << v))
}

/// Lexicographic order of the increasing index sequences of two sets.
pub(crate) fn lex_cmp_masks(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let diff = a ^ b;
    let i = diff.trailing_zeros();
    let above = |m: u64| if i >= 63 { 0 } else { m >> (i + 1) };
    // The set holding `i` wins unless the other set stops right before `i`.
    if a & (1u64 << i) != 0 {
        if above(b) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
