//! The multi-part constant: minimum over partitions of V into d+1 nonempty
//! blocks of `|V| * |F| / prod |A_i|`, where F counts the d-faces with one
//! vertex in every block.

use serde::{Deserialize, Serialize};

use super::SearchOptions;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rational::{cmp_fractions, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrtPartition {
    /// Blocks of dense vertex indices, ordered by smallest member.
    pub blocks: Vec<Vec<usize>>,
    /// d-faces meeting every block.
    pub rainbow_faces: usize,
    pub value: Rational,
}

pub fn prt_h(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<Rational> {
    prt_minimizer(complex, opts).map(|p| p.value)
}

/// Enumerates set partitions as restricted growth strings; the first minimum
/// in that order is returned.
pub fn prt_minimizer(complex: &SimplicialComplex, opts: &SearchOptions) -> Result<PrtPartition> {
    if !complex.is_pure() {
        return Err(complex.profile().unwrap_err());
    }
    let d = complex.dimension();
    let nv = complex.num_vertices();
    let parts = d + 1;
    if nv <= d {
        return Err(Error::InvalidParameter(format!(
            "{nv} vertices cannot fill {parts} blocks"
        )));
    }
    if nv > opts.max_prt_vertices {
        return Err(Error::BudgetExceeded {
            what: "partition search",
            size: nv,
            limit: opts.max_prt_vertices,
        });
    }
    let faces: Vec<Vec<usize>> = complex
        .k_faces(d)?
        .iter()
        .map(|f| f.vertices().to_vec())
        .collect();

    let mut state = Search {
        nv,
        parts,
        faces: &faces,
        assign: vec![0; nv],
        sizes: vec![0; parts],
        best: None,
    };
    state.assign[0] = 0;
    state.sizes[0] = 1;
    state.descend(1, 1);

    let (assign, rainbow, _) = state.best.expect("at least one partition exists");
    let mut blocks = vec![Vec::new(); parts];
    for (v, &b) in assign.iter().enumerate() {
        blocks[b].push(v);
    }
    let product: u64 = blocks.iter().map(|b| b.len() as u64).product();
    Ok(PrtPartition {
        blocks,
        rainbow_faces: rainbow as usize,
        value: Rational::from_u64(nv as u64 * rainbow, product),
    })
}

struct Search<'a> {
    nv: usize,
    parts: usize,
    faces: &'a [Vec<usize>],
    assign: Vec<usize>,
    sizes: Vec<u64>,
    best: Option<(Vec<usize>, u64, u64)>,
}

impl Search<'_> {
    fn descend(&mut self, v: usize, used: usize) {
        if v == self.nv {
            if used == self.parts {
                self.evaluate();
            }
            return;
        }
        // Leave enough vertices to open every remaining block.
        if self.nv - v < self.parts - used {
            return;
        }
        for b in 0..(used + 1).min(self.parts) {
            self.assign[v] = b;
            self.sizes[b] += 1;
            self.descend(v + 1, used.max(b + 1));
            self.sizes[b] -= 1;
        }
    }

    fn evaluate(&mut self) {
        let rainbow = self
            .faces
            .iter()
            .filter(|f| {
                let mut seen = 0u64;
                f.iter().all(|&v| {
                    let bit = 1u64 << self.assign[v];
                    let fresh = seen & bit == 0;
                    seen |= bit;
                    fresh
                })
            })
            .count() as u64;
        let product: u64 = self.sizes.iter().product();
        let better = match &self.best {
            None => true,
            Some((_, r, p)) => cmp_fractions(rainbow, product, *r, *p).is_lt(),
        };
        if better {
            self.best = Some((self.assign.clone(), rainbow, product));
        }
    }
}
