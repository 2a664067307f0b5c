use serde::{Deserialize, Serialize};

use super::radical::RadicalFiltration;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::streets::StreetAlgebra;

/// An arrow `λ → μ`, standing for an element of `e_λ rad e_μ` not in `rad²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    /// Street label, e.g. `[S;41]`.
    pub street: String,
    /// 0 for a single arrow, otherwise 1, 2, … as the number of dots.
    pub index: usize,
}

/// Arrows with their images in `b`-coordinates.
pub(crate) fn quiver_edges(alg: &StreetAlgebra, rad: &RadicalFiltration) -> (Vec<Edge>, Vec<SparseVec>) {
    let k = alg.classes().len();
    let mut edges = Vec::new();
    let mut images = Vec::new();
    let streets = alg.system().streets();
    for lambda in 0..k {
        for mu in 0..k {
            let mult = rad.block_dim(1, lambda, mu) - rad.block_dim(2, lambda, mu);
            if mult == 0 {
                continue;
            }
            let mut ech = EchelonBasis::new();
            for v in rad.block(2, lambda, mu) {
                ech.insert(v.clone());
            }
            let base = ech.rank();
            let mut chosen = 0;
            for s in streets.iter().filter(|s| s.len > 0 && s.end_class == lambda && s.source_class == mu) {
                let c = alg.to_b(alg.system().delta(s.id)).expect("radical filtration checked every street");
                if ech.insert(c.clone()) {
                    chosen += 1;
                    edges.push(Edge {
                        source: lambda,
                        target: mu,
                        street: alg.system().label(s.id),
                        index: if mult == 1 { 0 } else { chosen },
                    });
                    images.push(c);
                    if ech.rank() == base + mult {
                        break;
                    }
                }
            }
            assert_eq!(chosen, mult, "streets span e_λ rad e_μ");
        }
    }
    (edges, images)
}
