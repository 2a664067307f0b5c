use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::streets::StreetAlgebra;

/// Block `e_λ V e_μ` of a subspace, keyed `(λ, μ)`.
pub type Blocks = FxHashMap<(usize, usize), Vec<SparseVec>>;

/// `Σ = rad⁰ ⊇ rad¹ ⊇ …` in `b`-coordinates, block by block.
#[derive(Debug, Clone)]
pub struct RadicalFiltration {
    powers: Vec<Blocks>,
    dim: usize,
}

impl RadicalFiltration {
    /// Identifies `rad Σ(W)` with the span of `Δ` over streets of positive
    /// length, after checking that this span is a nilpotent ideal of
    /// codimension `|Λ|`.
    pub fn new(alg: &StreetAlgebra) -> Result<Self> {
        let dim = alg.dim();
        let classes = alg.classes().len();
        let vertices = (0..dim).filter(|&i| alg.is_vertex(i)).count();
        if vertices != classes {
            return Err(Error::Inconsistent(format!("{vertices} vertex elements for {classes} classes")));
        }

        // every street of positive length lands in the span of the
        // non-vertex basis elements, inside the block given by its ends
        let streets = alg.system().streets();
        let bad = streets.par_iter().filter(|s| s.len > 0).find_map_any(|s| {
            let c = match alg.to_b(alg.system().delta(s.id)) {
                Ok(c) => c,
                Err(e) => return Some(e),
            };
            let stray = c
                .indices()
                .find(|&i| alg.is_vertex(i) || alg.end_class(i) != s.end_class || alg.source_class(i) != s.source_class);
            stray.map(|_| Error::Inconsistent(format!("Δ{} leaves its radical block", alg.system().label(s.id))))
        });
        if let Some(e) = bad {
            return Err(e);
        }

        // ideal: products with a radical factor have no vertex component
        for i in 0..dim {
            for j in 0..dim {
                if alg.is_vertex(i) && alg.is_vertex(j) {
                    continue;
                }
                if alg.basis_product(i, j).indices().any(|k| alg.is_vertex(k)) {
                    return Err(Error::Inconsistent(format!("radical is not an ideal at b_{i}·b_{j}")));
                }
            }
        }

        let mut full: Blocks = FxHashMap::default();
        let mut rad: Blocks = FxHashMap::default();
        for i in 0..dim {
            let key = (alg.end_class(i), alg.source_class(i));
            full.entry(key).or_default().push(SparseVec::unit(i));
            if !alg.is_vertex(i) {
                rad.entry(key).or_default().push(SparseVec::unit(i));
            }
        }
        let mut powers = vec![full, rad];
        while !powers.last().unwrap().is_empty() {
            if powers.len() > dim + 1 {
                return Err(Error::Inconsistent("radical is not nilpotent".into()));
            }
            let next = multiply_blocks(alg, powers.last().unwrap(), &powers[1]);
            powers.push(next);
        }
        powers.pop();
        Ok(RadicalFiltration { powers, dim })
    }

    /// Least `k` with `rad^k = 0`.
    pub fn loewy_length(&self) -> usize {
        self.powers.len()
    }

    /// `dim e_λ rad^k e_μ`.
    pub fn block_dim(&self, k: usize, lambda: usize, mu: usize) -> usize {
        self.powers.get(k).and_then(|b| b.get(&(lambda, mu))).map_or(0, |v| v.len())
    }

    /// Basis of `e_λ rad^k e_μ`.
    pub fn block(&self, k: usize, lambda: usize, mu: usize) -> &[SparseVec] {
        self.powers.get(k).and_then(|b| b.get(&(lambda, mu))).map_or(&[], |v| v.as_slice())
    }

    /// `dim rad^k`.
    pub fn dim(&self, k: usize) -> usize {
        self.powers.get(k).map_or(0, |b| b.values().map(Vec::len).sum())
    }

    pub fn algebra_dim(&self) -> usize {
        self.dim
    }
}

/// Blockwise `U·V`, reduced to echelon bases.
fn multiply_blocks(alg: &StreetAlgebra, u: &Blocks, v: &Blocks) -> Blocks {
    let mut by_left: FxHashMap<usize, Vec<(usize, &Vec<SparseVec>)>> = FxHashMap::default();
    for (&(nu, mu), vs) in v {
        by_left.entry(nu).or_default().push((mu, vs));
    }
    let mut targets: FxHashMap<(usize, usize), Vec<(&Vec<SparseVec>, &Vec<SparseVec>)>> = FxHashMap::default();
    for (&(lambda, nu), us) in u {
        for &(mu, vs) in by_left.get(&nu).into_iter().flatten() {
            targets.entry((lambda, mu)).or_default().push((us, vs));
        }
    }
    let mut keys: Vec<_> = targets.keys().copied().collect();
    keys.sort_unstable();
    keys.into_par_iter()
        .filter_map(|key| {
            let mut ech = EchelonBasis::new();
            for (us, vs) in &targets[&key] {
                for a in us.iter() {
                    for b in vs.iter() {
                        ech.insert(alg.mul(a, b));
                    }
                }
            }
            let (rows, _) = ech.into_sorted_rows();
            (!rows.is_empty()).then_some((key, rows))
        })
        .collect()
}
