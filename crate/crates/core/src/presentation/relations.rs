use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::quiver::Edge;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, EchelonBasis, Rational, SparseMatrix, SparseVec};
use crate::streets::StreetAlgebra;

/// A minimal relation: a combination of parallel paths (sequences of edge
/// indices) that vanishes in `Σ(W)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    /// Length of the shortest path occurring in the relation.
    pub degree: usize,
    pub terms: Vec<(Vec<usize>, Rational)>,
}

/// Relations together with the dimension of the path algebra modulo them.
#[derive(Debug, Clone)]
pub(crate) struct RelationData {
    pub relations: Vec<Relation>,
    pub quotient_dim: usize,
}

struct Block {
    paths: Vec<Vec<usize>>,
    index: FxHashMap<Vec<usize>, usize>,
    images: Vec<SparseVec>,
    kernel: Vec<SparseVec>,
}

/// All paths of positive length between each ordered vertex pair, ordered
/// by length and then edge sequence, with their images under `φ`.
fn paths_by_block(alg: &StreetAlgebra, edges: &[Edge], images: &[SparseVec]) -> Result<FxHashMap<(usize, usize), Block>> {
    let mut out_edges: FxHashMap<usize, Vec<usize>> = FxHashMap::default();
    for (i, e) in edges.iter().enumerate() {
        out_edges.entry(e.source).or_default().push(i);
    }
    let mut blocks: FxHashMap<(usize, usize), Block> = FxHashMap::default();
    let mut frontier: Vec<(Vec<usize>, SparseVec)> = (0..edges.len()).map(|i| (vec![i], images[i].clone())).collect();
    let mut len = 1;
    while !frontier.is_empty() {
        if len > edges.len() {
            return Err(Error::Inconsistent("quiver has an oriented cycle".into()));
        }
        let mut next = Vec::new();
        for (p, img) in frontier {
            let last = &edges[*p.last().unwrap()];
            let key = (edges[p[0]].source, last.target);
            for &e in out_edges.get(&last.target).into_iter().flatten() {
                let mut q = p.clone();
                q.push(e);
                next.push((q, alg.mul(&img, &images[e])));
            }
            let b = blocks.entry(key).or_insert_with(|| Block {
                paths: Vec::new(),
                index: FxHashMap::default(),
                images: Vec::new(),
                kernel: Vec::new(),
            });
            b.index.insert(p.clone(), b.paths.len());
            b.paths.push(p);
            b.images.push(img);
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next;
        len += 1;
    }
    Ok(blocks)
}

fn kernel(images: &[SparseVec], cols: &[usize], dim: usize) -> Vec<SparseVec> {
    let m = SparseMatrix::from_rows(dim, cols.iter().map(|&c| images[c].clone()).collect()).transpose();
    kernel_basis(&m).into_iter().map(|v| v.remap(|i| Some(cols[i]))).collect()
}

pub(crate) fn relations(alg: &StreetAlgebra, edges: &[Edge], images: &[SparseVec]) -> Result<RelationData> {
    let dim = alg.dim();
    let mut blocks = paths_by_block(alg, edges, images)?;
    blocks.par_iter_mut().for_each(|(_, b)| {
        let all: Vec<usize> = (0..b.paths.len()).collect();
        b.kernel = kernel(&b.images, &all, dim);
    });

    let mut quotient_dim = alg.classes().len();
    for b in blocks.values() {
        quotient_dim += b.paths.len() - b.kernel.len();
    }

    let mut keys: Vec<(usize, usize)> = blocks.keys().copied().collect();
    keys.sort_unstable();
    let blocks = &blocks;
    let per_block: Vec<Vec<Relation>> = keys
        .par_iter()
        .map(|&(lambda, mu)| {
            let b = &blocks[&(lambda, mu)];
            if b.kernel.is_empty() {
                return Vec::new();
            }
            // arrows·I + I·arrows inside this block
            let mut ech = EchelonBasis::new();
            for (a, e) in edges.iter().enumerate() {
                if e.source == lambda {
                    if let Some(inner) = blocks.get(&(e.target, mu)) {
                        for k in &inner.kernel {
                            ech.insert(k.remap(|i| {
                                let mut p = vec![a];
                                p.extend_from_slice(&inner.paths[i]);
                                Some(b.index[&p])
                            }));
                        }
                    }
                }
                if e.target == mu {
                    if let Some(inner) = blocks.get(&(lambda, e.source)) {
                        for k in &inner.kernel {
                            ech.insert(k.remap(|i| {
                                let mut p = inner.paths[i].clone();
                                p.push(a);
                                Some(b.index[&p])
                            }));
                        }
                    }
                }
            }
            let max_len = b.paths.last().map_or(0, Vec::len);
            let mut found = Vec::new();
            for d in (1..=max_len).rev() {
                let cols: Vec<usize> = (0..b.paths.len()).filter(|&i| b.paths[i].len() >= d).collect();
                for k in kernel(&b.images, &cols, dim) {
                    if ech.insert(k.clone()) {
                        found.push(normalize(lambda, mu, d, &k, &b.paths));
                    }
                }
            }
            found.sort_by(|x, y| (x.degree, &x.terms[0].0).cmp(&(y.degree, &y.terms[0].0)));
            found
        })
        .collect();
    Ok(RelationData { relations: per_block.into_iter().flatten().collect(), quotient_dim })
}

/// Scales so that the first path (shortest, then edge order) has coefficient 1.
fn normalize(lambda: usize, mu: usize, degree: usize, k: &SparseVec, paths: &[Vec<usize>]) -> Relation {
    let (_, lead) = k.leading().expect("relations are nonzero");
    let k = k.scale(&lead.recip());
    let terms: Vec<(Vec<usize>, Rational)> = k.iter().map(|(i, c)| (paths[i].clone(), c.clone())).collect();
    debug_assert_eq!(terms[0].0.len(), degree);
    Relation { source: lambda, target: mu, degree, terms }
}
