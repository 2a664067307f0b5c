//! Multiplication in `Σ(W)` through streets, without enumerating `W`.

use std::sync::Mutex;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::system::StreetSystem;
use crate::coxeter::{ClassTable, Subset, TransportTable};
use crate::descent::{Basis, DescentVector};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Rational, SparseVec};

/// A basis `b_i = Δ(ξ_i)` of `Σ(W)` given by streets, with its structure
/// tensor. Since `Δ` reverses products, `b_i b_j = Δ(ξ_j ∘ ξ_i)`.
pub struct StreetAlgebra {
    system: StreetSystem,
    classes: ClassTable,
    basis: Vec<usize>,
    coords: EchelonBasis,
    table: FxHashMap<(u16, u16), SparseVec>,
}

impl StreetAlgebra {
    pub fn new(transport: &TransportTable, classes: ClassTable) -> Result<Self> {
        let system = StreetSystem::new(transport, &classes)?;
        let dim = 1usize << system.rank();

        // Greedy choice by (length, label); vertex streets come first.
        let mut span = EchelonBasis::new();
        let mut basis = Vec::with_capacity(dim);
        for st in system.streets() {
            if span.rank() == dim {
                break;
            }
            if span.insert(system.delta(st.id).clone()) {
                basis.push(st.id);
            }
        }
        if basis.len() != dim {
            return Err(Error::Inconsistent(format!("Δ of all streets spans {} dimensions, expected {dim}", basis.len())));
        }
        let mut coords = EchelonBasis::tracking();
        for &b in &basis {
            coords.insert(system.delta(b).clone());
        }
        let mut alg = StreetAlgebra { system, classes, basis, coords, table: FxHashMap::default() };
        alg.table = alg.build_table()?;
        Ok(alg)
    }

    fn build_table(&self) -> Result<FxHashMap<(u16, u16), SparseVec>> {
        let dim = self.basis.len();
        let cache: Mutex<FxHashMap<usize, SparseVec>> = Mutex::new(FxHashMap::default());
        let pairs: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| self.source_class(i) == self.end_class(j))
            .collect();
        let entries: Vec<Result<Option<((u16, u16), SparseVec)>>> = pairs
            .into_par_iter()
            .map(|(i, j)| {
                let mut acc = SparseVec::new();
                for &rho in self.system.product(self.basis[j], self.basis[i]) {
                    let rho = rho as usize;
                    let cached = cache.lock().unwrap().get(&rho).cloned();
                    let c = match cached {
                        Some(c) => c,
                        None => {
                            let c = self.street_coords(rho)?;
                            cache.lock().unwrap().insert(rho, c.clone());
                            c
                        }
                    };
                    acc.axpy(&Rational::ONE, &c);
                }
                Ok((!acc.is_zero()).then_some(((i as u16, j as u16), acc)))
            })
            .collect();
        let mut table = FxHashMap::default();
        for e in entries {
            if let Some((k, v)) = e? {
                table.insert(k, v);
            }
        }
        Ok(table)
    }

    fn street_coords(&self, street: usize) -> Result<SparseVec> {
        self.coords
            .express(self.system.delta(street))
            .ok_or_else(|| Error::Inconsistent(format!("Δ{} lies outside the chosen basis", self.system.label(street))))
    }

    pub fn system(&self) -> &StreetSystem {
        &self.system
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Street `ξ_i` behind basis element `b_i`.
    pub fn basis_street(&self, i: usize) -> usize {
        self.basis[i]
    }

    pub fn is_vertex(&self, i: usize) -> bool {
        self.system.street(self.basis[i]).len == 0
    }

    /// Class `λ` with `b_i ∈ Σ e_λ`.
    pub fn source_class(&self, i: usize) -> usize {
        self.system.street(self.basis[i]).source_class
    }

    /// Class `μ` with `b_i ∈ e_μ Σ`.
    pub fn end_class(&self, i: usize) -> usize {
        self.system.street(self.basis[i]).end_class
    }

    /// Index of the basis element `e_λ`.
    pub fn vertex_index(&self, class: usize) -> usize {
        let st = self.system.vertex_street(class);
        self.basis.iter().position(|&b| b == st).expect("vertex streets are always chosen")
    }

    /// `b_i b_j` in `b`-coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        self.table.get(&(i as u16, j as u16)).cloned().unwrap_or_default()
    }

    /// Product of two elements given in `b`-coordinates.
    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, ai) in a.iter() {
            for (j, bj) in b.iter() {
                if let Some(c) = self.table.get(&(i as u16, j as u16)) {
                    out.axpy(&(ai * bj), c);
                }
            }
        }
        out
    }

    /// `e`-coordinates to `b`-coordinates.
    pub fn to_b(&self, e: &SparseVec) -> Result<SparseVec> {
        self.coords.express(e).ok_or_else(|| Error::Precondition("vector outside the span of Δ(streets)".into()))
    }

    /// `b`-coordinates to `e`-coordinates.
    pub fn to_e(&self, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in b.iter() {
            out.axpy(c, self.system.delta(self.basis[i]));
        }
        out
    }

    /// `u·v` for `e`-basis vectors, through the street algebra.
    pub fn sigma_product(&self, u: &DescentVector, v: &DescentVector) -> Result<DescentVector> {
        for w in [u, v] {
            w.expect(Basis::E)?;
            if w.rank() != self.rank() {
                return Err(Error::MixedData);
            }
        }
        let p = self.mul(&self.to_b(u.coeffs())?, &self.to_b(v.coeffs())?);
        Ok(DescentVector::from_coeffs(Basis::E, self.rank(), self.to_e(&p)))
    }

    /// `Δ(σ)` as an `e`-basis vector.
    pub fn delta_vector(&self, street: usize) -> DescentVector {
        DescentVector::from_coeffs(Basis::E, self.rank(), self.system.delta(street).clone())
    }

    /// Checks that `ker Δ` is closed under multiplication by the streets of
    /// length at most 1 from both sides. Returns the kernel dimension.
    pub fn check_kernel_ideal(&self) -> Result<usize> {
        let streets = self.system.streets();
        // kernel of Δ: each street minus its expansion in the chosen basis
        let mut kernel: Vec<FxHashMap<usize, Rational>> = Vec::new();
        let chosen: std::collections::HashSet<usize> = self.basis.iter().copied().collect();
        for st in streets.iter().filter(|s| !chosen.contains(&s.id)) {
            let c = self.street_coords(st.id)?;
            let mut v: FxHashMap<usize, Rational> = FxHashMap::default();
            v.insert(st.id, Rational::ONE);
            for (i, x) in c.iter() {
                *v.entry(self.basis[i]).or_insert(Rational::ZERO) -= x;
            }
            kernel.push(v);
        }
        let gens: Vec<usize> = streets.iter().filter(|s| s.len <= 1).map(|s| s.id).collect();
        for xi in &kernel {
            for &eta in &gens {
                for left in [true, false] {
                    let mut acc = SparseVec::new();
                    for (&s, c) in xi {
                        let prod = if left { self.system.product(eta, s) } else { self.system.product(s, eta) };
                        for &rho in prod {
                            acc.axpy(c, self.system.delta(rho as usize));
                        }
                    }
                    if !acc.is_zero() {
                        return Err(Error::Inconsistent(format!(
                            "kernel of Δ is not an ideal: product with {} is nonzero",
                            self.system.label(eta)
                        )));
                    }
                }
            }
        }
        Ok(kernel.len())
    }

    /// `e_λ` in `e`-coordinates.
    pub fn class_idempotent(&self, class: usize) -> DescentVector {
        let c = &self.classes.classes[class];
        DescentVector::from_pairs(Basis::E, self.rank(), c.members.iter().map(|&l| (l, Rational::ONE)))
    }

    /// Subset `L` behind the `e`-coordinate index.
    pub fn subset(index: usize) -> Subset {
        Subset(index as u16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::DescentAlgebra;

    fn build(t: &str) -> (DescentAlgebra, StreetAlgebra) {
        let a = DescentAlgebra::from_label(t).unwrap();
        let s = StreetAlgebra::new(a.transport(), a.classes().clone()).unwrap();
        (a, s)
    }

    #[test]
    fn delta_is_antihomomorphism_on_h3() {
        let (a, s) = build("H3");
        let streets = s.system().streets();
        for x in streets {
            for y in streets {
                let lhs = a.oracle_multiply(&s.delta_vector(x.id), &s.delta_vector(y.id)).unwrap();
                let mut rhs = SparseVec::new();
                for &rho in s.system().product(y.id, x.id) {
                    rhs.axpy(&Rational::ONE, s.system().delta(rho as usize));
                }
                assert_eq!(lhs.coeffs(), &rhs, "{} {}", s.system().label(x.id), s.system().label(y.id));
            }
        }
    }

    #[test]
    fn sigma_product_matches_oracle() {
        for t in ["I2(3)", "I2(4)", "A3", "B3", "H3"] {
            let (a, s) = build(t);
            let n = a.rank();
            for l in Subset::all(n) {
                for m in Subset::all(n) {
                    let u = DescentVector::basis_element(Basis::E, n, l);
                    let v = DescentVector::basis_element(Basis::E, n, m);
                    assert_eq!(s.sigma_product(&u, &v).unwrap(), a.oracle_multiply(&u, &v).unwrap(), "{t} {l:?} {m:?}");
                }
            }
        }
    }

    #[test]
    fn kernel_is_ideal() {
        for t in ["H3", "A3", "I2(5)"] {
            let (_, s) = build(t);
            s.check_kernel_ideal().unwrap();
        }
    }

    #[test]
    fn idempotents_via_streets() {
        let (_, s) = build("F4");
        for c in s.classes().iter() {
            let e = s.class_idempotent(c.index);
            assert_eq!(s.sigma_product(&e, &e).unwrap(), e);
        }
    }
}
