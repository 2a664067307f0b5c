use std::sync::OnceLock;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::vector::{Basis, DescentVector};
use crate::coxeter::{ClassTable, CoxeterDatum, Gate, GroupElement, Subset, TransportTable};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

/// Solomon's structure constants `a_JKL`, stored densely.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    table: Vec<u64>,
}

impl StructureConstants {
    #[inline]
    fn idx(&self, j: Subset, k: Subset, l: Subset) -> usize {
        ((j.0 as usize) << (2 * self.n)) | ((k.0 as usize) << self.n) | l.0 as usize
    }

    pub fn get(&self, j: Subset, k: Subset, l: Subset) -> u64 {
        self.table[self.idx(j, k, l)]
    }

    /// Nonzero `(L, a_JKL)` for fixed `J`, `K`.
    pub fn row(&self, j: Subset, k: Subset) -> impl Iterator<Item = (Subset, u64)> + '_ {
        let base = self.idx(j, k, Subset::EMPTY);
        (0..1usize << self.n).filter_map(move |l| {
            let a = self.table[base + l];
            (a != 0).then_some((Subset(l as u16), a))
        })
    }
}

/// The matrix `(m_KL)` linking the `x` and `e` bases.
#[derive(Debug, Clone)]
pub struct MMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl MMatrix {
    pub fn get(&self, k: Subset, l: Subset) -> u64 {
        self.entries[((k.0 as usize) << self.n) | l.0 as usize]
    }

    pub fn rank(&self) -> usize {
        self.n
    }
}

/// Result of checking the three parts of the `Y_K ∩ X_L♯` lemma for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub k: Subset,
    pub l: Subset,
    pub counting: bool,
    pub prefix: bool,
    pub singleton: bool,
    pub counterexample: Option<GroupElement>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counting && self.prefix && self.singleton
    }
}

/// A finite Coxeter group together with everything needed to work in its
/// descent algebra. Enumeration-based data is built lazily and gated.
pub struct DescentAlgebra {
    datum: CoxeterDatum,
    transport: TransportTable,
    classes: ClassTable,
    gate: Gate,
    constants: OnceLock<Result<StructureConstants>>,
    m: OnceLock<Result<MMatrix>>,
}

impl DescentAlgebra {
    pub fn new(datum: CoxeterDatum, gate: Gate) -> Self {
        let transport = TransportTable::new(&datum);
        let classes = ClassTable::new(&datum, &transport);
        DescentAlgebra { datum, transport, classes, gate, constants: OnceLock::new(), m: OnceLock::new() }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(DescentAlgebra::new(CoxeterDatum::from_label(label)?, Gate::default()))
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn transport(&self) -> &TransportTable {
        &self.transport
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn gate(&self) -> Gate {
        self.gate
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `2^n`.
    pub fn dimension(&self) -> usize {
        1 << self.rank()
    }

    /// Whether enumeration of all of `W` fits under the gate.
    pub fn oracle_available(&self) -> bool {
        self.datum.group_order_u128() <= self.gate.bound
    }

    fn check_vector(&self, v: &DescentVector, basis: Basis) -> Result<()> {
        if v.rank() != self.rank() {
            return Err(Error::MixedData);
        }
        v.expect(basis)
    }

    /// All `a_JKL`, from one pass over each `X_J`.
    pub fn structure_constants(&self) -> Result<&StructureConstants> {
        self.constants.get_or_init(|| self.build_constants()).as_ref().map_err(Clone::clone)
    }

    fn build_constants(&self) -> Result<StructureConstants> {
        let n = self.rank();
        let d = &self.datum;
        let full = d.full_set();
        let per_j: Vec<Result<Vec<u64>>> = Subset::all(n)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|j| {
                // x ∈ X_JK iff no right descent lies in K; then J^x ∩ K is the
                // set of s ∈ K with x(α_s) a simple root in J.
                let mut hist: FxHashMap<(Subset, Subset), u64> = FxHashMap::default();
                d.for_each_x(j, self.gate, |x| {
                    let r = d.right_descents(x);
                    let mut t = Subset::EMPTY;
                    for s in full.difference(r).iter() {
                        if let Some(u) = d.simple_image(x, s) {
                            if j.contains(u) {
                                t = t.insert(s);
                            }
                        }
                    }
                    *hist.entry((r, t)).or_insert(0) += 1;
                })?;
                let mut block = vec![0u64; 1 << (2 * n)];
                for ((r, t), c) in hist {
                    for k in Subset::all(n) {
                        if r.intersection(k).is_empty() {
                            block[((k.0 as usize) << n) | t.intersection(k).0 as usize] += c;
                        }
                    }
                }
                Ok(block)
            })
            .collect();
        let mut table = Vec::with_capacity(1 << (3 * n));
        for b in per_j {
            table.extend(b?);
        }
        Ok(StructureConstants { n, table })
    }

    pub fn structure_constant(&self, j: Subset, k: Subset, l: Subset) -> Result<u64> {
        Ok(self.structure_constants()?.get(j, k, l))
    }

    /// `m_KL = |X_K ∩ X_L♯|` for `K ⊇ L`, from the descent sets of `X_L♯`.
    pub fn m_matrix(&self) -> Result<&MMatrix> {
        self.m.get_or_init(|| self.build_m()).as_ref().map_err(Clone::clone)
    }

    fn build_m(&self) -> Result<MMatrix> {
        let n = self.rank();
        let d = &self.datum;
        let cols: Vec<Result<Vec<u64>>> = Subset::all(n)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|l| {
                let mut hist = vec![0u64; 1 << n];
                d.for_each_x_sharp(l, &self.transport, self.gate, |x, _| {
                    hist[d.left_descents(x).0 as usize] += 1;
                })?;
                Ok(Subset::all(n)
                    .map(|k| {
                        if !l.is_subset_of(k) {
                            return 0;
                        }
                        Subset::all(n).filter(|dd| dd.intersection(k).is_empty()).map(|dd| hist[dd.0 as usize]).sum()
                    })
                    .collect())
            })
            .collect();
        let mut entries = vec![0u64; 1 << (2 * n)];
        for (l, col) in cols.into_iter().enumerate() {
            for (k, v) in col?.into_iter().enumerate() {
                entries[(k << n) | l] = v;
            }
        }
        Ok(MMatrix { n, entries })
    }

    pub fn m_entry(&self, k: Subset, l: Subset) -> Result<u64> {
        Ok(self.m_matrix()?.get(k, l))
    }

    /// `y_K = Σ_{J ⊇ K} (-1)^{|J-K|} x_J`, inverted.
    pub fn x_to_y(&self, v: &DescentVector) -> Result<DescentVector> {
        self.check_vector(v, Basis::X)?;
        // x_J = Σ_{K ⊇ J} y_K
        let mut out = SparseVec::new();
        let full = self.datum.full_set();
        for (j, c) in v.terms() {
            for extra in full.difference(j).subsets() {
                out.axpy(c, &SparseVec::unit(j.union(extra).0 as usize));
            }
        }
        Ok(DescentVector::from_coeffs(Basis::Y, self.rank(), out))
    }

    pub fn y_to_x(&self, v: &DescentVector) -> Result<DescentVector> {
        self.check_vector(v, Basis::Y)?;
        let mut out = SparseVec::new();
        let full = self.datum.full_set();
        for (k, c) in v.terms() {
            for extra in full.difference(k).subsets() {
                let sign = if extra.len() % 2 == 0 { c.clone() } else { -c.clone() };
                out.axpy(&sign, &SparseVec::unit(k.union(extra).0 as usize));
            }
        }
        Ok(DescentVector::from_coeffs(Basis::X, self.rank(), out))
    }

    /// `Σ c_K x_K ↦ Σ_L (Σ_K c_K m_KL) e_L`.
    pub fn x_to_e(&self, v: &DescentVector) -> Result<DescentVector> {
        self.check_vector(v, Basis::X)?;
        let m = self.m_matrix()?;
        let mut out = SparseVec::new();
        for (k, c) in v.terms() {
            for l in k.subsets() {
                let a = m.get(k, l);
                if a != 0 {
                    out.axpy(&(c * &Rational::from(a as i64)), &SparseVec::unit(l.0 as usize));
                }
            }
        }
        Ok(DescentVector::from_coeffs(Basis::E, self.rank(), out))
    }

    /// Inverse of [`x_to_e`](Self::x_to_e) by back substitution over subsets
    /// of decreasing size.
    pub fn e_to_x(&self, v: &DescentVector) -> Result<DescentVector> {
        self.check_vector(v, Basis::E)?;
        let m = self.m_matrix()?;
        let n = self.rank();
        let mut order: Vec<Subset> = Subset::all(n).collect();
        order.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut c = vec![Rational::ZERO; 1 << n];
        let full = self.datum.full_set();
        for l in order {
            let mut rhs = v.get(l);
            for extra in full.difference(l).subsets().filter(|e| !e.is_empty()) {
                let k = l.union(extra);
                let a = m.get(k, l);
                if a != 0 && !c[k.0 as usize].is_zero() {
                    rhs -= &c[k.0 as usize] * &Rational::from(a as i64);
                }
            }
            let diag = m.get(l, l);
            if diag == 0 {
                return Err(Error::Inconsistent(format!("m matrix has a zero diagonal entry at {l:?}")));
            }
            c[l.0 as usize] = rhs / Rational::from(diag as i64);
        }
        Ok(DescentVector::from_coeffs(Basis::X, n, SparseVec::from_dense(&c)))
    }

    /// Converts to the requested basis.
    pub fn convert(&self, v: &DescentVector, to: Basis) -> Result<DescentVector> {
        match (v.basis(), to) {
            (a, b) if a == b => Ok(v.clone()),
            (Basis::X, Basis::Y) => self.x_to_y(v),
            (Basis::Y, Basis::X) => self.y_to_x(v),
            (Basis::X, Basis::E) => self.x_to_e(v),
            (Basis::E, Basis::X) => self.e_to_x(v),
            (Basis::Y, Basis::E) => self.x_to_e(&self.y_to_x(v)?),
            (Basis::E, Basis::Y) => self.x_to_y(&self.e_to_x(v)?),
            _ => unreachable!(),
        }
    }

    /// Product from the structure constants, returned in the basis of `u`.
    pub fn oracle_multiply(&self, u: &DescentVector, v: &DescentVector) -> Result<DescentVector> {
        if u.rank() != self.rank() || v.rank() != self.rank() {
            return Err(Error::MixedData);
        }
        let a = self.structure_constants()?;
        let ux = self.convert(u, Basis::X)?;
        let vx = self.convert(v, Basis::X)?;
        let mut out = SparseVec::new();
        for (j, cj) in ux.terms() {
            for (k, ck) in vx.terms() {
                let c = cj * ck;
                for (l, count) in a.row(j, k) {
                    out.axpy(&(&c * &Rational::from(count as i64)), &SparseVec::unit(l.0 as usize));
                }
            }
        }
        self.convert(&DescentVector::from_coeffs(Basis::X, self.rank(), out), u.basis())
    }

    /// `x_S`, the identity of `Σ(W)`, in the requested basis.
    pub fn identity(&self, basis: Basis) -> DescentVector {
        let n = self.rank();
        match basis {
            Basis::X | Basis::Y => DescentVector::basis_element(basis, n, self.datum.full_set()),
            Basis::E => DescentVector::from_pairs(Basis::E, n, Subset::all(n).map(|l| (l, Rational::ONE))),
        }
    }

    /// `e_λ = Σ_{L ∈ λ} e_L`.
    pub fn class_idempotent(&self, class: usize) -> DescentVector {
        let c = &self.classes.classes[class];
        DescentVector::from_pairs(Basis::E, self.rank(), c.members.iter().map(|&l| (l, Rational::ONE)))
    }

    /// `Σ_L (-1)^{|L|} e_L`.
    pub fn w0_vector(&self) -> DescentVector {
        let n = self.rank();
        DescentVector::from_pairs(
            Basis::E,
            n,
            Subset::all(n).map(|l| (l, if l.len() % 2 == 0 { Rational::ONE } else { -Rational::ONE })),
        )
    }

    /// Checks all three parts of the lemma on `Y_K ∩ X_L♯` for `L ⊆ K`.
    pub fn verify_lemma_ysharp(&self, k: Subset, l: Subset) -> Result<LemmaReport> {
        if !l.is_subset_of(k) {
            return Err(Error::Precondition(format!("{l:?} is not contained in {k:?}")));
        }
        let d = &self.datum;
        let full = d.full_set();
        let sharp = d.enumerate_x_sharp(l, &self.transport, self.gate)?;
        let count_in = |j: Subset| -> i64 { sharp.iter().filter(|(x, _)| d.left_descents(x).intersection(j).is_empty()).count() as i64 };
        let y_target = full.difference(k);
        let in_y: Vec<&GroupElement> = sharp.iter().map(|(x, _)| x).filter(|x| d.left_descents(x) == y_target).collect();
        let lhs = if k.len().is_multiple_of(2) { in_y.len() as i64 } else { -(in_y.len() as i64) };
        let rhs: i64 = full
            .difference(k)
            .subsets()
            .map(|e| {
                let j = k.union(e);
                let c = count_in(j);
                if j.len().is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .sum();
        let prefix_elt = d.mul(&d.longest_element(l), &d.longest_element(l.union(full.difference(k))));
        let mut counterexample = None;
        let mut prefix = true;
        for x in &in_y {
            if !d.is_prefix(&prefix_elt, x) {
                prefix = false;
                counterexample.get_or_insert_with(|| (*x).clone());
            }
        }
        let mut singleton = true;
        if k == l {
            let expected = d.mul(&d.longest_element(l), &d.longest_element(full));
            singleton = in_y.len() == 1 && *in_y[0] == expected;
            if !singleton && counterexample.is_none() {
                counterexample = in_y.first().map(|x| (*x).clone());
            }
        }
        Ok(LemmaReport { k, l, counting: lhs == rhs, prefix, singleton, counterexample })
    }

    /// Runs [`verify_lemma_ysharp`](Self::verify_lemma_ysharp) on every pair `L ⊆ K`.
    pub fn verify_lemma_ysharp_all(&self) -> Result<Vec<LemmaReport>> {
        let n = self.rank();
        let pairs: Vec<(Subset, Subset)> = Subset::all(n).flat_map(|k| k.subsets().map(move |l| (k, l))).collect();
        pairs.into_par_iter().map(|(k, l)| self.verify_lemma_ysharp(k, l)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: &str) -> DescentAlgebra {
        DescentAlgebra::from_label(t).unwrap()
    }

    fn s(d: &str) -> Subset {
        Subset::parse_digits(d).unwrap()
    }

    #[test]
    fn trivial_constants() {
        let a1 = alg("A1");
        assert_eq!(a1.structure_constant(s(""), s(""), s("")).unwrap(), 2);
        for t in ["A1", "I2(5)", "H3"] {
            let a = alg(t);
            let full = a.datum().full_set();
            assert_eq!(a.structure_constant(full, full, full).unwrap(), 1);
        }
    }

    #[test]
    fn counting_identity() {
        let a = alg("B3");
        let d = a.datum();
        let idx = |j: Subset| u64::try_from(d.parabolic_index(j)).unwrap();
        for j in Subset::all(3) {
            for k in Subset::all(3) {
                let lhs: u64 = a.structure_constants().unwrap().row(j, k).map(|(l, c)| c * idx(l)).sum();
                assert_eq!(lhs, idx(j) * idx(k));
            }
        }
    }

    #[test]
    fn m_matrix_both_formulas() {
        for t in ["I2(3)", "A3", "H3", "B3"] {
            let a = alg(t);
            let n = a.rank();
            let consts = a.structure_constants().unwrap();
            let m = a.m_matrix().unwrap();
            for k in Subset::all(n) {
                for l in Subset::all(n) {
                    let via_a: u64 = a.classes().get(l).members.iter().map(|&j| consts.get(j, k, l)).sum();
                    assert_eq!(m.get(k, l), via_a, "{t} {k:?} {l:?}");
                }
                assert!(m.get(k, k) > 0);
                let idx = u64::try_from(a.datum().parabolic_index(k)).unwrap();
                assert_eq!(m.get(k, Subset::EMPTY), idx);
            }
        }
    }

    #[test]
    fn y_and_x_round_trip() {
        let a = alg("I2(3)");
        let y_empty = DescentVector::basis_element(Basis::Y, 2, Subset::EMPTY);
        let x = a.y_to_x(&y_empty).unwrap();
        assert_eq!(x.to_string(), "x_{12} - x_{1} - x_{2} + x_{∅}");
        assert_eq!(a.x_to_y(&x).unwrap(), y_empty);
        let ys = DescentVector::basis_element(Basis::Y, 2, Subset::full(2));
        assert_eq!(a.y_to_x(&ys).unwrap(), DescentVector::basis_element(Basis::X, 2, Subset::full(2)));
    }

    #[test]
    fn identity_in_e_basis() {
        let a = alg("H3");
        let xs = DescentVector::basis_element(Basis::X, 3, Subset::full(3));
        assert_eq!(a.x_to_e(&xs).unwrap(), a.identity(Basis::E));
        let x_empty = DescentVector::basis_element(Basis::X, 3, Subset::EMPTY);
        let e = a.x_to_e(&x_empty).unwrap();
        assert_eq!(e, DescentVector::basis_element(Basis::E, 3, Subset::EMPTY).scale(&Rational::from(120i64)));
    }

    #[test]
    fn w0_vector_matches_y_empty() {
        for t in ["I2(4)", "I2(5)", "H3", "A3"] {
            let a = alg(t);
            let y = DescentVector::basis_element(Basis::Y, a.rank(), Subset::EMPTY);
            assert_eq!(a.convert(&y, Basis::E).unwrap(), a.w0_vector(), "{t}");
        }
    }

    #[test]
    fn idempotents_under_oracle() {
        for t in ["I2(3)", "I2(4)", "A3", "H3"] {
            let a = alg(t);
            let k = a.classes().len();
            for i in 0..k {
                let ei = a.class_idempotent(i);
                for j in 0..k {
                    let ej = a.class_idempotent(j);
                    let p = a.oracle_multiply(&ei, &ej).unwrap();
                    if i == j {
                        assert_eq!(p, ei, "{t}");
                    } else {
                        assert!(p.is_zero(), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_small_groups() {
        for t in ["H3", "I2(5)", "A3"] {
            let a = alg(t);
            assert!(a.verify_lemma_ysharp_all().unwrap().iter().all(|r| r.passed()), "{t}");
        }
        let a = alg("H3");
        assert!(matches!(a.verify_lemma_ysharp(s("1"), s("12")), Err(Error::Precondition(_))));
    }
}
