//! Elements of `ℚW` as explicit sums, for checking `Σ(W)` against the group
//! algebra on small groups.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::algebra::DescentAlgebra;
use super::vector::{Basis, DescentVector};
use crate::coxeter::{CoxeterDatum, GroupElement, Subset};
use crate::error::Result;
use crate::linalg::{rank, Rational, SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, g: GroupElement, c: &Rational) {
        match self.terms.entry(g) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Convolution product in `ℚW`.
    pub fn mul(&self, other: &Self, datum: &CoxeterDatum) -> Self {
        let mut acc: BTreeMap<GroupElement, Rational> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                *acc.entry(datum.mul(g, h)).or_insert(Rational::ZERO) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement { terms: acc }
    }
}

impl DescentAlgebra {
    /// `Σ(W) → ℚW`, with `x_J = Σ X_J⁻¹` and `y_K = Σ Y_K⁻¹`.
    pub fn expand(&self, v: &DescentVector) -> Result<GroupAlgebraElement> {
        let d = self.datum();
        let (basis, v) = match v.basis() {
            Basis::E => (Basis::X, self.e_to_x(v)?),
            b => (b, v.clone()),
        };
        let mut out = GroupAlgebraElement::zero();
        for (j, c) in v.terms() {
            let elements = match basis {
                Basis::X => d.enumerate_x(j, self.gate())?,
                _ => d.enumerate_y(j, self.gate())?,
            };
            for x in elements {
                out.add_term(d.inv(&x), c);
            }
        }
        Ok(out)
    }

    /// Rank of `{y_K}` in `ℚW`.
    ///
    /// Each group element lies in exactly one descent class, so every column
    /// of the coefficient matrix has a single nonzero entry and the rank is
    /// the number of nonempty classes. Streams `W` once.
    pub fn y_basis_rank(&self) -> Result<usize> {
        let d = self.datum();
        let full = d.full_set();
        let mut count = vec![0u64; self.dimension()];
        d.for_each_x(Subset::EMPTY, self.gate(), |w| {
            // w⁻¹ ∈ Y_K exactly when D(w⁻¹) = S ∖ K, i.e. K = S ∖ R(w)
            count[full.difference(d.right_descents(w)).0 as usize] += 1;
        })?;
        Ok(count.iter().filter(|&&c| c > 0).count())
    }

    /// Rank of `{y_K}` by row reduction on the full coefficient matrix.
    pub fn y_basis_rank_dense(&self) -> Result<usize> {
        let d = self.datum();
        let elements = d.elements(self.gate())?;
        let index: BTreeMap<&GroupElement, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let rows = Subset::all(self.rank())
            .map(|k| {
                let y = self.expand(&DescentVector::basis_element(Basis::Y, self.rank(), k))?;
                Ok(SparseVec::from_pairs(y.terms().map(|(g, c)| (index[g], c.clone()))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(rank(&SparseMatrix::from_rows(elements.len(), rows)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_empty_is_longest_element() {
        let a = DescentAlgebra::from_label("I2(3)").unwrap();
        let y = a.expand(&DescentVector::basis_element(Basis::Y, 2, Subset::EMPTY)).unwrap();
        let w0 = a.datum().longest_element(a.datum().full_set());
        assert_eq!(y.terms().collect::<Vec<_>>(), vec![(&w0, &Rational::ONE)]);
        let x = a.expand(&a.y_to_x(&DescentVector::basis_element(Basis::Y, 2, Subset::EMPTY)).unwrap()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn oracle_matches_convolution() {
        for t in ["I2(3)", "A3", "H3"] {
            let a = DescentAlgebra::from_label(t).unwrap();
            let n = a.rank();
            for j in Subset::all(n) {
                for k in Subset::all(n) {
                    let xj = DescentVector::basis_element(Basis::X, n, j);
                    let xk = DescentVector::basis_element(Basis::X, n, k);
                    let lhs = a.expand(&xj).unwrap().mul(&a.expand(&xk).unwrap(), a.datum());
                    let rhs = a.expand(&a.oracle_multiply(&xj, &xk).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{t} {j:?} {k:?}");
                }
            }
        }
    }

    #[test]
    fn y_rank_both_ways() {
        for t in ["A3", "H3", "I2(8)"] {
            let a = DescentAlgebra::from_label(t).unwrap();
            assert_eq!(a.y_basis_rank().unwrap(), a.dimension());
            assert_eq!(a.y_basis_rank_dense().unwrap(), a.dimension());
        }
    }
}
