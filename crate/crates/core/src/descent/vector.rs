use std::cmp::Ordering;
use std::fmt;

use crate::coxeter::Subset;
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

/// Which of the three bases of `Σ(W)` a vector is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    X,
    Y,
    E,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::X => 'x',
            Basis::Y => 'y',
            Basis::E => 'e',
        }
    }
}

/// An element of `Σ(W)` as coefficients on the subsets of `S`.
///
/// Coordinates are indexed by subset bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct DescentVector {
    basis: Basis,
    rank: usize,
    coeffs: SparseVec,
}

impl DescentVector {
    pub fn zero(basis: Basis, rank: usize) -> Self {
        DescentVector { basis, rank, coeffs: SparseVec::new() }
    }

    /// The basis vector `x_J`, `y_J` or `e_J`.
    pub fn basis_element(basis: Basis, rank: usize, j: Subset) -> Self {
        DescentVector { basis, rank, coeffs: SparseVec::unit(j.0 as usize) }
    }

    pub fn from_coeffs(basis: Basis, rank: usize, coeffs: SparseVec) -> Self {
        debug_assert!(coeffs.max_index().is_none_or(|m| m < 1 << rank));
        DescentVector { basis, rank, coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Subset, Rational)>>(basis: Basis, rank: usize, pairs: I) -> Self {
        let coeffs = SparseVec::from_pairs(pairs.into_iter().map(|(j, c)| (j.0 as usize, c)));
        DescentVector::from_coeffs(basis, rank, coeffs)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> SparseVec {
        self.coeffs
    }

    pub fn get(&self, j: Subset) -> Rational {
        self.coeffs.get(j.0 as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Nonzero terms as `(J, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &Rational)> + '_ {
        self.coeffs.iter().map(|(i, c)| (Subset(i as u16), c))
    }

    pub(crate) fn expect(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { expected: basis.symbol(), found: self.basis.symbol() })
        }
    }

    fn compatible(&self, other: &DescentVector) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::MixedData);
        }
        other.expect(self.basis)
    }

    pub fn add(&self, other: &DescentVector) -> Result<DescentVector> {
        self.compatible(other)?;
        Ok(DescentVector { coeffs: self.coeffs.add(&other.coeffs), ..self.clone() })
    }

    pub fn sub(&self, other: &DescentVector) -> Result<DescentVector> {
        self.compatible(other)?;
        Ok(DescentVector { coeffs: self.coeffs.sub(&other.coeffs), ..self.clone() })
    }

    pub fn scale(&self, c: &Rational) -> DescentVector {
        DescentVector { coeffs: self.coeffs.scale(c), ..self.clone() }
    }
}

/// Subsets of `{1..n}` by decreasing size, ties in digit order.
pub fn subset_order(n: usize) -> Vec<Subset> {
    let mut v: Vec<Subset> = Subset::all(n).collect();
    v.sort_by(|a, b| compare_subsets(*a, *b));
    v
}

pub fn compare_subsets(a: Subset, b: Subset) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.lex_cmp(b))
}

impl fmt::Display for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Subset, &Rational)> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by(|a, b| compare_subsets(a.0, b.0));
        let sym = self.basis.symbol();
        for (k, (j, c)) in terms.into_iter().enumerate() {
            let neg = c.signum() < 0;
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "{sym}_{{{j}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let v = DescentVector::from_pairs(
            Basis::X,
            3,
            [
                (Subset::EMPTY, Rational::new(1, 2)),
                (Subset::parse_digits("13").unwrap(), Rational::from_int(-2)),
                (Subset::full(3), Rational::ONE),
            ],
        );
        assert_eq!(v.to_string(), "x_{123} - 2·x_{13} + 1/2·x_{∅}");
        assert_eq!(DescentVector::zero(Basis::E, 2).to_string(), "0");
    }

    #[test]
    fn mismatched_bases() {
        let a = DescentVector::basis_element(Basis::X, 2, Subset::EMPTY);
        let b = DescentVector::basis_element(Basis::Y, 2, Subset::EMPTY);
        assert_eq!(a.add(&b), Err(Error::BasisMismatch { expected: 'x', found: 'y' }));
    }

    #[test]
    fn ordering() {
        let o = subset_order(3);
        assert_eq!(o[0], Subset::full(3));
        assert_eq!(o[7], Subset::EMPTY);
        assert_eq!(o[1].digits(), "12");
    }
}
