//! The ring ℤ[φ] with φ = (1 + √5)/2, used for exact H₃/H₄ root coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b·φ` where `φ² = φ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const PHI: GoldenInt = GoldenInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

/// Exact sign of `x` as a real number.
///
/// `a + bφ = ((2a + b) + b√5) / 2`, so with `p = 2a + b` and `q = b` the sign
/// is that of `p + q√5`. Mixed signs are settled by comparing `p²` with `5q²`,
/// which never tie because √5 is irrational.
pub fn golden_sign(x: GoldenInt) -> Ordering {
    let p = 2 * x.a as i128 + x.b as i128;
    let q = x.b as i128;
    match (p.cmp(&0), q.cmp(&0)) {
        (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
        (Ordering::Greater | Ordering::Equal, Ordering::Greater | Ordering::Equal) => {
            Ordering::Greater
        }
        (Ordering::Less | Ordering::Equal, Ordering::Less | Ordering::Equal) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => (p * p).cmp(&(5 * q * q)),
        (Ordering::Less, Ordering::Greater) => (5 * q * q).cmp(&(p * p)),
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    // (a + bφ)(c + dφ) = ac + (ad + bc)φ + bd(φ + 1)
    fn mul(self, o: GoldenInt) -> GoldenInt {
        let bd = self.b * o.b;
        GoldenInt::new(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        GoldenInt::new(a, 0)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) if b < 0 => write!(f, "{a}-{}φ", -b),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        assert_eq!(golden_sign(GoldenInt::new(0, 0)), Ordering::Equal);
        assert_eq!(golden_sign(GoldenInt::new(1, 0)), Ordering::Greater);
        // 5 - 3φ: 10 - 3 = 7 > 0, 49 > 45
        assert_eq!(golden_sign(GoldenInt::new(5, -3)), Ordering::Greater);
        // -2 + φ ≈ -0.382
        assert_eq!(golden_sign(GoldenInt::new(-2, 1)), Ordering::Less);
        // -1 + φ = 1/φ
        assert_eq!(golden_sign(GoldenInt::new(-1, 1)), Ordering::Greater);
        assert_eq!(golden_sign(GoldenInt::new(2, -1)), Ordering::Greater);
    }

    #[test]
    fn phi_squared() {
        assert_eq!(GoldenInt::PHI * GoldenInt::PHI, GoldenInt::PHI + GoldenInt::ONE);
    }
}
