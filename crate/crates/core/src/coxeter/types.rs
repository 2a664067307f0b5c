use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// A finite irreducible Coxeter type with a fixed generator numbering.
///
/// Numbering of the diagrams:
///
/// ```text
/// A_n   1 - 2 - … - n
/// B_n   1 = 2 - 3 - … - n
/// D_n   1, 2 both attached to 3, then 3 - 4 - … - n
/// E_n   1 - 3 - 4 - 5 - … - n, with 2 attached to 4
/// F_4   1 - 2 = 3 - 4
/// H_n   1 -5- 2 - 3 (- 4)
/// I2(m) 1 -m- 2
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// `m` for `I2(m)`, otherwise `None`.
    pub dihedral_order: Option<u32>,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let t = CoxeterType { family, rank, dihedral_order: None };
        t.validate()?;
        Ok(t)
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        let t = CoxeterType { family: Family::I2, rank: 2, dihedral_order: Some(m) };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.family {
            Family::A => (1..=7).contains(&self.rank),
            Family::B => (2..=7).contains(&self.rank),
            Family::D => (4..=7).contains(&self.rank),
            Family::E => (6..=8).contains(&self.rank),
            Family::F => self.rank == 4,
            Family::H => (3..=4).contains(&self.rank),
            Family::I2 => self.rank == 2 && self.dihedral_order.is_some_and(|m| (3..=32767).contains(&m)),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// Coxeter matrix entry `m_ij` for 0-based generators.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        // 1-based labels
        let (a, b) = (i + 1, j + 1);
        match self.family {
            Family::A => {
                if b == a + 1 {
                    3
                } else {
                    2
                }
            }
            Family::B => match (a, b) {
                (1, 2) => 4,
                _ if b == a + 1 => 3,
                _ => 2,
            },
            Family::D => match (a, b) {
                (1, 3) | (2, 3) => 3,
                (1, 2) => 2,
                _ if a >= 3 && b == a + 1 => 3,
                _ => 2,
            },
            Family::E => match (a, b) {
                (1, 3) | (3, 4) | (2, 4) => 3,
                _ if a >= 4 && b == a + 1 => 3,
                _ => 2,
            },
            Family::F => match (a, b) {
                (1, 2) | (3, 4) => 3,
                (2, 3) => 4,
                _ => 2,
            },
            Family::H => match (a, b) {
                (1, 2) => 5,
                _ if b == a + 1 => 3,
                _ => 2,
            },
            Family::I2 => self.dihedral_order.unwrap(),
        }
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| self.coxeter_entry(i, j)).collect()).collect()
    }

    /// Known group order, used as an independent cross-check.
    pub fn known_order(&self) -> u128 {
        fn fact(n: u128) -> u128 {
            (1..=n).product()
        }
        let n = self.rank as u128;
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::H => {
                if n == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I2 => 2 * self.dihedral_order.unwrap() as u128,
        }
    }

    /// Known number of positive roots.
    pub fn known_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::H => {
                if n == 3 {
                    15
                } else {
                    60
                }
            }
            Family::I2 => self.dihedral_order.unwrap() as usize,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.dihedral_order.unwrap_or(0)),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::ParseType(s.to_string());
        if let Some(rest) = t.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            if m.is_empty() || !m.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let m: u32 = m.parse().map_err(|_| bad())?;
            return CoxeterType::dihedral(m);
        }
        let mut chars = t.chars();
        let fam = match chars.next().ok_or_else(bad)? {
            'A' => Family::A,
            'B' => Family::B,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'H' => Family::H,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        CoxeterType::new(fam, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["A3", "B7", "D4", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(12)"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(matches!("I2(2)".parse::<CoxeterType>(), Err(Error::UnsupportedType(_))));
        assert!(matches!("E9".parse::<CoxeterType>(), Err(Error::UnsupportedType(_))));
        assert!(matches!("G2".parse::<CoxeterType>(), Err(Error::ParseType(_))));
        assert!(matches!("I2(x)".parse::<CoxeterType>(), Err(Error::ParseType(_))));
        assert!(matches!("A".parse::<CoxeterType>(), Err(Error::ParseType(_))));
    }

    #[test]
    fn e_series_branch_node_is_two() {
        let e6: CoxeterType = "E6".parse().unwrap();
        assert_eq!(e6.coxeter_entry(1, 3), 3); // 2 - 4
        assert_eq!(e6.coxeter_entry(0, 2), 3); // 1 - 3
        assert_eq!(e6.coxeter_entry(1, 2), 2); // 2, 3 commute
        assert_eq!(e6.coxeter_entry(2, 3), 3); // 3 - 4
    }
}
