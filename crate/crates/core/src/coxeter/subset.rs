use std::cmp::Ordering;
use std::fmt;

/// A subset of the generating set `S = {1, …, n}`, stored as a bitmask with
/// bit `i` standing for generator `i + 1`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set `{1, …, n}`.
    pub fn full(n: usize) -> Subset {
        Subset(((1u32 << n) - 1) as u16)
    }

    /// Builds a subset from 1-based generator labels.
    pub fn from_labels(labels: &[usize]) -> Subset {
        let mut m = 0u16;
        for &l in labels {
            assert!((1..=16).contains(&l), "generator label out of range");
            m |= 1 << (l - 1);
        }
        Subset(m)
    }

    /// Parses a digit string such as `"1245"`; `""` and `"∅"` give the empty set.
    pub fn parse_digits(s: &str) -> Option<Subset> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Some(Subset::EMPTY);
        }
        let mut m = 0u16;
        for c in s.chars() {
            let d = c.to_digit(10)? as usize;
            if d == 0 {
                return None;
            }
            m |= 1 << (d - 1);
        }
        Some(Subset(m))
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    /// 0-based generator indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..16).filter(move |i| m & (1 << i) != 0)
    }

    /// All subsets of `{0..n}` as bitmasks `0 .. 2^n`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u32 << n)).map(|m| Subset(m as u16))
    }

    /// Subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur: Option<u16> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(((c | !full).wrapping_add(1)) & full) };
            Some(Subset(c))
        })
    }

    /// Digit string of 1-based labels, e.g. `"1245"`; empty for `∅`.
    pub fn digits(self) -> String {
        self.iter().map(|i| char::from_digit((i + 1) as u32, 10).unwrap_or('?')).collect()
    }

    /// Label in table style: `∅`, `S`, `S_i` for `S ∖ {i}`, or a digit string.
    pub fn label(self, n: usize) -> String {
        let full = Subset::full(n);
        if self.is_empty() {
            "∅".to_string()
        } else if self == full {
            "S".to_string()
        } else if n >= 3 && self.len() == n - 1 {
            let missing = full.difference(self).iter().next().unwrap();
            format!("S_{}", missing + 1)
        } else {
            self.digits()
        }
    }

    /// Compares by digit strings, so `"123" < "13" < "2"`.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.digits())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", self.digits())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(Subset::from_labels(&[1, 2, 4, 5]).digits(), "1245");
        assert_eq!(Subset::full(6).label(6), "S");
        assert_eq!(Subset::full(6).remove(3).label(6), "S_4");
        assert_eq!(Subset::EMPTY.label(3), "∅");
        assert_eq!(Subset::parse_digits("134"), Some(Subset::from_labels(&[1, 3, 4])));
        assert_eq!(Subset::parse_digits("∅"), Some(Subset::EMPTY));
    }

    #[test]
    fn lex_order_is_digit_order() {
        let a = Subset::parse_digits("123").unwrap();
        let b = Subset::parse_digits("13").unwrap();
        let c = Subset::parse_digits("2").unwrap();
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(c), Ordering::Less);
        assert_eq!(Subset::EMPTY.lex_cmp(c), Ordering::Less);
    }

    #[test]
    fn subsets_enumeration() {
        let s = Subset::parse_digits("135").unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
    }
}
