use std::cmp::Ordering;
use std::fmt;

use crate::coxeter::{Subset, TransportTable};
use crate::error::{Error, Result};

/// A path `(L; s, t, …)` in the Hasse diagram of `P(S)`: start at `L` and
/// delete `s`, then `t`, and so on. Generators are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetPath {
    pub source: Subset,
    pub deletions: Vec<u8>,
}

/// `SubsetPath` packed into one word: 16 bits of source, 4 bits of length,
/// then 4 bits per deletion.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathKey(pub u64);

impl PathKey {
    pub fn source(self) -> Subset {
        Subset(self.0 as u16)
    }

    pub fn len(self) -> usize {
        ((self.0 >> 16) & 0xf) as usize
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn deletion(self, i: usize) -> usize {
        ((self.0 >> (20 + 4 * i)) & 0xf) as usize
    }

    pub fn terminal(self) -> Subset {
        (0..self.len()).fold(self.source(), |l, i| l.remove(self.deletion(i)))
    }

    fn pack(source: Subset, dels: impl Iterator<Item = usize>) -> PathKey {
        let mut k = source.0 as u64;
        let mut len = 0;
        for (i, s) in dels.enumerate() {
            k |= (s as u64) << (20 + 4 * i);
            len += 1;
        }
        PathKey(k | (len as u64) << 16)
    }

    /// `(L; s, t, …) ↦ (L_s; t, …)`.
    pub fn tail(self) -> PathKey {
        let n = self.len();
        let s = self.deletion(0);
        PathKey::pack(self.source().remove(s), (1..n).map(|i| self.deletion(i)))
    }

    /// First `k` deletions.
    pub fn prefix(self, k: usize) -> PathKey {
        PathKey::pack(self.source(), (0..k).map(|i| self.deletion(i)))
    }

    /// Deletions from position `k` on, starting where the prefix ends.
    pub fn suffix(self, k: usize) -> PathKey {
        let start = (0..k).fold(self.source(), |l, i| l.remove(self.deletion(i)));
        PathKey::pack(start, (k..self.len()).map(|i| self.deletion(i)))
    }

    /// `p.r = (L^d; s^d, t^d, …)` with `d = w_L w_{L ∪ {r}}`.
    pub fn act(self, r: usize, table: &TransportTable) -> PathKey {
        let l = self.source();
        if l.contains(r) {
            return self;
        }
        let step = table.get(l, r);
        PathKey::pack(step.image, (0..self.len()).map(|i| step.conj[self.deletion(i)] as usize))
    }
}

impl SubsetPath {
    /// Checks that every deletion removes a current member.
    pub fn new(source: Subset, deletions: Vec<u8>) -> Result<Self> {
        let mut cur = source;
        for &s in &deletions {
            if !cur.contains(s as usize) {
                return Err(Error::Precondition(format!("{} is not in the current subset {cur}", s + 1)));
            }
            cur = cur.remove(s as usize);
        }
        Ok(SubsetPath { source, deletions })
    }

    /// Parses `"123;12"`, `"S;41"` or `"S_4;16"` (1-based, as printed).
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed path {s:?}"));
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (src, dels) = s.split_once(';').unwrap_or((s, ""));
        let src = src.trim();
        let full = Subset::full(n);
        let source = if src == "S" {
            full
        } else if let Some(i) = src.strip_prefix("S_") {
            let i: usize = i.parse().map_err(|_| bad())?;
            full.remove(i.checked_sub(1).ok_or_else(bad)?)
        } else {
            Subset::parse_digits(src).ok_or_else(bad)?
        };
        let deletions = dels
            .trim()
            .chars()
            .map(|c| c.to_digit(10).filter(|&d| d >= 1).map(|d| (d - 1) as u8).ok_or_else(bad))
            .collect::<Result<Vec<u8>>>()?;
        SubsetPath::new(source, deletions)
    }

    pub fn len(&self) -> usize {
        self.deletions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deletions.is_empty()
    }

    pub fn terminal(&self) -> Subset {
        self.deletions.iter().fold(self.source, |l, &s| l.remove(s as usize))
    }

    pub fn key(&self) -> PathKey {
        PathKey::pack(self.source, self.deletions.iter().map(|&s| s as usize))
    }

    pub fn from_key(k: PathKey) -> Self {
        SubsetPath { source: k.source(), deletions: (0..k.len()).map(|i| k.deletion(i) as u8).collect() }
    }

    pub fn act(&self, r: usize, table: &TransportTable) -> SubsetPath {
        SubsetPath::from_key(self.key().act(r, table))
    }

    /// `(L; s, …) ∘ (L'; t, …)` when the first ends at `L'`.
    pub fn concat(&self, other: &SubsetPath) -> Option<SubsetPath> {
        (self.terminal() == other.source).then(|| {
            let mut d = self.deletions.clone();
            d.extend_from_slice(&other.deletions);
            SubsetPath { source: self.source, deletions: d }
        })
    }

    /// Source in digit order, then deletion sequence.
    pub fn label_cmp(&self, other: &SubsetPath) -> Ordering {
        self.source.lex_cmp(other.source).then_with(|| self.deletions.cmp(&other.deletions))
    }

    /// Table style, e.g. `[12356;16]`, `[S;41]`, or `[13]` for length 0.
    pub fn label(&self, n: usize) -> String {
        let src = self.source.label(n);
        if self.deletions.is_empty() {
            format!("[{src}]")
        } else {
            let d: String = self.deletions.iter().map(|&s| char::from_digit(s as u32 + 1, 10).unwrap()).collect();
            format!("[{src};{d}]")
        }
    }
}

impl fmt::Debug for SubsetPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: String = self.deletions.iter().map(|&s| char::from_digit(s as u32 + 1, 10).unwrap_or('?')).collect();
        write!(f, "({}; {})", self.source, d)
    }
}

/// `δ(L; s, t, …) = (L_s; t, …) − (L_s; t, …).s`, as `(plus, minus)`.
pub fn delta(p: &SubsetPath, table: &TransportTable) -> Result<(SubsetPath, SubsetPath)> {
    if p.is_empty() {
        return Err(Error::Precondition("δ needs a path of positive length".into()));
    }
    let k = p.key();
    let q = k.tail();
    Ok((SubsetPath::from_key(q), SubsetPath::from_key(q.act(k.deletion(0), table))))
}

/// All paths out of `l`, shortest first.
pub fn paths_from(l: Subset) -> Vec<PathKey> {
    let mut out = vec![PathKey::pack(l, std::iter::empty())];
    let mut k = 0;
    while k < out.len() {
        let p = out[k];
        for s in p.terminal().iter() {
            let n = p.len();
            out.push(PathKey(p.0 & !(0xf << 16) | ((n as u64 + 1) << 16) | (s as u64) << (20 + 4 * n)));
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterDatum;

    #[test]
    fn key_round_trip() {
        let p = SubsetPath::new(Subset::parse_digits("12356").unwrap(), vec![0, 5]).unwrap();
        let k = p.key();
        assert_eq!(k.len(), 2);
        assert_eq!(SubsetPath::from_key(k), p);
        assert_eq!(k.terminal(), Subset::parse_digits("235").unwrap());
        assert_eq!(p.label(6), "[S_4;16]");
        assert_eq!(SubsetPath::parse("[S_4;16]", 6).unwrap(), p);
        assert_eq!(SubsetPath::parse("12356;16", 6).unwrap(), p);
        assert_eq!(k.prefix(1).suffix(0), k.prefix(1));
        assert_eq!(k.suffix(1), SubsetPath::new(Subset::parse_digits("2356").unwrap(), vec![5]).unwrap().key());
    }

    #[test]
    fn invalid_paths() {
        assert!(SubsetPath::new(Subset::parse_digits("12").unwrap(), vec![2]).is_err());
        assert!(SubsetPath::new(Subset::parse_digits("12").unwrap(), vec![0, 0]).is_err());
    }

    #[test]
    fn action_with_r_in_source_is_trivial() {
        let d = CoxeterDatum::from_label("H3").unwrap();
        let t = TransportTable::new(&d);
        let p = SubsetPath::parse("123;12", 3).unwrap();
        assert_eq!(p.act(1, &t), p);
        let v = SubsetPath::parse("13", 3).unwrap();
        assert_eq!(v.act(1, &t).source, t.act(v.source, 1));
    }

    #[test]
    fn delta_examples() {
        let d = CoxeterDatum::from_label("A1").unwrap();
        let t = TransportTable::new(&d);
        let (a, b) = delta(&SubsetPath::parse("1;1", 1).unwrap(), &t).unwrap();
        assert_eq!(a, b);
        assert!(delta(&SubsetPath::parse("1", 1).unwrap(), &t).is_err());

        let d = CoxeterDatum::from_label("H3").unwrap();
        let t = TransportTable::new(&d);
        let (a, b) = delta(&SubsetPath::parse("123;1", 3).unwrap(), &t).unwrap();
        assert_eq!(a.source, Subset::parse_digits("23").unwrap());
        let (dd, img) = d.transporter(Subset::parse_digits("23").unwrap(), 0);
        assert_eq!(dd, d.mul(&d.longest_element(a.source), &d.longest_element(d.full_set())));
        assert_eq!(b.source, img);
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn path_counts() {
        // Σ_k 3!/(3-k)! = 1 + 3 + 6 + 6
        assert_eq!(paths_from(Subset::full(3)).len(), 16);
        assert_eq!(paths_from(Subset::EMPTY).len(), 1);
    }
}
