//! Root systems and group elements as signed permutations of the roots.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigUint;

use super::{CoxeterType, Family, Subset};
use crate::error::{Error, Result};
use crate::linalg::{golden_sign, GoldenInt};

static NEXT_DATUM_ID: AtomicU64 = AtomicU64::new(1);

/// Exact root coordinates in the basis of simple roots (positive roots only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCoordinates {
    Integer(Vec<Vec<i64>>),
    Golden(Vec<Vec<GoldenInt>>),
    /// `I2(m)`: root `k` sits at angle `kπ/m`; no coordinates are needed.
    Circle { m: u32 },
}

/// An element of `W`, stored as the images of the positive roots.
///
/// Root indices `0..N` are the positive roots (simple roots first), and
/// `N + i` is the negative of root `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    images: Box<[u16]>,
}

impl GroupElement {
    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupElement{:?}", self.images)
    }
}

/// Immutable context for one finite Coxeter group.
#[derive(Debug, Clone)]
pub struct CoxeterDatum {
    id: u64,
    ctype: CoxeterType,
    n: usize,
    coxeter_matrix: Vec<Vec<u32>>,
    roots: RootCoordinates,
    npos: usize,
    simple: Vec<GroupElement>,
    group_order: BigUint,
}

trait RootScalar: Copy + Eq + Hash + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn zero() -> Self;
    fn sign(self) -> Ordering;
}

impl RootScalar for i64 {
    fn zero() -> Self {
        0
    }
    fn sign(self) -> Ordering {
        self.cmp(&0)
    }
}

impl RootScalar for GoldenInt {
    fn zero() -> Self {
        GoldenInt::ZERO
    }
    fn sign(self) -> Ordering {
        golden_sign(self)
    }
}

/// Positive roots by closure from the simple roots, with `s_i(α_j) = α_j − a_ij α_i`.
fn positive_roots<T: RootScalar>(cartan: &[Vec<T>], one: T) -> Vec<Vec<T>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { one } else { T::zero() }).collect())
        .collect();
    let mut seen: HashMap<Vec<T>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut k = 0;
    while k < roots.len() {
        for i in 0..n {
            let beta = roots[k].clone();
            let pairing = (0..n).fold(T::zero(), |acc, j| acc + cartan[i][j] * beta[j]);
            if pairing == T::zero() {
                continue;
            }
            let mut gamma = beta;
            gamma[i] = gamma[i] - pairing;
            let positive = gamma.iter().all(|c| c.sign() != Ordering::Less);
            if positive && !seen.contains_key(&gamma) {
                seen.insert(gamma.clone(), roots.len());
                roots.push(gamma);
            }
        }
        k += 1;
    }
    roots
}

/// Simple reflections as permutations of `0..2N`.
fn simple_permutations<T: RootScalar>(cartan: &[Vec<T>], pos: &[Vec<T>]) -> Vec<Vec<u16>> {
    let n = cartan.len();
    let npos = pos.len();
    let index: HashMap<&Vec<T>, usize> = pos.iter().enumerate().map(|(i, r)| (r, i)).collect();
    (0..n)
        .map(|i| {
            (0..npos)
                .map(|k| {
                    let beta = &pos[k];
                    let pairing = (0..n).fold(T::zero(), |acc, j| acc + cartan[i][j] * beta[j]);
                    let mut gamma = beta.clone();
                    gamma[i] = gamma[i] - pairing;
                    if let Some(&idx) = index.get(&gamma) {
                        idx as u16
                    } else {
                        let neg: Vec<T> = gamma.iter().map(|&c| -c).collect();
                        (index[&neg] + npos) as u16
                    }
                })
                .collect()
        })
        .collect()
}

impl CoxeterDatum {
    /// Builds the root system and simple reflections for `t`.
    pub fn new(t: CoxeterType) -> Result<Self> {
        let n = t.rank;
        let cm = t.coxeter_matrix();
        let (roots, simple_images): (RootCoordinates, Vec<Vec<u16>>) = match t.family {
            Family::I2 => {
                let m = t.dihedral_order.unwrap() as i64;
                // s1: k ↦ m − k, s2: k ↦ m − 2 − k (mod 2m); positive roots are 0..m.
                let refl = |k: i64, shift: i64| -> u16 { (shift - k).rem_euclid(2 * m) as u16 };
                let s1 = (0..m).map(|k| refl(k, m)).collect();
                let s2 = (0..m).map(|k| refl(k, m - 2)).collect();
                // Simple roots are α1 = root 0 and α2 = root m − 1; move α2 to index 1.
                let perm = circle_relabel(m as usize);
                let relabel = |v: Vec<u16>| -> Vec<u16> {
                    let mut out = vec![0u16; m as usize];
                    for k in 0..m as usize {
                        let img = v[k] as usize;
                        let (base, neg) = if img < m as usize { (img, false) } else { (img - m as usize, true) };
                        let t = perm[base] + if neg { m as usize } else { 0 };
                        out[perm[k]] = t as u16;
                    }
                    out
                };
                (RootCoordinates::Circle { m: m as u32 }, vec![relabel(s1), relabel(s2)])
            }
            Family::H => {
                let phi = GoldenInt::PHI;
                let cartan: Vec<Vec<GoldenInt>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| match cm[i][j] {
                                1 => GoldenInt::new(2, 0),
                                2 => GoldenInt::ZERO,
                                3 => GoldenInt::new(-1, 0),
                                5 => -phi,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                let pos = positive_roots(&cartan, GoldenInt::ONE);
                let perms = simple_permutations(&cartan, &pos);
                (RootCoordinates::Golden(pos), perms)
            }
            _ => {
                let cartan: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| match cm[i][j] {
                                1 => 2,
                                2 => 0,
                                3 => -1,
                                // a_ij · a_ji = 2 for a double bond
                                4 => {
                                    if i < j {
                                        -2
                                    } else {
                                        -1
                                    }
                                }
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                let pos = positive_roots(&cartan, 1i64);
                let perms = simple_permutations(&cartan, &pos);
                (RootCoordinates::Integer(pos), perms)
            }
        };
        let npos = simple_images[0].len();
        let mut d = CoxeterDatum {
            id: NEXT_DATUM_ID.fetch_add(1, AtomicOrdering::Relaxed),
            ctype: t,
            n,
            coxeter_matrix: cm,
            roots,
            npos,
            simple: simple_images.into_iter().map(|v| GroupElement { images: v.into_boxed_slice() }).collect(),
            group_order: BigUint::from(0u32),
        };
        d.group_order = d.compute_order();
        Ok(d)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        CoxeterDatum::new(label.parse()?)
    }

    /// Identifier distinguishing separately built data.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    /// Rank `|S|`.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn roots(&self) -> &RootCoordinates {
        &self.roots
    }

    /// Number of positive roots `N`.
    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    pub fn group_order_u128(&self) -> u128 {
        u128::try_from(&self.group_order).unwrap_or(u128::MAX)
    }

    #[inline]
    fn negate(&self, k: usize) -> usize {
        if k < self.npos {
            k + self.npos
        } else {
            k - self.npos
        }
    }

    /// Image of root index `k` under `w`.
    #[inline]
    pub fn apply(&self, w: &GroupElement, k: usize) -> usize {
        if k < self.npos {
            w.images[k] as usize
        } else {
            self.negate(w.images[k - self.npos] as usize)
        }
    }

    pub fn is_negative_root(&self, k: usize) -> bool {
        k >= self.npos
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { images: (0..self.npos as u16).collect() }
    }

    pub fn simple_reflection(&self, s: usize) -> &GroupElement {
        &self.simple[s]
    }

    fn check(&self, w: &GroupElement) -> Result<()> {
        if w.images.len() == self.npos {
            Ok(())
        } else {
            Err(Error::MixedData)
        }
    }

    /// `u · v` (apply `v` first).
    pub fn multiply(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &GroupElement, v: &GroupElement) -> GroupElement {
        GroupElement { images: v.images.iter().map(|&k| self.apply(u, k as usize) as u16).collect() }
    }

    pub fn invert(&self, w: &GroupElement) -> Result<GroupElement> {
        self.check(w)?;
        Ok(self.inv(w))
    }

    pub(crate) fn inv(&self, w: &GroupElement) -> GroupElement {
        let mut out = vec![0u16; self.npos];
        for (i, &img) in w.images.iter().enumerate() {
            let img = img as usize;
            if img < self.npos {
                out[img] = i as u16;
            } else {
                out[img - self.npos] = (i + self.npos) as u16;
            }
        }
        GroupElement { images: out.into_boxed_slice() }
    }

    /// `s · w`.
    pub fn left_mul_simple(&self, s: usize, w: &GroupElement) -> GroupElement {
        self.mul(&self.simple[s], w)
    }

    /// `w · s`.
    pub fn right_mul_simple(&self, w: &GroupElement, s: usize) -> GroupElement {
        self.mul(w, &self.simple[s])
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &GroupElement) -> usize {
        w.images.iter().filter(|&&k| k as usize >= self.npos).count()
    }

    /// `D(w) = {s : ℓ(sw) < ℓ(w)} = {s : w⁻¹(α_s) < 0}`.
    pub fn left_descents(&self, w: &GroupElement) -> Subset {
        let lo = self.npos;
        let hi = self.npos + self.n;
        let mut m = 0u16;
        for &k in w.images.iter() {
            let k = k as usize;
            if k >= lo && k < hi {
                m |= 1 << (k - lo);
            }
        }
        Subset(m)
    }

    /// `{s : ℓ(ws) < ℓ(w)} = {s : w(α_s) < 0}`.
    pub fn right_descents(&self, w: &GroupElement) -> Subset {
        let mut m = 0u16;
        for s in 0..self.n {
            if w.images[s] as usize >= self.npos {
                m |= 1 << s;
            }
        }
        Subset(m)
    }

    /// If `w(α_s)` is a simple root, its generator index.
    pub fn simple_image(&self, w: &GroupElement, s: usize) -> Option<usize> {
        let k = w.images[s] as usize;
        (k < self.n).then_some(k)
    }

    /// Longest element `w_J` of the parabolic subgroup `W_J`, built greedily by
    /// left-multiplying with generators of `J` that are not yet descents.
    pub fn longest_element(&self, j: Subset) -> GroupElement {
        let mut w = self.identity();
        loop {
            let d = self.left_descents(&w);
            match j.difference(d).iter().next() {
                Some(s) => w = self.left_mul_simple(s, &w),
                None => return w,
            }
        }
    }

    /// Whether `w` is a minimal length coset representative in `W_J w`.
    pub fn is_min_coset_rep(&self, w: &GroupElement, j: Subset) -> bool {
        self.left_descents(w).intersection(j).is_empty()
    }

    /// `u ≤ w` in the prefix (weak) order: `ℓ(u⁻¹w) = ℓ(w) − ℓ(u)`.
    pub fn is_prefix(&self, u: &GroupElement, w: &GroupElement) -> bool {
        let lu = self.length(u);
        let lw = self.length(w);
        lu <= lw && self.length(&self.mul(&self.inv(u), w)) == lw - lu
    }

    /// `J^x = x⁻¹ J x`, if it is a subset of `S`.
    pub fn conjugate_subset(&self, j: Subset, x: &GroupElement) -> Option<Subset> {
        let xinv = self.inv(x);
        let mut m = Subset::EMPTY;
        for s in j.iter() {
            let mut k = xinv.images[s] as usize;
            if k >= self.npos {
                k -= self.npos;
            }
            if k >= self.n {
                return None;
            }
            m = m.insert(k);
        }
        Some(m)
    }

    /// Elementary transporter: `d = w_L w_M` with `M = L ∪ {r}`, and `L^d`.
    pub fn transporter(&self, l: Subset, r: usize) -> (GroupElement, Subset) {
        if l.contains(r) {
            return (self.identity(), l);
        }
        let d = self.mul(&self.longest_element(l), &self.longest_element(l.insert(r)));
        let image = self.conjugate_subset(l, &d).expect("transporter image lies in S");
        (d, image)
    }

    /// Whether `w_0` commutes with every simple reflection.
    pub fn longest_is_central(&self) -> bool {
        let w0 = self.longest_element(self.full_set());
        (0..self.n).all(|s| self.left_mul_simple(s, &w0) == self.right_mul_simple(&w0, s))
    }

    /// Generator permutation induced by conjugation with `w_0`.
    pub fn longest_conjugation(&self) -> Vec<usize> {
        let w0 = self.longest_element(self.full_set());
        (0..self.n)
            .map(|s| self.conjugate_subset(Subset::singleton(s), &w0).unwrap().iter().next().unwrap())
            .collect()
    }

    /// Minimal length representatives of `W_J` cosets inside `W_M` (`J ⊆ M`),
    /// visited level by level. Stops with an error after `cap` elements.
    pub(crate) fn for_each_min_rep<F: FnMut(&GroupElement)>(
        &self,
        j: Subset,
        within: Subset,
        cap: u128,
        operation: &str,
        mut f: F,
    ) -> Result<u128> {
        let mut level = vec![self.identity()];
        let mut count: u128 = 0;
        while !level.is_empty() {
            let mut next: rustc_hash::FxHashSet<GroupElement> = Default::default();
            for x in &level {
                count += 1;
                if count > cap {
                    return Err(Error::GateExceeded { operation: operation.to_string(), size: count, bound: cap });
                }
                f(x);
                for s in within.iter() {
                    if (x.images[s] as usize) < self.npos {
                        let y = self.right_mul_simple(x, s);
                        if self.left_descents(&y).intersection(j).is_empty() {
                            next.insert(y);
                        }
                    }
                }
            }
            let mut v: Vec<GroupElement> = next.into_iter().collect();
            v.sort();
            level = v;
        }
        Ok(count)
    }

    /// `|W_J|` from a chain of parabolic subgroups.
    pub fn parabolic_order(&self, j: Subset) -> BigUint {
        let mut order = BigUint::from(1u32);
        let mut prev = Subset::EMPTY;
        for s in j.iter() {
            let cur = prev.insert(s);
            let idx = self.for_each_min_rep(prev, cur, u128::MAX, "parabolic order", |_| {}).unwrap();
            order *= BigUint::from(idx);
            prev = cur;
        }
        order
    }

    fn compute_order(&self) -> BigUint {
        self.parabolic_order(self.full_set())
    }

    /// `[W : W_J]`.
    pub fn parabolic_index(&self, j: Subset) -> BigUint {
        &self.group_order / self.parabolic_order(j)
    }
}

/// Maps circle index `k` (angle `kπ/m`, `0 ≤ k < m`) to a root index with the
/// simple roots at 0 and 1.
fn circle_relabel(m: usize) -> Vec<usize> {
    // circle 0 → 0, circle m−1 → 1, circle k (1 ≤ k ≤ m−2) → k + 1
    (0..m).map(|k| if k == 0 { 0 } else if k == m - 1 { 1 } else { k + 1 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CoxeterDatum {
        CoxeterDatum::from_label(s).unwrap()
    }

    #[test]
    fn orders_and_root_counts() {
        for s in ["A1", "A3", "B3", "D4", "F4", "H3", "H4", "E6", "I2(5)", "I2(8)"] {
            let d = datum(s);
            assert_eq!(d.group_order_u128(), d.ctype().known_order(), "{s}");
            assert_eq!(d.num_positive_roots(), d.ctype().known_positive_roots(), "{s}");
            let w0 = d.longest_element(d.full_set());
            assert_eq!(d.length(&w0), d.num_positive_roots(), "{s}");
            assert_eq!(d.left_descents(&w0), d.full_set());
        }
    }

    #[test]
    fn simple_reflections_are_involutions() {
        let d = datum("H3");
        let id = d.identity();
        for s in 0..3 {
            let ss = d.multiply(d.simple_reflection(s), d.simple_reflection(s)).unwrap();
            assert_eq!(ss, id);
            assert_eq!(d.length(d.simple_reflection(s)), 1);
            assert_eq!(d.left_descents(d.simple_reflection(s)), Subset::singleton(s));
        }
        assert_eq!(d.multiply(&id, d.simple_reflection(1)).unwrap(), *d.simple_reflection(1));
    }

    #[test]
    fn dihedral_braid_relation() {
        let d = datum("I2(5)");
        let st = d.multiply(d.simple_reflection(0), d.simple_reflection(1)).unwrap();
        let mut p = d.identity();
        for k in 1..=5 {
            p = d.mul(&p, &st);
            assert_eq!(p == d.identity(), k == 5);
        }
    }

    #[test]
    fn inverse_of_product() {
        let d = datum("F4");
        let u = d.mul(d.simple_reflection(0), d.simple_reflection(1));
        let v = d.mul(d.simple_reflection(2), &d.mul(d.simple_reflection(1), d.simple_reflection(3)));
        let lhs = d.inv(&d.mul(&u, &v));
        let rhs = d.mul(&d.inv(&v), &d.inv(&u));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_data_rejected() {
        let a = datum("A3");
        let b = datum("H3");
        assert_eq!(a.multiply(&a.identity(), &b.identity()), Err(Error::MixedData));
    }

    #[test]
    fn central_longest_element() {
        assert!(datum("H3").longest_is_central());
        assert!(datum("F4").longest_is_central());
        assert!(datum("I2(6)").longest_is_central());
        assert!(!datum("I2(5)").longest_is_central());
        let e6 = datum("E6");
        assert!(!e6.longest_is_central());
        // 1 ↔ 6, 3 ↔ 5, 2 and 4 fixed
        assert_eq!(e6.longest_conjugation(), vec![5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn transporter_with_r_in_l_is_trivial() {
        let d = datum("E6");
        let l = Subset::from_labels(&[1, 3]);
        let (t, img) = d.transporter(l, 0);
        assert_eq!(t, d.identity());
        assert_eq!(img, l);
    }
}
