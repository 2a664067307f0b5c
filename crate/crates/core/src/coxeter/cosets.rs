//! Coset representatives `X_J`, descent classes `Y_K` and the sets `X_L♯`.

use rustc_hash::FxHashSet;

use super::{CoxeterDatum, GroupElement, Subset, TransportTable};
use crate::error::{Error, Result};

/// Default bound on the size of any enumerated set of group elements.
pub const DEFAULT_GATE: u128 = 5_000_000;

/// Size bound for enumerations; exceeding it is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    pub bound: u128,
}

impl Default for Gate {
    fn default() -> Self {
        Gate { bound: DEFAULT_GATE }
    }
}

impl Gate {
    pub fn new(bound: u128) -> Self {
        Gate { bound }
    }

    pub fn check(&self, operation: &str, size: u128) -> Result<()> {
        if size > self.bound {
            Err(Error::GateExceeded { operation: operation.to_string(), size, bound: self.bound })
        } else {
            Ok(())
        }
    }
}

impl CoxeterDatum {
    /// `X_J`, the minimal length representatives of the cosets `W_J x`, in BFS
    /// order (by length, then by permutation).
    pub fn enumerate_x(&self, j: Subset, gate: Gate) -> Result<Vec<GroupElement>> {
        let size = u128::try_from(self.parabolic_index(j)).unwrap_or(u128::MAX);
        gate.check("enumerate X_J", size)?;
        let mut out = Vec::with_capacity(size as usize);
        self.for_each_min_rep(j, self.full_set(), gate.bound, "enumerate X_J", |x| out.push(x.clone()))?;
        Ok(out)
    }

    /// Streams `X_J` without storing it.
    pub fn for_each_x<F: FnMut(&GroupElement)>(&self, j: Subset, gate: Gate, f: F) -> Result<u128> {
        let size = u128::try_from(self.parabolic_index(j)).unwrap_or(u128::MAX);
        gate.check("enumerate X_J", size)?;
        self.for_each_min_rep(j, self.full_set(), gate.bound, "enumerate X_J", f)
    }

    /// The descent class `Y_K = {w : D(w) = S ∖ K}`.
    pub fn enumerate_y(&self, k: Subset, gate: Gate) -> Result<Vec<GroupElement>> {
        let target = self.full_set().difference(k);
        let mut out = Vec::new();
        self.for_each_x(k, gate, |x| {
            if self.left_descents(x) == target {
                out.push(x.clone());
            }
        })?;
        Ok(out)
    }

    /// Pairs `(x, L^x)` for `x ∈ X_L♯`, found by closing `{id}` under right
    /// multiplication with elementary transporters. Sorted by `(ℓ(x), x)`.
    pub fn enumerate_x_sharp(&self, l: Subset, table: &TransportTable, gate: Gate) -> Result<Vec<(GroupElement, Subset)>> {
        let mut out = Vec::new();
        self.for_each_x_sharp(l, table, gate, |x, k| out.push((x.clone(), k)))?;
        out.sort_by(|a, b| self.length(&a.0).cmp(&self.length(&b.0)).then_with(|| a.0.cmp(&b.0)));
        Ok(out)
    }

    /// Streams `X_L♯` with the conjugate `L^x` of each element, in no
    /// particular order.
    pub fn for_each_x_sharp<F: FnMut(&GroupElement, Subset)>(
        &self,
        l: Subset,
        table: &TransportTable,
        gate: Gate,
        mut f: F,
    ) -> Result<u128> {
        let op = "enumerate X_L♯";
        let mut seen: FxHashSet<GroupElement> = FxHashSet::default();
        let mut stack = vec![(self.identity(), l)];
        seen.insert(self.identity());
        let mut count: u128 = 0;
        while let Some((x, k)) = stack.pop() {
            count += 1;
            gate.check(op, count)?;
            f(&x, k);
            for r in 0..self.rank() {
                if k.contains(r) {
                    continue;
                }
                let step = table.get(k, r);
                let y = self.mul(&x, &step.d);
                if seen.insert(y.clone()) {
                    stack.push((y, step.image));
                }
            }
        }
        Ok(count)
    }

    /// `X_L♯` straight from the definition, as a filter of `X_L`.
    pub fn x_sharp_by_filter(&self, l: Subset, gate: Gate) -> Result<Vec<(GroupElement, Subset)>> {
        let mut out = Vec::new();
        self.for_each_x(l, gate, |x| {
            if let Some(k) = self.conjugate_subset(l, x) {
                out.push((x.clone(), k));
            }
        })?;
        out.sort_by(|a, b| self.length(&a.0).cmp(&self.length(&b.0)).then_with(|| a.0.cmp(&b.0)));
        Ok(out)
    }

    /// Every element of `W` (gated on `|W|`).
    pub fn elements(&self, gate: Gate) -> Result<Vec<GroupElement>> {
        self.enumerate_x(Subset::EMPTY, gate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CoxeterDatum {
        CoxeterDatum::from_label(s).unwrap()
    }

    #[test]
    fn small_x_sets() {
        let a1 = datum("A1");
        assert_eq!(a1.enumerate_x(Subset::full(1), Gate::default()).unwrap(), vec![a1.identity()]);
        assert_eq!(a1.enumerate_x(Subset::EMPTY, Gate::default()).unwrap().len(), 2);
        let i3 = datum("I2(3)");
        assert_eq!(i3.enumerate_x(Subset::singleton(0), Gate::default()).unwrap().len(), 3);
    }

    #[test]
    fn x_sets_are_prefixes_of_longest_coset_rep() {
        for t in ["A3", "B3", "H3", "I2(7)"] {
            let d = datum(t);
            let w0 = d.longest_element(d.full_set());
            let all = d.elements(Gate::default()).unwrap();
            for j in Subset::all(d.rank()) {
                let top = d.mul(&d.longest_element(j), &w0);
                let mut x: Vec<_> = d.enumerate_x(j, Gate::default()).unwrap();
                x.sort();
                let mut by_prefix: Vec<_> = all.iter().filter(|u| d.is_prefix(u, &top)).cloned().collect();
                by_prefix.sort();
                assert_eq!(x, by_prefix, "{t} {j:?}");
                assert!(d.is_min_coset_rep(&top, j));
            }
        }
    }

    #[test]
    fn y_classes_partition_x() {
        let d = datum("I2(3)");
        let y1 = d.enumerate_y(Subset::singleton(0), Gate::default()).unwrap();
        let ys = d.enumerate_y(d.full_set(), Gate::default()).unwrap();
        assert_eq!(ys, vec![d.identity()]);
        assert_eq!(y1.len() + ys.len(), 3);
        let h3 = datum("H3");
        let w0 = h3.longest_element(h3.full_set());
        assert_eq!(h3.enumerate_y(Subset::EMPTY, Gate::default()).unwrap(), vec![w0]);
        for k in Subset::all(3) {
            let prefix = h3.longest_element(h3.full_set().difference(k));
            for y in h3.enumerate_y(k, Gate::default()).unwrap() {
                assert!(h3.is_prefix(&prefix, &y));
            }
        }
    }

    #[test]
    fn gate_is_enforced() {
        let d = datum("E6");
        let err = d.enumerate_x(Subset::EMPTY, Gate::new(1000)).unwrap_err();
        assert!(matches!(err, Error::GateExceeded { bound: 1000, .. }));
    }

    #[test]
    fn x_sharp_bfs_matches_filter() {
        for t in ["A1", "A3", "B3", "H3", "I2(6)", "F4"] {
            let d = datum(t);
            let table = TransportTable::new(&d);
            for l in Subset::all(d.rank()) {
                let bfs = d.enumerate_x_sharp(l, &table, Gate::default()).unwrap();
                let filt = d.x_sharp_by_filter(l, Gate::default()).unwrap();
                assert_eq!(bfs, filt, "{t} {l:?}");
            }
        }
    }
}
