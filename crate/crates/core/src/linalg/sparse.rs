//! Sparse vectors and matrices over [`Rational`], with exact row reduction.

use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// Sparse vector with entries sorted by index and no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::ONE)] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let e = map.entry(i).or_insert(Rational::ZERO);
            *e += &v;
        }
        SparseVec { entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// First stored entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn scale_in_place(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v = &*v * c;
        }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, w * c));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = &v + &(w * c);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, w * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut r = self.clone();
        r.axpy(&Rational::ONE, other);
        r
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut r = self.clone();
        r.axpy(&-Rational::ONE, other);
        r
    }

    pub fn neg(&self) -> SparseVec {
        self.scale(&-Rational::ONE)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::ZERO;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a < b {
                i += 1;
            } else if a > b {
                j += 1;
            } else {
                acc += &self.entries[i].1 * &other.entries[j].1;
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Applies an index map; entries mapped to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, v)| f(*i).map(|j| (j, v.clone()))))
    }

    pub fn into_pairs(self) -> Vec<(usize, Rational)> {
        self.entries
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, v)| (i, v))).finish()
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter)
    }
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < cols)), "row index out of range");
        SparseMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_dense(values: &[Vec<Rational>]) -> Self {
        let cols = values.first().map_or(0, |r| r.len());
        SparseMatrix::from_rows(cols, values.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn from_i64(values: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> =
            values.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        SparseMatrix::from_dense(&dense)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        let cur = self.data[i].get(j);
        self.data[i].axpy(&Rational::ONE, &SparseVec::from_pairs([(j, &v - &cur)]));
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    /// `M · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.data.iter().enumerate().map(|(i, r)| (i, r.dot(v))).filter(|(_, x)| !x.is_zero()),
        )
    }

    /// `vᵀ · M` for a row vector `v`.
    pub fn vec_mul(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &self.data[i]);
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r.iter() {
                cols[j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(|c| SparseVec { entries: c }).collect(),
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data: self.data.iter().map(|r| other.vec_mul(r)).collect(),
        }
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &SparseMatrix) -> (SparseMatrix, Vec<usize>) {
    let mut ech = EchelonBasis::new();
    for r in m.rows() {
        ech.insert(r.clone());
    }
    let (rows, pivots) = ech.into_sorted_rows();
    let mut data = rows;
    data.resize(m.nrows(), SparseVec::new());
    (SparseMatrix { rows: m.nrows(), cols: m.ncols(), data }, pivots)
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut ech = EchelonBasis::new();
    for r in m.rows() {
        ech.insert(r.clone());
    }
    ech.rank()
}

/// Basis of the right null space `{v : M v = 0}`, one vector per free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let (r, pivots) = rref(m);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; m.ncols()];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    (0..m.ncols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut pairs = vec![(f, Rational::ONE)];
            for (i, &p) in pivots.iter().enumerate() {
                let c = r.get(i, f);
                if !c.is_zero() {
                    pairs.push((p, -c));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect()
}

/// Solves `U x = b` for square upper-triangular `U` with nonzero diagonal.
pub fn solve_upper_triangular(u: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = u.nrows();
    assert_eq!(n, u.ncols());
    let mut x = vec![Rational::ZERO; n];
    for i in (0..n).rev() {
        let row = u.row(i);
        let mut acc = b.get(i);
        let mut diag = Rational::ZERO;
        for (j, v) in row.iter() {
            match j.cmp(&i) {
                std::cmp::Ordering::Less => {
                    if !v.is_zero() {
                        return None;
                    }
                }
                std::cmp::Ordering::Equal => diag = v.clone(),
                std::cmp::Ordering::Greater => acc -= v * &x[j],
            }
        }
        if diag.is_zero() {
            return None;
        }
        x[i] = &acc / &diag;
    }
    Some(SparseVec::from_dense(&x))
}

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept fully reduced: each row has a leading 1 at its pivot and a
/// zero at every other pivot. Optionally tracks, for every stored row, its
/// expression as a combination of the inserted vectors (by insertion id), so
/// that vectors in the span can be written in terms of the inputs.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: BTreeMap<usize, usize>,
    inserted: usize,
    track: bool,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// An echelon basis that records input combinations.
    pub fn tracking() -> Self {
        EchelonBasis { track: true, ..Self::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce_with_combo(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut r = v.clone();
        let mut combo = SparseVec::new();
        for (c, val) in v.iter() {
            if let Some(&k) = self.pivot_row.get(&c) {
                let f = -val.clone();
                r.axpy(&f, &self.rows[k]);
                if self.track {
                    combo.axpy(&f, &self.combos[k]);
                }
            }
        }
        (r, combo)
    }

    /// Residual of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (c, val) in v.iter() {
            if let Some(&k) = self.pivot_row.get(&c) {
                r.axpy(&-val.clone(), &self.rows[k]);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` if it enlarged the span. Every call consumes
    /// one insertion id, independent or not.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut r, mut combo) = self.reduce_with_combo(&v);
        if r.is_zero() {
            return false;
        }
        if self.track {
            combo.axpy(&Rational::ONE, &SparseVec::unit(id));
        }
        let (p, lead) = r.leading().map(|(p, l)| (p, l.clone())).unwrap();
        let inv = lead.recip();
        r.scale_in_place(&inv);
        if self.track {
            combo.scale_in_place(&inv);
        }
        for k in 0..self.rows.len() {
            let c = self.rows[k].get(p);
            if !c.is_zero() {
                let f = -c;
                self.rows[k].axpy(&f, &r);
                if self.track {
                    let (rows_combo, r_combo) = (&mut self.combos[k], &combo);
                    rows_combo.axpy(&f, r_combo);
                }
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.pivots.push(p);
        self.rows.push(r);
        if self.track {
            self.combos.push(combo);
        }
        true
    }

    /// Expresses `v` as a combination of inserted vectors (by insertion id),
    /// or `None` if `v` is outside the span. Requires a tracking basis.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "express() needs a tracking echelon basis");
        let mut out = SparseVec::new();
        let mut r = v.clone();
        for (c, val) in v.iter() {
            if let Some(&k) = self.pivot_row.get(&c) {
                out.axpy(val, &self.combos[k]);
                r.axpy(&-val.clone(), &self.rows[k]);
            }
        }
        if r.is_zero() {
            Some(out)
        } else {
            None
        }
    }

    /// Stored rows sorted by pivot, with their pivots.
    pub fn into_sorted_rows(self) -> (Vec<SparseVec>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let pivots = order.iter().map(|&k| self.pivots[k]).collect();
        let mut rows: Vec<Option<SparseVec>> = self.rows.into_iter().map(Some).collect();
        (order.iter().map(|&k| rows[k].take().unwrap()).collect(), pivots)
    }

    /// Stored rows in insertion order of their pivots.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_rank_one() {
        let id = SparseMatrix::identity(2);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);

        let m = SparseMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, p) = rref(&m);
        assert_eq!(r, SparseMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&SparseMatrix::zeros(3, 3)).len(), 3);
        let k = kernel_basis(&SparseMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].get(0), -k[0].get(1));
        assert!(!k[0].is_zero());
    }

    #[test]
    fn triangular_solve() {
        let u = SparseMatrix::from_i64(&[&[2, 1, 0], &[0, 1, 3], &[0, 0, 4]]);
        let b = SparseVec::from_dense(&[Rational::from_int(3), Rational::from_int(4), Rational::from_int(4)]);
        let x = solve_upper_triangular(&u, &b).unwrap();
        assert_eq!(u.mul_vec(&x), b);
    }

    #[test]
    fn express_in_inputs() {
        let mut e = EchelonBasis::tracking();
        let a = SparseVec::from_dense(&[Rational::from_int(1), Rational::from_int(1), Rational::ZERO]);
        let b = SparseVec::from_dense(&[Rational::ZERO, Rational::from_int(1), Rational::from_int(2)]);
        assert!(e.insert(a.clone()));
        assert!(e.insert(b.clone()));
        assert!(!e.insert(a.add(&b)));
        let target = a.scale(&Rational::from_int(3)).sub(&b);
        let c = e.express(&target).unwrap();
        assert_eq!(c.get(0), Rational::from_int(3));
        assert_eq!(c.get(1), Rational::from_int(-1));
        assert!(e.express(&SparseVec::unit(0)).is_none());
    }
}
