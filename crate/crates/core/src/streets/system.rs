use rustc_hash::FxHashMap;

use super::path::{paths_from, PathKey, SubsetPath};
use crate::coxeter::{ClassTable, Subset, TransportTable};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

/// An `S*`-orbit of paths.
#[derive(Debug, Clone)]
pub struct Street {
    pub id: usize,
    /// Least member in label order.
    pub rep: SubsetPath,
    pub len: usize,
    /// Indices into [`StreetSystem::paths`].
    pub members: Vec<u32>,
    pub source_class: usize,
    pub end_class: usize,
}

/// All paths of `P(S)`, their streets, `Δ` of every street, and the product
/// table of the street algebra.
pub struct StreetSystem {
    n: usize,
    paths: Vec<PathKey>,
    index: FxHashMap<PathKey, u32>,
    street_of: Vec<u32>,
    streets: Vec<Street>,
    vertex_street: Vec<usize>,
    delta: Vec<SparseVec>,
    products: FxHashMap<(u32, u32), Vec<u32>>,
}

impl StreetSystem {
    pub fn new(table: &TransportTable, classes: &ClassTable) -> Result<Self> {
        let n = table.rank();
        let mut paths: Vec<PathKey> = Subset::all(n).flat_map(paths_from).collect();
        paths.sort_by_key(|p| (p.len(), p.0));
        let index: FxHashMap<PathKey, u32> = paths.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();

        let mut orbit_of = vec![u32::MAX; paths.len()];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..paths.len() {
            if orbit_of[start] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            orbit_of[start] = id;
            let mut orbit = vec![start as u32];
            let mut k = 0;
            while k < orbit.len() {
                let p = paths[orbit[k] as usize];
                for r in 0..n {
                    let q = index[&p.act(r, table)];
                    if orbit_of[q as usize] == u32::MAX {
                        orbit_of[q as usize] = id;
                        orbit.push(q);
                    }
                }
                k += 1;
            }
            orbits.push(orbit);
        }

        let mut streets: Vec<Street> = orbits
            .into_iter()
            .map(|members| {
                let rep = members
                    .iter()
                    .map(|&i| SubsetPath::from_key(paths[i as usize]))
                    .min_by(|a, b| a.label_cmp(b))
                    .unwrap();
                let len = rep.len();
                let source_class = classes.class_of(rep.source);
                let end_class = classes.class_of(rep.terminal());
                Street { id: 0, rep, len, members, source_class, end_class }
            })
            .collect();
        streets.sort_by(|a, b| a.len.cmp(&b.len).then_with(|| a.rep.label_cmp(&b.rep)));
        let mut street_of = vec![0u32; paths.len()];
        for (id, s) in streets.iter_mut().enumerate() {
            s.id = id;
            s.members.sort_unstable();
            for &m in &s.members {
                street_of[m as usize] = id as u32;
            }
        }
        let mut vertex_street = vec![usize::MAX; classes.len()];
        for s in streets.iter().filter(|s| s.len == 0) {
            vertex_street[s.source_class] = s.id;
        }
        if vertex_street.contains(&usize::MAX) {
            return Err(Error::Inconsistent("length 0 streets do not match the subset classes".into()));
        }

        let mut sys = StreetSystem {
            n,
            paths,
            index,
            street_of,
            streets,
            vertex_street,
            delta: Vec::new(),
            products: FxHashMap::default(),
        };
        sys.delta = sys.compute_delta(table);
        sys.products = sys.compute_products()?;
        Ok(sys)
    }

    /// `Δ` of every path, one length at a time, summed over streets.
    fn compute_delta(&self, table: &TransportTable) -> Vec<SparseVec> {
        let mut acc: Vec<FxHashMap<u16, i64>> = vec![FxHashMap::default(); self.streets.len()];
        let mut prev: FxHashMap<PathKey, Vec<(u16, i64)>> = FxHashMap::default();
        let max_len = self.paths.last().map_or(0, |p| p.len());
        for len in 0..=max_len {
            let mut cur: FxHashMap<PathKey, Vec<(u16, i64)>> = FxHashMap::default();
            for &p in self.paths.iter().filter(|p| p.len() == len) {
                let d = if len == 0 {
                    vec![(p.source().0, 1)]
                } else {
                    let q = p.tail();
                    let qs = q.act(p.deletion(0), table);
                    combine(&prev[&q], &prev[&qs])
                };
                let target = &mut acc[self.street_of[self.index[&p] as usize] as usize];
                for &(m, c) in &d {
                    *target.entry(m).or_insert(0) += c;
                }
                cur.insert(p, d);
            }
            prev = cur;
        }
        acc.into_iter()
            .map(|m| SparseVec::from_pairs(m.into_iter().filter(|&(_, c)| c != 0).map(|(k, c)| (k as usize, Rational::from(c)))))
            .collect()
    }

    /// `σ∘τ` for all streets: a street `ρ` occurs in `σ∘τ` when its members
    /// split after `len(σ)` into a member of `σ` followed by one of `τ`.
    fn compute_products(&self) -> Result<FxHashMap<(u32, u32), Vec<u32>>> {
        let mut products: FxHashMap<(u32, u32), Vec<u32>> = FxHashMap::default();
        for rho in &self.streets {
            for k in 0..=rho.len {
                let split = |i: u32| {
                    let p = self.paths[i as usize];
                    (self.street_id(p.prefix(k)), self.street_id(p.suffix(k)))
                };
                let first = split(rho.members[0]);
                if let Some(&bad) = rho.members.iter().find(|&&m| split(m) != first) {
                    return Err(Error::Inconsistent(format!(
                        "street {} does not split uniformly after {k} steps at {:?}",
                        rho.rep.label(self.n),
                        SubsetPath::from_key(self.paths[bad as usize])
                    )));
                }
                products.entry(first).or_default().push(rho.id as u32);
            }
        }
        Ok(products)
    }

    fn street_id(&self, p: PathKey) -> u32 {
        self.street_of[self.index[&p] as usize]
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn streets(&self) -> &[Street] {
        &self.streets
    }

    pub fn street(&self, id: usize) -> &Street {
        &self.streets[id]
    }

    pub fn num_paths(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, i: u32) -> SubsetPath {
        SubsetPath::from_key(self.paths[i as usize])
    }

    /// The street containing `p`.
    pub fn street_of(&self, p: &SubsetPath) -> Option<usize> {
        self.index.get(&p.key()).map(|&i| self.street_of[i as usize] as usize)
    }

    /// Street of length 0 for class `λ`.
    pub fn vertex_street(&self, class: usize) -> usize {
        self.vertex_street[class]
    }

    /// `Δ(σ)` in `e`-coordinates (indexed by subset bitmask).
    pub fn delta(&self, street: usize) -> &SparseVec {
        &self.delta[street]
    }

    /// Streets occurring in `σ∘τ`, each with coefficient 1.
    pub fn product(&self, sigma: usize, tau: usize) -> &[u32] {
        self.products.get(&(sigma as u32, tau as u32)).map_or(&[], |v| v.as_slice())
    }

    /// Label of a street in table style.
    pub fn label(&self, street: usize) -> String {
        self.streets[street].rep.label(self.n)
    }
}

fn combine(a: &[(u16, i64)], b: &[(u16, i64)]) -> Vec<(u16, i64)> {
    let mut m: FxHashMap<u16, i64> = FxHashMap::default();
    for &(k, c) in a {
        *m.entry(k).or_insert(0) += c;
    }
    for &(k, c) in b {
        *m.entry(k).or_insert(0) -= c;
    }
    let mut v: Vec<(u16, i64)> = m.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort_unstable();
    v
}
