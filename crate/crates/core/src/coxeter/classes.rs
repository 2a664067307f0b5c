//! Elementary transporters, the `S*`-action on subsets, and the classes `Λ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{CoxeterDatum, Family, GroupElement, Subset};

/// One elementary transporter `d = w_L w_{L ∪ {r}}` with its effect on `L`.
#[derive(Debug, Clone)]
pub struct TransportStep {
    pub d: GroupElement,
    pub image: Subset,
    /// `conj[s] = s^d` for `s ∈ L`; other entries are unused.
    pub conj: Vec<u8>,
}

/// All elementary transporters of a group, indexed by `(L, r)`.
#[derive(Debug, Clone)]
pub struct TransportTable {
    n: usize,
    steps: Vec<TransportStep>,
}

impl TransportTable {
    pub fn new(datum: &CoxeterDatum) -> Self {
        let n = datum.rank();
        let mut steps = Vec::with_capacity(n << n);
        for l in Subset::all(n) {
            for r in 0..n {
                let (d, image) = datum.transporter(l, r);
                let dinv = datum.inv(&d);
                let conj = (0..n)
                    .map(|s| {
                        let k = dinv.images()[s] as usize;
                        if l.contains(s) {
                            debug_assert!(k < n);
                            k as u8
                        } else {
                            u8::MAX
                        }
                    })
                    .collect();
                steps.push(TransportStep { d, image, conj });
            }
        }
        TransportTable { n, steps }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, l: Subset, r: usize) -> &TransportStep {
        &self.steps[l.0 as usize * self.n + r]
    }

    /// `L.r`.
    #[inline]
    pub fn act(&self, l: Subset, r: usize) -> Subset {
        self.get(l, r).image
    }
}

/// A class `λ ∈ Λ` of conjugate subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetClass {
    pub index: usize,
    /// Lexicographically least member.
    pub rep: Subset,
    pub members: Vec<Subset>,
    /// `‖λ‖`.
    pub size: usize,
    pub name: String,
}

/// The partition of `P(S)` into classes.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub classes: Vec<SubsetClass>,
    class_of: Vec<usize>,
}

impl ClassTable {
    pub fn new(datum: &CoxeterDatum, table: &TransportTable) -> Self {
        let n = datum.rank();
        let mut label = vec![usize::MAX; 1 << n];
        let mut orbits: Vec<Vec<Subset>> = Vec::new();
        for start in Subset::all(n) {
            if label[start.0 as usize] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            label[start.0 as usize] = id;
            let mut k = 0;
            while k < orbit.len() {
                let l = orbit[k];
                for r in 0..n {
                    let m = table.act(l, r);
                    if label[m.0 as usize] == usize::MAX {
                        label[m.0 as usize] = id;
                        orbit.push(m);
                    }
                }
                k += 1;
            }
            orbit.sort_by(|a, b| a.lex_cmp(*b));
            orbits.push(orbit);
        }
        orbits.sort_by(|a, b| a[0].len().cmp(&b[0].len()).then_with(|| a[0].lex_cmp(b[0])));
        let mut class_of = vec![0; 1 << n];
        let mut classes: Vec<SubsetClass> = orbits
            .into_iter()
            .enumerate()
            .map(|(index, members)| {
                for m in &members {
                    class_of[m.0 as usize] = index;
                }
                let rep = members[0];
                SubsetClass { index, rep, size: rep.len(), name: parabolic_name(datum, rep), members }
            })
            .collect();
        add_primes(&mut classes);
        ClassTable { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, l: Subset) -> usize {
        self.class_of[l.0 as usize]
    }

    /// The class containing `l`.
    pub fn get(&self, l: Subset) -> &SubsetClass {
        &self.classes[self.class_of(l)]
    }

    pub fn iter(&self) -> impl Iterator<Item = &SubsetClass> {
        self.classes.iter()
    }
}

fn add_primes(classes: &mut [SubsetClass]) {
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for c in classes.iter() {
        groups.entry(c.name.clone()).or_default().push(c.index);
    }
    for idx in groups.values() {
        if idx.len() < 2 {
            continue;
        }
        let mut idx = idx.clone();
        idx.sort_by(|&a, &b| classes[a].rep.lex_cmp(classes[b].rep));
        for (k, &i) in idx.iter().enumerate() {
            classes[i].name.push_str(&"'".repeat(k + 1));
        }
    }
}

/// Connected components of the Coxeter diagram restricted to `l`.
pub fn components(datum: &CoxeterDatum, l: Subset) -> Vec<Subset> {
    let cm = datum.coxeter_matrix();
    let mut left = l;
    let mut out = Vec::new();
    while let Some(s) = left.iter().next() {
        let mut comp = Subset::singleton(s);
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in left.iter() {
                if !comp.contains(b) && cm[a][b] > 2 {
                    comp = comp.insert(b);
                    stack.push(b);
                }
            }
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// Irreducible type of a connected subdiagram, as `(family, rank, m)`.
fn component_type(datum: &CoxeterDatum, comp: Subset) -> (Family, usize, u32) {
    let cm = datum.coxeter_matrix();
    let nodes: Vec<usize> = comp.iter().collect();
    let k = nodes.len();
    let max_m = nodes.iter().flat_map(|&a| nodes.iter().map(move |&b| cm[a][b])).max().unwrap_or(1);
    if k == 2 && max_m >= 6 {
        return (Family::I2, 2, max_m);
    }
    match max_m {
        5 => (Family::H, k, 5),
        4 => {
            if k == 4 && datum.ctype().family == Family::F {
                return (Family::F, 4, 4);
            }
            (Family::B, k, 4)
        }
        _ => {
            let degree = |a: usize| nodes.iter().filter(|&&b| a != b && cm[a][b] == 3).count();
            let Some(&branch) = nodes.iter().find(|&&a| degree(a) == 3) else {
                return (Family::A, k, 3);
            };
            let mut arms: Vec<usize> = nodes
                .iter()
                .filter(|&&b| cm[branch][b] == 3)
                .map(|&start| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (branch, start);
                    loop {
                        let next = nodes.iter().find(|&&c| c != prev && c != cur && cm[cur][c] == 3);
                        match next {
                            Some(&c) => {
                                prev = cur;
                                cur = c;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            if arms[1] == 1 {
                (Family::D, k, 3)
            } else {
                (Family::E, k, 3)
            }
        }
    }
}

/// Name of the parabolic type of `W_L`: the non-`A` factor first, then the
/// `A` ranks in decreasing order, e.g. `A_{211}`, `D_{41}`, `H_3`, `∅`.
pub fn parabolic_name(datum: &CoxeterDatum, l: Subset) -> String {
    if l.is_empty() {
        return "∅".to_string();
    }
    if l == datum.full_set() && datum.ctype().family == Family::I2 {
        return format!("I_2({})", datum.ctype().dihedral_order.unwrap());
    }
    let mut head: Option<(Family, usize, u32)> = None;
    let mut a_ranks = Vec::new();
    for comp in components(datum, l) {
        let t = component_type(datum, comp);
        match t.0 {
            Family::A => a_ranks.push(t.1),
            _ => head = Some(t),
        }
    }
    a_ranks.sort_unstable_by(|a, b| b.cmp(a));
    let tail: String = a_ranks.iter().map(|r| r.to_string()).collect();
    let (letter, digits) = match head {
        None => ("A".to_string(), tail),
        Some((Family::I2, _, 6)) => ("G".to_string(), format!("2{tail}")),
        Some((Family::I2, _, m)) => return format!("I_2({m})"),
        Some((fam, rank, _)) => (format!("{fam:?}"), format!("{rank}{tail}")),
    };
    if digits.chars().count() == 1 {
        format!("{letter}_{digits}")
    } else {
        format!("{letter}_{{{digits}}}")
    }
}

/// Compares classes by `(‖λ‖, representative)`.
pub fn class_order(a: &SubsetClass, b: &SubsetClass) -> Ordering {
    a.size.cmp(&b.size).then_with(|| a.rep.lex_cmp(b.rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(t: &str) -> (CoxeterDatum, TransportTable, ClassTable) {
        let d = CoxeterDatum::from_label(t).unwrap();
        let tt = TransportTable::new(&d);
        let ct = ClassTable::new(&d, &tt);
        (d, tt, ct)
    }

    #[test]
    fn class_counts() {
        for (t, k) in [("A1", 2), ("H3", 6), ("H4", 10), ("F4", 12), ("E6", 17), ("E7", 32), ("I2(4)", 4), ("I2(5)", 3)] {
            assert_eq!(setup(t).2.len(), k, "{t}");
        }
    }

    #[test]
    fn h3_representatives() {
        let (_, _, ct) = setup("H3");
        let mut reps: Vec<String> = ct.iter().map(|c| c.rep.digits()).collect();
        reps.sort();
        assert_eq!(reps, vec!["", "1", "12", "123", "13", "23"]);
        let names: Vec<&str> = ct.iter().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"H_2") && names.contains(&"A_{11}") && names.contains(&"H_3"));
    }

    #[test]
    fn f4_singletons_split() {
        let (_, tt, ct) = setup("F4");
        assert_ne!(ct.class_of(Subset::singleton(0)), ct.class_of(Subset::singleton(2)));
        assert_eq!(ct.class_of(Subset::singleton(0)), ct.class_of(Subset::singleton(1)));
        for l in Subset::all(4) {
            for r in 0..4 {
                let img = tt.act(l, r);
                assert_eq!(img.len(), l.len());
            }
        }
        assert_eq!(ct.get(Subset::singleton(0)).name, "A_1'");
        assert_eq!(ct.get(Subset::singleton(2)).name, "A_1''");
        assert_eq!(ct.get(Subset::full(4)).name, "F_4");
        assert_eq!(ct.get(Subset::parse_digits("123").unwrap()).name, "B_3'");
    }

    #[test]
    fn e_type_names() {
        let (d, _, _) = setup("E8");
        let name = |s: &str| parabolic_name(&d, Subset::parse_digits(s).unwrap());
        assert_eq!(name("1234568"), "E_{61}");
        assert_eq!(name("23458"), "D_{41}");
        assert_eq!(name("1358"), "A_{211}");
        assert_eq!(name("12345678"), "E_8");
    }

    #[test]
    fn e8_class_count() {
        assert_eq!(setup("E8").2.len(), 41);
    }
}
