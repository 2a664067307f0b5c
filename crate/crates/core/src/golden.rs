//! Reference tables for the exceptional and dihedral types, and comparison
//! of computed presentations against them.
//!
//! Records identify vertices by a representative subset. A computed vertex
//! matches a record vertex when its class contains that subset, so primes
//! and dotted-arrow order never matter.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::coxeter::{CoxeterType, Family, Subset};
use crate::presentation::{Part, QuiverPresentation};

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenVertex {
    pub number: usize,
    pub name: String,
    pub rep: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenEdge {
    pub src: String,
    pub dst: String,
    pub street: String,
    pub dots: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenCartan {
    pub reps: Vec<String>,
    pub matrix: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenRecord {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub central: bool,
    pub vertices: Vec<GoldenVertex>,
    pub edges: Vec<GoldenEdge>,
    /// Relation degrees keyed `even`/`odd`, or `full` when `w₀` is not central.
    pub relations: BTreeMap<String, Vec<usize>>,
    pub cartan: Vec<GoldenCartan>,
    /// Layers of each projective, top first, as representative subsets.
    pub loewy: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn records() -> &'static [GoldenRecord] {
    static RECORDS: OnceLock<Vec<GoldenRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| serde_json::from_str(include_str!("../data/golden.json")).expect("embedded golden data parses"))
}

/// The record for `t`; dihedral types share one record per parity of `m`.
pub fn record_for(t: CoxeterType) -> Option<&'static GoldenRecord> {
    let key = match (t.family, t.dihedral_order) {
        (Family::I2, Some(m)) if m % 2 == 0 => "I2(even)".to_string(),
        (Family::I2, Some(_)) => "I2(odd)".to_string(),
        _ => t.to_string(),
    };
    records().iter().find(|r| r.type_label == key)
}

/// Types with an embedded record, in check order. `I2(4)` is left to `B2`.
pub fn golden_types(long: bool) -> Vec<String> {
    let mut v: Vec<String> = (3..=12).map(|m| format!("I2({m})")).collect();
    v.extend(["H3", "H4", "F4", "E6", "E7"].map(String::from));
    if long {
        v.push("E8".into());
    }
    v
}

/// Expected answer of `classify()`, for types where it is known.
pub fn expected_classification(t: CoxeterType) -> Option<(bool, bool)> {
    let n = t.rank;
    let (path, comm) = match t.family {
        Family::A => (n <= 4, n == 1),
        Family::B => (n <= 5, n == 2),
        Family::D => (n <= 5, false),
        Family::F | Family::H => (true, false),
        Family::E => (false, false),
        Family::I2 => {
            let m = t.dihedral_order?;
            (true, m % 2 == 0 && m >= 4)
        }
    };
    Some((path, comm))
}

/// Small-rank types whose classification is asserted by `check --all`.
pub fn classification_types() -> Vec<String> {
    let mut v: Vec<String> = (1..=5).map(|n| format!("A{n}")).collect();
    v.extend((2..=6).map(|n| format!("B{n}")));
    v.extend((4..=6).map(|n| format!("D{n}")));
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub type_label: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(type_label: impl Into<String>) -> Self {
        CheckReport { type_label: type_label.into(), items: Vec::new() }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.type_label, if self.passed() { "pass" } else { "FAIL" })?;
        for i in &self.items {
            writeln!(f, "  [{}] {}: {}", if i.passed { "ok" } else { "MISMATCH" }, i.name, i.detail)?;
        }
        Ok(())
    }
}

fn vertex(q: &QuiverPresentation, rep: &str) -> Option<usize> {
    let s = Subset::parse_digits(rep)?;
    (s.0 >> q.datum().rank() == 0).then(|| q.vertex_of(s))
}

fn show(q: &QuiverPresentation, v: usize) -> String {
    let x = &q.vertices()[v];
    format!("{} [{}]", x.name, x.rep.label(q.datum().rank()))
}

/// Compares `q` with `rec` item by item.
pub fn compare(q: &QuiverPresentation, rec: &GoldenRecord) -> CheckReport {
    let mut report = CheckReport::new(q.type_label());
    let nv = q.vertices().len();

    // vertices: the record's representatives hit every class exactly once
    let mapped: Vec<Option<usize>> = rec.vertices.iter().map(|v| vertex(q, &v.rep)).collect();
    let mut hit = vec![0; nv];
    for v in mapped.iter().flatten() {
        hit[*v] += 1;
    }
    let bijective = mapped.iter().all(Option::is_some) && rec.vertices.len() == nv && hit.iter().all(|&h| h == 1);
    report.push("vertices", bijective, format!("{} expected, {} computed", rec.vertices.len(), nv));
    if !bijective {
        return report;
    }
    let names: Vec<String> = rec
        .vertices
        .iter()
        .zip(&mapped)
        .filter(|(g, v)| g.name != "I_2(m)" && strip_primes(&g.name) != strip_primes(&q.vertices()[v.unwrap()].name))
        .map(|(g, v)| format!("{} vs {}", g.name, q.vertices()[v.unwrap()].name))
        .collect();
    report.push("vertex types", names.is_empty(), if names.is_empty() { "agree up to primes".into() } else { names.join(", ") });

    let want = sorted(rec.edges.iter().map(|e| (vertex(q, &e.src).unwrap(), vertex(q, &e.dst).unwrap())));
    let got = sorted(q.edges().iter().map(|e| (e.source, e.target)));
    let detail = if want == got {
        format!("{} expected, {} computed", want.len(), got.len())
    } else {
        format!("expected {} [{}], computed {} [{}]", want.len(), pairs(q, &want), got.len(), pairs(q, &got))
    };
    report.push("edges", want == got, detail);

    for (part_key, part) in [("full", Part::Full), ("even", Part::Even), ("odd", Part::Odd)] {
        let Some(want) = rec.relations.get(part_key) else { continue };
        let want = sorted(want.iter().copied());
        let got = sorted(q.relations().iter().filter(|r| part.admits(&q.vertices()[r.source])).map(|r| r.degree));
        report.push(&format!("relations ({part_key})"), want == got, format!("degrees expected {want:?}, computed {got:?}"));
    }

    let c = q.cartan_matrix();
    let mut bad = Vec::new();
    let mut covered = vec![vec![false; nv]; nv];
    for t in &rec.cartan {
        let idx: Vec<usize> = t.reps.iter().map(|r| vertex(q, r).unwrap()).collect();
        for (i, row) in t.matrix.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                covered[idx[i]][idx[j]] = true;
                if c[idx[i]][idx[j]] != x {
                    bad.push(format!("({}, {}) expected {x}, computed {}", show(q, idx[i]), show(q, idx[j]), c[idx[i]][idx[j]]));
                }
            }
        }
    }
    // entries outside the printed tables are zero
    for (i, row) in c.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if !covered[i][j] && x != 0 {
                bad.push(format!("({}, {}) expected 0, computed {x}", show(q, i), show(q, j)));
            }
        }
    }
    let total: usize = c.iter().flatten().sum();
    report.push(
        "cartan",
        bad.is_empty(),
        if bad.is_empty() { format!("entry sum {total}") } else { bad.join("; ") },
    );

    let mut bad = Vec::new();
    for (rep, layers) in &rec.loewy {
        let v = vertex(q, rep).unwrap();
        let want: Vec<Vec<usize>> = layers.iter().map(|l| sorted(l.iter().map(|r| vertex(q, r).unwrap()))).collect();
        let got = q.loewy_series(v);
        if want != got {
            bad.push(format!("P({}) expected {} layers, computed {}", show(q, v), want.len(), got.len()));
        }
    }
    report.push("loewy", bad.is_empty(), if bad.is_empty() { format!("{} projectives", rec.loewy.len()) } else { bad.join("; ") });

    let central = q.parity().is_central();
    report.push("parity", central == rec.central, format!("w0 central: expected {}, computed {central}", rec.central));
    report
}

/// Checks `classify()` against the known answer for `q`'s type.
pub fn compare_classification(q: &QuiverPresentation, report: &mut CheckReport) {
    if let Some((path, comm)) = expected_classification(q.datum().ctype()) {
        let c = q.classify();
        report.push(
            "classification",
            c.is_path_algebra == path && c.is_commutative == comm,
            format!(
                "path algebra {} (expected {path}), commutative {} (expected {comm})",
                c.is_path_algebra, c.is_commutative
            ),
        );
    }
}

fn strip_primes(s: &str) -> &str {
    s.trim_end_matches('\'')
}

fn sorted<T: Ord>(it: impl Iterator<Item = T>) -> Vec<T> {
    let mut v: Vec<T> = it.collect();
    v.sort();
    v
}

fn pairs(q: &QuiverPresentation, v: &[(usize, usize)]) -> String {
    v.iter().map(|&(a, b)| format!("{} → {}", show(q, a), show(q, b))).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_load() {
        let r = records();
        assert_eq!(r.len(), 8);
        let e8 = r.iter().find(|x| x.type_label == "E8").unwrap();
        assert_eq!(e8.vertices.len(), 41);
        assert_eq!(e8.edges.len(), 109);
        let sum: usize = e8.cartan.iter().flat_map(|c| c.matrix.iter().flatten()).sum();
        assert_eq!(sum, 256);
    }

    #[test]
    fn dihedral_records_by_parity() {
        assert_eq!(record_for("I2(7)".parse().unwrap()).unwrap().type_label, "I2(odd)");
        assert_eq!(record_for("I2(10)".parse().unwrap()).unwrap().type_label, "I2(even)");
        assert!(record_for("A3".parse().unwrap()).is_none());
    }

    #[test]
    fn h3_and_f4_match() {
        for t in ["H3", "F4", "I2(7)", "I2(6)"] {
            let q = QuiverPresentation::from_label(t).unwrap();
            let rep = compare(&q, record_for(q.datum().ctype()).unwrap());
            assert!(rep.passed(), "{rep}");
        }
    }
}
