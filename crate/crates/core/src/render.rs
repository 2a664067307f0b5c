//! Text tables, DOT graphs and JSON for a [`QuiverPresentation`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coxeter::Subset;
use crate::linalg::Rational;
use crate::presentation::{Part, QuiverPresentation, Relation};

fn rep_string(s: Subset) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        s.digits()
    }
}

fn edge_in_part(q: &QuiverPresentation, part: Part, i: usize) -> bool {
    let e = &q.edges()[i];
    part.admits(&q.vertices()[e.source]) && part.admits(&q.vertices()[e.target])
}

fn arrow(index: usize) -> String {
    format!("→{}", ".".repeat(index))
}

/// `(3 → 6 →. 11)`, with vertex numbers starting at 1.
pub fn path_string(q: &QuiverPresentation, path: &[usize]) -> String {
    let mut s = format!("({}", q.edges()[path[0]].source + 1);
    for &e in path {
        let e = &q.edges()[e];
        write!(s, " {} {}", arrow(e.index), e.target + 1).unwrap();
    }
    s.push(')');
    s
}

/// `p₀ = c₁·p₁ + …`, solved for the leading path.
pub fn relation_string(q: &QuiverPresentation, r: &Relation) -> String {
    let lhs = path_string(q, &r.terms[0].0);
    let mut rhs = String::new();
    for (path, c) in &r.terms[1..] {
        let c = -c.clone();
        let neg = c.signum() < 0;
        let abs = c.abs();
        if rhs.is_empty() {
            if neg {
                rhs.push('-');
            }
        } else {
            rhs.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            write!(rhs, "{abs}·").unwrap();
        }
        rhs.push_str(&path_string(q, path));
    }
    if rhs.is_empty() {
        rhs.push('0');
    }
    format!("{lhs} = {rhs}")
}

fn part_title(part: Part) -> &'static str {
    match part {
        Part::Full => "",
        Part::Even => " (even part)",
        Part::Odd => " (odd part)",
    }
}

pub fn quiver_text(q: &QuiverPresentation, part: Part) -> String {
    let n = q.datum().rank();
    let verts = q.part_vertices(part);
    let edges: Vec<usize> = (0..q.edges().len()).filter(|&i| edge_in_part(q, part, i)).collect();
    let mut s = String::new();
    writeln!(s, "Quiver of {}{}: {} vertices, {} edges", q.type_label(), part_title(part), verts.len(), edges.len()).unwrap();
    writeln!(s).unwrap();
    writeln!(s, "{:>4}  {:<12} λ", "v", "type").unwrap();
    for &v in &verts {
        let x = &q.vertices()[v];
        writeln!(s, "{:>4}. {:<12} [{}]", v + 1, x.name, x.rep.label(n)).unwrap();
    }
    if !edges.is_empty() {
        writeln!(s).unwrap();
        writeln!(s, "{:<14} α", "e").unwrap();
        for &i in &edges {
            let e = &q.edges()[i];
            let head = format!("{} {} {}.", e.source + 1, arrow(e.index), e.target + 1);
            writeln!(s, "{head:<14} {}", e.street).unwrap();
        }
    }
    s
}

pub fn cartan_text(q: &QuiverPresentation, part: Part) -> String {
    let verts = q.part_vertices(part);
    let c = q.cartan_matrix();
    let width = verts.iter().map(|&v| q.vertices()[v].name.chars().count()).max().unwrap_or(1);
    let cell = verts.iter().flat_map(|&a| verts.iter().map(move |&b| (a, b))).map(|(a, b)| c[a][b].to_string().len()).max().unwrap_or(1);
    let mut s = String::new();
    writeln!(s, "Cartan matrix of {}{} (row λ: composition factors of P_λ)", q.type_label(), part_title(part)).unwrap();
    for &a in &verts {
        let name = &q.vertices()[a].name;
        write!(s, "{name}{} |", " ".repeat(width - name.chars().count())).unwrap();
        for &b in &verts {
            let x = c[a][b];
            let t = if x == 0 { ".".to_string() } else { x.to_string() };
            write!(s, " {t:>cell$}").unwrap();
        }
        writeln!(s).unwrap();
    }
    s
}

fn layer_string(q: &QuiverPresentation, layer: &[usize]) -> String {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in layer {
        *counts.entry(v).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(v, k)| {
            let name = &q.vertices()[v].name;
            if k == 1 {
                name.clone()
            } else {
                format!("({name})^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn loewy_text(q: &QuiverPresentation, part: Part) -> String {
    let mut s = String::new();
    writeln!(s, "Loewy series of the projectives of {}{}", q.type_label(), part_title(part)).unwrap();
    for v in q.part_vertices(part) {
        let layers: Vec<String> = q.loewy_series(v).iter().map(|l| layer_string(q, l)).collect();
        writeln!(s, "P({}): {}", q.vertices()[v].name, layers.join(" / ")).unwrap();
    }
    s
}

pub fn relations_text(q: &QuiverPresentation, part: Part) -> String {
    let rels: Vec<&Relation> = q.relations().iter().filter(|r| part.admits(&q.vertices()[r.source])).collect();
    let mut s = String::new();
    if rels.is_empty() {
        writeln!(s, "{}{}: no relations; the algebra is a path algebra", q.type_label(), part_title(part)).unwrap();
        return s;
    }
    writeln!(s, "{}{}: {} relations", q.type_label(), part_title(part), rels.len()).unwrap();
    for r in rels {
        writeln!(s, "  [degree {}] {}", r.degree, relation_string(q, r)).unwrap();
    }
    s
}

pub fn classify_text(q: &QuiverPresentation) -> String {
    let c = q.classify();
    format!(
        "{}: path algebra: {}, commutative: {}, w0 central: {}\n",
        q.type_label(),
        if c.is_path_algebra { "yes" } else { "no" },
        if c.is_commutative { "yes" } else { "no" },
        if q.parity().is_central() { "yes" } else { "no" },
    )
}

/// A directed multigraph, one node per vertex and one arrow per edge. With
/// `Part::Full` and central `w₀` the parts become two clusters.
pub fn render_dot(q: &QuiverPresentation, part: Part) -> String {
    let n = q.datum().rank();
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", q.type_label()).unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    let node = |v: usize| {
        let x = &q.vertices()[v];
        format!("v{} [label=\"{} [{}]\"];", v + 1, x.name, x.rep.label(n))
    };
    if part == Part::Full && q.parity().is_central() {
        for (name, p) in [("even", Part::Even), ("odd", Part::Odd)] {
            writeln!(s, "  subgraph cluster_{name} {{").unwrap();
            writeln!(s, "    label=\"{name}\";").unwrap();
            for v in q.part_vertices(p) {
                writeln!(s, "    {}", node(v)).unwrap();
            }
            writeln!(s, "  }}").unwrap();
        }
    } else {
        for v in q.part_vertices(part) {
            writeln!(s, "  {}", node(v)).unwrap();
        }
    }
    for (i, e) in q.edges().iter().enumerate() {
        if edge_in_part(q, part, i) {
            writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.source + 1, e.target + 1, q.edge_label(i)).unwrap();
        }
    }
    writeln!(s, "}}").unwrap();
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub rep: String,
    pub name: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: String,
    pub dst: String,
    pub street: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub path: Vec<String>,
    pub coeff: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityJson {
    pub central: bool,
}

/// Machine-readable form of a presentation (or one of its parts).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub relations: Vec<RelationJson>,
    /// Rows and columns in the order of `vertices`.
    pub cartan: Vec<Vec<usize>>,
    pub loewy: BTreeMap<String, Vec<Vec<String>>>,
    pub parity: ParityJson,
}

impl PresentationJson {
    pub fn new(q: &QuiverPresentation, part: Part) -> Self {
        let verts = q.part_vertices(part);
        let rep = |v: usize| rep_string(q.vertices()[v].rep);
        let c = q.cartan_matrix();
        PresentationJson {
            type_label: q.type_label().to_string(),
            vertices: verts
                .iter()
                .map(|&v| VertexJson { rep: rep(v), name: q.vertices()[v].name.clone(), size: q.vertices()[v].size })
                .collect(),
            edges: (0..q.edges().len())
                .filter(|&i| edge_in_part(q, part, i))
                .map(|i| {
                    let e = &q.edges()[i];
                    EdgeJson { src: rep(e.source), dst: rep(e.target), street: e.street.clone(), index: e.index }
                })
                .collect(),
            relations: q
                .relations()
                .iter()
                .filter(|r| part.admits(&q.vertices()[r.source]))
                .map(|r| RelationJson {
                    degree: r.degree,
                    terms: r
                        .terms
                        .iter()
                        .map(|(p, c)| TermJson {
                            path: p.iter().map(|&e| q.edges()[e].street.clone()).collect(),
                            coeff: c.clone(),
                        })
                        .collect(),
                })
                .collect(),
            cartan: verts.iter().map(|&a| verts.iter().map(|&b| c[a][b]).collect()).collect(),
            loewy: verts
                .iter()
                .map(|&v| {
                    let layers = q
                        .loewy_series(v)
                        .iter()
                        .map(|l| l.iter().map(|&u| q.vertices()[u].name.clone()).collect())
                        .collect();
                    (rep(v), layers)
                })
                .collect(),
            parity: ParityJson { central: q.parity().is_central() },
        }
    }
}

pub fn render_json(q: &QuiverPresentation, part: Part) -> String {
    serde_json::to_string_pretty(&PresentationJson::new(q, part)).expect("presentation serializes")
}

pub fn parse_json(s: &str) -> serde_json::Result<PresentationJson> {
    serde_json::from_str(s)
}
