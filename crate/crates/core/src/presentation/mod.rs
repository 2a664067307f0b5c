//! Quiver presentation of `Σ(W)`: vertices, arrows, relations, Cartan
//! matrix, Loewy series and the even/odd split.

mod quiver;
mod radical;
mod relations;

use serde::{Deserialize, Serialize};

pub use quiver::Edge;
pub use radical::{Blocks, RadicalFiltration};
pub use relations::Relation;

use crate::coxeter::{ClassTable, CoxeterDatum, Subset, TransportTable};
use crate::descent::{Basis, DescentVector};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};
use crate::streets::StreetAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub rep: Subset,
    pub name: String,
    /// `‖λ‖`.
    pub size: usize,
    /// Number of subsets in the class.
    pub members: usize,
}

impl Vertex {
    pub fn is_even(&self) -> bool {
        self.size.is_multiple_of(2)
    }
}

/// Which part of the algebra to report on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Full,
    Even,
    Odd,
}

impl Part {
    pub fn admits(self, v: &Vertex) -> bool {
        match self {
            Part::Full => true,
            Part::Even => v.is_even(),
            Part::Odd => !v.is_even(),
        }
    }
}

/// `ε± = Σ_{‖λ‖ even/odd} e_λ` and whether they split `Σ(W)`.
#[derive(Debug, Clone, PartialEq)]
pub enum ParitySplit {
    /// `w₀` is central: `ε±` are central orthogonal idempotents with
    /// `ε⁺ + ε⁻ = 1` and every mixed-parity block vanishes.
    Central { even: DescentVector, odd: DescentVector },
    /// `w₀` is not central; `witness` is an arrow between vertices of
    /// different parity, when there is one.
    NotCentral { witness: Option<(usize, usize)> },
}

impl ParitySplit {
    pub fn is_central(&self) -> bool {
        matches!(self, ParitySplit::Central { .. })
    }
}

/// Whether `Σ(W)` is a path algebra and whether it is commutative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_path_algebra: bool,
    pub is_commutative: bool,
}

pub struct QuiverPresentation {
    type_label: String,
    datum: CoxeterDatum,
    algebra: StreetAlgebra,
    radical: RadicalFiltration,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    edge_images: Vec<SparseVec>,
    relations: Vec<Relation>,
    quotient_dim: usize,
    parity: ParitySplit,
}

impl QuiverPresentation {
    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(CoxeterDatum::from_label(label)?)
    }

    pub fn new(datum: CoxeterDatum) -> Result<Self> {
        let transport = TransportTable::new(&datum);
        let classes = ClassTable::new(&datum, &transport);
        let algebra = StreetAlgebra::new(&transport, classes)?;
        Self::from_algebra(datum, algebra)
    }

    pub fn from_algebra(datum: CoxeterDatum, algebra: StreetAlgebra) -> Result<Self> {
        let radical = RadicalFiltration::new(&algebra)?;
        let vertices = algebra
            .classes()
            .iter()
            .map(|c| Vertex { rep: c.rep, name: c.name.clone(), size: c.size, members: c.members.len() })
            .collect::<Vec<_>>();
        let (edges, edge_images) = quiver::quiver_edges(&algebra, &radical);
        let rel = relations::relations(&algebra, &edges, &edge_images)?;
        if rel.quotient_dim != algebra.dim() {
            return Err(Error::Inconsistent(format!(
                "path algebra modulo relations has dimension {}, expected {}",
                rel.quotient_dim,
                algebra.dim()
            )));
        }
        let parity = parity_split(&datum, &algebra, &vertices, &edges)?;
        Ok(QuiverPresentation {
            type_label: datum.ctype().to_string(),
            datum,
            algebra,
            radical,
            vertices,
            edges,
            edge_images,
            relations: rel.relations,
            quotient_dim: rel.quotient_dim,
            parity,
        })
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn algebra(&self) -> &StreetAlgebra {
        &self.algebra
    }

    pub fn radical(&self) -> &RadicalFiltration {
        &self.radical
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Image of edge `i` in `e`-coordinates.
    pub fn edge_image(&self, i: usize) -> DescentVector {
        DescentVector::from_coeffs(Basis::E, self.algebra.rank(), self.algebra.to_e(&self.edge_images[i]))
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// `dim KQ/I`, equal to `2^n` by construction.
    pub fn quotient_dim(&self) -> usize {
        self.quotient_dim
    }

    pub fn parity(&self) -> &ParitySplit {
        &self.parity
    }

    /// Vertex index of the class containing `l`.
    pub fn vertex_of(&self, l: Subset) -> usize {
        self.algebra.classes().class_of(l)
    }

    /// Row `λ` lists the composition factors of the projective `P_λ`:
    /// entry `(λ, μ)` is `dim e_μ Σ e_λ`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let k = self.vertices.len();
        (0..k).map(|lambda| (0..k).map(|mu| self.radical.block_dim(0, mu, lambda)).collect()).collect()
    }

    /// Radical layers of `P_λ`, top first, each a sorted multiset of vertices.
    pub fn loewy_series(&self, lambda: usize) -> Vec<Vec<usize>> {
        let k = self.vertices.len();
        let mut layers = Vec::new();
        for level in 0..self.radical.loewy_length() {
            let mut layer = Vec::new();
            for mu in 0..k {
                let m = self.radical.block_dim(level, mu, lambda) - self.radical.block_dim(level + 1, mu, lambda);
                layer.extend(std::iter::repeat_n(mu, m));
            }
            if layer.is_empty() {
                break;
            }
            layers.push(layer);
        }
        layers
    }

    pub fn classify(&self) -> Classification {
        let a = &self.algebra;
        let commutative = (0..a.dim()).all(|i| (i + 1..a.dim()).all(|j| a.basis_product(i, j) == a.basis_product(j, i)));
        Classification { is_path_algebra: self.relations.is_empty(), is_commutative: commutative }
    }

    /// Vertices belonging to `part`, in display order.
    pub fn part_vertices(&self, part: Part) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| part.admits(&self.vertices[v])).collect()
    }

    /// Edge label in the style `[S;41]`, with dots for multiple arrows.
    pub fn edge_label(&self, i: usize) -> String {
        let e = &self.edges[i];
        format!("{}{}", e.street, ".".repeat(e.index))
    }
}

fn parity_split(datum: &CoxeterDatum, alg: &StreetAlgebra, vertices: &[Vertex], edges: &[Edge]) -> Result<ParitySplit> {
    let mixed = edges.iter().find(|e| vertices[e.source].is_even() != vertices[e.target].is_even());
    if !datum.longest_is_central() {
        return Ok(ParitySplit::NotCentral { witness: mixed.map(|e| (e.source, e.target)) });
    }
    let n = alg.rank();
    let mut even = SparseVec::new();
    let mut odd = SparseVec::new();
    for (i, v) in vertices.iter().enumerate() {
        let e = alg.class_idempotent(i);
        if v.is_even() {
            even.axpy(&Rational::ONE, e.coeffs());
        } else {
            odd.axpy(&Rational::ONE, e.coeffs());
        }
    }
    let (be, bo) = (alg.to_b(&even)?, alg.to_b(&odd)?);
    for i in 0..alg.dim() {
        if vertices[alg.end_class(i)].is_even() != vertices[alg.source_class(i)].is_even() {
            return Err(Error::Inconsistent("w₀ is central but a mixed-parity block is nonzero".into()));
        }
        let b = SparseVec::unit(i);
        for eps in [&be, &bo] {
            if alg.mul(eps, &b) != alg.mul(&b, eps) {
                return Err(Error::Inconsistent("ε± is not central".into()));
            }
        }
    }
    if !alg.mul(&be, &bo).is_zero() || alg.mul(&be, &be) != be || alg.mul(&bo, &bo) != bo {
        return Err(Error::Inconsistent("ε± are not orthogonal idempotents".into()));
    }
    Ok(ParitySplit::Central {
        even: DescentVector::from_coeffs(Basis::E, n, even),
        odd: DescentVector::from_coeffs(Basis::E, n, odd),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep_vertex(q: &QuiverPresentation, digits: &str) -> usize {
        q.vertex_of(Subset::parse_digits(digits).unwrap())
    }

    #[test]
    fn h3_presentation() {
        let q = QuiverPresentation::from_label("H3").unwrap();
        assert_eq!(q.vertices().len(), 6);
        assert_eq!(q.edges().len(), 2);
        let (a1, h3) = (rep_vertex(&q, "1"), rep_vertex(&q, "123"));
        assert!(q.edges().iter().all(|e| e.source == a1 && e.target == h3));
        assert!(q.relations().is_empty());
        assert_eq!(q.radical().dim(1), 2);
        assert_eq!(q.radical().dim(2), 0);
        assert_eq!(q.loewy_series(h3), vec![vec![h3], vec![a1, a1]]);
        assert_eq!(q.cartan_matrix()[h3][a1], 2);
        assert!(q.parity().is_central());
    }

    #[test]
    fn i2_even_has_no_edges() {
        let q = QuiverPresentation::from_label("I2(4)").unwrap();
        assert_eq!(q.vertices().len(), 4);
        assert!(q.edges().is_empty());
        assert_eq!(q.radical().dim(1), 0);
        assert!(q.classify().is_commutative);
    }

    #[test]
    fn i2_odd_witness() {
        let q = QuiverPresentation::from_label("I2(5)").unwrap();
        assert_eq!(q.edges().len(), 1);
        assert_eq!(q.edges()[0].street, "[S;1]");
        match q.parity() {
            ParitySplit::NotCentral { witness: Some((s, t)) } => {
                assert_eq!((*s, *t), (rep_vertex(&q, "1"), rep_vertex(&q, "12")));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn f4_edges() {
        let q = QuiverPresentation::from_label("F4").unwrap();
        let mut got: Vec<(usize, usize)> = q.edges().iter().map(|e| (e.source, e.target)).collect();
        got.sort();
        let mut want: Vec<(usize, usize)> = [("13", "1234"), ("13", "1234"), ("1", "123"), ("3", "234")]
            .iter()
            .map(|(a, b)| (rep_vertex(&q, a), rep_vertex(&q, b)))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn e6_relations() {
        let q = QuiverPresentation::from_label("E6").unwrap();
        assert_eq!(q.vertices().len(), 17);
        assert_eq!(q.edges().len(), 19);
        let mut degrees: Vec<usize> = q.relations().iter().map(|r| r.degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 3]);
        assert_eq!(q.quotient_dim(), 64);
        let s = rep_vertex(&q, "123456");
        assert_eq!(q.loewy_series(s).len(), 5);
    }

    #[test]
    fn loewy_layers_sum_to_cartan_rows() {
        let q = QuiverPresentation::from_label("E6").unwrap();
        let c = q.cartan_matrix();
        for lambda in 0..q.vertices().len() {
            let mut row = vec![0; q.vertices().len()];
            for mu in q.loewy_series(lambda).into_iter().flatten() {
                row[mu] += 1;
            }
            assert_eq!(row, c[lambda]);
        }
        assert_eq!(c.iter().flatten().sum::<usize>(), 64);
    }
}
