//! Streets of a small type: orbits of subset paths, their collapse `Δ` in
//! the e-basis, and products of streets.

use descent_core::coxeter::{ClassTable, CoxeterDatum, TransportTable};
use descent_core::descent::Basis;
use descent_core::descent::DescentVector;
use descent_core::streets::{StreetAlgebra, StreetSystem, SubsetPath};

fn main() -> descent_core::Result<()> {
    let d = CoxeterDatum::from_label("H3")?;
    let n = d.rank();
    let table = TransportTable::new(&d);
    let classes = ClassTable::new(&d, &table);
    let sys = StreetSystem::new(&table, &classes)?;
    println!("{} paths in {} streets", sys.num_paths(), sys.streets().len());
    for s in sys.streets().iter().filter(|s| s.len <= 1) {
        let delta = DescentVector::from_coeffs(Basis::E, n, sys.delta(s.id).clone());
        println!("  {:<10} {} paths, Δ = {delta}", sys.label(s.id), s.members.len());
    }

    let p = SubsetPath::parse("123;1", n)?;
    let q = SubsetPath::parse("23;2", n)?;
    let (a, b) = (sys.street_of(&p).unwrap(), sys.street_of(&q).unwrap());
    let prod: Vec<String> = sys.product(a, b).iter().map(|&s| sys.label(s as usize)).collect();
    println!("{} ∘ {} = {{{}}}", sys.label(a), sys.label(b), prod.join(", "));

    let alg = StreetAlgebra::new(&table, classes)?;
    println!("rank of Δ: {} = 2^{n}", alg.dim());
    Ok(())
}
