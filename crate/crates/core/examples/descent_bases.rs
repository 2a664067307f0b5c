//! The three bases x, y, e of the descent algebra and Solomon's structure
//! constants, for a small group.

use descent_core::coxeter::Subset;
use descent_core::descent::{Basis, DescentAlgebra, DescentVector};

fn main() -> descent_core::Result<()> {
    let alg = DescentAlgebra::from_label("A3")?;
    let n = alg.rank();
    let s = |d: &str| Subset::parse_digits(d).unwrap();

    let x1 = DescentVector::basis_element(Basis::X, n, s("1"));
    println!("x_1 = {}", alg.convert(&x1, Basis::Y)?);
    println!("    = {}", alg.convert(&x1, Basis::E)?);

    let x13 = DescentVector::basis_element(Basis::X, n, s("13"));
    println!("x_1 · x_13 = {}", alg.oracle_multiply(&x1, &x13)?);
    println!("a(1, 13, ∅) = {}", alg.structure_constant(s("1"), s("13"), s(""))?);

    let w0 = alg.w0_vector();
    println!("y_∅ = {}", alg.convert(&DescentVector::basis_element(Basis::Y, n, Subset::EMPTY), Basis::E)?);
    println!("w0² = {}", alg.oracle_multiply(&w0, &w0)?);

    for c in 0..alg.classes().len() {
        let e = alg.class_idempotent(c);
        let sq = alg.oracle_multiply(&e, &e)?;
        println!("e_{} idempotent: {}", alg.classes().classes[c].name, sq == e);
    }
    Ok(())
}
