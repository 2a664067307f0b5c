//! Coxeter data for a few types: orders, roots, longest elements and the
//! classes of conjugate subsets of `S`.
//!
//!     cargo run --example coxeter_groups -- F4

use descent_core::coxeter::{ClassTable, CoxeterDatum, Gate, Subset, TransportTable};

fn main() -> descent_core::Result<()> {
    let labels: Vec<String> = std::env::args().skip(1).collect();
    let labels = if labels.is_empty() { vec!["A3".into(), "I2(5)".into(), "H3".into(), "E6".into()] } else { labels };
    for label in labels {
        let d = CoxeterDatum::from_label(&label)?;
        let n = d.rank();
        println!("{}: rank {n}, |W| = {}, {} positive roots", d.ctype(), d.group_order(), d.num_positive_roots());
        let w0 = d.longest_element(d.full_set());
        println!("  ℓ(w0) = {}, w0 central: {}", d.length(&w0), d.longest_is_central());

        let table = TransportTable::new(&d);
        let classes = ClassTable::new(&d, &table);
        println!("  {} classes of subsets:", classes.len());
        for c in classes.iter() {
            println!("    {:<10} [{}]  {} member(s)", c.name, c.rep.label(n), c.members.len());
        }

        if d.group_order_u128() <= 100_000 {
            let j = Subset::singleton(0);
            let x = d.enumerate_x(j, Gate::default())?;
            println!("  |X_{{1}}| = {} = |W| / 2", x.len());
        }
    }
    Ok(())
}
