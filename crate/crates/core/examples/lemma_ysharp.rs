//! Enumeration check of the three statements about `Y_K ∩ X_L♯` on every
//! pair `L ⊆ K`.
//!
//!     cargo run --release --example lemma_ysharp -- H4

use descent_core::descent::DescentAlgebra;

fn main() -> descent_core::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "H3".into());
    let alg = DescentAlgebra::from_label(&label)?;
    let reports = alg.verify_lemma_ysharp_all()?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    println!("{label}: {} pairs, {} failures", reports.len(), failed.len());
    for r in failed {
        println!("  K = {:?}, L = {:?}: {r:?}", r.k, r.l);
    }
    Ok(())
}
