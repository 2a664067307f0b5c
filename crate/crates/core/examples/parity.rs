//! The even/odd split: central idempotents `ε±` when `w0` is central, and a
//! nonzero mixed-parity arrow otherwise.

use descent_core::presentation::{ParitySplit, QuiverPresentation};

fn main() -> descent_core::Result<()> {
    for label in ["I2(8)", "I2(9)", "H4", "E6", "E7"] {
        let q = QuiverPresentation::from_label(label)?;
        match q.parity() {
            ParitySplit::Central { even, .. } => {
                println!("{label}: central, ε+ has {} terms in the e-basis", even.terms().count());
            }
            ParitySplit::NotCentral { witness: Some((a, b)) } => {
                let v = q.vertices();
                println!("{label}: not central, arrow {} → {} joins parts", v[*a].name, v[*b].name);
            }
            ParitySplit::NotCentral { witness: None } => println!("{label}: not central"),
        }
    }
    Ok(())
}
