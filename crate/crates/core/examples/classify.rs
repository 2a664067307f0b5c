//! Which small-rank descent algebras are path algebras, and which are
//! commutative.

use descent_core::presentation::QuiverPresentation;
use descent_core::render;

fn main() -> descent_core::Result<()> {
    let mut labels: Vec<String> = (1..=5).map(|n| format!("A{n}")).collect();
    labels.extend((2..=6).map(|n| format!("B{n}")));
    labels.extend((4..=6).map(|n| format!("D{n}")));
    labels.extend(["I2(5)", "I2(6)", "H3", "F4"].map(String::from));
    for l in labels {
        print!("{}", render::classify_text(&QuiverPresentation::from_label(&l)?));
    }
    Ok(())
}
