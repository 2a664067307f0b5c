//! Minimal relations of the quiver presentation, with the dimension
//! certificate.

use descent_core::presentation::{Part, QuiverPresentation};
use descent_core::render;

fn main() -> descent_core::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "E6".into());
    let q = QuiverPresentation::from_label(&label)?;
    print!("{}", render::relations_text(&q, Part::Full));
    println!("dim kQ/I = {}, 2^n = {}", q.quotient_dim(), 1usize << q.datum().rank());
    for (i, e) in q.edges().iter().enumerate().take(3) {
        println!("arrow {} → {} ({}) maps to {}", e.source + 1, e.target + 1, q.edge_label(i), q.edge_image(i));
    }
    Ok(())
}
