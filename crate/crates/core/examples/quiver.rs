//! Quiver of a descent algebra as a table and as a DOT graph.
//!
//!     cargo run --release --example quiver -- E6 | dot -Tsvg > e6.svg

use descent_core::presentation::{Part, QuiverPresentation};
use descent_core::render;

fn main() -> descent_core::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "H4".into());
    let q = QuiverPresentation::from_label(&label)?;
    eprint!("{}", render::quiver_text(&q, Part::Full));
    print!("{}", render::render_dot(&q, Part::Full));
    Ok(())
}
