//! JSON export of a presentation and parsing it back.

use descent_core::presentation::{Part, QuiverPresentation};
use descent_core::render::{self, PresentationJson};

fn main() -> descent_core::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "H3".into());
    let q = QuiverPresentation::from_label(&label)?;
    let text = render::render_json(&q, Part::Full);
    println!("{text}");
    let back = render::parse_json(&text).expect("valid json");
    assert_eq!(back, PresentationJson::new(&q, Part::Full));
    eprintln!("round trip ok: {} vertices, {} edges", back.vertices.len(), back.edges.len());
    Ok(())
}
