//! Cartan matrix and Loewy series of the projectives, split into even and
//! odd parts when `w0` is central.

use descent_core::presentation::{Part, QuiverPresentation};
use descent_core::render;

fn main() -> descent_core::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "F4".into());
    let q = QuiverPresentation::from_label(&label)?;
    let parts: &[Part] = if q.parity().is_central() { &[Part::Even, Part::Odd] } else { &[Part::Full] };
    for &p in parts {
        print!("{}", render::cartan_text(&q, p));
        println!();
        print!("{}", render::loewy_text(&q, p));
        println!();
    }
    println!("Loewy length {}", q.radical().loewy_length());
    Ok(())
}
