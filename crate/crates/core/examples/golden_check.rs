//! Compares computed presentations with the embedded reference tables.

use descent_core::golden;
use descent_core::presentation::QuiverPresentation;

fn main() -> descent_core::Result<()> {
    let long = std::env::args().any(|a| a == "--long");
    let mut failed = 0;
    for label in golden::golden_types(long) {
        let q = QuiverPresentation::from_label(&label)?;
        let report = golden::compare(&q, golden::record_for(q.datum().ctype()).expect("record exists"));
        print!("{report}");
        failed += usize::from(!report.passed());
    }
    println!("{failed} type(s) failed");
    Ok(())
}
