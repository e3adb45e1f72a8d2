//! Runs both checks on the built-in structure.
//!
//! `cargo run --release --example verify_example -- 7`

use ainfty::engine::{verify_structure, CheckMode};
use ainfty::example::paper_example;
use ainfty::report::{emit_report, ReportFormat};

fn main() -> ainfty::Result<()> {
    let max_arity = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let start = std::time::Instant::now();
    let report = verify_structure(&paper_example(), max_arity, CheckMode::Both)?;
    print!("{}", String::from_utf8_lossy(&emit_report(&report, ReportFormat::Text)));
    println!("{} words in {:.2?}", report.words_checked(), start.elapsed());
    Ok(())
}
