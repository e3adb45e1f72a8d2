//! Reads a structure from text, checks it and writes it back out.
//!
//! The structure here is the dual numbers `k[e]/(e²)` with unit `u` with `e` in degree 0
//! and no higher maps, so only associativity is being tested.

use ainfty::engine::{verify_structure, CheckMode};
use ainfty::format::{parse_structure, serialize_structure};

const DUAL_NUMBERS: &str = "\
ainfty v1
convention cochain
basis u 0
basis e 0
map 2: u u -> 1 u
map 2: u e -> 1 e
map 2: e u -> 1 e
";

fn main() -> ainfty::Result<()> {
    let s = parse_structure("dual-numbers", DUAL_NUMBERS)?;
    let report = verify_structure(&s, 4, CheckMode::Both)?;
    println!("dual numbers: {} words, pass = {}", report.words_checked(), report.pass);

    // A typo in the text is reported with its line.
    let broken = DUAL_NUMBERS.replace("e u -> 1 e", "e u -> 1 f");
    match parse_structure("broken", &broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("broken file: {e}"),
    }

    print!("\n{}", serialize_structure(&s)?);
    Ok(())
}
