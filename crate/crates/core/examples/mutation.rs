//! Flips one entry of the built-in structure and shows where it breaks.

use ainfty::engine::{d_squared, stasheff_defect, verify_structure, CheckMode};
use ainfty::example::{example_space, mutated_example, V1, V2};
use ainfty::graded::Word;

fn main() -> ainfty::Result<()> {
    let s = mutated_example(4)?;
    let space = example_space();
    let w = Word::new(vec![V1, V2])?;
    println!("D²(v1,v2)      = {}", d_squared(&s, &w)?.render());
    println!("direct defect  = {}", stasheff_defect(&s, &w)?.render(&space));

    let report = verify_structure(&s, 4, CheckMode::Both)?;
    for c in &report.checks {
        println!("{:<12} arity {}: {} of {} words fail", c.check, c.arity, c.failures.len(), c.words);
    }
    if let Some((c, f)) = report.first_failure() {
        println!("first failure: {} at ({})", c.check, f.word.join(","));
    }
    Ok(())
}
