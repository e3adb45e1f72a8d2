//! Symmetrizes the primed maps and checks the L∞ relations.

use ainfty::example::{example_space, paper_example};
use ainfty::linfty::{symmetrized_family, verify_linfty};

fn main() -> ainfty::Result<()> {
    let s = paper_example();
    let space = example_space();
    for l in symmetrized_family(&s, 3)? {
        println!("l'_{}: {} nonzero inputs, graded symmetric: {}", l.arity(), l.support_len(), l.is_graded_symmetric());
        for w in space.words(l.arity()) {
            let v = l.apply(&w)?;
            if !v.is_zero() {
                println!("  ({}) -> {}", space.word_names(&w).join(","), v.render(&space));
            }
        }
    }
    let report = verify_linfty(&s, 5)?;
    println!("relations through arity 5: {}", if report.pass { "hold" } else { "fail" });
    Ok(())
}
