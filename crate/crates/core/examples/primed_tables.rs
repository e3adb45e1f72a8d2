//! Primes the built-in maps and compares them with the sign-free tables.

use ainfty::engine::prime;
use ainfty::example::{example_m, example_mprime, example_space};

fn main() -> ainfty::Result<()> {
    let space = example_space();
    for n in 1..=4 {
        let m = example_m(n)?;
        let primed = prime(&m)?;
        println!("arity {n}: {} entries, primed matches table: {}", m.support_len(), primed == example_mprime(n)?);
        for (w, v) in m.entries() {
            println!("  m({}) = {}", space.word_names(&w).join(","), v.render(&space));
        }
    }
    Ok(())
}
