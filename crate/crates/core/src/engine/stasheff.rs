//! The Stasheff identities evaluated directly on `V`.

use crate::error::{Error, Result};
use crate::graded::{Vector, Word};
use crate::sign::alpha_sign;

use super::multimap::Side;
use super::structure::{AStructure, Family};

/// `Σ_{λ=0}^{n-1} Σ_{k=1}^{n-λ} α · m_{n-k+1}(x_1..x_λ ⊗ m_k(x_{λ+1}..x_{λ+k}) ⊗ ..)`
/// on one word, from materialized unprimed maps.
pub fn stasheff_defect_family(family: &Family, x: &Word) -> Result<Vector> {
    if family.side() != Side::Plain {
        return Err(Error::Input("the direct identity needs the unprimed maps".into()));
    }
    let n = x.arity();
    family.require(n)?;
    let space = family.space();
    let letters = x.letters();
    let mut defect = Vector::zero();
    let mut prefix_degree = 0i64;
    for lambda in 0..n {
        for k in 1..=n - lambda {
            let (Some(inner), Some(outer)) = (family.get(k), family.get(n - k + 1)) else {
                continue;
            };
            let Some(inner_out) = inner.lookup(&letters[lambda..lambda + k]) else { continue };
            let alpha = alpha_sign(k, lambda, n, prefix_degree)?;
            for (y, c) in inner_out.iter() {
                let outer_word = x.splice(lambda, k, y);
                if let Some(v) = outer.lookup(outer_word.letters()) {
                    for (z, a) in v.iter() {
                        let t = a * c;
                        defect.add_term(z, if alpha.is_minus() { -t } else { t });
                    }
                }
            }
        }
        prefix_degree += space.degree(letters[lambda])?;
    }
    Ok(defect)
}

/// Defect of the Stasheff identity at the word `x`; zero for an A∞
/// structure.
pub fn stasheff_defect(s: &AStructure, x: &Word) -> Result<Vector> {
    let family = s.unprimed_family(x.arity())?;
    stasheff_defect_family(&family, x)
}
