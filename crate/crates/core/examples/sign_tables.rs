//! Prints the sign helpers for small arities.

use ainfty::sign::{alpha_sign, koszul_permutation_sign, s_sign, susp_iso_sign};

fn main() -> ainfty::Result<()> {
    println!("n  s_n  susp");
    for n in 1..=9 {
        println!("{n:<2} {:>3}  {:>4}", s_sign(n)?, susp_iso_sign(n)?);
    }

    println!("\nalpha for n = 3, all letters of degree 1:");
    for lambda in 0..3 {
        for k in 1..=3 - lambda {
            println!("  k={k} lambda={lambda}: {}", alpha_sign(k, lambda, 3, lambda as i64)?);
        }
    }

    let degrees = [1, 1, 2];
    println!("\nrearranging degrees {degrees:?}:");
    for sigma in [[0, 1, 2], [1, 0, 2], [2, 0, 1], [2, 1, 0]] {
        println!("  {sigma:?}: {}", koszul_permutation_sign(&degrees, &sigma)?);
    }
    Ok(())
}
