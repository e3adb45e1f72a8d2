//! Coderivation extension of the primed maps to the tensor coalgebra
//! `T(↓V)` and the total coderivation `D = Σ m'_k`.
//!
//! `m'_k` acting on `↓x_1 ⊗ … ⊗ ↓x_n` sums over every window of `k`
//! consecutive letters. The map passes the prefix in front of the window,
//! which costs the Koszul sign `(-1)^{deg(m) · deg↓(prefix)}`; for the
//! degree 1 maps used here that is `(-1)^{|x_1|+…+|x_i| - i}`.

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graded::{GradedSpace, Scalar, TensorPoly, Word};
use crate::sign::pass_operator_sign;

use super::multimap::{MultiMap, Side};
use super::structure::{AStructure, Family};

fn desuspended_letter_degree(space: &GradedSpace, i: usize) -> i64 {
    space.basis()[i].degree - 1
}

/// Adds `coeff · m'(w)` (one window at `offset`) to `out`.
fn accumulate_at(out: &mut TensorPoly, mp: &MultiMap, w: &Word, offset: usize, prefix: i64, coeff: &Scalar) {
    let k = mp.arity();
    let Some(v) = mp.lookup(&w.letters()[offset..offset + k]) else { return };
    let sign = pass_operator_sign(mp.degree(), prefix);
    for (y, c) in v.iter() {
        let c = c * coeff;
        let c = if sign.is_minus() { -c } else { c };
        out.add_term(w.splice(offset, k, y), c);
    }
}

/// Adds `coeff · m'(w)` summed over all windows to `out`.
fn accumulate(out: &mut TensorPoly, mp: &MultiMap, w: &Word, coeff: &Scalar) {
    let k = mp.arity();
    let n = w.arity();
    if k > n {
        return;
    }
    let space = mp.space();
    let mut prefix = 0;
    for offset in 0..=n - k {
        accumulate_at(out, mp, w, offset, prefix, coeff);
        prefix += desuspended_letter_degree(space, w.letters()[offset]);
    }
}

/// `m'` extended as a coderivation and applied to one word. Zero when the
/// map's arity exceeds the word's.
pub fn coderivation_apply(mp: &MultiMap, w: &Word) -> TensorPoly {
    let mut out = TensorPoly::zero(mp.space().clone());
    accumulate(&mut out, mp, w, &Scalar::one());
    out
}

/// The single coderivation term with the window starting at `offset`:
/// `(1^{⊗offset} ⊗ m' ⊗ 1^{⊗rest})(w)`.
pub fn coderivation_term(mp: &MultiMap, w: &Word, offset: usize) -> TensorPoly {
    let mut out = TensorPoly::zero(mp.space().clone());
    if offset + mp.arity() <= w.arity() {
        let space = mp.space();
        let prefix = w.letters()[..offset]
            .iter()
            .map(|&i| desuspended_letter_degree(space, i))
            .sum();
        accumulate_at(&mut out, mp, w, offset, prefix, &Scalar::one());
    }
    out
}

fn check_family(family: &Family, p: &TensorPoly) -> Result<()> {
    if family.side() != Side::Desuspended {
        return Err(Error::Input("D needs the primed maps".into()));
    }
    if !Arc::ptr_eq(family.space(), p.space()) && **family.space() != **p.space() {
        return Err(Error::Input("polynomial and maps live over different spaces".into()));
    }
    let needed = p.terms().map(|(w, _)| w.arity()).max().unwrap_or(0);
    family.require(needed)
}

/// `D(p)` using the materialized primed maps. On a word of arity `n` only
/// `m'_1 … m'_n` contribute.
pub fn d_apply_family(family: &Family, p: &TensorPoly) -> Result<TensorPoly> {
    check_family(family, p)?;
    let mut out = TensorPoly::zero(p.space().clone());
    for (w, c) in p.terms() {
        for k in 1..=w.arity() {
            if let Some(mp) = family.get(k) {
                accumulate(&mut out, mp, w, c);
            }
        }
    }
    Ok(out)
}

fn max_arity(p: &TensorPoly) -> usize {
    p.terms().map(|(w, _)| w.arity()).max().unwrap_or(0)
}

/// `D(p)` for a structure given either primed or unprimed.
pub fn d_apply(s: &AStructure, p: &TensorPoly) -> Result<TensorPoly> {
    let family = s.primed_family(max_arity(p))?;
    d_apply_family(&family, p)
}

pub fn d_squared_family(family: &Family, w: &Word) -> Result<TensorPoly> {
    let unit = TensorPoly::unit(family.space().clone(), w.clone());
    let once = d_apply_family(family, &unit)?;
    d_apply_family(family, &once)
}

/// `D²(↓w)`; zero for every word exactly when the structure is A∞.
pub fn d_squared(s: &AStructure, w: &Word) -> Result<TensorPoly> {
    let family = s.primed_family(w.arity())?;
    d_squared_family(&family, w)
}

/// The part of `D²(↓w)` landing in arity 1: `Σ_{i+j=n+1} m'_i m'_j (↓w)`.
///
/// `m'_j` runs over every window as a coderivation; its output has arity
/// `i`, and `m'_i` is then evaluated on the whole word.
pub fn top_sum_family(family: &Family, w: &Word) -> Result<TensorPoly> {
    let n = w.arity();
    family.require(n)?;
    let mut out = TensorPoly::zero(family.space().clone());
    for j in 1..=n {
        let i = n + 1 - j;
        let (Some(mj), Some(mi)) = (family.get(j), family.get(i)) else { continue };
        let inner = coderivation_apply(mj, w);
        for (u, c) in inner.terms() {
            if let Some(v) = mi.lookup(u.letters()) {
                for (y, a) in v.iter() {
                    out.add_term(Word::letter(y), a * c);
                }
            }
        }
    }
    Ok(out)
}
