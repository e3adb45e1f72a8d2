//! Graded symmetrization of the primed maps and the L∞ relations.
//!
//! Everything here lives on `↓V`, where the symmetrized maps `l'_n` have
//! degree 1 and the relation reads
//!
//! ```text
//! Σ_{i+j=n+1} Σ_{σ (i, n-i)-unshuffle} ε(σ) l'_j(l'_i(y_σ(1)..y_σ(i)) ⊗ y_σ(i+1) ⊗ .. ⊗ y_σ(n)) = 0
//! ```
//!
//! with `ε(σ)` the Koszul sign of the rearrangement for the desuspended
//! degrees.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::engine::{sweep, AStructure, MultiMap, Side};
use crate::error::{Error, Result};
use crate::graded::{GradedSpace, TensorPoly, Vector, Word};
use crate::report::Report;
use crate::sign::{koszul_permutation_sign, Sign};

/// A degree 1 map on `↓V` that is graded-symmetric in its inputs.
#[derive(Clone, Debug)]
pub struct SymMultiMap {
    space: Arc<GradedSpace>,
    arity: usize,
    table: HashMap<Vec<usize>, Vector>,
    symmetric: bool,
}

impl SymMultiMap {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn support_len(&self) -> usize {
        self.table.len()
    }

    /// Result of the graded-symmetry check run at construction.
    pub fn is_graded_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn apply(&self, y: &Word) -> Result<Vector> {
        if y.arity() != self.arity {
            return Err(Error::Input(format!(
                "symmetric map of arity {} applied to a word of arity {}",
                self.arity,
                y.arity()
            )));
        }
        Ok(self.table.get(y.letters()).cloned().unwrap_or_default())
    }

    fn lookup(&self, letters: &[usize]) -> Option<&Vector> {
        self.table.get(letters)
    }
}

fn desuspended_degrees(space: &GradedSpace, letters: &[usize]) -> Vec<i64> {
    letters.iter().map(|&i| space.basis()[i].degree - 1).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn permute(letters: &[usize], sigma: &[usize]) -> Vec<usize> {
    sigma.iter().map(|&s| letters[s]).collect()
}

/// Distinct rearrangements of a word.
fn rearrangements(letters: &[usize], perms: &[Vec<usize>]) -> HashSet<Vec<usize>> {
    perms.iter().map(|s| permute(letters, s)).collect()
}

/// `l'_n(y) = Σ_{σ ∈ S_n} ε(σ) m'(y_σ(1) ⊗ … ⊗ y_σ(n))`.
pub fn symmetrize_prime(mp: &MultiMap) -> Result<SymMultiMap> {
    if mp.side() != Side::Desuspended || mp.degree() != 1 {
        return Err(Error::Input("symmetrization expects a degree 1 map on ↓V".into()));
    }
    let space = mp.space().clone();
    let n = mp.arity();
    let perms = permutations(n);
    let mut inputs = HashSet::new();
    for (w, _) in mp.entries() {
        inputs.extend(rearrangements(w.letters(), &perms));
    }
    let mut table = HashMap::new();
    for y in inputs {
        let degrees = desuspended_degrees(&space, &y);
        let mut value = Vector::zero();
        for sigma in &perms {
            let z = permute(&y, sigma);
            if let Some(v) = mp.lookup(&z) {
                let sign = koszul_permutation_sign(&degrees, sigma)?;
                for (i, c) in v.iter() {
                    value.add_term(i, if sign.is_minus() { -c.clone() } else { c.clone() });
                }
            }
        }
        if !value.is_zero() {
            table.insert(y, value);
        }
    }
    let mut l = SymMultiMap { space, arity: n, table, symmetric: false };
    l.symmetric = check_adjacent_symmetry(&l);
    Ok(l)
}

/// Symmetry under every adjacent transposition, which generate `S_n`.
fn check_adjacent_symmetry(l: &SymMultiMap) -> bool {
    let zero = Vector::zero();
    l.table.iter().all(|(y, v)| {
        (0..y.len().saturating_sub(1)).all(|i| {
            let mut swapped = y.clone();
            swapped.swap(i, i + 1);
            let degrees = desuspended_degrees(&l.space, y);
            let sign = Sign::from_exponent(degrees[i] * degrees[i + 1]);
            let other = l.table.get(&swapped).unwrap_or(&zero);
            *other == if sign.is_minus() { v.negated() } else { v.clone() }
        })
    })
}

/// `(i, r)`-unshuffles: permutations of `0..i+r` increasing on the first `i`
/// positions and on the last `r`. Listed by the lexicographic order of their
/// first block.
pub fn unshuffles(i: usize, r: usize) -> Vec<Vec<usize>> {
    let n = i + r;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    fn go(start: usize, n: usize, i: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == i {
            let rest = (0..n).filter(|x| !chosen.contains(x));
            out.push(chosen.iter().copied().chain(rest).collect());
            return;
        }
        for x in start..n {
            chosen.push(x);
            go(x + 1, n, i, chosen, out);
            chosen.pop();
        }
    }
    go(0, n, i, &mut chosen, &mut out);
    out
}

/// Value of the L∞ relation at `y`; `family` holds the maps by arity (any
/// order, missing arities are zero).
pub fn linfty_defect(family: &[SymMultiMap], y: &Word) -> Result<TensorPoly> {
    let Some(first) = family.first() else {
        return Err(Error::Input("empty family".into()));
    };
    let space = first.space().clone();
    let by_arity: HashMap<usize, &SymMultiMap> = family.iter().map(|l| (l.arity(), l)).collect();
    let n = y.arity();
    let letters = y.letters();
    let degrees = desuspended_degrees(&space, letters);
    let mut defect = Vector::zero();
    for i in 1..=n {
        let j = n + 1 - i;
        let (Some(li), Some(lj)) = (by_arity.get(&i), by_arity.get(&j)) else { continue };
        for sigma in unshuffles(i, n - i) {
            let z = permute(letters, &sigma);
            let Some(inner) = li.lookup(&z[..i]) else { continue };
            let eps = koszul_permutation_sign(&degrees, &sigma)?;
            for (x, c) in inner.iter() {
                let mut outer = Vec::with_capacity(j);
                outer.push(x);
                outer.extend_from_slice(&z[i..]);
                if let Some(v) = lj.lookup(&outer) {
                    for (t, a) in v.iter() {
                        let term = a * c;
                        defect.add_term(t, if eps.is_minus() { -term } else { term });
                    }
                }
            }
        }
    }
    Ok(TensorPoly::from_vector(space, &defect))
}

/// Symmetrized primed maps `l'_1 … l'_max` of a structure.
pub fn symmetrized_family(s: &AStructure, max_arity: usize) -> Result<Vec<SymMultiMap>> {
    let family = s.primed_family(max_arity)?;
    family.iter().map(symmetrize_prime).collect()
}

/// Checks the L∞ relations of the symmetrized structure on every basis
/// word of arity `1..=max_arity`.
pub fn verify_linfty(s: &AStructure, max_arity: usize) -> Result<Report> {
    if max_arity < 1 {
        return Err(Error::Input("max arity must be at least 1".into()));
    }
    let family = symmetrized_family(s, max_arity)?;
    let space = s.space();
    let checks = if family.is_empty() {
        sweep(space, max_arity, "linfty", |_| Ok(TensorPoly::zero(space.clone())))?
    } else {
        sweep(space, max_arity, "linfty", |y| linfty_defect(&family, y))?
    };
    Ok(Report::new(s.name(), space.convention(), max_arity, checks))
}
