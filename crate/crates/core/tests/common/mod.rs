#![allow(dead_code)]

use std::sync::Arc;

use ainfty::engine::{apply_map, AStructure, MultiMap, Side};
use ainfty::example::{example_space, paper_example, V1, V2, W};
use ainfty::graded::{scalar, Convention, GradedSpace, Scalar, Vector, Word};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn word(ls: &[usize]) -> Word {
    Word::new(ls.to_vec()).unwrap()
}

pub fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::new(n.into(), d.into()))
}

pub fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |c| !c.is_zero())
}

pub fn space_strategy() -> impl Strategy<Value = Arc<GradedSpace>> {
    (prop::collection::vec(-2i64..=2, 1..=4), any::<bool>()).prop_map(|(degrees, chain)| {
        let convention = if chain { Convention::Chain } else { Convention::Cochain };
        Arc::new(
            GradedSpace::new(
                degrees.into_iter().enumerate().map(|(i, d)| (format!("e{i}"), d)),
                convention,
            )
            .unwrap(),
        )
    })
}

/// Raw material for a random map: candidate input words, output picks and
/// coefficients. Entries with no output of the right degree are dropped.
pub type RawEntries = Vec<(Vec<usize>, usize, Scalar)>;

pub fn raw_entries(arity: usize) -> impl Strategy<Value = RawEntries> {
    prop::collection::vec(
        (prop::collection::vec(0usize..4, arity), 0usize..4, nonzero_rational()),
        0..8,
    )
}

/// A degree-homogeneous map built from raw entries.
pub fn homogeneous_map(
    space: &Arc<GradedSpace>,
    side: Side,
    arity: usize,
    degree: i64,
    raw: &RawEntries,
) -> MultiMap {
    let dim = space.dim();
    let shift = if side == Side::Desuspended { 1 } else { 0 };
    let mut entries: Vec<(Word, Vector)> = Vec::new();
    for (letters, pick, c) in raw {
        let letters: Vec<usize> = letters.iter().map(|&l| l % dim).collect();
        let w = Word::new(letters).unwrap();
        if entries.iter().any(|(u, _)| *u == w) {
            continue;
        }
        let in_degree: i64 =
            w.letters().iter().map(|&i| space.degree(i).unwrap() - shift).sum();
        let candidates: Vec<usize> = (0..dim)
            .filter(|&y| space.degree(y).unwrap() - shift == in_degree + degree)
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let y = candidates[pick % candidates.len()];
        entries.push((w, Vector::term(y, c.clone())));
    }
    MultiMap::new(space.clone(), side, arity, degree, entries).unwrap()
}

/// Random degree-preserving automorphism of the example space: an
/// invertible 2×2 block on `<v1, v2>` and a nonzero scalar on `w`.
#[derive(Debug, Clone)]
pub struct Automorphism {
    pub forward: [[Scalar; 3]; 3],
    pub inverse: [[Scalar; 3]; 3],
}

pub fn automorphism() -> impl Strategy<Value = Automorphism> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3, nonzero_rational())
        .prop_filter("invertible", |(a, b, c, d, _)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d, t)| {
            let (a, b, c, d) = (scalar(a), scalar(b), scalar(c), scalar(d));
            let det = &a * &d - &b * &c;
            let z = Scalar::zero;
            // Column j holds the image of basis vector j.
            let forward = [
                [a.clone(), b.clone(), z()],
                [c.clone(), d.clone(), z()],
                [z(), z(), t.clone()],
            ];
            let inverse = [
                [&d / &det, -&b / &det, z()],
                [-&c / &det, &a / &det, z()],
                [z(), z(), Scalar::one() / &t],
            ];
            Automorphism { forward, inverse }
        })
}

fn apply_matrix(m: &[[Scalar; 3]; 3], v: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (j, c) in v.iter() {
        for (i, row) in m.iter().enumerate() {
            out.add_term(i, &row[j] * c);
        }
    }
    out
}

/// `φ ∘ m ∘ (φ^{-1})^{⊗k}` for every map of arity `1..=max_arity` of the
/// example. Again an A∞ structure, now with rational coefficients.
pub fn conjugated_example(phi: &Automorphism, max_arity: usize) -> AStructure {
    let space = example_space();
    let base = paper_example();
    let mut maps = Vec::new();
    for k in 1..=max_arity {
        let m = base.map(k).unwrap().unwrap();
        let mut entries = Vec::new();
        for w in space.words(k) {
            // Expand (φ^{-1})^{⊗k}(w) into a sum of basis words.
            let mut expansion: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
            for &x in w.letters() {
                let image = apply_matrix(&phi.inverse, &Vector::basis(x));
                let mut next = Vec::new();
                for (prefix, c) in &expansion {
                    for (y, a) in image.iter() {
                        let mut p = prefix.clone();
                        p.push(y);
                        next.push((p, c * a));
                    }
                }
                expansion = next;
            }
            let mut value = Vector::zero();
            for (letters, c) in expansion {
                let out = apply_map(&m, &Word::new(letters).unwrap()).unwrap();
                for (y, a) in out.iter() {
                    value.add_term(y, a * &c);
                }
            }
            let value = apply_matrix(&phi.forward, &value);
            if !value.is_zero() {
                entries.push((w, value));
            }
        }
        maps.push(MultiMap::unprimed(space.clone(), k, entries).unwrap());
    }
    AStructure::from_table("conjugated", space, false, maps).unwrap()
}

pub fn example_word(max_arity: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![Just(V1), Just(V2), Just(W)], 1..=max_arity)
        .prop_map(|ls| Word::new(ls).unwrap())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub mod props;
