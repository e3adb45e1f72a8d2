mod common;

use ainfty::engine::{
    apply_map, coderivation_apply, coderivation_term, d_apply, d_squared, d_squared_family,
    stasheff_defect, top_sum_family, verify_structure, AStructure, CheckMode, Family, MultiMap,
    Side,
};
use ainfty::example::{example_space, mutated_example, paper_example, V1, V2, W};
use ainfty::graded::{scalar, word_degree, Scalar, TensorPoly, Vector, Word};
use ainfty::linfty::verify_linfty;
use num_traits::Zero;
use proptest::prelude::*;

use common::*;

fn unit(w: &Word) -> TensorPoly {
    TensorPoly::unit(example_space(), w.clone())
}

fn poly(terms: &[(&[usize], i64)]) -> TensorPoly {
    TensorPoly::from_terms(example_space(), terms.iter().map(|(l, c)| (word(l), scalar(*c))))
}

/// Textbook form of the identity, evaluated term by term:
/// `Σ_{r+s+t=n} (-1)^{r+st} m_{r+1+t}(1^r ⊗ m_s ⊗ 1^t)`, where moving `m_s`
/// (degree `2-s`) past `x_1..x_r` costs `(-1)^{s(|x_1|+…+|x_r|)}`.
fn stasheff_oracle(s: &AStructure, x: &Word) -> Vector {
    let space = s.space();
    let n = x.arity();
    let l = x.letters();
    let mut total = Vector::zero();
    for r in 0..n {
        for s_ in 1..=n - r {
            let t = n - r - s_;
            let (Some(inner), Some(outer)) =
                (s.map(s_).unwrap(), s.map(r + 1 + t).unwrap())
            else {
                continue;
            };
            let prefix: i64 = l[..r].iter().map(|&i| space.degree(i).unwrap()).sum();
            let exponent = (r + s_ * t) as i64 + s_ as i64 * prefix;
            let sign = if exponent.rem_euclid(2) == 0 { scalar(1) } else { scalar(-1) };
            let mid = apply_map(&inner, &word(&l[r..r + s_])).unwrap();
            for (y, c) in mid.iter() {
                let mut outer_word = l[..r].to_vec();
                outer_word.push(y);
                outer_word.extend_from_slice(&l[r + s_..]);
                for (z, a) in apply_map(&outer, &word(&outer_word)).unwrap().iter() {
                    total.add_term(z, &sign * c * a);
                }
            }
        }
    }
    total
}

#[test]
fn d_on_small_words() {
    let s = paper_example();
    assert_eq!(d_apply(&s, &unit(&word(&[V1]))).unwrap(), poly(&[(&[W], 1)]));
    assert_eq!(
        d_apply(&s, &unit(&word(&[V1, V2]))).unwrap(),
        poly(&[(&[V1], 1), (&[W, V2], 1), (&[V1, W], -1)])
    );
    let zero = TensorPoly::zero(example_space());
    assert!(d_apply(&s, &zero).unwrap().is_zero());
}

#[test]
fn d_squared_vanishes_on_sample_words() {
    let s = paper_example();
    for l in [&[V1][..], &[V1, V2], &[V1, W, V2], &[W, W, V1, V2], &[V2, V1, W, W, V1]] {
        assert!(d_squared(&s, &word(l)).unwrap().is_zero(), "{l:?}");
    }
}

#[test]
fn mutation_shows_up_in_d_squared() {
    let s = mutated_example(4).unwrap();
    assert_eq!(d_squared(&s, &word(&[V1, V2])).unwrap(), poly(&[(&[W], -2)]));
}

#[test]
fn stasheff_matches_textbook_oracle() {
    let valid = paper_example();
    let mutated = mutated_example(5).unwrap();
    for s in [&valid, &mutated] {
        for n in 1..=4 {
            for x in example_space().words(n) {
                assert_eq!(stasheff_defect(s, &x).unwrap(), stasheff_oracle(s, &x), "{x:?}");
            }
        }
    }
    assert!(!stasheff_defect(&mutated, &word(&[V1, V2])).unwrap().is_zero());
}

#[test]
fn zero_structure_passes() {
    let space = example_space();
    let maps = (1..=3).map(|k| MultiMap::unprimed(space.clone(), k, Vec::new()).unwrap());
    let s = AStructure::from_table("zero", space.clone(), false, maps.collect::<Vec<_>>()).unwrap();
    let r = verify_structure(&s, 3, CheckMode::Both).unwrap();
    assert!(r.pass);
    assert_eq!(r.failure_count(), 0);
}

#[test]
fn mutated_structure_fails_first_at_v1_v2() {
    let s = mutated_example(4).unwrap();
    let r = verify_structure(&s, 4, CheckMode::Coderivation).unwrap();
    assert!(!r.pass);
    let (record, failure) = r.first_failure().unwrap();
    assert_eq!(record.check, "coderivation");
    assert_eq!(record.arity, 2);
    assert_eq!(failure.word, vec!["v1", "v2"]);
}

#[test]
fn example_verifies_both_ways() {
    let r = verify_structure(&paper_example(), 5, CheckMode::Both).unwrap();
    assert!(r.pass);
    let checks: Vec<&str> = r.checks.iter().map(|c| c.check.as_str()).collect();
    assert_eq!(checks.iter().filter(|c| **c == "direct").count(), 5);
    assert_eq!(checks.iter().filter(|c| **c == "coderivation").count(), 5);
    assert_eq!(r.words_checked(), 2 * (3 + 9 + 27 + 81 + 243));
}

/// Every term of `D(↓w)` has degree one more than `↓w`, so `D²` raises it by
/// two.
#[test]
fn degrees_of_d_and_d_squared() {
    let space = example_space();
    let family = paper_example().primed_family(5).unwrap();
    for n in 1..=5 {
        for w in space.words(n) {
            let din = word_degree(&space, &w, true).unwrap();
            let d = d_apply(&paper_example(), &unit(&w)).unwrap();
            for (u, _) in d.terms() {
                assert_eq!(word_degree(&space, u, true).unwrap(), din + 1);
            }
            for mp in family.iter() {
                for (u, _) in coderivation_apply(mp, &w).terms() {
                    assert_eq!(word_degree(&space, u, true).unwrap(), din + 1);
                }
            }
        }
    }
    let mutated = mutated_example(4).unwrap();
    for n in 1..=4 {
        for w in space.words(n) {
            let din = word_degree(&space, &w, true).unwrap();
            for (u, _) in d_squared(&mutated, &w).unwrap().terms() {
                assert_eq!(word_degree(&space, u, true).unwrap(), din + 2);
            }
        }
    }
}

/// The arity-one part of `D²(↓x)` is the Stasheff defect at `x` up to a
/// word-dependent sign, so one vanishes exactly when the other does.
#[test]
fn arity_one_part_of_d_squared_is_the_stasheff_defect() {
    let space = example_space();
    for s in [paper_example(), mutated_example(5).unwrap()] {
        let family = s.primed_family(5).unwrap();
        for n in 1..=5 {
            for x in space.words(n) {
                let top = d_squared_family(&family, &x).unwrap().component(1);
                let defect = TensorPoly::from_vector(space.clone(), &stasheff_defect(&s, &x).unwrap());
                assert!(
                    top == defect || top == defect.scale(&scalar(-1)),
                    "{x:?}: {} vs {}",
                    top.render(),
                    defect.render()
                );
            }
        }
    }
}

#[test]
fn sweeps_agree_on_pass_fail() {
    for s in [paper_example(), mutated_example(4).unwrap()] {
        let direct = verify_structure(&s, 4, CheckMode::Direct).unwrap();
        let coder = verify_structure(&s, 4, CheckMode::Coderivation).unwrap();
        assert_eq!(direct.pass, coder.pass);
    }
}

#[test]
fn top_sum_is_the_arity_one_part() {
    let space = example_space();
    let family = paper_example().primed_family(5).unwrap();
    for n in 2..=5 {
        for w in space.words(n) {
            assert_eq!(
                top_sum_family(&family, &w).unwrap(),
                d_squared_family(&family, &w).unwrap().component(1)
            );
        }
    }
}

fn apply_term(mp: &MultiMap, p: &TensorPoly, offset: usize) -> TensorPoly {
    let mut out = TensorPoly::zero(p.space().clone());
    for (w, c) in p.terms() {
        if offset + mp.arity() <= w.arity() {
            out = out.add(&coderivation_term(mp, w, offset).scale(c)).unwrap();
        }
    }
    out
}

/// Two windows that do not overlap contribute to `D²` in both orders, and
/// the two contributions cancel for any family of degree-one maps.
fn disjoint_windows_cancel(family: &Family, w: &Word) {
    let n = w.arity();
    let space = family.space().clone();
    for a in family.iter() {
        for b in family.iter() {
            let (ka, kb) = (a.arity(), b.arity());
            for p in 0..n {
                for q in p + ka..n {
                    if q + kb > n {
                        continue;
                    }
                    let start = TensorPoly::unit(space.clone(), w.clone());
                    let a_first = apply_term(b, &apply_term(a, &start, p), q + 1 - ka);
                    let b_first = apply_term(a, &apply_term(b, &start, q), p);
                    let sum = a_first.add(&b_first).unwrap();
                    assert!(sum.is_zero(), "{w:?} windows ({p},{ka}) ({q},{kb}): {}", sum.render());
                }
            }
        }
    }
}

#[test]
fn disjoint_window_pairs_cancel_on_example() {
    let family = paper_example().primed_family(5).unwrap();
    for n in 2..=5 {
        for w in example_space().words(n) {
            disjoint_windows_cancel(&family, &w);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjoint_window_pairs_cancel_for_random_maps(
        space in space_strategy(),
        r1 in raw_entries(1), r2 in raw_entries(2), r3 in raw_entries(3),
        letters in prop::collection::vec(0usize..4, 2..=5),
    ) {
        let maps = [(1, r1), (2, r2), (3, r3)]
            .map(|(k, r)| homogeneous_map(&space, Side::Desuspended, k, 1, &r));
        let s = AStructure::from_table("random", space.clone(), true, maps).unwrap();
        let letters: Vec<usize> = letters.into_iter().map(|l| l % space.dim()).collect();
        disjoint_windows_cancel(&s.family(letters.len()).unwrap(), &Word::new(letters).unwrap());
    }

    #[test]
    fn conjugated_structures_are_ainfty_and_linfty(phi in automorphism()) {
        let s = conjugated_example(&phi, 4);
        prop_assert!(verify_structure(&s, 4, CheckMode::Both).unwrap().pass);
        prop_assert!(verify_linfty(&s, 4).unwrap().pass);
    }
}

#[test]
fn mutated_structure_breaks_linfty() {
    let r = verify_linfty(&mutated_example(3).unwrap(), 3).unwrap();
    assert!(!r.pass);
}

#[test]
fn conjugation_keeps_rational_coefficients() {
    let phi = Automorphism {
        forward: [
            [scalar(2), scalar(1), Scalar::zero()],
            [scalar(1), scalar(1), Scalar::zero()],
            [Scalar::zero(), Scalar::zero(), scalar(3)],
        ],
        inverse: [
            [scalar(1), scalar(-1), Scalar::zero()],
            [scalar(-1), scalar(2), Scalar::zero()],
            [Scalar::zero(), Scalar::zero(), Scalar::new(1.into(), 3.into())],
        ],
    };
    let s = conjugated_example(&phi, 3);
    let fractional = (1..=3).any(|k| {
        let m = s.map(k).unwrap().unwrap();
        m.entries().iter().any(|(_, v)| v.iter().any(|(_, c)| !c.is_integer()))
    });
    assert!(fractional);
    assert!(verify_structure(&s, 3, CheckMode::Both).unwrap().pass);
}
