//! Property bodies shared by the property suite and the acceptance run.

use std::sync::Arc;

use ainfty::engine::{
    coderivation_term, d_apply_family, prime, unprime, AStructure, Family, MultiMap, Side,
};
use ainfty::format::{parse_structure, serialize_structure};
use ainfty::graded::{word_degree, GradedSpace, TensorPoly, Word};
use ainfty::sign::{koszul_permutation_sign, Sign};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{homogeneous_map, RawEntries};

pub fn prime_round_trip(
    space: &Arc<GradedSpace>,
    arity: usize,
    raw: &RawEntries,
) -> Result<(), TestCaseError> {
    let m = homogeneous_map(space, Side::Plain, arity, 2 - arity as i64, raw);
    let back = unprime(&prime(&m).unwrap()).unwrap();
    prop_assert_eq!(&back, &m);

    let mp = homogeneous_map(space, Side::Desuspended, arity, 1, raw);
    let back = prime(&unprime(&mp).unwrap()).unwrap();
    prop_assert_eq!(&back, &mp);
    Ok(())
}

/// `ε(τ∘σ; d) = ε(σ; d∘τ) · ε(τ; d)`: rearranging by `τ` and then by `σ`
/// is the single rearrangement `j ↦ τ(σ(j))`.
pub fn koszul_homomorphism(
    degrees: &[i64],
    sigma: &[usize],
    tau: &[usize],
) -> Result<(), TestCaseError> {
    let composite: Vec<usize> = sigma.iter().map(|&j| tau[j]).collect();
    let permuted: Vec<i64> = tau.iter().map(|&t| degrees[t]).collect();
    let lhs = koszul_permutation_sign(degrees, &composite).unwrap();
    let rhs = koszul_permutation_sign(&permuted, sigma).unwrap()
        * koszul_permutation_sign(degrees, tau).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// `D(u ⊗ v) = D(u) ⊗ v + (-1)^{deg↓ u} u ⊗ D(v) + (windows straddling the
/// boundary between u and v)`.
pub fn leibniz_split(family: &Family, u: &Word, v: &Word) -> Result<(), TestCaseError> {
    let space = family.space().clone();
    let unit = |w: &Word| TensorPoly::unit(space.clone(), w.clone());
    let uv = u.concat(v);
    let lhs = d_apply_family(family, &unit(&uv)).unwrap();

    let du = d_apply_family(family, &unit(u)).unwrap();
    let dv = d_apply_family(family, &unit(v)).unwrap();
    let sign = Sign::from_exponent(word_degree(&space, u, true).unwrap());
    let mut rhs = du.tensor(&unit(v)).unwrap();
    rhs = rhs.add(&unit(u).tensor(&dv).unwrap().scale(&sign.to_scalar())).unwrap();
    for mp in family.iter() {
        let k = mp.arity();
        for offset in 0..uv.arity() {
            if offset < u.arity() && offset + k > u.arity() && offset + k <= uv.arity() {
                rhs = rhs.add(&coderivation_term(mp, &uv, offset)).unwrap();
            }
        }
    }
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// The same split for `m'_1` alone, which is an honest derivation.
pub fn leibniz_m1(family: &Family, u: &Word, v: &Word) -> Result<(), TestCaseError> {
    let Some(m1) = family.get(1) else { return Ok(()) };
    let only_m1 = AStructure::from_table("m1", family.space().clone(), true, [m1.clone()])
        .unwrap()
        .family(u.arity() + v.arity())
        .unwrap();
    let space = family.space().clone();
    let unit = |w: &Word| TensorPoly::unit(space.clone(), w.clone());
    let lhs = d_apply_family(&only_m1, &unit(&u.concat(v))).unwrap();
    let sign = Sign::from_exponent(word_degree(&space, u, true).unwrap());
    let rhs = d_apply_family(&only_m1, &unit(u))
        .unwrap()
        .tensor(&unit(v))
        .unwrap()
        .add(
            &unit(u)
                .tensor(&d_apply_family(&only_m1, &unit(v)).unwrap())
                .unwrap()
                .scale(&sign.to_scalar()),
        )
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn parse_serialize_round_trip(
    space: &Arc<GradedSpace>,
    raws: &[RawEntries],
) -> Result<(), TestCaseError> {
    let maps: Vec<MultiMap> = raws
        .iter()
        .enumerate()
        .map(|(i, raw)| homogeneous_map(space, Side::Plain, i + 1, 1 - i as i64, raw))
        .collect();
    let s = AStructure::from_table("random", space.clone(), false, maps).unwrap();
    let text = serialize_structure(&s).unwrap();
    let back = parse_structure("random", &text).unwrap();
    prop_assert_eq!(back.space(), s.space());
    for k in 1..=raws.len() {
        let a = s.map(k).unwrap();
        let b = back.map(k).unwrap();
        match (a, b) {
            (Some(a), Some(b)) => prop_assert_eq!(a, b),
            (Some(a), None) => prop_assert_eq!(a.support_len(), 0),
            (None, Some(b)) => prop_assert_eq!(b.support_len(), 0),
            (None, None) => {}
        }
    }
    prop_assert_eq!(serialize_structure(&back).unwrap(), text);
    Ok(())
}
