//! The three-dimensional A∞ algebra on `V = V_0 ⊕ V_1`, with `V_0` spanned
//! by `v1, v2` and `V_1` by `w`.
//!
//! ```text
//! m_1(v1) = m_1(v2) = w
//! m_n(v1 ⊗ w^k ⊗ v1 ⊗ w^{n-2-k}) = (-1)^k s_n v1     0 <= k <= n-2
//! m_n(v1 ⊗ w^{n-2} ⊗ v2)         = s_{n+1} v1
//! m_n(v1 ⊗ w^{n-1})              = s_{n+1} w
//! ```
//!
//! with `s_n = (-1)^{(n+1)(n+2)/2}` and every other word sent to zero.
//! The maps exist at every arity, so the structure is exposed as a
//! [`MapGenerator`].

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use crate::engine::{
    apply_map, coderivation_apply, d_squared_family, prime, top_sum_family, AStructure,
    MapGenerator, MultiMap,
};
use crate::error::{Error, Result};
use crate::graded::{Convention, GradedSpace, TensorPoly, Vector, Word};
use crate::report::{CheckRecord, Failure, Report};
use crate::sign::{s_sign, Sign};

pub const V1: usize = 0;
pub const V2: usize = 1;
pub const W: usize = 2;

/// Name of the built-in structure on the command line.
pub const BUILTIN_NAME: &str = "paper-example";

/// The fixed space `<v1, v2>` in degree 0, `<w>` in degree 1.
pub fn example_space() -> Arc<GradedSpace> {
    static SPACE: OnceLock<Arc<GradedSpace>> = OnceLock::new();
    SPACE
        .get_or_init(|| {
            Arc::new(
                GradedSpace::new([("v1", 0), ("v2", 0), ("w", 1)], Convention::Cochain)
                    .expect("valid basis"),
            )
        })
        .clone()
}

fn ws(n: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(W, n)
}

fn word(letters: impl IntoIterator<Item = usize>) -> Word {
    Word::new(letters.into_iter().collect()).expect("non-empty")
}

fn signed(i: usize, sign: Sign) -> Vector {
    Vector::term(i, sign.to_scalar())
}

/// Support of the arity-`n` map together with the coefficient signs of the
/// unprimed table.
fn table(n: usize) -> Result<Vec<(Word, Vector)>> {
    if n < 1 {
        return Err(Error::Input("arity must be at least 1".into()));
    }
    if n == 1 {
        return Ok(vec![(Word::letter(V1), Vector::basis(W)), (Word::letter(V2), Vector::basis(W))]);
    }
    let s_n = s_sign(n)?;
    let s_next = s_sign(n + 1)?;
    let mut entries = Vec::with_capacity(n + 1);
    for k in 0..=n - 2 {
        let w = word([V1].into_iter().chain(ws(k)).chain([V1]).chain(ws(n - 2 - k)));
        entries.push((w, signed(V1, Sign::from_exponent(k as i64) * s_n)));
    }
    entries.push((word([V1].into_iter().chain(ws(n - 2)).chain([V2])), signed(V1, s_next)));
    entries.push((word([V1].into_iter().chain(ws(n - 1))), signed(W, s_next)));

    // The three families never address the same word.
    let distinct: HashSet<&Word> = entries.iter().map(|(w, _)| w).collect();
    assert_eq!(distinct.len(), entries.len(), "overlapping rows at arity {n}");
    Ok(entries)
}

/// The unprimed structure map `m_n`.
pub fn example_m(n: usize) -> Result<MultiMap> {
    MultiMap::unprimed(example_space(), n, table(n)?)
}

/// The primed map `m'_n` written down directly: every coefficient is `+1`.
pub fn example_mprime(n: usize) -> Result<MultiMap> {
    let entries = table(n)?.into_iter().map(|(w, v)| {
        let out = v.iter().map(|(i, _)| i).next().expect("single-term rows");
        (w, Vector::basis(out))
    });
    MultiMap::primed(example_space(), n, entries)
}

/// Generator for the built-in structure, either as `{m_n}` or as the
/// sign-free `{m'_n}`.
#[derive(Debug, Clone, Copy)]
pub struct PaperExample {
    primed: bool,
}

impl MapGenerator for PaperExample {
    fn name(&self) -> &str {
        BUILTIN_NAME
    }

    fn space(&self) -> Arc<GradedSpace> {
        example_space()
    }

    fn generate(&self, arity: usize) -> Result<Option<MultiMap>> {
        let m = if self.primed { example_mprime(arity)? } else { example_m(arity)? };
        Ok(Some(m))
    }
}

/// The built-in structure `{m_n}` on `V`.
pub fn paper_example() -> AStructure {
    AStructure::from_generator(Arc::new(PaperExample { primed: false }), false)
}

/// The built-in structure given by its primed maps `{m'_n}` on `↓V`.
pub fn paper_example_primed() -> AStructure {
    AStructure::from_generator(Arc::new(PaperExample { primed: true }), true)
}

/// The built-in structure with `m_2(v1 ⊗ v2)` flipped to `-v1`, truncated
/// at `max_arity`.
pub fn mutated_example(max_arity: usize) -> Result<AStructure> {
    Ok(paper_example()
        .with_entry(max_arity.max(2), 2, word([V1, V2]), signed(V1, Sign::Minus))?
        .with_name("paper-example-mutated"))
}

/// Whether priming `m_n` reproduces the sign-free table entry for entry.
pub fn lemma1_check(n: usize) -> Result<bool> {
    Ok(prime(&example_m(n)?)? == example_mprime(n)?)
}

/// [`lemma1_check`] for arities `1..=max_arity` as a report. Each record
/// lists the words where the primed map and the sign-free table disagree,
/// with their difference.
pub fn lemma1_report(max_arity: usize) -> Result<Report> {
    if max_arity < 1 {
        return Err(Error::Input("max arity must be at least 1".into()));
    }
    let space = example_space();
    let mut checks = Vec::with_capacity(max_arity);
    for n in 1..=max_arity {
        let primed = prime(&example_m(n)?)?;
        let formula = example_mprime(n)?;
        let mut words: Vec<Word> = primed.entries().into_iter().map(|(w, _)| w).collect();
        words.extend(formula.entries().into_iter().map(|(w, _)| w));
        words.sort();
        words.dedup();
        let mut failures = Vec::new();
        for w in &words {
            let diff = apply_map(&primed, w)?;
            let mut diff = TensorPoly::from_vector(space.clone(), &diff);
            let expected = TensorPoly::from_vector(space.clone(), &apply_map(&formula, w)?);
            diff = diff.sub(&expected)?;
            if !diff.is_zero() {
                failures.push(Failure::new(&space, w, &diff));
            }
        }
        checks.push(CheckRecord { check: "lemma1".into(), arity: n, words: words.len(), failures });
    }
    Ok(Report::new(BUILTIN_NAME, space.convention(), max_arity, checks))
}

/// Whether, on every arity-`n` word, the full `D²` equals the part coming
/// from `m'_i m'_j` with `i + j = n + 1`.
pub fn lemma2_top_sum_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::Input("the top-sum reduction needs arity at least 2".into()));
    }
    let family = paper_example().primed_family(n)?;
    for w in example_space().words(n) {
        let full = d_squared_family(&family, &w)?;
        let top = top_sum_family(&family, &w)?;
        if full != top {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The nonzero terms `m'_i m'_j (↓w)` with `i + j = n + 1`, one per `j`,
/// for inspecting how the top sum cancels.
pub fn top_sum_terms(w: &Word) -> Result<Vec<(usize, usize, Vector)>> {
    let n = w.arity();
    let family = paper_example().primed_family(n)?;
    let mut out = Vec::new();
    for j in 1..=n {
        let i = n + 1 - j;
        let (Some(mj), Some(mi)) = (family.get(j), family.get(i)) else { continue };
        let mut v = Vector::zero();
        for (u, c) in coderivation_apply(mj, w).terms() {
            for (z, a) in apply_map(mi, u)?.iter() {
                v.add_term(z, a * c);
            }
        }
        if !v.is_zero() {
            out.push((i, j, v));
        }
    }
    Ok(out)
}
