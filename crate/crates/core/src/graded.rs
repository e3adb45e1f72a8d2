//! Exact scalars, graded bases, sparse vectors, tensor words and mixed-arity
//! tensor polynomials.
//!
//! Everything downstream is keyed by basis *indices*; names only show up when
//! parsing or rendering.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational coefficient. Always reduced, denominator positive.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a scalar as `n` or `p/q`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Degree convention of the structure maps: `m_k` has degree `2 - k`
/// (cochain) or `k - 2` (chain).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Cochain,
    Chain,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Cochain => f.write_str("cochain"),
            Convention::Chain => f.write_str("chain"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub name: String,
    /// Degree in the internal (cochain) grading.
    pub degree: i64,
}

/// A finite graded vector space given by an ordered basis.
///
/// Degrees are always stored in cochain grading. A space declared with the
/// chain convention keeps its declared degrees negated internally, so the
/// engine only ever sees one convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    basis: Vec<BasisElement>,
    convention: Convention,
}

impl GradedSpace {
    /// Builds a space from `(name, degree)` pairs. Degrees are interpreted
    /// in `convention`; chain degrees are negated on the way in.
    pub fn new<S: Into<String>>(
        elements: impl IntoIterator<Item = (S, i64)>,
        convention: Convention,
    ) -> Result<Self> {
        let mut basis: Vec<BasisElement> = Vec::new();
        for (name, degree) in elements {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::Input("basis names must be non-empty".into()));
            }
            if basis.iter().any(|b| b.name == name) {
                return Err(Error::Input(format!("duplicate basis name `{name}`")));
            }
            let degree = match convention {
                Convention::Cochain => degree,
                Convention::Chain => -degree,
            };
            basis.push(BasisElement { name, degree });
        }
        Ok(GradedSpace { basis, convention })
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Cochain degree of a basis element.
    pub fn degree(&self, index: usize) -> Result<i64> {
        self.basis
            .get(index)
            .map(|b| b.degree)
            .ok_or_else(|| Error::Input(format!("unknown basis index {index}")))
    }

    /// Degree as written in the declared convention.
    pub fn declared_degree(&self, index: usize) -> Result<i64> {
        let d = self.degree(index)?;
        Ok(match self.convention {
            Convention::Cochain => d,
            Convention::Chain => -d,
        })
    }

    pub fn name(&self, index: usize) -> &str {
        &self.basis[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Parses a comma separated list of basis names into a word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let letters = text
            .split(',')
            .map(|s| {
                let s = s.trim();
                self.index_of(s)
                    .ok_or_else(|| Error::Input(format!("unknown basis name `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn word_names(&self, w: &Word) -> Vec<String> {
        w.letters().iter().map(|&i| self.name(i).to_string()).collect()
    }

    /// All words of the given arity, lexicographic in basis index.
    pub fn words(&self, arity: usize) -> WordIter {
        WordIter::new(self.dim(), arity)
    }
}

/// Lexicographic enumeration of all words of a fixed arity.
pub struct WordIter {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl WordIter {
    fn new(dim: usize, arity: usize) -> Self {
        let current = if dim == 0 || arity == 0 { None } else { Some(vec![0; arity]) };
        WordIter { dim, current }
    }
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.dim {
                break;
            }
            cur[pos] = 0;
        }
        Some(Word(out))
    }
}

/// Degree of a word: `Σ|x_i|`, or `Σ(|x_i| - 1)` when read in the
/// desuspended space.
pub fn word_degree(space: &GradedSpace, w: &Word, desuspended: bool) -> Result<i64> {
    let mut total = 0;
    for &i in w.letters() {
        total += space.degree(i)?;
        if desuspended {
            total -= 1;
        }
    }
    Ok(total)
}

/// Ordered sequence of basis indices of length at least one.
///
/// Ordered by arity first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Input("words must have arity at least 1".into()));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.is_empty());
        Word(letters)
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Concatenation `self ⊗ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Replaces the `len` letters at `offset` with the letter `x`.
    pub(crate) fn splice(&self, offset: usize, len: usize, x: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1 - len);
        v.extend_from_slice(&self.0[..offset]);
        v.push(x);
        v.extend_from_slice(&self.0[offset + len..]);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse vector: basis index to nonzero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Vector(BTreeMap<usize, Scalar>);

impl Vector {
    pub fn zero() -> Self {
        Vector(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Scalar::one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut v = Vector::zero();
        v.add_term(i, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v = Vector::zero();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(i).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector(self.0.iter().map(|(&i, x)| (i, x * c)).collect())
    }

    pub fn negated(&self) -> Vector {
        Vector(self.0.iter().map(|(&i, x)| (i, -x)).collect())
    }

    pub fn render(&self, space: &GradedSpace) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|(i, c)| format!("{} {}", format_scalar(c), space.name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Formal sum of words of possibly different arities, over one space.
#[derive(Clone)]
pub struct TensorPoly {
    space: Arc<GradedSpace>,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorPoly {
    pub fn zero(space: Arc<GradedSpace>) -> Self {
        TensorPoly { space, terms: BTreeMap::new() }
    }

    pub fn monomial(space: Arc<GradedSpace>, w: Word, c: Scalar) -> Self {
        let mut p = TensorPoly::zero(space);
        p.add_term(w, c);
        p
    }

    pub fn unit(space: Arc<GradedSpace>, w: Word) -> Self {
        Self::monomial(space, w, Scalar::one())
    }

    /// Builds a polynomial; repeated words are summed and zeros dropped.
    pub fn from_terms(
        space: Arc<GradedSpace>,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Self {
        let mut p = TensorPoly::zero(space);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Arity-1 polynomial with the coefficients of `v`.
    pub fn from_vector(space: Arc<GradedSpace>, v: &Vector) -> Self {
        Self::from_terms(space, v.iter().map(|(i, c)| (Word::letter(i), c.clone())))
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &TensorPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    fn check_space(&self, other: &TensorPoly) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::Input("tensor polynomials live over different spaces".into()))
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_space(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(self.space.clone());
        }
        TensorPoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Drops zero coefficients. Construction already keeps polynomials
    /// normalized, so this only matters for hand-built term maps.
    pub fn normalized(&self) -> TensorPoly {
        TensorPoly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Tensor product `self ⊗ other` (concatenation of words).
    pub fn tensor(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_space(other)?;
        let mut out = TensorPoly::zero(self.space.clone());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// Component of the given arity.
    pub fn component(&self, arity: usize) -> TensorPoly {
        TensorPoly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.arity() == arity)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The arity-1 component as a vector.
    pub fn to_vector(&self) -> Vector {
        Vector::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.arity() == 1)
                .map(|(w, c)| (w.letters()[0], c.clone())),
        )
    }

    /// Set of distinct desuspended degrees among the terms.
    pub fn desuspended_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self
            .terms
            .keys()
            .map(|w| word_degree(&self.space, w, true).expect("word over own space"))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("{} {}", format_scalar(c), render_word(&self.space, w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `v1` for a single letter, `(v1,w,v2)` otherwise.
pub fn render_word(space: &GradedSpace, w: &Word) -> String {
    let names = space.word_names(w);
    if names.len() == 1 {
        names.into_iter().next().unwrap()
    } else {
        format!("({})", names.join(","))
    }
}

impl PartialEq for TensorPoly {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.terms == other.terms
    }
}

impl Eq for TensorPoly {}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({})", self.render())
    }
}
