use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{word_degree, GradedSpace, Vector, Word};
use crate::sign::{desusp_word_sign, susp_iso_sign, Sign};

/// Which space a map's inputs and outputs live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Maps `V^{⊗k} → V`.
    Plain,
    /// Maps `(↓V)^{⊗k} → ↓V`, same basis indices read with degree shifted
    /// down by one.
    Desuspended,
}

impl Side {
    fn letter_shift(self) -> i64 {
        match self {
            Side::Plain => 0,
            Side::Desuspended => -1,
        }
    }
}

/// A multilinear map of fixed arity and degree, given by a sparse table from
/// input words to output vectors. Words missing from the table map to zero.
#[derive(Clone, Debug)]
pub struct MultiMap {
    space: Arc<GradedSpace>,
    side: Side,
    arity: usize,
    degree: i64,
    table: HashMap<Vec<usize>, Vector>,
}

impl MultiMap {
    /// Builds a map, checking arity, basis indices and that every entry is
    /// degree-homogeneous. Zero outputs are dropped; a word listed twice is
    /// rejected.
    pub fn new(
        space: Arc<GradedSpace>,
        side: Side,
        arity: usize,
        degree: i64,
        entries: impl IntoIterator<Item = (Word, Vector)>,
    ) -> Result<Self> {
        if arity < 1 {
            return Err(Error::Input("map arity must be at least 1".into()));
        }
        let mut table = HashMap::new();
        for (word, out) in entries {
            if word.arity() != arity {
                return Err(Error::Input(format!(
                    "word of length {} in a map of arity {arity}",
                    word.arity()
                )));
            }
            let in_degree = word_degree(&space, &word, side == Side::Desuspended)?;
            for (y, _) in out.iter() {
                let out_degree = space.degree(y)? + side.letter_shift();
                if out_degree != in_degree + degree {
                    return Err(Error::Input(format!(
                        "inhomogeneous entry: {} -> {} has degree {} but the map has degree {degree}",
                        space.word_names(&word).join(" "),
                        space.name(y),
                        out_degree - in_degree
                    )));
                }
            }
            let key = word.letters().to_vec();
            if table.contains_key(&key) {
                return Err(Error::Input(format!(
                    "duplicate entry for {}",
                    space.word_names(&word).join(" ")
                )));
            }
            if !out.is_zero() {
                table.insert(key, out);
            }
        }
        Ok(MultiMap { space, side, arity, degree, table })
    }

    /// An arity-`k` structure map on `V`, of degree `2 - k`.
    pub fn unprimed(
        space: Arc<GradedSpace>,
        arity: usize,
        entries: impl IntoIterator<Item = (Word, Vector)>,
    ) -> Result<Self> {
        Self::new(space, Side::Plain, arity, 2 - arity as i64, entries)
    }

    /// An arity-`k` map on `↓V` of degree 1.
    pub fn primed(
        space: Arc<GradedSpace>,
        arity: usize,
        entries: impl IntoIterator<Item = (Word, Vector)>,
    ) -> Result<Self> {
        Self::new(space, Side::Desuspended, arity, 1, entries)
    }

    pub fn zero(space: Arc<GradedSpace>, side: Side, arity: usize, degree: i64) -> Self {
        MultiMap { space, side, arity, degree, table: HashMap::new() }
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Number of nonzero table entries.
    pub fn support_len(&self) -> usize {
        self.table.len()
    }

    /// Table entries in word order.
    pub fn entries(&self) -> Vec<(Word, &Vector)> {
        let mut out: Vec<(Word, &Vector)> = self
            .table
            .iter()
            .map(|(k, v)| (Word::from_vec_unchecked(k.clone()), v))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub(crate) fn lookup(&self, letters: &[usize]) -> Option<&Vector> {
        self.table.get(letters)
    }

    /// Replaces (or clears, for a zero vector) the entry for one word.
    pub fn with_entry(mut self, word: Word, out: Vector) -> Result<Self> {
        let key = word.letters().to_vec();
        self.table.remove(&key);
        let single = MultiMap::new(
            self.space.clone(),
            self.side,
            self.arity,
            self.degree,
            [(word, out)],
        )?;
        self.table.extend(single.table);
        Ok(self)
    }

    /// Same support and values, compared entry by entry.
    pub fn same_table(&self, other: &MultiMap) -> bool {
        self.arity == other.arity && self.table == other.table
    }
}

impl PartialEq for MultiMap {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
            && self.degree == other.degree
            && self.space == other.space
            && self.same_table(other)
    }
}

/// Evaluates `m` on a single word; unlisted words give zero.
pub fn apply_map(m: &MultiMap, w: &Word) -> Result<Vector> {
    if w.arity() != m.arity {
        return Err(Error::Input(format!(
            "map of arity {} applied to a word of arity {}",
            m.arity,
            w.arity()
        )));
    }
    Ok(m.lookup(w.letters()).cloned().unwrap_or_default())
}

/// Sign `c` with `m'(↓x_1 ⊗ … ⊗ ↓x_k) = c · ↓m(x_1 ⊗ … ⊗ x_k)`.
///
/// Product of the global `(-1)^{k(k-1)/2}`, the sign rewriting
/// `↓x_1 ⊗ … ⊗ ↓x_k` as `↓^{⊗k}(x_1 ⊗ … ⊗ x_k)`, and the sign of
/// `↑^{⊗k} ∘ ↓^{⊗k}`. The first and last always cancel.
pub fn prime_sign(space: &GradedSpace, w: &Word) -> Result<Sign> {
    let k = w.arity();
    let degrees = w
        .letters()
        .iter()
        .map(|&i| space.degree(i))
        .collect::<Result<Vec<_>>>()?;
    let k64 = k as i64;
    let global = Sign::from_exponent(k64 * (k64 - 1) / 2);
    Ok(global * desusp_word_sign(&degrees)? * susp_iso_sign(k)?)
}

fn transfer(m: &MultiMap, side: Side, degree: i64) -> Result<MultiMap> {
    let mut table = HashMap::with_capacity(m.table.len());
    for (letters, out) in &m.table {
        let w = Word::from_vec_unchecked(letters.clone());
        let sign = prime_sign(&m.space, &w)?;
        let out = if sign.is_minus() { out.negated() } else { out.clone() };
        table.insert(letters.clone(), out);
    }
    Ok(MultiMap { space: m.space.clone(), side, arity: m.arity, degree, table })
}

/// `m'_k = (-1)^{k(k-1)/2} ↓ ∘ m_k ∘ ↑^{⊗k}`, a degree 1 map on `↓V`.
pub fn prime(m: &MultiMap) -> Result<MultiMap> {
    let expected = 2 - m.arity as i64;
    if m.side != Side::Plain || m.degree != expected {
        return Err(Error::Input(format!(
            "prime expects an arity-{} map on V of degree {expected}",
            m.arity
        )));
    }
    transfer(m, Side::Desuspended, 1)
}

/// Inverse of [`prime`].
pub fn unprime(mp: &MultiMap) -> Result<MultiMap> {
    if mp.side != Side::Desuspended || mp.degree != 1 {
        return Err(Error::Input("unprime expects a degree 1 map on ↓V".into()));
    }
    transfer(mp, Side::Plain, 2 - mp.arity as i64)
}
