use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{GradedSpace, Vector, Word};

use super::multimap::{prime, unprime, MultiMap, Side};

/// Produces the structure map of any requested arity.
pub trait MapGenerator: Send + Sync {
    /// Identifier used in reports and on the command line.
    fn name(&self) -> &str;

    fn space(&self) -> Arc<GradedSpace>;

    /// Map of the given arity, `None` when it is identically zero.
    fn generate(&self, arity: usize) -> Result<Option<MultiMap>>;
}

#[derive(Clone)]
pub enum MapSource {
    Table(BTreeMap<usize, MultiMap>),
    Generator(Arc<dyn MapGenerator>),
}

/// A family of structure maps `{m_k}` on `V`, or `{m'_k}` on `↓V` when
/// `primed` is set.
#[derive(Clone)]
pub struct AStructure {
    name: String,
    space: Arc<GradedSpace>,
    primed: bool,
    source: MapSource,
}

impl fmt::Debug for AStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let source = match &self.source {
            MapSource::Table(t) => format!("table of {} maps", t.len()),
            MapSource::Generator(g) => format!("generator `{}`", g.name()),
        };
        f.debug_struct("AStructure")
            .field("name", &self.name)
            .field("primed", &self.primed)
            .field("source", &source)
            .finish()
    }
}

fn check_map(space: &Arc<GradedSpace>, primed: bool, arity: usize, m: &MultiMap) -> Result<()> {
    let (side, degree) = if primed {
        (Side::Desuspended, 1)
    } else {
        (Side::Plain, 2 - arity as i64)
    };
    if m.arity() != arity || m.side() != side || m.degree() != degree {
        return Err(Error::Input(format!(
            "map registered at arity {arity} has arity {}, degree {}",
            m.arity(),
            m.degree()
        )));
    }
    if m.space() != space {
        return Err(Error::Input("map lives over a different space".into()));
    }
    Ok(())
}

impl AStructure {
    /// A finite family; arities missing from `maps` are zero.
    pub fn from_table(
        name: impl Into<String>,
        space: Arc<GradedSpace>,
        primed: bool,
        maps: impl IntoIterator<Item = MultiMap>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for m in maps {
            let arity = m.arity();
            check_map(&space, primed, arity, &m)?;
            if table.insert(arity, m).is_some() {
                return Err(Error::Input(format!("two maps of arity {arity}")));
            }
        }
        Ok(AStructure { name: name.into(), space, primed, source: MapSource::Table(table) })
    }

    pub fn from_generator(generator: Arc<dyn MapGenerator>, primed: bool) -> Self {
        AStructure {
            name: generator.name().to_string(),
            space: generator.space(),
            primed,
            source: MapSource::Generator(generator),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn source(&self) -> &MapSource {
        &self.source
    }

    pub fn is_generated(&self) -> bool {
        matches!(self.source, MapSource::Generator(_))
    }

    /// The map of one arity as stored (primed or not), `None` when zero.
    pub fn map(&self, arity: usize) -> Result<Option<MultiMap>> {
        if arity < 1 {
            return Err(Error::Input("arity must be at least 1".into()));
        }
        let m = match &self.source {
            MapSource::Table(t) => t.get(&arity).cloned(),
            MapSource::Generator(g) => g.generate(arity)?,
        };
        if let Some(m) = &m {
            check_map(&self.space, self.primed, arity, m)?;
        }
        Ok(m)
    }

    /// Largest arity with a stored map; `None` for generators.
    pub fn table_max_arity(&self) -> Option<usize> {
        match &self.source {
            MapSource::Table(t) => Some(t.keys().next_back().copied().unwrap_or(0)),
            MapSource::Generator(_) => None,
        }
    }

    /// The maps of arity `1..=max_arity` as a finite table.
    pub fn truncate(&self, max_arity: usize) -> Result<AStructure> {
        let maps = (1..=max_arity)
            .map(|k| self.map(k))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten();
        AStructure::from_table(self.name.clone(), self.space.clone(), self.primed, maps)
    }

    /// Finite-table structure with one entry replaced. Generators are
    /// truncated at `max_arity` first.
    pub fn with_entry(
        &self,
        max_arity: usize,
        arity: usize,
        word: Word,
        out: Vector,
    ) -> Result<AStructure> {
        let base = match &self.source {
            MapSource::Table(_) => self.clone(),
            MapSource::Generator(_) => self.truncate(max_arity)?,
        };
        let MapSource::Table(mut table) = base.source else { unreachable!() };
        let m = match table.remove(&arity) {
            Some(m) => m,
            None if self.primed => MultiMap::zero(self.space.clone(), Side::Desuspended, arity, 1),
            None => MultiMap::zero(self.space.clone(), Side::Plain, arity, 2 - arity as i64),
        };
        table.insert(arity, m.with_entry(word, out)?);
        Ok(AStructure {
            name: self.name.clone(),
            space: self.space.clone(),
            primed: self.primed,
            source: MapSource::Table(table),
        })
    }

    /// Maps of arity `1..=max_arity` as stored.
    pub fn family(&self, max_arity: usize) -> Result<Family> {
        let side = if self.primed { Side::Desuspended } else { Side::Plain };
        let maps = (1..=max_arity).map(|k| self.map(k)).collect::<Result<Vec<_>>>()?;
        Ok(Family { space: self.space.clone(), side, maps })
    }

    /// Primed maps `m'_1 … m'_max`, converting if the structure is unprimed.
    pub fn primed_family(&self, max_arity: usize) -> Result<Family> {
        let mut f = self.family(max_arity)?;
        if !self.primed {
            f = f.convert(prime, Side::Desuspended)?;
        }
        Ok(f)
    }

    /// Unprimed maps `m_1 … m_max`, converting if the structure is primed.
    pub fn unprimed_family(&self, max_arity: usize) -> Result<Family> {
        let mut f = self.family(max_arity)?;
        if self.primed {
            f = f.convert(unprime, Side::Plain)?;
        }
        Ok(f)
    }

    /// The same structure expressed on the other side of the suspension.
    pub fn to_primed(&self, max_arity: usize) -> Result<AStructure> {
        let f = self.primed_family(max_arity)?;
        AStructure::from_table(
            self.name.clone(),
            self.space.clone(),
            true,
            f.maps.into_iter().flatten(),
        )
    }
}

/// Materialized maps of arity `1..=max_arity`, all on the same side.
#[derive(Clone, Debug)]
pub struct Family {
    space: Arc<GradedSpace>,
    side: Side,
    maps: Vec<Option<MultiMap>>,
}

impl Family {
    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn max_arity(&self) -> usize {
        self.maps.len()
    }

    pub fn get(&self, arity: usize) -> Option<&MultiMap> {
        arity.checked_sub(1).and_then(|i| self.maps.get(i)).and_then(Option::as_ref)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiMap> {
        self.maps.iter().flatten()
    }

    fn convert(self, f: fn(&MultiMap) -> Result<MultiMap>, side: Side) -> Result<Family> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.as_ref().map(f).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(Family { space: self.space, side, maps })
    }

    pub(crate) fn require(&self, arity: usize) -> Result<()> {
        if arity > self.max_arity() {
            return Err(Error::Input(format!(
                "family materialized to arity {} but arity {arity} was needed",
                self.max_arity()
            )));
        }
        Ok(())
    }
}
