//! Walk censuses: counts of self-avoiding walks grouped by the set of
//! vertices they visit.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::blade::Blade;
use crate::error::{Result, ZeonError};
use crate::tol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusKind {
    Paths,
    Cycles,
    Pwics,
    PathsAndPwics,
    /// Closed walks read off `(Ψ + Ψ†)ᵏ`, each cycle counted twice.
    SymmetricCycles,
}

/// Counts keyed by the set of vertices a walk visits after leaving its
/// start. A path `i → j` is keyed without `i`; cycles and paths with an
/// initial cycle return to their start and so include it. Adding the start
/// vertex to a path key gives the full vertex set of the walk.
#[derive(Clone, PartialEq, Eq)]
pub struct WalkCensus {
    pub kind: CensusKind,
    pub from: usize,
    pub to: usize,
    pub table: BTreeMap<Blade, u64>,
}

impl WalkCensus {
    pub fn new(kind: CensusKind, from: usize, to: usize) -> WalkCensus {
        WalkCensus {
            kind,
            from,
            to,
            table: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, key: Blade, count: u64) {
        if count > 0 {
            *self.table.entry(key).or_default() += count;
        }
    }

    pub fn get(&self, key: Blade) -> u64 {
        self.table.get(&key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.table.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Entries as `(sorted vertex list, count)`.
    pub fn entries(&self) -> Vec<(Vec<usize>, u64)> {
        let mut e: Vec<(Blade, u64)> = self.table.iter().map(|(b, c)| (*b, *c)).collect();
        e.sort_by(|a, b| a.0.lex_cmp(&b.0));
        e.into_iter().map(|(b, c)| (b.index_vec(), c)).collect()
    }

    /// Sum of both tables under `kind`.
    pub fn merged(&self, other: &WalkCensus, kind: CensusKind) -> WalkCensus {
        let mut out = WalkCensus {
            kind,
            ..self.clone()
        };
        for (b, c) in &other.table {
            out.add(*b, *c);
        }
        out
    }

    /// Same table regardless of kind and endpoints.
    pub fn same_counts(&self, other: &WalkCensus) -> bool {
        self.table == other.table
    }

    /// Adds `value` under `key` after checking it is a nonnegative integer
    /// up to rounding noise.
    pub fn add_decoded(&mut self, key: Blade, value: Complex64) -> Result<()> {
        let count = round_count(key, value)?;
        self.add(key, count);
        Ok(())
    }
}

/// Rounds a decoded coefficient to a count.
pub fn round_count(key: Blade, value: Complex64) -> Result<u64> {
    let r = value.re.round();
    if (value.re - r).abs() > tol::COUNT_ROUNDING
        || value.im.abs() > tol::COUNT_ROUNDING
        || r < 0.0
    {
        return Err(ZeonError::NonIntegerCount {
            blade: key,
            value: value.re,
        });
    }
    Ok(r as u64)
}

impl fmt::Debug for WalkCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}→{} {{", self.kind, self.from, self.to)?;
        for (n, (idx, c)) in self.entries().into_iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{idx:?}: {c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize)]
struct Entry {
    indices: Vec<usize>,
    count: u64,
}

impl Serialize for WalkCensus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .entries()
            .into_iter()
            .map(|(indices, count)| Entry { indices, count })
            .collect();
        let mut st = s.serialize_struct("WalkCensus", 4)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("from", &self.from)?;
        st.serialize_field("to", &self.to)?;
        st.serialize_field("table", &entries)?;
        st.end()
    }
}
