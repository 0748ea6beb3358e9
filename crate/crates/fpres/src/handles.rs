//! Handle-count tables and Euler-characteristic arithmetic.
//!
//! A table records how many handles of each index a handle decomposition of
//! a manifold uses. Decompositions stated for generic `n` can make two
//! index expressions collide at small `n` (e.g. `(n-1)`-handles become
//! 1-handles at `n = 2`); colliding indices are merged additively and the
//! table is flagged as merged.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HandleError {
    #[error("handle index {index} exceeds manifold dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },
}

/// Handle counts for a manifold of the stated dimension, indexed by handle
/// index. Only nonzero counts are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleCountTable {
    dimension: usize,
    counts: BTreeMap<usize, u64>,
    merged: bool,
}

impl HandleCountTable {
    /// Builds a table from raw `(index, count)` pairs, merging repeated
    /// indices additively and flagging the merge.
    pub fn new(
        dimension: usize,
        pairs: impl IntoIterator<Item = (usize, u64)>,
    ) -> Result<Self, HandleError> {
        let mut counts = BTreeMap::new();
        let mut merged = false;
        for (index, count) in pairs {
            if index > dimension {
                return Err(HandleError::IndexOutOfRange { index, dimension });
            }
            if count == 0 {
                continue;
            }
            merged |= counts.contains_key(&index);
            *counts.entry(index).or_insert(0) += count;
        }
        Ok(HandleCountTable { dimension, counts, merged })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Count of handles of the given index (0 when absent).
    pub fn count(&self, index: usize) -> u64 {
        self.counts.get(&index).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    /// True when two generically distinct handle indices coincided and were
    /// combined.
    pub fn merged(&self) -> bool {
        self.merged
    }

    pub fn total_handles(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Alternating sum of handle counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .map(|(&i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for HandleCountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.counts.iter().map(|(i, c)| format!("{}x h{}", c, i)).collect();
        write!(f, "dim {}: {}", self.dimension, parts.join(" + "))?;
        if self.merged {
            write!(f, " (merged indices)")?;
        }
        Ok(())
    }
}

/// Alternating sum of handle counts: `sum_i (-1)^i counts[i]`.
pub fn euler_characteristic(table: &HandleCountTable) -> i64 {
    table.euler_characteristic()
}
