//! Finite universes of named points.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default cap on universe size; every classification below is exhaustive.
pub const DEFAULT_MAX_UNIVERSE: usize = 4096;

/// Index of a point inside its universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub usize);

impl fmt::Debug for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniverseError {
    #[error("empty universe: the field of primitives must hold at least one point")]
    EmptyUniverse,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("universe size {0} exceeds the cap {1}")]
    TooLarge(usize, usize),
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
}

/// An ordered finite field of named primitives.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>, UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Universe::with_cap(labels, DEFAULT_MAX_UNIVERSE)
    }

    pub fn with_cap<I, S>(labels: I, cap: usize) -> Result<Arc<Universe>, UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(UniverseError::EmptyUniverse);
        }
        if labels.len() > cap {
            return Err(UniverseError::TooLarge(labels.len(), cap));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(UniverseError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(Universe { labels, index }))
    }

    /// Universe of integer labels `lo..=hi`.
    pub fn range(lo: i64, hi: i64) -> Result<Arc<Universe>, UniverseError> {
        Universe::new((lo..=hi).map(|n| n.to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, p: PointId) -> &str {
        &self.labels[p.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lookup(&self, label: &str) -> Result<PointId, UniverseError> {
        self.index
            .get(label)
            .map(|&i| PointId(i))
            .ok_or_else(|| UniverseError::UnknownLabel(label.to_string()))
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> {
        (0..self.size()).map(PointId)
    }

    /// Integer value of a numeric label, when the universe was built from numbers.
    pub fn numeric(&self, p: PointId) -> Option<i64> {
        self.labels[p.0].parse().ok()
    }
}

/// Two universe handles denote the same universe when they share storage or
/// carry identical label lists.
pub fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a.labels == b.labels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_universe_has_ordered_points() {
        let u = Universe::range(1, 12).unwrap();
        assert_eq!(u.size(), 12);
        assert_eq!(u.label(PointId(0)), "1");
        assert_eq!(u.lookup("12").unwrap(), PointId(11));
        assert_eq!(u.numeric(PointId(3)), Some(4));
    }

    #[test]
    fn empty_universe_rejected() {
        let labels: Vec<String> = vec![];
        assert_eq!(
            Universe::new(labels).unwrap_err(),
            UniverseError::EmptyUniverse
        );
    }

    #[test]
    fn duplicate_label_rejected() {
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            UniverseError::DuplicateLabel("a".into())
        );
    }
}
