use std::ops::Index;

use super::BohlFunction;
use crate::error::{Error, Result};

/// A nonempty ordered tuple of Bohl functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BohlTuple(Vec<BohlFunction>);

impl BohlTuple {
    pub fn new(entries: Vec<BohlFunction>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[BohlFunction] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BohlFunction> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BohlFunction> {
        self.0.iter()
    }

    /// `Σ f_j·g_j`.
    pub fn dot(&self, other: &BohlTuple) -> Result<BohlFunction> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).map(|(f, g)| f * g).sum())
    }

    pub fn map(&self, f: impl Fn(&BohlFunction) -> BohlFunction) -> Self {
        Self(self.0.iter().map(f).collect())
    }
}

impl Index<usize> for BohlTuple {
    type Output = BohlFunction;

    fn index(&self, idx: usize) -> &BohlFunction {
        &self.0[idx]
    }
}

impl<'a> IntoIterator for &'a BohlTuple {
    type Item = &'a BohlFunction;
    type IntoIter = std::slice::Iter<'a, BohlFunction>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
