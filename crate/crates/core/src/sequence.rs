//! Degree sequences and degree sets.

use std::fmt;

use crate::error::{Error, Result};

/// A finite non-increasing sequence of nonnegative degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Wraps `values`, which must already be non-increasing.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(position) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::UnsortedSequence {
                position: position + 1,
            });
        }
        Ok(DegreeSequence(values))
    }

    /// Sorts `values` non-increasing.
    pub fn sorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    /// The constant sequence `(value, …, value)` of length `len`.
    pub fn constant(value: usize, len: usize) -> Self {
        DegreeSequence(vec![value; len])
    }

    /// `(n, n-1, …, 1)`.
    pub fn staircase(n: usize) -> Self {
        DegreeSequence((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }
}

impl std::ops::Index<usize> for DegreeSequence {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A nonempty set of positive integers stored strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSet(Vec<usize>);

impl DegreeSet {
    /// Wraps `values`, which must be nonempty, positive and strictly decreasing.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        if values.contains(&0) {
            return Err(Error::NonPositiveSetEntry);
        }
        if let Some(position) = values.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing {
                position: position + 1,
            });
        }
        Ok(DegreeSet(values))
    }

    /// Sorts and deduplicates `values`.
    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        Self::new(values)
    }

    /// Distinct values of a degree list, as a set. Zero degrees are ignored.
    pub fn of_degrees(degrees: impl IntoIterator<Item = usize>) -> Option<Self> {
        Self::from_unsorted(degrees.into_iter().filter(|&d| d > 0).collect()).ok()
    }

    /// Number of elements `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest element `p₁`.
    pub fn max(&self) -> usize {
        self.0[0]
    }

    /// The smallest element `p_k`.
    pub fn min(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, value: usize) -> bool {
        self.0.contains(&value)
    }

    /// True when the elements are consecutive integers.
    pub fn is_consecutive(&self) -> bool {
        self.max() - self.min() == self.len() - 1
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
