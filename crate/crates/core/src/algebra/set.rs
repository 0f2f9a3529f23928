use crate::error::{Error, Result};
use crate::transform::{check_degree, Transformation};

/// A deduplicated set of transformations of one degree, kept in canonical
/// (lexicographic) order. Membership is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    degree: usize,
    elements: Vec<Transformation>,
}

impl ElementSet {
    /// Sorts and deduplicates `elements`; every element must have degree `n`.
    pub fn new<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = Transformation>,
    {
        check_degree(n)?;
        let mut elements: Vec<Transformation> = elements.into_iter().collect();
        if let Some(bad) = elements.iter().find(|t| t.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: bad.degree(),
                right: n,
            });
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self {
            degree: n,
            elements,
        })
    }

    /// Caller guarantees sorted, distinct, degree-`n` elements.
    pub(crate) fn from_sorted(n: usize, elements: Vec<Transformation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|t| t.degree() == n));
        Self {
            degree: n,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index_of(t).is_some()
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    pub fn get(&self, i: usize) -> Option<&Transformation> {
        self.elements.get(i)
    }

    pub fn as_slice(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Transformation> {
        self.elements.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.degree == other.degree && self.iter().all(|t| other.contains(t))
    }

    pub fn into_vec(self) -> Vec<Transformation> {
        self.elements
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Transformation;
    type IntoIter = std::slice::Iter<'a, Transformation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
