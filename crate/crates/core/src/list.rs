use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::natural::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("a number list needs at least one element")]
pub struct EmptyListError;

/// An ordered, non-empty list of naturals.
///
/// Reductions rewrite values but never change the length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberList(Vec<Natural>);

impl NumberList {
    pub fn new(items: Vec<Natural>) -> Result<Self, EmptyListError> {
        if items.is_empty() {
            Err(EmptyListError)
        } else {
            Ok(NumberList(items))
        }
    }

    /// Convenience constructor for tests and examples.
    ///
    /// Panics on an empty slice.
    pub fn from_u64s(values: &[u64]) -> Self {
        NumberList::new(values.iter().map(|&v| Natural::from(v)).collect())
            .expect("from_u64s needs a non-empty slice")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Natural] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Natural> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Natural> {
        self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [Natural] {
        &mut self.0
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn sum(&self) -> Natural {
        self.0.iter().sum()
    }

    /// Values sorted ascending, for comparisons that ignore order.
    pub fn sorted(&self) -> Vec<Natural> {
        let mut v = self.0.clone();
        v.sort();
        v
    }
}

impl Index<usize> for NumberList {
    type Output = Natural;
    fn index(&self, i: usize) -> &Natural {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a NumberList {
    type Item = &'a Natural;
    type IntoIter = std::slice::Iter<'a, Natural>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl TryFrom<Vec<Natural>> for NumberList {
    type Error = EmptyListError;
    fn try_from(items: Vec<Natural>) -> Result<Self, Self::Error> {
        NumberList::new(items)
    }
}

impl fmt::Display for NumberList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_list_is_rejected() {
        assert_eq!(NumberList::new(vec![]), Err(EmptyListError));
    }

    #[test]
    fn display_matches_tuple_notation() {
        assert_eq!(
            NumberList::from_u64s(&[22, 14, 8, 10]).to_string(),
            "(22, 14, 8, 10)"
        );
    }

    #[test]
    fn counts_and_sums() {
        let xs = NumberList::from_u64s(&[0, 3, 0, 4]);
        assert_eq!(xs.nonzero_count(), 2);
        assert_eq!(xs.sum(), Natural::from(7u32));
    }
}
