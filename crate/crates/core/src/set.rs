use std::fmt;

use crate::error::{Error, Result};
use crate::vector::CoordVector;

/// A finite set of distinct coordinate vectors of a common dimension, stored
/// in lexicographic order. Vertex indices used throughout the crate are
/// positions in this order.
///
/// `landmark_index(i)` names the element whose `i`-th coordinate is zero,
/// when exactly one such element exists. For realizable sets this is the
/// ordered landmark list of the canonical realization.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorSet {
    dim: usize,
    elements: Vec<CoordVector>,
    landmarks: Vec<Option<usize>>,
}

impl VectorSet {
    pub fn new(elements: Vec<CoordVector>) -> Result<Self> {
        let mut elements = elements;
        let dim = match elements.first() {
            Some(v) => v.len(),
            None => return Err(Error::EmptySet),
        };
        for v in &elements {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        elements.sort();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVector(pair[0].clone()));
            }
        }

        let mut landmarks = vec![None; dim];
        let mut zero_counts = vec![0usize; dim];
        for (idx, v) in elements.iter().enumerate() {
            for i in v.zero_positions() {
                zero_counts[i] += 1;
                landmarks[i] = Some(idx);
            }
        }
        for i in 0..dim {
            if zero_counts[i] != 1 {
                landmarks[i] = None;
            }
        }

        Ok(VectorSet {
            dim,
            elements,
            landmarks,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty sets
    }

    pub fn element(&self, idx: usize) -> &CoordVector {
        &self.elements[idx]
    }

    pub fn elements(&self) -> &[CoordVector] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CoordVector> {
        self.elements.iter()
    }

    pub fn index_of(&self, v: &CoordVector) -> Option<usize> {
        self.elements.binary_search(v).ok()
    }

    pub fn contains(&self, v: &CoordVector) -> bool {
        self.index_of(v).is_some()
    }

    /// Index of the unique element with coordinate `i` equal to zero, if one
    /// exists and is unique.
    pub fn landmark_index(&self, i: usize) -> Option<usize> {
        self.landmarks.get(i).copied().flatten()
    }

    /// The full landmark list, one vertex per coordinate, if every coordinate
    /// has a unique zero element (realizability condition 2).
    pub fn landmark_indices(&self) -> Option<Vec<usize>> {
        self.landmarks.iter().copied().collect()
    }
}

impl fmt::Debug for VectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(coords: &[u32]) -> CoordVector {
        CoordVector::new(coords.to_vec()).unwrap()
    }

    fn set(vs: &[&[u32]]) -> VectorSet {
        VectorSet::new(vs.iter().map(|v| cv(v)).collect()).unwrap()
    }

    #[test]
    fn orders_lexicographically() {
        let a = set(&[&[2, 0], &[0, 2], &[1, 1]]);
        let b = set(&[&[1, 1], &[2, 0], &[0, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.elements(), &[cv(&[0, 2]), cv(&[1, 1]), cv(&[2, 0])][..]);
    }

    #[test]
    fn rejects_duplicates_and_mixed_dims() {
        let dup = VectorSet::new(vec![cv(&[0, 1]), cv(&[0, 1])]);
        assert!(matches!(dup, Err(Error::DuplicateVector(_))));
        let mixed = VectorSet::new(vec![cv(&[0, 1]), cv(&[2])]);
        assert!(matches!(mixed, Err(Error::DimensionMismatch { .. })));
        assert!(matches!(VectorSet::new(vec![]), Err(Error::EmptySet)));
    }

    #[test]
    fn landmark_bookkeeping() {
        let s = set(&[&[0, 2], &[1, 1], &[2, 0]]);
        assert_eq!(s.landmark_index(0), s.index_of(&cv(&[0, 2])));
        assert_eq!(s.landmark_index(1), s.index_of(&cv(&[2, 0])));
        assert_eq!(s.landmark_indices(), Some(vec![0, 2]));

        // two zeros in the first coordinate: no landmark there
        let s = set(&[&[0, 1], &[0, 2], &[1, 0]]);
        assert_eq!(s.landmark_index(0), None);
        assert_eq!(s.landmark_indices(), None);
    }

    #[test]
    fn lookup() {
        let s = set(&[&[0, 2], &[1, 1], &[2, 0]]);
        assert_eq!(s.index_of(&cv(&[1, 1])), Some(1));
        assert!(!s.contains(&cv(&[9, 9])));
    }
}
