use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible coordinate entry. Entries are stored unsigned but must
/// fit a 32-bit signed integer so that differences never overflow.
pub const MAX_ENTRY: u32 = i32::MAX as u32;

/// An n-tuple of non-negative integer distances, the label of one vertex.
///
/// Vectors order lexicographically; that order is the canonical vertex order
/// everywhere in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordVector {
    coords: Vec<u32>,
}

impl CoordVector {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(&bad) = coords.iter().find(|&&c| c > MAX_ENTRY) {
            return Err(Error::EntryOutOfRange(bad as u64));
        }
        Ok(CoordVector { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty tuples
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    /// Coordinate positions holding a zero.
    pub fn zero_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(i, _)| i)
    }

    /// Componentwise decrement, `None` if any entry is already zero.
    pub fn minus_one(&self) -> Option<CoordVector> {
        let coords: Option<Vec<u32>> = self.coords.iter().map(|&c| c.checked_sub(1)).collect();
        coords.map(|coords| CoordVector { coords })
    }

    /// Componentwise increment.
    pub fn plus_one(&self) -> CoordVector {
        CoordVector {
            coords: self.coords.iter().map(|&c| c + 1).collect(),
        }
    }
}

impl fmt::Display for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Chebyshev distance: the maximum absolute coordinate difference.
pub fn chebyshev_distance(x: &CoordVector, y: &CoordVector) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    Ok(x.coords()
        .iter()
        .zip(y.coords())
        .map(|(&a, &b)| a.abs_diff(b))
        .max()
        .expect("vectors are non-empty"))
}

/// Two vectors are adjacent in a canonical realization exactly when their
/// Chebyshev distance is 1.
pub fn chebyshev_adjacent(x: &CoordVector, y: &CoordVector) -> Result<bool> {
    Ok(chebyshev_distance(x, y)? == 1)
}
