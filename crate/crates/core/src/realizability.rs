//! Deciding whether a vector set is the coordinate set of some graph, and
//! building the canonical realization when it is.
//!
//! A set `S` of n-dimensional vectors is realizable exactly when
//!
//! 1. every entry is non-negative and each vector holds at most one zero;
//! 2. every coordinate has exactly one vector that is zero there;
//! 3. every vector can descend: for each `x` and coordinate `i` with
//!    `x_i > 0` some `y` in `S` has `y_i = x_i - 1` and stays within
//!    Chebyshev distance 1 of `x`.
//!
//! The canonical realization puts an edge between every Chebyshev-adjacent
//! pair; every other realization is a spanning subgraph of it.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realization::Realization;
use crate::set::VectorSet;
use crate::vector::{chebyshev_adjacent, chebyshev_distance, CoordVector};

/// Cap on the number of recorded violations.
pub const MAX_VIOLATIONS: usize = 100;

/// One broken realizability condition, with the witnessing vector(s) and the
/// coordinate where the check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which of the three conditions failed (1, 2 or 3).
    pub condition: u8,
    /// Witness vectors: the multi-zero vector (condition 1), the clashing
    /// zero vectors if any (condition 2), or the vector without a descent
    /// step (condition 3).
    pub vectors: Vec<CoordVector>,
    /// Coordinate index involved, 0-based.
    pub coordinate: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} at coordinate {}:",
            self.condition,
            self.coordinate + 1
        )?;
        match self.condition {
            1 => write!(f, " vector {} has more than one zero", self.vectors[0]),
            2 if self.vectors.is_empty() => write!(f, " no vector is zero there"),
            2 => {
                write!(f, " several vectors are zero there:")?;
                for v in &self.vectors {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            _ => write!(f, " {} has no descent neighbor", self.vectors[0]),
        }
    }
}

/// Outcome of [`check_realizable`]: `realizable` holds exactly when
/// `violations` is empty (violations are capped at [`MAX_VIOLATIONS`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub realizable: bool,
    pub violations: Vec<Violation>,
}

/// Checks the three realizability conditions, reporting every violation found
/// (up to the cap) rather than stopping at the first.
pub fn check_realizable(s: &VectorSet) -> RealizabilityReport {
    let mut violations = Vec::new();
    let push = |violations: &mut Vec<Violation>, v: Violation| {
        if violations.len() < MAX_VIOLATIONS {
            violations.push(v);
        }
    };

    // Condition 1: at most one zero per vector. (Entries are non-negative by
    // construction of CoordVector.)
    for x in s.iter() {
        let zeros: Vec<usize> = x.zero_positions().collect();
        if zeros.len() > 1 {
            push(
                &mut violations,
                Violation {
                    condition: 1,
                    vectors: vec![x.clone()],
                    coordinate: zeros[1],
                },
            );
        }
    }

    // Condition 2: exactly one vector with a zero in each coordinate.
    for i in 0..s.dim() {
        let zero_here: Vec<&CoordVector> = s.iter().filter(|x| x.get(i) == 0).collect();
        if zero_here.len() != 1 {
            push(
                &mut violations,
                Violation {
                    condition: 2,
                    vectors: zero_here.into_iter().cloned().collect(),
                    coordinate: i,
                },
            );
        }
    }

    // Condition 3: every positive coordinate admits a descent step.
    for x in s.iter() {
        for i in 0..s.dim() {
            if x.get(i) == 0 {
                continue;
            }
            let has_descent = s.iter().any(|y| {
                y.get(i) == x.get(i) - 1 && chebyshev_distance(x, y).expect("same dimension") <= 1
            });
            if !has_descent {
                push(
                    &mut violations,
                    Violation {
                        condition: 3,
                        vectors: vec![x.clone()],
                        coordinate: i,
                    },
                );
            }
        }
    }

    RealizabilityReport {
        realizable: violations.is_empty(),
        violations,
    }
}

/// All Chebyshev-adjacent pairs of set elements, as `(min, max)` index pairs
/// in lexicographic order. This is the edge set of the canonical realization.
pub fn canonical_edges(s: &VectorSet) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..s.len() {
        for v in (u + 1)..s.len() {
            if chebyshev_adjacent(s.element(u), s.element(v)).expect("same dimension") {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Builds the canonical realization: vertex set `s`, an edge for every
/// Chebyshev-adjacent pair, and one landmark per coordinate (the vector that
/// is zero there).
pub fn canonical_realization(s: &VectorSet) -> Result<Realization> {
    let report = check_realizable(s);
    if !report.realizable {
        return Err(Error::NotRealizable(report));
    }
    let graph = LabeledGraph::new(s.clone(), canonical_edges(s))?;
    let landmarks = s
        .landmark_indices()
        .expect("realizable sets have one landmark per coordinate");
    Realization::new(graph, landmarks)
}

/// The Chebyshev neighborhood of `x` within `s`: every element at Chebyshev
/// distance exactly 1, in lexicographic order.
pub fn chebyshev_neighborhood(s: &VectorSet, x: &CoordVector) -> Result<Vec<CoordVector>> {
    if !s.contains(x) {
        return Err(Error::NotInSet(x.clone()));
    }
    Ok(s.iter()
        .filter(|y| chebyshev_adjacent(x, y).expect("same dimension"))
        .cloned()
        .collect())
}
