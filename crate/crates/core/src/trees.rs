//! Tree realizations: stratifying a set by the diagonal shift, deciding
//! whether a tree realization exists, building it (unique up to
//! equivalence), and deciding whether it is the only realization at all.
//!
//! The stratification splits `S` by whether the all-coordinates-minus-one
//! shift of a vector is itself in `S`. Vectors whose shift is present hang
//! off the rest as pendant chains; the remainder carries all the
//! landmark-to-landmark paths and must form a tree on its own for a tree
//! realization to exist.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realizability::{canonical_edges, check_realizable};
use crate::realization::Realization;
use crate::set::VectorSet;
use crate::vector::{chebyshev_adjacent, chebyshev_distance, CoordVector};

/// The stratification of a set under the diagonal shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strata {
    /// Vectors whose minus-one shift is *not* in the set (the stratum that
    /// carries every landmark-to-landmark path of a tree realization).
    pub base: Vec<CoordVector>,
    /// Vectors whose minus-one shift is in the set.
    pub shifted: Vec<CoordVector>,
    /// Base vectors whose plus-one shift is in the set; pairs of these at
    /// Chebyshev distance 1 are exactly what creates cycles above the base.
    pub extendable: Vec<CoordVector>,
}

/// Splits `s` into the base stratum, the shifted stratum, and the extendable
/// base vectors. The two strata partition `s`.
pub fn split_strata(s: &VectorSet) -> Strata {
    let mut base = Vec::new();
    let mut shifted = Vec::new();
    for x in s.iter() {
        let down = x.minus_one();
        if down.is_some_and(|d| s.contains(&d)) {
            shifted.push(x.clone());
        } else {
            base.push(x.clone());
        }
    }
    let extendable = base
        .iter()
        .filter(|x| s.contains(&x.plus_one()))
        .cloned()
        .collect();
    Strata {
        base,
        shifted,
        extendable,
    }
}

/// Why a realizable set admits no tree realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeViolation {
    /// Two Chebyshev-adjacent vectors agree in some coordinate, so any
    /// realization has an edge within one bipartition class.
    AdjacentShareCoordinate {
        x: CoordVector,
        y: CoordVector,
        coordinate: usize,
    },
    /// A base vector has not exactly one base descent neighbor in some
    /// coordinate.
    BaseDescentNotUnique {
        x: CoordVector,
        coordinate: usize,
        count: usize,
    },
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeViolation::AdjacentShareCoordinate { x, y, coordinate } => write!(
                f,
                "adjacent vectors {x} and {y} share coordinate {}",
                coordinate + 1
            ),
            TreeViolation::BaseDescentNotUnique {
                x,
                coordinate,
                count,
            } => write!(
                f,
                "{x} has {count} base descent neighbors in coordinate {} (needs exactly 1)",
                coordinate + 1
            ),
        }
    }
}

/// Outcome of [`tree_realizable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeCheck {
    Realizable,
    NotRealizable(TreeViolation),
}

impl TreeCheck {
    pub fn is_tree_realizable(&self) -> bool {
        matches!(self, TreeCheck::Realizable)
    }

    pub fn violation(&self) -> Option<&TreeViolation> {
        match self {
            TreeCheck::Realizable => None,
            TreeCheck::NotRealizable(v) => Some(v),
        }
    }
}

/// A realizable set has a tree realization iff (i) Chebyshev-adjacent
/// vectors differ in every coordinate, and (ii) every base vector with a
/// positive coordinate has exactly one base Chebyshev neighbor one step down
/// there. The first violated condition is reported with a witness.
pub fn tree_realizable(s: &VectorSet) -> Result<TreeCheck> {
    let report = check_realizable(s);
    if !report.realizable {
        return Err(Error::NotRealizable(report));
    }

    for (u, v) in canonical_edges(s) {
        let (x, y) = (s.element(u), s.element(v));
        for i in 0..s.dim() {
            if x.get(i) == y.get(i) {
                return Ok(TreeCheck::NotRealizable(
                    TreeViolation::AdjacentShareCoordinate {
                        x: x.clone(),
                        y: y.clone(),
                        coordinate: i,
                    },
                ));
            }
        }
    }

    let strata = split_strata(s);
    for x in &strata.base {
        for i in 0..s.dim() {
            if x.get(i) == 0 {
                continue;
            }
            let count = strata
                .base
                .iter()
                .filter(|y| {
                    y.get(i) + 1 == x.get(i) && chebyshev_adjacent(x, y).expect("same dimension")
                })
                .count();
            if count != 1 {
                return Ok(TreeCheck::NotRealizable(
                    TreeViolation::BaseDescentNotUnique {
                        x: x.clone(),
                        coordinate: i,
                        count,
                    },
                ));
            }
        }
    }

    Ok(TreeCheck::Realizable)
}

/// Builds the tree realization: canonical edges within the base stratum,
/// plus one pendant edge from each shifted vector down to its minus-one
/// shift. The result has `|S| - 1` edges and passes full verification;
/// every tree realization of `s` has exactly this edge set.
pub fn build_tree_realization(s: &VectorSet) -> Result<Realization> {
    match tree_realizable(s)? {
        TreeCheck::Realizable => {}
        TreeCheck::NotRealizable(v) => return Err(Error::NotTreeRealizable(v)),
    }
    let strata = split_strata(s);
    let in_base: Vec<bool> = s
        .iter()
        .map(|x| strata.base.binary_search(x).is_ok())
        .collect();

    let mut edges = Vec::new();
    for (u, v) in canonical_edges(s) {
        if in_base[u] && in_base[v] {
            edges.push((u, v));
        }
    }
    for y in &strata.shifted {
        let u = s.index_of(y).expect("stratum vector is in the set");
        let down = y
            .minus_one()
            .expect("shifted vectors have positive entries");
        let v = s
            .index_of(&down)
            .expect("shifted vectors descend into the set");
        edges.push((u, v));
    }

    let graph = LabeledGraph::new(s.clone(), edges)?;
    debug_assert_eq!(graph.edge_count(), s.len() - 1);
    Realization::with_implicit_landmarks(graph)
}

/// A tree-realizable set has no other realization iff its extendable base
/// vectors are pairwise at Chebyshev distance above 1 — equivalently, the
/// canonical realization is itself the tree.
pub fn uniquely_realizable_by_tree(s: &VectorSet) -> Result<bool> {
    match tree_realizable(s)? {
        TreeCheck::Realizable => {}
        TreeCheck::NotRealizable(v) => return Err(Error::NotTreeRealizable(v)),
    }
    let strata = split_strata(s);
    for (a, x) in strata.extendable.iter().enumerate() {
        for y in &strata.extendable[a + 1..] {
            if chebyshev_distance(x, y)? <= 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
