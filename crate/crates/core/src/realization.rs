use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realizability::check_realizable;
use crate::set::VectorSet;
use crate::verification::verify_realization;

/// A labeled graph together with an ordered landmark list that provably
/// realizes its own vertex set: construction re-verifies by BFS that every
/// vertex sits at its labeled distance from every landmark, so holding a
/// `Realization` is holding the proof.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    graph: LabeledGraph,
    landmarks: Vec<usize>,
}

impl Realization {
    /// Wraps `(graph, landmarks)` after checking the landmark shape (one per
    /// coordinate, the `i`-th with coordinate `i` zero) and full BFS
    /// verification.
    pub fn new(graph: LabeledGraph, landmarks: Vec<usize>) -> Result<Self> {
        let set = graph.vertices();
        if landmarks.len() != set.dim() {
            return Err(Error::DimensionMismatch {
                expected: set.dim(),
                got: landmarks.len(),
            });
        }
        for (i, &w) in landmarks.iter().enumerate() {
            if w >= set.len() {
                return Err(Error::VertexOutOfRange {
                    index: w,
                    len: set.len(),
                });
            }
            if set.element(w).get(i) != 0 {
                return Err(Error::BadLandmark { index: w, coord: i });
            }
        }
        let outcome = verify_realization(&graph, &landmarks, graph.vertices())?;
        if !outcome.is_ok() {
            return Err(Error::NotARealization(outcome));
        }
        Ok(Realization { graph, landmarks })
    }

    /// Like [`Realization::new`], with the landmark list read off the vertex
    /// set (the unique zero vector of each coordinate).
    pub fn with_implicit_landmarks(graph: LabeledGraph) -> Result<Self> {
        let landmarks = match graph.vertices().landmark_indices() {
            Some(w) => w,
            None => return Err(Error::NotRealizable(check_realizable(graph.vertices()))),
        };
        Realization::new(graph, landmarks)
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn set(&self) -> &VectorSet {
        self.graph.vertices()
    }

    pub fn landmarks(&self) -> &[usize] {
        &self.landmarks
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::CoordVector;

    fn set(vs: &[&[u32]]) -> VectorSet {
        VectorSet::new(
            vs.iter()
                .map(|v| CoordVector::new(v.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn accepts_a_valid_pair() {
        let s = set(&[&[0], &[1], &[2]]);
        let g = LabeledGraph::new(s, [(0, 1), (1, 2)]).unwrap();
        let r = Realization::with_implicit_landmarks(g).unwrap();
        assert_eq!(r.landmarks(), &[0]);
        assert_eq!(r.edge_count(), 2);
    }

    #[test]
    fn rejects_wrong_distances() {
        // direct edge 0-2 makes d((2), (0)) = 1, not 2
        let s = set(&[&[0], &[1], &[2]]);
        let g = LabeledGraph::new(s, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            Realization::with_implicit_landmarks(g),
            Err(Error::NotARealization(_))
        ));
    }

    #[test]
    fn rejects_bad_landmark_shape() {
        let s = set(&[&[0], &[1]]);
        let g = LabeledGraph::new(s, [(0, 1)]).unwrap();
        assert!(matches!(
            Realization::new(g.clone(), vec![1]),
            Err(Error::BadLandmark { .. })
        ));
        assert!(matches!(
            Realization::new(g, vec![0, 1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn implicit_landmarks_need_unique_zeros() {
        let s = set(&[&[0, 1], &[0, 2], &[1, 0]]);
        let g = LabeledGraph::new(s, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            Realization::with_implicit_landmarks(g),
            Err(Error::NotRealizable(_))
        ));
    }
}
