//! Checking claimed realizations, resolving-set tests, projection of
//! arbitrary graphs into canonical coordinates, and equivalence /
//! small-instance isomorphism of realizations.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, LabeledGraph, SimpleGraph};
use crate::realization::Realization;
use crate::set::VectorSet;
use crate::vector::CoordVector;

/// Result of [`verify_realization`]. `Ok` means the graph is connected and
/// every vertex sits at exactly its labeled distance from every landmark.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Ok,
    /// The graph is disconnected; `unreachable` is the first vertex (in
    /// lexicographic order) not reached from vertex 0.
    Disconnected {
        unreachable: usize,
    },
    /// First failing (vertex, landmark) pair in vertex-major scan order.
    Mismatch {
        vertex: usize,
        landmark: usize,
        expected: u32,
        actual: u32,
    },
}

impl VerifyOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, VerifyOutcome::Ok)
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyOutcome::Ok => write!(f, "ok"),
            VerifyOutcome::Disconnected { unreachable } => {
                write!(f, "disconnected (vertex {unreachable} unreachable)")
            }
            VerifyOutcome::Mismatch {
                vertex,
                landmark,
                expected,
                actual,
            } => write!(
                f,
                "vertex {vertex} has distance {actual} to landmark {} (expected {expected})",
                landmark + 1
            ),
        }
    }
}

/// Checks that `(g, landmarks)` realizes `s`: the graph must be connected and
/// BFS must confirm `d(u, landmark_i) = u_i` for every vertex `u` and every
/// coordinate `i` (scanned landmark-major, so the reported mismatch is the
/// first failing vertex of the first failing landmark). Distinctness of the
/// set elements then makes the landmark list a resolving set for free.
pub fn verify_realization(
    g: &LabeledGraph,
    landmarks: &[usize],
    s: &VectorSet,
) -> Result<VerifyOutcome> {
    if g.vertices() != s {
        return Err(Error::SetMismatch);
    }
    if landmarks.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            got: landmarks.len(),
        });
    }
    for (i, &w) in landmarks.iter().enumerate() {
        if w >= s.len() {
            return Err(Error::VertexOutOfRange {
                index: w,
                len: s.len(),
            });
        }
        if landmarks[..i].contains(&w) {
            return Err(Error::DuplicateLandmark(w));
        }
    }

    let from_zero = bfs_distances(g, 0)?;
    if let Some(unreachable) = from_zero.iter().position(|d| d.is_none()) {
        return Ok(VerifyOutcome::Disconnected { unreachable });
    }

    for (i, &w) in landmarks.iter().enumerate() {
        let dist = bfs_distances(g, w)?;
        for (u, d) in dist.iter().enumerate() {
            let expected = s.element(u).get(i);
            let actual = d.expect("graph already checked connected");
            if actual != expected {
                return Ok(VerifyOutcome::Mismatch {
                    vertex: u,
                    landmark: i,
                    expected,
                    actual,
                });
            }
        }
    }
    Ok(VerifyOutcome::Ok)
}

fn metric_representations(g: &SimpleGraph, w: &[usize]) -> Result<Vec<Vec<u32>>> {
    if w.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    for (i, &v) in w.iter().enumerate() {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                index: v,
                len: g.vertex_count(),
            });
        }
        if w[..i].contains(&v) {
            return Err(Error::DuplicateLandmark(v));
        }
    }
    let mut columns = Vec::with_capacity(w.len());
    for &v in w {
        let dist = g.bfs_distances(v)?;
        if dist.iter().any(|d| d.is_none()) {
            return Err(Error::Disconnected);
        }
        columns.push(dist);
    }
    Ok((0..g.vertex_count())
        .map(|u| columns.iter().map(|c| c[u].unwrap()).collect())
        .collect())
}

/// True when the metric representations with respect to `w` are pairwise
/// distinct. Disconnected graphs are an error: distances are undefined.
pub fn is_resolving_set(g: &SimpleGraph, w: &[usize]) -> Result<bool> {
    let reps = metric_representations(g, w)?;
    let mut sorted: Vec<&Vec<u32>> = reps.iter().collect();
    sorted.sort();
    Ok(sorted.windows(2).all(|p| p[0] != p[1]))
}

/// Relabels every vertex of `g` by its metric representation with respect to
/// the resolving list `w`, producing the equivalent realization in canonical
/// coordinates (a spanning subgraph of the canonical realization of the
/// induced set).
pub fn project_to_canonical(g: &SimpleGraph, w: &[usize]) -> Result<Realization> {
    let reps = metric_representations(g, w)?;
    // Name a clashing pair when w does not resolve.
    for u in 0..reps.len() {
        for v in (u + 1)..reps.len() {
            if reps[u] == reps[v] {
                return Err(Error::NotResolving(u, v));
            }
        }
    }
    let vectors: Vec<CoordVector> = reps
        .iter()
        .map(|r| CoordVector::new(r.clone()))
        .collect::<Result<_>>()?;
    let set = VectorSet::new(vectors.clone())?;
    let relabel: Vec<usize> = vectors
        .iter()
        .map(|v| set.index_of(v).expect("vector was just inserted"))
        .collect();
    let edges = g.edges().map(|(u, v)| (relabel[u], relabel[v]));
    let graph = LabeledGraph::new(set, edges)?;
    let landmarks = w.iter().map(|&v| relabel[v]).collect();
    Realization::new(graph, landmarks)
}

/// Two realizations of the same set are equivalent exactly when their edge
/// sets coincide under the coordinate labels: the coordinate-preserving
/// bijection is forced to be the identity, so it is an isomorphism iff the
/// edge sets agree.
pub fn are_equivalent(r1: &Realization, r2: &Realization) -> Result<bool> {
    if r1.set() != r2.set() {
        return Err(Error::DifferentSets);
    }
    Ok(r1.graph().edge_set() == r2.graph().edge_set())
}

/// Size cap for [`are_isomorphic_small`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 10;

/// Abstract graph isomorphism by degree-pruned permutation search. Only
/// intended for reproducing small examples; both graphs must have at most
/// [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
pub fn are_isomorphic_small(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertex_count() > ISOMORPHISM_VERTEX_LIMIT {
            return Err(Error::TooLarge {
                what: "vertex count",
                got: g.vertex_count(),
                limit: ISOMORPHISM_VERTEX_LIMIT,
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.vertex_count();
    let adj1 = adjacency_matrix(g1);
    let adj2 = adjacency_matrix(g2);
    let deg = |adj: &[Vec<bool>], v: usize| adj[v].iter().filter(|&&b| b).count();
    let mut degs1: Vec<usize> = (0..n).map(|v| deg(&adj1, v)).collect();
    let mut degs2: Vec<usize> = (0..n).map(|v| deg(&adj2, v)).collect();
    let raw_degs1 = degs1.clone();
    let raw_degs2 = degs2.clone();
    degs1.sort_unstable();
    degs2.sort_unstable();
    if degs1 != degs2 {
        return Ok(false);
    }

    // Backtracking over vertex maps, restricted to equal-degree candidates.
    struct Search<'a> {
        adj1: &'a [Vec<bool>],
        adj2: &'a [Vec<bool>],
        degs1: &'a [usize],
        degs2: &'a [usize],
    }

    impl Search<'_> {
        fn extend(&self, u: usize, map: &mut [Option<usize>], used: &mut [bool]) -> bool {
            let n = map.len();
            if u == n {
                return true;
            }
            'candidates: for c in 0..n {
                if used[c] || self.degs1[u] != self.degs2[c] {
                    continue;
                }
                for (prev, assigned) in map.iter().enumerate().take(u) {
                    let img = assigned.unwrap();
                    if self.adj1[u][prev] != self.adj2[c][img] {
                        continue 'candidates;
                    }
                }
                map[u] = Some(c);
                used[c] = true;
                if self.extend(u + 1, map, used) {
                    return true;
                }
                map[u] = None;
                used[c] = false;
            }
            false
        }
    }

    let search = Search {
        adj1: &adj1,
        adj2: &adj2,
        degs1: &raw_degs1,
        degs2: &raw_degs2,
    };
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    Ok(search.extend(0, &mut map, &mut used))
}

fn adjacency_matrix(g: &LabeledGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}
