use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::set::VectorSet;
use crate::vector::CoordVector;

fn normalize_edge(u: usize, v: usize, len: usize) -> Result<(usize, usize)> {
    if u >= len {
        return Err(Error::VertexOutOfRange { index: u, len });
    }
    if v >= len {
        return Err(Error::VertexOutOfRange { index: v, len });
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok((u.min(v), u.max(v)))
}

fn bfs(adjacency: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adjacency.len()];
    dist[source] = Some(0);
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in &adjacency[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// A simple graph whose vertices are the elements of a [`VectorSet`], named by
/// their coordinate vectors. Edges are unordered index pairs stored `(min,
/// max)` and iterated in lexicographic order of their endpoint vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGraph {
    vertices: VectorSet,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new(
        vertices: VectorSet,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let len = vertices.len();
        let edges = edges
            .into_iter()
            .map(|(u, v)| normalize_edge(u, v, len))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(LabeledGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &VectorSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbor lists indexed by vertex, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        adjacency
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<LabeledGraph> {
        let e = normalize_edge(u, v, self.vertices.len())?;
        let mut g = self.clone();
        g.edges.insert(e);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<LabeledGraph> {
        let e = normalize_edge(u, v, self.vertices.len())?;
        let mut g = self.clone();
        g.edges.remove(&e);
        Ok(g)
    }

    /// Edge list as coordinate-vector pairs, in iteration order.
    pub fn edge_vectors(&self) -> Vec<(&CoordVector, &CoordVector)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertices.element(u), self.vertices.element(v)))
            .collect()
    }
}

/// Exact BFS hop counts from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &LabeledGraph, source: usize) -> Result<Vec<Option<u32>>> {
    if source >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            index: source,
            len: g.vertex_count(),
        });
    }
    Ok(bfs(&g.adjacency(), source))
}

/// True when one BFS from vertex 0 reaches every vertex. Graphs are non-empty
/// by construction.
pub fn is_connected(g: &LabeledGraph) -> bool {
    bfs(&g.adjacency(), 0).iter().all(|d| d.is_some())
}

/// A plain graph over anonymous vertices `0..n`, for inputs that carry no
/// coordinate labels yet (resolving-set tests, projection).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|(u, v)| normalize_edge(u, v, n))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(SimpleGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        adjacency
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange {
                index: source,
                len: self.n,
            });
        }
        Ok(bfs(&self.adjacency(), source))
    }
}
