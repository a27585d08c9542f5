//! Edge-level edit laws and the searches built on them: greedy descent to a
//! minimal realization, exhaustive enumeration of all minimal realizations,
//! exact minimum-edge search, and the unique-realizability test.
//!
//! Everything here runs on one shared structure: each (vertex, coordinate)
//! pair with a positive coordinate is a *demand* that some incident edge
//! steps that coordinate down by one, and each canonical edge *covers* the
//! demands it satisfies. A spanning subgraph of the canonical realization
//! realizes the set exactly when every demand is covered (the descent
//! property), so:
//!
//! * an edge is removable from a realization iff every demand it covers is
//!   covered at least twice;
//! * an edge is forced (present in every realization) iff it is the only
//!   candidate for some demand;
//! * the minimum-edge problem is a minimum cover of the demands by canonical
//!   edges, solved here by branch and bound with forced-edge propagation.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realizability::{canonical_edges, check_realizable};
use crate::realization::Realization;
use crate::set::VectorSet;
use crate::vector::{chebyshev_adjacent, CoordVector};

/// Size limits for [`enumerate_minimal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: usize,
    pub max_canonical_edges: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_vertices: 12,
            max_canonical_edges: 20,
        }
    }
}

/// Exact minimum edge count over all realizations, with the
/// lexicographically smallest optimal witness.
#[derive(Debug, Clone)]
pub struct MinimumEdges {
    pub count: usize,
    pub witness: Realization,
}

/// Demand/cover incidence between canonical edges and (vertex, coordinate)
/// descent obligations. Built once per set, shared by every search.
struct Scaffold {
    edges: Vec<(usize, usize)>,
    /// demand -> (vertex, coordinate)
    demands: Vec<(usize, usize)>,
    /// demand -> ids of canonical edges able to cover it, ascending
    candidates: Vec<Vec<usize>>,
    /// edge id -> ids of demands it covers, ascending
    covers: Vec<Vec<usize>>,
}

impl Scaffold {
    fn build(s: &VectorSet) -> Scaffold {
        let edges = canonical_edges(s);
        let mut demands = Vec::new();
        let mut candidates = Vec::new();
        for u in 0..s.len() {
            for i in 0..s.dim() {
                if s.element(u).get(i) == 0 {
                    continue;
                }
                demands.push((u, i));
                candidates.push(Vec::new());
            }
        }
        let mut covers = vec![Vec::new(); edges.len()];
        for (d, &(u, i)) in demands.iter().enumerate() {
            let want = s.element(u).get(i) - 1;
            for v in 0..s.len() {
                if v == u || s.element(v).get(i) != want {
                    continue;
                }
                if !chebyshev_adjacent(s.element(u), s.element(v)).expect("same dimension") {
                    continue;
                }
                let e = edge_pair(u, v);
                let id = edges.binary_search(&e).expect("adjacent pair is canonical");
                candidates[d].push(id);
                covers[id].push(d);
            }
        }
        for c in &mut candidates {
            c.sort_unstable();
        }
        for c in &mut covers {
            c.sort_unstable();
        }
        Scaffold {
            edges,
            demands,
            candidates,
            covers,
        }
    }

    fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge_pair(u, v)).ok()
    }

    /// Per-demand count of present candidate edges.
    fn coverage_counts(&self, present: &[bool]) -> Vec<usize> {
        let mut counts = vec![0usize; self.demands.len()];
        for (e, &p) in present.iter().enumerate() {
            if p {
                for &d in &self.covers[e] {
                    counts[d] += 1;
                }
            }
        }
        counts
    }

    /// The descent property: every demand covered at least once.
    fn all_covered(&self, present: &[bool]) -> bool {
        self.coverage_counts(present).iter().all(|&c| c > 0)
    }

    /// A present edge can be dropped iff no demand relies on it alone.
    fn edge_removable(&self, e: usize, counts: &[usize]) -> bool {
        self.covers[e].iter().all(|&d| counts[d] >= 2)
    }
}

fn edge_pair(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn require_realizable(s: &VectorSet) -> Result<()> {
    let report = check_realizable(s);
    if report.realizable {
        Ok(())
    } else {
        Err(Error::NotRealizable(report))
    }
}

fn realization_from_edge_ids(
    s: &VectorSet,
    scaffold: &Scaffold,
    ids: impl IntoIterator<Item = usize>,
) -> Result<Realization> {
    let edges = ids.into_iter().map(|e| scaffold.edges[e]);
    let graph = LabeledGraph::new(s.clone(), edges)?;
    Realization::with_implicit_landmarks(graph)
}

/// Adding the non-edge `xy` preserves the realization iff `x` and `y` are
/// Chebyshev-adjacent (the added edge must belong to the canonical
/// realization; any such edge is harmless).
pub fn addable_edge(r: &Realization, x: &CoordVector, y: &CoordVector) -> Result<bool> {
    let s = r.set();
    let u = s.index_of(x).ok_or_else(|| Error::NotInSet(x.clone()))?;
    let v = s.index_of(y).ok_or_else(|| Error::NotInSet(y.clone()))?;
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    if r.graph().has_edge(u, v) {
        return Err(Error::EdgePresent(x.clone(), y.clone()));
    }
    chebyshev_adjacent(x, y)
}

/// Removing the edge `xy` preserves the realization iff for every coordinate
/// `i` with `x_i = y_i - 1` some other neighbor of `y` also has coordinate
/// `x_i` there, and symmetrically with the roles of `x` and `y` swapped.
pub fn removable_edge(r: &Realization, x: &CoordVector, y: &CoordVector) -> Result<bool> {
    let s = r.set();
    let u = s.index_of(x).ok_or_else(|| Error::NotInSet(x.clone()))?;
    let v = s.index_of(y).ok_or_else(|| Error::NotInSet(y.clone()))?;
    if !r.graph().has_edge(u, v) {
        return Err(Error::EdgeAbsent(x.clone(), y.clone()));
    }
    let adjacency = r.graph().adjacency();
    let spare_step = |hi: usize, lo: usize, i: usize| {
        // another neighbor of `hi` (besides `lo`) one step down in coordinate i
        adjacency[hi]
            .iter()
            .any(|&z| z != lo && s.element(z).get(i) == s.element(lo).get(i))
    };
    for i in 0..s.dim() {
        let (xi, yi) = (x.get(i), y.get(i));
        if xi + 1 == yi && !spare_step(v, u, i) {
            return Ok(false);
        }
        if yi + 1 == xi && !spare_step(u, v, i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The local realization criterion for spanning subgraphs of the canonical
/// realization: `edges` realizes `s` iff every vertex with a positive
/// coordinate has a neighbor one step closer to the matching landmark.
/// Agrees with full BFS verification.
pub fn descent_realizes(s: &VectorSet, edges: &[(usize, usize)]) -> Result<bool> {
    let scaffold = Scaffold::build(s);
    let mut present = vec![false; scaffold.edges.len()];
    for &(u, v) in edges {
        if u >= s.len() || v >= s.len() {
            return Err(Error::VertexOutOfRange {
                index: u.max(v),
                len: s.len(),
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match scaffold.edge_id(u, v) {
            Some(id) => present[id] = true,
            None => {
                return Err(Error::EdgeOutsideCanonical(
                    s.element(u).clone(),
                    s.element(v).clone(),
                ))
            }
        }
    }
    Ok(scaffold.all_covered(&present))
}

/// Starting from the canonical realization, removes removable edges until
/// none remains. The scan order is lexicographic for seed 0 and a seeded
/// shuffle otherwise; different seeds can land on different minimal
/// realizations, the same seed always lands on the same one.
pub fn minimize_greedy(s: &VectorSet, seed: u64) -> Result<Realization> {
    require_realizable(s)?;
    let scaffold = Scaffold::build(s);
    let mut order: Vec<usize> = (0..scaffold.edges.len()).collect();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    let mut present = vec![true; scaffold.edges.len()];
    let mut counts = scaffold.coverage_counts(&present);
    loop {
        let next = order
            .iter()
            .copied()
            .find(|&e| present[e] && scaffold.edge_removable(e, &counts));
        match next {
            Some(e) => {
                present[e] = false;
                for &d in &scaffold.covers[e] {
                    counts[d] -= 1;
                }
            }
            None => break,
        }
    }
    realization_from_edge_ids(s, &scaffold, (0..present.len()).filter(|&e| present[e]))
}

/// Every minimal realization of `s`, up to equivalence (distinct edge sets),
/// by exhaustive depth-first search over removal sequences with visited-state
/// deduplication. Results are ordered by edge count, then lexicographically.
pub fn enumerate_minimal(s: &VectorSet, limits: EnumerationLimits) -> Result<Vec<Realization>> {
    require_realizable(s)?;
    if s.len() > limits.max_vertices {
        return Err(Error::TooLarge {
            what: "vertex count",
            got: s.len(),
            limit: limits.max_vertices,
        });
    }
    let scaffold = Scaffold::build(s);
    let edge_count = scaffold.edges.len();
    if edge_count > limits.max_canonical_edges.min(64) {
        return Err(Error::TooLarge {
            what: "canonical edge count",
            got: edge_count,
            limit: limits.max_canonical_edges.min(64),
        });
    }

    let full_mask: u64 = if edge_count == 64 {
        u64::MAX
    } else {
        (1u64 << edge_count) - 1
    };
    let mut present = vec![true; edge_count];
    let mut counts = scaffold.coverage_counts(&present);
    let mut visited: HashSet<u64> = HashSet::new();
    let mut minimal_masks: Vec<u64> = Vec::new();

    fn dfs(
        scaffold: &Scaffold,
        mask: u64,
        present: &mut Vec<bool>,
        counts: &mut Vec<usize>,
        visited: &mut HashSet<u64>,
        out: &mut Vec<u64>,
    ) {
        if !visited.insert(mask) {
            return;
        }
        let removable: Vec<usize> = (0..present.len())
            .filter(|&e| present[e] && scaffold.edge_removable(e, counts))
            .collect();
        if removable.is_empty() {
            out.push(mask);
            return;
        }
        for e in removable {
            present[e] = false;
            for &d in &scaffold.covers[e] {
                counts[d] -= 1;
            }
            dfs(scaffold, mask & !(1 << e), present, counts, visited, out);
            present[e] = true;
            for &d in &scaffold.covers[e] {
                counts[d] += 1;
            }
        }
    }

    dfs(
        &scaffold,
        full_mask,
        &mut present,
        &mut counts,
        &mut visited,
        &mut minimal_masks,
    );

    minimal_masks.sort_by_key(|&m| (m.count_ones(), mask_edge_ids(m)));
    minimal_masks
        .into_iter()
        .map(|m| realization_from_edge_ids(s, &scaffold, mask_edge_ids(m)))
        .collect()
}

fn mask_edge_ids(mask: u64) -> Vec<usize> {
    (0..64).filter(|&e| mask & (1 << e) != 0).collect()
}

/// Edges that are the unique descent option for some (vertex, coordinate)
/// demand; they belong to every realization of `s`.
pub fn forced_edges(s: &VectorSet) -> Result<BTreeSet<(usize, usize)>> {
    require_realizable(s)?;
    let scaffold = Scaffold::build(s);
    let mut forced = BTreeSet::new();
    for cands in &scaffold.candidates {
        if let [only] = cands[..] {
            forced.insert(scaffold.edges[only]);
        }
    }
    Ok(forced)
}

/// All realizations of `s` are equivalent iff every canonical edge `xy` is,
/// for some coordinate, the unique step down from its upper endpoint among
/// that endpoint's Chebyshev neighbors — equivalently, no edge of the
/// canonical realization is removable.
pub fn is_uniquely_realizable(s: &VectorSet) -> Result<bool> {
    require_realizable(s)?;
    let scaffold = Scaffold::build(s);
    'edges: for (id, &(u, v)) in scaffold.edges.iter().enumerate() {
        for i in 0..s.dim() {
            let (xi, yi) = (s.element(u).get(i), s.element(v).get(i));
            let demanded = if xi + 1 == yi {
                Some((v, i))
            } else if yi + 1 == xi {
                Some((u, i))
            } else {
                None
            };
            if let Some(demand) = demanded {
                let d = scaffold
                    .demands
                    .binary_search(&demand)
                    .expect("positive coordinate has a demand");
                if scaffold.candidates[d] == [id] {
                    continue 'edges; // this edge is indispensable
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Exact minimum number of edges over all realizations of `s`, computed by
/// branch and bound over optional canonical edges (forced edges are fixed up
/// front). The witness is the lexicographically smallest optimal edge set,
/// independent of worker count.
pub fn minimum_edges(s: &VectorSet) -> Result<MinimumEdges> {
    minimum_edges_with_workers(s, 1)
}

/// `true` iff `s` has a realization with at most `k` edges.
pub fn realizable_within_budget(s: &VectorSet, k: usize) -> Result<bool> {
    Ok(minimum_edges(s)?.count <= k)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Free,
    In,
    Out,
}

#[derive(Clone)]
struct Node {
    state: Vec<EdgeState>,
}

enum Propagated {
    /// Some demand lost all candidates.
    Infeasible,
    /// Every demand covered by the In set; the node is a complete solution.
    Solved,
    /// Still work to do.
    Open,
}

struct SearchCtx<'a> {
    scaffold: &'a Scaffold,
    /// Smallest solution size found anywhere; prune strictly above it.
    bound: &'a AtomicUsize,
}

impl Node {
    fn in_ids(&self) -> Vec<usize> {
        (0..self.state.len())
            .filter(|&e| self.state[e] == EdgeState::In)
            .collect()
    }

    fn in_count(&self) -> usize {
        self.state.iter().filter(|&&st| st == EdgeState::In).count()
    }

    /// Repeatedly forces the unique remaining candidate of any uncovered
    /// demand until a fixpoint, infeasibility or a full cover is reached.
    fn propagate(&mut self, scaffold: &Scaffold) -> Propagated {
        loop {
            let mut changed = false;
            let mut all_covered = true;
            for cands in &scaffold.candidates {
                if cands.iter().any(|&e| self.state[e] == EdgeState::In) {
                    continue;
                }
                all_covered = false;
                let mut live = cands.iter().filter(|&&e| self.state[e] == EdgeState::Free);
                match (live.next(), live.next()) {
                    (None, _) => return Propagated::Infeasible,
                    (Some(&only), None) => {
                        self.state[only] = EdgeState::In;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if all_covered {
                return Propagated::Solved;
            }
            if !changed {
                return Propagated::Open;
            }
        }
    }

    /// Included edges plus one per group of uncovered demands with disjoint
    /// candidate sets: demands in different groups need different edges.
    fn lower_bound(&self, scaffold: &Scaffold) -> usize {
        let mut claimed = vec![false; self.state.len()];
        let mut groups = 0;
        for cands in &scaffold.candidates {
            if cands.iter().any(|&e| self.state[e] == EdgeState::In) {
                continue;
            }
            let live: Vec<usize> = cands
                .iter()
                .copied()
                .filter(|&e| self.state[e] == EdgeState::Free)
                .collect();
            if live.iter().any(|&e| claimed[e]) {
                continue;
            }
            groups += 1;
            for e in live {
                claimed[e] = true;
            }
        }
        self.in_count() + groups
    }

    /// The free edge covering the most uncovered demands, ties to the
    /// lexicographically smallest edge.
    fn branch_edge(&self, scaffold: &Scaffold) -> Option<usize> {
        let mut covered = vec![false; scaffold.demands.len()];
        for (e, &st) in self.state.iter().enumerate() {
            if st == EdgeState::In {
                for &d in &scaffold.covers[e] {
                    covered[d] = true;
                }
            }
        }
        let mut best: Option<(usize, usize)> = None; // (gain, edge)
        for e in 0..self.state.len() {
            if self.state[e] != EdgeState::Free {
                continue;
            }
            let gain = scaffold.covers[e].iter().filter(|&&d| !covered[d]).count();
            if gain == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((g, id)) => gain > g || (gain == g && e < id),
            };
            if better {
                best = Some((gain, e));
            }
        }
        best.map(|(_, e)| e)
    }
}

/// Best solution so far: fewest edges, then lexicographically smallest ids.
#[derive(Default)]
struct Best {
    solution: Option<Vec<usize>>,
}

impl Best {
    fn offer(&mut self, ids: Vec<usize>) {
        let better = match &self.solution {
            None => true,
            Some(cur) => ids.len() < cur.len() || (ids.len() == cur.len() && ids < *cur),
        };
        if better {
            self.solution = Some(ids);
        }
    }

    fn merge(&mut self, other: Best) {
        if let Some(ids) = other.solution {
            self.offer(ids);
        }
    }
}

fn dfs_search(ctx: &SearchCtx<'_>, mut node: Node, best: &mut Best) {
    match node.propagate(ctx.scaffold) {
        Propagated::Infeasible => return,
        Propagated::Solved => {
            let ids = node.in_ids();
            ctx.bound.fetch_min(ids.len(), Ordering::SeqCst);
            best.offer(ids);
            return;
        }
        Propagated::Open => {}
    }
    if node.lower_bound(ctx.scaffold) > ctx.bound.load(Ordering::SeqCst) {
        return;
    }
    let e = node
        .branch_edge(ctx.scaffold)
        .expect("open node has an uncovered demand with a live candidate");
    let mut with = node.clone();
    with.state[e] = EdgeState::In;
    dfs_search(ctx, with, best);
    node.state[e] = EdgeState::Out;
    dfs_search(ctx, node, best);
}

/// As [`minimum_edges`], fanning the top of the search tree out to `workers`
/// threads. The answer is bit-identical for every worker count: workers only
/// share the numeric bound, and all candidate solutions are merged with the
/// same (count, lexicographic) rule.
pub fn minimum_edges_with_workers(s: &VectorSet, workers: usize) -> Result<MinimumEdges> {
    require_realizable(s)?;
    let workers = workers.max(1);
    let scaffold = Scaffold::build(s);
    let bound = AtomicUsize::new(usize::MAX);
    let ctx = SearchCtx {
        scaffold: &scaffold,
        bound: &bound,
    };
    let root = Node {
        state: vec![EdgeState::Free; scaffold.edges.len()],
    };

    let mut best = Best::default();
    if workers == 1 {
        dfs_search(&ctx, root, &mut best);
    } else {
        // Peel the top of the tree into enough open subproblems, then let the
        // workers drain the queue.
        let mut open = vec![root];
        let target = workers * 8;
        while !open.is_empty() && open.len() < target {
            let mut node = open.remove(0);
            match node.propagate(&scaffold) {
                Propagated::Infeasible => continue,
                Propagated::Solved => {
                    let ids = node.in_ids();
                    bound.fetch_min(ids.len(), Ordering::SeqCst);
                    best.offer(ids);
                    continue;
                }
                Propagated::Open => {}
            }
            if node.lower_bound(&scaffold) > bound.load(Ordering::SeqCst) {
                continue;
            }
            match node.branch_edge(&scaffold) {
                Some(e) => {
                    let mut with = node.clone();
                    with.state[e] = EdgeState::In;
                    node.state[e] = EdgeState::Out;
                    open.push(with);
                    open.push(node);
                }
                None => unreachable!("open node always has a branch edge"),
            }
        }

        let queue = Mutex::new(open);
        let merged = Mutex::new(Best::default());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| {
                    let mut local = Best::default();
                    loop {
                        let node = queue.lock().unwrap().pop();
                        match node {
                            Some(node) => dfs_search(&ctx, node, &mut local),
                            None => break,
                        }
                    }
                    merged.lock().unwrap().merge(local);
                });
            }
        });
        best.merge(merged.into_inner().unwrap());
    }

    let ids = best
        .solution
        .expect("realizable sets admit at least the canonical cover");
    let count = ids.len();
    let witness = realization_from_edge_ids(s, &scaffold, ids)?;
    Ok(MinimumEdges { count, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizability::canonical_realization;
    use crate::verification::{are_equivalent, verify_realization};

    fn cv(coords: &[u32]) -> CoordVector {
        CoordVector::new(coords.to_vec()).unwrap()
    }

    fn set(vs: &[&[u32]]) -> VectorSet {
        VectorSet::new(vs.iter().map(|v| cv(v)).collect()).unwrap()
    }

    fn sample() -> VectorSet {
        set(&[&[0, 2], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[2, 2]])
    }

    fn cycle_set() -> VectorSet {
        set(&[
            &[0, 2],
            &[1, 1],
            &[1, 3],
            &[2, 0],
            &[2, 4],
            &[3, 1],
            &[3, 3],
            &[4, 2],
        ])
    }

    #[test]
    fn addable_examples() {
        let minimum = minimum_edges(&sample()).unwrap().witness;
        assert!(addable_edge(&minimum, &cv(&[1, 1]), &cv(&[2, 2])).is_err()); // present in the witness
        let greedy = minimize_greedy(&sample(), 0).unwrap();
        assert!(addable_edge(&greedy, &cv(&[1, 1]), &cv(&[2, 2])).unwrap());
        assert!(!addable_edge(&greedy, &cv(&[0, 2]), &cv(&[2, 0])).unwrap());
        let canonical = canonical_realization(&sample()).unwrap();
        assert!(matches!(
            addable_edge(&canonical, &cv(&[0, 2]), &cv(&[1, 1])),
            Err(Error::EdgePresent(_, _))
        ));
        // non-edges of the canonical realization are never addable
        assert!(!addable_edge(&canonical, &cv(&[0, 2]), &cv(&[2, 2])).unwrap());
    }

    #[test]
    fn removable_examples() {
        let canonical = canonical_realization(&sample()).unwrap();
        assert!(removable_edge(&canonical, &cv(&[2, 1]), &cv(&[2, 2])).unwrap());
        assert!(!removable_edge(&canonical, &cv(&[0, 2]), &cv(&[1, 1])).unwrap());
        assert!(matches!(
            removable_edge(&canonical, &cv(&[0, 2]), &cv(&[2, 2])),
            Err(Error::EdgeAbsent(_, _))
        ));
        // a pendant edge in a tree realization is never removable
        let path = set(&[&[0], &[1], &[2]]);
        let r = canonical_realization(&path).unwrap();
        assert!(!removable_edge(&r, &cv(&[0]), &cv(&[1])).unwrap());
    }

    #[test]
    fn descent_examples() {
        let s = sample();
        let canonical: Vec<(usize, usize)> = canonical_edges(&s);
        assert!(descent_realizes(&s, &canonical).unwrap());
        assert!(!descent_realizes(&s, &[]).unwrap());
        // the 6-edge minimum of the star set
        let minimum = minimum_edges(&s).unwrap().witness;
        let edges: Vec<(usize, usize)> = minimum.graph().edges().collect();
        assert!(descent_realizes(&s, &edges).unwrap());
        // an edge outside the canonical realization is rejected
        let outside = (
            s.index_of(&cv(&[0, 2])).unwrap(),
            s.index_of(&cv(&[2, 0])).unwrap(),
        );
        assert!(matches!(
            descent_realizes(&s, &[outside]),
            Err(Error::EdgeOutsideCanonical(_, _))
        ));
    }

    #[test]
    fn greedy_examples() {
        let r = minimize_greedy(&sample(), 0).unwrap();
        assert!([6, 7, 8].contains(&r.edge_count()));
        assert!(verify_realization(r.graph(), r.landmarks(), r.set())
            .unwrap()
            .is_ok());

        let cycle = minimize_greedy(&cycle_set(), 0).unwrap();
        let canonical = canonical_realization(&cycle_set()).unwrap();
        assert!(are_equivalent(&cycle, &canonical).unwrap());

        let singleton = minimize_greedy(&set(&[&[0]]), 0).unwrap();
        assert_eq!(singleton.edge_count(), 0);
    }

    #[test]
    fn greedy_output_is_minimal() {
        for seed in [0u64, 1, 2, 42] {
            let r = minimize_greedy(&sample(), seed).unwrap();
            for (x, y) in r.graph().edge_vectors() {
                assert!(!removable_edge(&r, x, y).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_star_minimal_realizations() {
        let all = enumerate_minimal(&sample(), EnumerationLimits::default()).unwrap();
        let sizes: Vec<usize> = all.iter().map(|r| r.edge_count()).collect();
        assert_eq!(sizes, vec![6, 7, 7, 8]);
        for r in &all {
            for (x, y) in r.graph().edge_vectors() {
                assert!(!removable_edge(r, x, y).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_cycle_and_edge() {
        let cycle = enumerate_minimal(&cycle_set(), EnumerationLimits::default()).unwrap();
        assert_eq!(cycle.len(), 1);
        let canonical = canonical_realization(&cycle_set()).unwrap();
        assert!(are_equivalent(&cycle[0], &canonical).unwrap());

        let pair = enumerate_minimal(&set(&[&[0], &[1]]), EnumerationLimits::default()).unwrap();
        assert_eq!(pair.len(), 1);
        assert_eq!(pair[0].edge_count(), 1);
    }

    #[test]
    fn enumerate_respects_limits() {
        let err = enumerate_minimal(
            &sample(),
            EnumerationLimits {
                max_vertices: 12,
                max_canonical_edges: 5,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }

    #[test]
    fn minimum_star_is_six() {
        let m = minimum_edges(&sample()).unwrap();
        assert_eq!(m.count, 6);
        assert!(
            verify_realization(m.witness.graph(), m.witness.landmarks(), m.witness.set())
                .unwrap()
                .is_ok()
        );
    }

    #[test]
    fn minimum_path_is_forced() {
        let m = minimum_edges(&set(&[&[0], &[1], &[2]])).unwrap();
        assert_eq!(m.count, 2);
    }

    #[test]
    fn budget_decision() {
        assert!(realizable_within_budget(&sample(), 6).unwrap());
        assert!(!realizable_within_budget(&sample(), 5).unwrap());
        let canonical = canonical_realization(&sample()).unwrap();
        assert!(realizable_within_budget(&sample(), canonical.edge_count()).unwrap());
    }

    #[test]
    fn uniqueness_examples() {
        assert!(is_uniquely_realizable(&cycle_set()).unwrap());
        assert!(!is_uniquely_realizable(&sample()).unwrap());
        assert!(is_uniquely_realizable(&set(&[&[0]])).unwrap());
    }

    #[test]
    fn unique_iff_nothing_removable_from_canonical() {
        for s in [sample(), cycle_set(), set(&[&[0], &[1], &[2]])] {
            let canonical = canonical_realization(&s).unwrap();
            let mut any_removable = false;
            for (x, y) in canonical.graph().edge_vectors() {
                any_removable |= removable_edge(&canonical, x, y).unwrap();
            }
            assert_eq!(is_uniquely_realizable(&s).unwrap(), !any_removable);
        }
    }

    #[test]
    fn forced_edge_examples() {
        let forced = forced_edges(&cycle_set()).unwrap();
        assert_eq!(forced.len(), 8); // unique realization: every edge forced

        let s = set(&[&[0], &[1]]);
        assert_eq!(forced_edges(&s).unwrap().len(), 1);

        // forced edges appear in every minimal realization
        let forced = forced_edges(&sample()).unwrap();
        for r in enumerate_minimal(&sample(), EnumerationLimits::default()).unwrap() {
            for e in &forced {
                assert!(r.graph().edge_set().contains(e));
            }
        }
    }

    #[test]
    fn workers_do_not_change_the_answer() {
        let baseline = minimum_edges_with_workers(&sample(), 1).unwrap();
        for workers in [2, 4] {
            let parallel = minimum_edges_with_workers(&sample(), workers).unwrap();
            assert_eq!(parallel.count, baseline.count);
            assert_eq!(
                parallel.witness.graph().edge_set(),
                baseline.witness.graph().edge_set()
            );
        }
    }

    #[test]
    fn minimum_rejects_non_realizable() {
        let s = set(&[&[0, 2], &[2, 0]]);
        assert!(matches!(minimum_edges(&s), Err(Error::NotRealizable(_))));
    }
}
