//! From 3SAT formulas to edge-budget realization instances and back.
//!
//! Given a normalized formula with `n` variables and `m` clauses, the
//! reduction emits a realizable set of `3n + m + 2` vectors in dimension
//! `n + m + 1` together with the budget `k = 5n + sum of clause sizes`:
//! one vertex per literal, one anchor vertex per variable and per clause, a
//! hub adjacent to every literal, and a selector vertex whose neighborhood
//! in any within-budget realization reads off a satisfying assignment. The
//! set has a realization with at most `k` edges iff the formula is
//! satisfiable, which is what makes the budgeted realization problem
//! NP-complete.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realization::Realization;
use crate::set::VectorSet;
use crate::vector::CoordVector;

/// A CNF formula with at most three literals per clause. Literals are signed
/// 1-based variable indices, DIMACS style; clauses may still contain
/// repeated literals or a variable together with its negation until
/// [`normalize_formula`] cleans them up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::EmptyClause { index: j + 1 });
            }
            if clause.len() > 3 {
                return Err(Error::ClauseTooLarge {
                    index: j + 1,
                    size: clause.len(),
                });
            }
            for &l in clause {
                if l == 0 || l.unsigned_abs() > num_vars {
                    return Err(Error::LiteralOutOfRange {
                        literal: l as i64,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Total literal count over all clauses.
    pub fn literal_total(&self) -> usize {
        self.clauses.iter().map(|c| c.len()).sum()
    }

    /// True when every clause holds at least one literal made true by
    /// `assignment` (indexed by variable minus one).
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&l| assignment[(l.unsigned_abs() - 1) as usize] == (l > 0))
        })
    }
}

/// Parses standard DIMACS CNF: `c` comment lines, one `p cnf <vars>
/// <clauses>` header, then zero-terminated literal lists. Clauses beyond
/// three literals are rejected; this is a 3SAT tool.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let line_number = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::Dimacs {
                    line: line_number,
                    msg: "duplicate header".into(),
                });
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::Dimacs {
                    line: line_number,
                    msg: "header must be 'p cnf <vars> <clauses>'".into(),
                });
            }
            let vars = fields[2].parse::<u32>().map_err(|_| Error::Dimacs {
                line: line_number,
                msg: format!("bad variable count '{}'", fields[2]),
            })?;
            let count = fields[3].parse::<usize>().map_err(|_| Error::Dimacs {
                line: line_number,
                msg: format!("bad clause count '{}'", fields[3]),
            })?;
            header = Some((vars, count));
            continue;
        }
        if header.is_none() {
            return Err(Error::Dimacs {
                line: line_number,
                msg: "clause before header".into(),
            });
        }
        for token in trimmed.split_whitespace() {
            let lit = token.parse::<i32>().map_err(|_| Error::Dimacs {
                line: line_number,
                msg: format!("bad literal '{token}'"),
            })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }

    let (num_vars, declared) = header.ok_or(Error::Dimacs {
        line: 0,
        msg: "missing 'p cnf' header".into(),
    })?;
    if !current.is_empty() {
        return Err(Error::Dimacs {
            line: 0,
            msg: "last clause is not zero-terminated".into(),
        });
    }
    if clauses.len() != declared {
        return Err(Error::Dimacs {
            line: 0,
            msg: format!(
                "header declares {declared} clauses, found {}",
                clauses.len()
            ),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

/// A formula brought into the shape the reduction needs: clauses are
/// duplicate-free and non-tautological, no unit clauses remain (they were
/// propagated into `fixed`), variables with no remaining occurrence are set
/// aside as `free`, and the survivors are renumbered compactly so that every
/// variable of [`NormalizedFormula::formula`] co-occurs with another
/// variable in some clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedFormula {
    formula: CnfFormula,
    /// compact variable (1-based, as index-1) -> original variable
    back_map: Vec<u32>,
    /// original variable -> value forced by unit propagation
    fixed: BTreeMap<u32, bool>,
    /// original variables with no occurrence left; satisfied by `true`
    free: Vec<u32>,
    original_vars: u32,
}

impl NormalizedFormula {
    pub fn formula(&self) -> &CnfFormula {
        &self.formula
    }

    pub fn original_vars(&self) -> u32 {
        self.original_vars
    }

    /// Original name of a compact variable (both 1-based).
    pub fn original_var(&self, compact: u32) -> u32 {
        self.back_map[(compact - 1) as usize]
    }

    pub fn fixed(&self) -> &BTreeMap<u32, bool> {
        &self.fixed
    }

    pub fn free(&self) -> &[u32] {
        &self.free
    }

    /// Extends an assignment of the compact variables to the original ones:
    /// propagated variables keep their forced value, free variables default
    /// to true.
    pub fn lift_assignment(&self, compact: &[bool]) -> Vec<bool> {
        let mut full = vec![true; self.original_vars as usize];
        for (&var, &value) in &self.fixed {
            full[(var - 1) as usize] = value;
        }
        for (i, &value) in compact.iter().enumerate() {
            full[(self.back_map[i] - 1) as usize] = value;
        }
        full
    }
}

/// Result of [`normalize_formula`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeOutcome {
    /// Normalization left a genuine subproblem for the reduction.
    Reduced(NormalizedFormula),
    /// Propagation satisfied everything; here is a full assignment.
    TriviallySat(Vec<bool>),
    /// Propagation derived an empty clause.
    TriviallyUnsat,
}

/// Removes tautological clauses and duplicate literals, unit-propagates to a
/// fixpoint, and drops variables left without occurrences. Returns an early
/// verdict when propagation empties or falsifies the formula.
pub fn normalize_formula(f: &CnfFormula) -> NormalizeOutcome {
    // clause sets ordered by (variable, polarity)
    let clause_key = |l: &i32| (l.unsigned_abs(), *l < 0);
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    'clauses: for raw in &f.clauses {
        let mut lits: Vec<i32> = raw.clone();
        lits.sort_by_key(clause_key);
        lits.dedup();
        for pair in lits.windows(2) {
            if pair[0] == -pair[1] {
                continue 'clauses; // tautology
            }
        }
        clauses.push(lits);
    }

    let mut fixed: BTreeMap<u32, bool> = BTreeMap::new();
    loop {
        // simplify under the forced values
        let mut next: Vec<Vec<i32>> = Vec::new();
        for clause in &clauses {
            let mut remaining = Vec::new();
            let mut satisfied = false;
            for &l in clause {
                match fixed.get(&l.unsigned_abs()) {
                    Some(&value) if value == (l > 0) => {
                        satisfied = true;
                        break;
                    }
                    Some(_) => {}
                    None => remaining.push(l),
                }
            }
            if satisfied {
                continue;
            }
            if remaining.is_empty() {
                return NormalizeOutcome::TriviallyUnsat;
            }
            next.push(remaining);
        }
        clauses = next;

        match clauses.iter().find(|c| c.len() == 1) {
            Some(unit) => {
                let l = unit[0];
                fixed.insert(l.unsigned_abs(), l > 0);
            }
            None => break,
        }
    }

    if clauses.is_empty() {
        let mut assignment = vec![true; f.num_vars as usize];
        for (&var, &value) in &fixed {
            assignment[(var - 1) as usize] = value;
        }
        return NormalizeOutcome::TriviallySat(assignment);
    }

    let occurring: BTreeSet<u32> = clauses.iter().flatten().map(|l| l.unsigned_abs()).collect();
    let back_map: Vec<u32> = occurring.iter().copied().collect();
    let compact_of: BTreeMap<u32, i32> = back_map
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, (i + 1) as i32))
        .collect();
    let free: Vec<u32> = (1..=f.num_vars)
        .filter(|v| !fixed.contains_key(v) && !occurring.contains(v))
        .collect();

    let compact_clauses: Vec<Vec<i32>> = clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|&l| compact_of[&l.unsigned_abs()] * l.signum())
                .collect()
        })
        .collect();
    let formula = CnfFormula::new(back_map.len() as u32, compact_clauses)
        .expect("normalization preserves clause shape");

    NormalizeOutcome::Reduced(NormalizedFormula {
        formula,
        back_map,
        fixed,
        free,
        original_vars: f.num_vars,
    })
}

/// What a vertex of a reduction instance stands for. Variables and clauses
/// are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    /// The literal `x_v`.
    PositiveLiteral(u32),
    /// The literal `-x_v`.
    NegativeLiteral(u32),
    /// Landmark pinning down variable `v`: at distance 1 from exactly the
    /// two literals of `v`.
    VariableAnchor(u32),
    /// Landmark pinning down clause `j`: at distance 1 from exactly the
    /// literals of the clause.
    ClauseAnchor(u32),
    /// Landmark at distance 1 from every literal.
    Hub,
    /// The one non-landmark special vertex; its neighbors in a
    /// within-budget realization are the chosen true literals.
    Selector,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::PositiveLiteral(v) => write!(f, "lit {v}"),
            Role::NegativeLiteral(v) => write!(f, "lit -{v}"),
            Role::VariableAnchor(v) => write!(f, "var-anchor {v}"),
            Role::ClauseAnchor(j) => write!(f, "clause-anchor {j}"),
            Role::Hub => write!(f, "hub"),
            Role::Selector => write!(f, "selector"),
        }
    }
}

/// The emitted edge-budget instance: the vector set, the budget, and the
/// role of every vertex. Keeps the normalization record so decoded
/// assignments can be mapped back to the original variables.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    set: VectorSet,
    bound_k: usize,
    /// vertex index (lexicographic position in `set`) -> role
    roles: Vec<Role>,
    normalized: NormalizedFormula,
}

impl ReductionInstance {
    pub fn set(&self) -> &VectorSet {
        &self.set
    }

    pub fn bound_k(&self) -> usize {
        self.bound_k
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role_of(&self, vertex: usize) -> Role {
        self.roles[vertex]
    }

    pub fn vertex_of(&self, role: Role) -> usize {
        self.roles
            .iter()
            .position(|&r| r == role)
            .expect("every instance role maps to a vertex")
    }

    pub fn normalized(&self) -> &NormalizedFormula {
        &self.normalized
    }

    /// Number of variables in the reduced formula.
    pub fn num_vars(&self) -> u32 {
        self.normalized.formula().num_vars()
    }

    /// Number of clauses in the reduced formula.
    pub fn num_clauses(&self) -> usize {
        self.normalized.formula().num_clauses()
    }
}

fn literal_vertex_role(l: i32) -> Role {
    if l > 0 {
        Role::PositiveLiteral(l as u32)
    } else {
        Role::NegativeLiteral((-l) as u32)
    }
}

/// Builds the vector for one role. Coordinates are ordered: one per
/// variable anchor, one per clause anchor, then the hub.
fn role_vector(role: Role, n: usize, clauses: &[Vec<i32>]) -> CoordVector {
    let m = clauses.len();
    let occurs = |v: usize, j: usize| clauses[j].iter().any(|l| l.unsigned_abs() as usize == v);
    let lit_in = |l: i32, j: usize| clauses[j].contains(&l);
    let intersects = |j: usize, p: usize| clauses[j].iter().any(|l| clauses[p].contains(l));

    let mut coords = Vec::with_capacity(n + m + 1);
    match role {
        Role::PositiveLiteral(v) | Role::NegativeLiteral(v) => {
            let lit = if matches!(role, Role::PositiveLiteral(_)) {
                v as i32
            } else {
                -(v as i32)
            };
            for p in 1..=n {
                coords.push(if p == v as usize { 1 } else { 3 });
            }
            for j in 0..m {
                coords.push(if lit_in(lit, j) { 1 } else { 3 });
            }
            coords.push(1);
        }
        Role::VariableAnchor(v) => {
            for p in 1..=n {
                coords.push(if p == v as usize { 0 } else { 4 });
            }
            for j in 0..m {
                coords.push(if occurs(v as usize, j) { 2 } else { 4 });
            }
            coords.push(2);
        }
        Role::ClauseAnchor(cj) => {
            let j = (cj - 1) as usize;
            for p in 1..=n {
                coords.push(if occurs(p, j) { 2 } else { 4 });
            }
            for q in 0..m {
                coords.push(if q == j {
                    0
                } else if intersects(j, q) {
                    2
                } else {
                    4
                });
            }
            coords.push(2);
        }
        Role::Hub => {
            coords.extend(std::iter::repeat_n(2, n + m));
            coords.push(0);
        }
        Role::Selector => {
            coords.extend(std::iter::repeat_n(2, n + m + 1));
        }
    }
    CoordVector::new(coords).expect("dimension is at least 1")
}

/// Emits the edge-budget instance for a normalized formula. The result has
/// `3n + m + 2` vectors of dimension `n + m + 1`, budget
/// `k = 5n + sum of clause sizes`, and always passes `check_realizable`.
pub fn reduce(nf: &NormalizedFormula) -> Result<ReductionInstance> {
    let formula = nf.formula();
    let n = formula.num_vars() as usize;
    let m = formula.num_clauses();
    if n == 0 || m == 0 {
        return Err(Error::TrivialFormula);
    }
    let clauses = formula.clauses();

    let mut all_roles = Vec::with_capacity(3 * n + m + 2);
    for v in 1..=n as u32 {
        all_roles.push(Role::PositiveLiteral(v));
        all_roles.push(Role::NegativeLiteral(v));
        all_roles.push(Role::VariableAnchor(v));
    }
    for j in 1..=m as u32 {
        all_roles.push(Role::ClauseAnchor(j));
    }
    all_roles.push(Role::Hub);
    all_roles.push(Role::Selector);

    let labeled: Vec<(CoordVector, Role)> = all_roles
        .into_iter()
        .map(|role| (role_vector(role, n, clauses), role))
        .collect();
    let set = VectorSet::new(labeled.iter().map(|(v, _)| v.clone()).collect())?;
    let mut roles = vec![Role::Selector; set.len()];
    for (vector, role) in &labeled {
        roles[set.index_of(vector).expect("vector was inserted")] = *role;
    }

    let bound_k = 5 * n + formula.literal_total();
    Ok(ReductionInstance {
        set,
        bound_k,
        roles,
        normalized: nf.clone(),
    })
}

fn instance_base_edges(inst: &ReductionInstance) -> Vec<(usize, usize)> {
    let formula = inst.normalized.formula();
    let n = formula.num_vars();
    let mut edges = Vec::new();
    let hub = inst.vertex_of(Role::Hub);
    for v in 1..=n {
        let pos = inst.vertex_of(Role::PositiveLiteral(v));
        let neg = inst.vertex_of(Role::NegativeLiteral(v));
        let anchor = inst.vertex_of(Role::VariableAnchor(v));
        edges.push((anchor, pos));
        edges.push((anchor, neg));
        edges.push((hub, pos));
        edges.push((hub, neg));
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        let anchor = inst.vertex_of(Role::ClauseAnchor(j as u32 + 1));
        for &l in clause {
            edges.push((anchor, inst.vertex_of(literal_vertex_role(l))));
        }
    }
    edges
}

/// The canonical witness that the emitted set is realizable: the bipartite
/// graph joining anchors, hub and selector to their literals, with
/// `k + n` edges (so it is itself over budget).
pub fn witness_graph(inst: &ReductionInstance) -> Realization {
    let mut edges = instance_base_edges(inst);
    let selector = inst.vertex_of(Role::Selector);
    for v in 1..=inst.num_vars() {
        edges.push((selector, inst.vertex_of(Role::PositiveLiteral(v))));
        edges.push((selector, inst.vertex_of(Role::NegativeLiteral(v))));
    }
    let graph = LabeledGraph::new(inst.set.clone(), edges).expect("instance edges are valid");
    Realization::with_implicit_landmarks(graph).expect("the witness graph realizes the emitted set")
}

/// The realization with exactly `k` edges obtained from a satisfying
/// assignment of the reduced formula: the selector is joined to the one true
/// literal of each variable.
pub fn satisfying_graph(inst: &ReductionInstance, assignment: &[bool]) -> Result<Realization> {
    let formula = inst.normalized.formula();
    if assignment.len() != formula.num_vars() as usize {
        return Err(Error::DimensionMismatch {
            expected: formula.num_vars() as usize,
            got: assignment.len(),
        });
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        let satisfied = clause
            .iter()
            .any(|&l| assignment[(l.unsigned_abs() - 1) as usize] == (l > 0));
        if !satisfied {
            return Err(Error::UnsatisfiedClause(j + 1));
        }
    }

    let mut edges = instance_base_edges(inst);
    let selector = inst.vertex_of(Role::Selector);
    for v in 1..=formula.num_vars() {
        let role = if assignment[(v - 1) as usize] {
            Role::PositiveLiteral(v)
        } else {
            Role::NegativeLiteral(v)
        };
        edges.push((selector, inst.vertex_of(role)));
    }
    let graph = LabeledGraph::new(inst.set.clone(), edges)?;
    debug_assert_eq!(graph.edge_count(), inst.bound_k);
    Realization::with_implicit_landmarks(graph)
}

/// An assignment decoded from a within-budget realization, both over the
/// reduced formula's variables and lifted back to the original ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedAssignment {
    /// One value per variable of the reduced formula.
    pub normalized: Vec<bool>,
    /// One value per variable of the original formula (propagated variables
    /// keep their forced value, free variables read true).
    pub original: Vec<bool>,
}

/// Reads the satisfying assignment off a verified realization with at most
/// `k` edges: each variable's value is the polarity of its literal adjacent
/// to the selector.
pub fn decode_assignment(inst: &ReductionInstance, r: &Realization) -> Result<DecodedAssignment> {
    if r.set() != &inst.set {
        return Err(Error::SetMismatch);
    }
    if r.edge_count() > inst.bound_k {
        return Err(Error::OverBudget {
            edges: r.edge_count(),
            bound: inst.bound_k,
        });
    }

    let selector = inst.vertex_of(Role::Selector);
    let adjacency = r.graph().adjacency();
    let n = inst.num_vars() as usize;
    let mut normalized: Vec<Option<bool>> = vec![None; n];
    for &u in &adjacency[selector] {
        let value = match inst.role_of(u) {
            Role::PositiveLiteral(v) => (v, true),
            Role::NegativeLiteral(v) => (v, false),
            other => unreachable!("selector neighbor has role {other}"),
        };
        let slot = &mut normalized[(value.0 - 1) as usize];
        assert!(
            slot.is_none(),
            "selector touches both literals of a variable"
        );
        *slot = Some(value.1);
    }
    let normalized: Vec<bool> = normalized
        .into_iter()
        .collect::<Option<_>>()
        .expect("a within-budget realization selects one literal per variable");

    debug_assert!(inst.normalized.formula().evaluate(&normalized));
    let original = inst.normalized.lift_assignment(&normalized);
    Ok(DecodedAssignment {
        normalized,
        original,
    })
}

/// Cap on variables for [`brute_force_sat`].
pub const BRUTE_FORCE_VAR_LIMIT: u32 = 20;

/// Exhaustive truth-table search, the independent oracle for round-trip
/// tests. Returns the first satisfying assignment in counting order.
pub fn brute_force_sat(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    if f.num_vars() > BRUTE_FORCE_VAR_LIMIT {
        return Err(Error::TooLarge {
            what: "variable count",
            got: f.num_vars() as usize,
            limit: BRUTE_FORCE_VAR_LIMIT as usize,
        });
    }
    let n = f.num_vars() as usize;
    for bits in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| bits & (1 << i) != 0).collect();
        if f.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
