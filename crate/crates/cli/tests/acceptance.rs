//! Acceptance suite. Each test enforces one criterion end to end, at exact
//! tolerances, and prints one PASS line (run with `--nocapture` to see
//! them). Time-limited criteria assert their own wall-clock budget.

use std::collections::BTreeSet;
use std::time::Instant;

use metreal_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cv(coords: &[u32]) -> CoordVector {
    CoordVector::new(coords.to_vec()).unwrap()
}

fn set_from(vs: &[&[u32]]) -> VectorSet {
    VectorSet::new(vs.iter().map(|v| cv(v)).collect()).unwrap()
}

/// The six example sets exercised throughout the project, in their
/// published listing orders (the first two name the same set).
fn example_sets() -> Vec<(&'static str, VectorSet)> {
    vec![
        (
            "embedding example",
            set_from(&[&[0, 2], &[1, 1], &[2, 0], &[1, 2], &[2, 1], &[2, 2]]),
        ),
        (
            "multi-minimal",
            set_from(&[&[0, 2], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[2, 2]]),
        ),
        (
            "cycle",
            set_from(&[
                &[0, 2],
                &[1, 1],
                &[1, 3],
                &[2, 0],
                &[2, 4],
                &[3, 1],
                &[3, 3],
                &[4, 2],
            ]),
        ),
        (
            "non-isomorphic minima",
            set_from(&[
                &[0, 2],
                &[1, 1],
                &[1, 3],
                &[2, 0],
                &[2, 3],
                &[2, 4],
                &[3, 1],
                &[3, 2],
                &[3, 3],
                &[4, 2],
            ]),
        ),
        (
            "non-unique tree",
            set_from(&[&[0, 3], &[1, 2], &[2, 1], &[2, 3], &[3, 0], &[3, 2]]),
        ),
        (
            "unique tree",
            set_from(&[
                &[0, 4],
                &[1, 3],
                &[2, 2],
                &[2, 4],
                &[3, 1],
                &[4, 0],
                &[4, 2],
            ]),
        ),
    ]
}

fn multi_minimal_set() -> VectorSet {
    example_sets().remove(1).1
}

fn cycle_set() -> VectorSet {
    example_sets().remove(2).1
}

fn nonisomorphic_minima_set() -> VectorSet {
    example_sets().remove(3).1
}

/// A single-entry mutation paired with the realizability condition it
/// breaks by construction.
struct Mutation {
    set: VectorSet,
    breaks_condition: u8,
}

/// Deterministically builds single-entry mutations of `s`:
/// * condition 1: give a vector holding a zero a second zero;
/// * condition 2: zero an entry of a zero-free vector (two zeros in that
///   column), or lift a landmark's zero (no zero in that column);
/// * condition 3: raise a positive entry two above its column maximum, so
///   no descent step can exist.
fn mutations(s: &VectorSet, rng: &mut ChaCha8Rng, want: usize) -> Vec<Mutation> {
    let dim = s.dim();
    let column_max = |i: usize| s.iter().map(|v| v.get(i)).max().unwrap();
    let mut out = Vec::new();
    while out.len() < want {
        let kind = out.len() % 3;
        let victim = rng.random_range(0..s.len());
        let vector = s.element(victim);
        let coord = rng.random_range(0..dim);
        let mutated: Option<(Vec<u32>, u8)> = match kind {
            0 => {
                // second zero into a vector that already has one
                if vector.zero_positions().next().is_none() || vector.get(coord) == 0 {
                    None
                } else {
                    let mut c = vector.coords().to_vec();
                    c[coord] = 0;
                    Some((c, 1))
                }
            }
            1 => {
                if rng.random_bool(0.5) {
                    // duplicate zero in a column
                    if vector.zero_positions().next().is_some() {
                        None
                    } else {
                        let mut c = vector.coords().to_vec();
                        c[coord] = 0;
                        Some((c, 2))
                    }
                } else {
                    // remove the only zero of a column
                    if vector.get(coord) != 0 {
                        None
                    } else {
                        let mut c = vector.coords().to_vec();
                        c[coord] = column_max(coord) + 1;
                        Some((c, 2))
                    }
                }
            }
            _ => {
                // strand an entry two above everything in its column
                if vector.get(coord) == 0 {
                    None
                } else {
                    let mut c = vector.coords().to_vec();
                    c[coord] = column_max(coord) + 2;
                    Some((c, 3))
                }
            }
        };
        let Some((coords, breaks_condition)) = mutated else {
            continue;
        };
        let candidate = cv(&coords);
        if s.contains(&candidate) {
            continue;
        }
        let vectors: Vec<CoordVector> = s
            .iter()
            .enumerate()
            .map(|(idx, v)| {
                if idx == victim {
                    candidate.clone()
                } else {
                    v.clone()
                }
            })
            .collect();
        let Ok(set) = VectorSet::new(vectors) else {
            continue;
        };
        out.push(Mutation {
            set,
            breaks_condition,
        });
    }
    out
}

#[test]
fn criterion_1_realizability_and_mutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for (name, s) in example_sets() {
        let report = check_realizable(&s);
        assert!(report.realizable, "{name} must be realizable");
        for (idx, mutation) in mutations(&s, &mut rng, 10).into_iter().enumerate() {
            let report = check_realizable(&mutation.set);
            assert!(
                !report.realizable,
                "{name}: mutation {idx} should break realizability"
            );
            let conditions: BTreeSet<u8> = report.violations.iter().map(|v| v.condition).collect();
            assert!(
                conditions.contains(&mutation.breaks_condition),
                "{name}: mutation {idx} should report condition {} (got {conditions:?})",
                mutation.breaks_condition
            );
        }
    }
    println!("criterion 1 (realizability + mutation rejection): PASS");
}

#[test]
fn criterion_2_minimum_edges() {
    let started = Instant::now();
    let s = multi_minimal_set();

    assert_eq!(minimum_edges(&s).unwrap().count, 6);
    assert_eq!(canonical_realization(&s).unwrap().edge_count(), 10);

    let sizes: BTreeSet<usize> = enumerate_minimal(&s, EnumerationLimits::default())
        .unwrap()
        .iter()
        .map(Realization::edge_count)
        .collect();
    for expected in [6, 7, 8] {
        assert!(sizes.contains(&expected), "missing minimal size {expected}");
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:.2?}, budget 1s");
    println!("criterion 2 (minimum edges): PASS ({elapsed:.2?})");
}

#[test]
fn criterion_3_uniqueness() {
    let cycle = cycle_set();
    assert!(is_uniquely_realizable(&cycle).unwrap());
    assert!(!is_uniquely_realizable(&multi_minimal_set()).unwrap());

    let canonical = canonical_realization(&cycle).unwrap();
    assert_eq!(canonical.set().len(), 8);
    assert!(is_connected(canonical.graph()));
    assert!(canonical.graph().adjacency().iter().all(|n| n.len() == 2));
    println!("criterion 3 (uniqueness): PASS");
}

#[test]
fn criterion_4_nonequivalent_minima() {
    let started = Instant::now();
    let s = nonisomorphic_minima_set();

    let minimum = minimum_edges(&s).unwrap();
    let optima: Vec<Realization> = enumerate_minimal(&s, EnumerationLimits::default())
        .unwrap()
        .into_iter()
        .filter(|r| r.edge_count() == minimum.count)
        .collect();
    assert!(optima.len() >= 2, "need two optimal realizations");
    for i in 0..optima.len() {
        for j in (i + 1)..optima.len() {
            assert!(!are_equivalent(&optima[i], &optima[j]).unwrap());
        }
    }
    let mut found_nonisomorphic = false;
    for i in 0..optima.len() {
        for j in (i + 1)..optima.len() {
            if !are_isomorphic_small(optima[i].graph(), optima[j].graph()).unwrap() {
                found_nonisomorphic = true;
            }
        }
    }
    assert!(found_nonisomorphic, "optima should not all be isomorphic");

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:.2?}, budget 60s");
    println!("criterion 4 (non-equivalent minima): PASS ({elapsed:.2?})");
}

#[test]
fn criterion_5_trees() {
    let nonunique = example_sets().remove(4).1;
    let unique = example_sets().remove(5).1;

    for s in [&nonunique, &unique] {
        assert!(tree_realizable(s).unwrap().is_tree_realizable());
        let tree = build_tree_realization(s).unwrap();
        assert_eq!(tree.edge_count(), s.len() - 1);
        assert!(verify_realization(tree.graph(), tree.landmarks(), s)
            .unwrap()
            .is_ok());
    }

    assert!(!uniquely_realizable_by_tree(&nonunique).unwrap());
    assert!(uniquely_realizable_by_tree(&unique).unwrap());
    assert_eq!(
        split_strata(&unique).extendable,
        vec![cv(&[1, 3]), cv(&[3, 1])]
    );
    println!("criterion 5 (trees): PASS");
}

/// Random realizable set: project a random connected graph through a random
/// resolving list.
fn random_realizable(rng: &mut ChaCha8Rng, dim: usize, max_vertices: usize) -> VectorSet {
    loop {
        if dim == 1 {
            let len = rng.random_range(2..=max_vertices.max(2)) as u32;
            return VectorSet::new((0..len).map(|i| cv(&[i])).collect()).unwrap();
        }
        let n = rng.random_range((dim + 1).max(4)..=max_vertices);
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for v in 1..n {
            let u = rng.random_range(0..v);
            edges.insert((u, v));
        }
        for _ in 0..rng.random_range(0..=n) {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let g = SimpleGraph::new(n, edges).unwrap();
        let mut w: Vec<usize> = Vec::new();
        while w.len() < dim {
            let v = rng.random_range(0..n);
            if !w.contains(&v) {
                w.push(v);
            }
        }
        if let Ok(r) = project_to_canonical(&g, &w) {
            return r.set().clone();
        }
    }
}

#[test]
fn criterion_6_edit_law_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut disagreements = 0u64;
    let mut exhaustive_sets = 0;

    for round in 0..200 {
        let dim = 1 + (round % 3);
        let s = random_realizable(&mut rng, dim, 10);
        assert!(s.len() <= 10 && s.dim() <= 3);
        let landmarks = s.landmark_indices().unwrap();

        for seed in [0u64, round as u64 + 1] {
            let r = minimize_greedy(&s, seed).unwrap();
            for (u, v) in r.graph().edges() {
                let (x, y) = (s.element(u), s.element(v));
                let claimed = removable_edge(&r, x, y).unwrap();
                let actual =
                    verify_realization(&r.graph().without_edge(u, v).unwrap(), &landmarks, &s)
                        .unwrap()
                        .is_ok();
                if claimed != actual {
                    disagreements += 1;
                }
            }
            for u in 0..s.len() {
                for v in (u + 1)..s.len() {
                    if r.graph().has_edge(u, v) {
                        continue;
                    }
                    let (x, y) = (s.element(u), s.element(v));
                    let claimed = addable_edge(&r, x, y).unwrap();
                    let actual =
                        verify_realization(&r.graph().with_edge(u, v).unwrap(), &landmarks, &s)
                            .unwrap()
                            .is_ok();
                    if claimed != actual {
                        disagreements += 1;
                    }
                }
            }
        }

        let canonical = canonical_edges(&s);
        if canonical.len() <= 16 {
            exhaustive_sets += 1;
            for mask in 0u32..(1 << canonical.len()) {
                let edges: Vec<(usize, usize)> = canonical
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let by_descent = descent_realizes(&s, &edges).unwrap();
                let g = LabeledGraph::new(s.clone(), edges).unwrap();
                let by_bfs = verify_realization(&g, &landmarks, &s).unwrap().is_ok();
                if by_descent != by_bfs {
                    disagreements += 1;
                }
            }
        }
    }

    assert_eq!(disagreements, 0, "edit laws must match BFS exactly");
    assert!(exhaustive_sets > 0, "sample must include exhaustive cases");
    let elapsed = started.elapsed();
    println!(
        "criterion 6 (edit-law oracle equivalence, {exhaustive_sets} exhaustive sets): PASS ({elapsed:.2?})"
    );
}

fn random_formula(rng: &mut ChaCha8Rng) -> CnfFormula {
    let num_vars = rng.random_range(1..=3u32);
    let num_clauses = rng.random_range(1..=4usize);
    let clauses = (0..num_clauses)
        .map(|_| {
            (0..rng.random_range(1..=3usize))
                .map(|_| {
                    let var = rng.random_range(1..=num_vars) as i32;
                    if rng.random_bool(0.5) {
                        var
                    } else {
                        -var
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).unwrap()
}

#[test]
fn criterion_7_reduction_round_trip() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut reduced = 0;

    while reduced < 20 {
        let f = random_formula(&mut rng);
        let satisfiable = brute_force_sat(&f).unwrap().is_some();
        let nf = match normalize_formula(&f) {
            NormalizeOutcome::TriviallySat(_) => {
                assert!(satisfiable);
                continue;
            }
            NormalizeOutcome::TriviallyUnsat => {
                assert!(!satisfiable);
                continue;
            }
            NormalizeOutcome::Reduced(nf) => nf,
        };
        reduced += 1;

        let n = nf.formula().num_vars() as usize;
        let m = nf.formula().num_clauses();
        let inst = reduce(&nf).unwrap();
        assert_eq!(inst.set().len(), 3 * n + m + 2);
        assert_eq!(inst.set().dim(), n + m + 1);
        assert_eq!(inst.bound_k(), 5 * n + nf.formula().literal_total());

        let g0 = witness_graph(&inst);
        assert_eq!(g0.edge_count(), inst.bound_k() + n);
        assert!(verify_realization(g0.graph(), g0.landmarks(), inst.set())
            .unwrap()
            .is_ok());

        let within_budget = realizable_within_budget(inst.set(), inst.bound_k()).unwrap();
        assert_eq!(satisfiable, within_budget, "equivalence failed on {f:?}");

        if satisfiable {
            let assignment = brute_force_sat(nf.formula()).unwrap().unwrap();
            let graph = satisfying_graph(&inst, &assignment).unwrap();
            assert_eq!(graph.edge_count(), inst.bound_k());
            let decoded = decode_assignment(&inst, &graph).unwrap();
            assert_eq!(decoded.normalized, assignment);
            assert!(f.evaluate(&decoded.original));
        }
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 180, "took {elapsed:.2?}, budget 3min");
    println!("criterion 7 (reduction round trip, {reduced} formulas): PASS ({elapsed:.2?})");
}

#[test]
fn criterion_8_determinism() {
    let render =
        |r: &Realization| metreal_cli::formats::emit_graph(r.set(), r.graph().edges(), &[]);

    for s in [multi_minimal_set(), nonisomorphic_minima_set(), cycle_set()] {
        let baseline = minimum_edges(&s).unwrap();
        let baseline_bytes = render(&baseline.witness);
        for _ in 0..3 {
            let again = minimum_edges(&s).unwrap();
            assert_eq!(again.count, baseline.count);
            assert_eq!(render(&again.witness), baseline_bytes);
        }
        for workers in [2, 4, 8] {
            let parallel = minimum_edges_with_workers(&s, workers).unwrap();
            assert_eq!(parallel.count, baseline.count);
            assert_eq!(render(&parallel.witness), baseline_bytes);
        }

        for seed in [0u64, 1, 17] {
            let first = render(&minimize_greedy(&s, seed).unwrap());
            let second = render(&minimize_greedy(&s, seed).unwrap());
            assert_eq!(first, second);
        }
    }
    println!("criterion 8 (determinism): PASS");
}
