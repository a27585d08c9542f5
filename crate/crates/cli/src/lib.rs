//! Command-line driver. Every subcommand reads the text formats from
//! [`formats`], calls into `metreal-core`, and prints deterministic output:
//! exit 0 for an affirmative answer or plain success, 1 for a negative
//! answer, 2 for any input problem.

pub mod formats;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use metreal_core::{self as core, NormalizeOutcome, Realization, VectorSet, VerifyOutcome};

use formats::{emit_dot, emit_graph, emit_set, parse_graph, parse_set, vector_csv};

#[derive(Parser)]
#[command(
    name = "metreal",
    about = "Decide and construct graph realizations of integer distance-vector sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the realizability conditions of a vector set
    Check { set: PathBuf },
    /// Print the canonical realization as a graph file
    Canonical { set: PathBuf },
    /// Remove removable edges greedily and print a minimal realization
    Minimize {
        set: PathBuf,
        /// Scan-order seed; 0 scans lexicographically
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List every minimal realization up to equivalence
    #[command(name = "enumerate-minimal")]
    EnumerateMinimal {
        set: PathBuf,
        #[arg(long = "max-vertices", default_value_t = 12)]
        max_vertices: usize,
    },
    /// Exact minimum edge count and witness; with --k, decide the budget
    Minimum {
        set: PathBuf,
        /// Decide "is there a realization with at most K edges" instead
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decide whether all realizations of the set are equivalent
    Unique { set: PathBuf },
    /// Decide tree realizability; with --build, print the tree realization
    Tree {
        set: PathBuf,
        #[arg(long)]
        build: bool,
    },
    /// Reduce a 3SAT formula (DIMACS) to an edge-budget instance
    #[command(name = "reduce-sat")]
    ReduceSat {
        cnf: PathBuf,
        /// Write the instance here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Read a satisfying assignment off a within-budget realization
    #[command(name = "decode-sat")]
    DecodeSat { cnf: PathBuf, graph: PathBuf },
    /// Check that a graph file realizes a vector set
    Verify { set: PathBuf, graph: PathBuf },
    /// Export a graph file as Graphviz DOT
    Dot { graph: PathBuf },
}

/// Runs the tool on `args` (without the program name), writing to the given
/// streams, and returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let argv = std::iter::once("metreal".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("bad arguments");
            let _ = writeln!(stderr, "{first}");
            return 2;
        }
    };

    let result = match cli.command {
        Cmd::Check { set } => cmd_check(&set, stdout),
        Cmd::Canonical { set } => cmd_canonical(&set, stdout),
        Cmd::Minimize { set, seed } => cmd_minimize(&set, seed, stdout),
        Cmd::EnumerateMinimal { set, max_vertices } => cmd_enumerate(&set, max_vertices, stdout),
        Cmd::Minimum { set, k } => cmd_minimum(&set, k, stdout),
        Cmd::Unique { set } => cmd_unique(&set, stdout),
        Cmd::Tree { set, build } => cmd_tree(&set, build, stdout),
        Cmd::ReduceSat { cnf, output } => cmd_reduce_sat(&cnf, output.as_deref(), stdout),
        Cmd::DecodeSat { cnf, graph } => cmd_decode_sat(&cnf, &graph, stdout),
        Cmd::Verify { set, graph } => cmd_verify(&set, &graph, stdout),
        Cmd::Dot { graph } => cmd_dot(&graph, stdout),
    };

    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_set(path: &Path) -> Result<VectorSet, String> {
    parse_set(&read_file(path)?).map_err(|msg| format!("{}: {msg}", path.display()))
}

fn load_graph(path: &Path) -> Result<(VectorSet, Vec<(usize, usize)>), String> {
    parse_graph(&read_file(path)?).map_err(|msg| format!("{}: {msg}", path.display()))
}

fn out_line(stdout: &mut dyn Write, line: &str) {
    let _ = writeln!(stdout, "{line}");
}

fn cmd_check(path: &Path, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    let report = core::check_realizable(&set);
    if report.realizable {
        out_line(stdout, "realizable");
        Ok(0)
    } else {
        out_line(stdout, "not realizable");
        for v in &report.violations {
            out_line(stdout, &v.to_string());
        }
        Ok(1)
    }
}

fn print_realization_file(r: &Realization, stdout: &mut dyn Write) {
    let text = emit_graph(r.set(), r.graph().edges(), &[]);
    let _ = write!(stdout, "{text}");
}

fn cmd_canonical(path: &Path, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    let r = core::canonical_realization(&set).map_err(|e| e.to_string())?;
    print_realization_file(&r, stdout);
    Ok(0)
}

fn cmd_minimize(path: &Path, seed: u64, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    let r = core::minimize_greedy(&set, seed).map_err(|e| e.to_string())?;
    print_realization_file(&r, stdout);
    Ok(0)
}

fn cmd_enumerate(path: &Path, max_vertices: usize, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    let limits = core::EnumerationLimits {
        max_vertices,
        ..Default::default()
    };
    let all = core::enumerate_minimal(&set, limits).map_err(|e| e.to_string())?;
    out_line(stdout, &format!("count {}", all.len()));
    for (i, r) in all.iter().enumerate() {
        out_line(stdout, "");
        out_line(stdout, &format!("realization {i} edges {}", r.edge_count()));
        for (x, y) in r.graph().edge_vectors() {
            out_line(stdout, &format!("{} -- {}", vector_csv(x), vector_csv(y)));
        }
    }
    Ok(0)
}

fn cmd_minimum(path: &Path, k: Option<usize>, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    let minimum = core::minimum_edges(&set).map_err(|e| e.to_string())?;
    match k {
        Some(k) => {
            if minimum.count <= k {
                out_line(stdout, "yes");
                Ok(0)
            } else {
                out_line(stdout, "no");
                Ok(1)
            }
        }
        None => {
            out_line(stdout, &minimum.count.to_string());
            for (x, y) in minimum.witness.graph().edge_vectors() {
                out_line(stdout, &format!("{} -- {}", vector_csv(x), vector_csv(y)));
            }
            Ok(0)
        }
    }
}

fn cmd_unique(path: &Path, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    if core::is_uniquely_realizable(&set).map_err(|e| e.to_string())? {
        out_line(stdout, "unique");
        Ok(0)
    } else {
        out_line(stdout, "not unique");
        Ok(1)
    }
}

fn cmd_tree(path: &Path, build: bool, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(path)?;
    match core::tree_realizable(&set).map_err(|e| e.to_string())? {
        core::TreeCheck::NotRealizable(violation) => {
            out_line(stdout, &format!("not tree-realizable: {violation}"));
            Ok(1)
        }
        core::TreeCheck::Realizable => {
            if build {
                let tree = core::build_tree_realization(&set).map_err(|e| e.to_string())?;
                print_realization_file(&tree, stdout);
            } else {
                out_line(stdout, "tree-realizable");
            }
            Ok(0)
        }
    }
}

fn assignment_line(values: &[bool]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let var = i as i64 + 1;
            if v { var } else { -var }.to_string()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_reduce_sat(cnf: &Path, output: Option<&Path>, stdout: &mut dyn Write) -> CmdResult {
    let formula = core::parse_dimacs(&read_file(cnf)?).map_err(|e| e.to_string())?;
    let normalized = match core::normalize_formula(&formula) {
        NormalizeOutcome::TriviallySat(assignment) => {
            out_line(stdout, "trivially satisfiable");
            out_line(stdout, &assignment_line(&assignment));
            return Ok(0);
        }
        NormalizeOutcome::TriviallyUnsat => {
            out_line(stdout, "trivially unsatisfiable");
            return Ok(1);
        }
        NormalizeOutcome::Reduced(nf) => nf,
    };
    let inst = core::reduce(&normalized).map_err(|e| e.to_string())?;

    let mut comments = vec![
        "edge-budget realization instance".to_string(),
        format!(
            "normalized formula: {} variables, {} clauses",
            inst.num_vars(),
            inst.num_clauses()
        ),
        format!("budget k = {}", inst.bound_k()),
        "vertex roles:".to_string(),
    ];
    for (idx, v) in inst.set().iter().enumerate() {
        comments.push(format!("  {} = {}", vector_csv(v), inst.role_of(idx)));
    }
    let text = emit_set(inst.set(), &comments);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => {
            let _ = write!(stdout, "{text}");
        }
    }
    Ok(0)
}

fn cmd_decode_sat(cnf: &Path, graph: &Path, stdout: &mut dyn Write) -> CmdResult {
    let formula = core::parse_dimacs(&read_file(cnf)?).map_err(|e| e.to_string())?;
    let normalized = match core::normalize_formula(&formula) {
        NormalizeOutcome::TriviallySat(assignment) => {
            out_line(stdout, &assignment_line(&assignment));
            return Ok(0);
        }
        NormalizeOutcome::TriviallyUnsat => {
            out_line(stdout, "unsatisfiable");
            return Ok(1);
        }
        NormalizeOutcome::Reduced(nf) => nf,
    };
    let inst = core::reduce(&normalized).map_err(|e| e.to_string())?;
    let (set, edges) = load_graph(graph)?;
    if &set != inst.set() {
        return Err(format!(
            "{}: vertex set does not match the instance emitted for {}",
            graph.display(),
            cnf.display()
        ));
    }
    let labeled = core::LabeledGraph::new(set, edges).map_err(|e| e.to_string())?;
    let realization = Realization::with_implicit_landmarks(labeled).map_err(|e| e.to_string())?;
    let decoded = core::decode_assignment(&inst, &realization).map_err(|e| e.to_string())?;
    out_line(stdout, &assignment_line(&decoded.original));
    Ok(0)
}

fn cmd_verify(set_path: &Path, graph_path: &Path, stdout: &mut dyn Write) -> CmdResult {
    let set = load_set(set_path)?;
    let (graph_set, edges) = load_graph(graph_path)?;
    if graph_set != set {
        return Err(format!(
            "{}: vertex set differs from {}",
            graph_path.display(),
            set_path.display()
        ));
    }
    let landmarks = set.landmark_indices().ok_or_else(|| {
        "set has no unique zero vector in some coordinate, so no landmark list".to_string()
    })?;
    let graph = core::LabeledGraph::new(set.clone(), edges).map_err(|e| e.to_string())?;
    match core::verify_realization(&graph, &landmarks, &set).map_err(|e| e.to_string())? {
        VerifyOutcome::Ok => {
            out_line(stdout, "ok");
            Ok(0)
        }
        VerifyOutcome::Disconnected { unreachable } => {
            out_line(
                stdout,
                &format!(
                    "disconnected: vertex {} unreachable",
                    vector_csv(set.element(unreachable))
                ),
            );
            Ok(1)
        }
        VerifyOutcome::Mismatch {
            vertex,
            landmark,
            expected,
            actual,
        } => {
            out_line(
                stdout,
                &format!(
                    "mismatch: vertex {} has distance {actual} to landmark {} (expected {expected})",
                    vector_csv(set.element(vertex)),
                    landmark + 1
                ),
            );
            Ok(1)
        }
    }
}

fn cmd_dot(path: &Path, stdout: &mut dyn Write) -> CmdResult {
    let (set, edges) = load_graph(path)?;
    let landmarks: Vec<usize> = (0..set.dim())
        .filter_map(|i| set.landmark_index(i))
        .collect();
    let _ = write!(stdout, "{}", emit_dot(&set, edges, &landmarks));
    Ok(0)
}
