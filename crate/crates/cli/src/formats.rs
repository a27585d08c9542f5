//! The three text formats the tool reads and writes.
//!
//! Vector-set files: optional `#` comment lines, then `dim <n>`, then one
//! vector per line as `n` space-separated non-negative integers.
//!
//! Graph files: a vector-set section, a blank line, then one edge per line
//! as `v1 -- v2` with comma-separated coordinates on each side. Landmarks
//! are implicit: the zero-coordinate vectors in coordinate order.
//!
//! DOT export labels each node with its coordinate tuple and double-circles
//! the landmarks.
//!
//! Everything emitted here parses back losslessly and is byte-deterministic.

use std::fmt::Write as _;

use metreal_core::{CoordVector, VectorSet};

/// Coordinates joined by commas, no parentheses: `0,2`.
pub fn vector_csv(v: &CoordVector) -> String {
    v.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_vector_csv(token: &str, dim: usize, line: usize) -> Result<CoordVector, String> {
    let coords: Vec<u32> = token
        .split(',')
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| format!("line {line}: bad coordinate '{t}'"))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != dim {
        return Err(format!(
            "line {line}: vector '{token}' has {} coordinates, expected {dim}",
            coords.len()
        ));
    }
    CoordVector::new(coords).map_err(|e| format!("line {line}: {e}"))
}

pub fn emit_set(s: &VectorSet, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "dim {}", s.dim()).unwrap();
    for v in s.iter() {
        let row = v
            .coords()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "{row}").unwrap();
    }
    out
}

/// Parses the vector-set section from `lines`, returning the set and the
/// number of lines consumed (up to and including the blank separator, when
/// one ends the section).
fn parse_set_section(lines: &[&str]) -> Result<(VectorSet, usize), String> {
    let mut dim: Option<usize> = None;
    let mut vectors: Vec<CoordVector> = Vec::new();
    let mut consumed = lines.len();

    for (idx, raw) in lines.iter().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if dim.is_some() && !vectors.is_empty() {
                consumed = idx + 1;
                break; // blank line ends the section
            }
            continue;
        }
        match dim {
            None => {
                let rest = line
                    .strip_prefix("dim")
                    .ok_or_else(|| format!("line {line_no}: expected 'dim <n>', found '{line}'"))?
                    .trim();
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| format!("line {line_no}: bad dimension '{rest}'"))?;
                if n == 0 {
                    return Err(format!("line {line_no}: dimension must be positive"));
                }
                dim = Some(n);
            }
            Some(n) => {
                let coords: Vec<u32> = line
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| format!("line {line_no}: bad entry '{t}'"))
                    })
                    .collect::<Result<_, _>>()?;
                if coords.len() != n {
                    return Err(format!(
                        "line {line_no}: {} entries, expected {n}",
                        coords.len()
                    ));
                }
                vectors.push(CoordVector::new(coords).map_err(|e| format!("line {line_no}: {e}"))?);
            }
        }
    }

    if dim.is_none() {
        return Err("missing 'dim <n>' line".into());
    }
    let set = VectorSet::new(vectors).map_err(|e| e.to_string())?;
    Ok((set, consumed))
}

pub fn parse_set(text: &str) -> Result<VectorSet, String> {
    let lines: Vec<&str> = text.lines().collect();
    let (set, consumed) = parse_set_section(&lines)?;
    for (idx, raw) in lines.iter().enumerate().skip(consumed) {
        let line = raw.trim();
        if !line.is_empty() && !line.starts_with('#') {
            return Err(format!("line {}: unexpected content '{line}'", idx + 1));
        }
    }
    Ok(set)
}

pub fn emit_graph(
    s: &VectorSet,
    edges: impl IntoIterator<Item = (usize, usize)>,
    comments: &[String],
) -> String {
    let mut out = emit_set(s, comments);
    out.push('\n');
    for (u, v) in edges {
        let line = format!(
            "{} -- {}\n",
            vector_csv(s.element(u)),
            vector_csv(s.element(v))
        );
        out.push_str(&line);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<(VectorSet, Vec<(usize, usize)>), String> {
    let lines: Vec<&str> = text.lines().collect();
    let (set, consumed) = parse_set_section(&lines)?;
    let mut edges = Vec::new();
    for (idx, raw) in lines.iter().enumerate().skip(consumed) {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (left, right) = line
            .split_once("--")
            .ok_or_else(|| format!("line {line_no}: expected 'v1 -- v2', found '{line}'"))?;
        let a = parse_vector_csv(left.trim(), set.dim(), line_no)?;
        let b = parse_vector_csv(right.trim(), set.dim(), line_no)?;
        let u = set
            .index_of(&a)
            .ok_or_else(|| format!("line {line_no}: vector '{}' not in the set", left.trim()))?;
        let v = set
            .index_of(&b)
            .ok_or_else(|| format!("line {line_no}: vector '{}' not in the set", right.trim()))?;
        if u == v {
            return Err(format!("line {line_no}: self-loop on '{}'", left.trim()));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok((set, edges))
}

pub fn emit_dot(
    s: &VectorSet,
    edges: impl IntoIterator<Item = (usize, usize)>,
    landmarks: &[usize],
) -> String {
    let mut out = String::from("graph realization {\n  node [shape=circle];\n");
    for (idx, v) in s.iter().enumerate() {
        let shape = if landmarks.contains(&idx) {
            " [shape=doublecircle]"
        } else {
            ""
        };
        writeln!(out, "  \"{}\"{shape};", vector_csv(v)).unwrap();
    }
    for (u, v) in edges {
        writeln!(
            out,
            "  \"{}\" -- \"{}\";",
            vector_csv(s.element(u)),
            vector_csv(s.element(v))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
