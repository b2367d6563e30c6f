//! Plain-text edge-list format.
//!
//! The first non-blank, non-comment line holds the node count `n`. Every
//! following line is `i j` or `i j w` with `0 <= i, j < n`, `i != j` and
//! `0 < w <= 1`. Tokens are whitespace-separated and `#` starts a comment.
//! Weights are written in scientific notation with 17 significant digits,
//! so a save/load round trip is exact.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

pub(super) fn parse(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut rows: Vec<(usize, usize, Option<f64>)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = data.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(err(line_no, "expected a single node count"));
                }
                let count: usize = tokens[0]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid node count '{}'", tokens[0])))?;
                if count == 0 {
                    return Err(err(line_no, "node count must be at least 1"));
                }
                n = Some(count);
            }
            Some(n) => {
                if tokens.len() != 2 && tokens.len() != 3 {
                    return Err(err(line_no, "expected 'i j' or 'i j w'"));
                }
                let i: usize = tokens[0]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid node index '{}'", tokens[0])))?;
                let j: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid node index '{}'", tokens[1])))?;
                if i >= n || j >= n {
                    return Err(err(line_no, format!("node index {} >= n = {n}", i.max(j))));
                }
                if i == j {
                    return Err(err(line_no, format!("self-loop at node {i}")));
                }
                if !seen.insert((i.min(j), i.max(j))) {
                    return Err(err(line_no, format!("duplicate edge ({i}, {j})")));
                }
                let w = match tokens.get(2) {
                    None => None,
                    Some(tok) => {
                        let w: f64 = tok
                            .parse()
                            .map_err(|_| err(line_no, format!("invalid weight '{tok}'")))?;
                        if !(w > 0.0 && w <= 1.0) {
                            return Err(err(line_no, format!("weight {w} outside (0, 1]")));
                        }
                        Some(w)
                    }
                };
                rows.push((i, j, w));
            }
        }
    }

    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing node count"))?;
    let weighted = rows.iter().any(|(_, _, w)| w.is_some());
    if weighted {
        Graph::with_weights(n, rows.into_iter().map(|(i, j, w)| (i, j, w.unwrap_or(1.0))))
    } else {
        Graph::new(n, rows.into_iter().map(|(i, j, _)| (i, j)))
    }
}

pub(super) fn format(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", g.n()));
    match g.weights() {
        None => {
            for &(i, j) in g.edges() {
                out.push_str(&format!("{i} {j}\n"));
            }
        }
        Some(weights) => {
            for (&(i, j), w) in g.edges().iter().zip(weights) {
                out.push_str(&format!("{i} {j} {w:.16e}\n"));
            }
        }
    }
    out
}
