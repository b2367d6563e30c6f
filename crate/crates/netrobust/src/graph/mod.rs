//! Undirected simple graphs: canonical families, bridging, random regular
//! sampling, degree and distance statistics, and edge-list persistence.

mod edgelist;
mod random;

pub use random::{random_regular, random_regular_with_stats, RegularSampleStats};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The canonical graph families with closed-form robustness expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        }
    }

    /// Smallest admissible node count.
    pub fn min_nodes(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            other => Err(Error::InvalidParameter(format!("unknown family: {other}"))),
        }
    }
}

/// An immutable undirected simple graph on nodes `0..n`, with optional
/// per-edge weights in `(0, 1]`.
///
/// Edges are stored canonically: each pair as `(i, j)` with `i < j`, sorted
/// lexicographically. Weights, when present, are aligned with that order.
/// Graphs are plain immutable data and can be shared freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<f64>>,
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone)]
pub struct DistanceSummary {
    /// Mean over the n(n-1)/2 unordered pairs.
    pub average_distance: f64,
    /// Largest pairwise distance.
    pub diameter: usize,
    dist: Vec<u32>,
    n: usize,
}

impl DistanceSummary {
    /// Hop count between `i` and `j`.
    pub fn hops(&self, i: usize, j: usize) -> usize {
        self.dist[i * self.n + j] as usize
    }

    /// Sum of hop counts over unordered pairs.
    pub fn total(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                sum += f64::from(self.dist[i * self.n + j]);
            }
        }
        sum
    }
}

impl Graph {
    /// Builds an unweighted graph, validating simplicity and node ranges.
    /// Edge orientation and order are normalized.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Graph::build(n, edges.into_iter().map(|(i, j)| (i, j, None)).collect())
    }

    /// Builds a weighted graph; every weight must lie in `(0, 1]`.
    pub fn with_weights(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Graph> {
        Graph::build(n, edges.into_iter().map(|(i, j, w)| (i, j, Some(w))).collect())
    }

    fn build(n: usize, raw: Vec<(usize, usize, Option<f64>)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one node".into()));
        }
        let weighted = raw.iter().any(|(_, _, w)| w.is_some());
        let mut rows = Vec::with_capacity(raw.len());
        for (i, j, w) in raw {
            if i >= n {
                return Err(Error::InvalidNode { node: i, n });
            }
            if j >= n {
                return Err(Error::InvalidNode { node: j, n });
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            let w = w.unwrap_or(1.0);
            if !(w > 0.0 && w <= 1.0) {
                return Err(Error::WeightOutOfRange(w));
            }
            rows.push(((i.min(j), i.max(j)), w));
        }
        rows.sort_by_key(|(e, _)| *e);
        for pair in rows.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateEdge(pair[0].0 .0, pair[0].0 .1));
            }
        }
        let edges: Vec<_> = rows.iter().map(|(e, _)| *e).collect();
        let weights = weighted.then(|| rows.iter().map(|(_, w)| *w).collect());
        Ok(Graph { n, edges, weights })
    }

    /// Standard unweighted family graph. The star's hub is node 0.
    pub fn family(family: Family, n: usize) -> Result<Graph> {
        let min = family.min_nodes();
        if n < min {
            return Err(Error::InvalidSize { family: family.name(), n, min });
        }
        match family {
            Family::Path => Graph::new(n, (0..n - 1).map(|i| (i, i + 1))),
            Family::Cycle => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Star => Graph::new(n, (1..n).map(|i| (0, i))),
            Family::Complete => {
                Graph::new(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
            }
        }
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::family(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::family(Family::Cycle, n)
    }

    pub fn star(n: usize) -> Result<Graph> {
        Graph::family(Family::Star, n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::family(Family::Complete, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Per-edge weights aligned with [`edges`](Self::edges), if any were set.
    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Weight of the edge at `index` in canonical order (1 when unweighted).
    pub fn weight_at(&self, index: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[index])
    }

    /// Same structure with all weights dropped (i.e. reset to 1).
    pub fn unweighted(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone(), weights: None }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Average node degree `2|E|/n`.
    pub fn average_degree(&self) -> f64 {
        2.0 * self.edges.len() as f64 / self.n as f64
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// True iff a BFS from node 0 reaches every node.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Exact hop distances via BFS from every node.
    pub fn distances(&self) -> Result<DistanceSummary> {
        let n = self.n;
        let adj = self.adjacency();
        let mut dist = vec![u32::MAX; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if row[v] == u32::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(Error::Disconnected);
            }
        }
        let mut sum = 0.0;
        let mut diameter = 0u32;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = dist[i * n + j];
                sum += f64::from(d);
                diameter = diameter.max(d);
            }
        }
        let pairs = (n * (n - 1) / 2).max(1) as f64;
        Ok(DistanceSummary {
            average_distance: sum / pairs,
            diameter: diameter as usize,
            dist,
            n,
        })
    }

    /// Parses the edge-list text format. See the module docs of
    /// [`edgelist`](self) for the grammar.
    pub fn from_edgelist(text: &str) -> Result<Graph> {
        edgelist::parse(text)
    }

    /// Serializes to the edge-list text format; `from_edgelist` of the
    /// output reproduces the graph exactly.
    pub fn to_edgelist(&self) -> String {
        edgelist::format(self)
    }
}

/// Joins two disjoint graphs with the single edge `(u, v')`, relabeling the
/// second graph's nodes by an offset of `g1.n()`.
pub fn bridge(g1: &Graph, g2: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g1.n() {
        return Err(Error::InvalidNode { node: u, n: g1.n() });
    }
    if v >= g2.n() {
        return Err(Error::InvalidNode { node: v, n: g2.n() });
    }
    let offset = g1.n();
    let n = g1.n() + g2.n();
    let weighted = g1.weights.is_some() || g2.weights.is_some();
    if weighted {
        let mut rows: Vec<(usize, usize, f64)> = Vec::with_capacity(g1.edge_count() + g2.edge_count() + 1);
        for (idx, &(i, j)) in g1.edges().iter().enumerate() {
            rows.push((i, j, g1.weight_at(idx)));
        }
        for (idx, &(i, j)) in g2.edges().iter().enumerate() {
            rows.push((i + offset, j + offset, g2.weight_at(idx)));
        }
        rows.push((u, v + offset, 1.0));
        Graph::with_weights(n, rows)
    } else {
        let edges = g1
            .edges()
            .iter()
            .copied()
            .chain(g2.edges().iter().map(|&(i, j)| (i + offset, j + offset)))
            .chain(std::iter::once((u, v + offset)));
        Graph::new(n, edges)
    }
}

/// Lollipop graph: complete graph on `p` nodes bridged to an endpoint of a
/// path on `q` nodes. Nodes `0..p` form the clique, `p..p+q` the path, with
/// the bridge edge `(0, p)`.
pub fn lollipop(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "lollipop needs p >= 1 and q >= 1, got p={p}, q={q}"
        )));
    }
    let clique = Graph::new(p, (0..p).flat_map(|i| ((i + 1)..p).map(move |j| (i, j))))?;
    let path = Graph::new(q, (0..q.saturating_sub(1)).map(|i| (i, i + 1)))?;
    bridge(&clique, &path, 0, 0)
}
