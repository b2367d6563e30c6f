//! Shared corpus builders for the integration suites: seeded random trees
//! (uniform via Prufer sequences), random connected graphs, and the mixed
//! graph corpus used by the invariant and acceptance checks.

// Each test target compiles this module separately and uses a subset.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use netrobust::{graph, Family, Graph};

/// Uniform random labeled tree on `n` nodes from a Prufer sequence.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::new(1, []).unwrap();
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("prufer invariant");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a spanning tree plus `extra` additional edges
/// drawn without replacement from the remaining pairs.
pub fn random_connected(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut present: std::collections::HashSet<(usize, usize)> =
        tree.edges().iter().copied().collect();
    let mut free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|e| !present.contains(e))
        .collect();
    free.shuffle(rng);
    for e in free.into_iter().take(extra) {
        present.insert(e);
    }
    Graph::new(n, present).unwrap()
}

/// Mixed corpus: canonical families, random trees, random regular graphs
/// with k in 3..=8, and lollipops. At least `SANDWICH_CORPUS_MIN` graphs.
pub const SANDWICH_CORPUS_MIN: usize = 500;

pub fn corpus(seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::new();
    for n in 2..=40 {
        graphs.push(Graph::family(Family::Path, n).unwrap());
        graphs.push(Graph::family(Family::Star, n).unwrap());
        graphs.push(Graph::family(Family::Complete, n).unwrap());
        if n >= 3 {
            graphs.push(Graph::family(Family::Cycle, n).unwrap());
        }
    }
    for i in 0..130 {
        let n = 5 + (i * 7) % 45;
        graphs.push(random_tree(n, &mut rng));
    }
    for k in 3..=8usize {
        for i in 0..25 {
            let mut n = k + 2 + 3 * i;
            if (n * k) % 2 != 0 {
                n += 1;
            }
            graphs.push(graph::random_regular(n, k, seed ^ ((k * 100 + i) as u64)).unwrap());
        }
    }
    for p in 2..=11usize {
        for q in [1usize, 3, 6, 9, 12, 15, 20] {
            graphs.push(graph::lollipop(p, q).unwrap());
        }
    }
    assert!(graphs.len() >= SANDWICH_CORPUS_MIN, "corpus has {}", graphs.len());
    graphs
}

/// Connected with `m == n - 1`.
pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() == g.n() - 1 && g.is_connected()
}

pub fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

pub fn rel_err(actual: f64, expect: f64) -> f64 {
    (actual - expect).abs() / expect.abs().max(f64::MIN_POSITIVE)
}
