//! Seeded random k-regular graph sampling via the configuration model.
//!
//! Node stubs (k copies of each node) are shuffled and paired; pairs that
//! would create a self-loop or a parallel edge are thrown back into the
//! pool for the next pass. A pass that places no edge means the remaining
//! stubs admit no simple completion, and the whole matching restarts.
//! Samples that come out disconnected are redrawn from the same stream, so
//! the result is a pure function of `(n, k, seed)`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Counters from one sampling run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularSampleStats {
    /// Stub matchings abandoned because no simple completion remained.
    pub matching_restarts: usize,
    /// Simple samples rejected for being disconnected.
    pub connectivity_resamples: usize,
}

/// Draws a connected simple k-regular graph on n nodes.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    random_regular_with_stats(n, k, seed).map(|(g, _)| g)
}

/// Like [`random_regular`], also reporting restart counters.
pub fn random_regular_with_stats(
    n: usize,
    k: usize,
    seed: u64,
) -> Result<(Graph, RegularSampleStats)> {
    if k < 1 || k >= n {
        return Err(Error::InvalidDegree { k, n });
    }
    if !(n * k).is_multiple_of(2) {
        return Err(Error::OddDegreeSum { n, k });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = RegularSampleStats { matching_restarts: 0, connectivity_resamples: 0 };
    loop {
        let edges = loop {
            match try_matching(n, k, &mut rng) {
                Some(edges) => break edges,
                None => stats.matching_restarts += 1,
            }
        };
        let g = Graph::new(n, edges).expect("matching yields a valid simple graph");
        debug_assert!(g.degrees().iter().all(|&d| d == k));
        if g.is_connected() {
            return Ok((g, stats));
        }
        stats.connectivity_resamples += 1;
    }
}

/// One attempt at pairing all stubs into a simple graph.
fn try_matching(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    let mut present: HashSet<(usize, usize)> = HashSet::with_capacity(n * k / 2);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);

    while !stubs.is_empty() {
        stubs.shuffle(rng);
        let mut leftover = Vec::new();
        let mut placed = false;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            let key = (u.min(v), u.max(v));
            if u != v && present.insert(key) {
                edges.push(key);
                placed = true;
            } else {
                leftover.push(u);
                leftover.push(v);
            }
        }
        if !placed {
            return None;
        }
        stubs = leftover;
    }
    Some(edges)
}
