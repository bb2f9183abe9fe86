//! Seeded instance generators. Identical parameters yield byte-identical
//! instances on every platform: all randomness is integer-only ChaCha8.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalRep;

/// Random attachment tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree(n: u32, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(u32, u32)> = (2..=n)
        .map(|v| (rng.random_range(1..v), v))
        .collect();
    Graph::from_edges(n, &edges).expect("attachment tree is simple")
}

/// Random tree of cliques: repeatedly glue a fresh clique onto one existing
/// vertex, so every block is a clique and the glue vertices are the cut
/// vertices. Exactly `n` vertices.
pub fn random_block_graph(n: u32, max_clique: u32, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    assert!(max_clique >= 2, "cliques need at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut created = 1u32;
    while created < n {
        let anchor = rng.random_range(1..=created);
        let budget = (max_clique - 1).min(n - created);
        let fresh = rng.random_range(1..=budget);
        let mut members = vec![anchor];
        for _ in 0..fresh {
            created += 1;
            members.push(created);
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("clique tree is simple")
}

/// Random integer intervals, regenerated until the intersection graph is
/// connected; after a bounded number of attempts the last draw is repaired by
/// extending right endpoints just enough to chain consecutive intervals.
pub fn random_interval_rep(n: u32, max_len: i64, range: i64, seed: u64) -> IntervalRep {
    assert!(n >= 1);
    assert!(max_len >= 1 && range >= 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = if n <= 50_000 { 64 } else { 4 };
    let mut last: Vec<(i64, i64)> = Vec::new();
    for _ in 0..attempts {
        let intervals: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let a = rng.random_range(0..=range);
                (a, a + rng.random_range(1..=max_len))
            })
            .collect();
        if intervals_connected(&intervals) {
            return IntervalRep::new(intervals).expect("endpoints ordered");
        }
        last = intervals;
    }
    // Connectivity repair: walk the intervals by left endpoint and stretch
    // each one to reach the next where a gap remains.
    let mut idx: Vec<usize> = (0..last.len()).collect();
    idx.sort_unstable_by_key(|&i| last[i]);
    for w in idx.windows(2) {
        let next_a = last[w[1]].0;
        let prev = &mut last[w[0]];
        if prev.1 < next_a {
            prev.1 = next_a;
        }
    }
    IntervalRep::new(last).expect("repair keeps endpoints ordered")
}

/// Connectivity of an interval family without building the graph: sweep by
/// left endpoint and look for a gap behind the running maximum right
/// endpoint.
fn intervals_connected(intervals: &[(i64, i64)]) -> bool {
    let mut idx: Vec<usize> = (0..intervals.len()).collect();
    idx.sort_unstable_by_key(|&i| intervals[i]);
    let mut reach = intervals[idx[0]].1;
    for &i in &idx[1..] {
        if intervals[i].0 > reach {
            return false;
        }
        reach = reach.max(intervals[i].1);
    }
    true
}

/// Random connected graph: a random attachment tree plus extra uniform edges
/// up to `target_m` total.
pub fn random_connected_graph(n: u32, target_m: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complete = n as usize * (n as usize - 1) / 2;
    let target = target_m.clamp(n as usize - 1, complete);
    let mut present = std::collections::HashSet::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for v in 2..=n {
        let u = rng.random_range(1..v);
        present.insert((u, v));
        edges.push((u, v));
    }
    while edges.len() < target {
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edges(n, &edges).expect("generated graph is simple")
}

/// Generator parameters as accepted by the command line.
#[derive(Debug, Clone)]
pub enum GeneratorSpec {
    Tree { n: u32 },
    Block { n: u32, max_clique: u32 },
    Interval { n: u32, max_len: i64, range: i64 },
    VcSource { n: u32, edges: usize },
}

impl GeneratorSpec {
    /// Renders the instance in its text format (graph or interval).
    pub fn generate(&self, seed: u64) -> Result<String> {
        match *self {
            GeneratorSpec::Tree { n } => {
                check_n(n)?;
                Ok(random_tree(n, seed).serialize())
            }
            GeneratorSpec::Block { n, max_clique } => {
                check_n(n)?;
                if max_clique < 2 {
                    return Err(Error::Argument("max clique size must be at least 2".into()));
                }
                Ok(random_block_graph(n, max_clique, seed).serialize())
            }
            GeneratorSpec::Interval { n, max_len, range } => {
                check_n(n)?;
                if max_len < 1 || range < 0 {
                    return Err(Error::Argument("interval knobs out of range".into()));
                }
                Ok(random_interval_rep(n, max_len, range, seed).serialize())
            }
            GeneratorSpec::VcSource { n, edges } => {
                check_n(n)?;
                Ok(random_connected_graph(n, edges, seed).serialize())
            }
        }
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Argument("need at least two vertices".into()));
    }
    Ok(())
}
