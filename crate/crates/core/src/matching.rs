//! Matching primitives: an exhaustive perfect-matching check for oracle-scale
//! graphs and the deterministic maximum matching on a disjoint union of
//! cliques used by the block solver.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex bound for [`has_perfect_matching`].
pub const DEFAULT_MATCHING_LIMIT: u32 = 24;

/// Exhaustive backtracking perfect-matching test, bounded to oracle scale.
/// Odd order returns `false` immediately; graphs larger than
/// [`DEFAULT_MATCHING_LIMIT`] vertices are rejected with a capacity error.
pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    has_perfect_matching_bounded(g, DEFAULT_MATCHING_LIMIT)
}

/// Like [`has_perfect_matching`] with a caller-chosen vertex bound (max 64).
pub fn has_perfect_matching_bounded(g: &Graph, max_vertices: u32) -> Result<bool> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Ok(false);
    }
    if n > max_vertices.min(64) {
        return Err(Error::Capacity(format!(
            "perfect-matching check limited to {} vertices, got {n}",
            max_vertices.min(64)
        )));
    }
    let all: Vec<u32> = g.vertices().collect();
    Ok(perfect_matching_on_subset(g, &all).is_some())
}

/// Finds a perfect matching of `G[s]` by backtracking, or `None`.
/// `s` must be sorted, deduplicated, and no longer than 64. Deterministic:
/// the lowest unmatched vertex is matched to its smallest unmatched neighbor
/// first, so the returned matching is canonical.
pub(crate) fn perfect_matching_on_subset(g: &Graph, s: &[u32]) -> Option<Vec<(u32, u32)>> {
    let k = s.len();
    debug_assert!(k <= 64);
    if k % 2 == 1 {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let mut masks = vec![0u64; k];
    for (i, &v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Ok(j) = s.binary_search(&w) {
                masks[i] |= 1 << j;
            }
        }
    }
    let full = if k == 64 { !0u64 } else { (1u64 << k) - 1 };
    let mut pairs = Vec::with_capacity(k / 2);
    if backtrack(&masks, full, 0, &mut pairs) {
        Some(pairs.iter().map(|&(i, j)| (s[i], s[j])).collect())
    } else {
        None
    }
}

fn backtrack(masks: &[u64], full: u64, matched: u64, pairs: &mut Vec<(usize, usize)>) -> bool {
    if matched == full {
        return true;
    }
    let i = (!matched & full).trailing_zeros() as usize;
    let mut candidates = masks[i] & !matched;
    while candidates != 0 {
        let j = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        pairs.push((i, j));
        if backtrack(masks, full, matched | (1 << i) | (1 << j), pairs) {
            return true;
        }
        pairs.pop();
    }
    false
}

/// Maximum matching of `G[s]` when `s` is partitioned into cliques: within
/// each clique vertices are paired in ascending id order and the largest id
/// of an odd clique is left unmatched. Returns `(pairs, unmatched)`, both
/// sorted ascending.
pub fn max_matching_clique_union(
    g: &Graph,
    s: &[u32],
    clique_partition: &[Vec<u32>],
) -> Result<(Vec<(u32, u32)>, Vec<u32>)> {
    let n = g.vertex_count();
    let mut expected: Vec<u32> = s.to_vec();
    expected.sort_unstable();
    if expected.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Argument("duplicate vertex in s".into()));
    }
    if expected.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::Argument("vertex id out of range".into()));
    }
    let mut covered: Vec<u32> = clique_partition.iter().flatten().copied().collect();
    covered.sort_unstable();
    if covered != expected {
        return Err(Error::Argument(
            "clique partition does not partition s".into(),
        ));
    }
    let mut parts: Vec<Vec<u32>> = clique_partition.to_vec();
    for part in parts.iter_mut() {
        part.sort_unstable();
        for i in 0..part.len() {
            for j in i + 1..part.len() {
                if !g.has_edge(part[i], part[j]) {
                    return Err(Error::Argument(format!(
                        "part containing {} and {} does not induce a clique",
                        part[i], part[j]
                    )));
                }
            }
        }
    }
    let (mut pairs, mut unmatched) = clique_union_pairing(&parts);
    pairs.sort_unstable();
    unmatched.sort_unstable();
    Ok((pairs, unmatched))
}

/// Pairing core shared with the block solver; parts must each be sorted and
/// induce cliques.
pub(crate) fn clique_union_pairing(parts: &[Vec<u32>]) -> (Vec<(u32, u32)>, Vec<u32>) {
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    for part in parts {
        let mut chunks = part.chunks_exact(2);
        for c in &mut chunks {
            pairs.push((c[0], c[1]));
        }
        if let [odd] = chunks.remainder() {
            unmatched.push(*odd);
        }
    }
    (pairs, unmatched)
}
