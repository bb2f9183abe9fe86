//! Executable reductions from vertex cover to paired domination, with
//! witness maps in both directions.
//!
//! Both variants duplicate the source: `V1`/`V2` are two copies of the
//! vertices, `E1`/`E2` two copies of the edges attached to the matching
//! vertex copies by incidence. The bipartite variant joins `V1` and `V2`
//! completely; the split variant turns `V1 ∪ V2` into a clique (so the output
//! is a split graph, hence chordal). A vertex cover of size `k` maps to a
//! paired-dominating set of size `2k` and back.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solution::{verify_paired_dominating, PairedSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionVariant {
    Bipartite,
    Split,
}

impl ReductionVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionVariant::Bipartite => "bipartite",
            ReductionVariant::Split => "split",
        }
    }
}

/// Which copy a constructed vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CopyTag {
    V1,
    V2,
    E1,
    E2,
}

/// Provenance of one constructed vertex: the source vertex (`V1`/`V2`, index
/// is the vertex id) or source edge (`E1`/`E2`, index into the canonical
/// sorted edge list, 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProvenanceEntry {
    pub id: u32,
    pub tag: CopyTag,
    pub index: u32,
}

/// The constructed graph plus the map back to the source instance.
/// Vertex numbering: `V1 = 1..n`, `V2 = n+1..2n`, `E1 = 2n+1..2n+m`,
/// `E2 = 2n+m+1..2n+2m`.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub gprime: Graph,
    pub provenance: Vec<ProvenanceEntry>,
    pub variant: ReductionVariant,
    source: Graph,
    source_edges: Vec<(u32, u32)>,
}

impl ReductionOutput {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn source_edges(&self) -> &[(u32, u32)] {
        &self.source_edges
    }

    fn source_n(&self) -> u32 {
        self.source.vertex_count()
    }

    fn source_m(&self) -> u32 {
        self.source_edges.len() as u32
    }

    /// Id of the copy of source vertex `j` on the given side (1 or 2).
    pub fn vertex_copy(&self, j: u32, side: u8) -> u32 {
        match side {
            1 => j,
            _ => self.source_n() + j,
        }
    }

    /// Id of the copy of source edge `k` (1-based) on the given side.
    pub fn edge_copy(&self, k: u32, side: u8) -> u32 {
        match side {
            1 => 2 * self.source_n() + k,
            _ => 2 * self.source_n() + self.source_m() + k,
        }
    }

    /// Provenance serialized as a JSON document.
    pub fn provenance_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            variant: ReductionVariant,
            source: Summary,
            gprime: Summary,
            vertices: &'a [ProvenanceEntry],
        }
        #[derive(Serialize)]
        struct Summary {
            n: u32,
            m: usize,
        }
        let doc = Doc {
            variant: self.variant,
            source: Summary {
                n: self.source.vertex_count(),
                m: self.source.edge_count(),
            },
            gprime: Summary {
                n: self.gprime.vertex_count(),
                m: self.gprime.edge_count(),
            },
            vertices: &self.provenance,
        };
        serde_json::to_string_pretty(&doc).expect("provenance serialization cannot fail")
    }
}

fn build(g: &Graph, variant: ReductionVariant) -> Result<ReductionOutput> {
    if g.edge_count() == 0 {
        return Err(Error::Instance("reduction needs at least one edge".into()));
    }
    let n = g.vertex_count();
    let m = g.edge_count() as u32;
    let source_edges = g.edges();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    match variant {
        ReductionVariant::Bipartite => {
            for u in 1..=n {
                for v in 1..=n {
                    edges.push((u, n + v));
                }
            }
        }
        ReductionVariant::Split => {
            for u in 1..=2 * n {
                for v in u + 1..=2 * n {
                    edges.push((u, v));
                }
            }
        }
    }
    for (k, &(x, y)) in source_edges.iter().enumerate() {
        let k = k as u32 + 1;
        let e1 = 2 * n + k;
        let e2 = 2 * n + m + k;
        edges.push((x, e1));
        edges.push((y, e1));
        edges.push((n + x, e2));
        edges.push((n + y, e2));
    }
    let gprime = Graph::from_edges(2 * n + 2 * m, &edges)?;

    let mut provenance = Vec::with_capacity(gprime.vertex_count() as usize);
    for j in 1..=n {
        provenance.push(ProvenanceEntry { id: j, tag: CopyTag::V1, index: j });
    }
    for j in 1..=n {
        provenance.push(ProvenanceEntry { id: n + j, tag: CopyTag::V2, index: j });
    }
    for k in 1..=m {
        provenance.push(ProvenanceEntry { id: 2 * n + k, tag: CopyTag::E1, index: k });
    }
    for k in 1..=m {
        provenance.push(ProvenanceEntry { id: 2 * n + m + k, tag: CopyTag::E2, index: k });
    }

    let out = ReductionOutput {
        gprime,
        provenance,
        variant,
        source: g.clone(),
        source_edges,
    };
    match variant {
        ReductionVariant::Bipartite => {
            if !is_bipartite(&out.gprime) {
                return Err(Error::Invariant("constructed graph is not bipartite".into()));
            }
        }
        ReductionVariant::Split => {
            if !out.split_partition_holds() {
                return Err(Error::Invariant("constructed graph is not split".into()));
            }
        }
    }
    Ok(out)
}

/// Complete-bipartite variant: `V1 × V2` plus incidence edges.
pub fn reduce_bipartite(g: &Graph) -> Result<ReductionOutput> {
    build(g, ReductionVariant::Bipartite)
}

/// Split variant: `V1 ∪ V2` forms a clique, edge copies stay independent.
pub fn reduce_split(g: &Graph) -> Result<ReductionOutput> {
    build(g, ReductionVariant::Split)
}

impl ReductionOutput {
    /// Structural check for the split variant: vertex copies form a clique,
    /// edge copies an independent set.
    pub fn split_partition_holds(&self) -> bool {
        let n = self.source_n();
        let m = self.source_m();
        for u in 1..=2 * n {
            for v in u + 1..=2 * n {
                if !self.gprime.has_edge(u, v) {
                    return false;
                }
            }
        }
        for u in 2 * n + 1..=2 * n + 2 * m {
            for v in u + 1..=2 * n + 2 * m {
                if self.gprime.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Two-coloring check by breadth-first search (components handled
/// separately).
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![0u8; n as usize + 1];
    for start in 1..=n {
        if color[start as usize] != 0 {
            continue;
        }
        color[start as usize] = 1;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if color[v as usize] == 0 {
                    color[v as usize] = 3 - color[u as usize];
                    queue.push_back(v);
                } else if color[v as usize] == color[u as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// Maps a vertex cover of the source to a paired-dominating set of the
/// constructed graph: both copies of every cover vertex, paired across sides.
pub fn vc_to_pd_witness(red: &ReductionOutput, vc: &[u32]) -> Result<PairedSolution> {
    let n = red.source_n();
    let mut cover = vc.to_vec();
    cover.sort_unstable();
    cover.dedup();
    if cover.len() != vc.len() {
        return Err(Error::Argument("duplicate vertex in cover".into()));
    }
    if cover.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::Argument("cover vertex out of range".into()));
    }
    let covers = |s: &[u32]| {
        red.source_edges()
            .iter()
            .all(|&(x, y)| s.binary_search(&x).is_ok() || s.binary_search(&y).is_ok())
    };
    if !covers(&cover) {
        return Err(Error::Argument("set is not a vertex cover of the source".into()));
    }
    let pairs: Vec<(u32, u32)> = cover.iter().map(|&j| (j, n + j)).collect();
    let sol = PairedSolution::from_pairs(pairs);
    verify_paired_dominating(&red.gprime, &sol)
        .map_err(|why| Error::Invariant(format!("witness failed verification: {why}")))?;
    Ok(sol)
}

/// Maps a paired-dominating set of the constructed graph to a vertex cover of
/// the source of size at most half the set. Edge-copy members are first
/// swapped for unused vertex copies (smallest id, opposite side preferred),
/// then one side is projected. Falls back to the trivial cover when the set
/// is at least twice the source order.
pub fn pd_to_vc_witness(red: &ReductionOutput, pd: &PairedSolution) -> Result<Vec<u32>> {
    verify_paired_dominating(&red.gprime, pd)
        .map_err(|why| Error::Argument(format!("not a paired-dominating set: {why}")))?;
    let n = red.source_n();
    let k = pd.size() / 2;
    if k >= n as usize {
        return Ok((1..=n).collect());
    }

    let total = red.gprime.vertex_count();
    let mut member = vec![false; total as usize + 1];
    for &v in pd.vertices() {
        member[v as usize] = true;
    }
    let mut partner = vec![0u32; total as usize + 1];
    for &(x, y) in pd.pairs() {
        partner[x as usize] = y;
        partner[y as usize] = x;
    }

    let side_of = |v: u32| -> u8 {
        if v <= n {
            1
        } else if v <= 2 * n {
            2
        } else if v <= 2 * n + red.source_m() {
            3 // E1
        } else {
            4 // E2
        }
    };
    let edge_members: Vec<u32> = pd
        .vertices()
        .iter()
        .copied()
        .filter(|&v| side_of(v) >= 3)
        .collect();
    for e in edge_members {
        let p = partner[e as usize];
        // Prefer the vertex side opposite the edge copy; in the split variant
        // any vertex copy is adjacent to everything in the clique.
        let opposite: Vec<u32> = if side_of(e) == 3 {
            (n + 1..=2 * n).collect()
        } else {
            (1..=n).collect()
        };
        let same: Vec<u32> = if side_of(e) == 3 {
            (1..=n).collect()
        } else {
            (n + 1..=2 * n).collect()
        };
        let mut candidates = opposite;
        if red.variant == ReductionVariant::Split {
            candidates.extend(same);
        }
        let r = candidates
            .into_iter()
            .find(|&c| !member[c as usize])
            .ok_or_else(|| {
                Error::Invariant("no unused vertex copy available for normalization".into())
            })?;
        member[e as usize] = false;
        member[r as usize] = true;
        partner[p as usize] = r;
        partner[r as usize] = p;
        partner[e as usize] = 0;
    }

    let side1: Vec<u32> = (1..=n).filter(|&j| member[j as usize]).collect();
    let side2: Vec<u32> = (1..=n).filter(|&j| member[(n + j) as usize]).collect();
    let cover = match red.variant {
        ReductionVariant::Bipartite => side1,
        ReductionVariant::Split => {
            if side2.len() < side1.len() {
                side2
            } else {
                side1
            }
        }
    };
    let ok = red
        .source_edges()
        .iter()
        .all(|&(x, y)| cover.binary_search(&x).is_ok() || cover.binary_search(&y).is_ok());
    if !ok {
        return Err(Error::Invariant("projected set does not cover the source".into()));
    }
    if cover.len() > k {
        return Err(Error::Invariant("projected cover exceeds half the set size".into()));
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{gamma_p_bruteforce, min_vertex_cover_bruteforce, OracleBudget};

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn k2() -> Graph {
        graph(2, &[(1, 2)])
    }

    /// Chordality by repeated simplicial-vertex elimination; fine for tiny
    /// graphs.
    fn is_chordal(g: &Graph) -> bool {
        let mut alive: Vec<u32> = g.vertices().collect();
        while !alive.is_empty() {
            let found = alive.iter().copied().position(|v| {
                let nb: Vec<u32> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|w| alive.contains(w))
                    .collect();
                nb.iter()
                    .enumerate()
                    .all(|(i, &x)| nb[i + 1..].iter().all(|&y| g.has_edge(x, y)))
            });
            match found {
                Some(idx) => {
                    alive.remove(idx);
                }
                None => return false,
            }
        }
        true
    }

    #[test]
    fn bipartite_reduction_of_k2() {
        let red = reduce_bipartite(&k2()).unwrap();
        assert_eq!(red.gprime.vertex_count(), 6);
        assert_eq!(red.gprime.edge_count(), 8);
        assert!(is_bipartite(&red.gprime));
    }

    #[test]
    fn bipartite_reduction_of_p3() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        let red = reduce_bipartite(&p3).unwrap();
        assert_eq!(red.gprime.vertex_count(), 10);
        for k in 1..=2 {
            assert_eq!(red.gprime.degree(red.edge_copy(k, 1)), 2);
            assert_eq!(red.gprime.degree(red.edge_copy(k, 2)), 2);
        }
    }

    #[test]
    fn provenance_roundtrip() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        let red = reduce_bipartite(&p3).unwrap();
        for entry in &red.provenance {
            if entry.tag == CopyTag::E1 {
                let (x, y) = red.source_edges()[entry.index as usize - 1];
                let nb = red.gprime.neighbors(entry.id);
                assert_eq!(nb, &[x.min(y), x.max(y)]);
            }
        }
    }

    #[test]
    fn split_reduction_structure() {
        let red = reduce_split(&k2()).unwrap();
        assert_eq!(red.gprime.vertex_count(), 6);
        assert_eq!(red.gprime.edge_count(), 6 + 4);
        assert_eq!(red.gprime.degree(red.edge_copy(1, 1)), 2);
        assert_eq!(red.gprime.degree(red.edge_copy(1, 2)), 2);
        assert!(red.split_partition_holds());

        let k3 = graph(3, &[(1, 2), (1, 3), (2, 3)]);
        let red = reduce_split(&k3).unwrap();
        assert!(red.split_partition_holds());
        assert_eq!(red.gprime.vertex_count(), 12);
    }

    #[test]
    fn split_outputs_are_chordal() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5911);
        let mut done = 0;
        while done < 20 {
            let n = rng.random_range(2..=5u32);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            done += 1;
            let red = reduce_split(&graph(n, &edges)).unwrap();
            assert!(is_chordal(&red.gprime));
        }
    }

    #[test]
    fn edgeless_source_rejected() {
        assert!(matches!(
            reduce_bipartite(&graph(3, &[])),
            Err(Error::Instance(_))
        ));
        assert!(matches!(reduce_split(&graph(2, &[])), Err(Error::Instance(_))));
    }

    #[test]
    fn witness_maps_roundtrip_on_k2_and_k3() {
        let budget = OracleBudget::default();
        for (g, expect_tau) in [(k2(), 1usize), (graph(3, &[(1, 2), (1, 3), (2, 3)]), 2)] {
            let vc = min_vertex_cover_bruteforce(&g, &budget).unwrap();
            assert_eq!(vc.len(), expect_tau);
            for red in [reduce_bipartite(&g).unwrap(), reduce_split(&g).unwrap()] {
                let pd = vc_to_pd_witness(&red, &vc).unwrap();
                assert_eq!(pd.size(), 2 * vc.len());
                let back = pd_to_vc_witness(&red, &pd).unwrap();
                assert!(back.len() <= pd.size() / 2);
            }
        }
    }

    #[test]
    fn non_cover_rejected() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        let red = reduce_bipartite(&p3).unwrap();
        assert!(matches!(
            vc_to_pd_witness(&red, &[1]),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            vc_to_pd_witness(&red, &[99]),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn normalization_removes_edge_copies() {
        // P3 source: cover {2}; hand-build a PD using an E1 vertex.
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        let red = reduce_split(&p3).unwrap();
        let n = 3;
        // e1 copy of edge (1,2) is 2n+1 = 7, adjacent to 1 and 2.
        // Take {2, 5, 7, 1}: pairs (2,5) cross-copy, (7,1) incidence.
        let pd = PairedSolution::from_parts(vec![2, n + 2, 7, 1], vec![(2, n + 2), (7, 1)]);
        verify_paired_dominating(&red.gprime, &pd).unwrap();
        let cover = pd_to_vc_witness(&red, &pd).unwrap();
        assert!(cover.len() <= 2);
        for (x, y) in red.source_edges() {
            assert!(cover.contains(x) || cover.contains(y));
        }
    }

    #[test]
    fn equivalence_on_small_sources() {
        let budget = OracleBudget::default().with_max_vertices(30);
        for (g, tau) in [
            (k2(), 1usize),
            (graph(3, &[(1, 2), (2, 3)]), 1),
            (graph(3, &[(1, 2), (1, 3), (2, 3)]), 2),
        ] {
            for red in [reduce_bipartite(&g).unwrap(), reduce_split(&g).unwrap()] {
                let gp = gamma_p_bruteforce(&red.gprime, &budget).unwrap();
                assert_eq!(gp.size(), 2 * tau, "variant {:?}", red.variant);
            }
        }
    }
}
