//! Paired-dominating solutions and the validity check every solver output
//! must pass.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex set together with an explicit pairing (a perfect matching on the
/// set in the host graph). Canonical form: vertices ascending, each pair
/// `(a, b)` with `a < b`, pairs sorted ascending.
///
/// JSON form: `{"size": n, "vertices": [..], "pairs": [[a,b], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SolutionJson", into = "SolutionJson")]
pub struct PairedSolution {
    vertices: Vec<u32>,
    pairs: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    size: usize,
    vertices: Vec<u32>,
    pairs: Vec<(u32, u32)>,
}

impl From<PairedSolution> for SolutionJson {
    fn from(s: PairedSolution) -> Self {
        SolutionJson {
            size: s.vertices.len(),
            vertices: s.vertices,
            pairs: s.pairs,
        }
    }
}

impl TryFrom<SolutionJson> for PairedSolution {
    type Error = String;

    fn try_from(j: SolutionJson) -> std::result::Result<Self, String> {
        if j.size != j.vertices.len() {
            return Err(format!(
                "size field is {} but {} vertices listed",
                j.size,
                j.vertices.len()
            ));
        }
        Ok(PairedSolution::from_parts(j.vertices, j.pairs))
    }
}

impl PairedSolution {
    /// Builds a solution from its pairs; the vertex set is their union.
    pub fn from_pairs(pairs: Vec<(u32, u32)>) -> Self {
        let mut vertices = Vec::with_capacity(pairs.len() * 2);
        for &(a, b) in &pairs {
            vertices.push(a);
            vertices.push(b);
        }
        PairedSolution::from_parts(vertices, pairs)
    }

    /// Builds a (possibly invalid) candidate solution. No structural checks
    /// beyond normalization; validity is the job of
    /// [`verify_paired_dominating`].
    pub fn from_parts(mut vertices: Vec<u32>, mut pairs: Vec<(u32, u32)>) -> Self {
        vertices.sort_unstable();
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        PairedSolution { vertices, pairs }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solution serialization cannot fail")
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Why a candidate solution failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyFailure {
    /// The pairs do not partition the vertex set into disjoint 2-sets (or an
    /// id is outside the graph).
    NotPartition,
    /// Some pair is not an edge of the host graph.
    NonEdgePair,
    /// The vertex set does not dominate the graph.
    NotDominating,
}

impl VerifyFailure {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyFailure::NotPartition => "not-partition",
            VerifyFailure::NonEdgePair => "non-edge-pair",
            VerifyFailure::NotDominating => "not-dominating",
        }
    }
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The acceptance gate for every solver output: `sol.vertices` must dominate
/// `g` and `sol.pairs` must partition `sol.vertices` into edges of `g`.
pub fn verify_paired_dominating(
    g: &Graph,
    sol: &PairedSolution,
) -> std::result::Result<(), VerifyFailure> {
    let n = g.vertex_count();
    // Partition: every vertex in exactly one pair, no stray ids.
    let mut used = vec![0u8; n as usize + 1];
    for &v in sol.vertices() {
        if v == 0 || v > n {
            return Err(VerifyFailure::NotPartition);
        }
        if used[v as usize] != 0 {
            return Err(VerifyFailure::NotPartition); // duplicate vertex entry
        }
        used[v as usize] = 1;
    }
    if sol.pairs().len() * 2 != sol.vertices().len() {
        return Err(VerifyFailure::NotPartition);
    }
    for &(a, b) in sol.pairs() {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(VerifyFailure::NotPartition);
        }
        for v in [a, b] {
            if used[v as usize] != 1 {
                return Err(VerifyFailure::NotPartition);
            }
            used[v as usize] = 2;
        }
    }
    // Every pair is an edge of g.
    for &(a, b) in sol.pairs() {
        if !g.has_edge(a, b) {
            return Err(VerifyFailure::NonEdgePair);
        }
    }
    // Domination.
    match g.is_dominating(sol.vertices()) {
        Ok(true) => Ok(()),
        Ok(false) => Err(VerifyFailure::NotDominating),
        Err(_) => Err(VerifyFailure::NotPartition),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::parse("4 3\n1 2\n2 3\n3 4").unwrap()
    }

    #[test]
    fn valid_solution_on_p4() {
        let sol = PairedSolution::from_pairs(vec![(3, 2)]);
        assert_eq!(sol.vertices(), &[2, 3]);
        assert_eq!(sol.pairs(), &[(2, 3)]);
        assert_eq!(verify_paired_dominating(&p4(), &sol), Ok(()));
    }

    #[test]
    fn non_edge_pair_detected() {
        let sol = PairedSolution::from_pairs(vec![(1, 4)]);
        assert_eq!(
            verify_paired_dominating(&p4(), &sol),
            Err(VerifyFailure::NonEdgePair)
        );
    }

    #[test]
    fn not_dominating_detected() {
        let sol = PairedSolution::from_pairs(vec![(1, 2)]);
        assert_eq!(
            verify_paired_dominating(&p4(), &sol),
            Err(VerifyFailure::NotDominating)
        );
    }

    #[test]
    fn partition_violations_detected() {
        let g = p4();
        // vertex listed but never paired
        let sol = PairedSolution::from_parts(vec![1, 2, 3], vec![(1, 2)]);
        assert_eq!(
            verify_paired_dominating(&g, &sol),
            Err(VerifyFailure::NotPartition)
        );
        // vertex paired twice
        let sol = PairedSolution::from_parts(vec![1, 2, 3], vec![(1, 2), (2, 3)]);
        assert_eq!(
            verify_paired_dominating(&g, &sol),
            Err(VerifyFailure::NotPartition)
        );
        // pair member missing from the vertex list
        let sol = PairedSolution::from_parts(vec![2], vec![(2, 3)]);
        assert_eq!(
            verify_paired_dominating(&g, &sol),
            Err(VerifyFailure::NotPartition)
        );
        // id outside the graph
        let sol = PairedSolution::from_parts(vec![2, 9], vec![(2, 9)]);
        assert_eq!(
            verify_paired_dominating(&g, &sol),
            Err(VerifyFailure::NotPartition)
        );
    }

    #[test]
    fn verify_implies_dominating() {
        let g = p4();
        let sol = PairedSolution::from_pairs(vec![(2, 3)]);
        if verify_paired_dominating(&g, &sol).is_ok() {
            assert!(g.is_dominating(sol.vertices()).unwrap());
        }
    }

    #[test]
    fn json_shape_is_pinned() {
        let sol = PairedSolution::from_pairs(vec![(3, 2)]);
        assert_eq!(
            sol.to_json(),
            r#"{"size":2,"vertices":[2,3],"pairs":[[2,3]]}"#
        );
        let back = PairedSolution::from_json(&sol.to_json()).unwrap();
        assert_eq!(back, sol);
    }

    #[test]
    fn json_size_mismatch_rejected() {
        let err = PairedSolution::from_json(r#"{"size":3,"vertices":[2,3],"pairs":[[2,3]]}"#);
        assert!(err.is_err());
    }
}
