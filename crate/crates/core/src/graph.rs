//! Simple undirected graphs with 1-based vertex ids.
//!
//! Text format: the first significant line is `n m`, followed by exactly `m`
//! lines `u v` (single space, LF endings). Lines starting with `#` are
//! comments and blank lines are ignored. Self-loops and duplicate edges are
//! rejected with the offending line number.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph: no self-loops, no duplicate edges, adjacency
/// lists sorted ascending. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    m: usize,
    adj: Vec<Vec<u32>>, // index 0 unused
}

impl Graph {
    /// Builds a graph from an edge list. Ids must lie in `1..=n`.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("vertex count must be positive".into()));
        }
        let mut adj = vec![Vec::new(); n as usize + 1];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("self-loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in adj.iter_mut().skip(1) {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Argument("duplicate edge".into()));
            }
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    /// Parses the edge-list text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(u32, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let mut it = line.split_whitespace();
                    let n = parse_token(it.next(), lineno, "vertex count")?;
                    let m: u32 = parse_token(it.next(), lineno, "edge count")?;
                    if it.next().is_some() {
                        return Err(Error::parse(lineno, "expected exactly `n m`"));
                    }
                    if n == 0 {
                        return Err(Error::parse(lineno, "vertex count must be positive"));
                    }
                    header = Some((n, m as usize));
                }
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::parse(
                            lineno,
                            format!("unexpected extra line after {m} edges"),
                        ));
                    }
                    let mut it = line.split_whitespace();
                    let u: u32 = parse_token(it.next(), lineno, "endpoint")?;
                    let v: u32 = parse_token(it.next(), lineno, "endpoint")?;
                    if it.next().is_some() {
                        return Err(Error::parse(lineno, "expected exactly `u v`"));
                    }
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(Error::parse(
                            lineno,
                            format!("vertex id out of range 1..={n}"),
                        ));
                    }
                    if u == v {
                        return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
                    }
                    let key = (u.min(v), u.max(v));
                    if !seen.insert(key) {
                        return Err(Error::parse(
                            lineno,
                            format!("duplicate edge {} {}", key.0, key.1),
                        ));
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(last_line + 1, "missing `n m` header"))?;
        if edges.len() != m {
            return Err(Error::parse(
                last_line + 1,
                format!("expected {m} edges, found {}", edges.len()),
            ));
        }
        Graph::from_edges(n, &edges)
    }

    /// Canonical text form: header plus edges sorted ascending.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbors of `v`, sorted ascending. Panics if `v` is out of range.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v
            && u >= 1
            && v >= 1
            && u <= self.n
            && v <= self.n
            && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.degree(v) == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n as usize + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// True iff every vertex is in `s` or adjacent to a member of `s`.
    pub fn is_dominating(&self, s: &[u32]) -> Result<bool> {
        let mut covered = vec![false; self.n as usize + 1];
        for &v in s {
            if v == 0 || v > self.n {
                return Err(Error::Argument(format!(
                    "vertex id {v} out of range 1..={}",
                    self.n
                )));
            }
            covered[v as usize] = true;
            for &w in self.neighbors(v) {
                covered[w as usize] = true;
            }
        }
        Ok(covered.iter().skip(1).all(|&c| c))
    }

    /// Induced subgraph on `verts`, relabelled `1..=k` in ascending id order.
    /// Returns the subgraph and the new-id -> old-id map (index 0 unused).
    pub fn induced_subgraph(&self, verts: &[u32]) -> Result<(Graph, Vec<u32>)> {
        let mut old_ids: Vec<u32> = verts.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        if old_ids.iter().any(|&v| v == 0 || v > self.n) {
            return Err(Error::Argument("vertex id out of range".into()));
        }
        let mut new_id = vec![0u32; self.n as usize + 1];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v as usize] = i as u32 + 1;
        }
        let mut edges = Vec::new();
        for &v in &old_ids {
            for &w in self.neighbors(v) {
                if v < w && new_id[w as usize] != 0 {
                    edges.push((new_id[v as usize], new_id[w as usize]));
                }
            }
        }
        let mut map = Vec::with_capacity(old_ids.len() + 1);
        map.push(0);
        map.extend_from_slice(&old_ids);
        Ok((Graph::from_edges(old_ids.len() as u32, &edges)?, map))
    }
}

fn parse_token<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed {what}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: u32) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_k2() {
        let g = Graph::parse("2 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn parse_p4() {
        let g = Graph::parse("4 3\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn parse_rejects_self_loop_with_line() {
        let err = Graph::parse("3 2\n1 2\n1 1").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("self-loop"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = Graph::parse("3 2\n1 2\n2 1").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            Graph::parse("2 1\n1 3"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_rejects_wrong_edge_count() {
        assert!(Graph::parse("3 2\n1 2").is_err());
        assert!(Graph::parse("3 1\n1 2\n2 3").is_err());
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = Graph::parse("# path\n\n4 3\n1 2\n# middle\n2 3\n3 4\n").unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn dominating_examples() {
        let p4 = path(4);
        assert!(p4.is_dominating(&[2, 3]).unwrap());
        assert!(!p4.is_dominating(&[1]).unwrap());
        assert!(p4.is_dominating(&[]).is_ok());
        assert!(!p4.is_dominating(&[]).unwrap());
        assert!(p4.is_dominating(&[9]).is_err());
    }

    #[test]
    fn connectivity_and_isolates() {
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert!(!g.is_connected());
        assert!(g.has_isolated_vertex());
        assert!(path(5).is_connected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p4 = path(4);
        let (sub, map) = p4.induced_subgraph(&[2, 3, 4]).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(map[1..], [2, 3, 4]);
    }

    #[test]
    fn serialize_roundtrip_canonical() {
        let g = Graph::from_edges(4, &[(3, 4), (1, 2), (2, 3)]).unwrap();
        let text = g.serialize();
        assert_eq!(text, "4 3\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }
}
