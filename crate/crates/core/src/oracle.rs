//! Exponential-time ground-truth solvers. Their only virtue is obvious
//! correctness: candidate sizes are enumerated ascending and subsets in
//! lexicographic order, so minimality is structural and the reported optimum
//! is the lexicographically smallest one.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::perfect_matching_on_subset;
use crate::solution::PairedSolution;

/// Bounds on oracle work. Exceeding either bound aborts with a capacity
/// error instead of running forever.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_vertices: u32,
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 16,
            max_subsets: 50_000_000,
        }
    }
}

impl OracleBudget {
    /// Default budget for verifying reduction outputs, which are larger than
    /// direct instances.
    pub fn for_reductions() -> Self {
        OracleBudget {
            max_vertices: 20,
            ..OracleBudget::default()
        }
    }

    pub fn with_max_vertices(mut self, max_vertices: u32) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    pub fn with_max_subsets(mut self, max_subsets: u64) -> Self {
        self.max_subsets = max_subsets;
        self
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        let cap = self.max_vertices.min(64);
        if n > cap {
            return Err(Error::Capacity(format!(
                "oracle limited to {cap} vertices, got {n}"
            )));
        }
        Ok(())
    }
}

/// Minimum paired-dominating set by exhaustive search. Enumerates candidate
/// sizes 2, 4, 6, ... (odd sizes cannot carry a perfect matching); for each
/// subset checks domination, then a perfect matching on the induced
/// subgraph.
pub fn gamma_p_bruteforce(g: &Graph, budget: &OracleBudget) -> Result<PairedSolution> {
    if g.has_isolated_vertex() {
        return Err(Error::Instance(
            "paired domination is undefined on graphs with isolated vertices".into(),
        ));
    }
    budget.admit(g)?;
    let n = g.vertex_count();
    let mut search = SubsetSearch::new(g, budget.max_subsets);
    let mut k = 2;
    while k <= n {
        if let Some(vertices) = search.find_dominating_matchable(k)? {
            let pairs = perfect_matching_on_subset(g, &vertices).ok_or_else(|| {
                Error::Invariant("matching vanished on re-check of oracle subset".into())
            })?;
            return Ok(PairedSolution::from_pairs(pairs));
        }
        k += 2;
    }
    // Endpoints of any maximal matching paired-dominate, so this is dead on
    // isolate-free inputs.
    Err(Error::Invariant(
        "no paired-dominating set found on an isolate-free graph".into(),
    ))
}

/// Minimum vertex cover by exhaustive search, sizes ascending, lexicographic
/// smallest optimum returned.
pub fn min_vertex_cover_bruteforce(g: &Graph, budget: &OracleBudget) -> Result<Vec<u32>> {
    budget.admit(g)?;
    let n = g.vertex_count();
    let mut search = CoverSearch::new(g, budget.max_subsets);
    for k in 0..=n {
        if let Some(cover) = search.find_cover(k)? {
            return Ok(cover);
        }
    }
    Err(Error::Invariant("vertex set itself must be a cover".into()))
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    n: u32,
    closed: Vec<u64>, // closed[v] = bitmask of N[v], bit v-1 set
    full: u64,
    max_closed_deg: u32,
    tested: u64,
    limit: u64,
}

impl<'a> SubsetSearch<'a> {
    fn new(g: &'a Graph, limit: u64) -> Self {
        let n = g.vertex_count();
        let mut closed = vec![0u64; n as usize + 1];
        let mut max_closed_deg = 1;
        for v in g.vertices() {
            let mut mask = 1u64 << (v - 1);
            for &w in g.neighbors(v) {
                mask |= 1 << (w - 1);
            }
            closed[v as usize] = mask;
            max_closed_deg = max_closed_deg.max(mask.count_ones());
        }
        let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
        SubsetSearch {
            g,
            n,
            closed,
            full,
            max_closed_deg,
            tested: 0,
            limit,
        }
    }

    fn find_dominating_matchable(&mut self, k: u32) -> Result<Option<Vec<u32>>> {
        let mut chosen = Vec::with_capacity(k as usize);
        self.rec(1, k, 0, &mut chosen)
    }

    fn rec(
        &mut self,
        next: u32,
        left: u32,
        dom: u64,
        chosen: &mut Vec<u32>,
    ) -> Result<Option<Vec<u32>>> {
        if left == 0 {
            self.tested += 1;
            if self.tested > self.limit {
                return Err(Error::Capacity(format!(
                    "oracle subset budget of {} exceeded",
                    self.limit
                )));
            }
            if dom == self.full && perfect_matching_on_subset(self.g, chosen).is_some() {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        if self.n + 1 - next < left {
            return Ok(None);
        }
        let undominated = self.full & !dom;
        if undominated.count_ones() > left * self.max_closed_deg {
            return Ok(None);
        }
        if undominated != 0 {
            // The lowest undominated vertex must eventually get a neighbor
            // (or itself) picked, and picks only move rightward.
            let u = undominated.trailing_zeros() + 1;
            let future = shifted_ones(next);
            if self.closed[u as usize] & future == 0 {
                return Ok(None);
            }
        }
        for v in next..=self.n {
            chosen.push(v);
            let found = self.rec(v + 1, left - 1, dom | self.closed[v as usize], chosen)?;
            if found.is_some() {
                return Ok(found);
            }
            chosen.pop();
        }
        Ok(None)
    }
}

/// Bitmask of vertices with id >= `next` (as bits id-1).
fn shifted_ones(next: u32) -> u64 {
    if next >= 65 {
        0
    } else {
        !0u64 << (next - 1)
    }
}

struct CoverSearch {
    n: u32,
    edges: Vec<(u32, u32)>,
    incident: Vec<Vec<u64>>, // per vertex, bitset over edge indices
    words: usize,
    tested: u64,
    limit: u64,
}

impl CoverSearch {
    fn new(g: &Graph, limit: u64) -> Self {
        let edges = g.edges();
        let words = edges.len().div_ceil(64).max(1);
        let mut incident = vec![vec![0u64; words]; g.vertex_count() as usize + 1];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u as usize][i / 64] |= 1 << (i % 64);
            incident[v as usize][i / 64] |= 1 << (i % 64);
        }
        CoverSearch {
            n: g.vertex_count(),
            edges,
            incident,
            words,
            tested: 0,
            limit,
        }
    }

    fn all_covered(&self, covered: &[u64]) -> bool {
        let m = self.edges.len();
        (0..m).all(|i| covered[i / 64] >> (i % 64) & 1 == 1)
    }

    fn first_uncovered(&self, covered: &[u64]) -> Option<usize> {
        let m = self.edges.len();
        (0..m).find(|&i| covered[i / 64] >> (i % 64) & 1 == 0)
    }

    fn find_cover(&mut self, k: u32) -> Result<Option<Vec<u32>>> {
        let covered = vec![0u64; self.words];
        let mut chosen = Vec::with_capacity(k as usize);
        self.rec(1, k, covered, &mut chosen)
    }

    fn rec(
        &mut self,
        next: u32,
        left: u32,
        covered: Vec<u64>,
        chosen: &mut Vec<u32>,
    ) -> Result<Option<Vec<u32>>> {
        if left == 0 {
            self.tested += 1;
            if self.tested > self.limit {
                return Err(Error::Capacity(format!(
                    "oracle subset budget of {} exceeded",
                    self.limit
                )));
            }
            if self.all_covered(&covered) {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        if self.n + 1 - next < left {
            return Ok(None);
        }
        if let Some(e) = self.first_uncovered(&covered) {
            let (u, v) = self.edges[e];
            if u.max(v) < next {
                return Ok(None); // neither endpoint can still be picked
            }
        }
        for v in next..=self.n {
            let mut cov = covered.clone();
            for (w, inc) in cov.iter_mut().zip(&self.incident[v as usize]) {
                *w |= inc;
            }
            chosen.push(v);
            let found = self.rec(v + 1, left - 1, cov, chosen)?;
            if found.is_some() {
                return Ok(found);
            }
            chosen.pop();
        }
        Ok(None)
    }
}
