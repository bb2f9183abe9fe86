//! Block–cut decomposition by one iterative depth-first search with low-link
//! values.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices of a
/// connected graph. Two blocks share at most one vertex; a vertex is a cut
/// vertex iff it lies in two or more blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted ascending; blocks sorted lexicographically.
    pub blocks: Vec<Vec<u32>>,
    /// Sorted ascending.
    pub cut_vertices: Vec<u32>,
    /// Edges of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<(u32, u32)>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: u32) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Computes the decomposition in O(n + m). Fails on disconnected input.
pub fn block_cut_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(Error::Instance("graph is not connected".into()));
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![1]],
            cut_vertices: vec![],
            block_edges: vec![vec![]],
        });
    }

    const UNSET: u32 = 0;
    let root = 1u32;
    let mut disc = vec![UNSET; n as usize + 1];
    let mut low = vec![UNSET; n as usize + 1];
    let mut parent = vec![0u32; n as usize + 1];
    let mut next_edge = vec![0usize; n as usize + 1];
    let mut is_cut = vec![false; n as usize + 1];
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut stack = vec![root];
    let mut timer = 1u32;
    let mut root_children = 0u32;
    let mut raw_blocks: Vec<Vec<(u32, u32)>> = Vec::new();

    disc[root as usize] = timer;
    low[root as usize] = timer;

    while let Some(&u) = stack.last() {
        let ui = u as usize;
        if next_edge[ui] < g.degree(u) {
            let v = g.neighbors(u)[next_edge[ui]];
            next_edge[ui] += 1;
            let vi = v as usize;
            if disc[vi] == UNSET {
                parent[vi] = u;
                if u == root {
                    root_children += 1;
                }
                timer += 1;
                disc[vi] = timer;
                low[vi] = timer;
                edge_stack.push((u, v));
                stack.push(v);
            } else if v != parent[ui] && disc[vi] < disc[ui] {
                // back edge
                edge_stack.push((u, v));
                low[ui] = low[ui].min(disc[vi]);
            }
        } else {
            stack.pop();
            let p = parent[ui];
            if p != 0 {
                let pi = p as usize;
                low[pi] = low[pi].min(low[ui]);
                if low[ui] >= disc[pi] {
                    if p != root {
                        is_cut[pi] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, u) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }
    is_cut[root as usize] = root_children >= 2;
    debug_assert!(edge_stack.is_empty());

    // Materialize vertex sets and sort for determinism.
    let mut items: Vec<(Vec<u32>, Vec<(u32, u32)>)> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            let mut verts: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            verts.sort_unstable();
            verts.dedup();
            for e in edges.iter_mut() {
                if e.0 > e.1 {
                    *e = (e.1, e.0);
                }
            }
            edges.sort_unstable();
            (verts, edges)
        })
        .collect();
    items.sort();
    let (blocks, block_edges): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    let cut_vertices: Vec<u32> = (1..=n).filter(|&v| is_cut[v as usize]).collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_edges,
    })
}

/// True iff every block of the connected graph `g` induces a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let dec = block_cut_decomposition(g)?;
    Ok(decomposition_is_clique_forest(&dec))
}

pub(crate) fn decomposition_is_clique_forest(dec: &BlockDecomposition) -> bool {
    dec.blocks.iter().zip(&dec.block_edges).all(|(verts, edges)| {
        let c = verts.len() as u64;
        edges.len() as u64 == c * (c - 1) / 2
    })
}
