//! Vertex elimination ordering for block graphs: peel end blocks inward so
//! that any two later neighbors of an earlier vertex are adjacent.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::block::decompose::{block_cut_decomposition, decomposition_is_clique_forest};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex permutation `v_1..v_n` with the closure property
/// (`v_i v_j ∈ E` and `v_i v_k ∈ E` imply `v_j v_k ∈ E` for `i<j<k`),
/// plus the father/children structure derived from it.
#[derive(Debug, Clone)]
pub struct EliminationOrdering {
    /// position (0-based) -> vertex id
    pub order: Vec<u32>,
    /// vertex id -> position (0-based); index 0 unused
    pub position: Vec<u32>,
    /// vertex id -> father (the neighbor occurring latest in the order);
    /// `None` exactly for the last vertex
    pub father: Vec<Option<u32>>,
    /// vertex id -> children sorted ascending
    pub children: Vec<Vec<u32>>,
    /// vertex id -> emission batch; children with equal batch belong to the
    /// same block and therefore form a clique
    pub(crate) batch: Vec<u32>,
}

impl EliminationOrdering {
    /// Builds father/children/position from a given order, using the graph's
    /// adjacency. `batch` groups children into cliques; pass one batch per
    /// vertex to force singleton groups (trees).
    pub(crate) fn from_order(g: &Graph, order: Vec<u32>, batch: Vec<u32>) -> Result<Self> {
        let n = g.vertex_count();
        let mut position = vec![0u32; n as usize + 1];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let mut father = vec![None; n as usize + 1];
        let mut children = vec![Vec::new(); n as usize + 1];
        let last = *order.last().expect("order is non-empty");
        for &v in &order {
            let best = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w as usize] > position[v as usize])
                .max_by_key(|&w| position[w as usize]);
            match best {
                Some(f) => father[v as usize] = Some(f),
                None if v == last => {}
                None => {
                    return Err(Error::Invariant(format!(
                        "vertex {v} has no later neighbor but is not last"
                    )))
                }
            }
        }
        for v in 1..=n {
            if let Some(f) = father[v as usize] {
                children[f as usize].push(v);
            }
        }
        // pushed in ascending v already
        Ok(EliminationOrdering {
            order,
            position,
            father,
            children,
            batch,
        })
    }
}

/// Computes the elimination ordering of a connected block graph by peeling
/// end blocks. Deterministic: among current end blocks the one with the least
/// minimum vertex id goes first; within a block, non-cut vertices are emitted
/// ascending and the cut vertex stays for later; the final block is emitted
/// ascending.
pub fn block_elimination_ordering(g: &Graph) -> Result<EliminationOrdering> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Instance("need at least two vertices".into()));
    }
    let dec = block_cut_decomposition(g)?;
    if !decomposition_is_clique_forest(&dec) {
        return Err(Error::Instance("not a block graph: some block is not a clique".into()));
    }

    let nb = dec.blocks.len();
    let mut vertex_blocks: Vec<Vec<u32>> = vec![Vec::new(); n as usize + 1];
    let mut block_count = vec![0u32; n as usize + 1];
    for (b, verts) in dec.blocks.iter().enumerate() {
        for &v in verts {
            vertex_blocks[v as usize].push(b as u32);
            block_count[v as usize] += 1;
        }
    }
    let mut shared_count: Vec<u32> = dec
        .blocks
        .iter()
        .map(|verts| verts.iter().filter(|&&v| block_count[v as usize] >= 2).count() as u32)
        .collect();

    let mut alive = vec![true; nb];
    let mut remaining = nb;
    let mut heap: BinaryHeap<Reverse<(u32, usize)>> = BinaryHeap::new();
    for (b, verts) in dec.blocks.iter().enumerate() {
        if shared_count[b] <= 1 {
            heap.push(Reverse((verts[0], b)));
        }
    }

    let mut order = Vec::with_capacity(n as usize);
    let mut batch = vec![0u32; n as usize + 1];
    let mut batch_no = 0u32;

    while remaining > 1 {
        let Some(Reverse((_, b))) = heap.pop() else {
            return Err(Error::Invariant("no end block available".into()));
        };
        if !alive[b] {
            continue;
        }
        debug_assert!(shared_count[b] <= 1);
        batch_no += 1;
        let mut cut = None;
        for &v in &dec.blocks[b] {
            if block_count[v as usize] >= 2 {
                cut = Some(v);
            } else {
                batch[v as usize] = batch_no;
                order.push(v);
            }
        }
        alive[b] = false;
        remaining -= 1;
        let x = cut.ok_or_else(|| {
            Error::Invariant("end block with no cut vertex before the final block".into())
        })?;
        block_count[x as usize] -= 1;
        if block_count[x as usize] == 1 {
            let b2 = *vertex_blocks[x as usize]
                .iter()
                .find(|&&c| alive[c as usize])
                .ok_or_else(|| Error::Invariant("dangling cut vertex".into()))? as usize;
            shared_count[b2] -= 1;
            if remaining > 1 && shared_count[b2] <= 1 {
                heap.push(Reverse((dec.blocks[b2][0], b2)));
            }
        }
    }

    // Final block: everything not yet emitted. Original cut vertices go
    // last (ascending among themselves) so that an end block surviving to
    // the end still shows its cut vertex after the rest.
    let final_b = (0..nb)
        .find(|&b| alive[b])
        .ok_or_else(|| Error::Invariant("no final block".into()))?;
    batch_no += 1;
    let mut rest: Vec<u32> = dec.blocks[final_b]
        .iter()
        .copied()
        .filter(|&v| batch[v as usize] == 0)
        .collect();
    rest.sort_unstable_by_key(|&v| (dec.is_cut_vertex(v), v));
    for v in rest {
        batch[v as usize] = batch_no;
        order.push(v);
    }
    if order.len() != n as usize {
        return Err(Error::Invariant("ordering does not cover all vertices".into()));
    }
    EliminationOrdering::from_order(g, order, batch)
}

/// Exhaustive check of the closure property; O(n^3), intended for tests and
/// small instances.
pub fn closure_property_holds(g: &Graph, ord: &EliminationOrdering) -> bool {
    let n = g.vertex_count() as usize;
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(ord.order[i], ord.order[j]) {
                continue;
            }
            for k in j + 1..n {
                if g.has_edge(ord.order[i], ord.order[k])
                    && !g.has_edge(ord.order[j], ord.order[k])
                {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn star_ordering() {
        let g = graph(4, &[(1, 4), (2, 4), (3, 4)]);
        let ord = block_elimination_ordering(&g).unwrap();
        assert_eq!(ord.order, vec![1, 2, 3, 4]);
        assert_eq!(ord.father[1], Some(4));
        assert_eq!(ord.father[2], Some(4));
        assert_eq!(ord.father[3], Some(4));
        assert_eq!(ord.father[4], None);
        assert_eq!(ord.children[4], vec![1, 2, 3]);
        assert!(closure_property_holds(&g, &ord));
    }

    #[test]
    fn k3_ordering_uses_max_index_father() {
        let g = graph(3, &[(1, 2), (1, 3), (2, 3)]);
        let ord = block_elimination_ordering(&g).unwrap();
        assert_eq!(ord.order, vec![1, 2, 3]);
        assert_eq!(ord.father[1], Some(3));
        assert_eq!(ord.father[2], Some(3));
        assert_eq!(ord.children[3], vec![1, 2]);
        assert!(closure_property_holds(&g, &ord));
    }

    #[test]
    fn triangle_with_pendant_ordering() {
        let g = graph(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        let ord = block_elimination_ordering(&g).unwrap();
        // non-cut vertices of block {1,2,3} come first; the cut vertex 3
        // stays behind even in the final block
        assert_eq!(ord.order, vec![1, 2, 4, 3]);
        assert!(closure_property_holds(&g, &ord));
    }

    #[test]
    fn end_block_vertices_are_consecutive_with_cut_last() {
        let g = graph(7, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (4, 7)]);
        let dec = block_cut_decomposition(&g).unwrap();
        let ord = block_elimination_ordering(&g).unwrap();
        assert_eq!(ord.order, vec![1, 2, 3, 5, 6, 7, 4]);
        for (verts, _) in dec.blocks.iter().zip(&dec.block_edges) {
            let cuts: Vec<u32> = verts
                .iter()
                .copied()
                .filter(|&v| dec.is_cut_vertex(v))
                .collect();
            if cuts.len() != 1 {
                continue; // only end blocks carry the guarantee
            }
            let x = cuts[0];
            let mut others: Vec<u32> = verts
                .iter()
                .copied()
                .filter(|&v| v != x)
                .map(|v| ord.position[v as usize])
                .collect();
            others.sort_unstable();
            for w in others.windows(2) {
                assert_eq!(w[1], w[0] + 1, "end-block vertices not consecutive");
            }
            assert!(ord.position[x as usize] > *others.last().unwrap());
        }
    }

    #[test]
    fn rejects_non_block_graphs_and_tiny_inputs() {
        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(matches!(
            block_elimination_ordering(&c4),
            Err(Error::Instance(_))
        ));
        assert!(matches!(
            block_elimination_ordering(&graph(1, &[])),
            Err(Error::Instance(_))
        ));
    }

    #[test]
    fn closure_holds_on_random_block_graphs() {
        for seed in 0..40u64 {
            let g = crate::generate::random_block_graph(2 + (seed % 25) as u32 + 2, 5, seed);
            let ord = block_elimination_ordering(&g).unwrap();
            assert!(closure_property_holds(&g, &ord), "seed {seed}");
            // father = max-position later neighbor, children consistent
            for v in g.vertices() {
                match ord.father[v as usize] {
                    Some(f) => {
                        assert!(g.has_edge(v, f));
                        assert!(ord.position[f as usize] > ord.position[v as usize]);
                        assert!(ord.children[f as usize].contains(&v));
                    }
                    None => assert_eq!(ord.position[v as usize] as usize, ord.order.len() - 1),
                }
            }
        }
    }
}
