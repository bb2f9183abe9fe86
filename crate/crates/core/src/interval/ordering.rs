//! Intersection graph and left-endpoint ordering of an interval family.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::rep::IntervalRep;

/// Vertices sorted by increasing left endpoint (ties by right endpoint, then
/// id), with the min-index father: `F(u_i)` is the earliest-ordered earlier
/// neighbor of `u_i`, and `F(u_1) = u_1`.
#[derive(Debug, Clone)]
pub struct LeftOrdering {
    /// position (0-based) -> vertex id
    pub order: Vec<u32>,
    /// vertex id -> position (0-based); index 0 unused
    pub position: Vec<u32>,
    /// vertex id -> father vertex id; equals the vertex itself only for the
    /// first position
    pub father: Vec<u32>,
}

impl LeftOrdering {
    pub fn father_of(&self, v: u32) -> u32 {
        self.father[v as usize]
    }
}

/// Builds the intersection graph (closed intervals intersect iff
/// `max(a,c) <= min(b,d)`) and the left ordering by a sweep over endpoints.
/// Fails if the resulting graph is disconnected.
pub fn interval_graph(rep: &IntervalRep) -> Result<(Graph, LeftOrdering)> {
    let n = rep.len() as u32;
    let mut order: Vec<u32> = (1..=n).collect();
    order.sort_unstable_by_key(|&id| {
        let (a, b) = rep.get(id);
        (a, b, id)
    });

    // Sweep in left order; everything still alive intersects the newcomer.
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut active: BinaryHeap<Reverse<(i64, u32)>> = BinaryHeap::new();
    for &id in &order {
        let (a, b) = rep.get(id);
        while let Some(&Reverse((b_old, _))) = active.peek() {
            if b_old >= a {
                break;
            }
            active.pop();
        }
        for &Reverse((_, other)) in active.iter() {
            edges.push((other, id));
        }
        active.push(Reverse((b, id)));
    }
    let graph = Graph::from_edges(n, &edges)?;
    if !graph.is_connected() {
        return Err(Error::Instance(
            "interval family induces a disconnected graph".into(),
        ));
    }

    let mut position = vec![0u32; n as usize + 1];
    for (i, &id) in order.iter().enumerate() {
        position[id as usize] = i as u32;
    }
    // father = earliest position whose interval is still alive at a_i; a
    // single forward pointer suffices because left endpoints are sorted.
    let mut father = vec![0u32; n as usize + 1];
    let mut probe = 0usize;
    for (i, &id) in order.iter().enumerate() {
        let (a, _) = rep.get(id);
        while rep.get(order[probe]).1 < a {
            probe += 1;
        }
        father[id as usize] = if probe < i { order[probe] } else { id };
    }
    Ok((graph, LeftOrdering { order, position, father }))
}

/// Checks that whenever a later vertex is adjacent to an earlier one, the
/// earlier one is adjacent to everything in between. O(n^3), for tests and
/// small instances.
pub fn left_ordering_property_holds(g: &Graph, ord: &LeftOrdering) -> bool {
    let n = g.vertex_count() as usize;
    for i in 0..n {
        for j in 0..i {
            if !g.has_edge(ord.order[i], ord.order[j]) {
                continue;
            }
            for k in j + 1..=i {
                if !g.has_edge(ord.order[j], ord.order[k]) {
                    return false;
                }
            }
        }
    }
    true
}
