//! Label-propagation solvers for minimum paired domination on block graphs
//! and trees.
//!
//! Both solvers sweep the elimination ordering once. An undominated vertex
//! forces its father into the solution (label 1, partner pending); a
//! dominated vertex settles its pending children: children from the same
//! block form a clique and are paired greedily among themselves, and each
//! leftover is paired either with the current vertex or with one of its own
//! unused children. The labels carry no pairing by themselves; the `partner`
//! field records one so the output is a checkable matching, not just a set.
//!
//! Within one block's emission batch the sweep is dominated-first: members
//! that are already dominated settle their pending children before any
//! undominated member forces the block's cut vertex. Blocks are cliques, so
//! a member that enters the solution dominates the whole batch, and an
//! undominated member firing early would pull in a second, redundant vertex.
//! A strict left-to-right pass exhibits exactly that waste (siblings in one
//! clique where a later sibling must pair a pending child below it). At most
//! one undominated member per batch ever fires, and every batch member has
//! the same father, so the father/children structure is unaffected by the
//! in-batch processing order.

use crate::block::ordering::{block_elimination_ordering, EliminationOrdering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::clique_union_pairing;
use crate::solution::PairedSolution;

/// Per-vertex solver state after a run. `label` is 0 (not selected),
/// 1 (selected with partner pending, a transient state) or 2 (selected and
/// paired); `partner` is set exactly for label-2 vertices.
#[derive(Debug, Clone)]
pub struct VertexLabels {
    /// vertex id -> dominated flag (index 0 unused)
    pub dominated: Vec<bool>,
    /// vertex id -> 0 | 1 | 2
    pub label: Vec<u8>,
    /// vertex id -> partner id for label-2 vertices
    pub partner: Vec<Option<u32>>,
}

/// Minimum paired-dominating set of a connected block graph, with pairs.
pub fn mpdb(g: &Graph) -> Result<PairedSolution> {
    Ok(mpdb_labeled(g)?.0)
}

/// Like [`mpdb`], also returning the final label state.
pub fn mpdb_labeled(g: &Graph) -> Result<(PairedSolution, VertexLabels)> {
    let ord = block_elimination_ordering(g)?;
    run_labeling(g, &ord)
}

/// Minimum paired-dominating set of a tree, with pairs. Uses the reverse
/// breadth-first ordering rooted at vertex `n`; on trees no two pending
/// children are adjacent, so every child group is a singleton.
pub fn mpdt(g: &Graph) -> Result<PairedSolution> {
    Ok(mpdt_labeled(g)?.0)
}

/// Like [`mpdt`], also returning the final label state.
pub fn mpdt_labeled(g: &Graph) -> Result<(PairedSolution, VertexLabels)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Instance("need at least two vertices".into()));
    }
    if !g.is_connected() || g.edge_count() != n as usize - 1 {
        return Err(Error::Instance("not a tree".into()));
    }
    let ord = reverse_bfs_ordering(g);
    run_labeling(g, &ord)
}

/// Reverse BFS from root `n`: farthest vertices first, root last. Neighbors
/// are enqueued descending so each level reads ascending after reversal.
fn reverse_bfs_ordering(g: &Graph) -> EliminationOrdering {
    let n = g.vertex_count();
    let root = n;
    let mut seq = Vec::with_capacity(n as usize);
    let mut seen = vec![false; n as usize + 1];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    seen[root as usize] = true;
    while let Some(u) = queue.pop_front() {
        seq.push(u);
        for &v in g.neighbors(u).iter().rev() {
            if !seen[v as usize] {
                seen[v as usize] = true;
                queue.push_back(v);
            }
        }
    }
    seq.reverse();
    // Singleton batches: in a tree distinct children are never adjacent.
    let batch: Vec<u32> = (0..=n).collect();
    EliminationOrdering::from_order(g, seq, batch)
        .expect("tree ordering always yields a valid father structure")
}

fn run_labeling(g: &Graph, ord: &EliminationOrdering) -> Result<(PairedSolution, VertexLabels)> {
    let n = g.vertex_count();
    let ni = n as usize;
    let mut dominated = vec![false; ni + 1];
    let mut label = vec![0u8; ni + 1];
    let mut partner = vec![0u32; ni + 1];
    let last = *ord.order.last().expect("non-empty ordering");

    let dominate_closed = |dominated: &mut Vec<bool>, v: u32| {
        dominated[v as usize] = true;
        for &w in g.neighbors(v) {
            dominated[w as usize] = true;
        }
    };

    let settle = |v: u32,
                      dominated: &mut Vec<bool>,
                      label: &mut Vec<u8>,
                      partner: &mut Vec<u32>|
     -> Result<()> {
        let vi = v as usize;
        if !dominated[vi] {
            let Some(f) = ord.father[vi] else {
                return Ok(()); // the root is handled by the final fix-up
            };
            if label[f as usize] != 0 {
                return Err(Error::Invariant(format!(
                    "father {f} already selected while child {v} is undominated"
                )));
            }
            label[f as usize] = 1;
            dominate_closed(dominated, f);
        }
        if !dominated[vi] {
            return Ok(());
        }
        // pending children, grouped into cliques by emission batch
        let mut pending: Vec<u32> = ord.children[vi]
            .iter()
            .copied()
            .filter(|&w| label[w as usize] == 1)
            .collect();
        if pending.is_empty() {
            return Ok(());
        }
        for &w in &pending {
            label[w as usize] = 2;
        }
        pending.sort_unstable_by_key(|&w| (ord.batch[w as usize], w));
        let mut groups: Vec<Vec<u32>> = Vec::new();
        for &w in &pending {
            match groups.last_mut() {
                Some(group) if ord.batch[group[0] as usize] == ord.batch[w as usize] => {
                    group.push(w)
                }
                _ => groups.push(vec![w]),
            }
        }
        let (pairs, mut leftover) = clique_union_pairing(&groups);
        for (a, b) in pairs {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        leftover.sort_unstable();
        if let Some((&w, rest)) = leftover.split_first() {
            label[vi] = 2;
            dominate_closed(dominated, v);
            partner[vi] = w;
            partner[w as usize] = v;
            for &x in rest {
                let spare = ord.children[x as usize]
                    .iter()
                    .copied()
                    .find(|&c| label[c as usize] == 0)
                    .ok_or_else(|| {
                        Error::Invariant(format!("no unused child available to pair with {x}"))
                    })?;
                label[spare as usize] = 2;
                partner[x as usize] = spare;
                partner[spare as usize] = x;
            }
        }
        Ok(())
    };

    let mut start = 0usize;
    while start < ni {
        let b = ord.batch[ord.order[start] as usize];
        let mut end = start + 1;
        while end < ni && ord.batch[ord.order[end] as usize] == b {
            end += 1;
        }
        let mut members: Vec<u32> = ord.order[start..end].to_vec();
        members.sort_unstable();
        let mut done = vec![false; members.len()];
        let mut left = members.len();
        while left > 0 {
            let mut progressed = false;
            for (i, &m) in members.iter().enumerate() {
                if !done[i] && dominated[m as usize] {
                    settle(m, &mut dominated, &mut label, &mut partner)?;
                    done[i] = true;
                    left -= 1;
                    progressed = true;
                }
            }
            if left == 0 {
                break;
            }
            if !progressed {
                // everyone left is undominated: let the smallest non-root
                // member force the shared father (the root alone cannot)
                let pick = members
                    .iter()
                    .enumerate()
                    .filter(|&(i, &m)| !done[i] && m != last)
                    .map(|(i, _)| i)
                    .next()
                    .or_else(|| (0..members.len()).find(|&i| !done[i]))
                    .expect("some member remains");
                settle(members[pick], &mut dominated, &mut label, &mut partner)?;
                done[pick] = true;
                left -= 1;
            }
        }
        start = end;
    }

    if !dominated[last as usize] || label[last as usize] == 1 {
        label[last as usize] = 2;
        let w = ord.children[last as usize]
            .iter()
            .copied()
            .find(|&c| label[c as usize] == 0)
            .ok_or_else(|| {
                Error::Invariant("no unused child available for the final vertex".into())
            })?;
        label[w as usize] = 2;
        partner[last as usize] = w;
        partner[w as usize] = last;
        dominated[last as usize] = true;
    }

    let mut pairs = Vec::new();
    for v in 1..=n {
        let vi = v as usize;
        match label[vi] {
            2 => {
                let p = partner[vi];
                if p == 0 || label[p as usize] != 2 || partner[p as usize] != v {
                    return Err(Error::Invariant(format!("asymmetric partner at {v}")));
                }
                if v < p {
                    pairs.push((v, p));
                }
            }
            1 => {
                return Err(Error::Invariant(format!(
                    "vertex {v} left selected without a partner"
                )))
            }
            _ => {}
        }
    }
    let labels = VertexLabels {
        dominated,
        label,
        partner: partner
            .iter()
            .map(|&p| if p == 0 { None } else { Some(p) })
            .collect(),
    };
    Ok((PairedSolution::from_pairs(pairs), labels))
}
