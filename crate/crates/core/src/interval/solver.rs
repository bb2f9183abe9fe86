//! Linear-time minimum paired domination on connected interval graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::ordering::LeftOrdering;
use crate::solution::PairedSolution;

/// Sweeps the left ordering from right to left. When an undominated vertex is
/// met, its father and grandfather are added as a pair (or the vertex with
/// its own father near the front). Domination is marked over the closed
/// neighborhoods of the added vertices only; the ordering guarantees that
/// covers everything that matters. Added pairs always sit strictly left of
/// the previous pair, so no vertex is ever added twice (checked at runtime).
pub fn mpdi(g: &Graph, ord: &LeftOrdering) -> Result<PairedSolution> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Instance("need at least two vertices".into()));
    }
    if ord.order.len() != n as usize {
        return Err(Error::Argument("ordering does not match the graph".into()));
    }
    for (i, &v) in ord.order.iter().enumerate() {
        if i > 0 && ord.father_of(v) == v {
            return Err(Error::Instance(
                "interval graph is disconnected under the given ordering".into(),
            ));
        }
    }

    let mut dominated = vec![false; n as usize + 1];
    let mut in_solution = vec![false; n as usize + 1];
    let mut pairs: Vec<(u32, u32)> = Vec::new();

    let add_pair = |a: u32,
                    b: u32,
                    in_solution: &mut Vec<bool>,
                    pairs: &mut Vec<(u32, u32)>|
     -> Result<()> {
        for v in [a, b] {
            if in_solution[v as usize] {
                return Err(Error::Invariant(format!(
                    "vertex {v} would enter the solution twice"
                )));
            }
            in_solution[v as usize] = true;
        }
        pairs.push((a, b));
        Ok(())
    };
    let dominate_closed = |dominated: &mut Vec<bool>, v: u32| {
        dominated[v as usize] = true;
        for &w in g.neighbors(v) {
            dominated[w as usize] = true;
        }
    };

    for i in (0..n as usize).rev() {
        let u = ord.order[i];
        if dominated[u as usize] {
            continue;
        }
        let f = ord.father_of(u);
        if f != u {
            let ff = ord.father_of(f);
            if ff != f {
                add_pair(f, ff, &mut in_solution, &mut pairs)?;
                dominate_closed(&mut dominated, f);
                dominate_closed(&mut dominated, ff);
            } else {
                add_pair(u, f, &mut in_solution, &mut pairs)?;
                dominate_closed(&mut dominated, f);
            }
        } else {
            // only the front vertex has itself as father
            let second = ord.order[1];
            add_pair(u, second, &mut in_solution, &mut pairs)?;
            dominated[u as usize] = true;
        }
    }
    Ok(PairedSolution::from_pairs(pairs))
}
