//! Faithful implementation of an earlier published paired-domination
//! procedure for interval graphs. It is *not* guaranteed to return a minimum
//! set; that is the point. It serves as an executable regression fixture
//! demonstrating the defect on the built-in six-interval instance.
//!
//! The procedure works on intervals re-labelled 1..n by increasing right
//! endpoint, augmented with two far-right intervals n+1 and n+2, and builds
//! `MPD(j) = {l_j, j} ∪ MPD(k)` where `l_j` is the intersecting interval with
//! the smallest left endpoint and `k` is recovered from a table of left
//! endpoints bucketed between consecutive right endpoints.

use serde::Serialize;

use crate::interval::rep::IntervalRep;

/// One row of the per-interval parameter table, in publication column order:
/// index, left endpoint, right endpoint, `max a(IFB(a_i))`, `l_i`, `A_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LegacyTableRow {
    pub index: u32,
    pub a: i64,
    pub b: i64,
    pub max_a_ifb_a: i64,
    pub l: u32,
    pub a_set: Vec<i64>,
}

/// One step of the recursion trace: `MPD(j) = {l_j, j} ∪ MPD(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LegacyStep {
    pub j: u32,
    pub max_a_ifb_min: i64,
    pub k: u32,
    pub mpd: Vec<u32>,
}

/// Full execution record over the augmented instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LegacyTrace {
    pub rows: Vec<LegacyTableRow>,
    pub steps: Vec<LegacyStep>,
    /// Final set in construction order, as right-endpoint-sorted indices,
    /// augmented intervals stripped.
    pub result_indices: Vec<u32>,
    /// The same set mapped back to original interval ids.
    pub result: Vec<u32>,
}

/// The six-interval instance on which the legacy procedure returns a set of
/// size four while the optimum is two.
pub fn counterexample_intervals() -> IntervalRep {
    IntervalRep::new(vec![(0, 3), (1, 4), (2, 6), (7, 9), (5, 10), (8, 11)])
        .expect("fixture is well-formed")
}

/// Runs the legacy procedure and returns the chosen vertex set (original
/// interval ids, construction order preserved).
pub fn legacy_mpd(rep: &IntervalRep) -> Vec<u32> {
    legacy_mpd_trace(rep).result
}

/// Runs the legacy procedure, recording the parameter table and every
/// recursion step.
pub fn legacy_mpd_trace(rep: &IntervalRep) -> LegacyTrace {
    let n = rep.len();
    // Re-label by increasing right endpoint (ties by left endpoint, then id).
    let mut by_right: Vec<u32> = (1..=n as u32).collect();
    by_right.sort_unstable_by_key(|&id| {
        let (a, b) = rep.get(id);
        (b, a, id)
    });
    let total = n + 2;
    let mut a = vec![0i64; total + 1];
    let mut b = vec![0i64; total + 1];
    for (i, &id) in by_right.iter().enumerate() {
        let (ai, bi) = rep.get(id);
        a[i + 1] = ai;
        b[i + 1] = bi;
    }
    let n64 = n as i64;
    a[n + 1] = 2 * n64 + 1;
    a[n + 2] = 2 * n64 + 2;
    b[n + 1] = 2 * n64 + 3;
    b[n + 2] = 2 * n64 + 4;

    let intersects = |i: usize, j: usize| a[i].max(a[j]) <= b[i].min(b[j]);
    // max a over intervals whose right endpoint is strictly below e; 0 when
    // there is none (the published empty-set sentinel).
    let max_a_ifb = |e: i64| -> i64 {
        (1..=total)
            .filter(|&t| b[t] < e)
            .map(|t| a[t])
            .max()
            .unwrap_or(0)
    };
    // l_j: the distinct intersecting interval with the smallest left
    // endpoint; falls back to j itself if nothing intersects.
    let l_of = |j: usize| -> usize {
        (1..=total)
            .filter(|&t| t != j && intersects(t, j))
            .min_by_key(|&t| (a[t], t))
            .unwrap_or(j)
    };

    let ls: Vec<usize> = (0..=total).map(|j| if j == 0 { 0 } else { l_of(j) }).collect();

    // A_i = { a_j : j original, b_{i-1} < a_j < b_i }, with b_0 = 0.
    let a_set_of = |i: usize| -> Vec<i64> {
        let lower = if i == 1 { 0 } else { b[i - 1] };
        let mut vals: Vec<i64> = (1..=n).map(|j| a[j]).filter(|&x| lower < x && x < b[i]).collect();
        vals.sort_unstable();
        vals
    };

    let rows: Vec<LegacyTableRow> = (1..=total)
        .map(|i| LegacyTableRow {
            index: i as u32,
            a: a[i],
            b: b[i],
            max_a_ifb_a: max_a_ifb(a[i]),
            l: ls[i] as u32,
            a_set: a_set_of(i),
        })
        .collect();

    let mut mpd: Vec<Vec<u32>> = vec![Vec::new(); total + 1];
    let mut steps = Vec::with_capacity(total);
    for j in 1..=total {
        let lj = ls[j];
        let x = max_a_ifb(a[j].min(a[lj]));
        // Recover the bucket holding x: 0 stays 0, otherwise the first index
        // whose right endpoint exceeds x.
        let k = if x == 0 {
            0
        } else {
            (1..=total).find(|&t| b[t] > x).unwrap_or(0)
        };
        let mut set: Vec<u32> = vec![lj.min(j) as u32, lj.max(j) as u32];
        set.dedup();
        if k < j {
            for &v in &mpd[k] {
                if !set.contains(&v) {
                    set.push(v);
                }
            }
        }
        steps.push(LegacyStep {
            j: j as u32,
            max_a_ifb_min: x,
            k: k as u32,
            mpd: set.clone(),
        });
        mpd[j] = set;
    }

    let result_indices: Vec<u32> = mpd[total]
        .iter()
        .copied()
        .filter(|&v| v as usize <= n)
        .collect();
    let result = result_indices
        .iter()
        .map(|&v| by_right[v as usize - 1])
        .collect();
    LegacyTrace {
        rows,
        steps,
        result_indices,
        result,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_yields_size_four() {
        let trace = legacy_mpd_trace(&counterexample_intervals());
        assert_eq!(trace.result, vec![4, 5, 1, 2]);
        let mut sorted = trace.result.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 4, 5]);
    }

    #[test]
    fn published_parameter_table_reproduced() {
        let trace = legacy_mpd_trace(&counterexample_intervals());
        let expect: Vec<(u32, i64, i64, i64, u32, Vec<i64>)> = vec![
            (1, 0, 3, 0, 2, vec![1, 2]),
            (2, 1, 4, 0, 1, vec![]),
            (3, 2, 6, 0, 1, vec![5]),
            (4, 7, 9, 2, 5, vec![7, 8]),
            (5, 5, 10, 1, 3, vec![]),
            (6, 8, 11, 2, 5, vec![]),
            (7, 13, 15, 8, 8, vec![]),
            (8, 14, 16, 8, 7, vec![]),
        ];
        assert_eq!(trace.rows.len(), expect.len());
        for (row, (i, a, b, maxa, l, aset)) in trace.rows.iter().zip(expect) {
            assert_eq!(row.index, i);
            assert_eq!(row.a, a, "row {i}");
            assert_eq!(row.b, b, "row {i}");
            assert_eq!(row.max_a_ifb_a, maxa, "row {i}");
            assert_eq!(row.l, l, "row {i}");
            assert_eq!(row.a_set, aset, "row {i}");
        }
    }

    #[test]
    fn published_recursion_trace_reproduced() {
        let trace = legacy_mpd_trace(&counterexample_intervals());
        let expect: Vec<(u32, i64, u32, Vec<u32>)> = vec![
            (1, 0, 0, vec![1, 2]),
            (2, 0, 0, vec![1, 2]),
            (3, 0, 0, vec![1, 3]),
            (4, 1, 1, vec![4, 5, 1, 2]),
            (5, 0, 0, vec![3, 5]),
            (6, 1, 1, vec![5, 6, 1, 2]),
            (7, 8, 4, vec![7, 8, 4, 5, 1, 2]),
            (8, 8, 4, vec![7, 8, 4, 5, 1, 2]),
        ];
        assert_eq!(trace.steps.len(), expect.len());
        for (step, (j, x, k, mpd)) in trace.steps.iter().zip(expect) {
            assert_eq!(step.j, j);
            assert_eq!(step.max_a_ifb_min, x, "step {j}");
            assert_eq!(step.k, k, "step {j}");
            assert_eq!(step.mpd, mpd, "step {j}");
        }
    }

    #[test]
    fn result_is_paired_dominating_but_not_minimum() {
        use crate::interval::ordering::interval_graph;
        use crate::interval::solver::mpdi;
        use crate::solution::{verify_paired_dominating, PairedSolution};

        let rep = counterexample_intervals();
        let (g, ord) = interval_graph(&rep).unwrap();
        let legacy = legacy_mpd(&rep);
        assert_eq!(legacy.len(), 4);
        // {1,2} and {4,5} happen to pair up as edges
        let candidate = PairedSolution::from_parts(legacy.clone(), vec![(1, 2), (4, 5)]);
        assert!(verify_paired_dominating(&g, &candidate).is_ok());
        let optimal = mpdi(&g, &ord).unwrap();
        assert!(legacy.len() > optimal.size(), "defect must be visible");
    }
}
