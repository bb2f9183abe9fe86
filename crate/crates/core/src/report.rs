//! Run reports emitted by the command-line front end.

use serde::Serialize;
use std::fmt::Write as _;

use crate::graph::Graph;
use crate::solution::{verify_paired_dominating, PairedSolution};

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub n: u32,
    pub m: usize,
    pub class: String,
}

/// Solver outcome plus an independently recomputed verification verdict. The
/// verdict always comes from [`verify_paired_dominating`], never from solver
/// claims.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub instance: InstanceSummary,
    pub solver: String,
    pub solution: PairedSolution,
    pub wall_time_ms: f64,
    pub verified: bool,
}

impl RunReport {
    pub fn new(
        g: &Graph,
        class: &str,
        solver: &str,
        solution: PairedSolution,
        wall_time_ms: f64,
    ) -> Self {
        let verified = verify_paired_dominating(g, &solution).is_ok();
        RunReport {
            instance: InstanceSummary {
                n: g.vertex_count(),
                m: g.edge_count(),
                class: class.to_string(),
            },
            solver: solver.to_string(),
            solution,
            wall_time_ms,
            verified,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "instance: n={} m={} class={}",
            self.instance.n, self.instance.m, self.instance.class
        );
        let _ = writeln!(out, "solver: {}", self.solver);
        let _ = writeln!(out, "size: {}", self.solution.size());
        let verts: Vec<String> = self.solution.vertices().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "vertices: {}", verts.join(" "));
        let pairs: Vec<String> = self
            .solution
            .pairs()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        let _ = writeln!(out, "pairs: {}", pairs.join(" "));
        let _ = writeln!(out, "time_ms: {:.3}", self.wall_time_ms);
        let _ = writeln!(out, "verified: {}", self.verified);
        out
    }
}
