//! Interval-graph machinery: interval representations, the left-endpoint
//! ordering, the linear-time paired-domination solver, and a faithful
//! reproduction of a prior published algorithm that is not optimal (kept as
//! an executable regression fixture, defect included).

mod legacy;
mod ordering;
mod rep;
mod solver;

pub use legacy::{
    counterexample_intervals, legacy_mpd, legacy_mpd_trace, LegacyStep, LegacyTableRow,
    LegacyTrace,
};
pub use ordering::{interval_graph, left_ordering_property_holds, LeftOrdering};
pub use rep::IntervalRep;
pub use solver::mpdi;
