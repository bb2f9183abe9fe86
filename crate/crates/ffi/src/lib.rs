//! C ABI for the paired-domination toolkit.
//!
//! Handles are opaque; every fallible call returns a status code and leaves a
//! human-readable message retrievable with [`pairdom_last_error`] (thread
//! local). Solutions are read out through caller-provided buffers or as a
//! JSON string. All functions are panic-safe at the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pairdom::block::{is_block_graph, mpdb, mpdt};
use pairdom::graph::Graph;
use pairdom::interval::{interval_graph, mpdi, IntervalRep, LeftOrdering};
use pairdom::oracle::{gamma_p_bruteforce, OracleBudget};
use pairdom::solution::{verify_paired_dominating, PairedSolution};
use pairdom::Error;

/// Status of a C-API call. Values match the CLI exit-code contract where one
/// exists.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairdomStatus {
    Ok = 0,
    /// Malformed input text.
    ParseError = 2,
    /// Instance outside the class the operation accepts.
    ClassError = 3,
    /// Oracle or size budget exceeded.
    BudgetError = 4,
    /// A solution failed verification.
    VerifyFailed = 5,
    /// Invalid argument (null pointer, bad id, non-UTF-8 text).
    ArgumentError = 6,
    /// Internal invariant failure; indicates a bug.
    InternalError = 7,
}

/// Opaque instance handle: a graph, possibly carrying the interval ordering
/// it was built from.
pub struct PairdomGraph {
    graph: Graph,
    ordering: Option<LeftOrdering>,
}

/// Opaque solution handle.
pub struct PairdomSolution {
    inner: PairedSolution,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> PairdomStatus {
    match err {
        Error::Parse { .. } => PairdomStatus::ParseError,
        Error::Argument(_) => PairdomStatus::ArgumentError,
        Error::Instance(_) => PairdomStatus::ClassError,
        Error::Capacity(_) => PairdomStatus::BudgetError,
        Error::Invariant(_) => PairdomStatus::InternalError,
    }
}

fn fail(err: &Error) -> PairdomStatus {
    set_error(&err.to_string());
    status_of(err)
}

fn guard<F: FnOnce() -> PairdomStatus>(f: F) -> PairdomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic inside pairdom");
            PairdomStatus::InternalError
        }
    }
}

/// Last error message for this thread; valid until the next failing call.
/// Never null.
#[no_mangle]
pub extern "C" fn pairdom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn read_text<'a>(text: *const c_char) -> Result<&'a str, PairdomStatus> {
    if text.is_null() {
        set_error("text pointer is null");
        return Err(PairdomStatus::ArgumentError);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("text is not valid UTF-8");
        PairdomStatus::ArgumentError
    })
}

/// Parses the `n m` edge-list format into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_graph_parse(
    text: *const c_char,
    out: *mut *mut PairdomGraph,
) -> PairdomStatus {
    guard(|| {
        if out.is_null() {
            set_error("out pointer is null");
            return PairdomStatus::ArgumentError;
        }
        let text = match read_text(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Graph::parse(text) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(PairdomGraph {
                    graph,
                    ordering: None,
                }));
                PairdomStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Parses the interval format, builds the intersection graph, and keeps the
/// left-endpoint ordering so the handle can be solved as an interval graph.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_intervals_parse(
    text: *const c_char,
    out: *mut *mut PairdomGraph,
) -> PairdomStatus {
    guard(|| {
        if out.is_null() {
            set_error("out pointer is null");
            return PairdomStatus::ArgumentError;
        }
        let text = match read_text(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let rep = match IntervalRep::parse(text) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        match interval_graph(&rep) {
            Ok((graph, ordering)) => {
                *out = Box::into_raw(Box::new(PairdomGraph {
                    graph,
                    ordering: Some(ordering),
                }));
                PairdomStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `g` must be a live handle from a `pairdom_*_parse` call.
#[no_mangle]
pub unsafe extern "C" fn pairdom_graph_vertex_count(g: *const PairdomGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).graph.vertex_count()
}

/// # Safety
/// `g` must be a live handle from a `pairdom_*_parse` call.
#[no_mangle]
pub unsafe extern "C" fn pairdom_graph_edge_count(g: *const PairdomGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).graph.edge_count() as u64
}

unsafe fn solve_with<F>(
    g: *const PairdomGraph,
    out: *mut *mut PairdomSolution,
    solve: F,
) -> PairdomStatus
where
    F: FnOnce(&PairdomGraph) -> Result<PairedSolution, Error>,
{
    if g.is_null() || out.is_null() {
        set_error("null handle");
        return PairdomStatus::ArgumentError;
    }
    match solve(&*g) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(PairdomSolution { inner }));
            PairdomStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Minimum paired-dominating set of a tree.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solve_tree(
    g: *const PairdomGraph,
    out: *mut *mut PairdomSolution,
) -> PairdomStatus {
    guard(|| solve_with(g, out, |h| mpdt(&h.graph)))
}

/// Minimum paired-dominating set of a connected block graph.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solve_block(
    g: *const PairdomGraph,
    out: *mut *mut PairdomSolution,
) -> PairdomStatus {
    guard(|| solve_with(g, out, |h| mpdb(&h.graph)))
}

/// Minimum paired-dominating set of a connected interval graph; the handle
/// must come from `pairdom_intervals_parse`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solve_interval(
    g: *const PairdomGraph,
    out: *mut *mut PairdomSolution,
) -> PairdomStatus {
    guard(|| {
        solve_with(g, out, |h| match &h.ordering {
            Some(ord) => mpdi(&h.graph, ord),
            None => Err(Error::Instance(
                "handle carries no interval representation".into(),
            )),
        })
    })
}

/// Tries tree, then block graph, then interval (when the handle has an
/// interval representation).
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solve_auto(
    g: *const PairdomGraph,
    out: *mut *mut PairdomSolution,
) -> PairdomStatus {
    guard(|| {
        solve_with(g, out, |h| {
            let graph = &h.graph;
            let n = graph.vertex_count();
            if n >= 2 && graph.is_connected() {
                if graph.edge_count() == n as usize - 1 {
                    return mpdt(graph);
                }
                if is_block_graph(graph)? {
                    return mpdb(graph);
                }
            }
            match &h.ordering {
                Some(ord) => mpdi(graph, ord),
                None => Err(Error::Instance(
                    "instance is neither a tree nor a block graph, and no interval \
                     representation was given"
                        .into(),
                )),
            }
        })
    })
}

/// Exact minimum by brute force. Pass 0 for either budget field to use the
/// default (16 vertices, 50 million subsets).
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pairdom_oracle_gamma_p(
    g: *const PairdomGraph,
    max_vertices: u32,
    max_subsets: u64,
    out: *mut *mut PairdomSolution,
) -> PairdomStatus {
    guard(|| {
        solve_with(g, out, |h| {
            let mut budget = OracleBudget::default();
            if max_vertices != 0 {
                budget.max_vertices = max_vertices;
            }
            if max_subsets != 0 {
                budget.max_subsets = max_subsets;
            }
            gamma_p_bruteforce(&h.graph, &budget)
        })
    })
}

/// Checks a solution against a graph: `Ok` when it is a paired-dominating
/// set, `VerifyFailed` (with the reason in `pairdom_last_error`) otherwise.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn pairdom_verify(
    g: *const PairdomGraph,
    sol: *const PairdomSolution,
) -> PairdomStatus {
    guard(|| {
        if g.is_null() || sol.is_null() {
            set_error("null handle");
            return PairdomStatus::ArgumentError;
        }
        match verify_paired_dominating(&(*g).graph, &(*sol).inner) {
            Ok(()) => PairdomStatus::Ok,
            Err(why) => {
                set_error(why.as_str());
                PairdomStatus::VerifyFailed
            }
        }
    })
}

/// Number of vertices in the solution.
///
/// # Safety
/// `sol` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_size(sol: *const PairdomSolution) -> usize {
    if sol.is_null() {
        return 0;
    }
    (*sol).inner.size()
}

/// Copies up to `cap` vertex ids (ascending) into `buf`; returns the total
/// count, so calling with `cap == 0` sizes the buffer.
///
/// # Safety
/// `sol` must be live; `buf` must point to at least `cap` writable u32 slots.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_vertices(
    sol: *const PairdomSolution,
    buf: *mut u32,
    cap: usize,
) -> usize {
    if sol.is_null() {
        return 0;
    }
    let verts = (*sol).inner.vertices();
    if !buf.is_null() {
        for (i, &v) in verts.iter().take(cap).enumerate() {
            *buf.add(i) = v;
        }
    }
    verts.len()
}

/// Number of pairs in the solution (half the vertex count).
///
/// # Safety
/// `sol` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_pair_count(sol: *const PairdomSolution) -> usize {
    if sol.is_null() {
        return 0;
    }
    (*sol).inner.pairs().len()
}

/// Copies up to `cap` u32 values of flattened pairs `(a0,b0,a1,b1,...)` into
/// `buf`; returns the total value count (twice the pair count).
///
/// # Safety
/// `sol` must be live; `buf` must point to at least `cap` writable u32 slots.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_pairs(
    sol: *const PairdomSolution,
    buf: *mut u32,
    cap: usize,
) -> usize {
    if sol.is_null() {
        return 0;
    }
    let pairs = (*sol).inner.pairs();
    if !buf.is_null() {
        let mut written = 0usize;
        'outer: for &(a, b) in pairs {
            for v in [a, b] {
                if written == cap {
                    break 'outer;
                }
                *buf.add(written) = v;
                written += 1;
            }
        }
    }
    pairs.len() * 2
}

/// Serializes the solution as JSON. Free the returned string with
/// `pairdom_string_free`.
///
/// # Safety
/// `sol` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_to_json(sol: *const PairdomSolution) -> *mut c_char {
    if sol.is_null() {
        return ptr::null_mut();
    }
    let json = (*sol).inner.to_json();
    CString::new(json)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// # Safety
/// `s` must come from `pairdom_solution_to_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pairdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must come from a `pairdom_*_parse` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pairdom_graph_free(g: *mut PairdomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `sol` must come from a solve call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pairdom_solution_free(sol: *mut PairdomSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}
