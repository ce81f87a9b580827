//! C ABI over the exact Tutte polynomial engine. Handles are opaque boxes;
//! every fallible entry point reports a `TutteStatus` and writes its result
//! through an out-pointer. Strings handed to the caller are NUL-terminated,
//! heap-allocated, and must be released with `tutte_string_free`.
//!
//! Pointer contract, uniform across the ABI: `const char *` arguments must
//! be NUL-terminated or NULL; handle arguments must come from this library
//! and not have been freed; out-pointers must be writable. NULL inputs are
//! reported as `NullArgument`, never dereferenced, and each handle must be
//! freed exactly once by its matching `_free` function.
#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use tutte::benzenoid::{closed_chain, tau_chain, ChainFamily};
use tutte::engine::{
    count_spanning_trees_kirchhoff, tutte_delcon, tutte_subset_with_limit, EngineError,
};
use tutte::graph::MultiGraph;
use tutte::poly::Poly;

/// Default edge limit of `tutte_compute_subset`, matching the library.
pub const TUTTE_SUBSET_DEFAULT_EDGE_LIMIT: usize = 22;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TutteStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// Unparsable text, invalid graph, or an unsupported family/index.
    InvalidInput = 2,
    /// The request is valid but too large for the chosen method.
    Infeasible = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Opaque multigraph handle.
pub struct TutteGraph(MultiGraph);

/// Opaque polynomial handle.
pub struct TuttePoly(Poly);

fn engine_status(e: &EngineError) -> TutteStatus {
    match e {
        EngineError::TooManyEdges { .. } => TutteStatus::Infeasible,
        _ => TutteStatus::InvalidInput,
    }
}

/// Runs a closure at the ABI boundary, converting panics to a status.
fn guarded(f: impl FnOnce() -> TutteStatus) -> TutteStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => TutteStatus::Panic,
    }
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, TutteStatus> {
    if ptr.is_null() {
        return Err(TutteStatus::NullArgument);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| TutteStatus::InvalidInput)
}

unsafe fn write_box<T>(out: *mut *mut T, value: T) -> TutteStatus {
    if out.is_null() {
        return TutteStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(value));
    TutteStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> TutteStatus {
    if out.is_null() {
        return TutteStatus::NullArgument;
    }
    match CString::new(value) {
        Ok(s) => {
            *out = s.into_raw();
            TutteStatus::Ok
        }
        Err(_) => TutteStatus::InvalidInput,
    }
}

fn chain_of(name: &str) -> Result<ChainFamily, TutteStatus> {
    match name {
        "linear" => Ok(ChainFamily::Linear),
        "pyrene" => Ok(ChainFamily::Pyrene),
        "triphenylene" => Ok(ChainFamily::Triphenylene),
        _ => Err(TutteStatus::InvalidInput),
    }
}

// ---- graphs ----

/// Parses a graph from its text form: a `vertices N` header line, then one
/// `u v` line per edge. `#` starts a comment line.
#[no_mangle]
pub unsafe extern "C" fn tutte_graph_from_text(
    text: *const c_char,
    out: *mut *mut TutteGraph,
) -> TutteStatus {
    guarded(|| {
        let text = match utf8_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match MultiGraph::parse_text(text) {
            Ok(g) => write_box(out, TutteGraph(g)),
            Err(_) => TutteStatus::InvalidInput,
        }
    })
}

/// Builds a graph from an endpoint array laid out as `u0, v0, u1, v1, ...`
/// (`2 * edge_count` entries). `endpoints` may be NULL when `edge_count` is 0.
#[no_mangle]
pub unsafe extern "C" fn tutte_graph_from_edges(
    vertex_count: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut TutteGraph,
) -> TutteStatus {
    guarded(|| {
        if endpoints.is_null() && edge_count > 0 {
            return TutteStatus::NullArgument;
        }
        let mut edges = Vec::with_capacity(edge_count);
        for i in 0..edge_count {
            let a = *endpoints.add(2 * i);
            let b = *endpoints.add(2 * i + 1);
            edges.push((a, b));
        }
        match MultiGraph::new(vertex_count, edges) {
            Ok(g) => write_box(out, TutteGraph(g)),
            Err(_) => TutteStatus::InvalidInput,
        }
    })
}

/// Vertex count, or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn tutte_graph_vertex_count(g: *const TutteGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn tutte_graph_edge_count(g: *const TutteGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Releases a graph handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tutte_graph_free(g: *mut TutteGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---- computation ----

/// Tutte polynomial by deletion-contraction with block factorization and
/// memoization. The graph must be connected.
#[no_mangle]
pub unsafe extern "C" fn tutte_compute_delcon(
    g: *const TutteGraph,
    out: *mut *mut TuttePoly,
) -> TutteStatus {
    guarded(|| {
        let Some(g) = g.as_ref() else {
            return TutteStatus::NullArgument;
        };
        match tutte_delcon(&g.0) {
            Ok(p) => write_box(out, TuttePoly(p)),
            Err(e) => engine_status(&e),
        }
    })
}

/// Tutte polynomial by rank-nullity subset expansion; rejected with
/// `Infeasible` when the graph has more than `edge_limit` edges.
#[no_mangle]
pub unsafe extern "C" fn tutte_compute_subset(
    g: *const TutteGraph,
    edge_limit: usize,
    out: *mut *mut TuttePoly,
) -> TutteStatus {
    guarded(|| {
        let Some(g) = g.as_ref() else {
            return TutteStatus::NullArgument;
        };
        match tutte_subset_with_limit(&g.0, edge_limit) {
            Ok(p) => write_box(out, TuttePoly(p)),
            Err(e) => engine_status(&e),
        }
    })
}

/// Spanning-tree count by the matrix-tree theorem, written as a decimal
/// string.
#[no_mangle]
pub unsafe extern "C" fn tutte_spanning_trees(
    g: *const TutteGraph,
    out: *mut *mut c_char,
) -> TutteStatus {
    guarded(|| {
        let Some(g) = g.as_ref() else {
            return TutteStatus::NullArgument;
        };
        match count_spanning_trees_kirchhoff(&g.0) {
            Ok(count) => write_string(out, count.to_string()),
            Err(e) => engine_status(&e),
        }
    })
}

// ---- benzenoid chains ----

/// Closed-form Tutte polynomial of a chain family member. `family` is
/// "linear", "pyrene", or "triphenylene"; `n >= 1`.
#[no_mangle]
pub unsafe extern "C" fn tutte_chain_polynomial(
    family: *const c_char,
    n: usize,
    out: *mut *mut TuttePoly,
) -> TutteStatus {
    guarded(|| {
        let family = match utf8_arg(family).and_then(chain_of) {
            Ok(f) => f,
            Err(status) => return status,
        };
        match closed_chain(family, n) {
            Ok(p) => write_box(out, TuttePoly(p)),
            Err(_) => TutteStatus::InvalidInput,
        }
    })
}

/// Spanning-tree count of a chain family member by the integer recurrence,
/// written as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn tutte_chain_spanning_trees(
    family: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> TutteStatus {
    guarded(|| {
        let family = match utf8_arg(family).and_then(chain_of) {
            Ok(f) => f,
            Err(status) => return status,
        };
        match tau_chain(family, n) {
            Ok(count) => write_string(out, count.to_string()),
            Err(_) => TutteStatus::InvalidInput,
        }
    })
}

// ---- polynomials ----

/// Parses a polynomial from text such as `x^2 + 2*xy - 3`.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_parse(
    text: *const c_char,
    out: *mut *mut TuttePoly,
) -> TutteStatus {
    guarded(|| {
        let text = match utf8_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Poly::parse(text) {
            Ok(p) => write_box(out, TuttePoly(p)),
            Err(_) => TutteStatus::InvalidInput,
        }
    })
}

/// Canonical one-line text form.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_to_text(
    p: *const TuttePoly,
    out: *mut *mut c_char,
) -> TutteStatus {
    guarded(|| {
        let Some(p) = p.as_ref() else {
            return TutteStatus::NullArgument;
        };
        write_string(out, p.0.to_canonical_text())
    })
}

/// JSON form `[[x_exp, y_exp, "coefficient"], ...]` in canonical term order.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_to_json(
    p: *const TuttePoly,
    out: *mut *mut c_char,
) -> TutteStatus {
    guarded(|| {
        let Some(p) = p.as_ref() else {
            return TutteStatus::NullArgument;
        };
        write_string(out, p.0.to_json())
    })
}

/// Exact evaluation at integer (x, y), written as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_eval(
    p: *const TuttePoly,
    x: i64,
    y: i64,
    out: *mut *mut c_char,
) -> TutteStatus {
    guarded(|| {
        let Some(p) = p.as_ref() else {
            return TutteStatus::NullArgument;
        };
        let value = p.0.eval(&BigInt::from(x), &BigInt::from(y));
        write_string(out, value.to_string())
    })
}

/// Exact equality. NULL handles compare equal only to NULL.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_equal(a: *const TuttePoly, b: *const TuttePoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        (None, None) => true,
        _ => false,
    }
}

/// Releases a polynomial handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tutte_poly_free(p: *mut TuttePoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string produced by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tutte_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
