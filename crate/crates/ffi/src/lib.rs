//! C ABI over `domdist`.
//!
//! Graphs live behind an opaque `DdGraph` handle created by one of the
//! `dd_graph_from_*` constructors and released with `dd_graph_free`. Every
//! fallible call returns a `DdStatus`; on failure a description is available
//! from `dd_last_error_message` on the same thread until the next call.
//! Strings returned by the library must be released with `dd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use domdist::bounds::{assemble_report_with, BoundsConfig};
use domdist::treelift::{lift_gamma_set_to_spanning_tree, verify_lift, LiftError};
use domdist::{
    all_pairs_distances, gamma_exact, is_dominating_set, parse_edgelist, parse_graph6, DistanceMatrix, Graph,
    GraphError,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph6 or edge-list text.
    Parse = 3,
    Disconnected = 4,
    /// Fewer than 2 or more than 62 vertices.
    OrderOutOfRange = 5,
    VertexOutOfRange = 6,
    /// The output buffer was too short; required sizes are still written.
    BufferTooSmall = 7,
    /// The vertex set is not a minimum dominating set.
    NotAGammaSet = 8,
    /// A lift failed its own verification.
    VerificationFailed = 9,
    Internal = 10,
}

/// Opaque graph handle.
pub struct DdGraph {
    graph: Graph,
    distances: DistanceMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: DdStatus, msg: impl Into<String>) -> DdStatus {
    set_error(msg);
    status
}

/// Runs `body`, clearing the last error first and turning panics into `Internal`.
fn guard(body: impl FnOnce() -> DdStatus) -> DdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(DdStatus::Internal, "internal panic"))
}

fn graph_status(e: &GraphError) -> DdStatus {
    match e {
        GraphError::Disconnected => DdStatus::Disconnected,
        GraphError::OrderTooSmall(_) | GraphError::OrderTooLarge(_) => DdStatus::OrderOutOfRange,
        GraphError::VertexOutOfRange { .. } => DdStatus::VertexOutOfRange,
        _ => DdStatus::Parse,
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, DdStatus> {
    if text.is_null() {
        return Err(fail(DdStatus::NullPointer, "text is null"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(DdStatus::InvalidUtf8, "text is not valid UTF-8"))
}

unsafe fn handle<'a>(g: *const DdGraph) -> Result<&'a DdGraph, DdStatus> {
    g.as_ref()
        .ok_or_else(|| fail(DdStatus::NullPointer, "graph handle is null"))
}

unsafe fn vertex_set<'a>(set: *const usize, len: usize) -> Result<&'a [usize], DdStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if set.is_null() {
        return Err(fail(DdStatus::NullPointer, "vertex set is null"));
    }
    Ok(slice::from_raw_parts(set, len))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), DdStatus> {
    if out.is_null() {
        return Err(fail(DdStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn build(text: *const c_char, out: *mut *mut DdGraph, parse: fn(&str) -> Result<Graph, GraphError>) -> DdStatus {
    guard(|| {
        let result = (|| {
            if out.is_null() {
                return Err(fail(DdStatus::NullPointer, "output pointer is null"));
            }
            out.write(ptr::null_mut());
            let graph = parse(read_str(text)?).map_err(|e| fail(graph_status(&e), e.to_string()))?;
            let distances = all_pairs_distances(&graph);
            out.write(Box::into_raw(Box::new(DdGraph { graph, distances })));
            Ok(())
        })();
        result.err().unwrap_or(DdStatus::Ok)
    })
}

fn finish(r: Result<(), DdStatus>) -> DdStatus {
    r.err().unwrap_or(DdStatus::Ok)
}

/// Parses one graph6 string (short form, at most 62 vertices).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_from_graph6(text: *const c_char, out: *mut *mut DdGraph) -> DdStatus {
    build(text, out, |s| parse_graph6(s.trim()))
}

/// Parses an edge list: an `n <count>` line, then one `u v` pair per line.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_from_edgelist(text: *const c_char, out: *mut *mut DdGraph) -> DdStatus {
    build(text, out, parse_edgelist)
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from a `dd_graph_from_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_free(g: *mut DdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_order(g: *const DdGraph, out: *mut usize) -> DdStatus {
    guard(|| finish(handle(g).and_then(|h| write_out(out, h.graph.order()))))
}

/// Number of edges.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_size(g: *const DdGraph, out: *mut usize) -> DdStatus {
    guard(|| finish(handle(g).and_then(|h| write_out(out, h.graph.size()))))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_diameter(g: *const DdGraph, out: *mut u32) -> DdStatus {
    guard(|| finish(handle(g).and_then(|h| write_out(out, h.distances.diameter()))))
}

/// Sum of distances over unordered vertex pairs.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_wiener(g: *const DdGraph, out: *mut u64) -> DdStatus {
    guard(|| finish(handle(g).and_then(|h| write_out(out, h.distances.wiener_index()))))
}

/// Distance between `u` and `v`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_distance(g: *const DdGraph, u: usize, v: usize, out: *mut u32) -> DdStatus {
    guard(|| {
        finish((|| {
            let h = handle(g)?;
            let n = h.graph.order();
            if u >= n || v >= n {
                return Err(fail(
                    DdStatus::VertexOutOfRange,
                    format!("vertex out of range for order {n}"),
                ));
            }
            write_out(out, h.distances.get(u, v))
        })())
    })
}

/// Domination number. The solver's minimum dominating set, sorted, is
/// copied to `witness` when `witness_len >= gamma`; otherwise
/// `BufferTooSmall` is returned with `gamma` still written. `witness` may
/// be null when `witness_len` is 0.
///
/// # Safety
/// `g` must be a live handle, `gamma` writable, and `witness` valid for
/// `witness_len` writes.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_gamma(
    g: *const DdGraph,
    gamma: *mut usize,
    witness: *mut usize,
    witness_len: usize,
) -> DdStatus {
    guard(|| {
        finish((|| {
            let h = handle(g)?;
            let result = gamma_exact(&h.graph);
            write_out(gamma, result.gamma)?;
            if witness_len < result.gamma {
                return Err(fail(
                    DdStatus::BufferTooSmall,
                    format!("witness needs {} slots", result.gamma),
                ));
            }
            if witness.is_null() {
                return Err(fail(DdStatus::NullPointer, "witness buffer is null"));
            }
            slice::from_raw_parts_mut(witness, result.gamma).copy_from_slice(&result.witness);
            Ok(())
        })())
    })
}

/// # Safety
/// `g` must be a live handle, `set` valid for `len` reads, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_is_dominating(
    g: *const DdGraph,
    set: *const usize,
    len: usize,
    out: *mut bool,
) -> DdStatus {
    guard(|| {
        finish((|| {
            let h = handle(g)?;
            let set = vertex_set(set, len)?;
            let ok = is_dominating_set(&h.graph, set).map_err(|e| fail(DdStatus::VertexOutOfRange, e.to_string()))?;
            write_out(out, ok)
        })())
    })
}

fn emit_json(json: String, out: *mut *mut c_char) -> Result<(), DdStatus> {
    let s = CString::new(json).map_err(|_| fail(DdStatus::Internal, "JSON contains NUL"))?;
    unsafe { write_out(out, s.into_raw()) }
}

/// Full bound report as a JSON object (r-subset sizes 3, 4 and 5).
/// Release with `dd_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_report_json(g: *const DdGraph, out: *mut *mut c_char) -> DdStatus {
    guard(|| {
        finish((|| {
            let h = handle(g)?;
            let report = assemble_report_with(&h.graph, &gamma_exact(&h.graph), &BoundsConfig::default());
            emit_json(report.to_json(), out)
        })())
    })
}

/// Spanning tree built around the minimum dominating set `set`, verified,
/// as a JSON object. Release with `dd_string_free`.
///
/// # Safety
/// `g` must be a live handle, `set` valid for `len` reads, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_lift_json(
    g: *const DdGraph,
    set: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> DdStatus {
    guard(|| {
        finish((|| {
            let h = handle(g)?;
            let set = vertex_set(set, len)?;
            let lift = lift_gamma_set_to_spanning_tree(&h.graph, set).map_err(|e| {
                let status = match e {
                    LiftError::VertexOutOfRange { .. } => DdStatus::VertexOutOfRange,
                    _ => DdStatus::NotAGammaSet,
                };
                fail(status, e.to_string())
            })?;
            verify_lift(&h.graph, &lift, set).map_err(|d| fail(DdStatus::VerificationFailed, format!("{d:?}")))?;
            let json = serde_json::json!({
                "gamma_set": lift.gamma_set,
                "tree_edges": lift.tree_edges(),
                "star_edges": lift.star_edges,
                "connector_edges": lift.connector_edges,
            });
            emit_json(json.to_string(), out)
        })())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn dd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn dd_status_name(status: DdStatus) -> *const c_char {
    let name: &'static CStr = match status {
        DdStatus::Ok => c"ok",
        DdStatus::NullPointer => c"null pointer",
        DdStatus::InvalidUtf8 => c"invalid utf-8",
        DdStatus::Parse => c"parse error",
        DdStatus::Disconnected => c"disconnected graph",
        DdStatus::OrderOutOfRange => c"order out of range",
        DdStatus::VertexOutOfRange => c"vertex out of range",
        DdStatus::BufferTooSmall => c"buffer too small",
        DdStatus::NotAGammaSet => c"not a minimum dominating set",
        DdStatus::VerificationFailed => c"verification failed",
        DdStatus::Internal => c"internal error",
    };
    name.as_ptr()
}
