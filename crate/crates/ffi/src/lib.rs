//! C ABI over `strongedge`.
//!
//! Graphs and colorings are opaque heap handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`SeStatus`]; on failure a message is available from
//! [`se_last_error_message`] until the next failing call on the same thread.
//! Strings returned by the library must be released with [`se_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strongedge::{
    audit, build_ordering, color_graph, degeneracy, exact_chi_s, parse_graph,
    verify_strong_coloring, AuditSummary, ColorReport, Error, MultiGraph, StrongColoring,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotDegenerate = 4,
    OutOfRange = 5,
    NoValue = 6,
    Panic = 7,
}

/// Opaque multigraph handle.
pub struct SeGraph {
    inner: MultiGraph,
}

/// Opaque handle holding a coloring and its pipeline report.
pub struct SeColoring {
    coloring: StrongColoring,
    report: ColorReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> SeStatus {
    match err {
        Error::Parse { .. } => SeStatus::Parse,
        Error::NotDegenerate { .. } => SeStatus::NotDegenerate,
        Error::VertexOutOfRange { .. } | Error::EdgeOutOfRange { .. } => SeStatus::OutOfRange,
        _ => SeStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F>(f: F) -> SeStatus
where
    F: FnOnce() -> Result<(), (SeStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            clear_error();
            SeStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside strongedge");
            SeStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SeStatus, String) {
    (SeStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const SeGraph) -> Result<&'a MultiGraph, (SeStatus, String)> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn coloring_ref<'a>(c: *const SeColoring) -> Result<&'a SeColoring, (SeStatus, String)> {
    c.as_ref().ok_or_else(|| null("coloring"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (SeStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn k_arg(k: i64) -> Option<usize> {
    (k >= 0).then_some(k as usize)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failing call on this thread, or null. The pointer is
/// valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn se_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn se_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `n` vertices from `m` endpoint pairs `(us[i], vs[i])`.
///
/// # Safety
/// `us` and `vs` must point to `m` readable values each (may be null when
/// `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se_graph_from_edges(
    n: usize,
    us: *const u32,
    vs: *const u32,
    m: usize,
    out: *mut *mut SeGraph,
) -> SeStatus {
    guard(|| {
        if m > 0 && (us.is_null() || vs.is_null()) {
            return Err(null("endpoint array"));
        }
        let pairs = (0..m).map(|i| (*us.add(i) as usize, *vs.add(i) as usize));
        let g = MultiGraph::new(n, pairs).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(SeGraph { inner: g })), "out")
    })
}

/// Parses canonical or DIMACS-like edge-list text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se_graph_parse(text: *const c_char, out: *mut *mut SeGraph) -> SeStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (SeStatus::Parse, format!("input is not UTF-8: {e}")))?;
        let g = parse_graph(s).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(SeGraph { inner: g })), "out")
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn se_graph_free(g: *mut SeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn se_graph_vertex_count(g: *const SeGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn se_graph_edge_count(g: *const SeGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.m())
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn se_graph_max_degree(g: *const SeGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.max_degree())
}

/// # Safety
/// `g` must be a live graph handle and `out_k` writable.
#[no_mangle]
pub unsafe extern "C" fn se_degeneracy(g: *const SeGraph, out_k: *mut usize) -> SeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(out_k, degeneracy(g).k, "out_k")
    })
}

/// `(4k-2)·delta - k(2k-1) + 1`.
#[no_mangle]
pub extern "C" fn se_bound(k: usize, delta: usize) -> i64 {
    strongedge::bound(k, delta)
}

/// Runs the full pipeline. A negative `k` means "use the degeneracy".
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn se_color(g: *const SeGraph, k: i64, out: *mut *mut SeColoring) -> SeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let (coloring, _, report) = color_graph(g, k_arg(k)).map_err(lib_err)?;
        let handle = Box::into_raw(Box::new(SeColoring { coloring, report }));
        write_out(out, handle, "out").inspect_err(|_| drop(Box::from_raw(handle)))
    })
}

/// # Safety
/// `c` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_free(c: *mut SeColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be null or a live coloring handle.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_colors_used(c: *const SeColoring) -> usize {
    c.as_ref().map_or(0, |c| c.coloring.colors_used)
}

/// # Safety
/// `c` must be null or a live coloring handle.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_edge_count(c: *const SeColoring) -> usize {
    c.as_ref().map_or(0, |c| c.coloring.assignment.len())
}

/// Whether the coloring passed strong-coloring verification.
///
/// # Safety
/// `c` must be null or a live coloring handle.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_valid(c: *const SeColoring) -> bool {
    c.as_ref().is_some_and(|c| c.report.valid)
}

/// The `k` the ordering was built with.
///
/// # Safety
/// `c` must be null or a live coloring handle.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_k(c: *const SeColoring) -> usize {
    c.as_ref().map_or(0, |c| c.report.k)
}

/// Writes the color bound; `SE_STATUS_NO_VALUE` for edgeless graphs or `k = 0`.
///
/// # Safety
/// `c` must be a live coloring handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_bound(c: *const SeColoring, out: *mut i64) -> SeStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let b = c
            .report
            .bound
            .ok_or((SeStatus::NoValue, "no bound for this graph".to_string()))?;
        write_out(out, b, "out")
    })
}

/// # Safety
/// `c` must be a live coloring handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_color(c: *const SeColoring, edge: usize, out: *mut u32) -> SeStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let color = *c.coloring.assignment.get(edge).ok_or((
            SeStatus::OutOfRange,
            format!("edge {edge} out of range"),
        ))?;
        write_out(out, color as u32, "out")
    })
}

/// Copies up to `len` colors (by edge id) into `buf`; returns the number
/// written through `written`.
///
/// # Safety
/// `buf` must have room for `len` values; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_copy(
    c: *const SeColoring,
    buf: *mut u32,
    len: usize,
    written: *mut usize,
) -> SeStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let count = len.min(c.coloring.assignment.len());
        if count > 0 && buf.is_null() {
            return Err(null("buf"));
        }
        for (i, &color) in c.coloring.assignment.iter().take(count).enumerate() {
            buf.add(i).write(color as u32);
        }
        write_out(written, count, "written")
    })
}

/// The coloring report as JSON. Free with [`se_string_free`].
///
/// # Safety
/// `c` must be a live coloring handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn se_coloring_to_json(c: *const SeColoring, out: *mut *mut c_char) -> SeStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let json = serde_json::to_string(&c.report)
            .map_err(|e| (SeStatus::InvalidArgument, e.to_string()))?;
        write_out(out, into_c_string(json), "out")
    })
}

/// Checks an externally produced coloring (`colors[e]` for each edge `e`).
///
/// # Safety
/// `colors` must point to `m` readable values; `out_valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn se_verify_coloring(
    g: *const SeGraph,
    colors: *const u32,
    m: usize,
    out_valid: *mut bool,
) -> SeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if m > 0 && colors.is_null() {
            return Err(null("colors"));
        }
        let assignment = (0..m).map(|i| *colors.add(i) as usize).collect();
        let verdict = verify_strong_coloring(g, &StrongColoring::new(assignment)).map_err(lib_err)?;
        write_out(out_valid, verdict.is_pass(), "out_valid")
    })
}

/// Exact strong chromatic index within a node budget. When `out_timed_out`
/// is set, `out_chi` holds an upper bound.
///
/// # Safety
/// `g` must be a live graph handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn se_exact(
    g: *const SeGraph,
    budget: u64,
    out_chi: *mut usize,
    out_timed_out: *mut bool,
) -> SeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out_chi.is_null() || out_timed_out.is_null() {
            return Err(null("output"));
        }
        let r = exact_chi_s(g, budget);
        out_chi.write(r.chi_s);
        out_timed_out.write(r.timed_out);
        Ok(())
    })
}

/// Builds the ordering for `k` (negative: degeneracy) and audits it; writes
/// whether every check passed on every position.
///
/// # Safety
/// `g` must be a live graph handle and `out_pass` writable.
#[no_mangle]
pub unsafe extern "C" fn se_audit(g: *const SeGraph, k: i64, out_pass: *mut bool) -> SeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let k = k_arg(k).unwrap_or_else(|| degeneracy(g).k);
        let ord = build_ordering(g, k).map_err(lib_err)?;
        let records = audit(g, k, &ord).map_err(lib_err)?;
        write_out(out_pass, AuditSummary::from_records(&records).passed(), "out_pass")
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn se_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
