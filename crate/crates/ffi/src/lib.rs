//! C ABI for pvclab.
//!
//! Graphs and colorings cross the boundary as opaque handles that the caller
//! frees with the matching `*_free` function. Every fallible call returns a
//! [`PvcStatus`] and writes its result through an out-pointer; on failure the
//! message is available from [`pvc_last_error_message`] on the same thread.
//! Panics are caught and reported as [`PvcStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pvclab::colorverify::{is_proper_vertex_k_connected, is_strong_proper_vertex_connected};
use pvclab::graph6::{emit_graph6, parse_graph6};
use pvclab::oracle::{brute_pvc_k, brute_spvc, OracleConfig};
use pvclab::products::product;
use pvclab::theorems::{evaluate_product, Prediction};
use pvclab::{Distance, Error, Graph, Parameter, ProductKind, SearchBudget, VertexColoring};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PvcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Disconnected = 4,
    CapExceeded = 5,
    BudgetExceeded = 6,
    NoFormula = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PvcProductKind {
    Join = 0,
    Cartesian = 1,
    Lexicographic = 2,
    Strong = 3,
    Direct = 4,
}

impl From<PvcProductKind> for ProductKind {
    fn from(kind: PvcProductKind) -> Self {
        match kind {
            PvcProductKind::Join => ProductKind::Join,
            PvcProductKind::Cartesian => ProductKind::Cartesian,
            PvcProductKind::Lexicographic => ProductKind::Lexicographic,
            PvcProductKind::Strong => ProductKind::Strong,
            PvcProductKind::Direct => ProductKind::Direct,
        }
    }
}

/// Opaque simple graph.
pub struct PvcGraph {
    graph: Graph,
}

/// Opaque vertex coloring with colors starting at 1.
pub struct PvcColoring {
    coloring: VertexColoring,
}

/// Closed-form value of a parameter: `lo == hi` for an exact value.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PvcPrediction {
    pub lo: u32,
    pub hi: u32,
    /// The constructed coloring passed the exact verifiers.
    pub verified: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> PvcStatus {
    match e {
        Error::Graph6(_) => PvcStatus::Parse,
        Error::Disconnected | Error::DisconnectedPair(..) => PvcStatus::Disconnected,
        Error::CapExceeded { .. } | Error::PaletteExhausted(_) => PvcStatus::CapExceeded,
        Error::BudgetExceeded(_) => PvcStatus::BudgetExceeded,
        Error::Inconsistent(_) => PvcStatus::Internal,
        Error::NoClosedForm(_) => PvcStatus::NoFormula,
        _ => PvcStatus::InvalidArgument,
    }
}

struct Failure(PvcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PvcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording any error or panic.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PvcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PvcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside pvclab".into());
            PvcStatus::Internal
        }
    }
}

/// # Safety
/// `ptr` is null or valid for reads of `T`.
unsafe fn borrow<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(what))
}

/// # Safety
/// `ptr` is null or valid for writes of `T`.
unsafe fn put<T>(ptr: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    ptr.write(value);
    Ok(())
}

fn boxed_graph(graph: Graph) -> *mut PvcGraph {
    Box::into_raw(Box::new(PvcGraph { graph }))
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pvc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_from_graph6(text: *const c_char, out: *mut *mut PvcGraph) -> PvcStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| Failure(PvcStatus::Parse, e.to_string()))?;
        let graph = parse_graph6(text)?;
        put(out, boxed_graph(graph), "out")
    })
}

/// Builds a graph on `order` vertices from `edge_count` pairs stored flat in
/// `endpoints` (`2 * edge_count` entries).
///
/// # Safety
/// `endpoints` is readable for `2 * edge_count` entries (or null when
/// `edge_count` is 0); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_from_edges(
    order: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut PvcGraph,
) -> PvcStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * edge_count)
        };
        let graph = Graph::from_edges(order, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        put(out, boxed_graph(graph), "out")
    })
}

/// # Safety
/// `graph` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_free(graph: *mut PvcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `graph` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_order(graph: *const PvcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.order())
}

/// Number of edges, 0 for a null handle.
///
/// # Safety
/// `graph` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_edge_count(graph: *const PvcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// graph6 encoding; free the string with [`pvc_string_free`].
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_to_graph6(graph: *const PvcGraph, out: *mut *mut c_char) -> PvcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let text = CString::new(emit_graph6(&g.graph)).expect("graph6 has no NUL bytes");
        put(out, text.into_raw(), "out")
    })
}

/// # Safety
/// `text` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pvc_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// The join or product of two graphs; vertex `(g, h)` of a product has index
/// `g * order(right) + h`, and a join lists the left graph first.
///
/// # Safety
/// `left` and `right` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_product(
    kind: PvcProductKind,
    left: *const PvcGraph,
    right: *const PvcGraph,
    out: *mut *mut PvcGraph,
) -> PvcStatus {
    guard(|| {
        let (g, h) = (borrow(left, "left")?, borrow(right, "right")?);
        put(out, boxed_graph(product(kind.into(), &g.graph, &h.graph).into_graph()), "out")
    })
}

/// Diameter; [`PvcStatus::Disconnected`] when it is infinite.
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_diameter(graph: *const PvcGraph, out: *mut u32) -> PvcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        match g.graph.diameter() {
            Distance::Finite(d) => put(out, d, "out"),
            Distance::Infinite => Err(Error::Disconnected.into()),
        }
    })
}

/// Vertex connectivity (order - 1 for complete graphs).
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_graph_connectivity(graph: *const PvcGraph, out: *mut usize) -> PvcStatus {
    guard(|| put(out, borrow(graph, "graph")?.graph.vertex_connectivity(), "out"))
}

/// A coloring from `len` colors, each at least 1.
///
/// # Safety
/// `colors` is readable for `len` entries; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_coloring_new(colors: *const u32, len: usize, out: *mut *mut PvcColoring) -> PvcStatus {
    guard(|| {
        if colors.is_null() {
            return Err(null("colors"));
        }
        let coloring = VertexColoring::new(std::slice::from_raw_parts(colors, len).to_vec())?;
        put(out, Box::into_raw(Box::new(PvcColoring { coloring })), "out")
    })
}

/// Copies up to `capacity` colors into `colors` and returns the coloring's
/// length (0 for a null handle).
///
/// # Safety
/// `coloring` is null or a live handle; `colors` is writable for `capacity`
/// entries or null.
#[no_mangle]
pub unsafe extern "C" fn pvc_coloring_colors(coloring: *const PvcColoring, colors: *mut u32, capacity: usize) -> usize {
    let Some(c) = coloring.as_ref() else { return 0 };
    let all = c.coloring.colors();
    if !colors.is_null() {
        let n = all.len().min(capacity);
        ptr::copy_nonoverlapping(all.as_ptr(), colors, n);
    }
    all.len()
}

/// # Safety
/// `coloring` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc_coloring_free(coloring: *mut PvcColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// Whether every vertex pair is joined by `k` internally disjoint proper paths.
///
/// # Safety
/// `graph` and `coloring` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_verify_pvck(
    graph: *const PvcGraph,
    coloring: *const PvcColoring,
    k: usize,
    out: *mut bool,
) -> PvcStatus {
    guard(|| {
        let (g, c) = (borrow(graph, "graph")?, borrow(coloring, "coloring")?);
        let ok = is_proper_vertex_k_connected(&g.graph, &c.coloring, k, SearchBudget::default())?;
        put(out, ok, "out")
    })
}

/// Whether every vertex pair is joined by a proper shortest path.
///
/// # Safety
/// `graph` and `coloring` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_verify_spvc(
    graph: *const PvcGraph,
    coloring: *const PvcColoring,
    out: *mut bool,
) -> PvcStatus {
    guard(|| {
        let (g, c) = (borrow(graph, "graph")?, borrow(coloring, "coloring")?);
        put(out, is_strong_proper_vertex_connected(&g.graph, &c.coloring)?, "out")
    })
}

fn oracle_config(max_order: usize) -> OracleConfig {
    match max_order {
        0 => OracleConfig::default(),
        n => OracleConfig::default().with_max_order(n),
    }
}

/// Exact pvc_k by exhaustive search. `max_order` 0 keeps the default order cap.
/// `optimal` may be null; otherwise it receives an optimal coloring, or null
/// when the value is 0.
///
/// # Safety
/// `graph` is a live handle; `value` is writable; `optimal` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_oracle_pvck(
    graph: *const PvcGraph,
    k: usize,
    max_order: usize,
    value: *mut u32,
    optimal: *mut *mut PvcColoring,
) -> PvcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let found = brute_pvc_k(&g.graph, k, &oracle_config(max_order))?;
        put(value, found.value, "value")?;
        write_optimal(optimal, found.optimal_coloring);
        Ok(())
    })
}

/// Exact spvc by exhaustive search; arguments as for [`pvc_oracle_pvck`].
///
/// # Safety
/// `graph` is a live handle; `value` is writable; `optimal` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_oracle_spvc(
    graph: *const PvcGraph,
    max_order: usize,
    value: *mut u32,
    optimal: *mut *mut PvcColoring,
) -> PvcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let found = brute_spvc(&g.graph, &oracle_config(max_order))?;
        put(value, found.value, "value")?;
        write_optimal(optimal, found.optimal_coloring);
        Ok(())
    })
}

unsafe fn write_optimal(optimal: *mut *mut PvcColoring, coloring: Option<VertexColoring>) {
    if !optimal.is_null() {
        let handle = coloring.map_or(ptr::null_mut(), |coloring| Box::into_raw(Box::new(PvcColoring { coloring })));
        optimal.write(handle);
    }
}

/// Closed-form value for the `kind` product of `left` and `right`. `k` selects
/// pvc_k; `k = 0` selects spvc. [`PvcStatus::NoFormula`] when no statement
/// covers the pair.
///
/// # Safety
/// `left` and `right` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pvc_theorem_value(
    kind: PvcProductKind,
    left: *const PvcGraph,
    right: *const PvcGraph,
    k: usize,
    out: *mut PvcPrediction,
) -> PvcStatus {
    guard(|| {
        let (g, h) = (borrow(left, "left")?, borrow(right, "right")?);
        let param = if k == 0 { Parameter::Spvc } else { Parameter::Pvck(k) };
        let report = evaluate_product(kind.into(), &g.graph, &h.graph, param, &OracleConfig::default())?;
        let (lo, hi) = match report.predicted {
            Prediction::Exact(v) => (v, v),
            Prediction::Interval { lo, hi } => (lo, hi),
            Prediction::Unknown => return Err(Failure(PvcStatus::NoFormula, "no value known".into())),
        };
        put(out, PvcPrediction { lo, hi, verified: report.verified }, "out")
    })
}
