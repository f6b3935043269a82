//! C ABI over `ik_sieve`.
//!
//! Graphs cross the boundary as opaque `IkGraph` handles owned by the caller
//! and released with `ik_graph_free`. Every fallible call returns an
//! `IkStatus`; on failure `ik_last_error_message` describes the error for the
//! calling thread. Panics are caught and reported as `IK_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ik_sieve::families::Catalog;
use ik_sieve::planarity::{is_planar, prop21_classify, Prop21Verdict};
use ik_sieve::sieve::{sieve_graph, two_apex_witness, Outcome};
use ik_sieve::{are_isomorphic, decode_graph6, encode_graph6, Graph};

/// Opaque graph handle.
pub struct IkGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    NotFound = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkProp21 {
    Planar = 0,
    K33 = 1,
    K5 = 2,
    K33E1 = 3,
    K33E2 = 4,
    GeneralNonplanar = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkOutcome {
    Eliminated = 0,
    IkByMinor = 1,
    Undetermined = 2,
    NotIkComponentBound = 3,
}

/// Count-equation fields of one `Ĝ_{a,b}` computation.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IkReductionTrace {
    pub ne: u32,
    pub nv3: u32,
    pub nv4: u32,
    pub nvy: u32,
    pub predicted_edges: i64,
    pub actual_edges: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn guard(f: impl FnOnce() -> Result<(), (IkStatus, String)>) -> IkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IkStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IkStatus::Panic
        }
    }
}

fn null() -> (IkStatus, String) {
    (IkStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph<'a>(g: *const IkGraph) -> Result<&'a Graph, (IkStatus, String)> {
    g.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (IkStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn boxed(g: Graph) -> *mut IkGraph {
    Box::into_raw(Box::new(IkGraph(g)))
}

fn invalid(e: impl ToString) -> (IkStatus, String) {
    (IkStatus::InvalidArgument, e.to_string())
}

/// Builds a graph from `edge_count` vertex pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_new(
    vertex_count: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut IkGraph,
) -> IkStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = Graph::new(vertex_count as usize, &pairs).map_err(invalid)?;
        put(out, boxed(g))
    })
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_from_graph6(text: *const c_char, out: *mut *mut IkGraph) -> IkStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| (IkStatus::Parse, e.to_string()))?;
        let g = decode_graph6(s).map_err(|e| (IkStatus::Parse, e.to_string()))?;
        put(out, boxed(g))
    })
}

/// Builds a named catalog graph (K7, K5, K33, K55, K3311, HEAWOOD, COUSIN110).
///
/// # Safety
/// `name` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_catalog(name: *const c_char, out: *mut *mut IkGraph) -> IkStatus {
    guard(|| {
        if name.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(name).to_str().map_err(invalid)?;
        let c: Catalog = s.parse().map_err(|e| (IkStatus::NotFound, format!("{e}")))?;
        put(out, boxed(c.graph()))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_free(g: *mut IkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_vertex_count(g: *const IkGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.0.vertex_count() as u32)
}

/// Edge count with multiplicity, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_edge_count(g: *const IkGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.0.edge_count() as u32)
}

/// Writes the graph6 text plus a NUL into `buf`. `needed` receives the
/// required size including the NUL, also when the buffer is too small.
///
/// # Safety
/// `buf` must have `len` writable bytes (may be null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn ik_graph_to_graph6(
    g: *const IkGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> IkStatus {
    guard(|| {
        let text = encode_graph6(graph(g)?).map_err(invalid)?;
        if !needed.is_null() {
            needed.write(text.len() + 1);
        }
        if buf.is_null() || len < text.len() + 1 {
            return Err((IkStatus::BufferTooSmall, format!("need {} bytes", text.len() + 1)));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        buf.add(text.len()).write(0);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_is_planar(g: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| put(out, is_planar(graph(g)?)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_is_bipartite(g: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| put(out, graph(g)?.is_bipartite()))
}

/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_are_isomorphic(g: *const IkGraph, h: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| put(out, are_isomorphic(graph(g)?, graph(h)?)))
}

/// Computes `Ĝ_{a,b}`. Either output pointer may be null.
///
/// # Safety
/// `g` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_hat(
    g: *const IkGraph,
    a: u32,
    b: u32,
    out_graph: *mut *mut IkGraph,
    out_trace: *mut IkReductionTrace,
) -> IkStatus {
    guard(|| {
        let (h, t) = ik_sieve::simplify::hat(graph(g)?, a as usize, b as usize).map_err(invalid)?;
        if !out_trace.is_null() {
            out_trace.write(IkReductionTrace {
                ne: t.ne as u32,
                nv3: t.nv3 as u32,
                nv4: t.nv4 as u32,
                nvy: t.nvy as u32,
                predicted_edges: t.predicted_edges as i64,
                actual_edges: t.actual_edges as u32,
            });
        }
        if !out_graph.is_null() {
            out_graph.write(boxed(h));
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_prop21_classify(g: *const IkGraph, out: *mut IkProp21) -> IkStatus {
    guard(|| {
        let v = match prop21_classify(graph(g)?).map_err(invalid)? {
            Prop21Verdict::Planar => IkProp21::Planar,
            Prop21Verdict::K33 => IkProp21::K33,
            Prop21Verdict::K5 => IkProp21::K5,
            Prop21Verdict::K33E1 => IkProp21::K33E1,
            Prop21Verdict::K33E2 => IkProp21::K33E2,
            Prop21Verdict::GeneralNonplanar => IkProp21::GeneralNonplanar,
        };
        put(out, v)
    })
}

/// First pair with a planar `Ĝ_{a,b}`; `IK_STATUS_NOT_FOUND` when none.
///
/// # Safety
/// `g` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_two_apex_witness(g: *const IkGraph, a: *mut u32, b: *mut u32) -> IkStatus {
    guard(|| match two_apex_witness(graph(g)?) {
        Some((x, y)) => {
            put(a, x as u32)?;
            put(b, y as u32)
        }
        None => Err((IkStatus::NotFound, "no pair gives a planar reduced graph".into())),
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_sieve_graph(g: *const IkGraph, out: *mut IkOutcome) -> IkStatus {
    guard(|| {
        let v = match sieve_graph(graph(g)?).outcome {
            Outcome::Eliminated => IkOutcome::Eliminated,
            Outcome::IkByMinor => IkOutcome::IkByMinor,
            Outcome::Undetermined => IkOutcome::Undetermined,
            Outcome::NotIkComponentBound => IkOutcome::NotIkComponentBound,
        };
        put(out, v)
    })
}

/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_has_minor(g: *const IkGraph, h: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| put(out, ik_sieve::minors::has_minor(graph(g)?, graph(h)?).is_some()))
}

/// Copies the calling thread's last error message (NUL-terminated, truncated
/// to fit) and returns its full length without the NUL.
///
/// # Safety
/// `buf` must have `len` writable bytes (may be null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn ik_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            buf.add(n).write(0);
        }
        msg.len()
    })
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn ik_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
