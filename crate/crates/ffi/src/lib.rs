//! C ABI over `surfdens`.
//!
//! Graphs and embeddings are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`SdStatus`]; on failure the message is available from
//! [`sd_last_error_message`] on the same thread. Big counts are returned as
//! decimal strings released with [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use surfdens::counting::{count_cliques, count_copies};
use surfdens::embedding::EmbeddedGraph;
use surfdens::flap::{flap_number, is_strongly_non_planar, tree_beta};
use surfdens::planarity::is_planar;
use surfdens::{Error, Graph};

/// Opaque graph handle.
pub struct SdGraph(Graph);

/// Opaque embedded-graph handle.
pub struct SdEmbedding(EmbeddedGraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    VertexOutOfRange = 4,
    NotAnEdge = 5,
    SizeCap = 6,
    WorkCap = 7,
    Disconnected = 8,
    NotATree = 9,
    NotATriangulation = 10,
    Precondition = 11,
    Panic = 12,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Parse { .. } => SdStatus::Parse,
        Error::VertexOutOfRange { .. } => SdStatus::VertexOutOfRange,
        Error::NotAnEdge(..) => SdStatus::NotAnEdge,
        Error::SizeCap { .. } => SdStatus::SizeCap,
        Error::WorkCap { .. } => SdStatus::WorkCap,
        Error::Disconnected => SdStatus::Disconnected,
        Error::NotATree => SdStatus::NotATree,
        Error::NotATriangulation => SdStatus::NotATriangulation,
        Error::Precondition(_) => SdStatus::Precondition,
    }
}

struct Fail(SdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SdStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SdStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(SdStatus::NullPointer, "null handle".into()))
}

unsafe fn utf8<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SdStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SdStatus::InvalidUtf8, "input is not UTF-8".into()))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the edge-list format (`n m` header, one `u v` per line).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_parse(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| {
        let g = Graph::parse(utf8(text)?)?;
        write(out, Box::into_raw(Box::new(SdGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from `sd_graph_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_free(g: *mut SdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_serialize(g: *const SdGraph, out: *mut *mut c_char) -> SdStatus {
    guard(|| write(out, c_string(borrow(g)?.0.serialize())))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_order(g: *const SdGraph, out: *mut usize) -> SdStatus {
    guard(|| write(out, borrow(g)?.0.n()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_size(g: *const SdGraph, out: *mut usize) -> SdStatus {
    guard(|| write(out, borrow(g)?.0.m()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_flap_number(g: *const SdGraph, out: *mut usize) -> SdStatus {
    guard(|| write(out, flap_number(&borrow(g)?.0)?))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_is_planar(g: *const SdGraph, out: *mut bool) -> SdStatus {
    guard(|| write(out, is_planar(&borrow(g)?.0)?))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_is_strongly_non_planar(g: *const SdGraph, out: *mut bool) -> SdStatus {
    guard(|| write(out, is_strongly_non_planar(&borrow(g)?.0)))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_tree_beta(t: *const SdGraph, out: *mut usize) -> SdStatus {
    guard(|| write(out, tree_beta(&borrow(t)?.0)?))
}

/// Copies of `h` in `g`, as a decimal string.
///
/// # Safety
/// `h` and `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_count_copies(
    h: *const SdGraph,
    g: *const SdGraph,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let c = count_copies(&borrow(h)?.0, &borrow(g)?.0)?;
        write(out, c_string(c.to_string()))
    })
}

/// Copies of `K_s` in `g`, as a decimal string.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_count_cliques(g: *const SdGraph, s: usize, out: *mut *mut c_char) -> SdStatus {
    guard(|| write(out, c_string(count_cliques(&borrow(g)?.0, s).to_string())))
}

/// Parses the rotation-system format (`n`, then `v: u1 u2- ...`).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_embedding_parse(text: *const c_char, out: *mut *mut SdEmbedding) -> SdStatus {
    guard(|| {
        let e = EmbeddedGraph::parse(utf8(text)?)?;
        write(out, Box::into_raw(Box::new(SdEmbedding(e))))
    })
}

/// # Safety
/// `e` must be null or a handle from `sd_embedding_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_embedding_free(e: *mut SdEmbedding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_embedding_genus(e: *const SdEmbedding, out: *mut usize) -> SdStatus {
    guard(|| write(out, borrow(e)?.0.euler_genus()?))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_embedding_face_count(e: *const SdEmbedding, out: *mut usize) -> SdStatus {
    guard(|| write(out, borrow(e)?.0.trace_faces().len()))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_embedding_is_triangulation(e: *const SdEmbedding, out: *mut bool) -> SdStatus {
    guard(|| write(out, borrow(e)?.0.is_triangulation()))
}
