//! C ABI over the radpoly engine.
//!
//! Every function returns a [`RadpolyStatus`]; results go through out
//! pointers. Strings are NUL-terminated UTF-8. Text results are copied into a
//! caller buffer: the required length (without the NUL) is always stored in
//! `out_len`, and `RADPOLY_STATUS_BUFFER_TOO_SMALL` is returned when
//! `buf_len` cannot hold it plus the NUL, so a call with a null buffer and
//! zero length queries the size. After a failure,
//! [`radpoly_last_error_message`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use radpoly::catalog::{Catalog, PolytopeRecord};
use radpoly::enumerate::{chord_catalog, enumerate_by_edge_addition};
use radpoly::graph::MAX_ORDER;
use radpoly::outerplanar::is_radius_one_polytope;
use radpoly::sequences::classify_sequence;
use radpoly::{graph6, DegreeSequence, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadpolyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph6 = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// Opaque catalog handle; release with [`radpoly_catalog_free`].
pub struct RadpolyCatalog {
    catalog: Catalog,
    /// Records in `(p, q, code)` order, for indexed access.
    flat: Vec<PolytopeRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("NULs removed"));
}

fn fail(status: RadpolyStatus, message: impl Into<String>) -> RadpolyStatus {
    set_error(message);
    status
}

fn from_error(e: Error) -> RadpolyStatus {
    let status = match e {
        Error::Graph6 { .. } => RadpolyStatus::InvalidGraph6,
        Error::OrderTooLarge(_) | Error::WheelTooSmall(_) => RadpolyStatus::OutOfRange,
        Error::InvalidSequence(_) | Error::FamilyParameters { .. } => RadpolyStatus::InvalidArgument,
        _ => RadpolyStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning panics into `Internal`.
fn guard(body: impl FnOnce() -> RadpolyStatus) -> RadpolyStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(RadpolyStatus::Internal, "internal panic"),
    }
}

unsafe fn input_str<'a>(ptr: *const c_char) -> Result<&'a str, RadpolyStatus> {
    if ptr.is_null() {
        return Err(fail(RadpolyStatus::NullPointer, "null input string"));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| fail(RadpolyStatus::InvalidArgument, "input is not UTF-8"))
}

unsafe fn write_text(text: &str, buf: *mut c_char, buf_len: usize, out_len: *mut usize) -> RadpolyStatus {
    if out_len.is_null() {
        return fail(RadpolyStatus::NullPointer, "null out_len");
    }
    *out_len = text.len();
    if buf.is_null() || buf_len < text.len() + 1 {
        return fail(RadpolyStatus::BufferTooSmall, format!("need {} bytes", text.len() + 1));
    }
    std::ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
    *buf.add(text.len()) = 0;
    RadpolyStatus::Ok
}

unsafe fn catalog_ref<'a>(cat: *const RadpolyCatalog) -> Result<&'a RadpolyCatalog, RadpolyStatus> {
    cat.as_ref().ok_or_else(|| fail(RadpolyStatus::NullPointer, "null catalog"))
}

fn into_handle(catalog: Catalog, out: *mut *mut RadpolyCatalog) -> RadpolyStatus {
    let flat = catalog.records().cloned().collect();
    // SAFETY: caller checked `out` is non-null.
    unsafe { *out = Box::into_raw(Box::new(RadpolyCatalog { catalog, flat })) };
    RadpolyStatus::Ok
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn radpoly_status_string(status: RadpolyStatus) -> *const c_char {
    let s: &'static CStr = match status {
        RadpolyStatus::Ok => c"ok",
        RadpolyStatus::NullPointer => c"null pointer",
        RadpolyStatus::InvalidArgument => c"invalid argument",
        RadpolyStatus::InvalidGraph6 => c"invalid graph6",
        RadpolyStatus::OutOfRange => c"out of range",
        RadpolyStatus::BufferTooSmall => c"buffer too small",
        RadpolyStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message for the last failure on this thread; valid until the next call
/// that fails on the same thread.
#[no_mangle]
pub extern "C" fn radpoly_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// All polytopes with at most `max_edges` edges.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_by_edges(max_edges: u32, out: *mut *mut RadpolyCatalog) -> RadpolyStatus {
    guard(|| {
        if out.is_null() {
            return fail(RadpolyStatus::NullPointer, "null out");
        }
        if !(6..=3 * MAX_ORDER as u32 - 6).contains(&max_edges) {
            return fail(RadpolyStatus::OutOfRange, format!("max_edges {max_edges} outside 6..={}", 3 * MAX_ORDER - 6));
        }
        match enumerate_by_edge_addition(max_edges as usize) {
            Ok(c) => into_handle(c, out),
            Err(e) => from_error(e),
        }
    })
}

/// All polytopes with at most `max_order` vertices.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_by_order(max_order: u32, out: *mut *mut RadpolyCatalog) -> RadpolyStatus {
    guard(|| {
        if out.is_null() {
            return fail(RadpolyStatus::NullPointer, "null out");
        }
        if !(4..=MAX_ORDER as u32).contains(&max_order) {
            return fail(RadpolyStatus::OutOfRange, format!("max_order {max_order} outside 4..={MAX_ORDER}"));
        }
        match chord_catalog(max_order as usize) {
            Ok(c) => into_handle(c, out),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `cat` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_free(cat: *mut RadpolyCatalog) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// Number of records in the catalog.
///
/// # Safety
/// `cat` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_len(cat: *const RadpolyCatalog, out: *mut usize) -> RadpolyStatus {
    guard(|| {
        let cat = match catalog_ref(cat) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RadpolyStatus::NullPointer, "null out");
        }
        *out = cat.flat.len();
        RadpolyStatus::Ok
    })
}

/// Number of records with `p` vertices and `q` edges.
///
/// # Safety
/// `cat` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_cell_count(
    cat: *const RadpolyCatalog,
    p: u32,
    q: u32,
    out: *mut usize,
) -> RadpolyStatus {
    guard(|| {
        let cat = match catalog_ref(cat) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RadpolyStatus::NullPointer, "null out");
        }
        if !cat.catalog.coverage().covers(p as usize, q as usize) {
            return fail(RadpolyStatus::OutOfRange, format!("cell p={p} q={q} not covered by this catalog"));
        }
        *out = cat.catalog.cell(p as usize, q as usize).len();
        RadpolyStatus::Ok
    })
}

/// graph6 of record `index` (records ordered by order, size, then code).
///
/// # Safety
/// `cat` must be a live handle, `buf` writable for `buf_len` bytes (or null),
/// and `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_catalog_record_graph6(
    cat: *const RadpolyCatalog,
    index: usize,
    buf: *mut c_char,
    buf_len: usize,
    out_len: *mut usize,
) -> RadpolyStatus {
    guard(|| {
        let cat = match catalog_ref(cat) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match cat.flat.get(index) {
            Some(r) => write_text(&graph6::encode(&r.graph), buf, buf_len, out_len),
            None => fail(RadpolyStatus::OutOfRange, format!("index {index} >= {}", cat.flat.len())),
        }
    })
}

/// Whether the graph6 graph is a 3-polytope of radius 1.
///
/// # Safety
/// `graph6` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_is_radius_one_polytope(graph6: *const c_char, out: *mut bool) -> RadpolyStatus {
    guard(|| {
        let text = match input_str(graph6) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RadpolyStatus::NullPointer, "null out");
        }
        match graph6::decode(text) {
            Ok(g) => {
                *out = is_radius_one_polytope(&g);
                RadpolyStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// graph6 of the canonical form: equal outputs iff isomorphic inputs.
///
/// # Safety
/// `graph6` must be a NUL-terminated string, `buf` writable for `buf_len`
/// bytes (or null), and `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_canonical_graph6(
    graph6: *const c_char,
    buf: *mut c_char,
    buf_len: usize,
    out_len: *mut usize,
) -> RadpolyStatus {
    guard(|| {
        let text = match input_str(graph6) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match graph6::decode(text) {
            Ok(g) => write_text(&graph6::encode(&radpoly::canonical_form(&g)), buf, buf_len, out_len),
            Err(e) => from_error(e),
        }
    })
}

/// Family classes of a comma-separated degree sequence, one per line
/// (`A1 p=7`), or `None`.
///
/// # Safety
/// `sequence` must be a NUL-terminated string, `buf` writable for `buf_len`
/// bytes (or null), and `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn radpoly_classify(
    sequence: *const c_char,
    buf: *mut c_char,
    buf_len: usize,
    out_len: *mut usize,
) -> RadpolyStatus {
    guard(|| {
        let text = match input_str(sequence) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let seq: DegreeSequence = match text.parse() {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        let classes = classify_sequence(&seq);
        let joined = if classes.is_empty() {
            "None".to_string()
        } else {
            classes.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
        };
        write_text(&joined, buf, buf_len, out_len)
    })
}
