//! C ABI for the surface-pair analyzer: opaque handles in, JSON and DOT
//! text out, with integer status codes. Strings handed back through out
//! pointers are heap allocated and must be released with
//! `kappar_string_free`; surfaces with `kappar_surface_free`.
//!
//! Every failing call stores a description retrievable through
//! `kappar_last_error` until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kappar::docs::{from_document, replay, to_document, ScriptDocument, SurfaceDocument};
use kappar::dot::to_dot;
use kappar::gallery::{build, GallerySpec};
use kappar::pair::RealSNCPair;
use kappar::report::analyze;

/// Result of a call. Everything except `Ok` leaves a message in
/// `kappar_last_error`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KapparStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input could not be parsed or replayed into a surface.
    ParseError = 3,
    /// The surface violates its structural invariants.
    ValidationError = 4,
    /// The computation failed internally.
    ComputeError = 5,
}

/// A surface pair behind an opaque pointer.
pub struct KapparSurface {
    pair: RealSNCPair,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("no interior nul");
    });
}

fn fail(status: KapparStatus, msg: &str) -> KapparStatus {
    set_error(msg);
    status
}

/// Returns the message of the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread;
/// never free it.
#[no_mangle]
pub extern "C" fn kappar_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, KapparStatus> {
    if ptr.is_null() {
        return Err(fail(KapparStatus::NullArgument, "string argument is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| fail(KapparStatus::InvalidUtf8, &format!("argument: {e}")))
}

fn deliver_surface(
    out: *mut *mut KapparSurface,
    pair: RealSNCPair,
) -> KapparStatus {
    let handle = Box::new(KapparSurface { pair });
    unsafe { *out = Box::into_raw(handle) };
    KapparStatus::Ok
}

fn deliver_string(out: *mut *mut c_char, text: String) -> KapparStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            KapparStatus::Ok
        }
        Err(e) => fail(KapparStatus::ComputeError, &format!("output string: {e}")),
    }
}

fn guarded<F: FnOnce() -> KapparStatus>(f: F) -> KapparStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(KapparStatus::ComputeError, "internal panic"),
    }
}

/// Builds a surface from a surface document in JSON form.
///
/// # Safety
/// `json` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer; both stay owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_from_json(
    json: *const c_char,
    out: *mut *mut KapparSurface,
) -> KapparStatus {
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    let text = match utf8_arg(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| {
        let doc: SurfaceDocument = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(e) => return fail(KapparStatus::ParseError, &format!("surface document: {e}")),
        };
        match from_document(&doc) {
            Ok(pair) => deliver_surface(out, pair),
            Err(e) => fail(KapparStatus::ParseError, &format!("surface document: {e}")),
        }
    })
}

/// Builds a surface by replaying a blow-up script in JSON form.
///
/// # Safety
/// Same contract as `kappar_surface_from_json`.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_from_script_json(
    json: *const c_char,
    out: *mut *mut KapparSurface,
) -> KapparStatus {
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    let text = match utf8_arg(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| {
        let doc: ScriptDocument = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(e) => return fail(KapparStatus::ParseError, &format!("script document: {e}")),
        };
        match replay(&doc) {
            Ok(pair) => deliver_surface(out, pair),
            Err(e) => fail(KapparStatus::ParseError, &format!("script replay: {e}")),
        }
    })
}

/// Builds one of the bundled gallery surfaces. `params` may be null when
/// `params_len` is zero; the documented defaults apply then.
///
/// # Safety
/// `name` must be NUL-terminated, `params` must point to `params_len`
/// integers when non-null, `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_from_gallery(
    name: *const c_char,
    params: *const i64,
    params_len: usize,
    out: *mut *mut KapparSurface,
) -> KapparStatus {
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    let name = match utf8_arg(name) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let params: Vec<i64> = if params_len == 0 {
        Vec::new()
    } else {
        if params.is_null() {
            return fail(KapparStatus::NullArgument, "params is null with nonzero length");
        }
        std::slice::from_raw_parts(params, params_len).to_vec()
    };
    guarded(|| {
        let spec = match GallerySpec::from_args(name, &params) {
            Ok(s) => s,
            Err(e) => return fail(KapparStatus::ParseError, &e.to_string()),
        };
        match build(&spec) {
            Ok(pair) => deliver_surface(out, pair),
            Err(e) => fail(KapparStatus::ComputeError, &e.to_string()),
        }
    })
}

/// Releases a surface handle. A null pointer is ignored.
///
/// # Safety
/// `surface` must come from one of the constructors and not be used again.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_free(surface: *mut KapparSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// Number of curve components of the surface; zero for null input.
///
/// # Safety
/// `surface` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_component_count(surface: *const KapparSurface) -> usize {
    surface
        .as_ref()
        .map_or(0, |s| s.pair.component_count())
}

/// Number of boundary components of the surface; zero for null input.
///
/// # Safety
/// `surface` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_boundary_count(surface: *const KapparSurface) -> usize {
    surface.as_ref().map_or(0, |s| s.pair.boundary().len())
}

/// Checks the structural invariants. Returns `Ok` when clean, otherwise
/// `ValidationError` with the first violation as the error message.
///
/// # Safety
/// `surface` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_validate(surface: *const KapparSurface) -> KapparStatus {
    let Some(s) = surface.as_ref() else {
        return fail(KapparStatus::NullArgument, "surface is null");
    };
    guarded(|| {
        let violations = s.pair.validate();
        match violations.first() {
            None => KapparStatus::Ok,
            Some(first) => fail(
                KapparStatus::ValidationError,
                &format!("{} violation(s); first: {first}", violations.len()),
            ),
        }
    })
}

/// Runs the full analysis and returns the JSON report. With `include_raw`
/// the real Kodaira section also carries the value before imaginary loop
/// elimination.
///
/// # Safety
/// `surface` must be a live handle and `out` writable; the returned
/// string must be freed with `kappar_string_free`.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_analyze_json(
    surface: *const KapparSurface,
    include_raw: bool,
    out: *mut *mut c_char,
) -> KapparStatus {
    let Some(s) = surface.as_ref() else {
        return fail(KapparStatus::NullArgument, "surface is null");
    };
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    guarded(|| deliver_string(out, analyze(&s.pair, include_raw).to_json()))
}

/// Serializes the surface as a surface document in JSON form.
///
/// # Safety
/// Same contract as `kappar_surface_analyze_json`.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_to_json(
    surface: *const KapparSurface,
    out: *mut *mut c_char,
) -> KapparStatus {
    let Some(s) = surface.as_ref() else {
        return fail(KapparStatus::NullArgument, "surface is null");
    };
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    guarded(|| {
        let doc = to_document(&s.pair);
        match serde_json::to_string_pretty(&doc) {
            Ok(text) => deliver_string(out, text),
            Err(e) => fail(KapparStatus::ComputeError, &format!("serialize: {e}")),
        }
    })
}

/// Renders the weighted dual graph in DOT format.
///
/// # Safety
/// Same contract as `kappar_surface_analyze_json`.
#[no_mangle]
pub unsafe extern "C" fn kappar_surface_to_dot(
    surface: *const KapparSurface,
    out: *mut *mut c_char,
) -> KapparStatus {
    let Some(s) = surface.as_ref() else {
        return fail(KapparStatus::NullArgument, "surface is null");
    };
    if out.is_null() {
        return fail(KapparStatus::NullArgument, "out pointer is null");
    }
    guarded(|| deliver_string(out, to_dot(&s.pair)))
}

/// Releases a string returned by this library. A null pointer is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn kappar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
