//! C ABI for the yendo library.
//!
//! The algebra lives behind an opaque handle created with
//! [`yendo_context_new`] and released with [`yendo_context_free`].
//! Computations return UTF-8 JSON documents (the same schema the CLI
//! emits with `--format json`) as C strings that must be released with
//! [`yendo_string_free`]. Every function reports a [`YendoStatus`]; no
//! panic crosses the boundary.

use std::ffi::CString;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use yendo::report::{self, document, to_json};
use yendo::{oracle, verify, AlgebraContext, Error};

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YendoStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments outside the supported domain (bad partition, g out of
    /// range, dimension bounds, model bounds).
    InvalidArgument = 2,
    /// The requested `(m, g)` does not index a summand: `C(m+2g, g)` is even.
    NotASummand = 3,
    /// An internal invariant failed; this is a bug, not a usage error.
    Internal = 4,
}

/// Opaque handle to the algebra of one two-part partition.
pub struct YendoContext {
    inner: AlgebraContext,
}

fn status_of(err: &Error) -> YendoStatus {
    match err {
        Error::NotASummand { .. } => YendoStatus::NotASummand,
        Error::CheckFailed(_) => YendoStatus::Internal,
        _ => YendoStatus::InvalidArgument,
    }
}

fn guarded<F: FnOnce() -> YendoStatus>(f: F) -> YendoStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(YendoStatus::Internal)
}

/// Writes `text` to `*out` as a newly allocated C string.
fn write_string(text: String, out: *mut *mut c_char) -> YendoStatus {
    // JSON and the renderers never contain interior NULs.
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => return YendoStatus::Internal,
    };
    unsafe { *out = c.into_raw() };
    YendoStatus::Ok
}

unsafe fn context<'a>(ctx: *const YendoContext) -> Option<&'a AlgebraContext> {
    ctx.as_ref().map(|c| &c.inner)
}

/// Creates the algebra for `m = lambda1 - lambda2` and `lambda2`.
/// On success stores the handle in `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_context_new(
    m: u64,
    lambda2: u64,
    out: *mut *mut YendoContext,
) -> YendoStatus {
    if out.is_null() {
        return YendoStatus::NullArgument;
    }
    guarded(|| match AlgebraContext::new(m, lambda2) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(YendoContext { inner }));
            YendoStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Creates the algebra for the partition `(lambda1, lambda2)`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_context_for_lambda(
    lambda1: u64,
    lambda2: u64,
    out: *mut *mut YendoContext,
) -> YendoStatus {
    if out.is_null() {
        return YendoStatus::NullArgument;
    }
    guarded(|| match AlgebraContext::for_lambda(lambda1, lambda2) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(YendoContext { inner }));
            YendoStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a handle created by the constructors. Null is a no-op.
///
/// # Safety
/// `ctx` must be null or a pointer previously returned by a constructor,
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn yendo_context_free(ctx: *mut YendoContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Vector-space dimension `lambda2 + 1` of the algebra; 0 for null.
///
/// # Safety
/// `ctx` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn yendo_context_dimension(ctx: *const YendoContext) -> u64 {
    context(ctx).map_or(0, |c| c.dim() as u64)
}

macro_rules! json_op {
    ($ctx:expr, $out:expr, $command:expr, $build:expr) => {{
        if $out.is_null() {
            return YendoStatus::NullArgument;
        }
        let Some(ctx) = context($ctx) else {
            return YendoStatus::NullArgument;
        };
        guarded(|| match $build(ctx) {
            Ok(rep) => write_string(to_json(&document($command, rep)), $out),
            Err(e) => status_of(&e),
        })
    }};
}

/// Multiplication table of the algebra as a JSON document.
///
/// # Safety
/// `ctx` must be a valid handle; `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_mult_table_json(
    ctx: *const YendoContext,
    out: *mut *mut c_char,
) -> YendoStatus {
    json_op!(ctx, out, "mult-table", |c: &AlgebraContext| {
        Ok::<_, Error>(report::mult_table_report(c))
    })
}

/// Summand criterion for every `g` as a JSON document.
///
/// # Safety
/// `ctx` must be a valid handle; `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_decompose_json(
    ctx: *const YendoContext,
    out: *mut *mut c_char,
) -> YendoStatus {
    json_op!(ctx, out, "decompose", |c: &AlgebraContext| {
        Ok::<_, Error>(report::decompose_report(c))
    })
}

/// The idempotent family as a JSON document.
///
/// # Safety
/// `ctx` must be a valid handle; `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_idempotents_json(
    ctx: *const YendoContext,
    out: *mut *mut c_char,
) -> YendoStatus {
    json_op!(ctx, out, "idempotents", |c: &AlgebraContext| {
        Ok::<_, Error>(report::idempotents_report(c, None))
    })
}

/// Basis, generators and presentation of the summand selected by `g`,
/// as a JSON document.
///
/// # Safety
/// `ctx` must be a valid handle; `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_endo_json(
    ctx: *const YendoContext,
    g: u64,
    out: *mut *mut c_char,
) -> YendoStatus {
    json_op!(ctx, out, "endo", |c: &AlgebraContext| report::endo_report(
        c, g
    ))
}

/// Canonical presentation of dimension `dim` as a JSON document.
///
/// # Safety
/// `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_presentation_json(dim: u64, out: *mut *mut c_char) -> YendoStatus {
    if out.is_null() {
        return YendoStatus::NullArgument;
    }
    guarded(|| match report::presentation_report(dim) {
        Ok(rep) => write_string(to_json(&document("presentation", rep)), out),
        Err(e) => status_of(&e),
    })
}

/// Canonical presentation of dimension `dim` as a one-line string such
/// as `K[x1,x2]/<x1^2,x2^2,x1x2>`.
///
/// # Safety
/// `out` must point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_presentation_text(dim: u64, out: *mut *mut c_char) -> YendoStatus {
    if out.is_null() {
        return YendoStatus::NullArgument;
    }
    guarded(|| match report::presentation_report(dim) {
        Ok(rep) => write_string(rep.text, out),
        Err(e) => status_of(&e),
    })
}

/// Runs the verification battery. `*out_pass` reports the verdict; the
/// JSON document in `*out` carries the per-check detail.
///
/// # Safety
/// `ctx` must be a valid handle; `out` and `out_pass` must point to
/// writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_verify_json(
    ctx: *const YendoContext,
    out: *mut *mut c_char,
    out_pass: *mut bool,
) -> YendoStatus {
    if out.is_null() || out_pass.is_null() {
        return YendoStatus::NullArgument;
    }
    let Some(ctx) = context(ctx) else {
        return YendoStatus::NullArgument;
    };
    guarded(|| {
        let rep = verify::verify_lambda(ctx);
        *out_pass = rep.pass;
        write_string(to_json(&document("verify", rep)), out)
    })
}

/// Compares the algebra against the independently built subset model.
/// Fails with `INVALID_ARGUMENT` when `r` exceeds the model bound.
///
/// # Safety
/// `ctx` must be a valid handle; `out` and `out_pass` must point to
/// writable memory.
#[no_mangle]
pub unsafe extern "C" fn yendo_oracle_check_json(
    ctx: *const YendoContext,
    out: *mut *mut c_char,
    out_pass: *mut bool,
) -> YendoStatus {
    if out.is_null() || out_pass.is_null() {
        return YendoStatus::NullArgument;
    }
    let Some(ctx) = context(ctx) else {
        return YendoStatus::NullArgument;
    };
    guarded(|| match oracle::oracle_check_report(ctx) {
        Ok(rep) => {
            *out_pass = rep.pass;
            write_string(to_json(&document("oracle-check", rep)), out)
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library,
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn yendo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name of a status code, e.g. `"YENDO_STATUS_OK"`.
#[no_mangle]
pub extern "C" fn yendo_status_name(status: YendoStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        YendoStatus::Ok => b"YENDO_STATUS_OK\0",
        YendoStatus::NullArgument => b"YENDO_STATUS_NULL_ARGUMENT\0",
        YendoStatus::InvalidArgument => b"YENDO_STATUS_INVALID_ARGUMENT\0",
        YendoStatus::NotASummand => b"YENDO_STATUS_NOT_A_SUMMAND\0",
        YendoStatus::Internal => b"YENDO_STATUS_INTERNAL\0",
    };
    name.as_ptr().cast()
}
