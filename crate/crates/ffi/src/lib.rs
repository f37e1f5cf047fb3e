//! C ABI over `skewdet`.
//!
//! Conventions:
//! - every function returns a [`SkewdetStatus`] and writes results through
//!   out-pointers, which are left untouched on failure;
//! - shapes and decompositions are opaque handles, released with their
//!   `_free` function;
//! - big integers and JSON documents come back as NUL-terminated strings owned
//!   by the caller and released with [`skewdet_string_free`];
//! - after a failure, [`skewdet_last_error_message`] describes it. The message
//!   is per thread and stays valid until the next call on that thread.
//!
//! Panics never cross the boundary; they surface as `SKEWDET_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char};
use std::panic::{AssertUnwindSafe, catch_unwind};

use skewdet::Error;
use skewdet::decomp::{Decomposition, is_nested, peel_rim, peel_thick_rim, validate_decomposition};
use skewdet::mstrip::{MStripSpec, count_mstrip_thm};
use skewdet::nested_det::{corollary_count, verify_identity};
use skewdet::shapes::SkewShape;
use skewdet::tableaux::{count_syt_aitken, schur_jacobi_trudi};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewdetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Shape = 4,
    Decomposition = 5,
    Internal = 6,
    Panic = 7,
}

/// A skew shape `lambda / mu`.
pub struct SkewdetShape(SkewShape);

/// An ordered decomposition of a skew shape into thickened strips.
pub struct SkewdetDecomposition(Decomposition);

/// How [`skewdet_decompose`] peels a shape.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewdetStrategy {
    /// Repeatedly remove the outer rim, giving plain strips.
    Rim = 0,
    /// Repeatedly remove the thickest outer strip.
    ThickRim = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(SkewdetStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidPartition(_)
            | Error::NotContained { .. }
            | Error::NotSkew(_)
            | Error::CellNotInShape(_)
            | Error::Disconnected => SkewdetStatus::Shape,
            Error::NotNested(_) | Error::InvalidDecomposition(_) | Error::SingleCellStrip | Error::SpecialCorner(_) => {
                SkewdetStatus::Decomposition
            }
            Error::Parse(_) => SkewdetStatus::Parse,
            Error::Internal(_) => SkewdetStatus::Internal,
            _ => SkewdetStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Run `f`, record any failure, and turn panics into a status.
fn guard(f: impl FnOnce() -> Outcome) -> SkewdetStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SkewdetStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("panic: {msg}"));
            SkewdetStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SkewdetStatus::NullPointer, format!("{what} is null"))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Outcome {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn slice<'a>(p: *const u32, len: usize, what: &str) -> Result<&'a [u32], Failure> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(unsafe { std::slice::from_raw_parts(p, len) })
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|e| Failure(SkewdetStatus::InvalidArgument, format!("{what} is not UTF-8: {e}")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String, what: &str) -> Outcome {
    let c = CString::new(s).map_err(|e| Failure(SkewdetStatus::Internal, e.to_string()))?;
    unsafe { write(out, c.into_raw(), what) }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failure on this thread, or an empty string. Never null.
#[unsafe(no_mangle)]
pub extern "C" fn skewdet_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[unsafe(no_mangle)]
pub extern "C" fn skewdet_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Build `lambda / mu` from weakly decreasing positive parts.
///
/// # Safety
/// `lambda` and `mu` must point to `lambda_len` and `mu_len` readable values
/// (either may be null when its length is 0); `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_shape_new(
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    out: *mut *mut SkewdetShape,
) -> SkewdetStatus {
    guard(|| {
        let l = unsafe { slice(lambda, lambda_len, "lambda") }?;
        let m = unsafe { slice(mu, mu_len, "mu") }?;
        let s = SkewShape::from_parts(l, m)?;
        unsafe { write(out, boxed(SkewdetShape(s)), "out") }
    })
}

/// Parse a shape from `{"lambda":[..],"mu":[..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_shape_from_json(json: *const c_char, out: *mut *mut SkewdetShape) -> SkewdetStatus {
    guard(|| {
        let s: SkewShape = serde_json::from_str(unsafe { text(json, "json") }?).map_err(Error::from)?;
        unsafe { write(out, boxed(SkewdetShape(s)), "out") }
    })
}

/// # Safety
/// `shape` must come from this library and not have been freed. Null is ignored.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_shape_free(shape: *mut SkewdetShape) {
    if !shape.is_null() {
        drop(unsafe { Box::from_raw(shape) });
    }
}

/// Number of boxes.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_shape_size(shape: *const SkewdetShape, out: *mut usize) -> SkewdetStatus {
    guard(|| {
        let s = unsafe { get(shape, "shape") }?;
        unsafe { write(out, s.0.size(), "out") }
    })
}

/// Number of standard tableaux, as a decimal string.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_count_syt(shape: *const SkewdetShape, out: *mut *mut c_char) -> SkewdetStatus {
    guard(|| {
        let s = unsafe { get(shape, "shape") }?;
        let n = count_syt_aitken(&s.0)?;
        unsafe { write_string(out, n.to_string(), "out") }
    })
}

/// Schur polynomial in `nvars` variables as JSON:
/// `[{"exps":[..],"coef":"decimal"},..]`.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_schur_json(
    shape: *const SkewdetShape,
    nvars: usize,
    out: *mut *mut c_char,
) -> SkewdetStatus {
    guard(|| {
        let s = unsafe { get(shape, "shape") }?;
        if nvars == 0 {
            return Err(Failure(SkewdetStatus::InvalidArgument, "nvars must be positive".into()));
        }
        let p = schur_jacobi_trudi(&s.0, nvars);
        let json = serde_json::to_string(&p.to_json_terms()).map_err(Error::from)?;
        unsafe { write_string(out, json, "out") }
    })
}

/// Peel a shape into an outside nested decomposition. `strategy` is a
/// [`SkewdetStrategy`] value.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decompose(
    shape: *const SkewdetShape,
    strategy: u32,
    out: *mut *mut SkewdetDecomposition,
) -> SkewdetStatus {
    guard(|| {
        let s = unsafe { get(shape, "shape") }?;
        let d = match strategy {
            x if x == SkewdetStrategy::Rim as u32 => peel_rim(&s.0)?,
            x if x == SkewdetStrategy::ThickRim as u32 => peel_thick_rim(&s.0)?,
            x => return Err(Failure(SkewdetStatus::InvalidArgument, format!("unknown strategy {x}"))),
        };
        unsafe { write(out, boxed(SkewdetDecomposition(d)), "out") }
    })
}

/// Parse a decomposition from the JSON the CLI reads and writes.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_from_json(
    json: *const c_char,
    out: *mut *mut SkewdetDecomposition,
) -> SkewdetStatus {
    guard(|| {
        let d: Decomposition = serde_json::from_str(unsafe { text(json, "json") }?).map_err(Error::from)?;
        unsafe { write(out, boxed(SkewdetDecomposition(d)), "out") }
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_to_json(
    d: *const SkewdetDecomposition,
    out: *mut *mut c_char,
) -> SkewdetStatus {
    guard(|| {
        let d = unsafe { get(d, "decomposition") }?;
        let json = serde_json::to_string(&d.0).map_err(Error::from)?;
        unsafe { write_string(out, json, "out") }
    })
}

/// # Safety
/// `d` must come from this library and not have been freed. Null is ignored.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_free(d: *mut SkewdetDecomposition) {
    if !d.is_null() {
        drop(unsafe { Box::from_raw(d) });
    }
}

/// Number of strips and number of shared cells.
///
/// # Safety
/// `d` must be a live handle; `strips` and `shared` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_counts(
    d: *const SkewdetDecomposition,
    strips: *mut usize,
    shared: *mut usize,
) -> SkewdetStatus {
    guard(|| {
        let d = unsafe { get(d, "decomposition") }?;
        if strips.is_null() || shared.is_null() {
            return Err(null("out"));
        }
        unsafe {
            write(strips, d.0.len(), "strips")?;
            write(shared, d.0.shared_corners().len(), "shared")
        }
    })
}

/// Check the decomposition. `valid` is false when a rule is broken, and the
/// last error message then names the rule; `nested` is true only for valid
/// nested decompositions.
///
/// # Safety
/// `d` must be a live handle; `valid` and `nested` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_validate(
    d: *const SkewdetDecomposition,
    valid: *mut bool,
    nested: *mut bool,
) -> SkewdetStatus {
    let mut violation = None;
    let status = guard(|| {
        let d = unsafe { get(d, "decomposition") }?;
        if valid.is_null() || nested.is_null() {
            return Err(null("out"));
        }
        let verdict = validate_decomposition(&d.0);
        let ok = verdict.is_ok();
        violation = verdict.err().map(|v| v.to_string());
        unsafe {
            write(valid, ok, "valid")?;
            write(nested, ok && is_nested(&d.0), "nested")
        }
    });
    if let Some(v) = violation {
        set_last_error(&v);
    }
    status
}

/// Compare both sides of the Schur determinant identity in `nvars` variables.
///
/// # Safety
/// `d` must be a live handle; `equal` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_verify_identity(
    d: *const SkewdetDecomposition,
    nvars: usize,
    equal: *mut bool,
) -> SkewdetStatus {
    guard(|| {
        let d = unsafe { get(d, "decomposition") }?;
        let report = verify_identity(&d.0, nvars)?;
        unsafe { write(equal, report.equal, "equal") }
    })
}

/// Standard tableau count from the determinant over the strips of a nested
/// decomposition, as a decimal string.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_decomposition_count(
    d: *const SkewdetDecomposition,
    out: *mut *mut c_char,
) -> SkewdetStatus {
    guard(|| {
        let d = unsafe { get(d, "decomposition") }?;
        let n = corollary_count(&d.0)?;
        unsafe { write_string(out, n.to_string(), "out") }
    })
}

/// Standard tableau count of the m-strip diagram with `n` body columns and
/// the given head and tail partitions, as a decimal string.
///
/// # Safety
/// `head` and `tail` must point to `head_len` and `tail_len` readable values
/// (either may be null when its length is 0); `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn skewdet_mstrip_count(
    m: u32,
    n: u32,
    head: *const u32,
    head_len: usize,
    tail: *const u32,
    tail_len: usize,
    out: *mut *mut c_char,
) -> SkewdetStatus {
    guard(|| {
        let h = unsafe { slice(head, head_len, "head") }?;
        let t = unsafe { slice(tail, tail_len, "tail") }?;
        let spec = MStripSpec::new(m, n, h, t)?;
        let count = count_mstrip_thm(&spec)?;
        unsafe { write_string(out, count.to_string(), "out") }
    })
}
