//! C ABI over `mixvol`.
//!
//! Bodies live behind opaque `MvPolytope` handles. Every fallible call returns
//! an `MvStatus`; on failure a message is kept per thread and can be read with
//! `mv_last_error`. Exact rationals cross the boundary as `"p/q"` strings that
//! the caller releases with `mv_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_double, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mixvol::error::Error;
use mixvol::geometry::{hausdorff, Point, VPolytope};
use mixvol::io::{parse_polytope, polytope_to_json};
use mixvol::metrics::{d_g, metric_report, rho_g};
use mixvol::scalar::{format_scalar, to_f64, Scalar};

/// Status codes; the nonzero values below 6 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvStatus {
    Ok = 0,
    Parse = 2,
    Containment = 3,
    Config = 4,
    Internal = 5,
    NullArgument = 6,
    Panic = 7,
}

/// Opaque handle to an exact polytope in dimension 2 or 3.
pub struct MvPolytope {
    inner: VPolytope,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MvStatus {
    match e.exit_code() {
        2 => MvStatus::Parse,
        3 => MvStatus::Containment,
        4 => MvStatus::Config,
        _ => MvStatus::Internal,
    }
}

fn guard<F: FnOnce() -> Result<(), MvStatus>>(f: F) -> MvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MvStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            MvStatus::Panic
        }
    }
}

fn fail(e: Error) -> MvStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(name: &str) -> MvStatus {
    set_error(format!("{name} is null"));
    MvStatus::NullArgument
}

unsafe fn body<'a>(p: *const MvPolytope, name: &str) -> Result<&'a VPolytope, MvStatus> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(name))
}

unsafe fn put_handle(out: *mut *mut MvPolytope, p: VPolytope) -> Result<(), MvStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(MvPolytope { inner: p }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), MvStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|_| fail(Error::Parse("interior NUL".into())))?.into_raw();
    Ok(())
}

/// Writes the exact value as a string and, when `approx` is not null, its
/// nearest double.
unsafe fn put_scalar(v: &Scalar, exact: *mut *mut c_char, approx: *mut c_double) -> Result<(), MvStatus> {
    put_string(exact, format_scalar(v))?;
    if !approx.is_null() {
        *approx = to_f64(v);
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses polytope JSON (`{"dim": n, "vertices": [["p/q", ...], ...]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_from_json(json: *const c_char, out: *mut *mut MvPolytope) -> MvStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|_| fail(Error::Parse("json is not UTF-8".into())))?;
        let p = parse_polytope(text).map_err(fail)?;
        put_handle(out, p)
    })
}

/// Convex hull of `count` points given as row-major numerator and
/// denominator arrays of length `count * dim`.
///
/// # Safety
/// `num` and `den` must point to `count * dim` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_from_points(
    dim: usize,
    count: usize,
    num: *const i64,
    den: *const i64,
    out: *mut *mut MvPolytope,
) -> MvStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("coordinate array"));
        }
        let len = count.checked_mul(dim).ok_or_else(|| fail(Error::Config("size overflow".into())))?;
        let (num, den) = (std::slice::from_raw_parts(num, len), std::slice::from_raw_parts(den, len));
        if den.contains(&0) {
            return Err(fail(Error::Parse("zero denominator".into())));
        }
        let pts: Vec<Point> = (0..count)
            .map(|i| Point::new((0..dim).map(|j| Scalar::new(num[i * dim + j].into(), den[i * dim + j].into())).collect()))
            .collect();
        let p = mixvol::convex_hull(&pts, dim).map_err(fail)?;
        put_handle(out, p)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_free(p: *mut MvPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_to_json(p: *const MvPolytope, out: *mut *mut c_char) -> MvStatus {
    guard(|| put_string(out, polytope_to_json(body(p, "polytope")?)))
}

/// # Safety
/// `p` must be a live handle; `dim` and `vertices` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_shape(p: *const MvPolytope, dim: *mut usize, vertices: *mut usize) -> MvStatus {
    guard(|| {
        let b = body(p, "polytope")?;
        if !dim.is_null() {
            *dim = b.dim();
        }
        if !vertices.is_null() {
            *vertices = b.vertices().len();
        }
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `exact` must be writable; `approx` may be null.
#[no_mangle]
pub unsafe extern "C" fn mv_polytope_volume(
    p: *const MvPolytope,
    exact: *mut *mut c_char,
    approx: *mut c_double,
) -> MvStatus {
    guard(|| put_scalar(body(p, "polytope")?.volume(), exact, approx))
}

/// Exact `d_G(K, L)`; fails with `MV_STATUS_CONTAINMENT` unless `K, L ⊆ G`.
///
/// # Safety
/// Handles must be live; `exact` must be writable; `approx` may be null.
#[no_mangle]
pub unsafe extern "C" fn mv_d_g(
    g: *const MvPolytope,
    k: *const MvPolytope,
    l: *const MvPolytope,
    exact: *mut *mut c_char,
    approx: *mut c_double,
) -> MvStatus {
    guard(|| {
        let v = d_g(body(g, "g")?, body(k, "k")?, body(l, "l")?).map_err(fail)?;
        put_scalar(&v, exact, approx)
    })
}

/// Exact `ρ_G(K, L)`.
///
/// # Safety
/// Handles must be live; `exact` must be writable; `approx` may be null.
#[no_mangle]
pub unsafe extern "C" fn mv_rho_g(
    g: *const MvPolytope,
    k: *const MvPolytope,
    l: *const MvPolytope,
    exact: *mut *mut c_char,
    approx: *mut c_double,
) -> MvStatus {
    guard(|| {
        let v = rho_g(body(g, "g")?, body(k, "k")?, body(l, "l")?).map_err(fail)?;
        put_scalar(&v, exact, approx)
    })
}

/// Squared Hausdorff distance, exact, and the distance as a double.
///
/// # Safety
/// Handles must be live; `exact_sq` must be writable; `approx` may be null.
#[no_mangle]
pub unsafe extern "C" fn mv_hausdorff(
    k: *const MvPolytope,
    l: *const MvPolytope,
    exact_sq: *mut *mut c_char,
    approx: *mut c_double,
) -> MvStatus {
    guard(|| {
        let w = hausdorff(body(k, "k")?, body(l, "l")?).map_err(fail)?;
        put_string(exact_sq, format_scalar(&w.value_sq))?;
        if !approx.is_null() {
            *approx = w.value;
        }
        Ok(())
    })
}

/// Full report as a JSON object with exact strings and bound flags.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mv_report_json(
    g: *const MvPolytope,
    k: *const MvPolytope,
    l: *const MvPolytope,
    out: *mut *mut c_char,
) -> MvStatus {
    guard(|| {
        let r = metric_report(body(g, "g")?, body(k, "k")?, body(l, "l")?).map_err(fail)?;
        let s = format!(
            "{{\"n\":{},\"dG\":\"{}\",\"rhoG\":\"{}\",\"dH_sq\":\"{}\",\"dH\":{},\"binom\":\"{}\",\
             \"sandwich_ok\":{},\"upper_ok\":{},\"lower_ok\":{},\"lower_binom_ok\":{}}}",
            r.n,
            format_scalar(&r.d_g),
            format_scalar(&r.rho_g),
            format_scalar(&r.dh_sq),
            r.dh,
            format_scalar(&r.binom),
            r.sandwich_ok,
            r.upper_ok,
            r.lower_ok,
            r.lower_binom_ok
        );
        put_string(out, s)
    })
}
