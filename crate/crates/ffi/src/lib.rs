//! C ABI for the exact classifiers, the feasibility certificates and the
//! Bessel extrema table.
//!
//! Exponents cross the boundary as NUL-terminated strings (`"3/4"`, `"2"`,
//! `"inf"`) so no precision is lost. Results are opaque handles released
//! with their matching `*_free` function. Every entry point returns an
//! [`RlStatus`]; on failure [`rl_last_error_message`] describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use restriction_lab::analysis::{bessel_j0, j0_extrema, ExtremaTable};
use restriction_lab::exponents::{classify_radial, classify_separable};
use restriction_lab::feasibility::{solve_one, solve_two, CertificateOne, CertificateTwo};
use restriction_lab::{Error, ExtScalar, RadialParams, SeparableParams, Verdict};

/// Outcome of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RlStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Domain = 3,
    Numerical = 4,
    Config = 5,
    Internal = 6,
    Panic = 7,
}

/// Boundedness verdict of a classifier.
pub struct RlVerdict(Verdict);

/// Interpolation certificate for either weight family.
pub enum RlCertificate {
    Separable(CertificateOne),
    Radial(CertificateTwo),
}

/// Extrema `z_j` of `J0` with the values `J0(z_j)`.
pub struct RlExtrema(ExtremaTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> RlStatus {
    match err {
        Error::Domain(_) => RlStatus::Domain,
        Error::Parse { .. } => RlStatus::Parse,
        Error::Numerical { .. } => RlStatus::Numerical,
        Error::Config(_) => RlStatus::Config,
        Error::Io { .. } | Error::Internal(_) => RlStatus::Internal,
    }
}

enum Fail {
    Null(&'static str),
    Lab(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lab(e)
    }
}

/// Runs `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> RlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RlStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed as {what}"));
            RlStatus::NullPointer
        }
        Ok(Err(Fail::Lab(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            RlStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn scalar(p: *const c_char, what: &'static str) -> Result<ExtScalar, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    let text = CStr::from_ptr(p).to_str().map_err(|e| Error::Parse {
        input: what.into(),
        reason: e.to_string(),
    })?;
    Ok(text.parse()?)
}

fn out_ptr<T>(out: *mut *mut T) -> Result<&'static mut *mut T, Fail> {
    // SAFETY: non-null out-pointers are writable by contract.
    unsafe { out.as_mut() }.ok_or(Fail::Null("out"))
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Classifies the separable weight `(1+|x|)^-alpha (1+|y|)^-beta`.
///
/// # Safety
/// String arguments are null or valid C strings; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_classify_separable(
    alpha: *const c_char,
    beta: *const c_char,
    r: *const c_char,
    q: *const c_char,
    out: *mut *mut RlVerdict,
) -> RlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let p = SeparableParams::new(scalar(alpha, "alpha")?, scalar(beta, "beta")?, scalar(r, "r")?, scalar(q, "q")?)?;
        *out = Box::into_raw(Box::new(RlVerdict(classify_separable(&p)?)));
        Ok(())
    })
}

/// Classifies the radial weight `(1+|x|+|y|)^-gamma`.
///
/// # Safety
/// String arguments are null or valid C strings; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_classify_radial(
    gamma: *const c_char,
    r: *const c_char,
    q: *const c_char,
    out: *mut *mut RlVerdict,
) -> RlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let p = RadialParams::new(scalar(gamma, "gamma")?, scalar(r, "r")?, scalar(q, "q")?)?;
        *out = Box::into_raw(Box::new(RlVerdict(classify_radial(&p)?)));
        Ok(())
    })
}

/// 1 if bounded, 0 if unbounded, -1 for a null handle.
///
/// # Safety
/// `v` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_verdict_is_bounded(v: *const RlVerdict) -> c_int {
    match v.as_ref() {
        Some(v) => c_int::from(v.0.is_bounded()),
        None => -1,
    }
}

/// Text form, e.g. `BOUNDED case=iv`. Release with [`rl_string_free`].
///
/// # Safety
/// `v` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_verdict_describe(v: *const RlVerdict) -> *mut c_char {
    v.as_ref().map_or(ptr::null_mut(), |v| into_c_string(v.0.to_string()))
}

/// # Safety
/// `v` is null or a handle from a classify call, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_verdict_free(v: *mut RlVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Separable interpolation certificate. `*out` is null when infeasible.
///
/// # Safety
/// String arguments are null or valid C strings; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_solve_separable(
    alpha: *const c_char,
    beta: *const c_char,
    r: *const c_char,
    q: *const c_char,
    out: *mut *mut RlCertificate,
) -> RlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let (a, b, r, q) = (scalar(alpha, "alpha")?, scalar(beta, "beta")?, scalar(r, "r")?, scalar(q, "q")?);
        if let Some(cert) = solve_one(&a, &b, &r, &q)? {
            *out = Box::into_raw(Box::new(RlCertificate::Separable(cert)));
        }
        Ok(())
    })
}

/// Radial interpolation certificate. `*out` is null when infeasible.
///
/// # Safety
/// String arguments are null or valid C strings; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_solve_radial(
    gamma: *const c_char,
    r: *const c_char,
    q: *const c_char,
    out: *mut *mut RlCertificate,
) -> RlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let (g, r, q) = (scalar(gamma, "gamma")?, scalar(r, "r")?, scalar(q, "q")?);
        if let Some(cert) = solve_two(&g, &r, &q)? {
            *out = Box::into_raw(Box::new(RlCertificate::Radial(cert)));
        }
        Ok(())
    })
}

/// Text form with exact rationals, e.g. `theta=1/2 q0=... r1=...`.
/// Release with [`rl_string_free`].
///
/// # Safety
/// `c` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_certificate_describe(c: *const RlCertificate) -> *mut c_char {
    match c.as_ref() {
        Some(RlCertificate::Separable(c)) => into_c_string(c.to_string()),
        Some(RlCertificate::Radial(c)) => into_c_string(c.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `c` is null or a handle from a solve call, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_certificate_free(c: *mut RlCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// `J0(x)`.
#[no_mangle]
pub extern "C" fn rl_bessel_j0(x: f64) -> f64 {
    bessel_j0(x)
}

/// First `n` positive extrema of `J0`.
///
/// # Safety
/// `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_j0_extrema(n: usize, out: *mut *mut RlExtrema) -> RlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = Box::into_raw(Box::new(RlExtrema(j0_extrema(n)?)));
        Ok(())
    })
}

/// Number of extrema, 0 for a null handle.
///
/// # Safety
/// `t` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_extrema_len(t: *const RlExtrema) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Writes `z_j` and `J0(z_j)` for the zero-based index `i`.
///
/// # Safety
/// `t` is null or a live handle; `z` and `value` are null or writable.
#[no_mangle]
pub unsafe extern "C" fn rl_extrema_get(t: *const RlExtrema, i: usize, z: *mut f64, value: *mut f64) -> RlStatus {
    guard(|| {
        let t = t.as_ref().ok_or(Fail::Null("table"))?;
        let (z, value) = (z.as_mut().ok_or(Fail::Null("z"))?, value.as_mut().ok_or(Fail::Null("value"))?);
        if i >= t.0.len() {
            return Err(Error::Domain(format!("index {i} outside table of {} extrema", t.0.len())).into());
        }
        *z = t.0.z()[i];
        *value = t.0.values()[i];
        Ok(())
    })
}

/// `min_j j^{1/2} |J0(z_j)|` over the table, NaN for a null handle.
///
/// # Safety
/// `t` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_extrema_envelope(t: *const RlExtrema) -> f64 {
    t.as_ref().map_or(f64::NAN, |t| t.0.envelope_constant())
}

/// # Safety
/// `t` is null or a handle from [`rl_j0_extrema`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_extrema_free(t: *mut RlExtrema) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Releases a string returned by a `*_describe` function.
///
/// # Safety
/// `s` is null or a string from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn rl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}
