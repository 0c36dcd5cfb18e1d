//! C interface to `nkdetect`.
//!
//! Objects are opaque handles created by `nk_*_new`/`nk_*_parse`/`nk_detect`
//! and released with the matching `nk_*_free`. Fallible calls return an
//! [`NkStatus`]; the message of the last failure on the calling thread is
//! available from [`nk_last_error`]. Strings returned by a report stay valid
//! until the report is freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nkdetect::cli::{
    detect, read_polynomial, render, CliError, MethodChoice, OutputFormat, RunConfig, EXIT_GUARD,
    EXIT_PARSE,
};
use nkdetect::polyalg::{Polynomial, Rational};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Config = 4,
    GuardExhausted = 5,
    Internal = 6,
    OutOfRange = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NkMethod {
    SuperPolar = 0,
    IteratedPolar = 1,
    Both = 2,
}

/// Parsed polynomial over the rationals.
pub struct NkPolynomial(Polynomial<Rational>);

/// Detection settings; starts from the command-line defaults.
pub struct NkConfig(RunConfig);

/// Detection result of one or two methods.
pub struct NkReport {
    json: CString,
    text: CString,
    s_final: Vec<CString>,
    degrees: Vec<usize>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: NkStatus, message: impl Into<String>) -> NkStatus {
    set_error(message);
    status
}

fn status_of(e: &CliError) -> NkStatus {
    match e.exit_code() {
        EXIT_PARSE if matches!(e, CliError::Parse(_)) => NkStatus::Parse,
        EXIT_PARSE => NkStatus::Config,
        EXIT_GUARD => NkStatus::GuardExhausted,
        _ => NkStatus::Internal,
    }
}

fn guarded(body: impl FnOnce() -> NkStatus) -> NkStatus {
    clear_error();
    catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| fail(NkStatus::Panic, "panic inside nkdetect"))
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn string_arg<'a>(p: *const c_char, name: &str) -> Result<Option<&'a str>, NkStatus> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p)
        .to_str()
        .map(Some)
        .map_err(|_| fail(NkStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn nk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses `text` into `*out`. `vars` is a comma-separated variable list or
/// null to take the names in order of appearance.
///
/// # Safety
/// `text` and `vars` are null or NUL-terminated; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn nk_polynomial_parse(
    text: *const c_char,
    vars: *const c_char,
    out: *mut *mut NkPolynomial,
) -> NkStatus {
    guarded(|| {
        if out.is_null() {
            return fail(NkStatus::NullArgument, "out is null");
        }
        *out = ptr::null_mut();
        let text = match string_arg(text, "text") {
            Ok(Some(t)) => t,
            Ok(None) => return fail(NkStatus::NullArgument, "text is null"),
            Err(s) => return s,
        };
        let vars = match string_arg(vars, "vars") {
            Ok(v) => v,
            Err(s) => return s,
        };
        match read_polynomial(text, vars) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(NkPolynomial(p)));
                NkStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Releases a polynomial handle; null is ignored.
///
/// # Safety
/// `p` is null or a handle from [`nk_polynomial_parse`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn nk_polynomial_free(p: *mut NkPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// New configuration with the defaults: super-polar, seed 0, 3 runs.
#[no_mangle]
pub extern "C" fn nk_config_new() -> *mut NkConfig {
    Box::into_raw(Box::new(NkConfig(RunConfig {
        output: OutputFormat::Json,
        ..RunConfig::default()
    })))
}

/// Releases a config handle; null is ignored.
///
/// # Safety
/// `c` is null or a handle from [`nk_config_new`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn nk_config_free(c: *mut NkConfig) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` is null or a live config handle.
unsafe fn with_config(c: *mut NkConfig, edit: impl FnOnce(&mut RunConfig)) -> NkStatus {
    guarded(|| match c.as_mut() {
        Some(c) => {
            edit(&mut c.0);
            NkStatus::Ok
        }
        None => fail(NkStatus::NullArgument, "config is null"),
    })
}

/// # Safety
/// `c` is null or a live config handle.
#[no_mangle]
pub unsafe extern "C" fn nk_config_set_seed(c: *mut NkConfig, seed: u64) -> NkStatus {
    with_config(c, |c| c.seed = seed)
}

/// # Safety
/// `c` is null or a live config handle.
#[no_mangle]
pub unsafe extern "C" fn nk_config_set_runs(c: *mut NkConfig, runs: usize) -> NkStatus {
    with_config(c, |c| c.runs = runs)
}

/// # Safety
/// `c` is null or a live config handle.
#[no_mangle]
pub unsafe extern "C" fn nk_config_set_coeff_bound(c: *mut NkConfig, bound: u32) -> NkStatus {
    with_config(c, |c| c.coeff_bound = bound)
}

/// # Safety
/// `c` is null or a live config handle.
#[no_mangle]
pub unsafe extern "C" fn nk_config_set_force_general(c: *mut NkConfig, on: bool) -> NkStatus {
    with_config(c, |c| c.force_general = on)
}

/// # Safety
/// `c` is null or a live config handle.
#[no_mangle]
pub unsafe extern "C" fn nk_config_set_method(c: *mut NkConfig, method: NkMethod) -> NkStatus {
    with_config(c, |c| {
        c.method = match method {
            NkMethod::SuperPolar => MethodChoice::SuperPolar,
            NkMethod::IteratedPolar => MethodChoice::IteratedPolar,
            NkMethod::Both => MethodChoice::Both,
        }
    })
}

/// Runs detection on `f` and stores the result in `*out`.
///
/// # Safety
/// `f` and `config` are null or live handles; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn nk_detect(
    f: *const NkPolynomial,
    config: *const NkConfig,
    out: *mut *mut NkReport,
) -> NkStatus {
    guarded(|| {
        if out.is_null() {
            return fail(NkStatus::NullArgument, "out is null");
        }
        *out = ptr::null_mut();
        let (Some(f), Some(config)) = (f.as_ref(), config.as_ref()) else {
            return fail(NkStatus::NullArgument, "polynomial or config is null");
        };
        let reports = match detect(&f.0, &config.0) {
            Ok(r) => r,
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        let cstring = |s: String| CString::new(s).expect("reports contain no NUL");
        let report = NkReport {
            json: cstring(render(&reports, OutputFormat::Json)),
            text: cstring(render(&reports, OutputFormat::Text)),
            s_final: reports
                .iter()
                .map(|r| cstring(r.s_final.rho().to_string()))
                .collect(),
            degrees: reports
                .iter()
                .map(|r| r.s_final.rho().degree().unwrap_or(0))
                .collect(),
        };
        *out = Box::into_raw(Box::new(report));
        NkStatus::Ok
    })
}

/// JSON document (schema 1) of the report, or null for a null handle.
///
/// # Safety
/// `r` is null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn nk_report_json(r: *const NkReport) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Human-readable report, or null for a null handle.
///
/// # Safety
/// `r` is null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn nk_report_text(r: *const NkReport) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// Number of method reports (2 for `NK_METHOD_BOTH`), 0 for null.
///
/// # Safety
/// `r` is null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn nk_report_count(r: *const NkReport) -> usize {
    r.as_ref().map_or(0, |r| r.s_final.len())
}

/// Polynomial in `z` whose roots are the detected values of report `index`.
///
/// # Safety
/// `r` is null or a live report handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn nk_report_s_final(
    r: *const NkReport,
    index: usize,
    out: *mut *const c_char,
) -> NkStatus {
    report_item(r, index, out, |r, i| r.s_final[i].as_ptr())
}

/// Number of detected values (degree of the polynomial in `z`).
///
/// # Safety
/// `r` is null or a live report handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn nk_report_s_final_degree(
    r: *const NkReport,
    index: usize,
    out: *mut usize,
) -> NkStatus {
    report_item(r, index, out, |r, i| r.degrees[i])
}

/// # Safety
/// `r` is null or a live report handle; `out` is null or writable.
unsafe fn report_item<T>(
    r: *const NkReport,
    index: usize,
    out: *mut T,
    get: impl FnOnce(&NkReport, usize) -> T,
) -> NkStatus {
    guarded(|| {
        let Some(r) = r.as_ref() else {
            return fail(NkStatus::NullArgument, "report is null");
        };
        if out.is_null() {
            return fail(NkStatus::NullArgument, "out is null");
        }
        if index >= r.s_final.len() {
            return fail(
                NkStatus::OutOfRange,
                format!("index {index} out of range for {} reports", r.s_final.len()),
            );
        }
        out.write(get(r, index));
        NkStatus::Ok
    })
}

/// Releases a report handle; null is ignored.
///
/// # Safety
/// `r` is null or a handle from [`nk_detect`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn nk_report_free(r: *mut NkReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
