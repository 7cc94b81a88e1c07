//! C ABI over `pcat`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`PcatStatus`]; on an error status, `pcat_last_error` describes it until
//! the next call on the same thread. Strings handed out by the library are
//! released with `pcat_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pcat::braided::{hexagon_check, is_nondegenerate, QuadraticForm};
use pcat::monoidal::{pentagon_check, PointedCategory};
use pcat::witt::{anisotropic_kernel, witt_equal};
use pcat::{cli, json, Error};
use serde_json::Value;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcatStatus {
    Ok = 0,
    /// The input is well formed but the checked property does not hold.
    CheckFailed = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    /// Group, element, subgroup, G-set, modulus or normalization error.
    InvalidInput = 5,
    Precondition = 6,
    BoundExceeded = 7,
    Panic = 8,
}

/// Pointed fusion category with a validated associator.
pub struct PcatCategory(PointedCategory);

/// Quadratic form on a finite abelian group.
pub struct PcatForm(QuadraticForm);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PcatStatus {
    match e {
        Error::Parse(_) => PcatStatus::Parse,
        Error::Precondition(_) => PcatStatus::Precondition,
        Error::BoundExceeded { .. } | Error::TableTooLarge { .. } => PcatStatus::BoundExceeded,
        _ => PcatStatus::InvalidInput,
    }
}

type Outcome = std::result::Result<PcatStatus, (PcatStatus, String)>;

fn lib<T>(r: pcat::Result<T>) -> std::result::Result<T, (PcatStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Outcome) -> PcatStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PcatStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> std::result::Result<&'a str, (PcatStatus, String)> {
    if s.is_null() {
        return Err((PcatStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (PcatStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn read_json(s: *const c_char) -> std::result::Result<Value, (PcatStatus, String)> {
    serde_json::from_str(read_str(s)?).map_err(|e| (PcatStatus::Parse, format!("invalid JSON: {e}")))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

unsafe fn write_out<T>(out: *mut T, v: T) -> std::result::Result<(), (PcatStatus, String)> {
    if out.is_null() {
        return Err((PcatStatus::NullArgument, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> std::result::Result<&'a T, (PcatStatus, String)> {
    p.as_ref().ok_or((PcatStatus::NullArgument, "null handle".into()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn pcat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last error on this thread, or NULL. Owned by the
/// library.
#[no_mangle]
pub extern "C" fn pcat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn pcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs one command-line invocation. `argv_json` is a JSON array of the
/// arguments after the program name, e.g. `["witt", "reduce", "{...}"]`.
/// The result document is stored in `*out_json` (free with
/// `pcat_string_free`); the status is `Ok`, `CheckFailed`, or an error.
///
/// # Safety
/// `argv_json` must be a NUL-terminated string; `out_json` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_run(argv_json: *const c_char, out_json: *mut *mut c_char) -> PcatStatus {
    guard(|| {
        if out_json.is_null() {
            return Err((PcatStatus::NullArgument, "null output pointer".into()));
        }
        let args: Vec<String> =
            serde_json::from_value(read_json(argv_json)?).map_err(|e| (PcatStatus::Parse, format!("argv: {e}")))?;
        let out = cli::run(std::iter::once("pcat".to_string()).chain(args));
        let doc = out.to_json();
        write_out(out_json, into_c(doc.to_string()))?;
        match out.code() {
            0 => Ok(PcatStatus::Ok),
            1 => Ok(PcatStatus::CheckFailed),
            _ => {
                let kind = doc["error"]["kind"].as_str().unwrap_or("");
                let msg = doc["error"]["message"].as_str().unwrap_or("error").to_string();
                let status = match kind {
                    "parse" | "usage" => PcatStatus::Parse,
                    "precondition" => PcatStatus::Precondition,
                    "bound_exceeded" | "table_too_large" => PcatStatus::BoundExceeded,
                    _ => PcatStatus::InvalidInput,
                };
                Err((status, msg))
            }
        }
    })
}

/// Pentagon check of an associator document (a category or a bare
/// 3-cochain). `Ok` when it holds, `CheckFailed` otherwise; when
/// `out_witness` is not NULL it receives the check as JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_witness` NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn pcat_pentagon_check(json: *const c_char, out_witness: *mut *mut c_char) -> PcatStatus {
    guard(|| {
        let alpha = lib(json::associator_from_json(&read_json(json)?))?;
        let check = lib(pentagon_check(&alpha))?;
        report_check(&check, out_witness)
    })
}

/// Hexagon check of a braided document `{"category", "braiding"}`.
///
/// # Safety
/// As for `pcat_pentagon_check`.
#[no_mangle]
pub unsafe extern "C" fn pcat_hexagon_check(json: *const c_char, out_witness: *mut *mut c_char) -> PcatStatus {
    guard(|| {
        let (alpha, gamma) = lib(json::abelian_parts_from_json(&read_json(json)?))?;
        let check = lib(hexagon_check(&alpha, &gamma))?;
        report_check(&check, out_witness)
    })
}

unsafe fn report_check(check: &pcat::check::Check, out: *mut *mut c_char) -> Outcome {
    if !out.is_null() {
        out.write(into_c(serde_json::to_string(check).expect("serializable")));
    }
    Ok(if check.pass { PcatStatus::Ok } else { PcatStatus::CheckFailed })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_category_from_json(json: *const c_char, out: *mut *mut PcatCategory) -> PcatStatus {
    guard(|| {
        let c = lib(json::category_from_json(&read_json(json)?))?;
        write_out(out, Box::into_raw(Box::new(PcatCategory(c))))?;
        Ok(PcatStatus::Ok)
    })
}

/// # Safety
/// `c` must be NULL or a handle from `pcat_category_from_json`, freed once.
#[no_mangle]
pub unsafe extern "C" fn pcat_category_free(c: *mut PcatCategory) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of simple objects, or 0 for a NULL handle.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pcat_category_rank(c: *const PcatCategory) -> usize {
    c.as_ref().map_or(0, |c| c.0.group().order())
}

/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pcat_category_modulus(c: *const PcatCategory) -> u32 {
    c.as_ref().map_or(0, |c| c.0.modulus())
}

/// # Safety
/// `c` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_category_to_json(c: *const PcatCategory, out: *mut *mut c_char) -> PcatStatus {
    guard(|| {
        let c = handle(c)?;
        write_out(out, into_c(json::category_to_json(&c.0).to_string()))?;
        Ok(PcatStatus::Ok)
    })
}

/// Parses a form `{"group", "modulus", "values"}` and checks both
/// quadratic axioms.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_form_from_json(json: *const c_char, out: *mut *mut PcatForm) -> PcatStatus {
    guard(|| {
        let q = lib(json::form_from_json(&read_json(json)?))?;
        if let Some(w) = pcat::braided::quadratic_check(&q).witness {
            return Err((PcatStatus::Precondition, format!("not a quadratic form: {} fails", w.condition)));
        }
        write_out(out, Box::into_raw(Box::new(PcatForm(q))))?;
        Ok(PcatStatus::Ok)
    })
}

/// # Safety
/// `q` must be NULL or a handle from `pcat_form_from_json`, freed once.
#[no_mangle]
pub unsafe extern "C" fn pcat_form_free(q: *mut PcatForm) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// `q` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_form_to_json(q: *const PcatForm, out: *mut *mut c_char) -> PcatStatus {
    guard(|| {
        let q = handle(q)?;
        write_out(out, into_c(json::form_to_json(&q.0).to_string()))?;
        Ok(PcatStatus::Ok)
    })
}

/// # Safety
/// `q` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_form_is_nondegenerate(q: *const PcatForm, out: *mut bool) -> PcatStatus {
    guard(|| {
        let v = lib(is_nondegenerate(&handle(q)?.0))?;
        write_out(out, v)?;
        Ok(PcatStatus::Ok)
    })
}

/// Anisotropic kernel of a nondegenerate form, with the reduction trace,
/// as JSON. `bound` caps the group orders searched.
///
/// # Safety
/// `q` must be a live handle; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_form_anisotropic_kernel(
    q: *const PcatForm,
    bound: usize,
    out_json: *mut *mut c_char,
) -> PcatStatus {
    guard(|| {
        let w = lib(anisotropic_kernel(&handle(q)?.0, bound))?;
        write_out(out_json, into_c(json::witt_witness_to_json(&w).to_string()))?;
        Ok(PcatStatus::Ok)
    })
}

/// Whether two nondegenerate forms have the same Witt class.
///
/// # Safety
/// `a`, `b` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pcat_witt_equal(a: *const PcatForm, b: *const PcatForm, bound: usize, out: *mut bool) -> PcatStatus {
    guard(|| {
        let cmp = lib(witt_equal(&handle(a)?.0, &handle(b)?.0, bound))?;
        write_out(out, cmp.equal)?;
        Ok(PcatStatus::Ok)
    })
}
