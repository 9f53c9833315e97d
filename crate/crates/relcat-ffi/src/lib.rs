//! C interface to relcat.
//!
//! Relations and bicomodules are handed out as opaque pointers and released
//! with their `_free` function. Every fallible call returns a
//! [`RelcatStatus`] and writes its result through an out-parameter; the text
//! of the most recent error on the calling thread is available from
//! [`relcat_last_error`]. Strings returned by the library are owned by the
//! caller and must be released with [`relcat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use relcat::ccat::CCategory;
use relcat::error::Error;
use relcat::io;
use relcat::monoidal::check_symmetric_monoidal;
use relcat::quantization::check_h_membership;
use relcat::relation::{phi, psi, Bicomodule, Relation};
use relcat::report::Report;
use serde_json::Value;

/// Result codes. Checks that run to completion but find a violated law
/// return `CheckFailed` and still produce their report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelcatStatus {
    Ok = 0,
    CheckFailed = 1,
    Malformed = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Internal = 5,
}

/// A relation together with the C-category it lives in.
pub struct RelcatRelation {
    cc: CCategory,
    rel: Relation,
}

/// A bicomodule together with the C-category it lives in.
pub struct RelcatBicomodule {
    cc: CCategory,
    bic: Bicomodule,
}

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

enum Failure {
    Status(RelcatStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn status_of(e: &Error) -> RelcatStatus {
    if e.exit_code() == 1 {
        RelcatStatus::CheckFailed
    } else {
        RelcatStatus::Malformed
    }
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<RelcatStatus, Failure>) -> RelcatStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            RelcatStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(RelcatStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Status(RelcatStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn read_json(p: *const c_char) -> Result<Value, Failure> {
    serde_json::from_str(read_str(p)?).map_err(|e| Error::Malformed(e.to_string()).into())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::Status(RelcatStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(RelcatStatus::NullPointer, "null out-parameter".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, v: &Value) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(RelcatStatus::NullPointer, "null out-parameter".into()));
    }
    let s = serde_json::to_string(v).map_err(|e| Failure::Status(RelcatStatus::Internal, e.to_string()))?;
    *out = CString::new(s).map_err(|e| Failure::Status(RelcatStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

unsafe fn put_report(out: *mut *mut c_char, rep: &Report) -> Result<RelcatStatus, Failure> {
    put_string(out, &rep.to_json())?;
    Ok(if rep.passed() { RelcatStatus::Ok } else { RelcatStatus::CheckFailed })
}

/// Parses a relation document: `{"graph": {"vertices", "edges"}}` or
/// `{"relation": {"base", "arrow"}}`, with an optional `"c_category"`.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` must be null or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_relation_from_json(json: *const c_char, out: *mut *mut RelcatRelation) -> RelcatStatus {
    guard(|| {
        let doc = read_json(json)?;
        let cc = io::ccat_from_doc(&doc)?;
        let rel = io::relation_from_doc(&doc, &cc, None)?;
        put(out, RelcatRelation { cc, rel })?;
        Ok(RelcatStatus::Ok)
    })
}

/// Number of arrows of the relation, or 0 for a null handle.
///
/// # Safety
/// `rel` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn relcat_relation_arrows(rel: *const RelcatRelation) -> usize {
    rel.as_ref().map_or(0, |r| r.rel.dom.size)
}

/// Serializes a relation; FinSet relations include `edges` and `image`.
///
/// # Safety
/// `rel` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_relation_to_json(rel: *const RelcatRelation, out: *mut *mut c_char) -> RelcatStatus {
    guard(|| {
        put_string(out, &io::relation_to_json(&deref(rel)?.rel))?;
        Ok(RelcatStatus::Ok)
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_bicomodule_to_json(m: *const RelcatBicomodule, out: *mut *mut c_char) -> RelcatStatus {
    guard(|| {
        put_string(out, &io::bicomodule_to_json(&deref(m)?.bic))?;
        Ok(RelcatStatus::Ok)
    })
}

/// The bicomodule of a relation.
///
/// # Safety
/// `rel` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_phi(rel: *const RelcatRelation, out: *mut *mut RelcatBicomodule) -> RelcatStatus {
    guard(|| {
        let r = deref(rel)?;
        let bic = phi(&r.cc, &r.rel)?;
        put(out, RelcatBicomodule { cc: r.cc.clone(), bic })?;
        Ok(RelcatStatus::Ok)
    })
}

/// The relation of a bicomodule.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_psi(m: *const RelcatBicomodule, out: *mut *mut RelcatRelation) -> RelcatStatus {
    guard(|| {
        let b = deref(m)?;
        let rel = psi(&b.cc, &b.bic)?;
        put(out, RelcatRelation { cc: b.cc.clone(), rel })?;
        Ok(RelcatStatus::Ok)
    })
}

/// The composite relation: `lhs` first, then `rhs`.
///
/// # Safety
/// `lhs` and `rhs` must be live handles; `out` must be valid for a pointer
/// write.
#[no_mangle]
pub unsafe extern "C" fn relcat_odot(
    lhs: *const RelcatRelation,
    rhs: *const RelcatRelation,
    out: *mut *mut RelcatRelation,
) -> RelcatStatus {
    guard(|| {
        let (r, s) = (deref(lhs)?, deref(rhs)?);
        let (rel, _) = relcat::products::odot(&r.cc, &r.rel, &s.rel)?;
        put(out, RelcatRelation { cc: r.cc.clone(), rel })?;
        Ok(RelcatStatus::Ok)
    })
}

/// Checks the symmetric monoidal laws of `{"structure", "universe",
/// "generators"?}`. The JSON report is written to `report` whenever the
/// check ran, including when it returns `CheckFailed`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `report` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn relcat_check_structure(json: *const c_char, seed: u64, report: *mut *mut c_char) -> RelcatStatus {
    guard(|| {
        let doc = read_json(json)?;
        let s = io::structure_from_json(io::field(&doc, "structure")?)?;
        let u = io::universe_from_json(io::field(&doc, "universe")?, s.ambient(), None)?;
        let gens = io::generators_from_json(doc.get("generators"), &u, seed)?;
        put_report(report, &check_symmetric_monoidal(&s, &u, &gens)?)
    })
}

/// Checks subgroup membership of `{"triple": {...}}`; see
/// [`relcat_check_structure`] for the report convention.
///
/// # Safety
/// As for [`relcat_check_structure`].
#[no_mangle]
pub unsafe extern "C" fn relcat_check_triple(json: *const c_char, seed: u64, report: *mut *mut c_char) -> RelcatStatus {
    guard(|| {
        let doc = read_json(json)?;
        let t = io::triple_from_json(io::field(&doc, "triple")?, None, seed)?;
        put_report(report, &check_h_membership(&t)?)
    })
}

/// The message of the last failed call on this thread, or null. The
/// pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn relcat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn relcat_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `rel` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relcat_relation_free(rel: *mut RelcatRelation) {
    if !rel.is_null() {
        drop(Box::from_raw(rel));
    }
}

/// # Safety
/// `m` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relcat_bicomodule_free(m: *mut RelcatBicomodule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}
