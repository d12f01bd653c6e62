//! C ABI over the semicert engine.
//!
//! Subjects are opaque handles created from structure-spec JSON; every
//! result crosses the boundary as a JSON string the caller frees with
//! `semicert_string_free`. Functions return `SemicertStatus`, mirroring the
//! CLI exit codes; on failure the thread-local error message is readable
//! via `semicert_last_error`.
//!
//! The public header lives at `include/semicert.h` and is kept in sync by
//! `tests/header_sync.rs`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use semicert::report;
use semicert::smarandache::Witness;
use semicert::spec::{build, driver, parse_spec, Subject};

/// Status codes, aligned with the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemicertStatus {
    Ok = 0,
    /// property false / witness not found, search complete
    NotFoundComplete = 1,
    /// not found, search incomplete
    NotFoundIncomplete = 2,
    InputError = 3,
    InternalError = 4,
}

/// Opaque subject handle.
pub struct SemicertSubject {
    subject: Subject,
    cap: u128,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(|c| c.into_raw())
        .unwrap_or(std::ptr::null_mut())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SemicertStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(SemicertStatus::InputError);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SemicertStatus::InputError
    })
}

/// Last error message for this thread. Owned by the library; do not free.
#[no_mangle]
pub extern "C" fn semicert_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Free a string returned by this library.
#[no_mangle]
pub extern "C" fn semicert_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe {
            drop(CString::from_raw(s));
        }
    }
}

/// Parse a structure-spec JSON and build the subject behind an opaque
/// handle. `cap` bounds materialized element counts; pass 0 for the
/// default.
///
/// # Safety
/// `spec_json` must be a valid NUL-terminated string and `out` a valid
/// pointer; the returned handle is freed with `semicert_subject_free`.
#[no_mangle]
pub unsafe extern "C" fn semicert_subject_new(
    spec_json: *const c_char,
    cap: u64,
    out: *mut *mut SemicertSubject,
) -> SemicertStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SemicertStatus::InputError;
    }
    let text = match read_str(spec_json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let spec = match parse_spec(text) {
        Ok(s) => s,
        Err(e) => {
            set_error(&e.to_string());
            return SemicertStatus::InputError;
        }
    };
    let cap = if cap == 0 { 1 << 16 } else { cap as u128 };
    match build(&spec, cap) {
        Ok(subject) => {
            *out = Box::into_raw(Box::new(SemicertSubject { subject, cap }));
            SemicertStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            SemicertStatus::InputError
        }
    }
}

/// Free a subject handle.
///
/// # Safety
/// `handle` must come from `semicert_subject_new` and not be used after.
#[no_mangle]
pub unsafe extern "C" fn semicert_subject_free(handle: *mut SemicertSubject) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// One-line description of the subject. Free with `semicert_string_free`.
///
/// # Safety
/// `handle` must be a live subject handle.
#[no_mangle]
pub unsafe extern "C" fn semicert_subject_describe(
    handle: *const SemicertSubject,
) -> *mut c_char {
    if handle.is_null() {
        set_error("null handle");
        return std::ptr::null_mut();
    }
    to_c_string((*handle).subject.describe())
}

/// Classification report as JSON. Free with `semicert_string_free`.
///
/// # Safety
/// `handle` must be a live subject handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semicert_classify(
    handle: *const SemicertSubject,
    out: *mut *mut c_char,
) -> SemicertStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return SemicertStatus::InputError;
    }
    let h = &*handle;
    let rep = report::classify(&h.subject, h.cap as usize);
    match serde_json::to_string_pretty(&rep) {
        Ok(json) => {
            *out = to_c_string(json);
            SemicertStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            SemicertStatus::InternalError
        }
    }
}

/// Certify a property. `witness_json` may be null for search-mode
/// properties. On success the certificate (with its replay transcript) is
/// returned as JSON; on NotFound the status distinguishes complete from
/// incomplete searches and the reason is in `semicert_last_error`.
///
/// # Safety
/// `handle` must be live; `property` a valid string; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn semicert_certify(
    handle: *const SemicertSubject,
    property: *const c_char,
    witness_json: *const c_char,
    out: *mut *mut c_char,
) -> SemicertStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return SemicertStatus::InputError;
    }
    let property = match read_str(property) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let witness: Option<Witness> = if witness_json.is_null() {
        None
    } else {
        match read_str(witness_json) {
            Ok(text) => match serde_json::from_str(text) {
                Ok(w) => Some(w),
                Err(e) => {
                    set_error(&format!("witness: {e}"));
                    return SemicertStatus::InputError;
                }
            },
            Err(s) => return s,
        }
    };
    let h = &*handle;
    let name = h.subject.describe();
    match driver::certify(&h.subject, property, witness.as_ref(), &name) {
        Ok(cert) => {
            if let Err(e) = driver::verify(&h.subject, &cert) {
                set_error(&format!("internal: certificate failed replay: {e}"));
                return SemicertStatus::InternalError;
            }
            match serde_json::to_string_pretty(&cert) {
                Ok(json) => {
                    *out = to_c_string(json);
                    SemicertStatus::Ok
                }
                Err(e) => {
                    set_error(&e.to_string());
                    SemicertStatus::InternalError
                }
            }
        }
        Err(nf) => {
            set_error(&nf.reason);
            if nf.complete {
                SemicertStatus::NotFoundComplete
            } else {
                SemicertStatus::NotFoundIncomplete
            }
        }
    }
}

/// Verify an externally supplied certificate JSON against the subject.
///
/// # Safety
/// `handle` must be live and `cert_json` a valid string.
#[no_mangle]
pub unsafe extern "C" fn semicert_verify(
    handle: *const SemicertSubject,
    cert_json: *const c_char,
) -> SemicertStatus {
    if handle.is_null() {
        set_error("null handle");
        return SemicertStatus::InputError;
    }
    let text = match read_str(cert_json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let cert: semicert::smarandache::Certificate = match serde_json::from_str(text) {
        Ok(c) => c,
        Err(e) => {
            set_error(&format!("certificate: {e}"));
            return SemicertStatus::InputError;
        }
    };
    match driver::verify(&(*handle).subject, &cert) {
        Ok(()) => SemicertStatus::Ok,
        Err(e) => {
            set_error(&e);
            SemicertStatus::NotFoundComplete
        }
    }
}

/// Hasse diagram of a lattice-derived subject as DOT text.
///
/// # Safety
/// `handle` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn semicert_hasse_dot(
    handle: *const SemicertSubject,
    out: *mut *mut c_char,
) -> SemicertStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return SemicertStatus::InputError;
    }
    match driver::hasse_of(&(*handle).subject) {
        Ok(h) => {
            *out = to_c_string(h.to_dot());
            SemicertStatus::Ok
        }
        Err(e) => {
            set_error(&e);
            SemicertStatus::InputError
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn new_subject(spec: &str) -> *mut SemicertSubject {
        let mut out: *mut SemicertSubject = ptr::null_mut();
        let status = semicert_subject_new(c(spec).as_ptr(), 0, &mut out);
        assert_eq!(status, SemicertStatus::Ok, "subject: {spec}");
        out
    }

    #[test]
    fn classify_round_trip() {
        unsafe {
            let h = new_subject(r#"{"kind":"zmod","n":12}"#);
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(semicert_classify(h, &mut out), SemicertStatus::Ok);
            let json = CStr::from_ptr(out).to_str().unwrap().to_string();
            assert!(json.contains("\"characteristic\": \"12\""));
            semicert_string_free(out);
            semicert_subject_free(h);
        }
    }

    #[test]
    fn certify_and_verify_through_the_boundary() {
        unsafe {
            let h = new_subject(
                r#"{"kind":"matrix","base":{"kind":"chain_lattice","n":2},"dim":2}"#,
            );
            let mut out: *mut c_char = ptr::null_mut();
            let status =
                semicert_certify(h, c("s-semiring-1").as_ptr(), ptr::null(), &mut out);
            assert_eq!(status, SemicertStatus::Ok);
            let cert_json = CStr::from_ptr(out).to_str().unwrap().to_string();
            assert_eq!(
                semicert_verify(h, c(&cert_json).as_ptr()),
                SemicertStatus::Ok
            );
            semicert_string_free(out);
            semicert_subject_free(h);
        }
    }

    #[test]
    fn status_codes_distinguish_completeness() {
        unsafe {
            let q0 = new_subject(r#"{"kind":"archetype","tags":["Q0"]}"#);
            let mut out: *mut c_char = ptr::null_mut();
            let status =
                semicert_certify(q0, c("s-semifield-1").as_ptr(), ptr::null(), &mut out);
            assert_eq!(status, SemicertStatus::NotFoundComplete);
            let msg = CStr::from_ptr(semicert_last_error()).to_str().unwrap();
            assert!(msg.contains("absorbs"));
            semicert_subject_free(q0);

            let z8s3 = new_subject(
                r#"{"kind":"group_ring","coeff":{"kind":"zmod","n":8},"carrier":{"kind":"symmetric_group","n":3}}"#,
            );
            let status =
                semicert_certify(z8s3, c("s-semiring-1").as_ptr(), ptr::null(), &mut out);
            assert_eq!(status, SemicertStatus::NotFoundIncomplete);
            semicert_subject_free(z8s3);
        }
    }

    #[test]
    fn bad_spec_is_an_input_error() {
        unsafe {
            let mut out: *mut SemicertSubject = ptr::null_mut();
            let status =
                semicert_subject_new(c(r#"{"kind":"nope"}"#).as_ptr(), 0, &mut out);
            assert_eq!(status, SemicertStatus::InputError);
            let msg = CStr::from_ptr(semicert_last_error()).to_str().unwrap();
            assert!(msg.contains("unknown"));
        }
    }

    #[test]
    fn hasse_dot_export() {
        unsafe {
            let h = new_subject(r#"{"kind":"chain_lattice","n":3}"#);
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(semicert_hasse_dot(h, &mut out), SemicertStatus::Ok);
            let dot = CStr::from_ptr(out).to_str().unwrap();
            assert!(dot.starts_with("digraph hasse"));
            semicert_string_free(out);
            semicert_subject_free(h);
        }
    }
}
