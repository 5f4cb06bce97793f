//! C ABI over `hvb`: opaque handles, status codes and JSON strings.
//!
//! Every function returns an [`HvbStatus`]. On failure the message is
//! available from [`hvb_last_error`] on the same thread. Strings returned
//! through out-pointers are owned by the caller and released with
//! [`hvb_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use hvb::bott::{bott, cartan_matrix, components_count, BottOutcome, CartanType};
use hvb::cohomology::cohomology;
use hvb::quiver::{check_relations, from_json, to_json};
use hvb::{Error, QuiverRep, Space, Weight};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HvbStatus {
    Ok = 0,
    ParseError = 1,
    ShapeError = 2,
    DomainError = 3,
    RelationsViolated = 4,
    InternalError = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

/// Opaque space handle.
pub struct HvbSpace {
    inner: Space,
}

/// Opaque representation handle.
pub struct HvbRep {
    inner: QuiverRep,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HvbStatus {
    match e {
        Error::Parse(_) => HvbStatus::ParseError,
        Error::Shape(_) => HvbStatus::ShapeError,
        Error::Domain(_) => HvbStatus::DomainError,
        Error::Relations(_) => HvbStatus::RelationsViolated,
        Error::Internal(_) => HvbStatus::InternalError,
    }
}

/// Runs `f`, records any error or panic, and converts it to a status.
fn guard<F: FnOnce() -> Result<(), (HvbStatus, String)>>(f: F) -> HvbStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HvbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hvb".into());
            HvbStatus::Panic
        }
    }
}

fn lib<T>(r: hvb::Result<T>) -> Result<T, (HvbStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (HvbStatus, String) {
    (HvbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn cstr<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HvbStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a nul-terminated string.
    CStr::from_ptr(p).to_str().map_err(|_| (HvbStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), (HvbStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| (HvbStatus::InternalError, "output contains a nul byte".into()))?;
    // SAFETY: `out` is non-null and writable per the caller contract.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn hvb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hvb_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by CString::into_raw in this crate.
        drop(CString::from_raw(s));
    }
}

/// Parses `p:n` or `gr:k,n`.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_space_parse(text: *const c_char, out: *mut *mut HvbSpace) -> HvbStatus {
    guard(|| {
        let t = cstr(text, "space text")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let s = lib(Space::parse(t))?;
        *out = Box::into_raw(Box::new(HvbSpace { inner: s }));
        Ok(())
    })
}

/// # Safety
/// `s` comes from [`hvb_space_parse`] and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hvb_space_free(s: *mut HvbSpace) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of fundamental-weight coordinates of the space.
///
/// # Safety
/// `s` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hvb_space_rank(s: *const HvbSpace) -> size_t {
    s.as_ref().map_or(0, |s| s.inner.rank())
}

/// Bott's algorithm. On success `*singular` is 1 for vanishing cohomology;
/// otherwise `*degree` and `nu[0..len]` hold the nonzero H^degree.
///
/// # Safety
/// `weight` and `nu` point to `len` integers; the other outputs are
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_bott(
    s: *const HvbSpace,
    weight: *const i64,
    len: size_t,
    singular: *mut i32,
    degree: *mut size_t,
    nu: *mut i64,
) -> HvbStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("space"))?;
        if weight.is_null() || singular.is_null() || degree.is_null() || nu.is_null() {
            return Err(null("argument"));
        }
        let w = Weight(std::slice::from_raw_parts(weight, len).to_vec());
        lib(s.inner.check_rank(&w))?;
        match lib(bott(&s.inner, &w))? {
            BottOutcome::Singular => *singular = 1,
            BottOutcome::Value { degree: d, nu: n } => {
                *singular = 0;
                *degree = d;
                ptr::copy_nonoverlapping(n.0.as_ptr(), nu, len);
            }
        }
        Ok(())
    })
}

/// |det| of the Cartan matrix: the number of quiver components.
///
/// # Safety
/// `kind` is a nul-terminated type letter; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_components(kind: *const c_char, rank: size_t, out: *mut u64) -> HvbStatus {
    guard(|| {
        let t: CartanType = lib(cstr(kind, "Cartan type")?.parse())?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let c = lib(components_count(&lib(cartan_matrix(t, rank))?))?;
        *out = u64::try_from(c).map_err(|_| (HvbStatus::DomainError, "count exceeds 64 bits".to_string()))?;
        Ok(())
    })
}

/// Parses and validates representation JSON.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_rep_from_json(json: *const c_char, out: *mut *mut HvbRep) -> HvbStatus {
    guard(|| {
        let t = cstr(json, "representation JSON")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let r = lib(from_json(t))?;
        *out = Box::into_raw(Box::new(HvbRep { inner: r }));
        Ok(())
    })
}

/// # Safety
/// `r` comes from [`hvb_rep_from_json`] and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hvb_rep_free(r: *mut HvbRep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Canonical JSON of a representation.
///
/// # Safety
/// `r` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_rep_to_json(r: *const HvbRep, out: *mut *mut c_char) -> HvbStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("representation"))?;
        out_string(to_json(&r.inner), out)
    })
}

/// Counts violated relation equations; 0 means the representation is valid.
///
/// # Safety
/// `r` is a live handle; `violations` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_rep_check(r: *const HvbRep, violations: *mut size_t) -> HvbStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("representation"))?;
        if violations.is_null() {
            return Err(null("output pointer"));
        }
        *violations = check_relations(&r.inner).len();
        Ok(())
    })
}

/// H^*(E) as JSON: `{"rows":[{degree, nu, multiplicity, dim}]}`.
///
/// # Safety
/// `r` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hvb_cohomology_json(r: *const HvbRep, out: *mut *mut c_char) -> HvbStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("representation"))?;
        let t = lib(cohomology(&r.inner))?;
        let json = serde_json::to_string(&t).map_err(|e| (HvbStatus::InternalError, e.to_string()))?;
        out_string(json, out)
    })
}
