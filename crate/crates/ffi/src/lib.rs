//! C ABI over `rootpoly`.
//!
//! Objects are opaque handles released with the matching `_free`. Every entry
//! point returns an [`RpStatus`]; on failure a message is kept per thread and
//! can be read with [`rp_last_error`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rootpoly::arrangement::{build_arrangement, characteristic_polynomial};
use rootpoly::ideals::enumerate_abelian_ideals;
use rootpoly::report::cmd_report;
use rootpoly::triangulate::{full_triangulation, positive_restriction, Triangulation};
use rootpoly::{Error, Family, RootSystem};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque root system handle.
pub struct RpRootSystem {
    inner: RootSystem,
}

/// Opaque triangulation handle.
pub struct RpTriangulation {
    inner: Triangulation,
    rank: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> RpStatus {
    match e {
        Error::WrongType(_) | Error::TooLarge { .. } => RpStatus::Unsupported,
        Error::BadIndex(_) | Error::OutOfShape { .. } => RpStatus::OutOfRange,
        Error::Inconsistent(_) => RpStatus::Internal,
        _ => RpStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (RpStatus, String)>) -> RpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            RpStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside rootpoly");
            RpStatus::Panic
        }
    }
}

fn lib(e: Error) -> (RpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (RpStatus, String) {
    (RpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (RpStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build a root system. `family` is one of 'A', 'B', 'C', 'D'.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn rp_root_system_new(family: c_char, rank: usize, out: *mut *mut RpRootSystem) -> RpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f: Family = ((family as u8) as char).to_string().parse().map_err(lib)?;
        let rs = RootSystem::new(f, rank).map_err(lib)?;
        *out = Box::into_raw(Box::new(RpRootSystem { inner: rs }));
        Ok(())
    })
}

/// # Safety
/// `rs` must be null or a handle from [`rp_root_system_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_root_system_free(rs: *mut RpRootSystem) {
    if !rs.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(rs))));
    }
}

/// # Safety
/// `rs` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_rank(rs: *const RpRootSystem, out: *mut usize) -> RpStatus {
    guard(|| {
        let rs = deref(rs, "rs")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = rs.inner.rank();
        Ok(())
    })
}

/// # Safety
/// `rs` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_positive_root_count(rs: *const RpRootSystem, out: *mut usize) -> RpStatus {
    guard(|| {
        let rs = deref(rs, "rs")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = rs.inner.num_positive();
        Ok(())
    })
}

/// Simple-root coordinates of positive root `index` (0-based, by height).
///
/// # Safety
/// `coords` must point to `len` writable integers.
#[no_mangle]
pub unsafe extern "C" fn rp_positive_root(
    rs: *const RpRootSystem,
    index: usize,
    coords: *mut i64,
    len: usize,
) -> RpStatus {
    guard(|| {
        let rs = &deref(rs, "rs")?.inner;
        if coords.is_null() {
            return Err(null("coords"));
        }
        if index >= rs.num_positive() {
            return Err((RpStatus::OutOfRange, format!("root index {index} out of range")));
        }
        if len < rs.rank() {
            return Err((RpStatus::BufferTooSmall, format!("need {} entries", rs.rank())));
        }
        ptr::copy_nonoverlapping(rs.positive_root(index).coords().as_ptr(), coords, rs.rank());
        Ok(())
    })
}

/// Number of abelian ideals of the Borel subalgebra.
///
/// # Safety
/// `rs` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_abelian_ideal_count(rs: *const RpRootSystem, out: *mut usize) -> RpStatus {
    guard(|| {
        let rs = deref(rs, "rs")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = enumerate_abelian_ideals(&rs.inner).len();
        Ok(())
    })
}

/// Triangulation of the root polytope, or of its positive part. Types A and C.
///
/// # Safety
/// `rs` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_triangulation_new(
    rs: *const RpRootSystem,
    positive: bool,
    out: *mut *mut RpTriangulation,
) -> RpStatus {
    guard(|| {
        let rs = &deref(rs, "rs")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let t = full_triangulation(rs).map_err(lib)?;
        let t = if positive { positive_restriction(&t) } else { t };
        *out = Box::into_raw(Box::new(RpTriangulation {
            inner: t,
            rank: rs.rank(),
        }));
        Ok(())
    })
}

/// # Safety
/// `t` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_triangulation_len(t: *const RpTriangulation, out: *mut usize) -> RpStatus {
    guard(|| {
        let t = deref(t, "t")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = t.inner.len();
        Ok(())
    })
}

/// Vertices of simplex `index` as a row-major `rank × rank` matrix, one root per row.
/// The origin is the implicit extra vertex.
///
/// # Safety
/// `coords` must point to `len` writable integers.
#[no_mangle]
pub unsafe extern "C" fn rp_triangulation_simplex(
    t: *const RpTriangulation,
    index: usize,
    coords: *mut i64,
    len: usize,
) -> RpStatus {
    guard(|| {
        let t = deref(t, "t")?;
        if coords.is_null() {
            return Err(null("coords"));
        }
        let s = t
            .inner
            .simplices
            .get(index)
            .ok_or_else(|| (RpStatus::OutOfRange, format!("simplex index {index} out of range")))?;
        let n = t.rank;
        if len < n * n {
            return Err((RpStatus::BufferTooSmall, format!("need {} entries", n * n)));
        }
        for (r, v) in s.vertices.iter().enumerate() {
            ptr::copy_nonoverlapping(v.coords().as_ptr(), coords.add(r * n), n);
        }
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from [`rp_triangulation_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_triangulation_free(t: *mut RpTriangulation) {
    if !t.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(t))));
    }
}

/// The `report` command's JSON as a NUL-terminated string; release with [`rp_string_free`].
///
/// # Safety
/// `rs` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_report_json(rs: *const RpRootSystem, out: *mut *mut c_char) -> RpStatus {
    guard(|| {
        let rs = &deref(rs, "rs")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = cmd_report(rs).map_err(lib)?;
        let s = serde_json::to_string(&v).map_err(|e| (RpStatus::Internal, e.to_string()))?;
        *out = CString::new(s)
            .map_err(|e| (RpStatus::Internal, e.to_string()))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_string_free(s: *mut c_char) {
    if !s.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(CString::from_raw(s))));
    }
}

/// Coefficients of the characteristic polynomial of the codimension-2 arrangement,
/// constant term first. `rank + 1` entries are written.
///
/// # Safety
/// `coeffs` must point to `len` writable integers.
#[no_mangle]
pub unsafe extern "C" fn rp_characteristic_polynomial(
    rs: *const RpRootSystem,
    coeffs: *mut i64,
    len: usize,
    regions: *mut u64,
) -> RpStatus {
    guard(|| {
        let rs = &deref(rs, "rs")?.inner;
        if coeffs.is_null() {
            return Err(null("coeffs"));
        }
        if len < rs.rank() + 1 {
            return Err((RpStatus::BufferTooSmall, format!("need {} entries", rs.rank() + 1)));
        }
        let hs = build_arrangement(rs).map_err(lib)?;
        let (chi, r) = characteristic_polynomial(&hs, rs.rank());
        ptr::copy_nonoverlapping(chi.as_ptr(), coeffs, chi.len());
        if !regions.is_null() {
            *regions = r;
        }
        Ok(())
    })
}

/// Copy of the last error, for Rust callers and tests.
pub fn last_error_string() -> String {
    unsafe { CStr::from_ptr(rp_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_family_sets_error() {
        let mut h = ptr::null_mut();
        let st = unsafe { rp_root_system_new(b'E' as c_char, 6, &mut h) };
        assert_eq!(st, RpStatus::InvalidArgument);
        assert!(h.is_null());
        assert!(last_error_string().contains('E'));
    }

    #[test]
    fn null_out_pointer() {
        let st = unsafe { rp_root_system_new(b'A' as c_char, 2, ptr::null_mut()) };
        assert_eq!(st, RpStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(unsafe { rp_rank(ptr::null(), &mut n) }, RpStatus::NullPointer);
    }
}
