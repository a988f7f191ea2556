//! C interface to `equitor`.
//!
//! Objects cross the boundary as opaque handles (`EqtIdeal`, `EqtTor`) owned by
//! the caller and released with the matching `*_free`. Every fallible call
//! returns an [`EqtStatus`]; on failure a message is kept per thread and can be
//! read with [`eqt_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use equitor::cli::{parse_job, run};
use equitor::duality::{projective_dimension, regularity};
use equitor::equivariant::equivariant_tor;
use equitor::{EquivariantTor, Error, FieldSpec, Multidegree, Partition, SymIdeal};

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ZeroIdeal = 3,
    UnitIdeal = 4,
    InvalidCharacteristic = 5,
    TooLarge = 6,
    InvalidUtf8 = 7,
    InvalidJob = 8,
    /// The job ran but a `verify` task found a mismatch; the report is still returned.
    VerifyFailed = 9,
    Panic = 10,
}

/// An Sₙ-invariant monomial ideal.
pub struct EqtIdeal(SymIdeal);

/// Equivariant `Tor_•(I)` over a fixed field.
pub struct EqtTor(EquivariantTor);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(e: &Error) -> EqtStatus {
    match e {
        Error::ZeroIdeal => EqtStatus::ZeroIdeal,
        Error::UnitIdeal => EqtStatus::UnitIdeal,
        Error::InvalidCharacteristic(_) => EqtStatus::InvalidCharacteristic,
        Error::OracleTooLarge(_) | Error::TooManyVertices(_) => EqtStatus::TooLarge,
        Error::Job(_) => EqtStatus::InvalidJob,
        _ => EqtStatus::InvalidArgument,
    }
}

/// Runs `body`, recording any error or panic as the thread's last error.
fn guarded(body: impl FnOnce() -> Result<(), (EqtStatus, String)>) -> EqtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            EqtStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EqtStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (EqtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (EqtStatus, String) {
    (EqtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn slice<'a>(data: *const u32, len: usize, what: &str) -> Result<&'a [u32], (EqtStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (EqtStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn field(characteristic: u32) -> Result<FieldSpec, (EqtStatus, String)> {
    FieldSpec::new(characteristic).map_err(lib_err)
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Builds an ideal in `n` variables from `generator_count` exponent vectors
/// stored row-major in `entries`. Each vector is sorted into a partition.
///
/// # Safety
/// `entries` must point to `n * generator_count` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_ideal_new(
    n: usize,
    entries: *const u32,
    generator_count: usize,
    out: *mut *mut EqtIdeal,
) -> EqtStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let total = n
            .checked_mul(generator_count)
            .ok_or((EqtStatus::InvalidArgument, "size overflow".to_string()))?;
        let data = slice(entries, total, "entries")?;
        let gens = if n == 0 {
            vec![Partition::zero(0); generator_count]
        } else {
            data.chunks(n).map(|g| Partition::sorted_from(g.to_vec())).collect()
        };
        let ideal = SymIdeal::new(n, gens).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(EqtIdeal(ideal)));
        Ok(())
    })
}

/// # Safety
/// `ideal` must come from `eqt_ideal_new` and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eqt_ideal_free(ideal: *mut EqtIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Whether `x^a` lies in the ideal, for an exponent vector `a` of length `len`.
///
/// # Safety
/// Pointers must be valid for the given lengths.
#[no_mangle]
pub unsafe extern "C" fn eqt_ideal_contains(
    ideal: *const EqtIdeal,
    exponents: *const u32,
    len: usize,
    out: *mut bool,
) -> EqtStatus {
    guarded(|| {
        let ideal = deref(ideal, "ideal")?;
        let a = slice(exponents, len, "exponents")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ideal.0.contains_multidegree(&Multidegree::new(a.to_vec())).map_err(lib_err)?;
        Ok(())
    })
}

/// Number of minimal generators, up to the Sₙ action.
///
/// # Safety
/// `ideal` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eqt_ideal_generator_count(ideal: *const EqtIdeal, out: *mut usize) -> EqtStatus {
    guarded(|| {
        let ideal = deref(ideal, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ideal.0.generators().len();
        Ok(())
    })
}

/// Computes `Tor_•(I)` over the field of the given characteristic (0 or prime).
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_compute(
    ideal: *const EqtIdeal,
    characteristic: u32,
    out: *mut *mut EqtTor,
) -> EqtStatus {
    guarded(|| {
        let ideal = deref(ideal, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let tor = equivariant_tor(&ideal.0, field(characteristic)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(EqtTor(tor)));
        Ok(())
    })
}

/// Switches a Tor handle to `Tor_•(R/I)` in place.
///
/// # Safety
/// `tor` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_to_quotient(tor: *mut EqtTor) -> EqtStatus {
    guarded(|| {
        let tor = tor.as_mut().ok_or_else(|| null("tor"))?;
        tor.0 = tor.0.quotient();
        Ok(())
    })
}

/// # Safety
/// `tor` must come from `eqt_tor_compute` and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_free(tor: *mut EqtTor) {
    if !tor.is_null() {
        drop(Box::from_raw(tor));
    }
}

/// Graded Betti number `β_{i,j}`.
///
/// # Safety
/// `tor` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_betti(tor: *const EqtTor, i: usize, j: u64, out: *mut u64) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = tor.0.graded_betti().get(i, j);
        Ok(())
    })
}

/// `dim Tor_i⟨μ⟩`, the sum over all rearrangements of the partition `μ`.
///
/// # Safety
/// `mu` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_orbit_dim(
    tor: *const EqtTor,
    i: usize,
    mu: *const u32,
    len: usize,
    out: *mut u64,
) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        let mu = slice(mu, len, "mu")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if len != tor.0.n() {
            return Err(lib_err(Error::LengthMismatch { expected: tor.0.n(), found: len }));
        }
        let mu = Partition::new(mu.to_vec()).map_err(lib_err)?;
        *out = tor.0.orbit_dim(i, &mu);
        Ok(())
    })
}

/// `dim Tor_i` in the single multidegree `a`.
///
/// # Safety
/// `a` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_multigraded_betti(
    tor: *const EqtTor,
    i: usize,
    a: *const u32,
    len: usize,
    out: *mut u64,
) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        let a = slice(a, len, "a")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = tor.0.multigraded_betti(i, &Multidegree::new(a.to_vec())).map_err(lib_err)?;
        Ok(())
    })
}

/// Largest `i` with non-zero Tor; `false` in `has_any` when Tor vanishes.
///
/// # Safety
/// All pointers must be live and writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_max_index(tor: *const EqtTor, has_any: *mut bool, out: *mut usize) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        if has_any.is_null() || out.is_null() {
            return Err(null("out"));
        }
        let top = tor.0.max_index();
        *has_any = top.is_some();
        *out = top.unwrap_or(0);
        Ok(())
    })
}

/// The Betti table in Macaulay2 layout. Free the result with `eqt_string_free`.
///
/// # Safety
/// `tor` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_betti_table_text(tor: *const EqtTor, out: *mut *mut c_char) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(tor.0.graded_betti().render());
        Ok(())
    })
}

/// One line per orbit component, e.g. `Tor_2<(5,5,1)>: 1 x Ind[(1,1),(1)]`.
///
/// # Safety
/// `tor` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_tor_components_text(tor: *const EqtTor, out: *mut *mut c_char) -> EqtStatus {
    guarded(|| {
        let tor = deref(tor, "tor")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(tor.0.render_text());
        Ok(())
    })
}

/// `reg(R/I)`.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_regularity(ideal: *const EqtIdeal, out: *mut u64) -> EqtStatus {
    guarded(|| {
        let ideal = deref(ideal, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = regularity(&ideal.0).map_err(lib_err)?;
        Ok(())
    })
}

/// `pd(R/I)`.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_projective_dimension(ideal: *const EqtIdeal, out: *mut usize) -> EqtStatus {
    guarded(|| {
        let ideal = deref(ideal, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = projective_dimension(&ideal.0).map_err(lib_err)?;
        Ok(())
    })
}

/// Runs a JSON job document and returns the JSON report in `out`.
/// A failed `verify` yields `VERIFY_FAILED` with the report still written.
///
/// # Safety
/// `job` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eqt_run_job_json(job: *const c_char, out: *mut *mut c_char) -> EqtStatus {
    guarded(|| {
        if job.is_null() {
            return Err(null("job"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(job)
            .to_str()
            .map_err(|e| (EqtStatus::InvalidUtf8, e.to_string()))?;
        let report = run(&parse_job(text).map_err(lib_err)?).map_err(lib_err)?;
        *out = to_c_string(report.to_json());
        if report.verified() {
            Ok(())
        } else {
            Err((EqtStatus::VerifyFailed, "verification found a mismatch".to_string()))
        }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eqt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failed call on this thread, or an empty string.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn eqt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn eqt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
