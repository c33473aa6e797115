//! C ABI over `hallgpd`.
//!
//! Every entry point returns an [`HgStatus`] and writes results through out
//! pointers. Handles are opaque and owned by the caller, who releases them
//! with the matching `_free` function. Strings returned through `char **`
//! are NUL-terminated, UTF-8, and released with [`hg_string_free`]. After
//! a non-`OK` status, [`hg_last_error`] describes the failure on the calling
//! thread. Panics never cross the boundary; they surface as `HG_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hallgpd::cli::tables::tables;
use hallgpd::cli::{run_suite, Suite, SuiteConfig};
use hallgpd::error::Error;
use hallgpd::exactmath::{format_rational, Budget, PrimeField};
use hallgpd::groupoid::random::DEFAULT_SEED;
use hallgpd::groupoid::{groupoid_from_json, Groupoid};
use hallgpd::hall::HallAlgebra;
use hallgpd::quiver::{ClassId, Quiver};
use hallgpd::report::CheckReport;

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed text, an unknown name or an invalid configuration.
    InvalidInput = 2,
    /// An exhaustive enumeration would exceed the algebra's budget.
    BudgetExceeded = 3,
    /// A requested grade lies beyond the bound.
    BoundExceeded = 4,
    /// An internal invariant failed; the handle arguments are still valid.
    Panic = 5,
}

/// A Hall algebra over a prime field for one quiver.
pub struct HgAlgebra {
    inner: HallAlgebra,
}

/// A finite groupoid.
pub struct HgGroupoid {
    inner: Groupoid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HgStatus {
    match e {
        Error::BudgetExceeded { .. } => HgStatus::BudgetExceeded,
        Error::BoundExceeded { .. } => HgStatus::BoundExceeded,
        _ => HgStatus::InvalidInput,
    }
}

/// Runs `body`, recording any error or panic for [`hg_last_error`].
fn guard(body: impl FnOnce() -> Result<(), (HgStatus, String)>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(message);
            HgStatus::Panic
        }
    }
}

fn lift<T>(r: hallgpd::error::Result<T>) -> Result<T, (HgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (HgStatus, String) {
    (HgStatus::NullArgument, format!("{what} is null"))
}

/// # Safety
/// `p` is null or points to a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HgStatus::InvalidInput, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (HgStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (HgStatus, String)> {
    let c = CString::new(s).map_err(|_| (HgStatus::Panic, "output contains NUL".to_string()))?;
    put(out, c.into_raw(), "out")
}

/// # Safety
/// `p` is null or a live handle.
unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (HgStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

/// The message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned through a `char **` out parameter of this
/// library and has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the Hall algebra of the quiver described by `quiver_json`
/// (`{"vertices": n, "arrows": [[s, t], ...]}`) over `F_q`.
///
/// # Safety
/// `quiver_json` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_new(
    quiver_json: *const c_char,
    q: u64,
    budget: u64,
    out: *mut *mut HgAlgebra,
) -> HgStatus {
    guard(|| {
        let quiver = lift(Quiver::from_json(text(quiver_json, "quiver_json")?))?;
        if budget == 0 {
            return Err((HgStatus::InvalidInput, "budget must be positive".into()));
        }
        let field = lift(PrimeField::new(q))?;
        let inner = HallAlgebra::new(Arc::new(quiver), field, Budget(budget));
        put(out, Box::into_raw(Box::new(HgAlgebra { inner })), "out")
    })
}

/// Releases an algebra. Null is ignored.
///
/// # Safety
/// `alg` is null or a live handle from [`hg_algebra_new`].
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_free(alg: *mut HgAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Number of isomorphism classes with total dimension at most `max_dim`.
///
/// # Safety
/// `alg` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_class_count(alg: *const HgAlgebra, max_dim: usize, out: *mut usize) -> HgStatus {
    guard(|| {
        let h = &handle(alg, "alg")?.inner;
        put(out, lift(h.classes_up_to(max_dim))?.len(), "out")
    })
}

/// `[left]·[right]` as a JSON object from class labels such as `"(1,0)#0"`
/// to `"num/den"` coefficients.
///
/// # Safety
/// `alg` is a live handle; the labels are NUL-terminated; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_product_json(
    alg: *const HgAlgebra,
    left: *const c_char,
    right: *const c_char,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let h = &handle(alg, "alg")?.inner;
        let m = lift(ClassId::parse(text(left, "left")?))?;
        let n = lift(ClassId::parse(text(right, "right")?))?;
        let product = lift(h.product_basis(&m, &n))?;
        let terms: serde_json::Map<String, serde_json::Value> = product
            .iter()
            .map(|(c, x)| (c.to_string(), format_rational(x).into()))
            .collect();
        put_string(out, serde_json::Value::Object(terms).to_string())
    })
}

/// Product and coproduct tables for every class within `max_dim`, as JSON.
///
/// # Safety
/// `alg` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_tables_json(
    alg: *const HgAlgebra,
    max_dim: usize,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let h = &handle(alg, "alg")?.inner;
        let t = lift(tables(h, max_dim))?;
        put_string(out, serde_json::to_string(&t).expect("tables serialize"))
    })
}

/// Runs a verification suite by its command-line name (`"green"`, `"all"`, ...)
/// with the default seed and instance counts. Writes the report as JSON and
/// whether every check passed.
///
/// # Safety
/// `alg` is a live handle; `suite` is NUL-terminated; both out pointers are
/// valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_algebra_verify_json(
    alg: *const HgAlgebra,
    suite: *const c_char,
    max_dim: usize,
    out_report: *mut *mut c_char,
    out_passed: *mut bool,
) -> HgStatus {
    guard(|| {
        let h = &handle(alg, "alg")?.inner;
        let suite: Suite = lift(text(suite, "suite")?.parse())?;
        if out_report.is_null() || out_passed.is_null() {
            return Err(null("an out pointer"));
        }
        let cfg = SuiteConfig {
            max_dim,
            object_dim: 2,
            seed: DEFAULT_SEED,
            engine_instances: 50,
            equivalence_instances: 20,
            finite_sets_max: 8,
        };
        let checks = lift(run_suite(h, suite, &cfg, None))?;
        let passed = checks.iter().all(CheckReport::passed);
        let report = serde_json::json!({"suite": suite.to_string(), "passed": passed, "checks": checks});
        put_string(out_report, report.to_string())?;
        put(out_passed, passed, "out_passed")
    })
}

/// Parses a groupoid document (`{"objects", "morphisms", "compose"}`).
///
/// # Safety
/// `json` is NUL-terminated; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_groupoid_from_json(json: *const c_char, out: *mut *mut HgGroupoid) -> HgStatus {
    guard(|| {
        let inner = lift(groupoid_from_json(text(json, "json")?))?;
        put(out, Box::into_raw(Box::new(HgGroupoid { inner })), "out")
    })
}

/// The groupoid of finite sets of size at most `max` and their bijections.
///
/// # Safety
/// `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_groupoid_finite_sets(max: usize, out: *mut *mut HgGroupoid) -> HgStatus {
    guard(|| {
        if max > 8 {
            return Err((HgStatus::InvalidInput, "finite sets are built up to size 8".into()));
        }
        put(
            out,
            Box::into_raw(Box::new(HgGroupoid {
                inner: Groupoid::finite_sets(max),
            })),
            "out",
        )
    })
}

/// Releases a groupoid. Null is ignored.
///
/// # Safety
/// `g` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hg_groupoid_free(g: *mut HgGroupoid) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of objects.
///
/// # Safety
/// `g` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_groupoid_object_count(g: *const HgGroupoid, out: *mut usize) -> HgStatus {
    guard(|| put(out, handle(g, "g")?.inner.object_count(), "out"))
}

/// Cardinality `Σ 1/|Aut x|` over iso classes, as `"num/den"`.
///
/// # Safety
/// `g` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hg_groupoid_cardinality(g: *const HgGroupoid, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let g = &handle(g, "g")?.inner;
        put_string(out, format_rational(&g.cardinality()))
    })
}
