//! C ABI for the `benford-bounds` library.
//!
//! Conventions:
//!
//! * every fallible function returns a [`BbStatus`] and writes its result through
//!   out-pointers; `BB_OK` means the outputs are valid;
//! * models, wrapped distributions and bound reports are opaque handles created by
//!   `bb_*_new`-style constructors and released with the matching `bb_*_free`
//!   (freeing NULL is a no-op, handles must not be freed twice);
//! * handles are immutable after construction and safe to share across threads;
//! * panics cannot cross the boundary; they are caught and reported as
//!   `BB_STATUS_INTERNAL_ERROR`.
//!
//! The matching header lives in `include/benford_bounds.h`; regenerate it with
//! `cbindgen --config cbindgen.toml --output include/benford_bounds.h` after
//! changing this file.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use benford_bounds as bb;

/// Result of a C API call; `Ok` means all out-parameters were written.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A parameter was out of range or otherwise invalid.
    InvalidArgument = 2,
    /// The inputs lie outside the mathematical domain of the operation.
    DomainError = 3,
    /// The operation is not defined for this density family (e.g. derivatives
    /// of a non-smooth family).
    Unsupported = 4,
    /// Root finding or quadrature failed to converge.
    NoConvergence = 5,
    /// A measured value exceeded its certified bound.
    VerificationFailed = 6,
    /// A model spec, digit prefix or encoding could not be parsed.
    ParseError = 7,
    /// File access failed.
    IoError = 8,
    /// An internal invariant was violated (caught panic).
    InternalError = 9,
}

fn map_err(e: &bb::Error) -> BbStatus {
    match e {
        bb::Error::InvalidParameter { .. } | bb::Error::NotNormalized { .. } => {
            BbStatus::InvalidArgument
        }
        bb::Error::DerivativeUnavailable { .. } => BbStatus::Unsupported,
        bb::Error::RootFinding { .. } | bb::Error::QuadratureNoConvergence { .. } => {
            BbStatus::NoConvergence
        }
        bb::Error::Domain(_) | bb::Error::SigmaTooSmall { .. } => BbStatus::DomainError,
        bb::Error::DominanceViolation { .. } => BbStatus::VerificationFailed,
        bb::Error::InvalidPrefix(_) | bb::Error::Parse(_) => BbStatus::ParseError,
        bb::Error::Io(_) => BbStatus::IoError,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bb_status_message(status: BbStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        BbStatus::Ok => b"ok\0",
        BbStatus::NullPointer => b"required pointer argument was NULL\0",
        BbStatus::InvalidArgument => b"invalid argument\0",
        BbStatus::DomainError => b"argument outside the operation's domain\0",
        BbStatus::Unsupported => b"operation unsupported for this density family\0",
        BbStatus::NoConvergence => b"root finding or quadrature did not converge\0",
        BbStatus::VerificationFailed => b"measured value exceeded its certified bound\0",
        BbStatus::ParseError => b"could not parse model spec or digit prefix\0",
        BbStatus::IoError => b"file access failed\0",
        BbStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr().cast()
}

/// Opaque density model handle.
pub struct BbModel(bb::DensityModel);

/// Opaque wrapped-distribution handle.
pub struct BbWrapped(bb::WrappedDist);

/// Opaque per-order bound report handle.
pub struct BbReport(bb::BoundReport);

/// Measured distances between the wrapped distribution and uniform.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbDiscrepancies {
    pub range_g: f64,
    pub kuiper: f64,
    pub mrae: f64,
    pub ks: f64,
}

/// Closed-form wrapped-normal bounds at factorial index `m`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbGaussianBounds {
    pub range: f64,
    pub kuiper: f64,
    pub mrae: f64,
    pub m: u64,
}

/// One row of a bound report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbPerK {
    pub k: u32,
    pub tv_k: f64,
    pub range_bound: f64,
    pub kuiper_bound: f64,
    pub mrae_bound: f64,
}

/// Best derivative order and the componentwise minimal bounds of a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbBestBounds {
    pub best_k: u32,
    pub range_bound: f64,
    pub kuiper_bound: f64,
    pub mrae_bound: f64,
}

/// Benford and exact probabilities of one digit prefix with the certified
/// relative-error bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbDigitReport {
    pub benford_p: f64,
    pub exact_p: f64,
    pub rel_err: f64,
    pub certified_bound: f64,
}

fn guarded(f: impl FnOnce() -> BbStatus) -> BbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => BbStatus::InternalError,
    }
}

/// Writes `value` through `out`, or reports a NULL pointer.
unsafe fn write_out<T>(out: *mut T, value: T) -> BbStatus {
    if out.is_null() {
        return BbStatus::NullPointer;
    }
    unsafe { out.write(value) };
    BbStatus::Ok
}

unsafe fn model_out(out: *mut *mut BbModel, result: bb::Result<bb::DensityModel>) -> BbStatus {
    match result {
        Ok(model) => unsafe { write_out(out, Box::into_raw(Box::new(BbModel(model)))) },
        Err(e) => map_err(&e),
    }
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, BbStatus> {
    if ptr.is_null() {
        return Err(BbStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| BbStatus::ParseError)
}

// ---------------------------------------------------------------------------
// model construction and access
// ---------------------------------------------------------------------------

/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_gaussian(
    mu: f64,
    sigma: f64,
    out: *mut *mut BbModel,
) -> BbStatus {
    guarded(|| unsafe { model_out(out, bb::DensityModel::gaussian(mu, sigma)) })
}

/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_gumbel(mu: f64, sigma: f64, out: *mut *mut BbModel) -> BbStatus {
    guarded(|| unsafe { model_out(out, bb::DensityModel::gumbel(mu, sigma)) })
}

/// Base-`base` logarithm of a Weibull variable with shape `tau`, scale `gamma`.
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_weibull(
    tau: f64,
    gamma: f64,
    base: u32,
    out: *mut *mut BbModel,
) -> BbStatus {
    guarded(|| unsafe { model_out(out, bb::DensityModel::weibull(tau, gamma, base)) })
}

/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_uniform_width(width: f64, out: *mut *mut BbModel) -> BbStatus {
    guarded(|| unsafe { model_out(out, bb::DensityModel::uniform_width(width)) })
}

/// Piecewise-linear density through `len` `(knot, value)` pairs, zero outside.
///
/// # Safety
/// `knots` and `values` must point to `len` readable doubles; `out` must be a
/// valid pointer; the returned handle must be released with [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_piecewise_linear(
    knots: *const f64,
    values: *const f64,
    len: usize,
    out: *mut *mut BbModel,
) -> BbStatus {
    guarded(|| {
        if knots.is_null() || values.is_null() {
            return BbStatus::NullPointer;
        }
        let knots = unsafe { std::slice::from_raw_parts(knots, len) }.to_vec();
        let values = unsafe { std::slice::from_raw_parts(values, len) }.to_vec();
        unsafe { model_out(out, bb::DensityModel::piecewise_linear(knots, values)) }
    })
}

/// Parse a model spec string (`gauss:sigma=1`, `weibull:tau=0.5,gamma=2`,
/// `uniform:width=1.5`, `pwl:file=path`); `base` feeds the Weibull conversion.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be a valid pointer; the
/// returned handle must be released with [`bb_model_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_model_parse(
    spec: *const c_char,
    base: u32,
    out: *mut *mut BbModel,
) -> BbStatus {
    guarded(|| {
        let spec = match unsafe { cstr(spec) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        let result = bb::report::parse_model_spec(spec, base).map(|(m, _)| m);
        unsafe { model_out(out, result) }
    })
}

/// # Safety
/// `model` must be a handle from a `bb_model_*` constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_model_free(model: *mut BbModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_model_density(
    model: *const BbModel,
    x: f64,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let Some(m) = (unsafe { model.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        unsafe { write_out(out, m.0.density(x)) }
    })
}

/// Exact `k`-th derivative of the density at `x` (smooth families for `k >= 1`).
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_model_derivative(
    model: *const BbModel,
    k: u32,
    x: f64,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let Some(m) = (unsafe { model.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        match m.0.derivative(k, x) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => map_err(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// total variation and scalar bounds
// ---------------------------------------------------------------------------

/// Exact total variation of the `k`-th derivative of the standard normal density.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_tv_gaussian_deriv(k: u32, out: *mut f64) -> BbStatus {
    guarded(|| match bb::tv_gaussian_deriv(k) {
        Ok(r) => unsafe { write_out(out, r.value) },
        Err(e) => map_err(&e),
    })
}

/// Exact total variation of the `k`-th derivative of the log-Weibull base density.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_tv_gumbel_deriv(k: u32, out: *mut f64) -> BbStatus {
    guarded(|| match bb::tv_gumbel_deriv(k) {
        Ok(r) => unsafe { write_out(out, r.value) },
        Err(e) => map_err(&e),
    })
}

/// `sqrt((k+1)!)`.
#[no_mangle]
pub extern "C" fn bb_tv_factorial_bound(k: u32) -> f64 {
    bb::tv_factorial_bound(k)
}

/// `h(m) = sqrt(m!/m^m)` for `m >= 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_h_stirling(m: u64, out: *mut f64) -> BbStatus {
    guarded(|| match bb::h_stirling(m) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => map_err(&e),
    })
}

/// Range bound from `TV(f^(k))`.
#[no_mangle]
pub extern "C" fn bb_bound_range(tv_k: f64, k: u32) -> f64 {
    bb::bound_range(tv_k, k)
}

/// Kuiper bound from `TV(f^(k))`.
#[no_mangle]
pub extern "C" fn bb_bound_kuiper(tv_k: f64, k: u32) -> f64 {
    bb::bound_kuiper(tv_k, k)
}

/// MRAE bound from `TV(f^(k))`.
#[no_mangle]
pub extern "C" fn bb_bound_mrae(tv_k: f64, k: u32) -> f64 {
    bb::bound_mrae(tv_k, k)
}

/// Pointwise bound `(y-x)(1-(y-x)) TV(f^(k)) / (2 * 6^k)` for `0 <= x < y <= 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_bound_pointwise(
    tv_k: f64,
    k: u32,
    x: f64,
    y: f64,
    out: *mut f64,
) -> BbStatus {
    guarded(|| match bb::bound_pointwise(tv_k, k, x, y) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => map_err(&e),
    })
}

/// Closed-form wrapped-normal bounds for `sigma >= 1/6`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_gaussian_bounds(sigma: f64, out: *mut BbGaussianBounds) -> BbStatus {
    guarded(|| match bb::gaussian_bounds(sigma) {
        Ok(b) => unsafe {
            write_out(
                out,
                BbGaussianBounds {
                    range: b.range,
                    kuiper: b.kuiper,
                    mrae: b.mrae,
                    m: b.m,
                },
            )
        },
        Err(e) => map_err(&e),
    })
}

/// Weibull digit-error bound `B_tau(k) = 3 TV(f_o^(k)) (tau ln(base)/6)^(k+1)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_weibull_bound(tau: f64, base: u32, k: u32, out: *mut f64) -> BbStatus {
    guarded(|| match bb::weibull_bound(tau, base, k) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => map_err(&e),
    })
}

// ---------------------------------------------------------------------------
// wrapped distribution
// ---------------------------------------------------------------------------

/// Wrap a model modulo one (the model handle stays owned by the caller).
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer; the returned
/// handle must be released with [`bb_wrapped_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_new(
    model: *const BbModel,
    out: *mut *mut BbWrapped,
) -> BbStatus {
    guarded(|| {
        let Some(m) = (unsafe { model.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        match bb::WrappedDist::new(m.0.clone()) {
            Ok(w) => unsafe { write_out(out, Box::into_raw(Box::new(BbWrapped(w)))) },
            Err(e) => map_err(&e),
        }
    })
}

/// # Safety
/// `wrapped` must be a handle from [`bb_wrapped_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_free(wrapped: *mut BbWrapped) {
    if !wrapped.is_null() {
        drop(unsafe { Box::from_raw(wrapped) });
    }
}

/// Wrapped density `g(x)`; periodic in `x`.
///
/// # Safety
/// `wrapped` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_pdf(
    wrapped: *const BbWrapped,
    x: f64,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let Some(w) = (unsafe { wrapped.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        unsafe { write_out(out, w.0.pdf(x)) }
    })
}

/// Wrapped distribution `G(x)` for `x` in `[0, 1]`.
///
/// # Safety
/// `wrapped` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_cdf(
    wrapped: *const BbWrapped,
    x: f64,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let Some(w) = (unsafe { wrapped.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        match w.0.cdf(x) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => map_err(&e),
        }
    })
}

/// Mass outside the truncation window (analytic bound).
///
/// # Safety
/// `wrapped` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_tail_bound(wrapped: *const BbWrapped) -> f64 {
    match unsafe { wrapped.as_ref() } {
        Some(w) => w.0.tail_bound(),
        None => f64::NAN,
    }
}

/// Measure the discrepancies from uniform on a `grid_n`-cell scan grid
/// (`grid_n >= 64`).
///
/// # Safety
/// `wrapped` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_wrapped_measure(
    wrapped: *const BbWrapped,
    grid_n: usize,
    out: *mut BbDiscrepancies,
) -> BbStatus {
    guarded(|| {
        let Some(w) = (unsafe { wrapped.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        match w.0.measure(grid_n) {
            Ok(d) => unsafe {
                write_out(
                    out,
                    BbDiscrepancies {
                        range_g: d.range_g,
                        kuiper: d.kuiper,
                        mrae: d.mrae,
                        ks: d.ks,
                    },
                )
            },
            Err(e) => map_err(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// bound reports
// ---------------------------------------------------------------------------

/// Build the per-order bound table for a model; with `verify` set, measure the
/// wrapped distribution and fail with `BB_STATUS_VERIFICATION_FAILED` if any
/// certificate is exceeded.
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer; the returned
/// handle must be released with [`bb_report_free`].
#[no_mangle]
pub unsafe extern "C" fn bb_best_bounds(
    model: *const BbModel,
    k_max: u32,
    verify: bool,
    out: *mut *mut BbReport,
) -> BbStatus {
    guarded(|| {
        let Some(m) = (unsafe { model.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        match bb::best_bounds(&m.0, k_max, verify) {
            Ok(r) => unsafe { write_out(out, Box::into_raw(Box::new(BbReport(r)))) },
            Err(e) => map_err(&e),
        }
    })
}

/// # Safety
/// `report` must be a handle from [`bb_best_bounds`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_report_free(report: *mut BbReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Number of per-order rows in the report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bb_report_len(report: *const BbReport) -> usize {
    match unsafe { report.as_ref() } {
        Some(r) => r.0.per_k.len(),
        None => 0,
    }
}

/// Fetch row `index` of the report.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_report_row(
    report: *const BbReport,
    index: usize,
    out: *mut BbPerK,
) -> BbStatus {
    guarded(|| {
        let Some(r) = (unsafe { report.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        let Some(row) = r.0.per_k.get(index) else {
            return BbStatus::InvalidArgument;
        };
        unsafe {
            write_out(
                out,
                BbPerK {
                    k: row.k,
                    tv_k: row.tv_k,
                    range_bound: row.range_bound,
                    kuiper_bound: row.kuiper_bound,
                    mrae_bound: row.mrae_bound,
                },
            )
        }
    })
}

/// Best derivative order and componentwise minimal bounds.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_report_best(
    report: *const BbReport,
    out: *mut BbBestBounds,
) -> BbStatus {
    guarded(|| {
        let Some(r) = (unsafe { report.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        unsafe {
            write_out(
                out,
                BbBestBounds {
                    best_k: r.0.best_k,
                    range_bound: r.0.best.range_bound,
                    kuiper_bound: r.0.best.kuiper_bound,
                    mrae_bound: r.0.best.mrae_bound,
                },
            )
        }
    })
}

/// Measured discrepancies attached by a verifying [`bb_best_bounds`] call;
/// `BB_STATUS_UNSUPPORTED` when the report was built without verification.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_report_measured(
    report: *const BbReport,
    out: *mut BbDiscrepancies,
) -> BbStatus {
    guarded(|| {
        let Some(r) = (unsafe { report.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        let Some(d) = r.0.measured else {
            return BbStatus::Unsupported;
        };
        unsafe {
            write_out(
                out,
                BbDiscrepancies {
                    range_g: d.range_g,
                    kuiper: d.kuiper,
                    mrae: d.mrae,
                    ks: d.ks,
                },
            )
        }
    })
}

// ---------------------------------------------------------------------------
// digit prefixes
// ---------------------------------------------------------------------------

/// Mantissa value of a prefix such as `"17@10"` or `"1a@16"` (`default_base`
/// applies when the `@base` suffix is missing).
///
/// # Safety
/// `prefix` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_prefix_value(
    prefix: *const c_char,
    default_base: u32,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let s = match unsafe { cstr(prefix) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        match bb::DigitPrefix::parse_with_default(s, default_base) {
            Ok(p) => unsafe { write_out(out, p.value()) },
            Err(e) => map_err(&e),
        }
    })
}

/// Benford probability `log_b(1 + b^-l / d)` of a prefix.
///
/// # Safety
/// `prefix` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_benford_probability(
    prefix: *const c_char,
    default_base: u32,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let s = match unsafe { cstr(prefix) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        match bb::DigitPrefix::parse_with_default(s, default_base) {
            Ok(p) => unsafe { write_out(out, p.benford_probability()) },
            Err(e) => map_err(&e),
        }
    })
}

/// Exact probability of the prefix event under a wrapped distribution.
///
/// # Safety
/// `wrapped` must be a live handle; `prefix` must be a NUL-terminated string;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_exact_prefix_probability(
    wrapped: *const BbWrapped,
    prefix: *const c_char,
    default_base: u32,
    out: *mut f64,
) -> BbStatus {
    guarded(|| {
        let Some(w) = (unsafe { wrapped.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        let s = match unsafe { cstr(prefix) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        let p = match bb::DigitPrefix::parse_with_default(s, default_base) {
            Ok(p) => p,
            Err(e) => return map_err(&e),
        };
        match bb::exact_prefix_probability(&w.0, &p) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => map_err(&e),
        }
    })
}

/// Full digit report for a model and prefix; `k_max < 0` picks the family
/// default derivative-order cap.
///
/// # Safety
/// `model` must be a live handle; `prefix` must be a NUL-terminated string;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_digit_report(
    model: *const BbModel,
    prefix: *const c_char,
    default_base: u32,
    k_max: i32,
    out: *mut BbDigitReport,
) -> BbStatus {
    guarded(|| {
        let Some(m) = (unsafe { model.as_ref() }) else {
            return BbStatus::NullPointer;
        };
        let s = match unsafe { cstr(prefix) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        let p = match bb::DigitPrefix::parse_with_default(s, default_base) {
            Ok(p) => p,
            Err(e) => return map_err(&e),
        };
        let k = if k_max < 0 { None } else { Some(k_max as u32) };
        match bb::digit_report(&m.0, &p, k) {
            Ok(r) => unsafe {
                write_out(
                    out,
                    BbDigitReport {
                        benford_p: r.benford_p,
                        exact_p: r.exact_p,
                        rel_err: r.rel_err,
                        certified_bound: r.certified_bound,
                    },
                )
            },
            Err(e) => map_err(&e),
        }
    })
}
