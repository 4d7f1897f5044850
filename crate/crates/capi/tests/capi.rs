//! Drive the C ABI through its exported functions, including the error paths
//! a C caller would hit.

use std::ffi::CString;
use std::ptr;

use benford_bounds_capi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn gaussian_model_lifecycle_and_bounds() {
    unsafe {
        let mut model: *mut BbModel = ptr::null_mut();
        assert_eq!(bb_model_gaussian(0.0, 1.0, &mut model), BbStatus::Ok);
        assert!(!model.is_null());

        let mut density = 0.0;
        assert_eq!(bb_model_density(model, 0.0, &mut density), BbStatus::Ok);
        assert!((density - 0.3989422804014327).abs() < 1e-15);

        let mut d1 = f64::NAN;
        assert_eq!(bb_model_derivative(model, 1, 0.0, &mut d1), BbStatus::Ok);
        assert!(d1.abs() < 1e-18);

        let mut gb = BbGaussianBounds {
            range: 0.0,
            kuiper: 0.0,
            mrae: 0.0,
            m: 0,
        };
        assert_eq!(bb_gaussian_bounds(1.0, &mut gb), BbStatus::Ok);
        assert_eq!(gb.m, 36);
        assert!((gb.kuiper / 4.435e-8 - 1.0).abs() < 1e-3);

        bb_model_free(model);
    }
}

#[test]
fn wrapped_distribution_round_trip() {
    unsafe {
        let mut model: *mut BbModel = ptr::null_mut();
        assert_eq!(bb_model_uniform_width(1.5, &mut model), BbStatus::Ok);

        let mut wrapped: *mut BbWrapped = ptr::null_mut();
        assert_eq!(bb_wrapped_new(model, &mut wrapped), BbStatus::Ok);
        bb_model_free(model);

        let mut g = 0.0;
        assert_eq!(bb_wrapped_pdf(wrapped, 0.25, &mut g), BbStatus::Ok);
        assert!((g - 4.0 / 3.0).abs() < 1e-14);

        let mut cdf = 0.0;
        assert_eq!(bb_wrapped_cdf(wrapped, 0.5, &mut cdf), BbStatus::Ok);
        assert!((cdf - 2.0 / 3.0).abs() < 1e-14);
        assert_eq!(
            bb_wrapped_cdf(wrapped, 1.5, &mut cdf),
            BbStatus::DomainError
        );

        let mut meas = BbDiscrepancies {
            range_g: 0.0,
            kuiper: 0.0,
            mrae: 0.0,
            ks: 0.0,
        };
        assert_eq!(bb_wrapped_measure(wrapped, 1024, &mut meas), BbStatus::Ok);
        assert!((meas.kuiper - 1.0 / 6.0).abs() < 1e-9);
        assert_eq!(
            bb_wrapped_measure(wrapped, 8, &mut meas),
            BbStatus::InvalidArgument
        );

        assert!(bb_wrapped_tail_bound(wrapped) <= 1e-12);
        bb_wrapped_free(wrapped);
    }
}

#[test]
fn report_accessors() {
    unsafe {
        let mut model: *mut BbModel = ptr::null_mut();
        let spec = c("weibull:tau=1");
        assert_eq!(bb_model_parse(spec.as_ptr(), 10, &mut model), BbStatus::Ok);

        let mut report: *mut BbReport = ptr::null_mut();
        assert_eq!(bb_best_bounds(model, 14, true, &mut report), BbStatus::Ok);
        // rows stop a few orders past the k = 3 minimum (growth cutoff)
        let len = bb_report_len(report);
        assert!((7..=15).contains(&len), "len = {len}");

        let mut best = BbBestBounds {
            best_k: 0,
            range_bound: 0.0,
            kuiper_bound: 0.0,
            mrae_bound: 0.0,
        };
        assert_eq!(bb_report_best(report, &mut best), BbStatus::Ok);
        assert_eq!(best.best_k, 3);
        assert!((best.mrae_bound / 2.9348e-1 - 1.0).abs() < 1e-4);

        let mut row = BbPerK {
            k: 0,
            tv_k: 0.0,
            range_bound: 0.0,
            kuiper_bound: 0.0,
            mrae_bound: 0.0,
        };
        assert_eq!(bb_report_row(report, 0, &mut row), BbStatus::Ok);
        assert_eq!(row.k, 0);
        assert_eq!(
            bb_report_row(report, 99, &mut row),
            BbStatus::InvalidArgument
        );

        let mut meas = BbDiscrepancies {
            range_g: 0.0,
            kuiper: 0.0,
            mrae: 0.0,
            ks: 0.0,
        };
        assert_eq!(bb_report_measured(report, &mut meas), BbStatus::Ok);
        assert!(meas.mrae <= best.mrae_bound + 1e-12);

        bb_report_free(report);

        // without verification the measurement is absent
        let mut bare: *mut BbReport = ptr::null_mut();
        assert_eq!(bb_best_bounds(model, 5, false, &mut bare), BbStatus::Ok);
        assert_eq!(bb_report_measured(bare, &mut meas), BbStatus::Unsupported);
        bb_report_free(bare);

        bb_model_free(model);
    }
}

#[test]
fn digit_interfaces() {
    unsafe {
        let mut p = 0.0;
        let one = c("1@10");
        assert_eq!(
            bb_benford_probability(one.as_ptr(), 10, &mut p),
            BbStatus::Ok
        );
        assert!((p - std::f64::consts::LOG10_2).abs() < 1e-15);

        let hex = c("1a@16");
        let mut v = 0.0;
        assert_eq!(bb_prefix_value(hex.as_ptr(), 10, &mut v), BbStatus::Ok);
        assert!((v - (16.0 + 10.0) / 16.0).abs() < 1e-15);

        let bad = c("0x@10");
        assert_eq!(
            bb_benford_probability(bad.as_ptr(), 10, &mut p),
            BbStatus::ParseError
        );

        let mut model: *mut BbModel = ptr::null_mut();
        assert_eq!(bb_model_weibull(0.3, 1.0, 10, &mut model), BbStatus::Ok);
        let mut report = BbDigitReport {
            benford_p: 0.0,
            exact_p: 0.0,
            rel_err: 0.0,
            certified_bound: 0.0,
        };
        assert_eq!(
            bb_digit_report(model, one.as_ptr(), 10, -1, &mut report),
            BbStatus::Ok
        );
        assert!((report.certified_bound / 3.6801e-5 - 1.0).abs() < 1e-4);
        assert!(report.rel_err.abs() <= report.certified_bound);

        let mut wrapped: *mut BbWrapped = ptr::null_mut();
        assert_eq!(bb_wrapped_new(model, &mut wrapped), BbStatus::Ok);
        let mut exact = 0.0;
        assert_eq!(
            bb_exact_prefix_probability(wrapped, one.as_ptr(), 10, &mut exact),
            BbStatus::Ok
        );
        assert!((exact - report.exact_p).abs() < 1e-15);
        bb_wrapped_free(wrapped);
        bb_model_free(model);
    }
}

#[test]
fn null_and_error_paths() {
    unsafe {
        let mut out = 0.0;
        assert_eq!(
            bb_model_density(ptr::null(), 0.0, &mut out),
            BbStatus::NullPointer
        );
        assert_eq!(
            bb_model_gaussian(0.0, 1.0, ptr::null_mut()),
            BbStatus::NullPointer
        );

        let mut model: *mut BbModel = ptr::null_mut();
        assert_eq!(
            bb_model_gaussian(0.0, -1.0, &mut model),
            BbStatus::InvalidArgument
        );
        assert_eq!(bb_model_uniform_width(1.5, &mut model), BbStatus::Ok);
        assert_eq!(
            bb_model_derivative(model, 2, 0.3, &mut out),
            BbStatus::Unsupported
        );
        bb_model_free(model);
        bb_model_free(ptr::null_mut()); // freeing NULL is a no-op

        let mut gb = BbGaussianBounds {
            range: 0.0,
            kuiper: 0.0,
            mrae: 0.0,
            m: 0,
        };
        assert_eq!(bb_gaussian_bounds(0.1, &mut gb), BbStatus::DomainError);

        assert_eq!(bb_h_stirling(0, &mut out), BbStatus::DomainError);
        assert_eq!(bb_h_stirling(36, &mut out), BbStatus::Ok);

        let msg = bb_status_message(BbStatus::DomainError);
        let text = std::ffi::CStr::from_ptr(msg).to_str().unwrap();
        assert!(text.contains("domain"));

        // piecewise-linear validation through the ABI
        let knots = [0.0, 1.0, 2.0];
        let bad_values = [0.0, 2.0, 0.0]; // integrates to 2
        let mut pwl: *mut BbModel = ptr::null_mut();
        assert_eq!(
            bb_model_piecewise_linear(knots.as_ptr(), bad_values.as_ptr(), 3, &mut pwl),
            BbStatus::InvalidArgument
        );
        let good_values = [0.0, 1.0, 0.0];
        assert_eq!(
            bb_model_piecewise_linear(knots.as_ptr(), good_values.as_ptr(), 3, &mut pwl),
            BbStatus::Ok
        );
        bb_model_free(pwl);
    }
}
