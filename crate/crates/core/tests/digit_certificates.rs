//! Certified dominance of digit reports across the shipped model grid: the
//! measured relative error of every prefix probability must stay within its
//! certificate, in bases 2 and 10.

use benford_bounds::{
    best_bounds, digit_report, exact_prefix_probability, gaussian_bounds, DensityModel,
    DigitPrefix, WrappedDist,
};

fn models() -> Vec<(String, DensityModel, u32)> {
    let mut out = Vec::new();
    for sigma in [1.0 / 3.0, 0.5, 1.0, 2.0] {
        for base in [2u32, 10] {
            out.push((
                format!("gauss sigma={sigma} base={base}"),
                DensityModel::gaussian(0.37, sigma).unwrap(),
                base,
            ));
        }
    }
    for tau in [1.0, 0.5, 0.3] {
        for base in [2u32, 10] {
            out.push((
                format!("weibull tau={tau} base={base}"),
                DensityModel::weibull(tau, 1.0, base).unwrap(),
                base,
            ));
        }
    }
    out
}

fn prefixes(base: u32) -> Vec<DigitPrefix> {
    let mut out = Vec::new();
    for d in 1..base.min(10) {
        out.push(DigitPrefix::new(base, vec![d]).unwrap());
    }
    // a couple of two-digit events
    out.push(DigitPrefix::new(base, vec![1, 0]).unwrap());
    out.push(DigitPrefix::new(base, vec![1, base - 1]).unwrap());
    out
}

#[test]
fn relative_errors_stay_within_certificates() {
    for (name, model, base) in models() {
        // one certificate per model: the best MRAE bound over derivative orders,
        // plus the closed-form route when the Gaussian hypothesis holds
        let k_cap = match model.family() {
            benford_bounds::Family::Gaussian => 40,
            _ => 14,
        };
        let mut certified = best_bounds(&model, k_cap, false).unwrap().best.mrae_bound;
        if matches!(model.family(), benford_bounds::Family::Gaussian) {
            if let Ok(g) = gaussian_bounds(model.sigma()) {
                certified = certified.min(g.mrae);
            }
        }
        let wrapped = WrappedDist::new(model.clone()).unwrap();
        for prefix in prefixes(base) {
            let exact = exact_prefix_probability(&wrapped, &prefix).unwrap();
            let benford = prefix.benford_probability();
            let rel_err = exact / benford - 1.0;
            assert!(
                rel_err.abs() <= certified + 1e-12,
                "{name}, prefix {prefix}: rel_err {rel_err:e} > bound {certified:e}"
            );
            // base 2's single-digit event covers the whole mantissa range, so
            // its probability is exactly one; every other prefix is interior
            assert!(benford > 0.0 && benford <= 1.0);
            assert!((base, prefix.digits()) == (2, &[1][..]) || benford < 1.0);
            assert!((0.0..=1.0).contains(&exact));
        }
    }
}

#[test]
fn digit_report_agrees_with_by_hand_route() {
    let model = DensityModel::weibull(0.5, 1.0, 10).unwrap();
    let prefix = DigitPrefix::new(10, vec![7]).unwrap();
    let r = digit_report(&model, &prefix, None).unwrap();

    let wrapped = WrappedDist::new(model.clone()).unwrap();
    let exact = exact_prefix_probability(&wrapped, &prefix).unwrap();
    let best = best_bounds(&model, 14, false).unwrap().best.mrae_bound;
    assert_eq!(r.exact_p, exact);
    assert_eq!(r.certified_bound, best);
    assert!(r.rel_err.abs() <= r.certified_bound);
}

#[test]
fn certificates_are_not_vacuous() {
    // the certified bounds for the well-scaled models are far below one
    let tight = [
        (DensityModel::gaussian(0.0, 1.0).unwrap(), 10u32, 2e-7),
        (DensityModel::weibull(0.3, 1.0, 10).unwrap(), 10, 4e-5),
    ];
    for (model, base, cap) in tight {
        let p = DigitPrefix::new(base, vec![1]).unwrap();
        let r = digit_report(&model, &p, None).unwrap();
        assert!(
            r.certified_bound <= cap,
            "bound {:e} above {cap:e}",
            r.certified_bound
        );
    }
}
