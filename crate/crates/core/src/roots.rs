//! Real-root isolation for the polynomial families used by the total-variation
//! computations.
//!
//! Two solvers, both bracketing-based so no sign change can be missed:
//!
//! * [`real_roots_exact`] isolates every real root of an exact integer-coefficient
//!   polynomial. The critical points of the polynomial (found recursively through its
//!   derivative chain) split the line into monotone pieces; each piece holds at most
//!   one root, bracketed by a sign change and bisected with exact rational sign
//!   evaluation. Missed or spurious roots are impossible, independent of coefficient
//!   magnitude.
//! * [`hermite_he_roots`] exploits the interlacing of consecutive orthogonal
//!   polynomials and the numerically stable three-term recurrence, which is much
//!   cheaper at the degrees (up to ~60) the Gaussian bounds explore.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::densities::big_to_f64;
#[cfg(test)]
use crate::densities::derivative_coeffs;

/// Sign of the exact polynomial at a floating-point argument.
fn sign_exact(coeffs: &[BigInt], t: f64) -> i32 {
    let tr = BigRational::from_float(t).expect("finite argument");
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &tr + BigRational::from_integer(c.clone());
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
fn eval_f64(coeffs: &[BigInt], t: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * t + big_to_f64(c);
    }
    acc
}

/// Bisect a sign-changing bracket down to f64 resolution; exact signs at every probe.
fn bisect_exact(coeffs: &[BigInt], mut lo: f64, mut hi: f64, sign_lo: i32) -> f64 {
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match sign_exact(coeffs, mid) {
            0 => return mid,
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    0.5 * (lo + hi)
}

/// All real roots of the integer-coefficient polynomial (ascending coefficients),
/// in increasing order. Multiple roots collapse to one representative.
///
/// General-purpose recursive isolation through the derivative chain; kept as the
/// independent oracle the interlacing ladders are checked against.
#[cfg(test)]
pub(crate) fn real_roots_exact(coeffs: &[BigInt]) -> Vec<f64> {
    let mut c: Vec<BigInt> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    if c.len() == 2 {
        let r = BigRational::new(-c[0].clone(), c[1].clone());
        return vec![crate::densities::big_to_f64(r.numer()) / big_to_f64(r.denom())];
    }
    let critical = real_roots_exact(&derivative_coeffs(&c));

    // Cauchy bound: all roots lie inside [-B, B].
    let lead = big_to_f64(c.last().unwrap()).abs();
    let max_rest = c[..c.len() - 1]
        .iter()
        .map(|v| big_to_f64(v).abs())
        .fold(0.0f64, f64::max);
    let bound = 1.0 + max_rest / lead;

    let mut pts = Vec::with_capacity(critical.len() + 2);
    pts.push(-bound);
    pts.extend(critical);
    pts.push(bound);

    let mut roots = Vec::new();
    for w in pts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if lo >= hi {
            continue;
        }
        let sign_lo = sign_exact(&c, lo);
        let sign_hi = sign_exact(&c, hi);
        if sign_lo == 0 {
            // A critical point that is itself a root (multiple root); record it once
            // when entering the interval from the left.
            if roots.last().is_none_or(|r| *r < lo) {
                roots.push(lo);
            }
            continue;
        }
        if sign_lo * sign_hi < 0 {
            roots.push(bisect_exact(&c, lo, hi, sign_lo));
        }
    }
    roots
}

/// All positive roots of an integer polynomial whose roots strictly interlace
/// `{0} ∪ prev_roots ∪ {+inf}`, one per bracket, found by exact-sign bisection.
///
/// Used for the ladder `q_{n+1} = p_n' - p_n`: the zeros of `p_n(t) e^-t` are `0`
/// and the roots of `q_n`, and its derivative `q_{n+1} e^-t` vanishes strictly
/// between consecutive zeros and once beyond the largest, which brackets every
/// root of `q_{n+1}`.
pub(crate) fn positive_interlaced_roots(coeffs: &[BigInt], prev_roots: &[f64]) -> Vec<f64> {
    let deg = coeffs.len() - 1;
    let lead = big_to_f64(coeffs.last().expect("nonempty")).abs();
    let max_rest = coeffs[..deg]
        .iter()
        .map(|v| big_to_f64(v).abs())
        .fold(0.0f64, f64::max);
    let bound = 1.0 + max_rest / lead;

    let mut pts = Vec::with_capacity(prev_roots.len() + 2);
    pts.push(0.0);
    pts.extend_from_slice(prev_roots);
    pts.push(bound.max(prev_roots.last().copied().unwrap_or(0.0) + 1.0));

    let mut roots = Vec::with_capacity(pts.len() - 1);
    for w in pts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let sign_lo = sign_exact(coeffs, lo);
        if sign_lo == 0 {
            roots.push(lo);
            continue;
        }
        if sign_lo * sign_exact(coeffs, hi) < 0 {
            roots.push(bisect_exact(coeffs, lo, hi, sign_lo));
        }
    }
    roots
}

/// Value of the probabilists' Hermite polynomial `He_n` by the stable three-term
/// recurrence `He_0 = 1`, `He_1 = x`, `He_{n+1} = x He_n - n He_{n-1}`.
pub(crate) fn hermite_he_eval(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, x);
    for m in 1..n {
        let next = x * cur - f64::from(m) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All `n` real roots of `He_n`, in increasing order.
pub(crate) fn hermite_he_roots(n: u32) -> Vec<f64> {
    hermite_he_root_ladder(n).pop().unwrap_or_default()
}

/// Root sets of `He_1 .. He_n` (index 0 holds the roots of `He_1`).
///
/// Built iteratively: the roots of `He_m` strictly interlace those of `He_{m+1}`,
/// so the previous level's roots plus an outer enclosure bracket every root of the
/// next level. Bisection narrows each bracket, then a few Newton steps
/// (`He_n' = n He_{n-1}`) polish to machine precision.
pub(crate) fn hermite_he_root_ladder(n: u32) -> Vec<Vec<f64>> {
    if n == 0 {
        return Vec::new();
    }
    let mut ladder = Vec::with_capacity(n as usize);
    let mut roots = vec![0.0f64];
    ladder.push(roots.clone());
    for m in 2..=n {
        let outer = 2.0 * f64::from(m).sqrt() + 1.0;
        let mut brackets = Vec::with_capacity(m as usize);
        brackets.push(-outer);
        brackets.extend(&roots);
        brackets.push(outer);
        let mut next = Vec::with_capacity(m as usize);
        for w in brackets.windows(2) {
            let (mut lo, mut hi) = (w[0], w[1]);
            let sign_lo = hermite_he_eval(m, lo).signum();
            debug_assert_ne!(
                sign_lo * hermite_he_eval(m, hi).signum(),
                1.0,
                "interlacing bracket must change sign"
            );
            for _ in 0..70 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if hermite_he_eval(m, mid).signum() == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let mut r = 0.5 * (lo + hi);
            for _ in 0..3 {
                let f = hermite_he_eval(m, r);
                let df = f64::from(m) * hermite_he_eval(m - 1, r);
                if df == 0.0 {
                    break;
                }
                let step = f / df;
                let polished = r - step;
                if polished > lo && polished < hi {
                    r = polished;
                } else {
                    break;
                }
            }
            next.push(r);
        }
        roots = next;
        ladder.push(roots.clone());
    }
    ladder
}
