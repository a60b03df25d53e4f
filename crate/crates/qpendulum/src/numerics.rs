//! Adaptive quadrature and bracketed root finding.

use crate::error::{Error, Result};

/// Integrates `f` over `[a, b]` by adaptive Simpson subdivision.
///
/// `tol` is an absolute tolerance on the whole interval. The interval is
/// pre-split into an odd number of panels so integrands with symmetric nodes
/// (oscillator densities, even/odd wavefunctions) cannot alias the rule.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    const PANELS: usize = 81;
    let h = (b - a) / PANELS as f64;
    let panel_tol = tol / PANELS as f64;
    let mut total = 0.0;
    for i in 0..PANELS {
        let lo = a + i as f64 * h;
        let hi = if i == PANELS - 1 { b } else { lo + h };
        let flo = f(lo);
        let fmid = f(0.5 * (lo + hi));
        let fhi = f(hi);
        let whole = simpson(lo, hi, flo, fmid, fhi);
        total += adaptive(f, lo, hi, flo, fmid, fhi, whole, panel_tol, 48);
    }
    total
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        // Richardson extrapolation of the two half-panel estimates.
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Bisection root finding on `[lo, hi]` to relative tolerance `rel_tol`.
///
/// Requires `f(lo)` and `f(hi)` to straddle zero; fails with
/// [`Error::NoSignChange`] otherwise.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, rel_tol: f64) -> Result<f64> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::invalid(format!(
            "bisection bracket must be finite with lo < hi, got [{lo:e}, {hi:e}]"
        )));
    }
    let mut lo = lo;
    let mut hi = hi;
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut flo = flo;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn integrates_gaussian() {
        let v = integrate(&|x: f64| (-x * x).exp(), -12.0, 12.0, 1e-12);
        assert_relative_eq!(v, PI.sqrt(), max_relative = 1e-11);
    }

    #[test]
    fn integrates_oscillatory() {
        // 20 full periods of cos^2 over [0, 20*pi]: exact value 10*pi.
        let v = integrate(&|x: f64| x.cos().powi(2), 0.0, 20.0 * PI, 1e-10);
        assert_relative_eq!(v, 10.0 * PI, max_relative = 1e-9);
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(&|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert_relative_eq!(r, 2f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        match bisect(&|x| x * x + 1.0, -1.0, 1.0, 1e-12) {
            Err(Error::NoSignChange { .. }) => {}
            other => panic!("expected NoSignChange, got {other:?}"),
        }
    }
}
