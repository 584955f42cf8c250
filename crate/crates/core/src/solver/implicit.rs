//! Floating-point check of the implicit general solution of the differential
//! equation: with `x = t + (u+1)/u`, `y = uφ⁰ - 1`, `w = y/x`, the quantity
//!
//! `C = (w+1)^{1/(u-1)} (w+u)^{u/(1-u)} / x`
//!
//! depends on `z` only. This is an advisory check; every other verification
//! is exact.

use super::solve_phi0;
use crate::error::{Error, Result};
use crate::qfield::{bigrat_to_f64, BigRat};
use crate::series::MultiSeries;
use crate::target::TargetSpace;

/// `Σ c_{k,d} t^k z^{|d|}` at `u = u_val`, with every `z_i = z_val`.
fn eval_numeric(coeffs: &[(usize, usize, f64)], t: f64, z: f64) -> f64 {
    coeffs
        .iter()
        .map(|&(k, d, c)| c * t.powi(k as i32) * z.powi(d as i32))
        .sum()
}

/// `C` at each sample `t`, for the fixed `u_val` and `z_val`.
pub fn implicit_constants(
    phi0: &MultiSeries,
    u_val: &BigRat,
    z_val: f64,
    t_samples: &[f64],
) -> Result<Vec<f64>> {
    let u = bigrat_to_f64(u_val);
    if !(u.is_finite()) || [0.0, 1.0, -1.0].contains(&u) {
        return Err(Error::Pole(crate::qfield::format_bigrat(u_val)));
    }
    let at_u = phi0.eval_u(u_val)?;
    let coeffs: Vec<(usize, usize, f64)> = at_u
        .terms()
        .map(|(k, d, c)| {
            let v = c.as_constant().expect("evaluated coefficient");
            (k, d.iter().sum(), bigrat_to_f64(&v))
        })
        .collect();
    t_samples
        .iter()
        .map(|&t| {
            let phi = eval_numeric(&coeffs, t, z_val);
            let x = t + (u + 1.0) / u;
            let y = u * phi - 1.0;
            let w = y / x;
            if w + 1.0 <= 0.0 || w + u <= 0.0 {
                return Err(Error::Branch(format!(
                    "non-positive base under a fractional power at t = {t}"
                )));
            }
            let c = (w + 1.0).powf(1.0 / (u - 1.0)) * (w + u).powf(u / (1.0 - u)) / x;
            if !c.is_finite() {
                return Err(Error::Overflow(format!("implicit constant at t = {t}")));
            }
            Ok(c)
        })
        .collect()
}

/// `(max - min) / |mean|` over the samples.
pub fn implicit_spread(
    phi0: &MultiSeries,
    u_val: &BigRat,
    z_val: f64,
    t_samples: &[f64],
) -> Result<f64> {
    let cs = implicit_constants(phi0, u_val, z_val, t_samples)?;
    if cs.is_empty() {
        return Ok(0.0);
    }
    let max = cs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = cs.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = cs.iter().sum::<f64>() / cs.len() as f64;
    Ok((max - min) / mean.abs().max(f64::MIN_POSITIVE))
}

/// Solves for `φ⁰` and returns its [`implicit_spread`].
pub fn verify_implicit_numeric(
    w: &TargetSpace,
    kmax: usize,
    dmax: &[usize],
    u_val: &BigRat,
    z_val: f64,
    t_samples: &[f64],
) -> Result<f64> {
    let phi0 = solve_phi0(w, kmax, dmax)?;
    implicit_spread(&phi0, u_val, z_val, t_samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::rat;

    #[test]
    fn point_and_p1_spread_small() {
        let ts = [0.0, 0.005, 0.01];
        let s = verify_implicit_numeric(&TargetSpace::point(), 10, &[0], &rat(4), 0.0, &ts).unwrap();
        assert!(s <= 1e-6, "{s}");
        let p1 = TargetSpace::projective_space(1).unwrap();
        let s = verify_implicit_numeric(&p1, 10, &[6], &rat(4), 0.01, &ts).unwrap();
        assert!(s <= 1e-5, "{s}");
    }

    #[test]
    fn zero_series_has_large_spread() {
        let w = TargetSpace::point();
        let zero = MultiSeries::zero(w.grading(), 10, &[0]).unwrap();
        let s = implicit_spread(&zero, &rat(4), 0.0, &[0.0, 0.005, 0.01]).unwrap();
        assert!(s > 1e-4, "{s}");
    }

    #[test]
    fn degenerate_u_rejected() {
        let zero = MultiSeries::zero(TargetSpace::point().grading(), 2, &[0]).unwrap();
        assert!(implicit_spread(&zero, &rat(1), 0.0, &[0.0]).is_err());
    }
}
