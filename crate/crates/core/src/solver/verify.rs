//! Exact identities satisfied by `φ⁰` and `Φ_W`.

use super::{potential, reduced_potential, solve};
use crate::error::{Error, Result};
use crate::qfield::{falling_factorial, factorial, rat_frac, BigRat, RatFunc};
use crate::series::{Grading, MultiSeries};
use crate::target::{nclass, p1_class, pgl2_class, TargetSpace};

/// Residuals of the two forms of the universal differential equation:
///
/// `(1 - uφ) φ_t - (u+1) φ - t` and, with `ψ = φ + t`,
/// `(1 + ut - uψ) ψ_t - 1 - ψ`.
///
/// Both live in the box with `kmax - 1`; `kmax = 0` leaves no room for the
/// derivative and is rejected.
pub fn ode_residuals(phi0: &MultiSeries) -> Result<(MultiSeries, MultiSeries)> {
    if phi0.kmax() == 0 {
        return Err(Error::BeyondTruncation {
            k: 1,
            d: vec![0; phi0.dmax().len()],
        });
    }
    let g = phi0.grading();
    let (kmax, dmax) = (phi0.kmax() - 1, phi0.dmax());
    let u = RatFunc::u();
    let one = MultiSeries::one(g, kmax, dmax)?;
    let t = MultiSeries::t(g, kmax, dmax)?;
    let phi = phi0.truncate(kmax, dmax)?;
    let phi_t = phi0.dt();

    let up1 = &u + &RatFunc::one();
    let r1 = one
        .sub(&phi.scale(&u))?
        .mul(&phi_t)?
        .sub(&phi.scale(&up1))?
        .sub(&t)?;

    let psi = phi.add(&t)?;
    let psi_t = phi_t.add(&one)?;
    let r2 = one
        .add(&t.scale(&u))?
        .sub(&psi.scale(&u))?
        .mul(&psi_t)?
        .sub(&one)?
        .sub(&psi)?;
    Ok((r1, r2))
}

pub fn verify_ode(phi0: &MultiSeries) -> Result<bool> {
    let (r1, r2) = ode_residuals(phi0)?;
    Ok(r1.is_zero() && r2.is_zero())
}

/// `∂_t Φ_W / [W] = φ⁰` within the truncation.
pub fn verify_dt(pot: &MultiSeries, phi0: &MultiSeries, w: &TargetSpace) -> Result<bool> {
    let pw_inv = RatFunc::from_poly(w.pw().clone()).inv()?;
    let lhs = pot.dt().scale(&pw_inv);
    let rhs = phi0.truncate(lhs.kmax(), lhs.dmax())?;
    Ok(lhs.kmax() == rhs.kmax() && lhs == rhs)
}

/// Grading with an extra trailing component standing for `φ`.
fn extended(w: &TargetSpace) -> Result<Grading> {
    let mut names = w.grading().names().to_vec();
    names.push("phi".into());
    Grading::named(names)
}

/// `E(W, z) / ([PGL(2)] [W])` coefficient at `β`.
fn e_normalized(w: &TargetSpace, beta: &[usize]) -> Result<RatFunc> {
    let denom = RatFunc::from_poly(&pgl2_class() * w.pw());
    w.map_class(beta)?.checked_div(&denom)
}

/// The formal potential `S(φ)` computed two ways, as series in
/// `(t, z, φ)` with `φ` up to degree `nmax`:
///
/// * term by term from `S = -φ²/2 + Σ C_n φⁿ/n!`, where `C_n` carries the
///   unstable corrections `ε_n`;
/// * from the closed form `E/([PGL(2)][W]) (1+t+φ)^{u+1}` minus its explicit
///   quadratic, linear and constant corrections in `φ`.
pub fn potential_expansion_sides(
    w: &TargetSpace,
    nmax: usize,
    kmax: usize,
    dmax: &[usize],
) -> Result<(MultiSeries, MultiSeries)> {
    w.check_complete(dmax)?;
    let g = extended(w)?;
    let mut box_d = dmax.to_vec();
    box_d.push(nmax);
    let p1 = RatFunc::from_poly(p1_class());
    let n0 = nclass(w, &vec![0; dmax.len()])?;

    let mut direct = MultiSeries::zero(&g, kmax, &box_d)?;
    let cells: Vec<(usize, Vec<usize>)> = direct.cells().map(|(k, d, _)| (k, d)).collect();
    for (k, d) in cells {
        let (beta, n) = d.split_at(dmax.len());
        let n = n[0];
        let weight = BigRat::new(1.into(), factorial(k) * factorial(n));
        let ff = falling_factorial(&p1, n + k);
        let mut c = &e_normalized(w, beta)? * &ff;
        if beta.iter().all(|&b| b == 0) && n + k <= 2 {
            c = &c - &(&n0 * &ff);
        }
        let mut c = c.scale(&weight);
        if n == 2 && k == 0 && beta.iter().all(|&b| b == 0) {
            c = &c - &RatFunc::constant(rat_frac(1, 2));
        }
        direct.set_coeff(k, &d, c)?;
    }

    let mut phi_dir = vec![0; dmax.len()];
    phi_dir.push(1);
    let phi = MultiSeries::monomial(&g, kmax, &box_d, 0, &phi_dir, RatFunc::one())?;
    let e = MultiSeries::from_fn(&g, kmax, &box_d, |k, d| {
        let (beta, n) = d.split_at(dmax.len());
        if k == 0 && n[0] == 0 {
            e_normalized(w, beta).expect("target checked complete")
        } else {
            RatFunc::zero()
        }
    })?;
    let closed = closed_form(&g, kmax, &box_d, &e, &phi)?;
    Ok((direct, closed))
}

/// `S(φ)` from the closed form, for `φ` any series with zero constant term
/// in the box of `e`.
fn closed_form(
    g: &Grading,
    kmax: usize,
    dmax: &[usize],
    e: &MultiSeries,
    phi: &MultiSeries,
) -> Result<MultiSeries> {
    let u = RatFunc::u();
    let one = RatFunc::one();
    let um1 = &u - &one;
    let up1 = &u + &one;
    let t = MultiSeries::t(g, kmax, dmax)?;
    let half = rat_frac(1, 2);

    let main = e.mul(&t.add(phi)?.pow_binomial(&up1)?)?;
    let quad = phi.mul(phi)?.scale(&(&u * &um1.inv()?).scale(&half));
    let lin_coeff = MultiSeries::constant(g, kmax, dmax, (&u * &um1).inv()?)?
        .add(&t.scale(&um1.inv()?))?;
    let lin = phi.mul(&lin_coeff)?;
    let c0 = MultiSeries::constant(g, kmax, dmax, (&(&up1 * &u) * &um1).inv()?)?;
    let c1 = t.scale(&(&u * &um1).inv()?);
    let c2 = t.mul(&t)?.scale(&um1.inv()?.scale(&half));
    main.sub(&quad)?.sub(&lin)?.sub(&c0)?.sub(&c1)?.sub(&c2)
}

/// The two sides of [`potential_expansion_sides`] agree exactly.
pub fn verify_potential_expansion(
    w: &TargetSpace,
    nmax: usize,
    kmax: usize,
    dmax: &[usize],
) -> Result<bool> {
    if nmax < 2 {
        return Err(Error::GradingMismatch("nmax must be at least 2".into()));
    }
    let (a, b) = potential_expansion_sides(w, nmax, kmax, dmax)?;
    Ok(a == b)
}

/// `S(φ⁰)` evaluated through the closed form, to be compared with the
/// reduced potential `Φ_W / [W]`.
pub fn reduced_potential_from_closed_form(
    w: &TargetSpace,
    phi0: &MultiSeries,
) -> Result<MultiSeries> {
    let (kmax, dmax) = (phi0.kmax(), phi0.dmax());
    w.check_complete(dmax)?;
    let e = MultiSeries::from_fn(w.grading(), kmax, dmax, |k, d| {
        if k == 0 {
            e_normalized(w, d).expect("target checked complete")
        } else {
            RatFunc::zero()
        }
    })?;
    closed_form(w.grading(), kmax, dmax, &e, phi0)
}

/// The critical value of `S` equals `Φ_W / [W]`, and `Φ_W` is consistent
/// with the potential rebuilt from the solver.
pub fn verify_critical_value(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<bool> {
    let r = solve(w, kmax, dmax)?;
    let crit = reduced_potential_from_closed_form(w, &r.phi0)?;
    Ok(crit == reduced_potential(&r.phi0)? && potential(w, &r.phi0)? == r.potential)
}

/// `s` with `delta` added to one coefficient; used for negative controls.
pub fn perturbed(s: &MultiSeries, k: usize, d: &[usize], delta: &RatFunc) -> Result<MultiSeries> {
    let mut out = s.clone();
    let c = s.coeff(k, d)? + delta;
    out.set_coeff(k, d, c)?;
    Ok(out)
}
