//! The `u → 1` limit: Euler characteristics of the moduli spaces from a
//! transcendental equation over `Q[[t, z]]`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qfield::{factorial, rat, rat_frac, BigRat, RatFunc};
use crate::series::MultiSeries;
use crate::solver::solve;
use crate::target::TargetSpace;

/// A series whose coefficients are all rational constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiSeries(MultiSeries);

impl ChiSeries {
    pub fn new(s: MultiSeries) -> Result<Self> {
        if let Some((k, d, c)) = s.terms().find(|(_, _, c)| c.as_constant().is_none()) {
            return Err(Error::GradingMismatch(format!(
                "coefficient ({k}, {d:?}) = {c} is not a constant"
            )));
        }
        Ok(ChiSeries(s))
    }

    pub fn series(&self) -> &MultiSeries {
        &self.0
    }

    pub fn into_series(self) -> MultiSeries {
        self.0
    }

    pub fn coeff(&self, k: usize, d: &[usize]) -> Result<BigRat> {
        Ok(self.0.coeff(k, d)?.as_constant().expect("constant coefficients"))
    }
}

/// `X = (E/P_W - 1)/(u - 1)` at `u = 1`, placed in a box with room for `t`
/// up to `kmax` (it has no `t` dependence).
///
/// Each `z^β` coefficient is the first-order Taylor coefficient at `u = 1`
/// of `[Map_β]/P_W`, which must vanish there.
pub fn xseries(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<ChiSeries> {
    w.check_complete(dmax)?;
    let pw = RatFunc::from_poly(w.pw().clone());
    let mut x = MultiSeries::zero(w.grading(), kmax, dmax)?;
    let betas: Vec<Vec<usize>> = x.cells().filter(|(k, _, _)| *k == 0).map(|(_, d, _)| d).collect();
    for beta in betas {
        if beta.iter().all(|&b| b == 0) {
            continue;
        }
        let ratio = w.map_class(&beta)?.checked_div(&pw)?;
        let taylor = ratio.expand_at_one(1)?;
        if !taylor[0].is_zero() {
            return Err(Error::EulerLimitDiverges(beta));
        }
        x.set_coeff(0, &beta, RatFunc::constant(taylor[1].clone()))?;
    }
    ChiSeries::new(x)
}

/// `(1+t+φ) log(1+t+φ) - 2φ - t + X (1+t+φ)`, zero at the solution.
pub fn chi_residual(phi: &MultiSeries, x: &ChiSeries) -> Result<MultiSeries> {
    let g = phi.grading();
    let (kmax, dmax) = (phi.kmax(), phi.dmax());
    let t = MultiSeries::t(g, kmax, dmax)?;
    let base = t.add(phi)?;
    let one_plus = base.add(&MultiSeries::one(g, kmax, dmax)?)?;
    let xlog = one_plus.mul(&base.log1p()?)?;
    xlog.sub(&phi.scale_rat(&rat(2)))?
        .sub(&t)?
        .add(&x.series().mul(&one_plus)?)
}

/// Unique solution with zero constant term of
/// `(1+t+φ) log(1+t+φ) = 2φ + t - X (1+t+φ)`, solved one total order at a
/// time.
///
/// The residual is `-φ` plus terms that are quadratic in `φ` or carry a
/// positive power of `z` through `X`, so its order-`m` part is `-φ_m`
/// plus data from orders below `m`.
pub fn solve_phi0_chi(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<ChiSeries> {
    let x = xseries(w, kmax, dmax)?;
    solve_phi0_chi_with(&x)
}

/// As [`solve_phi0_chi`] with an explicit `X`.
pub fn solve_phi0_chi_with(x: &ChiSeries) -> Result<ChiSeries> {
    let xs = x.series();
    let mut phi = MultiSeries::zero(xs.grading(), xs.kmax(), xs.dmax())?;
    for m in 1..=xs.max_order() {
        let r = chi_residual(&phi, x)?;
        let cells: Vec<(usize, Vec<usize>)> = phi
            .cells()
            .filter(|(k, d, _)| k + d.iter().sum::<usize>() == m)
            .map(|(k, d, _)| (k, d))
            .collect();
        for (k, d) in cells {
            let c = phi.coeff(k, &d)? + r.coeff(k, &d)?;
            phi.set_coeff(k, &d, c)?;
        }
    }
    debug_assert!(chi_residual(&phi, x)?.is_zero());
    ChiSeries::new(phi)
}

/// `χ(W)` = `P_W(1)`.
pub fn chi_of_target(w: &TargetSpace) -> BigRat {
    w.pw().eval(&rat(1))
}

/// `Φ_χ = χ(W) (-φ²/4 + φ/2 - t²/4)`.
pub fn chi_potential(w: &TargetSpace, phi: &ChiSeries) -> Result<ChiSeries> {
    let p = phi.series();
    let t = MultiSeries::t(p.grading(), p.kmax(), p.dmax())?;
    let quarter = rat_frac(1, 4);
    let s = p
        .mul(p)?
        .scale_rat(&-quarter.clone())
        .add(&p.scale_rat(&rat_frac(1, 2)))?
        .sub(&t.mul(&t)?.scale_rat(&quarter))?;
    ChiSeries::new(s.scale_rat(&chi_of_target(w)))
}

/// `k!` times each coefficient of the χ-potential: the Euler
/// characteristic table, in the cell order of the series.
pub fn chi_table(pot: &ChiSeries) -> Result<Vec<(usize, Vec<usize>, BigRat)>> {
    let mut rows: Vec<(usize, Vec<usize>, BigRat)> = pot
        .series()
        .cells()
        .map(|(k, d, c)| {
            let v = c.as_constant().expect("constant coefficients");
            (k, d, v * BigRat::from_integer(factorial(k)))
        })
        .collect();
    rows.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    Ok(rows)
}

/// Compares every solver class at `u = 1` with the χ-potential built from
/// `x`.
pub fn crosscheck_chi_with(
    w: &TargetSpace,
    kmax: usize,
    dmax: &[usize],
    x: &ChiSeries,
) -> Result<bool> {
    let table = solve(w, kmax, dmax)?.classes()?;
    let phi = solve_phi0_chi_with(x)?;
    let chi = chi_table(&chi_potential(w, &phi)?)?;
    if chi.len() != table.entries.len() {
        return Ok(false);
    }
    Ok(table
        .entries
        .iter()
        .zip(&chi)
        .all(|(e, (k, d, v))| e.k == *k && &e.beta == d && &e.chi() == v))
}

/// [`crosscheck_chi_with`] for the `X` of the target.
pub fn crosscheck_chi(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<bool> {
    let x = xseries(w, kmax, dmax)?;
    crosscheck_chi_with(w, kmax, dmax, &x)
}
