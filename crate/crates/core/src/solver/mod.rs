//! Closed-form route: the critical point `φ⁰` of the formal potential, the
//! potential `Φ_W` built from it, and the identities it satisfies.

mod classes;
mod implicit;
mod verify;

pub use classes::{ClassEntry, ClassTable};
pub use implicit::{implicit_constants, implicit_spread, verify_implicit_numeric};
pub use verify::{
    ode_residuals, perturbed, potential_expansion_sides, reduced_potential_from_closed_form,
    verify_critical_value, verify_dt, verify_ode, verify_potential_expansion,
};

use crate::error::{Error, Result};
use crate::qfield::{rat_frac, RatFunc, UPoly};
use crate::series::MultiSeries;
use crate::target::{eisenstein_series_boxed, TargetSpace};

/// Output of the solver pipeline for one target and truncation.
#[derive(Clone, Debug)]
pub struct SolverResult {
    pub phi0: MultiSeries,
    pub potential: MultiSeries,
    pub target: TargetSpace,
    pub kmax: usize,
    pub dmax: Vec<usize>,
    /// Passes until the iteration became stationary.
    pub passes: usize,
}

impl SolverResult {
    pub fn classes(&self) -> Result<ClassTable> {
        ClassTable::extract(&self.target, &self.potential)
    }
}

/// Runs the full pipeline: `φ⁰`, then `Φ_W`.
pub fn solve(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<SolverResult> {
    let (phi0, passes) = iterate(w, kmax, dmax, None)?;
    let potential = potential(w, &phi0)?;
    Ok(SolverResult {
        phi0,
        potential,
        target: w.clone(),
        kmax,
        dmax: dmax.to_vec(),
        passes,
    })
}

/// The unique root `φ⁰` with zero constant term of
///
/// `E/(u(u-1)P_W) (1+t+φ)^u = u φ/(u-1) + t/(u-1) + 1/(u(u-1))`.
pub fn solve_phi0(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<MultiSeries> {
    Ok(iterate(w, kmax, dmax, None)?.0)
}

/// Same as [`solve_phi0`] but starting from `start`, which must have zero
/// constant term. Any such start converges to the same root.
pub fn solve_phi0_from(w: &TargetSpace, start: &MultiSeries) -> Result<MultiSeries> {
    if !start.constant_term().is_zero() {
        return Err(Error::NonNilpotentBase);
    }
    Ok(iterate(w, start.kmax(), start.dmax(), Some(start))?.0)
}

/// Number of passes that always suffices: each pass fixes one more total
/// order in `(t, z)`.
pub fn pass_bound(kmax: usize, dmax: &[usize]) -> usize {
    kmax + dmax.iter().sum::<usize>() + 2
}

struct FixedPointMap {
    /// `E / (u (u-1) P_W)`
    e_scaled: MultiSeries,
    t: MultiSeries,
    /// `t/(u-1) + 1/(u(u-1))`
    affine: MultiSeries,
    alpha: RatFunc,
    lin: RatFunc,
}

impl FixedPointMap {
    fn new(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<Self> {
        let u = RatFunc::u();
        let u_minus_one = &u - &RatFunc::one();
        let one_over_um1 = u_minus_one.inv()?;
        let e = eisenstein_series_boxed(w, kmax, dmax)?;
        let denom = &(&u * &u_minus_one) * &RatFunc::from_poly(w.pw().clone());
        let e_scaled = e.scale(&denom.inv()?);
        let t = MultiSeries::t(w.grading(), kmax, dmax)?;
        let c0 = (&u * &u_minus_one).inv()?;
        let affine = t
            .scale(&one_over_um1)
            .add(&MultiSeries::constant(w.grading(), kmax, dmax, c0)?)?;
        Ok(FixedPointMap {
            e_scaled,
            t,
            affine,
            alpha: u,
            lin: one_over_um1,
        })
    }

    /// `G(φ) = E/(u(u-1)P_W) (1+t+φ)^u - t/(u-1) - 1/(u(u-1))`.
    fn g(&self, phi: &MultiSeries) -> Result<MultiSeries> {
        let base = self.t.add(phi)?;
        let power = base.pow_binomial(&self.alpha)?;
        self.e_scaled.mul(&power)?.sub(&self.affine)
    }

    /// The equation reads `u φ/(u-1) = G(φ)`; the φ-linear part of `G` at
    /// order zero is `φ/(u-1)`, so `φ ↦ G(φ) - φ/(u-1)` has the root as a
    /// fixed point and its linear part vanishes at order zero.
    fn step(&self, phi: &MultiSeries) -> Result<MultiSeries> {
        self.g(phi)?.sub(&phi.scale(&self.lin))
    }

    /// `u φ/(u-1) - G(φ)`.
    fn residual(&self, phi: &MultiSeries) -> Result<MultiSeries> {
        let u = RatFunc::u();
        let c = &u * &self.lin;
        phi.scale(&c).sub(&self.g(phi)?)
    }
}

fn iterate(
    w: &TargetSpace,
    kmax: usize,
    dmax: &[usize],
    start: Option<&MultiSeries>,
) -> Result<(MultiSeries, usize)> {
    w.check_complete(dmax)?;
    let map = FixedPointMap::new(w, kmax, dmax)?;
    let mut phi = match start {
        Some(s) => s.clone(),
        None => MultiSeries::zero(w.grading(), kmax, dmax)?,
    };
    let bound = pass_bound(kmax, dmax);
    for pass in 1..=bound + 1 {
        let next = map.step(&phi)?;
        if next == phi {
            return Ok((phi, pass));
        }
        phi = next;
    }
    Err(Error::NoConvergence(bound + 1))
}

/// Residual of the fixed-point equation at `phi`; zero iff `phi` solves it
/// within the truncation.
pub fn fixed_point_residual(w: &TargetSpace, phi: &MultiSeries) -> Result<MultiSeries> {
    FixedPointMap::new(w, phi.kmax(), phi.dmax())?.residual(phi)
}

/// `Φ_W = [W] (-u/(2(u+1)) φ² + φ/(u+1) - t²/(2(u+1)))`.
pub fn potential(w: &TargetSpace, phi0: &MultiSeries) -> Result<MultiSeries> {
    let reduced = reduced_potential(phi0)?;
    Ok(reduced.scale(&RatFunc::from_poly(w.pw().clone())))
}

/// The bracket of [`potential`], i.e. `Φ_W / [W]`.
pub fn reduced_potential(phi0: &MultiSeries) -> Result<MultiSeries> {
    let u = RatFunc::u();
    let up1_inv = (&u + &RatFunc::one()).inv()?;
    let half = rat_frac(1, 2);
    let t = MultiSeries::t(phi0.grading(), phi0.kmax(), phi0.dmax())?;
    let sq = phi0.mul(phi0)?.scale(&(&u * &up1_inv).scale(&half)).neg();
    let lin = phi0.scale(&up1_inv);
    let tt = t.mul(&t)?.scale(&up1_inv.scale(&half));
    sq.add(&lin)?.sub(&tt)
}

/// Dimension `D` of `M̄_{0,k}(Pⁿ, d)` (`n = 0` for the point), the degree
/// expected of its class.
pub fn expected_dimension(n: usize, d: usize, k: usize) -> Option<usize> {
    ((n + 1) * d + n + k).checked_sub(3)
}

/// `u^D P(1/u) = P(u)` with `deg P = D`.
pub fn is_palindromic(p: &UPoly, dim: usize) -> bool {
    p.degree() == Some(dim) && p.reflect(dim).as_ref() == Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::rat;

    #[test]
    fn point_low_orders() {
        let w = TargetSpace::point();
        let phi = solve_phi0(&w, 4, &[0]).unwrap();
        assert!(phi.coeff(0, &[0]).unwrap().is_zero());
        assert!(phi.coeff(1, &[0]).unwrap().is_zero());
        assert_eq!(
            phi.coeff(2, &[0]).unwrap(),
            &RatFunc::constant(rat_frac(1, 2))
        );
        let pot = potential(&w, &phi).unwrap();
        assert!(pot.coeff(2, &[0]).unwrap().is_zero());
        assert_eq!(pot.coeff(3, &[0]).unwrap(), &RatFunc::constant(rat_frac(1, 6)));
    }

    #[test]
    fn z_linear_coefficient_is_p1_times_n() {
        for n in 1..=3 {
            let w = TargetSpace::projective_space(n).unwrap();
            let phi = solve_phi0(&w, 1, &[1]).unwrap();
            let n1 = crate::target::nclass(&w, &[1]).unwrap();
            let p1 = RatFunc::from_poly(crate::target::p1_class());
            assert_eq!(phi.coeff(0, &[1]).unwrap(), &(&p1 * &n1));
            assert!(phi.coeff(1, &[0]).unwrap().is_zero());
        }
    }

    #[test]
    fn residual_vanishes_and_passes_bounded() {
        let w = TargetSpace::projective_space(1).unwrap();
        let r = solve(&w, 4, &[2]).unwrap();
        assert!(fixed_point_residual(&w, &r.phi0).unwrap().is_zero());
        assert!(r.passes <= pass_bound(4, &[2]) + 1);
    }

    #[test]
    fn uniqueness_from_perturbed_start() {
        let w = TargetSpace::projective_space(2).unwrap();
        let phi = solve_phi0(&w, 3, &[2]).unwrap();
        let mut start = MultiSeries::zero(w.grading(), 3, &[2]).unwrap();
        start.set_coeff(1, &[0], RatFunc::from_int(7)).unwrap();
        start.set_coeff(2, &[1], RatFunc::u()).unwrap();
        start.set_coeff(0, &[2], RatFunc::constant(rat(-3))).unwrap();
        assert_eq!(solve_phi0_from(&w, &start).unwrap(), phi);
        start.set_coeff(0, &[0], RatFunc::one()).unwrap();
        assert!(solve_phi0_from(&w, &start).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(expected_dimension(0, 0, 5), Some(2));
        assert_eq!(expected_dimension(2, 1, 0), Some(2));
        assert_eq!(expected_dimension(0, 0, 2), None);
        assert!(is_palindromic(&UPoly::from_i64s(&[1, 5, 1]), 2));
        assert!(!is_palindromic(&UPoly::from_i64s(&[1, 5, 2]), 2));
    }
}
