//! Truncated formal power series in `t` and a multigraded `z = (z_1..z_r)`
//! with coefficients in `Q(u)`.
//!
//! A series carries its truncation box `k <= kmax`, `d <= dmax`
//! (componentwise). Every coefficient inside the box is exact; nothing
//! outside the box is represented. Products truncate to the intersection of
//! the input boxes.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qfield::{rat, rat_frac, BigRat, RatFunc};

/// Labels of the `z` components. Only the rank matters for arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    names: Vec<String>,
}

impl Grading {
    /// Grading with components named `z1..zr`.
    pub fn new(rank: usize) -> Result<Self> {
        Self::named((1..=rank).map(|i| format!("z{i}")).collect())
    }

    pub fn named(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::GradingMismatch("grading rank must be at least 1".into()));
        }
        Ok(Grading { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A truncated series `Σ c(k, d) t^k z^d`.
///
/// Coefficients are stored densely over the truncation box, ordered with
/// `k` varying fastest, then `d_1`, `d_2`, ...
#[derive(Clone)]
pub struct MultiSeries {
    grading: Grading,
    kmax: usize,
    dmax: Vec<usize>,
    coeffs: Vec<RatFunc>,
}

impl PartialEq for MultiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.grading.rank() == other.grading.rank()
            && self.kmax == other.kmax
            && self.dmax == other.dmax
            && self.coeffs == other.coeffs
    }
}

impl Eq for MultiSeries {}

fn box_len(kmax: usize, dmax: &[usize]) -> usize {
    dmax.iter().fold(kmax + 1, |acc, &d| acc * (d + 1))
}

impl MultiSeries {
    pub fn zero(grading: &Grading, kmax: usize, dmax: &[usize]) -> Result<Self> {
        if dmax.len() != grading.rank() {
            return Err(Error::GradingMismatch(format!(
                "dmax has {} components but the grading has rank {}",
                dmax.len(),
                grading.rank()
            )));
        }
        Ok(MultiSeries {
            grading: grading.clone(),
            kmax,
            dmax: dmax.to_vec(),
            coeffs: vec![RatFunc::zero(); box_len(kmax, dmax)],
        })
    }

    /// Constant series `c`.
    pub fn constant(grading: &Grading, kmax: usize, dmax: &[usize], c: RatFunc) -> Result<Self> {
        let mut s = Self::zero(grading, kmax, dmax)?;
        s.coeffs[0] = c;
        Ok(s)
    }

    pub fn one(grading: &Grading, kmax: usize, dmax: &[usize]) -> Result<Self> {
        Self::constant(grading, kmax, dmax, RatFunc::one())
    }

    /// `c t^k z^d`; zero if the monomial lies outside the box.
    pub fn monomial(
        grading: &Grading,
        kmax: usize,
        dmax: &[usize],
        k: usize,
        d: &[usize],
        c: RatFunc,
    ) -> Result<Self> {
        let mut s = Self::zero(grading, kmax, dmax)?;
        if s.in_box(k, d) {
            let i = s.index(k, d);
            s.coeffs[i] = c;
        }
        Ok(s)
    }

    /// The series `t`.
    pub fn t(grading: &Grading, kmax: usize, dmax: &[usize]) -> Result<Self> {
        let zero_d = vec![0; grading.rank()];
        Self::monomial(grading, kmax, dmax, 1, &zero_d, RatFunc::one())
    }

    /// The series `z_i` (0-based component index).
    pub fn z(grading: &Grading, kmax: usize, dmax: &[usize], i: usize) -> Result<Self> {
        let mut d = vec![0; grading.rank()];
        if i >= d.len() {
            return Err(Error::GradingMismatch(format!("no z component {i}")));
        }
        d[i] = 1;
        Self::monomial(grading, kmax, dmax, 0, &d, RatFunc::one())
    }

    /// Builds a series by evaluating `f` on every cell of the box.
    pub fn from_fn<F>(grading: &Grading, kmax: usize, dmax: &[usize], f: F) -> Result<Self>
    where
        F: Fn(usize, &[usize]) -> RatFunc,
    {
        let mut s = Self::zero(grading, kmax, dmax)?;
        for idx in 0..s.coeffs.len() {
            let (k, d) = s.coords(idx);
            s.coeffs[idx] = f(k, &d);
        }
        Ok(s)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn dmax(&self) -> &[usize] {
        &self.dmax
    }

    /// Largest total order `k + |d|` inside the box.
    pub fn max_order(&self) -> usize {
        self.kmax + self.dmax.iter().sum::<usize>()
    }

    pub fn in_box(&self, k: usize, d: &[usize]) -> bool {
        k <= self.kmax && d.len() == self.dmax.len() && d.iter().zip(&self.dmax).all(|(a, b)| a <= b)
    }

    fn index(&self, k: usize, d: &[usize]) -> usize {
        let mut idx = 0;
        for (di, dm) in d.iter().zip(&self.dmax).rev() {
            idx = idx * (dm + 1) + di;
        }
        idx * (self.kmax + 1) + k
    }

    fn coords(&self, mut idx: usize) -> (usize, Vec<usize>) {
        let k = idx % (self.kmax + 1);
        idx /= self.kmax + 1;
        let d = self
            .dmax
            .iter()
            .map(|dm| {
                let di = idx % (dm + 1);
                idx /= dm + 1;
                di
            })
            .collect();
        (k, d)
    }

    /// Coefficient of `t^k z^d`.
    pub fn coeff(&self, k: usize, d: &[usize]) -> Result<&RatFunc> {
        if !self.in_box(k, d) {
            return Err(Error::BeyondTruncation { k, d: d.to_vec() });
        }
        Ok(&self.coeffs[self.index(k, d)])
    }

    pub fn set_coeff(&mut self, k: usize, d: &[usize], c: RatFunc) -> Result<()> {
        if !self.in_box(k, d) {
            return Err(Error::BeyondTruncation { k, d: d.to_vec() });
        }
        let i = self.index(k, d);
        self.coeffs[i] = c;
        Ok(())
    }

    pub fn constant_term(&self) -> &RatFunc {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    /// All cells of the box in storage order, zero or not.
    pub fn cells(&self) -> impl Iterator<Item = (usize, Vec<usize>, &RatFunc)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, c)| {
            let (k, d) = self.coords(i);
            (k, d, c)
        })
    }

    /// Nonzero terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Vec<usize>, &RatFunc)> + '_ {
        self.cells().filter(|(_, _, c)| !c.is_zero())
    }

    pub fn map_coeffs<F>(&self, f: F) -> Self
    where
        F: Fn(&RatFunc) -> RatFunc,
    {
        MultiSeries {
            grading: self.grading.clone(),
            kmax: self.kmax,
            dmax: self.dmax.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map_coeffs<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&RatFunc) -> Result<RatFunc>,
    {
        Ok(MultiSeries {
            grading: self.grading.clone(),
            kmax: self.kmax,
            dmax: self.dmax.clone(),
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn scale_rat(&self, c: &BigRat) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    /// Restricts to a smaller box.
    pub fn truncate(&self, kmax: usize, dmax: &[usize]) -> Result<Self> {
        if dmax.len() != self.dmax.len() {
            return Err(Error::GradingMismatch("rank mismatch in truncate".into()));
        }
        let kmax = kmax.min(self.kmax);
        let dmax: Vec<usize> = dmax.iter().zip(&self.dmax).map(|(a, b)| *a.min(b)).collect();
        let mut out = Self::zero(&self.grading, kmax, &dmax)?;
        for idx in 0..out.coeffs.len() {
            let (k, d) = out.coords(idx);
            out.coeffs[idx] = self.coeffs[self.index(k, &d)].clone();
        }
        Ok(out)
    }

    fn common_box(&self, other: &Self) -> Result<(usize, Vec<usize>)> {
        if self.grading.rank() != other.grading.rank() {
            return Err(Error::GradingMismatch(format!(
                "rank {} vs rank {}",
                self.grading.rank(),
                other.grading.rank()
            )));
        }
        let kmax = self.kmax.min(other.kmax);
        let dmax = self.dmax.iter().zip(&other.dmax).map(|(a, b)| *a.min(b)).collect();
        Ok((kmax, dmax))
    }

    fn zip_with<F>(&self, other: &Self, f: F) -> Result<Self>
    where
        F: Fn(&RatFunc, &RatFunc) -> RatFunc,
    {
        let (kmax, dmax) = self.common_box(other)?;
        let mut out = Self::zero(&self.grading, kmax, &dmax)?;
        for idx in 0..out.coeffs.len() {
            let (k, d) = out.coords(idx);
            out.coeffs[idx] = f(
                &self.coeffs[self.index(k, &d)],
                &other.coeffs[other.index(k, &d)],
            );
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|a| -a)
    }

    /// Truncated product (full convolution inside the common box).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (kmax, dmax) = self.common_box(other)?;
        let mut out = Self::zero(&self.grading, kmax, &dmax)?;
        let left: Vec<(usize, Vec<usize>, &RatFunc)> = self
            .terms()
            .filter(|(k, d, _)| out.in_box(*k, d))
            .collect();
        if left.is_empty() || other.is_zero() {
            return Ok(out);
        }
        let cells: Vec<(usize, Vec<usize>)> = (0..out.coeffs.len()).map(|i| out.coords(i)).collect();
        out.coeffs = cells
            .par_iter()
            .map(|(k, d)| {
                let mut acc = RatFunc::zero();
                let mut rest = vec![0; d.len()];
                for (i, e, a) in &left {
                    if i > k || e.iter().zip(d).any(|(x, y)| x > y) {
                        continue;
                    }
                    for (r, (x, y)) in rest.iter_mut().zip(e.iter().zip(d)) {
                        *r = y - x;
                    }
                    let b = &other.coeffs[other.index(k - i, &rest)];
                    if !b.is_zero() {
                        acc = &acc + &(*a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::one(&self.grading, self.kmax, &self.dmax)?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn require_nilpotent(&self) -> Result<()> {
        if self.constant_term().is_zero() {
            Ok(())
        } else {
            Err(Error::NonNilpotentBase)
        }
    }

    /// Sums `Σ_{j>=0} w_j g^j` for a nilpotent `g = self`, stopping once the
    /// powers vanish in the box.
    fn nilpotent_sum<F>(&self, weight: F) -> Result<Self>
    where
        F: Fn(usize) -> RatFunc,
    {
        self.require_nilpotent()?;
        let mut result = Self::zero(&self.grading, self.kmax, &self.dmax)?;
        let mut power = Self::one(&self.grading, self.kmax, &self.dmax)?;
        for j in 0..=self.max_order() {
            if j > 0 {
                power = power.mul(self)?;
            }
            if power.is_zero() {
                break;
            }
            let w = weight(j);
            if !w.is_zero() {
                result = result.add(&power.scale(&w))?;
            }
        }
        Ok(result)
    }

    /// `(1 + g)^α = Σ C(α, j) g^j` for `g = self` with zero constant term.
    pub fn pow_binomial(&self, alpha: &RatFunc) -> Result<Self> {
        let binoms = binomials(alpha, self.max_order());
        self.nilpotent_sum(|j| binoms[j].clone())
    }

    /// `log(1 + g) = Σ_{j>=1} (-1)^{j+1} g^j / j`.
    pub fn log1p(&self) -> Result<Self> {
        self.nilpotent_sum(|j| match j {
            0 => RatFunc::zero(),
            _ => {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                RatFunc::constant(BigRat::new(sign.into(), (j as i64).into()))
            }
        })
    }

    /// `exp(g) = Σ g^j / j!` for `g` with zero constant term.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        self.nilpotent_sum(|j| {
            let f = crate::qfield::factorial(j);
            RatFunc::constant(BigRat::from_integer(f).recip())
        })
    }

    /// Formal `∂/∂t`. The result box has `kmax - 1` (a series known only at
    /// `t^0` has an empty derivative, returned as zero with `kmax = 0`).
    pub fn dt(&self) -> Self {
        let kmax = self.kmax.saturating_sub(1);
        let mut out = Self::zero(&self.grading, kmax, &self.dmax).expect("same grading");
        if self.kmax == 0 {
            return out;
        }
        for idx in 0..out.coeffs.len() {
            let (k, d) = out.coords(idx);
            let c = &self.coeffs[self.index(k + 1, &d)];
            if !c.is_zero() {
                out.coeffs[idx] = c.scale(&rat(k as i64 + 1));
            }
        }
        out
    }

    /// Replaces every coefficient by its value in `Q` at `u = s`.
    pub fn eval_u(&self, s: &BigRat) -> Result<Self> {
        self.try_map_coeffs(|c| c.eval_at(s).map(RatFunc::constant))
    }
}

/// `C(α, j)` for `j = 0..=n`, built incrementally.
fn binomials(alpha: &RatFunc, n: usize) -> Vec<RatFunc> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = RatFunc::one();
    out.push(c.clone());
    for j in 1..=n {
        let shifted = alpha - &RatFunc::from_int(j as i64 - 1);
        c = (&c * &shifted).scale(&rat_frac(1, j as i64));
        out.push(c.clone());
    }
    out
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries[kmax={}, dmax={:?}](", self.kmax, self.dmax)?;
        let mut first = true;
        for (k, d, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) t^{k} z^{d:?}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    k: usize,
    d: Vec<usize>,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    kmax: usize,
    dmax: Vec<usize>,
    terms: Vec<TermRepr>,
}

/// Upper bound on the number of cells accepted when decoding a series.
const MAX_DECODED_CELLS: usize = 1 << 22;

impl Serialize for MultiSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = SeriesRepr {
            kmax: self.kmax,
            dmax: self.dmax.clone(),
            terms: self
                .terms()
                .map(|(k, d, c)| TermRepr { k, d, coeff: c.clone() })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiSeries {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(de)?;
        MultiSeries::from_repr(repr).map_err(D::Error::custom)
    }
}

impl MultiSeries {
    fn from_repr(repr: SeriesRepr) -> Result<Self> {
        let cells = repr
            .dmax
            .iter()
            .try_fold(repr.kmax.checked_add(1), |acc, &d| {
                Some(acc?.checked_mul(d.checked_add(1)?))
            })
            .flatten();
        match cells {
            Some(n) if n <= MAX_DECODED_CELLS => {}
            _ => return Err(Error::Parse("truncation box too large".into())),
        }
        let grading = Grading::new(repr.dmax.len()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut s = Self::zero(&grading, repr.kmax, &repr.dmax)?;
        let mut seen = vec![false; s.coeffs.len()];
        for t in repr.terms {
            if !s.in_box(t.k, &t.d) {
                return Err(Error::Parse(format!("term ({}, {:?}) outside the box", t.k, t.d)));
            }
            let i = s.index(t.k, &t.d);
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("duplicate term ({}, {:?})", t.k, t.d)));
            }
            s.coeffs[i] = t.coeff;
        }
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{binom_falling, UPoly};

    fn g1() -> Grading {
        Grading::new(1).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let g = g1();
        let one = MultiSeries::one(&g, 2, &[0]).unwrap();
        let t = MultiSeries::t(&g, 2, &[0]).unwrap();
        let p = one.add(&t).unwrap().mul(&one.sub(&t).unwrap()).unwrap();
        assert!(p.coeff(0, &[0]).unwrap().is_one());
        assert!(p.coeff(1, &[0]).unwrap().is_zero());
        assert_eq!(p.coeff(2, &[0]).unwrap(), &RatFunc::from_int(-1));
    }

    #[test]
    fn t_times_z() {
        let g = g1();
        let t = MultiSeries::t(&g, 3, &[2]).unwrap();
        let z = MultiSeries::z(&g, 3, &[2], 0).unwrap();
        let p = t.mul(&z).unwrap();
        assert_eq!(p.terms().count(), 1);
        assert!(p.coeff(1, &[1]).unwrap().is_one());
    }

    #[test]
    fn coeff_extraction() {
        let g = g1();
        let mut s = MultiSeries::one(&g, 2, &[2]).unwrap();
        s.set_coeff(1, &[1], RatFunc::from_int(3)).unwrap();
        assert_eq!(s.coeff(1, &[1]).unwrap(), &RatFunc::from_int(3));
        assert!(s.coeff(2, &[2]).unwrap().is_zero());
        assert_eq!(
            s.coeff(3, &[0]),
            Err(Error::BeyondTruncation { k: 3, d: vec![0] })
        );
        let t = MultiSeries::t(&g, 2, &[2]).unwrap();
        assert!(t.coeff(0, &[0]).unwrap().is_zero());
    }

    #[test]
    fn grading_mismatch_is_an_error() {
        let a = MultiSeries::one(&g1(), 1, &[1]).unwrap();
        let b = MultiSeries::one(&Grading::new(2).unwrap(), 1, &[1, 1]).unwrap();
        assert!(matches!(a.add(&b), Err(Error::GradingMismatch(_))));
        assert!(matches!(a.mul(&b), Err(Error::GradingMismatch(_))));
    }

    #[test]
    fn binomial_power_examples() {
        let g = g1();
        let t = MultiSeries::t(&g, 4, &[0]).unwrap();
        let sq = t.pow_binomial(&RatFunc::from_int(2)).unwrap();
        let expect = [1, 2, 1, 0, 0];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(sq.coeff(k, &[0]).unwrap(), &RatFunc::from_int(*e));
        }
        let u = RatFunc::u();
        let pu = t.pow_binomial(&u).unwrap();
        for k in 0..=4 {
            assert_eq!(pu.coeff(k, &[0]).unwrap(), &binom_falling(&u, k));
        }
        // ((1+t)^u)^(1/u) = 1 + t
        let inner = pu.sub(&MultiSeries::one(&g, 4, &[0]).unwrap()).unwrap();
        let back = inner.pow_binomial(&u.inv().unwrap()).unwrap();
        let one_plus_t = MultiSeries::one(&g, 4, &[0]).unwrap().add(&t).unwrap();
        assert_eq!(back, one_plus_t);
    }

    #[test]
    fn binomial_power_rejects_constant_term() {
        let one = MultiSeries::one(&g1(), 2, &[0]).unwrap();
        assert_eq!(one.pow_binomial(&RatFunc::u()), Err(Error::NonNilpotentBase));
        assert_eq!(one.log1p(), Err(Error::NonNilpotentBase));
    }

    #[test]
    fn mercator_series() {
        let g = g1();
        let t = MultiSeries::t(&g, 5, &[0]).unwrap();
        let l = t.log1p().unwrap();
        assert!(l.coeff(0, &[0]).unwrap().is_zero());
        for k in 1..=5i64 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(
                l.coeff(k as usize, &[0]).unwrap(),
                &RatFunc::constant(rat_frac(sign, k))
            );
        }
        assert!(MultiSeries::zero(&g, 5, &[0]).unwrap().log1p().unwrap().is_zero());
    }

    #[test]
    fn derivative_examples() {
        let g = g1();
        let t = MultiSeries::t(&g, 3, &[1]).unwrap();
        let t2 = t.mul(&t).unwrap();
        let d = t2.dt();
        assert_eq!(d.kmax(), 2);
        assert_eq!(d.coeff(1, &[0]).unwrap(), &RatFunc::from_int(2));
        assert_eq!(d.terms().count(), 1);
        assert!(MultiSeries::z(&g, 3, &[1], 0).unwrap().dt().is_zero());

        // d/dt (1+t)^u = u (1+t)^(u-1)
        let u = RatFunc::u();
        let lhs = t.pow_binomial(&u).unwrap().dt();
        let rhs = t
            .pow_binomial(&(&u - &RatFunc::one()))
            .unwrap()
            .scale(&u)
            .truncate(2, &[1])
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip_and_rejections() {
        let g = g1();
        let mut s = MultiSeries::zero(&g, 2, &[1]).unwrap();
        s.set_coeff(1, &[1], RatFunc::new(UPoly::one(), UPoly::u()).unwrap()).unwrap();
        let js = s.to_json();
        assert_eq!(
            js,
            r#"{"kmax":2,"dmax":[1],"terms":[{"k":1,"d":[1],"coeff":{"num":["1"],"den":["0","1"]}}]}"#
        );
        assert_eq!(MultiSeries::from_json(&js).unwrap(), s);
        assert!(MultiSeries::from_json(r#"{"kmax":1,"dmax":[],"terms":[]}"#).is_err());
        assert!(MultiSeries::from_json(
            r#"{"kmax":1,"dmax":[1],"terms":[{"k":2,"d":[0],"coeff":{"num":["1"],"den":["1"]}}]}"#
        )
        .is_err());
        assert!(MultiSeries::from_json(
            r#"{"kmax":1,"dmax":[1],"terms":[{"k":0,"d":[0],"coeff":{"num":["1"],"den":["1"]}},{"k":0,"d":[0],"coeff":{"num":["2"],"den":["1"]}}]}"#
        )
        .is_err());
        assert!(MultiSeries::from_json(
            r#"{"kmax":18446744073709551615,"dmax":[1],"terms":[]}"#
        )
        .is_err());
    }
}
