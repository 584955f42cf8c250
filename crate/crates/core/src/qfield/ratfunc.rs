use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{factorial, format_bigrat, BigRat, UPoly};
use crate::error::{Error, Result};
use crate::qfield::upoly_gcd;

/// Reduced fraction `num / den` of polynomials in `u`.
///
/// Invariants: `gcd(num, den) = 1`, `den` is monic, and zero is `0 / 1`.
/// Two equal rational functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RatFuncRepr", into = "RatFuncRepr")]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: UPoly,
    den: UPoly,
}

impl From<RatFunc> for RatFuncRepr {
    fn from(f: RatFunc) -> Self {
        RatFuncRepr {
            num: f.num,
            den: f.den,
        }
    }
}

impl TryFrom<RatFuncRepr> for RatFunc {
    type Error = Error;

    fn try_from(r: RatFuncRepr) -> Result<Self> {
        RatFunc::new(r.num, r.den)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = upoly_gcd(&num, &den)?;
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        Ok(Self::from_coprime(num, den))
    }

    /// Normalizes the leading coefficient of a coprime pair.
    fn from_coprime(num: UPoly, den: UPoly) -> Self {
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    /// The variable `u = q²`.
    pub fn u() -> Self {
        Self::from_poly(UPoly::u())
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat(n))
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&UPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// True when both numerator and denominator are constants, i.e. the
    /// value lies in `Q`.
    pub fn as_constant(&self) -> Option<BigRat> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: usize) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at `u = s`.
    pub fn eval_at(&self, s: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::Pole(format_bigrat(s)));
        }
        Ok(self.num.eval(s) / d)
    }

    /// Coefficients `c_0..=c_order` of the expansion `Σ c_j (u-1)^j`.
    pub fn expand_at_one(&self, order: usize) -> Result<Vec<BigRat>> {
        let num = self.num.shift_to_one();
        let den = self.den.shift_to_one();
        let d0 = den.first().cloned().unwrap_or_else(BigRat::zero);
        if d0.is_zero() {
            return Err(Error::PoleAtUnity);
        }
        let d0_inv = d0.recip();
        let at = |v: &[BigRat], i: usize| v.get(i).cloned().unwrap_or_else(BigRat::zero);
        let mut out: Vec<BigRat> = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = at(&num, j);
            for i in 1..=j {
                let di = at(&den, i);
                if !di.is_zero() {
                    acc -= di * &out[j - i];
                }
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    pub fn to_string_in(&self, var: &str, step: usize) -> String {
        if self.den.is_one() {
            return self.num.to_string_in(var, step);
        }
        format!(
            "({}) / ({})",
            self.num.to_string_in(var, step),
            self.den.to_string_in(var, step)
        )
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("u", 1))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<UPoly> for RatFunc {
    fn from(p: UPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() || num.is_zero() {
                return RatFunc::new(num, self.den.clone()).expect("nonzero denominator");
            }
            let g = upoly_gcd(&num, &self.den).expect("nonzero");
            return RatFunc::from_coprime(num.div_exact(&g), self.den.div_exact(&g));
        }
        // a/b + c/d with g = gcd(b, d): any common factor of the new
        // numerator and denominator must divide g.
        let g = upoly_gcd(&self.den, &rhs.den).expect("nonzero");
        let b1 = self.den.div_exact(&g);
        let d1 = rhs.den.div_exact(&g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = &(&b1 * &d1) * &g;
        if g.is_one() {
            return RatFunc::from_coprime(num, den);
        }
        let h = upoly_gcd(&num, &g).expect("nonzero");
        RatFunc::from_coprime(num.div_exact(&h), den.div_exact(&h))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel; both inputs are already reduced.
        let g1 = if rhs.den.is_one() {
            UPoly::one()
        } else {
            upoly_gcd(&self.num, &rhs.den).expect("nonzero")
        };
        let g2 = if self.den.is_one() {
            UPoly::one()
        } else {
            upoly_gcd(&rhs.num, &self.den).expect("nonzero")
        };
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        RatFunc::from_coprime(num, den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(op: RatOp, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

/// `α (α-1) ⋯ (α-k+1)`.
pub fn falling_factorial(alpha: &RatFunc, k: usize) -> RatFunc {
    let mut acc = RatFunc::one();
    for i in 0..k {
        let shifted = alpha - &RatFunc::from_int(i as i64);
        acc = &acc * &shifted;
    }
    acc
}

/// The binomial coefficient `C(α, k) = α (α-1) ⋯ (α-k+1) / k!`.
pub fn binom_falling(alpha: &RatFunc, k: usize) -> RatFunc {
    let kf = BigRat::from_integer(factorial(k));
    falling_factorial(alpha, k).scale(&kf.recip())
}
