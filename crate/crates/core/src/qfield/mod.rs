//! Exact coefficient field: rationals, dense polynomials in `u = q²`, and
//! reduced rational functions of `u`.
//!
//! Every class handled by the crate is an element of `Q(u)`. Polynomials are
//! stored densely (lowest degree first) since the degrees that occur stay
//! small.

mod ratfunc;
mod upoly;

pub use ratfunc::{binom_falling, falling_factorial, rat_arith, RatFunc, RatOp};
pub use upoly::{upoly_gcd, UPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`; rejects a zero denominator instead of panicking.
pub fn parse_bigrat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRat::new(n, d))
}

/// Exact rational formatting used by every serializer: `"p"` or `"p/q"`.
pub fn format_bigrat(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn bigrat_to_f64(r: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => r.to_f64().unwrap_or(f64::NAN),
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
