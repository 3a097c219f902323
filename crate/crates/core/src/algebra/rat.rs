//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which keeps numerator and denominator
//! coprime with a positive denominator after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `7`, `-3/2`, `+5`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .trim_start_matches('+')
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a vector to coprime integers. Returns the scale factor applied.
/// The zero vector is returned unchanged with factor one.
pub fn primitive_integer_vector(values: &[Rat]) -> (Vec<BigInt>, Rat) {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return (ints, Rat::one());
    }
    let out = ints.iter().map(|v| v / &g).collect();
    (out, Rat::new(den, g))
}
