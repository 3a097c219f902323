//! Chow ring of `P^n`: integer polynomials in the hyperplane class `t`
//! truncated at `t^(n+1)`, plus the Chern and Riemann-Roch arithmetic built
//! on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    /// Truncates or pads `coeffs` to length `n + 1`.
    pub fn new(n: usize, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(n + 1, BigInt::zero());
        ChowClass { n, coeffs }
    }

    pub fn from_i64(n: usize, coeffs: &[i64]) -> Self {
        Self::new(n, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(n: usize) -> Self {
        Self::from_i64(n, &[1])
    }

    /// `1 + a t`.
    pub fn linear(n: usize, a: i64) -> Self {
        Self::from_i64(n, &[1, a])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the truncation).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeff_i64(&self, i: usize) -> i64 {
        self.coeff(i).to_i64().expect("Chern number fits in i64")
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        let mut acc = ChowClass::one(self.n);
        for _ in 0..e {
            acc = chow_mul(&acc, self).expect("same ambient");
        }
        acc
    }
}

pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let n = a.n;
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    Ok(ChowClass::new(n, out))
}

/// Inverse modulo `t^(n+1)`; the constant term must be `1` or `-1`.
pub fn chow_inv(a: &ChowClass) -> Result<ChowClass> {
    let c0 = a.coeffs[0].clone();
    if c0.abs() != BigInt::one() {
        return Err(Error::NonUnitConstant(c0.to_string()));
    }
    let mut inv = vec![BigInt::zero(); a.n + 1];
    inv[0] = c0.clone();
    for k in 1..=a.n {
        let mut s = BigInt::zero();
        for j in 1..=k {
            s += &a.coeffs[j] * &inv[k - j];
        }
        inv[k] = -(s * &c0);
    }
    Ok(ChowClass::new(a.n, inv))
}

/// Whitney product over the line bundles `O(d_i)`.
pub fn chern_line_sum(n: usize, degrees: &[i64]) -> ChowClass {
    degrees.iter().fold(ChowClass::one(n), |acc, &d| {
        chow_mul(&acc, &ChowClass::linear(n, d)).expect("same ambient")
    })
}

/// `binom(a, k)` for any integer `a` and `k >= 0`, as a polynomial in `a`.
pub fn signed_binomial(a: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Total Chern class of `E(k)` for `E` of the given rank.
pub fn chern_twist(c: &ChowClass, rank: usize, k: i64) -> ChowClass {
    let k = BigInt::from(k);
    let mut out = vec![BigInt::zero(); c.n + 1];
    for (i, slot) in out.iter_mut().enumerate() {
        for j in 0..=i {
            let b = signed_binomial(&BigInt::from(rank as i64 - j as i64), i - j);
            *slot += b * c.coeff(j) * num_traits::pow(k.clone(), i - j);
        }
    }
    ChowClass::new(c.n, out)
}

/// `c(Omega(k))` on `P^n`, from the Euler sequence.
pub fn chern_omega_twist(n: usize, k: i64) -> ChowClass {
    let omega = ChowClass::linear(n, -1).pow(n as u32 + 1);
    chern_twist(&omega, n, k)
}

/// `c(S^2 Omega(1))` on `P^2`.
pub fn chern_sym2_omega1_p2() -> ChowClass {
    chow_inv(&chern_line_sum(2, &[1, 1, 1])).expect("unit")
}

/// Total Chern class of `S^2(Omega(1)) (k)`, a rank-3 bundle on `P^2`.
pub fn chern_sym2_omega_twist(k: i64) -> ChowClass {
    chern_twist(&chern_sym2_omega1_p2(), 3, k)
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl ChowClass {
    /// Parses `1 + 3t + 3t^2` (also `1-t+t^2`, `2*t^3`) on `P^n`.
    pub fn parse(text: &str, n: usize) -> Result<ChowClass> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Chow class".into()));
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (neg, body) = match chunk.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, chunk.trim_start_matches('+')),
            };
            let bad = || Error::Parse(format!("bad Chow term {chunk:?}"));
            let (coef, power) = match body.find('t') {
                None => (body, 0usize),
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = match rest.strip_prefix('^') {
                        Some(p) => p.parse().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (coef, power)
                }
            };
            let mut c: BigInt = if coef.is_empty() {
                BigInt::one()
            } else {
                coef.parse().map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            if power <= n {
                coeffs[power] += c;
            }
        }
        Ok(ChowClass::new(n, coeffs))
    }
}

impl FromStr for ChowClass {
    type Err = Error;

    /// Ambient dimension is taken from the highest power written.
    fn from_str(s: &str) -> Result<Self> {
        let top = s
            .split('^')
            .skip(1)
            .filter_map(|p| {
                p.chars()
                    .take_while(|c| c.is_ascii_digit())
                    .collect::<String>()
                    .parse::<usize>()
                    .ok()
            })
            .max()
            .unwrap_or(if s.contains('t') { 1 } else { 0 });
        ChowClass::parse(s, top)
    }
}

/// Rank and Chern numbers of a bundle; `c3` is present on `P^3` and up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub rank: usize,
    pub c1: i64,
    pub c2: i64,
    pub c3: Option<i64>,
}

impl ChernData {
    pub fn from_class(rank: usize, c: &ChowClass) -> Self {
        ChernData {
            rank,
            c1: c.coeff_i64(1),
            c2: c.coeff_i64(2),
            c3: (c.n() >= 3).then(|| c.coeff_i64(3)),
        }
    }
}

impl fmt::Display for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} c1 {} c2 {}", self.rank, self.c1, self.c2)?;
        if let Some(c3) = self.c3 {
            write!(f, " c3 {c3}")?;
        }
        Ok(())
    }
}

/// `chi(O_{P^n}(a)) = binom(a + n, n)` read as a polynomial in `a`.
pub fn chi_line(n: usize, a: i64) -> BigInt {
    signed_binomial(&BigInt::from(a + n as i64), n)
}

/// `chi(E(m))` for rank-2 `E` on `P^2`.
pub fn euler_char_p2(c1: i64, c2: i64, m: i64) -> i64 {
    let c1m = c1 + 2 * m;
    let c2m = c2 + c1 * m + m * m;
    2 + (3 * c1m + c1m * c1m - 2 * c2m) / 2
}

/// `chi(E(m))` for rank-2 `E` on `P^3`, as the cubic polynomial in `m`.
pub fn euler_char_p3(c1: i64, c2: i64, m: i64) -> Rat {
    let q = |a: i64, b: i64| Rat::new(a.into(), b.into());
    let (c1r, c2r, mr) = (q(c1, 1), q(c2, 1), q(m, 1));
    let binom = Rat::from_integer(signed_binomial(&BigInt::from(c1 + 3), 3));
    &mr * &mr * &mr / q(3, 1)
        + (q(2, 1) + &c1r / q(2, 1)) * &mr * &mr
        + (q(11, 3) + q(2, 1) * &c1r + &c1r * &c1r / q(2, 1) - &c2r) * &mr
        + q(1, 1)
        + binom
        - q(2, 1) * &c2r
        - &c1r * &c2r / q(2, 1)
}

/// Integer-valued form of [`euler_char_p3`].
pub fn euler_char_p3_int(c1: i64, c2: i64, m: i64) -> Result<i64> {
    let v = euler_char_p3(c1, c2, m);
    if !v.is_integer() {
        return Err(Error::NonIntegerChi(v.to_string()));
    }
    Ok(v.to_integer().to_i64().expect("fits"))
}

/// `chi(E(m))` for rank-2 `E` on `P^n`, any `n`: the sum
/// `binom(alpha+m+n, n) + binom(beta+m+n, n)` over the Chern roots, computed
/// through power sums so only `c1`, `c2` enter.
pub fn euler_char_rank2(n: usize, c1: i64, c2: i64, m: i64) -> Rat {
    // shifted roots alpha+m, beta+m
    let e1 = BigInt::from(c1 + 2 * m);
    let e2 = BigInt::from(c2 + c1 * m + m * m);
    let mut p = vec![BigInt::from(2), e1.clone()];
    for k in 2..=n {
        let next = &e1 * &p[k - 1] - &e2 * &p[k - 2];
        p.push(next);
    }
    // binom(x+n, n) = prod_{i=1..n} (x+i) / n!
    let mut poly = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c * BigInt::from(i);
            next[k + 1] += c;
        }
        poly = next;
    }
    let fact: BigInt = (1..=n)
        .map(BigInt::from)
        .product::<BigInt>()
        .max(BigInt::one());
    let total: BigInt = poly.iter().zip(&p).map(|(a, b)| a * b).sum();
    Rat::new(total, fact)
}

/// `c1 c2` even.
pub fn schwarzenberger_ok(c1: i64, c2: i64) -> bool {
    (c1 * c2).is_even()
}

/// Twists `m` at which the `P^3` cubic fails to be an integer.
pub fn non_integral_twists(c1: i64, c2: i64, twists: impl IntoIterator<Item = i64>) -> Vec<i64> {
    twists
        .into_iter()
        .filter(|&m| !euler_char_p3(c1, c2, m).is_integer())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        let a = ChowClass::from_i64(2, &[1, 3, 6]);
        assert_eq!(chow_inv(&a).unwrap().to_string(), "1 - 3t + 3t^2");
        let prod = chow_mul(&a, &chow_inv(&a).unwrap()).unwrap();
        assert_eq!(prod, ChowClass::one(2));
        assert!(chow_inv(&ChowClass::from_i64(2, &[2, 1])).is_err());
        let q = chow_mul(
            &ChowClass::linear(3, 2),
            &chow_inv(&ChowClass::linear(3, -1)).unwrap(),
        )
        .unwrap();
        assert_eq!(q, ChowClass::from_i64(3, &[1, 3, 3, 3]));
    }

    #[test]
    fn twists_and_omega() {
        let om1 = chern_omega_twist(2, 1);
        assert_eq!(om1.to_string(), "1 - t + t^2");
        assert_eq!(chern_twist(&om1, 2, 2), ChowClass::from_i64(2, &[1, 3, 3]));
        assert_eq!(chern_omega_twist(2, 3), ChowClass::from_i64(2, &[1, 3, 3]));
        let e = ChowClass::from_i64(2, &[1, -1, 2]);
        assert_eq!(chern_twist(&e, 2, 2), ChowClass::from_i64(2, &[1, 3, 4]));
        assert_eq!(chern_twist(&e, 2, 0), e);
        assert_eq!(chern_sym2_omega1_p2().to_string(), "1 - 3t + 6t^2");
        assert_eq!(
            chern_line_sum(2, &[-1, -1, -1]),
            ChowClass::from_i64(2, &[1, -3, 3])
        );
        assert_eq!(chern_line_sum(3, &[0, 3]), ChowClass::from_i64(3, &[1, 3]));
    }

    #[test]
    fn print_parse() {
        for text in ["1 + 3t + 3t^2", "1 - t + t^2", "-2t^3", "0"] {
            let c = ChowClass::parse(text, 3).unwrap();
            assert_eq!(c.to_string(), text);
        }
        assert_eq!(
            "1+3*t+6t^2".parse::<ChowClass>().unwrap(),
            ChowClass::from_i64(2, &[1, 3, 6])
        );
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_p3(3, 0, 0), Rat::from_integer(21.into()));
        assert_eq!(euler_char_p2(3, 6, 0), 5);
        for (c2, chi) in [(3, 8), (4, 7), (5, 6), (6, 5)] {
            assert_eq!(euler_char_p2(3, c2, 0), chi);
        }
        for c1 in -4..=4 {
            for c2 in -4..=4 {
                for m in -4..=4 {
                    assert_eq!(
                        euler_char_rank2(2, c1, c2, m),
                        Rat::from_integer(euler_char_p2(c1, c2, m).into())
                    );
                    assert_eq!(euler_char_rank2(3, c1, c2, m), euler_char_p3(c1, c2, m));
                }
            }
        }
        assert!(
            euler_char_p3_int(3, 3, 0).is_err() || !non_integral_twists(3, 3, -6..=6).is_empty()
        );
    }

    #[test]
    fn parity() {
        assert!(!schwarzenberger_ok(3, 3));
        assert!(schwarzenberger_ok(2, 5));
        assert!(schwarzenberger_ok(1, 4) && !schwarzenberger_ok(1, 5));
    }
}
