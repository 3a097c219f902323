//! Homogeneous forms with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::point::ProjPoint;
use super::rat::{parse_rat, Rat};
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
///
/// Ordering is graded lexicographic with `x0 > x1 > ...`: lower degree first,
/// then within a degree the monomial with the larger `x0` exponent comes first.
/// Iterating a `BTreeMap<Monomial, _>` therefore yields graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::one();
        for (x, &e) in point.iter().zip(&self.0) {
            if e > 0 {
                acc *= num_traits::pow(x.clone(), e as usize);
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lex basis of degree-`d` monomials in `n + 1` variables with an index.
#[derive(Debug)]
pub struct MonomialBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// All exponent vectors of length `n + 1` summing to `d`, in graded-lex order.
pub fn monomial_basis(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(slots: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(d as u16);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(slots - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n + 1, d, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// Shared, memoized basis for `S_d` on `P^n`. Negative degrees give the empty basis.
pub fn basis(n: usize, d: i64) -> Arc<MonomialBasis> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i64), Arc<MonomialBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, d)) {
        return b.clone();
    }
    let monomials = if d < 0 {
        Vec::new()
    } else {
        monomial_basis(n, d as u32)
    };
    let index = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let b = Arc::new(MonomialBasis { monomials, index });
    cache.lock().unwrap().insert((n, d), b.clone());
    b
}

/// `dim S_d = binom(n + d, n)` on `P^n`, zero for negative `d`.
pub fn dim_forms(n: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (d as u128 + i) / i;
    }
    acc as usize
}

/// A homogeneous polynomial. The zero form keeps its recorded degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rat>,
}

impl Form {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        Form {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(num_vars), c)
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rat::one())
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        Self::term(Monomial::var(num_vars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut f = Form::zero(m.num_vars(), m.degree());
        if !c.is_zero() {
            f.terms.insert(m, c);
        }
        f
    }

    /// Builds a form from terms; rejects inhomogeneous input and drops zeros.
    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Result<Self> {
        let mut f = Form::zero(num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::MismatchedVars {
                    left: num_vars,
                    right: m.num_vars(),
                });
            }
            if m.degree() != degree {
                return Err(Error::MismatchedDegrees {
                    left: degree,
                    right: m.degree(),
                });
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let nv = coeffs.len();
        let mut f = Form::zero(nv, 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(Monomial::var(nv, i), c.clone());
        }
        f
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// First term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next()
    }

    /// Coefficient vector on the graded-lex monomial basis of its degree.
    pub fn coefficient_vector(&self) -> Vec<Rat> {
        let b = basis(self.num_vars - 1, self.degree as i64);
        let mut v = vec![Rat::zero(); b.len()];
        for (m, c) in &self.terms {
            v[b.position(m).expect("monomial in basis")] = c.clone();
        }
        v
    }

    pub fn from_coefficient_vector(num_vars: usize, degree: u32, coeffs: &[Rat]) -> Self {
        let b = basis(num_vars - 1, degree as i64);
        let mut f = Form::zero(num_vars, degree);
        for (m, c) in b.monomials.iter().zip(coeffs) {
            f.add_term(m.clone(), c.clone());
        }
        f
    }

    pub fn scale(&self, c: &Rat) -> Form {
        if c.is_zero() {
            return Form::zero(self.num_vars, self.degree);
        }
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.check_vars(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::MismatchedDegrees {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&other.scale(&-Rat::one()))
    }

    pub fn try_mul(&self, other: &Form) -> Result<Form> {
        self.check_vars(other)?;
        let mut out = Form::zero(self.num_vars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Form {
        let mut acc = Form::one(self.num_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_vars(&self, other: &Form) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::MismatchedVars {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    /// Exact value at an affine vector of coordinates.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.num_vars, "evaluation point has wrong length");
        if self.terms.is_empty() {
            return Rat::zero();
        }
        let d = self.degree as usize;
        // powers[i][e] = x_i^e
        let powers: Vec<Vec<Rat>> = x
            .iter()
            .map(|xi| {
                let mut p = Vec::with_capacity(d + 1);
                p.push(Rat::one());
                for e in 1..=d {
                    let next = &p[e - 1] * xi;
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Value at the stored (normalized integer) representative of `p`.
    pub fn eval_point(&self, p: &ProjPoint) -> Rat {
        self.eval(p.coords())
    }

    pub fn partial(&self, i: usize) -> Form {
        let mut out = Form::zero(self.num_vars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Substitutes `x_i -> images[i]`. All images must share one degree and
    /// one variable count.
    pub fn substitute(&self, images: &[Form]) -> Result<Form> {
        if images.len() != self.num_vars {
            return Err(Error::MismatchedVars {
                left: self.num_vars,
                right: images.len(),
            });
        }
        let nv = images[0].num_vars;
        let img_deg = images.iter().map(|f| f.degree).max().unwrap_or(0);
        let d = self.degree as usize;
        let mut powers: Vec<Vec<Form>> = Vec::with_capacity(images.len());
        for f in images {
            if f.num_vars != nv {
                return Err(Error::MismatchedVars {
                    left: nv,
                    right: f.num_vars,
                });
            }
            let mut p = vec![Form::one(nv)];
            for e in 1..=d {
                let next = p[e - 1].try_mul(f)?;
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = Form::zero(nv, self.degree * img_deg);
        for (m, c) in &self.terms {
            let mut t = Form::constant(nv, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&powers[i][e as usize])?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Least common denominator and gcd of numerators of the coefficients.
    pub fn content_parts(&self) -> (BigInt, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = self.terms.values().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c * Rat::from_integer(den.clone())).to_integer())
        });
        (den, g)
    }

    /// Parses the text syntax, e.g. `3/2*x0^2*x1 - x2^3`. The zero form `0`
    /// needs `zero_degree`; otherwise the degree is read off the terms.
    pub fn parse(text: &str, num_vars: usize, zero_degree: Option<u32>) -> Result<Form> {
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (idx, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(cur.is_empty() && idx == 0) && !cur.ends_with('^') {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {text:?}")));
                }
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && idx == 0 {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        chunks.push((neg, cur));

        for (neg, chunk) in chunks {
            let mut coeff = Rat::one();
            let mut exps = vec![0u16; num_vars];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {text:?}")));
                }
                if let Some(rest) = factor.strip_prefix('x') {
                    let (var, pow) = match rest.split_once('^') {
                        Some((v, p)) => (v, p),
                        None => (rest, "1"),
                    };
                    let var: usize = var
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    let pow: u16 = pow
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                    if var >= num_vars {
                        return Err(Error::Parse(format!(
                            "variable x{var} out of range for {num_vars} variables"
                        )));
                    }
                    exps[var] += pow;
                } else {
                    coeff *= parse_rat(factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((Monomial(exps), coeff));
        }
        let degrees: Vec<u32> = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m.degree())
            .collect();
        let degree = match degrees.first() {
            Some(&d) => d,
            None => zero_degree.unwrap_or(0),
        };
        let f = Form::from_terms(
            num_vars,
            degree,
            terms.into_iter().filter(|(_, c)| !c.is_zero()),
        )
        .map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
        if let (Some(zd), true) = (zero_degree, f.is_zero()) {
            return Ok(Form::zero(num_vars, zd));
        }
        Ok(f)
    }
}

impl std::ops::Mul for &Form {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        self.try_mul(rhs)
            .expect("form product with mismatched variables")
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("form sum with mismatched degree")
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.try_sub(rhs)
            .expect("form difference with mismatched degree")
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Rat::one())
    }
}

/// Free-function form of the product, reporting mismatched variable counts.
pub fn form_mul(f: &Form, g: &Form) -> Result<Form> {
    f.try_mul(g)
}

pub fn form_eval(f: &Form, p: &ProjPoint) -> Rat {
    f.eval_point(p)
}

pub fn form_partial(f: &Form, i: usize) -> Form {
    f.partial(i)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{i}")?;
        } else {
            write!(f, "x{i}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write_monomial(f, m)?;
            } else {
                write!(f, "{a}*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(2, 3).len(), 10);
        assert_eq!(monomial_basis(3, 3).len(), 20);
        assert_eq!(monomial_basis(4, 0), vec![Monomial(vec![0; 5])]);
        for n in 0..=4 {
            for d in 0..=8 {
                assert_eq!(monomial_basis(n, d).len(), dim_forms(n, d as i64));
            }
        }
    }

    #[test]
    fn basis_is_graded_lex() {
        let b = monomial_basis(2, 2);
        let expect = [
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 1],
            [0, 2, 0],
            [0, 1, 1],
            [0, 0, 2],
        ];
        for (m, e) in b.iter().zip(expect) {
            assert_eq!(m.0, e.to_vec());
        }
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(sorted, b);
    }

    #[test]
    fn products() {
        let x0 = Form::var(3, 0);
        let x1 = Form::var(3, 1);
        assert_eq!((&x0 * &x1).to_string(), "x0*x1");
        assert!((&x0 * &Form::zero(3, 2)).is_zero());
        assert_eq!((&x0 * &Form::zero(3, 2)).degree(), 3);
        let s = &x0 + &x1;
        assert_eq!((&s * &s).to_string(), "x0^2 + 2*x0*x1 + x1^2");
        let y = Form::var(4, 0);
        assert!(form_mul(&x0, &y).is_err());
    }

    #[test]
    fn evaluation() {
        let f = Form::parse("x0^3", 3, None).unwrap();
        assert_eq!(f.eval(&[rat(1), rat(0), rat(0)]), rat(1));
        let g = Form::parse("x0*x1*x2", 3, None).unwrap();
        assert_eq!(g.eval(&[rat(1), rat(1), rat(1)]), rat(1));
        let h = Form::parse("x0^2*x1", 3, None).unwrap();
        assert_eq!(h.eval(&[rat(2), rat(3), rat(1)]), rat(12));
    }

    #[test]
    fn partials_and_euler() {
        let f = Form::parse("x0^3", 3, None).unwrap();
        assert_eq!(f.partial(0).to_string(), "3*x0^2");
        assert!(f.partial(1).is_zero());
        let g = Form::parse("x0*x1*x2", 3, None).unwrap();
        let mut acc = Form::zero(3, 3);
        for i in 0..3 {
            acc = &acc + &(&Form::var(3, i) * &g.partial(i));
        }
        assert_eq!(acc, g.scale(&rat(3)));
        assert!(Form::one(3).partial(0).is_zero());
    }

    #[test]
    fn parse_and_print() {
        let f = Form::parse("3/2*x0^2*x1 - x2^3", 3, None).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.to_string(), "3/2*x0^2*x1 - x2^3");
        let g = Form::parse("- x2^3 + 3/2 * x1 * x0^2", 3, None).unwrap();
        assert_eq!(f, g);
        assert_eq!(Form::parse("0", 3, Some(2)).unwrap(), Form::zero(3, 2));
        assert_eq!(Form::parse("-7/3", 2, None).unwrap().to_string(), "-7/3");
        assert!(Form::parse("x0 + x1^2", 3, None).is_err());
        assert!(Form::parse("x5", 3, None).is_err());
        assert!(Form::parse("x0 +", 3, None).is_err());
        let h = Form::parse("x0 - x0", 2, Some(1)).unwrap();
        assert!(h.is_zero());
        assert_eq!(
            Form::parse("1/2*x0", 2, None)
                .unwrap()
                .coeff(&Monomial(vec![1, 0])),
            ratio(1, 2)
        );
    }

    #[test]
    fn substitution() {
        // x0*x1 under x0 -> s + t, x1 -> s - t
        let f = Form::parse("x0*x1", 3, None).unwrap();
        let s = Form::var(2, 0);
        let t = Form::var(2, 1);
        let img = [&s + &t, &s - &t, Form::zero(2, 1)];
        assert_eq!(f.substitute(&img).unwrap().to_string(), "x0^2 - x1^2");
    }
}
