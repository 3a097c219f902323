use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{basis, Form, Monomial, Rat};
use crate::error::{Error, Result};

/// Index pairs `(i, j)`, `i < j <= target`, in lexicographic order.
pub fn pairs(target: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=target {
        for j in i + 1..=target {
            out.push((i, j));
        }
    }
    out
}

pub fn pair_count(target: usize) -> usize {
    (target + 1) * target / 2
}

/// Position of `(i, j)` in [`pairs`].
pub fn pair_index(target: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j <= target);
    i * (2 * target + 1 - i) / 2 + (j - i - 1)
}

/// `P^n -> Gr(1,N) -> P^{binom(N+1,2)-1}` as one form per index pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerMap {
    pub n: usize,
    pub target: usize,
    pub degree: u32,
    coords: Vec<Form>,
}

impl PluckerMap {
    /// Content-normalizes the coordinates. Errors if they are all zero or
    /// do not share one degree.
    pub fn new(n: usize, target: usize, coords: Vec<Form>) -> Result<Self> {
        if coords.len() != pair_count(target) {
            return Err(Error::MatrixShape(format!(
                "{} coordinates for Gr(1,{target})",
                coords.len()
            )));
        }
        if let Some(f) = coords.iter().find(|f| f.num_vars() != n + 1) {
            return Err(Error::MismatchedVars {
                left: n + 1,
                right: f.num_vars(),
            });
        }
        let Some(first) = coords.iter().find(|f| !f.is_zero()) else {
            return Err(Error::Unsupported("all Plücker coordinates vanish".into()));
        };
        let degree = first.degree();
        if let Some(f) = coords.iter().find(|f| !f.is_zero() && f.degree() != degree) {
            return Err(Error::MismatchedDegrees {
                left: degree,
                right: f.degree(),
            });
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for f in coords.iter().filter(|f| !f.is_zero()) {
            let (d, _) = f.content_parts();
            den = den.lcm(&d);
        }
        for f in coords.iter() {
            for (_, c) in f.terms() {
                num = num.gcd(&(c * Rat::from_integer(den.clone())).to_integer());
            }
        }
        let lead = first
            .leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        let mut factor = Rat::new(den, num);
        if lead {
            factor = -factor;
        }
        let coords = coords
            .into_iter()
            .map(|f| {
                if f.is_zero() {
                    Form::zero(n + 1, degree)
                } else {
                    f.scale(&factor)
                }
            })
            .collect();
        Ok(PluckerMap {
            n,
            target,
            degree,
            coords,
        })
    }

    pub fn coords(&self) -> &[Form] {
        &self.coords
    }

    pub fn coord(&self, i: usize, j: usize) -> &Form {
        &self.coords[pair_index(self.target, i, j)]
    }

    pub fn nonzero_count(&self) -> usize {
        self.coords.iter().filter(|f| !f.is_zero()).count()
    }

    pub fn eval(&self, x: &[Rat]) -> Vec<Rat> {
        self.coords.iter().map(|f| f.eval(x)).collect()
    }

    /// Whether every coordinate is the same multiple of the other map's.
    pub fn proportional_to(&self, other: &PluckerMap) -> Option<Rat> {
        if self.n != other.n || self.target != other.target {
            return None;
        }
        let mut scale: Option<Rat> = None;
        for (f, g) in self.coords.iter().zip(&other.coords) {
            if f.is_zero() != g.is_zero() {
                return None;
            }
            if f.is_zero() {
                continue;
            }
            let (m, c) = f.leading_term()?;
            let s = g.coeff(m) / c;
            if s.is_zero() || g != &f.scale(&s) {
                return None;
            }
            match &scale {
                None => scale = Some(s),
                Some(t) if *t != s => return None,
                _ => {}
            }
        }
        scale
    }

    /// The same map with coordinate `(i, j)` replaced.
    pub fn with_coord(&self, i: usize, j: usize, f: Form) -> Result<PluckerMap> {
        let mut coords = self.coords.clone();
        coords[pair_index(self.target, i, j)] = f;
        PluckerMap::new(self.n, self.target, coords)
    }
}

impl fmt::Display for PluckerMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.target, self.degree)?;
        for ((i, j), c) in pairs(self.target).into_iter().zip(&self.coords) {
            writeln!(f, "{i} {j} : {c}")?;
        }
        Ok(())
    }
}

impl FromStr for PluckerMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header: Vec<usize> = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Plücker map".into()))?
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header field {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [n, target, degree] = header[..] else {
            return Err(Error::Parse("header must be `n N d`".into()));
        };
        let mut coords = vec![Form::zero(n + 1, degree as u32); pair_count(target)];
        for line in lines {
            let (idx, form) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing ':' in {line:?}")))?;
            let ij: Vec<usize> = idx
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad index {t:?}")))
                })
                .collect::<Result<_>>()?;
            let [i, j] = ij[..] else {
                return Err(Error::Parse(format!("bad index pair in {line:?}")));
            };
            if i >= j || j > target {
                return Err(Error::Parse(format!("index pair ({i},{j}) out of range")));
            }
            coords[pair_index(target, i, j)] = Form::parse(form, n + 1, Some(degree as u32))?;
        }
        PluckerMap::new(n, target, coords)
    }
}

/// Lines joining `v_a(x)` and `v_{d-a}(x)`; for `a = 0` the first Veronese
/// image is a point.
pub fn join_map(n: usize, a: u32, d: u32) -> Result<PluckerMap> {
    if 2 * a > d {
        return Err(Error::Unsupported(format!(
            "join map needs a <= d/2, got a={a}, d={d}"
        )));
    }
    let low = basis(n, a as i64);
    let high = basis(n, (d - a) as i64);
    let target = low.len() + high.len() - 1;
    let nv = n + 1;
    let mut coords = vec![Form::zero(nv, d); pair_count(target)];
    for (i, m) in low.monomials.iter().enumerate() {
        for (k, m2) in high.monomials.iter().enumerate() {
            let j = low.len() + k;
            coords[pair_index(target, i, j)] = Form::term(Monomial::mul(m, m2), Rat::one());
        }
    }
    PluckerMap::new(n, target, coords)
}

/// Expands every three-term relation `p_ij p_kl - p_ik p_jl + p_il p_jk`
/// and checks that it is the zero form.
pub fn verify_plucker_relations(map: &PluckerMap) -> bool {
    let t = map.target;
    let prod = |a: &Form, b: &Form| -> Option<Form> {
        if a.is_zero() || b.is_zero() {
            None
        } else {
            Some(a * b)
        }
    };
    for i in 0..=t {
        for j in i + 1..=t {
            for k in j + 1..=t {
                for l in k + 1..=t {
                    let terms = [
                        prod(map.coord(i, j), map.coord(k, l)),
                        prod(map.coord(i, k), map.coord(j, l)).map(|f| -&f),
                        prod(map.coord(i, l), map.coord(j, k)),
                    ];
                    let mut acc: Option<Form> = None;
                    for f in terms.into_iter().flatten() {
                        acc = Some(match acc {
                            None => f,
                            Some(g) => &g + &f,
                        });
                    }
                    if acc.is_some_and(|f| !f.is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_positions() {
        for t in 1..7 {
            for (k, (i, j)) in pairs(t).into_iter().enumerate() {
                assert_eq!(pair_index(t, i, j), k);
            }
            assert_eq!(pairs(t).len(), pair_count(t));
        }
    }

    #[test]
    fn quadric_relation() {
        let x = |i| Form::var(2, i);
        // rows (x0, 0, x0, x1) and (0, x0, x1, x0)
        let u = [x(0), Form::zero(2, 1), x(0), x(1)];
        let v = [Form::zero(2, 1), x(0), x(1), x(0)];
        let coords: Vec<Form> = pairs(3)
            .into_iter()
            .map(|(i, j)| &(&u[i] * &v[j]) - &(&u[j] * &v[i]))
            .collect();
        let m = PluckerMap::new(1, 3, coords).unwrap();
        assert!(verify_plucker_relations(&m));
        let bad = m
            .with_coord(0, 3, &m.coord(0, 3).clone() + &(&x(0) * &x(1)))
            .unwrap();
        assert!(!verify_plucker_relations(&bad));
    }

    #[test]
    fn join_shapes() {
        let m = join_map(2, 1, 3).unwrap();
        assert_eq!((m.target, m.nonzero_count(), m.degree), (8, 18, 3));
        let m = join_map(2, 0, 3).unwrap();
        assert_eq!((m.target, m.nonzero_count()), (10, 10));
        let m = join_map(1, 1, 3).unwrap();
        assert_eq!(m.target, 4);
        assert!(verify_plucker_relations(&m));
    }

    #[test]
    fn text_round_trip() {
        let m = join_map(2, 1, 3).unwrap();
        let back: PluckerMap = m.to_string().parse().unwrap();
        assert_eq!(back, m);
    }
}
