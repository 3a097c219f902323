//! Recovering forms from point values, and the binary resultant.

use num_traits::Zero;

use super::form::{basis, Form};
use super::matrix::RatMatrix;
use super::point::ProjPoint;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Vandermonde matrix of the degree-`d` monomials at the given points.
pub fn vandermonde(n: usize, d: u32, points: &[&ProjPoint]) -> RatMatrix {
    let b = basis(n, d as i64);
    let mut m = RatMatrix::zeros(points.len(), b.len());
    for (i, p) in points.iter().enumerate() {
        for (j, mono) in b.monomials.iter().enumerate() {
            m.set(i, j, mono.eval(p.coords()));
        }
    }
    m
}

/// The degree-`d` form taking the given values at the stored representatives.
pub fn interpolate_form(n: usize, d: u32, samples: &[(ProjPoint, Rat)]) -> Result<Form> {
    let points: Vec<&ProjPoint> = samples.iter().map(|(p, _)| p).collect();
    let values: Vec<Vec<Rat>> = samples.iter().map(|(_, v)| vec![v.clone()]).collect();
    Ok(interpolate_many(n, d, &points, &values)?.remove(0))
}

/// Interpolates several forms over one shared set of points; `values[k][c]`
/// is the value of form `c` at point `k`.
pub fn interpolate_many(
    n: usize,
    d: u32,
    points: &[&ProjPoint],
    values: &[Vec<Rat>],
) -> Result<Vec<Form>> {
    if points.len() != values.len() {
        return Err(Error::MatrixShape("one value row per point".into()));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::AmbientMismatch {
            left: n,
            right: p.dim(),
        });
    }
    let needed = basis(n, d as i64).len();
    let v = vandermonde(n, d, points);
    let rank = v.rank();
    if rank < needed {
        return Err(Error::Underdetermined {
            degree: d,
            rank,
            needed,
        });
    }
    let cols = values.first().map(|r| r.len()).unwrap_or(1);
    let rhs = RatMatrix::from_rows(values.to_vec())?;
    let rhs = if values.is_empty() {
        RatMatrix::zeros(0, cols)
    } else {
        rhs
    };
    let sol = v
        .solve(&rhs)?
        .ok_or(Error::InconsistentSamples { degree: d })?;
    Ok((0..cols)
        .map(|c| Form::from_coefficient_vector(n + 1, d, &sol.column(c)))
        .collect())
}

/// Resultant of two binary forms, via the Sylvester determinant.
/// Zero exactly when the forms share a zero on the projective line.
pub fn binary_resultant(f: &Form, g: &Form) -> Result<Rat> {
    if f.num_vars() != 2 || g.num_vars() != 2 {
        return Err(Error::MismatchedVars {
            left: 2,
            right: if f.num_vars() != 2 {
                f.num_vars()
            } else {
                g.num_vars()
            },
        });
    }
    let (a, b) = (f.degree() as usize, g.degree() as usize);
    if a + b == 0 {
        let v = if f.is_zero() || g.is_zero() {
            Rat::zero()
        } else {
            Rat::from_integer(1.into())
        };
        return Ok(v);
    }
    // coefficient of s^(deg-k) t^k sits at position k of the graded-lex vector
    let fc = f.coefficient_vector();
    let gc = g.coefficient_vector();
    let size = a + b;
    let mut m = RatMatrix::zeros(size, size);
    for r in 0..b {
        for (k, c) in fc.iter().enumerate() {
            m.set(r, r + k, c.clone());
        }
    }
    for r in 0..a {
        for (k, c) in gc.iter().enumerate() {
            m.set(b + r, r + k, c.clone());
        }
    }
    m.det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::form::form_eval;
    use rand::SeedableRng;

    #[test]
    fn round_trip_cubic() {
        let f = Form::parse("x0^2*x2", 3, None).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let samples: Vec<_> = (0..15)
            .map(|_| {
                let p = ProjPoint::random(&mut rng, 2);
                let v = form_eval(&f, &p);
                (p, v)
            })
            .collect();
        assert_eq!(interpolate_form(2, 3, &samples).unwrap(), f);
    }

    #[test]
    fn zero_and_too_few() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let zeros: Vec<_> = (0..20)
            .map(|_| (ProjPoint::random(&mut rng, 2), Rat::zero()))
            .collect();
        assert!(interpolate_form(2, 3, &zeros).unwrap().is_zero());
        assert!(matches!(
            interpolate_form(2, 3, &zeros[..9]),
            Err(Error::Underdetermined { needed: 10, .. })
        ));
    }

    #[test]
    fn inconsistent() {
        let f = Form::parse("x0^4", 3, None).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<_> = (0..30)
            .map(|_| {
                let p = ProjPoint::random(&mut rng, 2);
                let v = form_eval(&f, &p);
                (p, v)
            })
            .collect();
        assert!(matches!(
            interpolate_form(2, 3, &samples),
            Err(Error::InconsistentSamples { degree: 3 })
        ));
    }

    #[test]
    fn resultants() {
        let f = Form::parse("x0*x1", 2, None).unwrap();
        let g = Form::parse("x0^2 + x1^2", 2, None).unwrap();
        assert!(!binary_resultant(&f, &g).unwrap().is_zero());
        let h = Form::parse("x0^2 - x0*x1", 2, None).unwrap();
        assert!(binary_resultant(&f, &h).unwrap().is_zero());
        // common zero at (0:1)
        let p = Form::parse("x0*x1 + x0^2", 2, None).unwrap();
        let q = Form::parse("x0^3", 2, None).unwrap();
        assert!(binary_resultant(&p, &q).unwrap().is_zero());
    }
}
