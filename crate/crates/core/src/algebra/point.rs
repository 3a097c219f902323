use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use super::rat::{primitive_integer_vector, Rat};
use crate::error::{Error, Result};

/// Range of the integer coordinates drawn for random points.
pub const SAMPLE_COORD_BOUND: i64 = 9;
/// Redraws allowed before a sampler gives up.
pub const SAMPLE_ATTEMPTS: usize = 64;

/// A point of projective space, stored as its canonical integer representative:
/// coprime integers with the first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Rat>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint {
            coords: normalize(&coords),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    /// Ambient dimension `n` (the point has `n + 1` coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Uniform integer coordinates in `[-9, 9]`, redrawn while all zero.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        loop {
            let c: Vec<Rat> = (0..=n)
                .map(|_| {
                    Rat::from_integer(BigInt::from(
                        rng.gen_range(-SAMPLE_COORD_BOUND..=SAMPLE_COORD_BOUND),
                    ))
                })
                .collect();
            if let Ok(p) = ProjPoint::new(c) {
                return p;
            }
        }
    }

    /// Random point avoiding the locus where `bad` returns true.
    pub fn random_avoiding<R: Rng + ?Sized>(
        rng: &mut R,
        n: usize,
        mut bad: impl FnMut(&ProjPoint) -> bool,
    ) -> Result<Self> {
        for _ in 0..SAMPLE_ATTEMPTS {
            let p = Self::random(rng, n);
            if !bad(&p) {
                return Ok(p);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: SAMPLE_ATTEMPTS,
        })
    }

    /// `s*P + t*Q`.
    pub fn combine(p: &ProjPoint, q: &ProjPoint, s: &Rat, t: &Rat) -> Result<ProjPoint> {
        ProjPoint::new(
            p.coords
                .iter()
                .zip(&q.coords)
                .map(|(a, b)| s * a + t * b)
                .collect(),
        )
    }
}

/// Canonical representative of a nonzero vector up to scale.
pub fn normalize(coords: &[Rat]) -> Vec<Rat> {
    let (ints, _) = primitive_integer_vector(coords);
    let sign_negative = ints
        .iter()
        .find(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .unwrap_or(false);
    ints.into_iter()
        .map(|v| Rat::from_integer(if sign_negative { -v } else { v }))
        .collect()
}

/// Whether two vectors span the same line (both nonzero).
pub fn projectively_equal(a: &[Rat], b: &[Rat]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.iter().all(|x| x.is_zero()) || b.iter().all(|x| x.is_zero()) {
        return false;
    }
    normalize(a) == normalize(b)
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for ProjPoint {
    type Err = Error;

    /// Accepts `(1:2:3)`, `1:2:3` or `1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = if t.contains(':') {
            t.split(':').collect()
        } else {
            t.split(',').collect()
        };
        let coords = parts
            .iter()
            .map(|p| super::rat::parse_rat(p))
            .collect::<Result<Vec<_>>>()?;
        ProjPoint::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};
    use rand::SeedableRng;

    #[test]
    fn normalization() {
        let p = ProjPoint::new(vec![ratio(-1, 2), rat(1), rat(0)]).unwrap();
        assert_eq!(p.to_string(), "(1:-2:0)");
        let q = ProjPoint::from_ints(&[-3, 6, 0]).unwrap();
        assert_eq!(p, q);
        assert!(ProjPoint::from_ints(&[0, 0]).is_err());
        assert_eq!(
            "(0:0:2)".parse::<ProjPoint>().unwrap(),
            ProjPoint::from_ints(&[0, 0, 1]).unwrap()
        );
    }

    #[test]
    fn random_is_reproducible() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            assert_eq!(ProjPoint::random(&mut a, 3), ProjPoint::random(&mut b, 3));
        }
    }

    #[test]
    fn avoiding_gives_up() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            ProjPoint::random_avoiding(&mut rng, 2, |_| true),
            Err(Error::SamplingExhausted { .. })
        ));
    }
}
