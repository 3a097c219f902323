use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{normalize, ProjPoint, Rat, RatMatrix};

use super::map::PluckerMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Verdict {
    fn pass(checked: usize) -> Self {
        Verdict {
            passed: true,
            checked,
            witness: None,
        }
    }

    fn fail(checked: usize, witness: String) -> Self {
        Verdict {
            passed: false,
            checked,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} checked)",
            if self.passed { "pass" } else { "FAIL" },
            self.checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub base_point_free: Verdict,
    pub injective: Verdict,
    pub immersive: Verdict,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.base_point_free.passed && self.injective.passed && self.immersive.passed
    }
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base_point_free: {}", self.base_point_free)?;
        writeln!(f, "injective: {}", self.injective)?;
        write!(f, "immersive: {}", self.immersive)
    }
}

fn cyclic_shift(x: &ProjPoint) -> ProjPoint {
    let mut c = x.coords().to_vec();
    c.rotate_right(1);
    ProjPoint::new(c).expect("nonzero")
}

fn value(map: &PluckerMap, x: &ProjPoint) -> Option<Vec<Rat>> {
    let v = map.eval(x.coords());
    if v.iter().all(|c| c == &Rat::from_integer(0.into())) {
        None
    } else {
        Some(normalize(&v))
    }
}

/// Samples the three embedding conditions. Injectivity pairs alternate
/// between independent random points and `(x, sigma x)` for the cyclic
/// shift `sigma` of the coordinates.
pub fn check_embedding(
    map: &PluckerMap,
    base_points: usize,
    pairs: usize,
    jacobian_points: usize,
    seed: u64,
) -> EmbeddingReport {
    let n = map.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut base_point_free = Verdict::pass(base_points);
    for k in 0..base_points {
        let x = ProjPoint::random(&mut rng, n);
        if value(map, &x).is_none() {
            base_point_free = Verdict::fail(k + 1, x.to_string());
            break;
        }
    }

    let mut injective = Verdict::pass(pairs);
    for k in 0..pairs {
        let x = ProjPoint::random(&mut rng, n);
        let y = if k % 2 == 0 {
            ProjPoint::random(&mut rng, n)
        } else {
            cyclic_shift(&x)
        };
        if normalize(x.coords()) == normalize(y.coords()) {
            continue;
        }
        if let (Some(a), Some(b)) = (value(map, &x), value(map, &y)) {
            if a == b {
                injective = Verdict::fail(k + 1, format!("{x} and {y}"));
                break;
            }
        }
    }

    let partials: Vec<Vec<_>> = map
        .coords()
        .iter()
        .map(|f| (0..=n).map(|i| f.partial(i)).collect())
        .collect();
    let mut immersive = Verdict::pass(jacobian_points);
    for k in 0..jacobian_points {
        let x = ProjPoint::random(&mut rng, n);
        let mut jac = RatMatrix::zeros(partials.len(), n + 1);
        for (r, row) in partials.iter().enumerate() {
            for (c, f) in row.iter().enumerate() {
                jac.set(r, c, f.eval(x.coords()));
            }
        }
        let rank = jac.rank();
        if rank != n + 1 {
            immersive = Verdict::fail(k + 1, format!("{x} (rank {rank})"));
            break;
        }
    }

    EmbeddingReport {
        base_point_free,
        injective,
        immersive,
    }
}
