use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cohomology::h_vector;
use super::presentation::FreePresentation;
use crate::algebra::{projectively_equal, Form, ProjPoint, Rat};
use crate::error::{Error, Result};

/// `E|_l = O(a) + O(b)` with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SplittingType {
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `h0(O(a)(m) + O(b)(m))` on the projective line.
pub fn split_h0(a: i64, b: i64, m: i64) -> i64 {
    (a + m + 1).max(0) + (b + m + 1).max(0)
}

/// Pulls the presentation back along `(s:t) -> sP + tQ`.
pub fn restrict_presentation(
    pres: &FreePresentation,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<FreePresentation> {
    if p.dim() != pres.n() || q.dim() != pres.n() {
        return Err(Error::AmbientMismatch {
            left: pres.n(),
            right: p.dim(),
        });
    }
    if projectively_equal(p.coords(), q.coords()) {
        return Err(Error::DegenerateLine {
            witness: Some(p.clone()),
            reason: "the two points coincide".into(),
        });
    }
    let images: Vec<Form> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| Form::linear(&[a.clone(), b.clone()]))
        .collect();
    FreePresentation::unchecked(
        1,
        pres.f2().to_vec(),
        pres.f1().to_vec(),
        pres.f0().to_vec(),
        pres.a1().substitute(&images)?,
        pres.a2().substitute(&images)?,
    )
}

const LINE_RANK_PROBES: usize = 12;

/// Splitting type on the line through `p` and `q`, read off the ladder of
/// `h0(E|_l(m))`.
pub fn restrict_to_line(
    pres: &FreePresentation,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<SplittingType> {
    if pres.rank() != 2 {
        return Err(Error::Unsupported(format!(
            "splitting types are computed for rank 2, got rank {}",
            pres.rank()
        )));
    }
    let line = restrict_presentation(pres, p, q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x11_4e);
    let bound = crate::algebra::point::SAMPLE_COORD_BOUND;
    for _ in 0..LINE_RANK_PROBES {
        let s = Rat::from_integer(rng.gen_range(-bound..=bound).into());
        let t = Rat::from_integer(rng.gen_range(-bound..=bound).into());
        let Ok(st) = ProjPoint::new(vec![s.clone(), t.clone()]) else {
            continue;
        };
        if !line.is_locally_free_at(&st) {
            return Err(Error::DegenerateLine {
                witness: ProjPoint::combine(p, q, &st.coords()[0], &st.coords()[1]).ok(),
                reason: "presentation drops rank on the line".into(),
            });
        }
    }
    let degenerate = |reason: String| Error::DegenerateLine {
        witness: None,
        reason,
    };
    let mut ladder: BTreeMap<i64, i64> = BTreeMap::new();
    let mut h0 = |m: i64| -> Result<i64> {
        if let Some(&v) = ladder.get(&m) {
            return Ok(v);
        }
        let v = match h_vector(&line, m) {
            Ok(h) => h[0] as i64,
            Err(Error::NotExact(r)) => return Err(degenerate(r)),
            Err(e) => return Err(e),
        };
        ladder.insert(m, v);
        Ok(v)
    };
    let c1 = pres.chern_data().c1;
    // smallest twist with sections is -b
    let mut m = 0i64;
    if h0(0)? > 0 {
        while h0(m - 1)? > 0 {
            m -= 1;
            if m < -256 {
                return Err(degenerate("no vanishing twist found".into()));
            }
        }
    } else {
        while h0(m)? == 0 {
            m += 1;
            if m > 256 {
                return Err(degenerate("no twist with sections found".into()));
            }
        }
    }
    let b = -m;
    let a = c1 - b;
    if a > b {
        return Err(degenerate(format!("ladder gives a = {a} > b = {b}")));
    }
    for k in -4..=0 {
        h0(k)?;
    }
    for (&k, &v) in ladder.iter() {
        if split_h0(a, b, k) != v {
            return Err(degenerate(format!(
                "h0(E|l({k})) = {v} does not fit O({a}) + O({b})"
            )));
        }
    }
    Ok(SplittingType { a, b })
}
