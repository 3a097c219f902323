use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    basis, dim_forms, interpolate_many, projectively_equal, Form, ProjPoint, Rat, RatMatrix,
};
use crate::bundle::{FreePresentation, SectionBasis};
use crate::error::{Error, Result};

use super::line::quotient_line_at;
use super::map::PluckerMap;

const HOLDOUT: usize = 20;
const SEED: u64 = 0x91a7;

fn monomial_row(n: usize, d: u32, x: &[Rat]) -> Vec<Rat> {
    basis(n, d as i64)
        .monomials
        .iter()
        .map(|m| m.eval(x))
        .collect()
}

/// Recovers the coordinate forms from pointwise quotient lines.
///
/// Pointwise Plücker vectors are known only up to scale. A reference form
/// `w_r` is first pinned down from the proportionality conditions
/// `w_r p_c = w_c p_r` at the samples, then every sample is rescaled so its
/// reference entry equals `w_r(x)` and each coordinate is interpolated.
pub fn plucker_interpolated(
    pres: &FreePresentation,
    sections: &SectionBasis,
    degree: u32,
) -> Result<PluckerMap> {
    let n = pres.n();
    let target = sections
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::Unsupported("no sections".into()))?;
    let inconsistent = |reason: String| Error::InterpolationInconsistent { degree, reason };
    let b = dim_forms(n, degree as i64);
    let count = 2 * b + 8;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut samples: Vec<(ProjPoint, Vec<Rat>)> = Vec::with_capacity(count);
    for _ in 0..count {
        let x = ProjPoint::random(&mut rng, n);
        let p = quotient_line_at(pres, sections, &x)?.plucker_vector();
        samples.push((x, p));
    }
    let width = samples[0].1.len();
    let support: Vec<usize> = (0..width)
        .map(|c| samples.iter().filter(|(_, p)| !p[c].is_zero()).count())
        .collect();
    let r = (0..width)
        .max_by_key(|&c| (support[c], std::cmp::Reverse(c)))
        .expect("at least one coordinate");
    let rows: Vec<Vec<Rat>> = samples
        .iter()
        .map(|(x, _)| monomial_row(n, degree, x.coords()))
        .collect();

    // linear conditions cutting out the admissible reference forms
    let mut constraints: Vec<Vec<Rat>> = Vec::new();
    let mut dim = b;
    for c in (0..width).filter(|&c| c != r && support[c] > 0) {
        let mut sys = RatMatrix::zeros(samples.len(), 2 * b);
        for (k, (_, p)) in samples.iter().enumerate() {
            for (t, m) in rows[k].iter().enumerate() {
                sys.set(k, t, &p[c] * m);
                sys.set(k, b + t, -(&p[r] * m));
            }
        }
        let proj: Vec<Vec<Rat>> = sys
            .kernel_basis()
            .into_iter()
            .map(|v| v[..b].to_vec())
            .collect();
        if proj.is_empty() {
            return Err(inconsistent(format!(
                "coordinates {r} and {c} admit no common degree-{degree} fit"
            )));
        }
        constraints.extend(RatMatrix::from_rows(proj)?.kernel_basis());
        let cur = if constraints.is_empty() {
            b
        } else {
            b - RatMatrix::from_rows(constraints.clone())?.rank()
        };
        if cur == 0 {
            return Err(inconsistent(
                "no reference form fits all coordinates".into(),
            ));
        }
        dim = cur;
        if dim == 1 {
            break;
        }
    }
    if dim != 1 {
        return Err(inconsistent(format!(
            "samples leave a {dim}-dimensional family of reference forms"
        )));
    }
    let w_r = if constraints.is_empty() {
        vec![Rat::from_integer(1.into())]
    } else {
        RatMatrix::from_rows(constraints)?.kernel_basis().remove(0)
    };
    let w_r = Form::from_coefficient_vector(n + 1, degree, &w_r);

    let mut fit_points = Vec::new();
    let mut fit_values = Vec::new();
    for (x, p) in &samples {
        let w = w_r.eval(x.coords());
        if w.is_zero() != p[r].is_zero() {
            return Err(inconsistent(format!(
                "reference form and coordinate {r} disagree at {x}"
            )));
        }
        if w.is_zero() {
            continue;
        }
        let lambda = &w / &p[r];
        fit_points.push(x);
        fit_values.push(p.iter().map(|v| v * &lambda).collect::<Vec<_>>());
        if fit_points.len() >= b + 8 {
            break;
        }
    }
    let forms = interpolate_many(n, degree, &fit_points, &fit_values).map_err(|e| match e {
        Error::InconsistentSamples { .. } | Error::Underdetermined { .. } => {
            inconsistent(e.to_string())
        }
        other => other,
    })?;
    let forms: Vec<Form> = forms
        .into_iter()
        .map(|f| {
            if f.is_zero() {
                Form::zero(n + 1, degree)
            } else {
                f
            }
        })
        .collect();
    for _ in 0..HOLDOUT {
        let x = ProjPoint::random(&mut rng, n);
        let p = quotient_line_at(pres, sections, &x)?.plucker_vector();
        let w: Vec<Rat> = forms.iter().map(|f| f.eval(x.coords())).collect();
        if !projectively_equal(&p, &w) {
            return Err(inconsistent(format!("holdout point {x} does not fit")));
        }
    }
    PluckerMap::new(n, target, forms)
}
