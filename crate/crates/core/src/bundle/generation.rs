use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cohomology::h_vector;
use super::presentation::FreePresentation;
use super::sections::{fibre_rank, h0_basis, SectionBasis};
use crate::algebra::ProjPoint;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationVerdict {
    pub generated: bool,
    pub points_checked: usize,
    pub witness: Option<String>,
    #[serde(skip)]
    pub witness_point: Option<ProjPoint>,
    pub fibre_rank_at_witness: Option<usize>,
}

/// Checks that the sections span the fibre at `sample_points` seeded random
/// points and at every extra probe point (probes first).
pub fn is_globally_generated(
    pres: &FreePresentation,
    sample_points: usize,
    extra_probe_points: &[ProjPoint],
    seed: u64,
) -> Result<GenerationVerdict> {
    let sections = h0_basis(pres)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let randoms: Vec<ProjPoint> = (0..sample_points)
        .map(|_| ProjPoint::random(&mut rng, pres.n()))
        .collect();
    Ok(generated_at(
        pres,
        &sections,
        extra_probe_points.iter().chain(&randoms),
    ))
}

pub fn generated_at<'a>(
    pres: &FreePresentation,
    sections: &SectionBasis,
    points: impl IntoIterator<Item = &'a ProjPoint>,
) -> GenerationVerdict {
    let rank = pres.rank();
    let mut checked = 0;
    for x in points {
        checked += 1;
        let r = fibre_rank(pres, sections, x);
        if r < rank {
            return GenerationVerdict {
                generated: false,
                points_checked: checked,
                witness: Some(x.to_string()),
                witness_point: Some(x.clone()),
                fibre_rank_at_witness: Some(r),
            };
        }
    }
    GenerationVerdict {
        generated: true,
        points_checked: checked,
        witness: None,
        witness_point: None,
        fibre_rank_at_witness: None,
    }
}

/// For rank 2 and `c1 = 3`: stable iff `h0(E(-2)) = 0`.
pub fn is_stable_c1_3(pres: &FreePresentation) -> Result<bool> {
    let cd = pres.chern_data();
    if cd.c1 != 3 {
        return Err(Error::WrongFirstChern(cd.c1));
    }
    if cd.rank != 2 {
        return Err(Error::Unsupported(format!(
            "stability test needs rank 2, got {}",
            cd.rank
        )));
    }
    Ok(h_vector(pres, -2)?[0] == 0)
}
