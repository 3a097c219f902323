use std::collections::BTreeMap;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bundle::catalog::{self, Case, CaseId};
use crate::bundle::{
    is_globally_generated, resolution_type_M36, GenerationVerdict, ResolutionType,
};
use crate::error::Error;

use super::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub label: String,
    pub resolution: Option<ResolutionType>,
    pub generation: Option<GenerationVerdict>,
    pub witness_on_degeneracy_line: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratificationReport {
    pub samples: usize,
    pub seed: u64,
    /// Outcome label -> count over the sampled Steiner-shaped presentations.
    pub counts: BTreeMap<String, usize>,
    pub type4_h0_zero: usize,
    pub representatives: Vec<Representative>,
}

impl StratificationReport {
    pub fn type4_fraction(&self) -> f64 {
        self.type4_h0_zero as f64 / self.samples.max(1) as f64
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new(
            format!("stratification of M(3,6), {} samples", self.samples),
            self.seed,
        );
        r.push(Check::new(
            "open_stratum_share",
            self.type4_h0_zero * 100 >= 95 * self.samples,
            ">= 95% type 4 with h0(E(-1)) = 0",
            format!("{}/{}", self.type4_h0_zero, self.samples),
        ));
        for (k, v) in &self.counts {
            r.note(format!("{k}: {v}"));
        }
        for rep in &self.representatives {
            let kind = rep.resolution.as_ref().map(|t| (t.kind, t.h0_e_minus_1));
            let gen = rep.generation.as_ref();
            match rep.label.as_str() {
                "type 1" => {
                    r.push(Check::new(
                        "type_1_representative",
                        kind == Some((1, 1)) && gen.is_some_and(|g| g.generated),
                        "type 1, h0(E(-1)) = 1, globally generated",
                        format!("{kind:?}, generated {:?}", gen.map(|g| g.generated)),
                    ));
                }
                _ => {
                    r.push(
                        Check::new(
                            "type_3_representative",
                            kind == Some((3, 2))
                                && gen.is_some_and(|g| !g.generated)
                                && rep.witness_on_degeneracy_line == Some(true),
                            "type 3, h0(E(-1)) = 2, not generated at a point of the degeneracy line",
                            format!(
                                "{kind:?}, generated {:?}, witness on line {:?}",
                                gen.map(|g| g.generated),
                                rep.witness_on_degeneracy_line
                            ),
                        )
                        .with_witness(gen.and_then(|g| g.witness.clone())),
                    );
                }
            }
        }
        r
    }
}

fn outcome_label(e: &Error) -> String {
    match e {
        Error::NotLocallyFree { .. } => "not locally free".into(),
        Error::NotInM36(_) => "not stable".into(),
        Error::UnrecognizedResolution(_) => "unrecognized".into(),
        other => format!("error: {other}"),
    }
}

/// Samples random `5 x 3` linear Steiner matrices and classifies each, then
/// classifies the fixed type-1 and type-3 representatives.
pub fn stratify(samples: usize, seed: u64) -> StratificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut type4_h0_zero = 0;
    for _ in 0..samples {
        let label = match catalog::steiner(&mut rng).and_then(|p| resolution_type_M36(&p)) {
            Ok(t) => {
                if t.kind == 4 && t.h0_e_minus_1 == 0 {
                    type4_h0_zero += 1;
                }
                format!("type {} (h0(E(-1)) = {})", t.kind, t.h0_e_minus_1)
            }
            Err(e) => outcome_label(&e),
        };
        *counts.entry(label).or_default() += 1;
    }

    let mut representatives = Vec::new();
    let type1 = catalog::presentation(CaseId::plane(Case::C4b));
    representatives.push(match type1 {
        Ok(p) => Representative {
            label: "type 1".into(),
            resolution: resolution_type_M36(&p).ok(),
            generation: is_globally_generated(&p, 50, &p.degeneracy_probes(4, seed), seed).ok(),
            witness_on_degeneracy_line: None,
        },
        Err(_) => Representative {
            label: "type 1".into(),
            resolution: None,
            generation: None,
            witness_on_degeneracy_line: None,
        },
    });
    let type3 = catalog::type3_representative(seed);
    representatives.push(match type3 {
        Ok(p) => {
            let generation =
                is_globally_generated(&p, 50, &p.degeneracy_probes(4, seed), seed).ok();
            let line = p.a1().get(0, 0).clone();
            let on_line = generation
                .as_ref()
                .and_then(|g| g.witness_point.as_ref())
                .map(|x| line.eval(x.coords()).is_zero());
            Representative {
                label: "type 3".into(),
                resolution: resolution_type_M36(&p).ok(),
                generation,
                witness_on_degeneracy_line: on_line,
            }
        }
        Err(_) => Representative {
            label: "type 3".into(),
            resolution: None,
            generation: None,
            witness_on_degeneracy_line: None,
        },
    });

    StratificationReport {
        samples,
        seed,
        counts,
        type4_h0_zero,
        representatives,
    }
}
