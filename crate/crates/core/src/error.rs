use thiserror::Error;

use crate::algebra::ProjPoint;

/// Every fallible operation in the crate reports through this type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("mismatched number of variables: {left} vs {right}")]
    MismatchedVars { left: usize, right: usize },

    #[error("form degrees do not match: {left} vs {right}")]
    MismatchedDegrees { left: u32, right: u32 },

    #[error("matrix shape mismatch: {0}")]
    MatrixShape(String),

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("no form of degree {degree} fits the samples")]
    InconsistentSamples { degree: u32 },

    #[error("samples do not determine a form of degree {degree} (rank {rank} < {needed})")]
    Underdetermined {
        degree: u32,
        rank: usize,
        needed: usize,
    },

    #[error("could not draw a point off the degeneracy locus in {attempts} attempts")]
    SamplingExhausted { attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("constant term {0} is not a unit in the Chow ring")]
    NonUnitConstant(String),

    #[error("ambient dimensions differ: P^{left} vs P^{right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("Euler characteristic {0} is not an integer")]
    NonIntegerChi(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("cokernel is not locally free at {witness}")]
    NotLocallyFree { witness: ProjPoint },

    #[error("specification is Chern-only and has no free presentation: {0}")]
    NotPresentable(String),

    #[error("resolution length {0} is not supported (at most 2)")]
    UnsupportedResolutionLength(usize),

    #[error("presentation is not exact: {0}")]
    NotExact(String),

    #[error("restriction to the line is not locally free{}", witness_suffix(.witness))]
    DegenerateLine {
        witness: Option<ProjPoint>,
        reason: String,
    },

    #[error("first Chern class is {0}, expected 3")]
    WrongFirstChern(i64),

    #[error("bundle is not in M(3,6): {0}")]
    NotInM36(String),

    #[error("minimal resolution shape {0} is none of the known M(3,6) types")]
    UnrecognizedResolution(String),

    #[error("determinant construction needs length one and |F1| = |F0| - 2: {0}")]
    ShapeMismatch(String),

    #[error("Pluecker coordinates have degree {computed}, expected {expected}")]
    DegreeMismatch { expected: i64, computed: i64 },

    #[error("bundle is not globally generated at {0}")]
    NotGloballyGeneratedAt(ProjPoint),

    #[error("map is not given by forms of degree {degree}: {reason}")]
    InterpolationInconsistent { degree: u32, reason: String },

    #[error("unknown case id {0:?}")]
    UnknownCase(String),

    #[error("{0}")]
    Unsupported(String),
}

fn witness_suffix(w: &Option<ProjPoint>) -> String {
    match w {
        Some(p) => format!(" at {p}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
