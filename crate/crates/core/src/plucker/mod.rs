//! Maps to the Grassmannian of lines, written in Plücker coordinates.

pub mod embedding;
pub mod interpolated;
pub mod line;
pub mod map;
pub mod symbolic;

pub use embedding::{check_embedding, EmbeddingReport, Verdict};
pub use interpolated::plucker_interpolated;
pub use line::{quotient_line_at, LineInPN};
pub use map::{join_map, pair_count, pair_index, pairs, verify_plucker_relations, PluckerMap};
pub use symbolic::plucker_symbolic_det;
