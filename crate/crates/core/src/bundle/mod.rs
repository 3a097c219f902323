pub mod catalog;
pub mod cohomology;
pub mod generation;
pub mod minimal;
pub mod presentation;
pub mod restrict;
pub mod sections;
pub mod spec;

pub use catalog::{Case, CaseId};
pub use cohomology::{cohomology_table, h_vector, CohomologyTable};
pub use generation::{is_globally_generated, is_stable_c1_3, GenerationVerdict};
pub use minimal::{minimal_reduction, resolution_type_M36, ResolutionType};
pub use presentation::{FormMatrix, FreePresentation};
pub use restrict::{restrict_to_line, SplittingType};
pub use sections::{h0_basis, SectionBasis};
pub use spec::{chern_of, expand_to_presentation, parse_spec, BundleSpec};
