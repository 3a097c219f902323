pub mod form;
pub mod interpolate;
pub mod matrix;
pub mod point;
pub mod rat;

pub use form::{
    basis, dim_forms, form_eval, form_mul, form_partial, monomial_basis, Form, Monomial,
    MonomialBasis,
};
pub use interpolate::{binary_resultant, interpolate_form, interpolate_many};
pub use matrix::{det, kernel_basis, matrix_rank, RatMatrix};
pub use point::{normalize, projectively_equal, ProjPoint};
pub use rat::{parse_rat, rat, ratio, Rat};
