//! Quasisymmetric functions over `ℤ[q]` in the monomial basis, with the
//! fundamental basis available through change-of-basis maps.

mod composition;
mod function;
mod poly;
mod truncate;

pub use composition::{refines, Composition};
pub use function::{binomial, render_terms, QSymFunction, Tensor};
pub use poly::QPoly;
pub use truncate::TruncatedExpansion;
