//! Dense exact linear algebra: matrices, univariate polynomials, and
//! subspaces in reduced row-echelon canonical form.

mod matrix;
mod poly;
mod subspace;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use subspace::{
    completion_transversal, generated_module, generated_module_run, invariant_core,
    invariant_core_run, quotient_action, FixpointRun, InducedActionError, Subspace,
};
