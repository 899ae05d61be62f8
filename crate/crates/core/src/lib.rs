//! Exact construction, verification, and reduction of tridiagonal pairs of
//! linear maps over the rationals and over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: canonical exact scalars over Q or GF(p).
//! * [`linalg`]: dense matrices, polynomials, and subspaces with reduced
//!   row-echelon canonical forms, fixpoint closures, and induced quotient
//!   actions.
//! * [`spectral`]: eigenvalue verification and primitive idempotents of
//!   diagonalizable operators.
//! * [`tdcore`]: assembly and axiom checking of (mock) tridiagonal systems,
//!   split sequences, and parameter arrays.
//! * [`quotient`]: the principal module, its maximal proper submodule, and
//!   the induced system on the quotient.
//! * [`diameter2`]: the concrete four-dimensional family with diameter two,
//!   including closed-form idempotents and the degenerate reduction.
//! * [`sampling`]: seeded random generators used by the test suites.

pub mod diameter2;
pub mod field;
pub mod linalg;
pub mod quotient;
pub mod sampling;
pub mod spectral;
pub mod tdcore;

pub use field::{FieldError, FieldScalar, FieldSpec};
pub use linalg::{FixpointRun, InducedActionError, Matrix, Polynomial, Subspace};
pub use spectral::{EigenSystem, SpectralError};
pub use tdcore::{MtdSystem, ParameterArray, TdCoreError};
