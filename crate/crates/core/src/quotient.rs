//! The principal module generated by the first dual eigenspace, its unique
//! maximal proper submodule, and the induced system on the quotient.
//!
//! Throughout, T denotes the algebra of operators generated by A and A*.
//! For a sharp system the chain is: P = T E*_0 V, K = P intersect ker(E*_0),
//! and M = the largest T-invariant subspace of K. M turns out to be the
//! unique maximal proper T-submodule of P, the quotient L = P/M is
//! irreducible, and the actions induced on L form a sharp tridiagonal system
//! with the same parameter array as the original. Everything here is
//! computed exactly by the fixpoint closures in [`crate::linalg`].

use std::collections::VecDeque;
use std::fmt;

use crate::field::FieldScalar;
use crate::linalg::{
    completion_transversal, generated_module, invariant_core, quotient_action, Matrix, Subspace,
};
use crate::tdcore::{MtdSystem, ParameterArray, TdCoreError};

/// Errors from the quotient construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    /// rank(E*_0) != 1; the construction needs a sharp system.
    NotSharp,
    /// The parent's split sequence does not exist, so the system is not
    /// mock tridiagonal and no quotient is defined.
    Parameter(TdCoreError),
    /// An internal consistency assertion failed. The construction guarantees
    /// these properties for sharp mock tridiagonal systems, so this variant
    /// signals that the input violates the tridiagonal shape or corner
    /// axioms (or a bug).
    Internal(String),
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::NotSharp => write!(f, "system is not sharp: rank(E*_0) != 1"),
            QuotientError::Parameter(e) => write!(f, "no split sequence: {e}"),
            QuotientError::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for QuotientError {}

/// A basis of the unital algebra generated by two operators, found by a
/// breadth-first worklist over right-multiplications.
///
/// The returned matrices are words in A and A* (the identity first) whose
/// span is right-multiplication closed, hence equals the whole algebra. The
/// basis order is deterministic: words are visited in breadth-first order.
pub fn algebra_closure(a: &Matrix, a_star: &Matrix) -> Vec<Matrix> {
    assert!(
        a.is_square() && a_star.is_square(),
        "operators must be square"
    );
    assert_eq!(a.rows(), a_star.rows(), "operators of different sizes");
    assert_eq!(a.field(), a_star.field(), "operators over different fields");
    let n = a.rows();
    let field = a.field();
    let mut span = Subspace::zero(field, n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue: VecDeque<Matrix> = VecDeque::new();
    queue.push_back(Matrix::identity(field, n));
    queue.push_back(a.clone());
    queue.push_back(a_star.clone());
    let mut pops = 0usize;
    while let Some(m) = queue.pop_front() {
        pops += 1;
        // Every accepted element enqueues two successors, and at most n*n
        // elements are accepted, so the worklist provably drains.
        assert!(pops <= 3 + 2 * n * n, "closure worklist exceeded its bound");
        let v = vectorize(&m);
        if span.contains_vector(&v) {
            continue;
        }
        span = span.sum(&Subspace::span_of_vector(&v));
        queue.push_back(&m * a);
        queue.push_back(&m * a_star);
        basis.push(m);
    }
    basis
}

fn vectorize(m: &Matrix) -> Vec<FieldScalar> {
    (0..m.rows())
        .flat_map(|i| m.row(i).iter().cloned())
        .collect()
}

/// P = T E*_0 V: the smallest subspace containing the image of E*_0 that is
/// invariant under both operators.
pub fn principal_module(sys: &MtdSystem) -> Subspace {
    let seed = sys.e_star(0).column_space();
    generated_module(&seed, &[sys.a().clone(), sys.a_star().clone()])
}

/// M: the largest T-invariant subspace of P intersect ker(E*_0).
///
/// For a sharp system every proper submodule of P kills E*_0 (the image of
/// E*_0 is a line that generates all of P), so every proper submodule lies
/// in the corner kernel and therefore in M; M is the unique maximal one.
pub fn maximal_submodule(sys: &MtdSystem) -> Result<Subspace, QuotientError> {
    if !sys.is_sharp() {
        return Err(QuotientError::NotSharp);
    }
    let p = principal_module(sys);
    let k = p.intersect(&sys.e_star(0).kernel());
    Ok(invariant_core(&k, &[sys.a().clone(), sys.a_star().clone()]))
}

/// What stops a sharp system from being tridiagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdObstruction {
    /// T E*_0 V is a proper subspace, so the module is not generated.
    PrincipalModuleProper,
    /// A nonzero proper submodule survives inside T E*_0 V.
    NonzeroMaximalSubmodule,
}

impl fmt::Display for TdObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdObstruction::PrincipalModuleProper => {
                write!(f, "T E*_0 V is a proper subspace of V")
            }
            TdObstruction::NonzeroMaximalSubmodule => {
                write!(f, "T E*_0 V contains a nonzero proper submodule")
            }
        }
    }
}

/// Verdict of the irreducibility test, with a witness subspace on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdVerdict {
    Td,
    NotTd {
        obstruction: TdObstruction,
        witness: Subspace,
    },
}

impl TdVerdict {
    pub fn is_td(&self) -> bool {
        matches!(self, TdVerdict::Td)
    }
}

/// Decides whether a sharp system is irreducible (tridiagonal rather than
/// merely mock tridiagonal): V must equal T E*_0 V and the maximal proper
/// submodule must vanish.
pub fn is_td(sys: &MtdSystem) -> Result<TdVerdict, QuotientError> {
    if !sys.is_sharp() {
        return Err(QuotientError::NotSharp);
    }
    let p = principal_module(sys);
    if !p.is_full() {
        return Ok(TdVerdict::NotTd {
            obstruction: TdObstruction::PrincipalModuleProper,
            witness: p,
        });
    }
    let m = maximal_submodule(sys)?;
    if !m.is_zero() {
        return Ok(TdVerdict::NotTd {
            obstruction: TdObstruction::NonzeroMaximalSubmodule,
            witness: m,
        });
    }
    Ok(TdVerdict::Td)
}

/// Support data of the induced idempotents relative to the parent ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSupport {
    /// Indices i with induced E_i nonzero on the quotient.
    pub primal: Vec<usize>,
    /// Indices i with induced E*_i nonzero on the quotient.
    pub dual: Vec<usize>,
    /// First primal index and primal span (max - min).
    pub r: usize,
    pub k: usize,
    /// First dual index and dual span.
    pub t: usize,
    pub k_star: usize,
}

/// Everything the quotient construction produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    /// P = T E*_0 V.
    pub principal_module: Subspace,
    /// K = P intersect ker(E*_0).
    pub corner_kernel: Subspace,
    /// M, the unique maximal proper submodule of P.
    pub maximal_submodule: Subspace,
    /// dim(P/M).
    pub quotient_dim: usize,
    /// Representatives whose classes form the working basis of P/M.
    pub transversal: Vec<Vec<FieldScalar>>,
    pub induced_a: Matrix,
    pub induced_a_star: Matrix,
    pub induced_e: Vec<Matrix>,
    pub induced_e_star: Vec<Matrix>,
    pub support: QuotientSupport,
    /// The induced pair assembled and verified as a system in its own right.
    pub induced_system: MtdSystem,
    /// The parameter array, shared by the parent and the quotient.
    pub parameter_array: ParameterArray,
}

/// Runs the whole reduction for a sharp system: builds P, K, M, a
/// deterministic transversal, the induced operators and idempotents on
/// L = P/M, and verifies that the result is a sharp tridiagonal system with
/// the parent's parameter array.
pub fn quotient_system(sys: &MtdSystem) -> Result<QuotientReport, QuotientError> {
    if !sys.is_sharp() {
        return Err(QuotientError::NotSharp);
    }
    let parent_pa = sys.parameter_array().map_err(QuotientError::Parameter)?;
    let d = sys.diameter();
    let ops = [sys.a().clone(), sys.a_star().clone()];

    let principal = generated_module(&sys.e_star(0).column_space(), &ops);
    let corner_kernel = principal.intersect(&sys.e_star(0).kernel());
    let maximal = invariant_core(&corner_kernel, &ops);
    let transversal = completion_transversal(&maximal, &principal);
    let quotient_dim = transversal.len();
    if quotient_dim < d + 1 {
        return Err(QuotientError::Internal(format!(
            "quotient dimension {quotient_dim} is below the floor {}",
            d + 1
        )));
    }

    let induce = |op: &Matrix, what: &str| -> Result<Matrix, QuotientError> {
        quotient_action(op, &maximal, &transversal)
            .map_err(|e| QuotientError::Internal(format!("inducing {what}: {e}")))
    };
    let induced_a = induce(sys.a(), "A")?;
    let induced_a_star = induce(sys.a_star(), "A*")?;
    let induced_e: Vec<Matrix> = (0..=d)
        .map(|i| induce(sys.e(i), &format!("E_{i}")))
        .collect::<Result<_, _>>()?;
    let induced_e_star: Vec<Matrix> = (0..=d)
        .map(|i| induce(sys.e_star(i), &format!("E*_{i}")))
        .collect::<Result<_, _>>()?;

    let support_of = |idempotents: &[Matrix]| -> Vec<usize> {
        idempotents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    };
    let primal = support_of(&induced_e);
    let dual = support_of(&induced_e_star);
    if primal.is_empty() || dual.is_empty() {
        return Err(QuotientError::Internal(
            "induced idempotents all vanish".to_owned(),
        ));
    }
    let support = QuotientSupport {
        r: primal[0],
        k: primal[primal.len() - 1] - primal[0],
        t: dual[0],
        k_star: dual[dual.len() - 1] - dual[0],
        primal,
        dual,
    };
    let everything: Vec<usize> = (0..=d).collect();
    if support.primal != everything || support.dual != everything {
        return Err(QuotientError::Internal(format!(
            "induced support is not the full index range: primal {:?}, dual {:?}",
            support.primal, support.dual
        )));
    }

    let induced_system = MtdSystem::assemble(
        induced_a.clone(),
        sys.thetas().to_vec(),
        induced_a_star.clone(),
        sys.theta_stars().to_vec(),
    )
    .map_err(|e| QuotientError::Internal(format!("induced pair fails assembly: {e}")))?;
    for i in 0..=d {
        if induced_system.e(i) != &induced_e[i] || induced_system.e_star(i) != &induced_e_star[i] {
            return Err(QuotientError::Internal(format!(
                "idempotent {i} disagrees between the induced action and reassembly"
            )));
        }
    }
    if !induced_system.is_sharp() {
        return Err(QuotientError::Internal("quotient is not sharp".to_owned()));
    }
    if !induced_system.check_tridiagonal_shape().passed() {
        return Err(QuotientError::Internal(
            "quotient violates the tridiagonal shape".to_owned(),
        ));
    }
    if !induced_system.check_mtd_corner().passed() {
        return Err(QuotientError::Internal(
            "quotient violates the corner condition".to_owned(),
        ));
    }
    match is_td(&induced_system)? {
        TdVerdict::Td => {}
        TdVerdict::NotTd { obstruction, .. } => {
            return Err(QuotientError::Internal(format!(
                "quotient is not irreducible: {obstruction}"
            )));
        }
    }
    let induced_pa = induced_system
        .parameter_array()
        .map_err(QuotientError::Parameter)?;
    if induced_pa != parent_pa {
        return Err(QuotientError::Internal(
            "quotient parameter array differs from the parent's".to_owned(),
        ));
    }

    Ok(QuotientReport {
        principal_module: principal,
        corner_kernel,
        maximal_submodule: maximal,
        quotient_dim,
        transversal,
        induced_a,
        induced_a_star,
        induced_e,
        induced_e_star,
        support,
        induced_system,
        parameter_array: parent_pa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn ints(ns: &[i64]) -> Vec<FieldScalar> {
        ns.iter().map(|&n| q().from_integer(n)).collect()
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| q().from_integer(n)).collect())
                .collect(),
        )
    }

    /// Oracle for the closure: repeatedly right-multiply the full list of
    /// accumulated words and re-span, entirely independent of the worklist.
    fn closure_span_oracle(a: &Matrix, a_star: &Matrix) -> Subspace {
        let n = a.rows();
        let mut words = vec![Matrix::identity(a.field(), n)];
        let mut span = Subspace::from_rows(a.field(), n * n, vec![vectorize(&words[0])]);
        loop {
            let mut next_words = words.clone();
            for w in &words {
                next_words.push(w * a);
                next_words.push(w * a_star);
            }
            let next_span =
                Subspace::from_rows(a.field(), n * n, next_words.iter().map(vectorize).collect());
            if next_span.dim() == span.dim() {
                return span;
            }
            words = next_words;
            span = next_span;
        }
    }

    #[test]
    fn closure_of_the_identity_alone() {
        let i = Matrix::identity(q(), 2);
        let basis = algebra_closure(&i, &i);
        assert_eq!(basis, vec![Matrix::identity(q(), 2)]);
    }

    #[test]
    fn shift_pair_generates_the_full_matrix_algebra() {
        let up = int_matrix(&[&[0, 1], &[0, 0]]);
        let down = int_matrix(&[&[0, 0], &[1, 0]]);
        let basis = algebra_closure(&up, &down);
        assert_eq!(basis.len(), 4);
        assert_eq!(basis[0], Matrix::identity(q(), 2));
        let span = Subspace::from_rows(q(), 4, basis.iter().map(vectorize).collect());
        assert_eq!(span, closure_span_oracle(&up, &down));
    }

    #[test]
    fn commuting_diagonals_span_a_small_algebra() {
        let a = Matrix::diagonal(&ints(&[0, 1, 2]));
        let b = Matrix::diagonal(&ints(&[2, 1, 0]));
        let basis = algebra_closure(&a, &b);
        // Diagonal matrices with 3 distinct joint eigenvalues: dimension 3.
        assert_eq!(basis.len(), 3);
        assert_eq!(
            Subspace::from_rows(q(), 9, basis.iter().map(vectorize).collect()),
            closure_span_oracle(&a, &b)
        );
    }

    fn diagonal_system() -> MtdSystem {
        MtdSystem::assemble(
            Matrix::diagonal(&ints(&[0, 1, 2])),
            ints(&[0, 1, 2]),
            Matrix::diagonal(&ints(&[2, 1, 0])),
            ints(&[2, 1, 0]),
        )
        .unwrap()
    }

    #[test]
    fn commuting_pair_confines_the_principal_module() {
        let sys = diagonal_system();
        let p = principal_module(&sys);
        assert_eq!(p, Subspace::from_rows(q(), 3, vec![ints(&[1, 0, 0])]));
        match is_td(&sys).unwrap() {
            TdVerdict::NotTd {
                obstruction: TdObstruction::PrincipalModuleProper,
                witness,
            } => assert_eq!(witness, p),
            other => panic!("expected a proper principal module, got {other:?}"),
        }
        // The corner kernel is zero here, so the maximal submodule is too.
        assert!(maximal_submodule(&sys).unwrap().is_zero());
    }

    #[test]
    fn sharpness_gates_the_constructions() {
        let sys = MtdSystem::assemble(
            Matrix::diagonal(&ints(&[0, 1, 1])),
            ints(&[0, 1]),
            Matrix::diagonal(&ints(&[5, 5, 6])),
            ints(&[5, 6]),
        )
        .unwrap();
        assert!(!sys.is_sharp());
        assert_eq!(maximal_submodule(&sys), Err(QuotientError::NotSharp));
        assert_eq!(is_td(&sys), Err(QuotientError::NotSharp));
        assert!(matches!(
            quotient_system(&sys),
            Err(QuotientError::NotSharp)
        ));
    }
}
