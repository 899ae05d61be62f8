//! Assembly and axiom checking of (mock) tridiagonal systems.
//!
//! A system consists of two diagonalizable operators A and A* on one space,
//! each with a caller-chosen ordering of its distinct eigenvalues. The
//! orderings matter: the tridiagonal shape conditions and the corner
//! condition are stated against them, and reordering the eigenvalues changes
//! which systems pass. Axiom checks return reports with witnesses rather
//! than booleans, so a caller can say which product failed and where.

use std::fmt;

use crate::field::{FieldScalar, FieldSpec};
use crate::linalg::{Matrix, Polynomial};
use crate::spectral::{verify_diagonalizable, EigenSystem, SpectralError};

/// Errors from system assembly and parameter extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdCoreError {
    NotSquare,
    /// The two operators act on spaces of different dimension.
    DimensionMismatch {
        a: usize,
        a_star: usize,
    },
    FieldMismatch,
    /// The eigenvalue lists have different lengths, so no common diameter.
    EigenvalueCountMismatch {
        primal: usize,
        dual: usize,
    },
    /// One of the operators failed eigenvalue verification; `starred` tells
    /// which one.
    Spectral {
        starred: bool,
        source: SpectralError,
    },
    /// The operation needs rank(E*_0) = 1 and the system does not have it.
    NotSharp,
    /// E*_0 tau_i(A) E*_0 is not a scalar multiple of E*_0; the system
    /// violates the proportionality that defines the split sequence.
    NotScalarMultiple {
        index: usize,
    },
    /// Polynomial index beyond the diameter.
    IndexOutOfRange {
        index: usize,
        diameter: usize,
    },
}

impl fmt::Display for TdCoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdCoreError::NotSquare => write!(f, "operators must be square"),
            TdCoreError::DimensionMismatch { a, a_star } => {
                write!(f, "operator sizes differ: {a} vs {a_star}")
            }
            TdCoreError::FieldMismatch => write!(f, "inputs mix different fields"),
            TdCoreError::EigenvalueCountMismatch { primal, dual } => write!(
                f,
                "eigenvalue lists have different lengths: {primal} vs {dual}"
            ),
            TdCoreError::Spectral { starred, source } => {
                let which = if *starred { "A*" } else { "A" };
                write!(f, "eigenvalue verification failed for {which}: {source}")
            }
            TdCoreError::NotSharp => write!(f, "system is not sharp: rank(E*_0) != 1"),
            TdCoreError::NotScalarMultiple { index } => write!(
                f,
                "E*_0 tau_{index}(A) E*_0 is not a scalar multiple of E*_0"
            ),
            TdCoreError::IndexOutOfRange { index, diameter } => {
                write!(
                    f,
                    "polynomial index {index} exceeds the diameter {diameter}"
                )
            }
        }
    }
}

impl std::error::Error for TdCoreError {}

/// A pair of verified eigendecompositions on one space, with a common
/// diameter d = (number of eigenvalues) - 1 per operator.
///
/// Assembly only certifies diagonalizability and matching shapes; whether
/// the system satisfies the tridiagonal or corner axioms is asked separately
/// through the check methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtdSystem {
    field: FieldSpec,
    dim: usize,
    diameter: usize,
    eigen: EigenSystem,
    eigen_star: EigenSystem,
}

impl MtdSystem {
    /// Verifies both operators against their eigenvalue orderings and builds
    /// the system.
    pub fn assemble(
        a: Matrix,
        thetas: Vec<FieldScalar>,
        a_star: Matrix,
        theta_stars: Vec<FieldScalar>,
    ) -> Result<MtdSystem, TdCoreError> {
        if !a.is_square() || !a_star.is_square() {
            return Err(TdCoreError::NotSquare);
        }
        if a.rows() != a_star.rows() {
            return Err(TdCoreError::DimensionMismatch {
                a: a.rows(),
                a_star: a_star.rows(),
            });
        }
        let field = a.field();
        if a_star.field() != field
            || thetas.iter().any(|t| t.field() != field)
            || theta_stars.iter().any(|t| t.field() != field)
        {
            return Err(TdCoreError::FieldMismatch);
        }
        if thetas.len() != theta_stars.len() {
            return Err(TdCoreError::EigenvalueCountMismatch {
                primal: thetas.len(),
                dual: theta_stars.len(),
            });
        }
        assert!(!thetas.is_empty(), "empty eigenvalue lists");
        let eigen = verify_diagonalizable(&a, &thetas).map_err(|source| TdCoreError::Spectral {
            starred: false,
            source,
        })?;
        let eigen_star = verify_diagonalizable(&a_star, &theta_stars).map_err(|source| {
            TdCoreError::Spectral {
                starred: true,
                source,
            }
        })?;
        Ok(MtdSystem {
            field,
            dim: a.rows(),
            diameter: thetas.len() - 1,
            eigen,
            eigen_star,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// d, one less than the number of eigenvalues of either operator.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn a(&self) -> &Matrix {
        self.eigen.operator()
    }

    pub fn a_star(&self) -> &Matrix {
        self.eigen_star.operator()
    }

    pub fn thetas(&self) -> &[FieldScalar] {
        self.eigen.eigenvalues()
    }

    pub fn theta_stars(&self) -> &[FieldScalar] {
        self.eigen_star.eigenvalues()
    }

    pub fn e(&self, i: usize) -> &Matrix {
        self.eigen.idempotent(i)
    }

    pub fn e_star(&self, i: usize) -> &Matrix {
        self.eigen_star.idempotent(i)
    }

    pub fn eigen(&self) -> &EigenSystem {
        &self.eigen
    }

    pub fn eigen_star(&self) -> &EigenSystem {
        &self.eigen_star
    }

    /// Evaluates both sandwich families E_i A* E_j and E*_i A E*_j for all
    /// index pairs with |i - j| > 1 and reports every nonzero product.
    pub fn check_tridiagonal_shape(&self) -> ShapeReport {
        let mut violations = Vec::new();
        for starred in [false, true] {
            let (middle, idem): (&Matrix, &EigenSystem) = if starred {
                (self.a(), &self.eigen_star)
            } else {
                (self.a_star(), &self.eigen)
            };
            for i in 0..=self.diameter {
                for j in 0..=self.diameter {
                    if i.abs_diff(j) <= 1 {
                        continue;
                    }
                    let product = &(idem.idempotent(i) * middle) * idem.idempotent(j);
                    if let Some(witness) = first_nonzero_entry(&product) {
                        violations.push(ShapeViolation {
                            starred,
                            i,
                            j,
                            witness,
                        });
                    }
                }
            }
        }
        ShapeReport { violations }
    }

    /// Evaluates the two corner products E*_0 E_0 E*_0 and E*_0 E_d E*_0;
    /// the mock tridiagonal axiom asks both to be nonzero.
    pub fn check_mtd_corner(&self) -> CornerReport {
        let e0s = self.e_star(0);
        let corner_0 = &(e0s * self.e(0)) * e0s;
        let corner_d = &(e0s * self.e(self.diameter)) * e0s;
        CornerReport { corner_0, corner_d }
    }

    /// Sharp means dim(E*_0 V) = 1, i.e. rank(E*_0) = 1.
    pub fn is_sharp(&self) -> bool {
        self.e_star(0).rank() == 1
    }

    /// The split sequence zeta_0, ..., zeta_d of a sharp system.
    ///
    /// For each i the product E*_0 tau_i(A) E*_0 is a scalar multiple
    /// c_i E*_0; the split sequence rescales those factors as
    /// zeta_i = c_i prod_{j=1..i} (theta*_0 - theta*_j). By construction
    /// zeta_0 = 1.
    pub fn split_sequence(&self) -> Result<Vec<FieldScalar>, TdCoreError> {
        if !self.is_sharp() {
            return Err(TdCoreError::NotSharp);
        }
        let e0s = self.e_star(0);
        let (r0, c0, reference) =
            first_nonzero_entry(e0s).expect("a rank-1 matrix has a nonzero entry");
        let theta_stars = self.theta_stars();
        let mut zetas = Vec::with_capacity(self.diameter + 1);
        let mut factor = self.field.one();
        for i in 0..=self.diameter {
            if i > 0 {
                factor = &factor * &(&theta_stars[0] - &theta_stars[i]);
            }
            let tau = Polynomial::monic_from_roots(self.field, &self.thetas()[..i]);
            let sandwich = &(e0s * &tau.eval_matrix(self.a())) * e0s;
            let c = sandwich[(r0, c0)]
                .div(&reference)
                .expect("reference entry is nonzero");
            if sandwich != e0s.scalar_mul(&c) {
                return Err(TdCoreError::NotScalarMultiple { index: i });
            }
            zetas.push(&c * &factor);
        }
        Ok(zetas)
    }

    /// The full parameter array of a sharp system: both eigenvalue orderings
    /// plus the split sequence.
    pub fn parameter_array(&self) -> Result<ParameterArray, TdCoreError> {
        let zetas = self.split_sequence()?;
        Ok(ParameterArray::new(
            self.thetas().to_vec(),
            self.theta_stars().to_vec(),
            zetas,
        ))
    }
}

fn first_nonzero_entry(m: &Matrix) -> Option<(usize, usize, FieldScalar)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                return Some((i, j, m[(i, j)].clone()));
            }
        }
    }
    None
}

/// One nonzero sandwich product that the tridiagonal shape forbids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeViolation {
    /// false: the product E_i A* E_j; true: the product E*_i A E*_j.
    pub starred: bool,
    pub i: usize,
    pub j: usize,
    /// Row, column, and value of one nonzero entry of the product.
    pub witness: (usize, usize, FieldScalar),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub violations: Vec<ShapeViolation>,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The two corner products; the check passes when both are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerReport {
    pub corner_0: Matrix,
    pub corner_d: Matrix,
}

impl CornerReport {
    pub fn passed(&self) -> bool {
        !self.corner_0.is_zero() && !self.corner_d.is_zero()
    }
}

/// The polynomial ladder at one index i: tau_i has roots
/// theta_0, ..., theta_{i-1}; eta_i has roots theta_d, ..., theta_{d-i+1};
/// the starred pair uses the dual eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdPolynomials {
    pub tau: Polynomial,
    pub eta: Polynomial,
    pub tau_star: Polynomial,
    pub eta_star: Polynomial,
}

/// Builds the four ladder polynomials at index i for the given orderings.
pub fn td_polynomials(
    thetas: &[FieldScalar],
    theta_stars: &[FieldScalar],
    i: usize,
) -> Result<TdPolynomials, TdCoreError> {
    assert!(!thetas.is_empty(), "empty eigenvalue list");
    assert_eq!(
        thetas.len(),
        theta_stars.len(),
        "eigenvalue lists of different lengths"
    );
    let d = thetas.len() - 1;
    if i > d {
        return Err(TdCoreError::IndexOutOfRange {
            index: i,
            diameter: d,
        });
    }
    let field = thetas[0].field();
    let eta_roots = |list: &[FieldScalar]| -> Vec<FieldScalar> {
        list[d + 1 - i..].iter().rev().cloned().collect()
    };
    Ok(TdPolynomials {
        tau: Polynomial::monic_from_roots(field, &thetas[..i]),
        eta: Polynomial::monic_from_roots(field, &eta_roots(thetas)),
        tau_star: Polynomial::monic_from_roots(field, &theta_stars[..i]),
        eta_star: Polynomial::monic_from_roots(field, &eta_roots(theta_stars)),
    })
}

/// The data that classifies a sharp system up to isomorphism: the two
/// eigenvalue orderings and the split sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray {
    thetas: Vec<FieldScalar>,
    theta_stars: Vec<FieldScalar>,
    zetas: Vec<FieldScalar>,
}

impl ParameterArray {
    pub fn new(
        thetas: Vec<FieldScalar>,
        theta_stars: Vec<FieldScalar>,
        zetas: Vec<FieldScalar>,
    ) -> ParameterArray {
        assert!(!thetas.is_empty(), "empty parameter array");
        assert_eq!(thetas.len(), theta_stars.len(), "length mismatch");
        assert_eq!(thetas.len(), zetas.len(), "length mismatch");
        ParameterArray {
            thetas,
            theta_stars,
            zetas,
        }
    }

    pub fn diameter(&self) -> usize {
        self.thetas.len() - 1
    }

    pub fn thetas(&self) -> &[FieldScalar] {
        &self.thetas
    }

    pub fn theta_stars(&self) -> &[FieldScalar] {
        &self.theta_stars
    }

    pub fn zetas(&self) -> &[FieldScalar] {
        &self.zetas
    }
}

/// Outcome of one constraint clause. `Vacuous` marks a clause with an empty
/// index range, which holds by default but is reported distinctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Pass,
    Fail,
    Vacuous,
}

impl ClauseStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, ClauseStatus::Fail)
    }
}

/// Per-clause verdicts for the parameter-array feasibility constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    /// Clause (i): each eigenvalue ordering is duplicate-free.
    pub distinctness: ClauseStatus,
    /// Clause (ii): zeta_0 = 1, zeta_d != 0, and the weighted sum
    /// sum_i eta_{d-i}(theta_0) eta*_{d-i}(theta*_0) zeta_i is nonzero.
    pub nondegeneracy: ClauseStatus,
    /// The clause (ii) sum, kept as a witness.
    pub nondegeneracy_sum: FieldScalar,
    /// Clause (iii): the ratios (theta_{i-2} - theta_{i+1}) /
    /// (theta_{i-1} - theta_i) agree across 2 <= i <= d-1 and across both
    /// eigenvalue families. Vacuous for d <= 2.
    pub ratio_condition: ClauseStatus,
}

impl ConstraintReport {
    pub fn passed(&self) -> bool {
        self.distinctness.holds() && self.nondegeneracy.holds() && self.ratio_condition.holds()
    }
}

/// Checks the three feasibility constraints a parameter array of a sharp
/// system must satisfy.
pub fn check_constraints(pa: &ParameterArray) -> ConstraintReport {
    let d = pa.diameter();
    let field = pa.thetas()[0].field();
    let all_distinct = |list: &[FieldScalar]| {
        (0..list.len()).all(|i| ((i + 1)..list.len()).all(|j| list[i] != list[j]))
    };
    let distinctness = if all_distinct(pa.thetas()) && all_distinct(pa.theta_stars()) {
        ClauseStatus::Pass
    } else {
        ClauseStatus::Fail
    };

    let mut sum = field.zero();
    for (i, zeta) in pa.zetas().iter().enumerate() {
        let ladder =
            td_polynomials(pa.thetas(), pa.theta_stars(), d - i).expect("index within diameter");
        let weight =
            &ladder.eta.eval(&pa.thetas()[0]) * &ladder.eta_star.eval(&pa.theta_stars()[0]);
        sum = &sum + &(&weight * zeta);
    }
    let nondegeneracy = if pa.zetas()[0].is_one() && !pa.zetas()[d].is_zero() && !sum.is_zero() {
        ClauseStatus::Pass
    } else {
        ClauseStatus::Fail
    };

    let ratio_condition = if d <= 2 {
        ClauseStatus::Vacuous
    } else {
        ratio_condition_holds(pa.thetas())
            .zip(ratio_condition_holds(pa.theta_stars()))
            .and_then(|(r, r_star)| (r == r_star).then_some(()))
            .map_or(ClauseStatus::Fail, |()| ClauseStatus::Pass)
    };

    ConstraintReport {
        distinctness,
        nondegeneracy,
        nondegeneracy_sum: sum,
        ratio_condition,
    }
}

/// The common ratio of one eigenvalue family, or `None` when a denominator
/// vanishes or the ratios disagree.
fn ratio_condition_holds(thetas: &[FieldScalar]) -> Option<FieldScalar> {
    let d = thetas.len() - 1;
    let mut common: Option<FieldScalar> = None;
    for i in 2..d {
        let ratio = (&thetas[i - 2] - &thetas[i + 1])
            .div(&(&thetas[i - 1] - &thetas[i]))
            .ok()?;
        match &common {
            None => common = Some(ratio),
            Some(c) if *c == ratio => {}
            Some(_) => return None,
        }
    }
    common
}

#[cfg(test)]
mod tests {
    use super::*;

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

    /// Two diagonal operators with opposite eigenvalue orderings; satisfies
    /// the shape axioms trivially but fails the corner condition.
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
    fn assemble_validates_inputs() {
        let a = Matrix::diagonal(&ints(&[0, 1]));
        assert_eq!(
            MtdSystem::assemble(a.clone(), ints(&[0, 1]), a.clone(), ints(&[0])),
            Err(TdCoreError::EigenvalueCountMismatch { primal: 2, dual: 1 })
        );
        let bigger = Matrix::diagonal(&ints(&[0, 1, 2]));
        assert_eq!(
            MtdSystem::assemble(a.clone(), ints(&[0, 1]), bigger, ints(&[0, 1])),
            Err(TdCoreError::DimensionMismatch { a: 2, a_star: 3 })
        );
        let rect = int_matrix(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(
            MtdSystem::assemble(rect, ints(&[1]), a.clone(), ints(&[1])),
            Err(TdCoreError::NotSquare)
        );
        let gf = FieldSpec::prime_field(5).unwrap();
        let b = Matrix::identity(gf, 2);
        assert_eq!(
            MtdSystem::assemble(a.clone(), ints(&[0, 1]), b, ints(&[0, 1])),
            Err(TdCoreError::FieldMismatch)
        );
        let nilpotent = int_matrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            MtdSystem::assemble(a, ints(&[0, 1]), nilpotent, ints(&[0, 1])),
            Err(TdCoreError::Spectral {
                starred: true,
                source: SpectralError::ProductNotZero
            })
        );
    }

    #[test]
    fn diagonal_system_has_tridiagonal_shape_but_fails_the_corner() {
        let sys = diagonal_system();
        assert!(sys.check_tridiagonal_shape().passed());
        let corner = sys.check_mtd_corner();
        assert!(!corner.corner_0.is_zero());
        assert!(corner.corner_d.is_zero());
        assert!(!corner.passed());
    }

    #[test]
    fn duplicate_eigenvalues_in_an_ordering_are_rejected() {
        // The all-ones matrix is diagonalizable with spectrum {3, 0}, but an
        // ordering must list distinct values, not repeat one per eigenspace
        // dimension.
        let b = int_matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let sys = MtdSystem::assemble(
            Matrix::diagonal(&ints(&[0, 1, 2])),
            ints(&[0, 1, 2]),
            b,
            ints(&[3, 0, 0]),
        );
        assert!(matches!(
            sys,
            Err(TdCoreError::Spectral {
                starred: true,
                source: SpectralError::DuplicateEigenvalue { .. }
            })
        ));
    }

    #[test]
    fn shape_violations_carry_witnesses() {
        // Conjugating diag(0,1,2) by a unipotent that mixes e0 and e2 keeps
        // it diagonalizable while smearing the eigenspaces far apart, which
        // violates the shape in both sandwich families.
        let g = int_matrix(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let g_inv = g.inverse().unwrap();
        let b = &(&g * &Matrix::diagonal(&ints(&[0, 1, 2]))) * &g_inv;
        let sys = MtdSystem::assemble(
            Matrix::diagonal(&ints(&[0, 1, 2])),
            ints(&[0, 1, 2]),
            b,
            ints(&[0, 1, 2]),
        )
        .unwrap();
        let report = sys.check_tridiagonal_shape();
        assert!(!report.passed());
        for v in &report.violations {
            assert!(v.i.abs_diff(v.j) > 1);
            let family = if v.starred {
                &(sys.e_star(v.i) * sys.a()) * sys.e_star(v.j)
            } else {
                &(sys.e(v.i) * sys.a_star()) * sys.e(v.j)
            };
            let (r, c, value) = v.witness.clone();
            assert_eq!(family[(r, c)], value);
            assert!(!value.is_zero());
        }
    }

    #[test]
    fn sharpness_is_the_rank_of_the_first_dual_idempotent() {
        assert!(diagonal_system().is_sharp());
        let sys = MtdSystem::assemble(
            Matrix::diagonal(&ints(&[0, 1, 1])),
            ints(&[0, 1]),
            Matrix::diagonal(&ints(&[5, 5, 6])),
            ints(&[5, 6]),
        )
        .unwrap();
        assert!(!sys.is_sharp());
        assert_eq!(sys.split_sequence(), Err(TdCoreError::NotSharp));
        assert_eq!(sys.parameter_array(), Err(TdCoreError::NotSharp));
    }

    #[test]
    fn split_sequence_of_the_diagonal_system() {
        // E*_0 projects onto e0 and A e0 = 0, so tau_i(A) contributes
        // tau_i(0): 1 for i = 0 and 0 afterwards.
        let sys = diagonal_system();
        assert_eq!(sys.split_sequence().unwrap(), ints(&[1, 0, 0]));
    }

    #[test]
    fn ladder_polynomials_at_the_boundary_indices() {
        let thetas = ints(&[0, 1, 2]);
        let stars = ints(&[5, 3, 1]);
        let at0 = td_polynomials(&thetas, &stars, 0).unwrap();
        assert_eq!(at0.tau, Polynomial::one(q()));
        assert_eq!(at0.eta, Polynomial::one(q()));
        let at1 = td_polynomials(&thetas, &stars, 1).unwrap();
        // tau_1 = x - theta_0 = x; eta_1 = x - theta_2.
        assert_eq!(at1.tau, Polynomial::monic_from_roots(q(), &ints(&[0])));
        assert_eq!(at1.eta, Polynomial::monic_from_roots(q(), &ints(&[2])));
        assert_eq!(at1.tau_star, Polynomial::monic_from_roots(q(), &ints(&[5])));
        assert_eq!(at1.eta_star, Polynomial::monic_from_roots(q(), &ints(&[1])));
        let at2 = td_polynomials(&thetas, &stars, 2).unwrap();
        // eta_2 = (x - theta_2)(x - theta_1) = x^2 - 3x + 2.
        assert_eq!(at2.eta.coeffs(), &ints(&[2, -3, 1])[..]);
        assert_eq!(
            td_polynomials(&thetas, &stars, 3),
            Err(TdCoreError::IndexOutOfRange {
                index: 3,
                diameter: 2
            })
        );
    }

    #[test]
    fn constraint_sum_for_a_diameter_two_array() {
        let pa = ParameterArray::new(ints(&[0, 1, 2]), ints(&[0, 1, 2]), ints(&[1, 1, 1]));
        let report = check_constraints(&pa);
        assert_eq!(report.distinctness, ClauseStatus::Pass);
        assert_eq!(report.nondegeneracy, ClauseStatus::Pass);
        // (0-2)(0-1)(0-2)(0-1) + (0-2)(0-2) + 1 = 4 + 4 + 1.
        assert_eq!(report.nondegeneracy_sum, q().from_integer(9));
        assert_eq!(report.ratio_condition, ClauseStatus::Vacuous);
        assert!(report.passed());
    }

    #[test]
    fn constraints_reject_degenerate_split_data() {
        let zeta_d_zero = ParameterArray::new(ints(&[0, 1, 2]), ints(&[0, 1, 2]), ints(&[1, 0, 0]));
        assert_eq!(
            check_constraints(&zeta_d_zero).nondegeneracy,
            ClauseStatus::Fail
        );
        let zeta_0_off = ParameterArray::new(ints(&[0, 1, 2]), ints(&[0, 1, 2]), ints(&[2, 1, 1]));
        assert_eq!(
            check_constraints(&zeta_0_off).nondegeneracy,
            ClauseStatus::Fail
        );
        let duplicated = ParameterArray::new(ints(&[0, 1, 0]), ints(&[0, 1, 2]), ints(&[1, 1, 1]));
        assert_eq!(
            check_constraints(&duplicated).distinctness,
            ClauseStatus::Fail
        );
    }

    #[test]
    fn ratio_condition_at_diameter_three() {
        // Arithmetic progressions satisfy the ratio condition: the single
        // ratio is (theta_0 - theta_3)/(theta_1 - theta_2) = 3 per family.
        let good = ParameterArray::new(
            ints(&[0, 1, 2, 3]),
            ints(&[10, 8, 6, 4]),
            ints(&[1, 0, 0, 1]),
        );
        assert_eq!(check_constraints(&good).ratio_condition, ClauseStatus::Pass);
        // A dual family with a different common ratio fails.
        let mismatched = ParameterArray::new(
            ints(&[0, 1, 2, 3]),
            ints(&[0, 1, 2, 4]),
            ints(&[1, 0, 0, 1]),
        );
        assert_eq!(
            check_constraints(&mismatched).ratio_condition,
            ClauseStatus::Fail
        );
    }

    #[test]
    fn ratio_condition_with_geometric_eigenvalues() {
        // theta_i = 2^i: ratio (2^{i-2} - 2^{i+1})/(2^{i-1} - 2^i) =
        // (1 - 8)/(2 - 4) = 7/2 for every i, so d = 4 passes.
        let geometric = ParameterArray::new(
            ints(&[1, 2, 4, 8, 16]),
            ints(&[1, 2, 4, 8, 16]),
            ints(&[1, 0, 0, 0, 1]),
        );
        assert_eq!(
            check_constraints(&geometric).ratio_condition,
            ClauseStatus::Pass
        );
        // Breaking one eigenvalue breaks the shared ratio.
        let broken = ParameterArray::new(
            ints(&[1, 2, 4, 8, 17]),
            ints(&[1, 2, 4, 8, 16]),
            ints(&[1, 0, 0, 0, 1]),
        );
        assert_eq!(
            check_constraints(&broken).ratio_condition,
            ClauseStatus::Fail
        );
    }
}
