//! The concrete four-dimensional family with diameter two.
//!
//! A parameter choice is two triples of distinct eigenvalues plus a split
//! sequence (1, zeta_1, zeta_2) with zeta_2 != 0 subject to one open
//! admissibility inequality. Each choice yields an explicit 4 x 4 pair that
//! is sharp and mock tridiagonal with exactly that parameter array. The
//! module also carries closed forms for all six idempotents, a one-line
//! criterion for when the system is already tridiagonal, and the expected
//! outcome of the quotient reduction in the degenerate case.

use std::fmt;

use crate::field::{FieldScalar, FieldSpec};
use crate::linalg::Matrix;
use crate::tdcore::MtdSystem;

/// Why a parameter choice is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diameter2Error {
    FieldMismatch,
    /// A repeated value inside one eigenvalue triple; `starred` says which.
    DistinctnessViolated {
        starred: bool,
    },
    /// The split sequence must start at 1.
    Zeta0NotOne,
    /// The split sequence must end in a nonzero value.
    Zeta2Zero,
    /// The admissibility sum vanishes, so no system with this data exists.
    AdmissibilityViolated,
    /// The request only makes sense for degenerate parameters.
    NotDegenerate,
}

impl fmt::Display for Diameter2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter2Error::FieldMismatch => write!(f, "parameters mix different fields"),
            Diameter2Error::DistinctnessViolated { starred } => {
                let which = if *starred { "dual" } else { "primal" };
                write!(f, "{which} eigenvalue triple has a repeated value")
            }
            Diameter2Error::Zeta0NotOne => write!(f, "zeta_0 must equal 1"),
            Diameter2Error::Zeta2Zero => write!(f, "zeta_2 must be nonzero"),
            Diameter2Error::AdmissibilityViolated => {
                write!(f, "the admissibility sum vanishes for these parameters")
            }
            Diameter2Error::NotDegenerate => {
                write!(
                    f,
                    "parameters are not degenerate: zeta_1 zeta_1^x != zeta_2"
                )
            }
        }
    }
}

impl std::error::Error for Diameter2Error {}

/// A validated parameter choice for the family.
///
/// Validation fixes the derived coefficient zeta_1^x, which appears in the
/// defining matrices and controls degeneracy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diameter2Params {
    thetas: [FieldScalar; 3],
    theta_stars: [FieldScalar; 3],
    zetas: [FieldScalar; 3],
    zeta1_cross: FieldScalar,
}

/// The admissibility sum
/// zeta_2 + zeta_1 (theta_0 - theta_2)(theta*_0 - theta*_2)
///        + (theta_0 - theta_1)(theta_0 - theta_2)(theta*_0 - theta*_1)(theta*_0 - theta*_2),
/// which must be nonzero for a system with this data to exist. This is the
/// diameter-two instance of the general nondegeneracy sum over the ladder
/// polynomials, written out directly as an independent route for tests.
pub fn admissibility_sum(
    thetas: &[FieldScalar; 3],
    theta_stars: &[FieldScalar; 3],
    zetas: &[FieldScalar; 3],
) -> FieldScalar {
    let d02 = &thetas[0] - &thetas[2];
    let d01 = &thetas[0] - &thetas[1];
    let s02 = &theta_stars[0] - &theta_stars[2];
    let s01 = &theta_stars[0] - &theta_stars[1];
    let middle = &(&zetas[1] * &d02) * &s02;
    let top = &(&d01 * &d02) * &(&s01 * &s02);
    &(&zetas[2] + &middle) + &top
}

impl Diameter2Params {
    /// Validates a parameter choice and derives zeta_1^x.
    pub fn new(
        thetas: [FieldScalar; 3],
        theta_stars: [FieldScalar; 3],
        zetas: [FieldScalar; 3],
    ) -> Result<Diameter2Params, Diameter2Error> {
        let field = thetas[0].field();
        let all = thetas.iter().chain(&theta_stars).chain(&zetas);
        if all.skip(1).any(|s| s.field() != field) {
            return Err(Diameter2Error::FieldMismatch);
        }
        for (starred, triple) in [(false, &thetas), (true, &theta_stars)] {
            let distinct =
                triple[0] != triple[1] && triple[0] != triple[2] && triple[1] != triple[2];
            if !distinct {
                return Err(Diameter2Error::DistinctnessViolated { starred });
            }
        }
        if !zetas[0].is_one() {
            return Err(Diameter2Error::Zeta0NotOne);
        }
        if zetas[2].is_zero() {
            return Err(Diameter2Error::Zeta2Zero);
        }
        if admissibility_sum(&thetas, &theta_stars, &zetas).is_zero() {
            return Err(Diameter2Error::AdmissibilityViolated);
        }
        // zeta_1^x = zeta_1 + (theta_0 - theta_1)(theta*_0 - theta*_1)
        //                   - (theta_1 - theta_2)(theta*_1 - theta*_2).
        let rise = &(&thetas[0] - &thetas[1]) * &(&theta_stars[0] - &theta_stars[1]);
        let fall = &(&thetas[1] - &thetas[2]) * &(&theta_stars[1] - &theta_stars[2]);
        let zeta1_cross = &(&zetas[1] + &rise) - &fall;
        Ok(Diameter2Params {
            thetas,
            theta_stars,
            zetas,
            zeta1_cross,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.thetas[0].field()
    }

    pub fn thetas(&self) -> &[FieldScalar; 3] {
        &self.thetas
    }

    pub fn theta_stars(&self) -> &[FieldScalar; 3] {
        &self.theta_stars
    }

    pub fn zetas(&self) -> &[FieldScalar; 3] {
        &self.zetas
    }

    /// The derived coefficient zeta_1^x.
    pub fn zeta1_cross(&self) -> &FieldScalar {
        &self.zeta1_cross
    }

    /// The admissibility sum for this (already admissible) choice.
    pub fn admissibility_value(&self) -> FieldScalar {
        admissibility_sum(&self.thetas, &self.theta_stars, &self.zetas)
    }

    /// The defining 4 x 4 pair, assembled and eigen-verified.
    pub fn build_system(&self) -> MtdSystem {
        let f = self.field();
        let z = f.zero();
        let one = f.one();
        let [t0, t1, t2] = &self.thetas;
        let [s0, s1, s2] = &self.theta_stars;
        let a = Matrix::from_rows(vec![
            vec![t0.clone(), z.clone(), z.clone(), z.clone()],
            vec![one.clone(), t1.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), t1.clone(), z.clone()],
            vec![z.clone(), one.clone(), self.zeta1_cross.clone(), t2.clone()],
        ]);
        let a_star = Matrix::from_rows(vec![
            vec![
                s0.clone(),
                self.zetas[1].clone(),
                self.zetas[2].clone(),
                z.clone(),
            ],
            vec![z.clone(), s1.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), s1.clone(), one.clone()],
            vec![z.clone(), z.clone(), z.clone(), s2.clone()],
        ]);
        MtdSystem::assemble(
            a,
            vec![t0.clone(), t1.clone(), t2.clone()],
            a_star,
            vec![s0.clone(), s1.clone(), s2.clone()],
        )
        .expect("validated parameters assemble into a system")
    }

    /// Closed forms for the six idempotents of the 4 x 4 pair, written down
    /// directly from the parameters without any matrix products. Independent
    /// of the product-formula route, so the two can check each other.
    pub fn closed_form_idempotents(&self) -> ClosedFormIdempotents {
        let f = self.field();
        let z = || f.zero();
        let one = || f.one();
        let [t0, t1, t2] = &self.thetas;
        let [s0, s1, s2] = &self.theta_stars;
        let z1 = &self.zetas[1];
        let z2 = &self.zetas[2];
        let zx = &self.zeta1_cross;
        let inv = |x: FieldScalar| x.inv().expect("distinct eigenvalues");
        // Primal differences.
        let d01 = inv(t0 - t1);
        let d02 = inv(t0 - t2);
        let d10 = inv(t1 - t0);
        let d12 = inv(t1 - t2);
        let d20 = inv(t2 - t0);
        let d21 = inv(t2 - t1);
        // Dual differences.
        let e01 = inv(s0 - s1);
        let e02 = inv(s0 - s2);
        let e10 = inv(s1 - s0);
        let e12 = inv(s1 - s2);
        let e20 = inv(s2 - s0);
        let e21 = inv(s2 - s1);

        let e_0 = Matrix::from_rows(vec![
            vec![one(), z(), z(), z()],
            vec![d01.clone(), z(), z(), z()],
            vec![z(), z(), z(), z()],
            vec![&d01 * &d02, z(), z(), z()],
        ]);
        let e_1 = Matrix::from_rows(vec![
            vec![z(), z(), z(), z()],
            vec![d10.clone(), one(), z(), z()],
            vec![z(), z(), one(), z()],
            vec![&d10 * &d12, d12.clone(), zx * &d12, z()],
        ]);
        let e_2 = Matrix::from_rows(vec![
            vec![z(), z(), z(), z()],
            vec![z(), z(), z(), z()],
            vec![z(), z(), z(), z()],
            vec![&d20 * &d21, d21.clone(), zx * &d21, one()],
        ]);
        let e_star_0 = Matrix::from_rows(vec![
            vec![one(), z1 * &e01, z2 * &e01, &(z2 * &e01) * &e02],
            vec![z(), z(), z(), z()],
            vec![z(), z(), z(), z()],
            vec![z(), z(), z(), z()],
        ]);
        let e_star_1 = Matrix::from_rows(vec![
            vec![z(), z1 * &e10, z2 * &e10, &(z2 * &e10) * &e12],
            vec![z(), one(), z(), z()],
            vec![z(), z(), one(), e12.clone()],
            vec![z(), z(), z(), z()],
        ]);
        let e_star_2 = Matrix::from_rows(vec![
            vec![z(), z(), z(), &(z2 * &e20) * &e21],
            vec![z(), z(), z(), z()],
            vec![z(), z(), z(), e21.clone()],
            vec![z(), z(), z(), one()],
        ]);
        ClosedFormIdempotents {
            e: [e_0, e_1, e_2],
            e_star: [e_star_0, e_star_1, e_star_2],
        }
    }

    /// The reduction criterion: the system is tridiagonal (irreducible)
    /// exactly when zeta_1 zeta_1^x != zeta_2.
    pub fn criterion_is_td(&self) -> bool {
        &self.zetas[1] * &self.zeta1_cross != self.zetas[2]
    }

    pub fn is_degenerate(&self) -> bool {
        !self.criterion_is_td()
    }

    /// Closed-form expectations for the quotient reduction in the degenerate
    /// case: the spanning vector of the maximal submodule, the transversal
    /// the greedy completion picks, and the induced 3 x 3 system it yields.
    pub fn degenerate_expected(&self) -> Result<DegenerateExpected, Diameter2Error> {
        if !self.is_degenerate() {
            return Err(Diameter2Error::NotDegenerate);
        }
        let f = self.field();
        let z = || f.zero();
        let one = || f.one();
        let [t0, t1, t2] = &self.thetas;
        let [s0, s1, s2] = &self.theta_stars;
        let z1 = &self.zetas[1];
        let z2 = &self.zetas[2];
        let zx = &self.zeta1_cross;
        let inv = |x: FieldScalar| x.inv().expect("distinct eigenvalues");
        let submodule_vector = vec![z(), -zx, one(), z()];
        let transversal = vec![
            vec![one(), z(), z(), z()],
            vec![z(), one(), z(), z()],
            vec![z(), z(), z(), one()],
        ];
        let induced_a = Matrix::from_rows(vec![
            vec![t0.clone(), z(), z()],
            vec![one(), t1.clone(), z()],
            vec![z(), one(), t2.clone()],
        ]);
        let induced_a_star = Matrix::from_rows(vec![
            vec![s0.clone(), z1.clone(), z()],
            vec![z(), s1.clone(), zx.clone()],
            vec![z(), z(), s2.clone()],
        ]);
        let d01 = inv(t0 - t1);
        let d02 = inv(t0 - t2);
        let d10 = inv(t1 - t0);
        let d12 = inv(t1 - t2);
        let d20 = inv(t2 - t0);
        let d21 = inv(t2 - t1);
        let e01 = inv(s0 - s1);
        let e02 = inv(s0 - s2);
        let e10 = inv(s1 - s0);
        let e12 = inv(s1 - s2);
        let e20 = inv(s2 - s0);
        let e21 = inv(s2 - s1);
        let induced_e = [
            Matrix::from_rows(vec![
                vec![one(), z(), z()],
                vec![d01.clone(), z(), z()],
                vec![&d01 * &d02, z(), z()],
            ]),
            Matrix::from_rows(vec![
                vec![z(), z(), z()],
                vec![d10.clone(), one(), z()],
                vec![&d10 * &d12, d12.clone(), z()],
            ]),
            Matrix::from_rows(vec![
                vec![z(), z(), z()],
                vec![z(), z(), z()],
                vec![&d20 * &d21, d21.clone(), one()],
            ]),
        ];
        let induced_e_star = [
            Matrix::from_rows(vec![
                vec![one(), z1 * &e01, &(z2 * &e01) * &e02],
                vec![z(), z(), z()],
                vec![z(), z(), z()],
            ]),
            Matrix::from_rows(vec![
                vec![z(), z1 * &e10, &(z2 * &e10) * &e12],
                vec![z(), one(), zx * &e12],
                vec![z(), z(), z()],
            ]),
            Matrix::from_rows(vec![
                vec![z(), z(), &(z2 * &e20) * &e21],
                vec![z(), z(), zx * &e21],
                vec![z(), z(), one()],
            ]),
        ];
        Ok(DegenerateExpected {
            submodule_vector,
            transversal,
            induced_a,
            induced_a_star,
            induced_e,
            induced_e_star,
        })
    }
}

/// Closed-form idempotents of the 4 x 4 pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormIdempotents {
    pub e: [Matrix; 3],
    pub e_star: [Matrix; 3],
}

/// Closed-form expectations for the degenerate quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateExpected {
    /// Spanning vector of the maximal submodule M.
    pub submodule_vector: Vec<FieldScalar>,
    /// The transversal the deterministic completion picks: e0, e1, e3.
    pub transversal: Vec<Vec<FieldScalar>>,
    pub induced_a: Matrix,
    pub induced_a_star: Matrix,
    pub induced_e: [Matrix; 3],
    pub induced_e_star: [Matrix; 3],
}
