//! Eigenstructure of diagonalizable operators: verification of a proposed
//! eigenvalue list, primitive idempotents, characteristic polynomials, and
//! eigenvalue discovery.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::FieldScalar;
use crate::linalg::{Matrix, Polynomial, Subspace};

/// Why a proposed eigenvalue list fails, or why eigenvalue discovery fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralError {
    /// Two proposed eigenvalues coincide.
    DuplicateEigenvalue { i: usize, j: usize },
    /// The product of (A - theta I) over the list is not zero, so either the
    /// list misses an eigenvalue or A is not diagonalizable.
    ProductNotZero,
    /// A listed value is not actually an eigenvalue: its idempotent vanishes.
    ZeroIdempotent { index: usize },
    /// The operator has no eigenbasis over this field: the product of
    /// (A - theta I) over all roots found in the field is nonzero. Carries
    /// the roots found and their characteristic multiplicities.
    DoesNotSplit { roots_found: Vec<(String, usize)> },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::DuplicateEigenvalue { i, j } => {
                write!(f, "eigenvalues at positions {i} and {j} coincide")
            }
            SpectralError::ProductNotZero => write!(
                f,
                "the product of (A - theta I) over the proposed eigenvalues is not zero"
            ),
            SpectralError::ZeroIdempotent { index } => write!(
                f,
                "proposed eigenvalue at position {index} has a vanishing idempotent"
            ),
            SpectralError::DoesNotSplit { roots_found } => {
                write!(
                    f,
                    "operator is not diagonalizable over the field; roots found:"
                )?;
                for (root, mult) in roots_found {
                    write!(f, " {root} (multiplicity {mult})")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for SpectralError {}

/// A verified eigendecomposition: distinct eigenvalues in caller order
/// together with their primitive idempotents.
///
/// The idempotents satisfy sum E_i = I, E_i E_j = [i = j] E_i, and
/// A = sum theta_i E_i; they are produced by the Lagrange-style product
/// formula E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSystem {
    operator: Matrix,
    eigenvalues: Vec<FieldScalar>,
    idempotents: Vec<Matrix>,
}

impl EigenSystem {
    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn eigenvalues(&self) -> &[FieldScalar] {
        &self.eigenvalues
    }

    pub fn idempotents(&self) -> &[Matrix] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &Matrix {
        &self.idempotents[i]
    }

    /// The eigenspace for the i-th eigenvalue, as the column space of E_i.
    pub fn eigenspace(&self, i: usize) -> Subspace {
        self.idempotents[i].column_space()
    }
}

/// Checks that `thetas` is exactly the spectrum of a diagonalizable `a` and
/// returns the eigendecomposition.
///
/// The product test prod (A - theta_i I) = 0 certifies that the minimal
/// polynomial splits with the listed roots, which for distinct roots is
/// equivalent to diagonalizability; vanishing idempotents then flag listed
/// values that are not eigenvalues at all.
pub fn verify_diagonalizable(
    a: &Matrix,
    thetas: &[FieldScalar],
) -> Result<EigenSystem, SpectralError> {
    assert!(a.is_square(), "operator must be square");
    assert!(!thetas.is_empty(), "empty eigenvalue list");
    for t in thetas {
        assert_eq!(t.field(), a.field(), "eigenvalue from a different field");
    }
    for i in 0..thetas.len() {
        for j in (i + 1)..thetas.len() {
            if thetas[i] == thetas[j] {
                return Err(SpectralError::DuplicateEigenvalue { i, j });
            }
        }
    }
    let min_poly = Polynomial::monic_from_roots(a.field(), thetas);
    if !min_poly.eval_matrix(a).is_zero() {
        return Err(SpectralError::ProductNotZero);
    }
    let mut idempotents = Vec::with_capacity(thetas.len());
    for (i, theta) in thetas.iter().enumerate() {
        let others: Vec<FieldScalar> = thetas
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, t)| t.clone())
            .collect();
        let numerator = Polynomial::monic_from_roots(a.field(), &others).eval_matrix(a);
        let denominator = others
            .iter()
            .fold(a.field().one(), |acc, t| &acc * &(theta - t));
        let e = numerator.scalar_mul(&denominator.inv().expect("distinct eigenvalues"));
        if e.is_zero() {
            return Err(SpectralError::ZeroIdempotent { index: i });
        }
        idempotents.push(e);
    }
    Ok(EigenSystem {
        operator: a.clone(),
        eigenvalues: thetas.to_vec(),
        idempotents,
    })
}

/// The characteristic polynomial det(x I - A), monic of degree n.
///
/// Uses the trace recurrence (Faddeev-LeVerrier), which divides by
/// 1, ..., n; over GF(p) with p <= n that division is unavailable, so a
/// cofactor expansion over the polynomial ring is used instead. The two
/// routes agree and serve as oracles for one another in the tests.
pub fn char_poly(a: &Matrix) -> Polynomial {
    assert!(
        a.is_square(),
        "characteristic polynomial of a square matrix"
    );
    let n = a.rows() as u64;
    match a.field().modulus() {
        Some(p) if p <= n => char_poly_cofactor(a),
        _ => char_poly_traces(a),
    }
}

fn char_poly_traces(a: &Matrix) -> Polynomial {
    let field = a.field();
    let n = a.rows();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut aux = Matrix::identity(field, n);
    for k in 1..=n {
        let prod = a * &aux;
        let c = prod
            .trace()
            .div(&field.from_integer(k as i64))
            .expect("k is a unit in the field");
        coeffs[n - k] = -&c;
        aux = &prod + &Matrix::identity(field, n).scalar_mul(&coeffs[n - k]);
    }
    Polynomial::from_coeffs(field, coeffs)
}

fn char_poly_cofactor(a: &Matrix) -> Polynomial {
    let field = a.field();
    let n = a.rows();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let constant = Polynomial::constant(-&a[(i, j)]);
                    if i == j {
                        &constant + &Polynomial::x(field)
                    } else {
                        constant
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries)
}

fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let field = m[0][0].field();
    let mut det = Polynomial::zero(field);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &m[i][0] * &poly_det(&minor);
        det = if i % 2 == 0 {
            &det + &term
        } else {
            &det - &term
        };
    }
    det
}

/// Finds the eigenvalues of `a` in its own field, in ascending order, with
/// their characteristic multiplicities.
///
/// Fails with [`SpectralError::DoesNotSplit`] unless the minimal polynomial
/// splits into distinct linear factors over the field, i.e. unless
/// prod (A - theta I) over the roots found vanishes. Over GF(p) the roots
/// are found by scanning every residue, so this is intended for the moduli
/// used in practice, not for p near the 2^31 bound.
pub fn discover_eigenvalues(a: &Matrix) -> Result<Vec<(FieldScalar, usize)>, SpectralError> {
    assert!(a.is_square(), "operator must be square");
    let field = a.field();
    let cp = char_poly(a);
    let roots = match field.modulus() {
        None => rational_roots(&cp),
        Some(p) => (0..p)
            .map(|r| field.from_integer(r as i64))
            .filter(|r| cp.eval(r).is_zero())
            .collect(),
    };
    let mut with_multiplicity = Vec::with_capacity(roots.len());
    for root in &roots {
        let mut mult = 0;
        let mut rem = cp.clone();
        while let Some(quot) = rem.deflate(root) {
            mult += 1;
            rem = quot;
        }
        with_multiplicity.push((root.clone(), mult));
    }
    let product = Polynomial::monic_from_roots(field, &roots).eval_matrix(a);
    if !product.is_zero() {
        return Err(SpectralError::DoesNotSplit {
            roots_found: with_multiplicity
                .iter()
                .map(|(r, m)| (r.to_string(), *m))
                .collect(),
        });
    }
    Ok(with_multiplicity)
}

/// Rational roots of a polynomial with rational coefficients, ascending.
///
/// Clears denominators and tries every signed ratio p/q with p dividing the
/// trailing and q dividing the leading integer coefficient.
fn rational_roots(cp: &Polynomial) -> Vec<FieldScalar> {
    let field = cp.field();
    if cp.is_zero() {
        return Vec::new();
    }
    // x^k factors contribute the root 0 and are stripped first.
    let mut coeffs: Vec<BigRational> = cp
        .coeffs()
        .iter()
        .map(|c| c.rational().expect("rational coefficients").clone())
        .collect();
    let mut roots = Vec::new();
    if coeffs.iter().take_while(|c| c.is_zero()).count() > 0 {
        roots.push(field.zero());
        while coeffs.first().is_some_and(Zero::is_zero) {
            coeffs.remove(0);
        }
    }
    if coeffs.len() <= 1 {
        sort_rationals(&mut roots);
        return roots;
    }
    let denominator_lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let integral: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from(denominator_lcm.clone())).to_integer())
        .collect();
    let trailing = integral.first().expect("nonempty").magnitude().clone();
    let leading = integral.last().expect("nonempty").magnitude().clone();
    for p in divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, trailing)) {
        for q in divisors(&BigInt::from_biguint(
            num_bigint::Sign::Plus,
            leading.clone(),
        )) {
            for candidate in [
                BigRational::new(p.clone(), q.clone()),
                BigRational::new(-p.clone(), q.clone()),
            ] {
                let scalar = field.rational_scalar(candidate);
                if cp.eval(&scalar).is_zero() && !roots.contains(&scalar) {
                    roots.push(scalar);
                }
            }
        }
    }
    sort_rationals(&mut roots);
    roots
}

fn sort_rationals(roots: &mut [FieldScalar]) {
    roots.sort_by(|a, b| {
        a.rational()
            .expect("rational root")
            .cmp(b.rational().expect("rational root"))
    });
}

/// Positive divisors of |n| by trial division; requires n != 0.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "zero has no finite divisor list");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let paired = &n / &d;
            if paired != d {
                large.push(paired);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
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

    #[test]
    fn idempotents_of_a_diagonal_operator() {
        let a = Matrix::diagonal(&ints(&[2, 3]));
        let sys = verify_diagonalizable(&a, &ints(&[2, 3])).unwrap();
        assert_eq!(sys.idempotent(0), &int_matrix(&[&[1, 0], &[0, 0]]));
        assert_eq!(sys.idempotent(1), &int_matrix(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn idempotent_identities_hold() {
        // A non-diagonal diagonalizable operator: [[5, -2], [6, -2]] has
        // eigenvalues 1 and 2.
        let a = int_matrix(&[&[5, -2], &[6, -2]]);
        let sys = verify_diagonalizable(&a, &ints(&[1, 2])).unwrap();
        let sum = sys
            .idempotents()
            .iter()
            .fold(Matrix::zeros(q(), 2, 2), |acc, e| &acc + e);
        assert_eq!(sum, Matrix::identity(q(), 2));
        for (i, ei) in sys.idempotents().iter().enumerate() {
            for (j, ej) in sys.idempotents().iter().enumerate() {
                let prod = ei * ej;
                if i == j {
                    assert_eq!(&prod, ei);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
        let recombined = sys
            .eigenvalues()
            .iter()
            .zip(sys.idempotents())
            .fold(Matrix::zeros(q(), 2, 2), |acc, (t, e)| {
                &acc + &e.scalar_mul(t)
            });
        assert_eq!(recombined, a);
    }

    #[test]
    fn eigenspace_matches_kernel() {
        let a = int_matrix(&[&[5, -2], &[6, -2]]);
        let sys = verify_diagonalizable(&a, &ints(&[1, 2])).unwrap();
        for (i, theta) in sys.eigenvalues().iter().enumerate() {
            let shifted = &a - &Matrix::identity(q(), 2).scalar_mul(theta);
            assert_eq!(sys.eigenspace(i), shifted.kernel());
        }
    }

    #[test]
    fn duplicate_eigenvalues_rejected() {
        let a = Matrix::diagonal(&ints(&[2, 3]));
        assert_eq!(
            verify_diagonalizable(&a, &ints(&[2, 2])),
            Err(SpectralError::DuplicateEigenvalue { i: 0, j: 1 })
        );
    }

    #[test]
    fn nilpotent_is_not_diagonalizable() {
        let n = int_matrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            verify_diagonalizable(&n, &ints(&[0])),
            Err(SpectralError::ProductNotZero)
        );
        // Listing a spare eigenvalue does not help: the Jordan block still
        // fails the product test.
        assert_eq!(
            verify_diagonalizable(&n, &ints(&[0, 1])),
            Err(SpectralError::ProductNotZero)
        );
    }

    #[test]
    fn spare_eigenvalue_has_zero_idempotent() {
        let a = Matrix::diagonal(&ints(&[2, 3]));
        // (A - 2)(A - 3)(A - 5) = 0 holds, but 5 is not an eigenvalue.
        assert_eq!(
            verify_diagonalizable(&a, &ints(&[2, 3, 5])),
            Err(SpectralError::ZeroIdempotent { index: 2 })
        );
    }

    #[test]
    fn char_poly_of_companion_like_matrix() {
        let a = Matrix::diagonal(&ints(&[2, 3]));
        let cp = char_poly(&a);
        // (x - 2)(x - 3) = x^2 - 5x + 6.
        assert_eq!(cp.coeffs(), &ints(&[6, -5, 1])[..]);
        assert!(cp.is_monic());
    }

    #[test]
    fn char_poly_routes_agree() {
        let a = int_matrix(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        assert_eq!(char_poly_traces(&a), char_poly_cofactor(&a));
        let f = FieldSpec::prime_field(2).unwrap();
        let b = Matrix::from_fn(f, 3, 3, |i, j| f.from_integer((i + j) as i64));
        // GF(2) with n = 3 forces the cofactor route; the traces route is
        // unavailable there, so compare on a lift instead.
        let lift = int_matrix(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let lifted_cp = char_poly_traces(&lift);
        let reduced: Vec<FieldScalar> = lifted_cp
            .coeffs()
            .iter()
            .map(|c| {
                let r = c.rational().unwrap();
                assert!(r.is_integer());
                f.parse_scalar(&r.to_integer().mod_floor(&BigInt::from(2)).to_string())
                    .unwrap()
            })
            .collect();
        assert_eq!(char_poly(&b).coeffs(), &reduced[..]);
    }

    #[test]
    fn discovery_reports_multiplicities_in_ascending_order() {
        let a = Matrix::diagonal(&ints(&[3, 2, 3]));
        let found = discover_eigenvalues(&a).unwrap();
        assert_eq!(
            found,
            vec![(q().from_integer(2), 1), (q().from_integer(3), 2)]
        );
    }

    #[test]
    fn discovery_finds_fractional_eigenvalues() {
        // diag(1/2, -3) has characteristic polynomial (x - 1/2)(x + 3).
        let half = q().parse_scalar("1/2").unwrap();
        let a = Matrix::diagonal(&[half.clone(), q().from_integer(-3)]);
        let found = discover_eigenvalues(&a).unwrap();
        assert_eq!(found, vec![(q().from_integer(-3), 1), (half, 1)]);
    }

    #[test]
    fn rotation_does_not_split_over_q() {
        let rot = int_matrix(&[&[0, -1], &[1, 0]]);
        match discover_eigenvalues(&rot) {
            Err(SpectralError::DoesNotSplit { roots_found }) => {
                assert!(roots_found.is_empty());
            }
            other => panic!("expected DoesNotSplit, got {other:?}"),
        }
    }

    #[test]
    fn jordan_block_does_not_split_distinctly() {
        // x^2 has the root 0 with multiplicity 2, but (A - 0)^1 over the
        // distinct roots is nonzero, so the operator is not diagonalizable.
        let n = int_matrix(&[&[0, 1], &[0, 0]]);
        match discover_eigenvalues(&n) {
            Err(SpectralError::DoesNotSplit { roots_found }) => {
                assert_eq!(roots_found, vec![("0".to_owned(), 2)]);
            }
            other => panic!("expected DoesNotSplit, got {other:?}"),
        }
    }

    #[test]
    fn discovery_over_a_prime_field() {
        let f = FieldSpec::prime_field(7).unwrap();
        let a = Matrix::diagonal(&[f.from_integer(2), f.from_integer(5)]);
        let found = discover_eigenvalues(&a).unwrap();
        assert_eq!(found, vec![(f.from_integer(2), 1), (f.from_integer(5), 1)]);
    }

    #[test]
    fn divisor_enumeration_is_complete() {
        let divs = divisors(&BigInt::from(-12));
        let expected: Vec<BigInt> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&n| BigInt::from(n))
            .collect();
        assert_eq!(divs, expected);
    }
}
