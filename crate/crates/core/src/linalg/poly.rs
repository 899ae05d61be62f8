//! Univariate polynomials over an exact field, stored dense with the
//! constant coefficient first and no trailing zeros. The zero polynomial has
//! an empty coefficient list and no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldScalar, FieldSpec};

use super::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<FieldScalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec) -> Polynomial {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: FieldScalar) -> Polynomial {
        Polynomial::from_coeffs(c.field(), vec![c])
    }

    /// The monomial x.
    pub fn x(field: FieldSpec) -> Polynomial {
        Polynomial::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// Builds from coefficients (constant first), trimming trailing zeros.
    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<FieldScalar>) -> Polynomial {
        for c in &coeffs {
            assert_eq!(c.field(), field, "mixed fields in one polynomial");
        }
        while coeffs.last().is_some_and(FieldScalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    /// The monic product of (x - r) over the given roots; the empty product
    /// is the constant 1.
    pub fn monic_from_roots(field: FieldSpec, roots: &[FieldScalar]) -> Polynomial {
        roots.iter().fold(Polynomial::one(field), |acc, r| {
            assert_eq!(r.field(), field, "root from a different field");
            let linear = Polynomial::from_coeffs(field, vec![-r, field.one()]);
            &acc * &linear
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> FieldScalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldScalar::is_one)
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &FieldScalar) -> FieldScalar {
        assert_eq!(x.field(), self.field, "argument from a different field");
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix; the constant term contributes a
    /// multiple of the identity.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        assert!(a.is_square(), "polynomial evaluation needs a square matrix");
        assert_eq!(a.field(), self.field, "matrix over a different field");
        let mut acc = Matrix::zeros(self.field, a.rows(), a.cols());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &Matrix::identity(self.field, a.rows()).scalar_mul(c);
        }
        acc
    }

    /// Exact division by (x - root); `None` when root is not a root.
    pub fn deflate(&self, root: &FieldScalar) -> Option<Polynomial> {
        assert_eq!(root.field(), self.field, "root from a different field");
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![self.field.zero(); self.coeffs.len() - 1];
        let mut carry = self.field.zero();
        for k in (0..self.coeffs.len()).rev() {
            let value = &self.coeffs[k] + &(&carry * root);
            if k == 0 {
                if !value.is_zero() {
                    return None;
                }
            } else {
                quotient[k - 1] = value.clone();
                carry = value;
            }
        }
        Some(Polynomial::from_coeffs(self.field, quotient))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch in addition");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Polynomial::from_coeffs(self.field, coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch in subtraction");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        Polynomial::from_coeffs(self.field, coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch in multiplication");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(self.field, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "({c})x")?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
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

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = Polynomial::zero(q());
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(&q().from_integer(5)), q().zero());
        assert_eq!(Polynomial::from_coeffs(q(), ints(&[0, 0, 0])), z);
    }

    #[test]
    fn monic_from_roots_expands_correctly() {
        // (x - 1)(x - 2) = x^2 - 3x + 2.
        let p = Polynomial::monic_from_roots(q(), &ints(&[1, 2]));
        assert_eq!(p.coeffs(), &ints(&[2, -3, 1])[..]);
        assert!(p.is_monic());
        assert_eq!(Polynomial::monic_from_roots(q(), &[]), Polynomial::one(q()));
    }

    #[test]
    fn eval_matches_direct_substitution() {
        let p = Polynomial::from_coeffs(q(), ints(&[1, -2, 3]));
        // 3x^2 - 2x + 1 at x = 4: 48 - 8 + 1 = 41.
        assert_eq!(p.eval(&q().from_integer(4)), q().from_integer(41));
    }

    #[test]
    fn matrix_evaluation_of_annihilating_product() {
        // (x - 2)(x - 3) annihilates diag(2, 3).
        let a = Matrix::diagonal(&ints(&[2, 3]));
        let p = Polynomial::monic_from_roots(q(), &ints(&[2, 3]));
        assert!(p.eval_matrix(&a).is_zero());
        let xp = Polynomial::x(q());
        assert_eq!(xp.eval_matrix(&a), a);
    }

    #[test]
    fn constant_matrix_evaluation_scales_identity() {
        let a = Matrix::diagonal(&ints(&[5, 7]));
        let c = Polynomial::constant(q().from_integer(3));
        assert_eq!(
            c.eval_matrix(&a),
            Matrix::identity(q(), 2).scalar_mul(&q().from_integer(3))
        );
    }

    #[test]
    fn deflate_splits_off_roots() {
        let p = Polynomial::monic_from_roots(q(), &ints(&[1, 2, 2]));
        let once = p.deflate(&q().from_integer(2)).unwrap();
        assert_eq!(once, Polynomial::monic_from_roots(q(), &ints(&[1, 2])));
        let twice = once.deflate(&q().from_integer(2)).unwrap();
        assert_eq!(twice, Polynomial::monic_from_roots(q(), &ints(&[1])));
        assert!(twice.deflate(&q().from_integer(2)).is_none());
        assert!(p.deflate(&q().from_integer(7)).is_none());
    }

    #[test]
    fn product_degree_adds() {
        let p = Polynomial::from_coeffs(q(), ints(&[1, 1]));
        let r = &p * &p;
        assert_eq!(r.coeffs(), &ints(&[1, 2, 1])[..]);
        assert_eq!(r.degree(), Some(2));
    }
}
