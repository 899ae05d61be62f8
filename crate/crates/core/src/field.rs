//! Exact scalar arithmetic over the rationals and over prime fields GF(p).
//!
//! Every scalar is kept in canonical form at all times: rationals are fully
//! reduced with a positive denominator, residues lie in `[0, p)`. There is no
//! floating point anywhere in this crate; equality of scalars is decidable and
//! exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Prime moduli must satisfy p < 2^31 so products of residues fit in u64.
const MODULUS_LIMIT: u64 = 1 << 31;

/// Errors raised while constructing fields or operating on scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The requested modulus is not a prime number.
    NonPrimeModulus(u64),
    /// The requested modulus is prime-sized beyond the supported range.
    UnsupportedModulus(u64),
    /// The text does not match the scalar grammar of the field.
    MalformedScalar(String),
    /// A rational literal with denominator zero.
    ZeroDenominator(String),
    /// Division by zero or inversion of zero.
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrimeModulus(p) => write!(f, "modulus {p} is not prime"),
            FieldError::UnsupportedModulus(p) => {
                write!(f, "modulus {p} exceeds the supported bound 2^31 - 1")
            }
            FieldError::MalformedScalar(s) => write!(f, "malformed scalar literal '{s}'"),
            FieldError::ZeroDenominator(s) => write!(f, "zero denominator in '{s}'"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for FieldError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldKind {
    Rationals,
    PrimeField(u64),
}

/// A coefficient field: the rationals, or GF(p) for a prime p < 2^31.
///
/// `FieldSpec` is a small copyable value; two specs compare equal exactly when
/// they describe the same field. Every scalar remembers the spec it belongs
/// to, and mixing scalars from different fields is a programming error that
/// panics rather than silently coercing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    kind: FieldKind,
}

impl FieldSpec {
    /// The field of rational numbers with arbitrary-precision arithmetic.
    pub fn rationals() -> FieldSpec {
        FieldSpec {
            kind: FieldKind::Rationals,
        }
    }

    /// The prime field GF(p). Fails on composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<FieldSpec, FieldError> {
        if p >= MODULUS_LIMIT {
            return Err(FieldError::UnsupportedModulus(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NonPrimeModulus(p));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimeField(p),
        })
    }

    /// The modulus, if this is a prime field.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::PrimeField(p) => Some(p),
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.kind, FieldKind::Rationals)
    }

    pub fn zero(&self) -> FieldScalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldScalar {
        self.from_integer(1)
    }

    /// Embeds a signed integer into the field.
    pub fn from_integer(&self, n: i64) -> FieldScalar {
        let repr = match self.kind {
            FieldKind::Rationals => Repr::Rational(BigRational::from(BigInt::from(n))),
            FieldKind::PrimeField(p) => Repr::Residue(n.rem_euclid(p as i64) as u64),
        };
        FieldScalar { spec: *self, repr }
    }

    /// Parses a scalar literal.
    ///
    /// Over the rationals the grammar is `-?digits(/digits)?`; the result is
    /// reduced to lowest terms with a positive denominator. Over GF(p) only
    /// unsigned digit strings are accepted and are reduced mod p.
    pub fn parse_scalar(&self, text: &str) -> Result<FieldScalar, FieldError> {
        match self.kind {
            FieldKind::Rationals => {
                let ratio = parse_rational(text)?;
                Ok(FieldScalar {
                    spec: *self,
                    repr: Repr::Rational(ratio),
                })
            }
            FieldKind::PrimeField(p) => {
                if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(FieldError::MalformedScalar(text.to_owned()));
                }
                let value = BigUint::parse_bytes(text.as_bytes(), 10)
                    .ok_or_else(|| FieldError::MalformedScalar(text.to_owned()))?;
                let residue = (value % BigUint::from(p)).to_u64().expect("residue < p");
                Ok(FieldScalar {
                    spec: *self,
                    repr: Repr::Residue(residue),
                })
            }
        }
    }

    pub(crate) fn rational_scalar(&self, value: BigRational) -> FieldScalar {
        assert!(self.is_rationals(), "rational repr in a prime field");
        FieldScalar {
            spec: *self,
            repr: Repr::Rational(value),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational, FieldError> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_str, den_str) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_str) || !den_str.is_none_or(digits) {
        return Err(FieldError::MalformedScalar(text.to_owned()));
    }
    let mut num = BigInt::parse_bytes(num_str.as_bytes(), 10).expect("checked digits");
    let den = match den_str {
        Some(d) => BigInt::parse_bytes(d.as_bytes(), 10).expect("checked digits"),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator(text.to_owned()));
    }
    if negative {
        num = -num;
    }
    Ok(BigRational::new(num, den))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut i = 3;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    Residue(u64),
}

/// An element of a [`FieldSpec`], always stored in canonical form.
///
/// Addition, subtraction, negation, and multiplication are available through
/// the standard operator traits on references; they panic if the operands
/// belong to different fields, since that is a logic error rather than a data
/// error. Division and inversion return a `Result` because division by zero
/// is reachable from ordinary input data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldScalar {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldScalar {
    pub fn field(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue(v) => *v == 1,
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<FieldScalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(r.recip()),
            Repr::Residue(v) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Repr::Residue(mod_inverse(*v, p))
            }
        };
        Ok(FieldScalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn div(&self, rhs: &FieldScalar) -> Result<FieldScalar, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub(crate) fn rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Residue(_) => None,
        }
    }

    fn check_same_field(&self, rhs: &FieldScalar, op: &str) {
        assert!(
            self.spec == rhs.spec,
            "field mismatch: cannot {op} a scalar of {} and a scalar of {}",
            self.spec,
            rhs.spec
        );
    }
}

/// Extended Euclid; requires 0 < a < p with p prime.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "gcd(a, p) = 1 for prime p and 0 < a < p");
    t.rem_euclid(p as i64) as u64
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Residue(v) => write!(f, "{v}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $name:literal, |$a:ident, $b:ident, $p:ident| $rational:expr, $residue:expr) => {
        impl $trait<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;

            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                self.check_same_field(rhs, $name);
                let repr = match (&self.repr, &rhs.repr) {
                    (Repr::Rational($a), Repr::Rational($b)) => Repr::Rational($rational),
                    (Repr::Residue($a), Repr::Residue($b)) => {
                        let $p = self.spec.modulus().expect("residue has a modulus");
                        Repr::Residue($residue)
                    }
                    _ => unreachable!("same field implies same representation"),
                };
                FieldScalar {
                    spec: self.spec,
                    repr,
                }
            }
        }
    };
}

scalar_binop!(Add, add, "add", |a, b, p| a + b, (a + b) % p);
scalar_binop!(Sub, sub, "subtract", |a, b, p| a - b, (a + p - b) % p);
scalar_binop!(Mul, mul, "multiply", |a, b, p| a * b, (a * b) % p);

impl Neg for &FieldScalar {
    type Output = FieldScalar;

    fn neg(self) -> FieldScalar {
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(-r),
            Repr::Residue(v) => {
                let p = self.spec.modulus().expect("residue has a modulus");
                Repr::Residue((p - v) % p)
            }
        };
        FieldScalar {
            spec: self.spec,
            repr,
        }
    }
}
