//! Seeded random generators for the test suites: scalars, matrices,
//! invertible and diagonalizable operators, and valid parameter choices for
//! the diameter-two family. Everything is driven by a caller-supplied RNG so
//! test runs are reproducible from a fixed seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diameter2::Diameter2Params;
use crate::field::{FieldScalar, FieldSpec};
use crate::linalg::Matrix;

/// A scalar drawn from a small box: integers in [-bound, bound] over the
/// rationals, a uniform residue over GF(p).
pub fn random_scalar(field: FieldSpec, bound: i64, rng: &mut impl Rng) -> FieldScalar {
    match field.modulus() {
        None => field.from_integer(rng.random_range(-bound..=bound)),
        Some(p) => field.from_integer(rng.random_range(0..p) as i64),
    }
}

pub fn random_matrix(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    bound: i64,
    rng: &mut impl Rng,
) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| random_scalar(field, bound, rng))
}

/// Rejection-samples until the matrix is invertible.
pub fn random_invertible(field: FieldSpec, n: usize, bound: i64, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(field, n, n, bound, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// A list of `count` distinct scalars.
pub fn random_distinct_scalars(
    field: FieldSpec,
    count: usize,
    bound: i64,
    rng: &mut impl Rng,
) -> Vec<FieldScalar> {
    if let Some(p) = field.modulus() {
        assert!(count as u64 <= p, "not enough residues");
    } else {
        assert!(
            count as i64 <= 2 * bound + 1,
            "not enough integers in the box"
        );
    }
    let mut values: Vec<FieldScalar> = Vec::with_capacity(count);
    while values.len() < count {
        let v = random_scalar(field, bound, rng);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values
}

/// A random diagonalizable operator: P D P^{-1} for an invertible P and a
/// diagonal D whose entries use every value of a random distinct spectrum.
/// Returns the operator together with its spectrum in the sampled order.
pub fn random_diagonalizable(
    field: FieldSpec,
    n: usize,
    bound: i64,
    rng: &mut impl Rng,
) -> (Matrix, Vec<FieldScalar>) {
    let capacity = match field.modulus() {
        Some(p) => n.min(p as usize),
        None => n.min((2 * bound + 1) as usize),
    };
    let k = rng.random_range(1..=capacity);
    let spectrum = random_distinct_scalars(field, k, bound, rng);
    // Every spectrum value appears at least once among the n diagonal slots.
    let mut assignment: Vec<usize> = (0..n).map(|i| i % k).collect();
    assignment.shuffle(rng);
    let diagonal: Vec<FieldScalar> = assignment.iter().map(|&i| spectrum[i].clone()).collect();
    let p = random_invertible(field, n, bound, rng);
    let p_inv = p.inverse().expect("sampled invertible");
    let a = &(&p * &Matrix::diagonal(&diagonal)) * &p_inv;
    (a, spectrum)
}

/// A valid parameter choice for the diameter-two family, by rejection.
pub fn random_diameter2_params(field: FieldSpec, rng: &mut impl Rng) -> Diameter2Params {
    loop {
        let thetas = [(); 3].map(|()| random_scalar(field, 5, rng));
        let theta_stars = [(); 3].map(|()| random_scalar(field, 5, rng));
        let zetas = [
            field.one(),
            random_scalar(field, 5, rng),
            random_scalar(field, 5, rng),
        ];
        if let Ok(p) = Diameter2Params::new(thetas, theta_stars, zetas) {
            return p;
        }
    }
}

/// A valid degenerate parameter choice: zeta_2 is forced to
/// zeta_1 zeta_1^x, with everything else rejection-sampled.
pub fn random_degenerate_diameter2_params(field: FieldSpec, rng: &mut impl Rng) -> Diameter2Params {
    loop {
        let thetas = [(); 3].map(|()| random_scalar(field, 5, rng));
        let theta_stars = [(); 3].map(|()| random_scalar(field, 5, rng));
        let zeta_1 = random_scalar(field, 5, rng);
        // zeta_1^x depends only on the eigenvalues and zeta_1, so it can be
        // computed before zeta_2 is chosen.
        let rise = &(&thetas[0] - &thetas[1]) * &(&theta_stars[0] - &theta_stars[1]);
        let fall = &(&thetas[1] - &thetas[2]) * &(&theta_stars[1] - &theta_stars[2]);
        let zeta1_cross = &(&zeta_1 + &rise) - &fall;
        let zeta_2 = &zeta_1 * &zeta1_cross;
        let zetas = [field.one(), zeta_1, zeta_2];
        if let Ok(p) = Diameter2Params::new(thetas, theta_stars, zetas) {
            debug_assert!(p.is_degenerate());
            return p;
        }
    }
}
