//! Subspaces of F^n in a canonical form, plus the two fixpoint closures and
//! the induced action of an operator on a quotient.
//!
//! A subspace is stored as the reduced row-echelon basis of its row space:
//! pivots are 1 with strictly increasing pivot columns and zeros above and
//! below. Because the form is canonical, subspace equality is plain equality
//! of basis lists. The zero subspace has an empty basis.

use std::fmt;

use crate::field::{FieldScalar, FieldSpec};

use super::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    /// RREF rows; `pivots[i]` is the pivot column of `basis[i]`.
    basis: Vec<Vec<FieldScalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        assert!(ambient_dim > 0, "ambient dimension must be positive");
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace::from_rows(
            field,
            ambient_dim,
            Matrix::identity(field, ambient_dim).row_vectors(),
        )
    }

    /// The span of the given row vectors, canonicalized. An empty list yields
    /// the zero subspace.
    pub fn from_rows(
        field: FieldSpec,
        ambient_dim: usize,
        rows: Vec<Vec<FieldScalar>>,
    ) -> Subspace {
        assert!(ambient_dim > 0, "ambient dimension must be positive");
        if rows.is_empty() {
            return Subspace::zero(field, ambient_dim);
        }
        for row in &rows {
            assert_eq!(row.len(), ambient_dim, "row length must match ambient");
        }
        let (r, rank) = Matrix::from_rows(rows).rref();
        let mut basis = Vec::with_capacity(rank);
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            let row = r.row(i).to_vec();
            let pivot = row
                .iter()
                .position(|e| !e.is_zero())
                .expect("nonzero row above the rank");
            basis.push(row);
            pivots.push(pivot);
        }
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn span_of_vector(v: &[FieldScalar]) -> Subspace {
        assert!(!v.is_empty(), "empty vector has no ambient space");
        Subspace::from_rows(v[0].field(), v.len(), vec![v.to_vec()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<FieldScalar>] {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.field, other.field, "subspaces over different fields");
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "subspaces of different ambient spaces"
        );
    }

    /// The canonical remainder of v modulo this subspace. The remainder is
    /// zero exactly when v lies in the subspace, and the map v -> reduce(v)
    /// is linear.
    pub fn reduce(&self, v: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(
            v.len(),
            self.ambient_dim,
            "vector length must match ambient"
        );
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.ambient_dim {
                v[j] = &v[j] - &(&c * &row[j]);
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[FieldScalar]) -> bool {
        self.reduce(v).iter().all(FieldScalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        other.basis.iter().all(|row| self.contains_vector(row))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.field, self.ambient_dim, rows)
    }

    /// Intersection via the left kernel of the stacked bases: a relation
    /// x1 * B1 + x2 * B2 = 0 exhibits the common vector x1 * B1.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        let stacked = Matrix::from_rows(rows);
        let relations = stacked.transpose().kernel();
        let common: Vec<Vec<FieldScalar>> = relations
            .basis()
            .iter()
            .map(|rel| {
                let mut v = vec![self.field.zero(); self.ambient_dim];
                for (i, row) in self.basis.iter().enumerate() {
                    if rel[i].is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient_dim {
                        v[j] = &v[j] + &(&rel[i] * &row[j]);
                    }
                }
                v
            })
            .collect();
        Subspace::from_rows(self.field, self.ambient_dim, common)
    }

    /// The image of this subspace under an operator acting on columns.
    pub fn apply(&self, op: &Matrix) -> Subspace {
        assert!(op.is_square(), "operator must be square");
        assert_eq!(
            op.rows(),
            self.ambient_dim,
            "operator size must match ambient"
        );
        assert_eq!(op.field(), self.field, "operator over a different field");
        let images = self.basis.iter().map(|v| op.mul_vector(v)).collect();
        Subspace::from_rows(self.field, self.ambient_dim, images)
    }

    pub fn is_invariant_under(&self, op: &Matrix) -> bool {
        self.contains(&self.apply(op))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "zero subspace of dimension {} ambient", self.ambient_dim);
        }
        let m = Matrix::from_rows(self.basis.clone());
        write!(f, "{m}")
    }
}

/// Outcome of a fixpoint iteration, with the number of passes until the
/// chain stabilized (the final confirming pass included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointRun {
    pub subspace: Subspace,
    pub iterations: usize,
}

/// The smallest subspace containing `seed` that is invariant under every
/// operator: the module generated by the seed.
pub fn generated_module(seed: &Subspace, ops: &[Matrix]) -> Subspace {
    generated_module_run(seed, ops).subspace
}

/// As [`generated_module`], also reporting the iteration count. The chain
/// grows strictly until it stabilizes, so at most `ambient_dim` passes run.
pub fn generated_module_run(seed: &Subspace, ops: &[Matrix]) -> FixpointRun {
    for op in ops {
        assert_eq!(
            op.rows(),
            seed.ambient_dim(),
            "operator size must match ambient"
        );
    }
    let mut current = seed.clone();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let mut next = current.clone();
        for op in ops {
            next = next.sum(&current.apply(op));
        }
        debug_assert!(next.contains(&current), "growing chain");
        if next.dim() == current.dim() {
            debug_assert!(iterations <= seed.ambient_dim().max(1), "stabilizes early");
            return FixpointRun {
                subspace: next,
                iterations,
            };
        }
        current = next;
    }
}

/// The largest subspace of `container` that is invariant under every
/// operator. Dual to [`generated_module`].
pub fn invariant_core(container: &Subspace, ops: &[Matrix]) -> Subspace {
    invariant_core_run(container, ops).subspace
}

/// As [`invariant_core`], also reporting the iteration count. The chain
/// shrinks strictly until it stabilizes, so at most `ambient_dim` passes run.
pub fn invariant_core_run(container: &Subspace, ops: &[Matrix]) -> FixpointRun {
    for op in ops {
        assert_eq!(
            op.rows(),
            container.ambient_dim(),
            "operator size must match ambient"
        );
    }
    let mut current = container.clone();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let next = shrink_once(&current, ops);
        debug_assert!(current.contains(&next), "shrinking chain");
        if next.dim() == current.dim() {
            debug_assert!(
                iterations <= container.ambient_dim().max(1),
                "stabilizes early"
            );
            return FixpointRun {
                subspace: next,
                iterations,
            };
        }
        current = next;
    }
}

/// One shrink pass: the vectors of w whose image under every op stays in w.
///
/// Writing w = { c * B } for the basis matrix B, the condition on the
/// coefficient row c is linear: c * reduce_rows(B * op^T) = 0 for every op,
/// because reduction modulo w is linear. The surviving coefficients are the
/// left kernel of the stacked residual matrices.
fn shrink_once(w: &Subspace, ops: &[Matrix]) -> Subspace {
    let k = w.dim();
    if k == 0 || ops.is_empty() {
        return w.clone();
    }
    let n = w.ambient_dim();
    let field = w.field();
    let residual_rows: Vec<Vec<FieldScalar>> = (0..k)
        .map(|i| {
            let mut row = Vec::with_capacity(ops.len() * n);
            for op in ops {
                row.extend(w.reduce(&op.mul_vector(&w.basis()[i])));
            }
            row
        })
        .collect();
    let residual = Matrix::from_rows(residual_rows);
    let coeffs = residual.transpose().kernel();
    let rows: Vec<Vec<FieldScalar>> = coeffs
        .basis()
        .iter()
        .map(|c| {
            let mut v = vec![field.zero(); n];
            for (i, row) in w.basis().iter().enumerate() {
                if c[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    v[j] = &v[j] + &(&c[i] * &row[j]);
                }
            }
            v
        })
        .collect();
    Subspace::from_rows(field, n, rows)
}

/// Deterministic transversal of `w` inside `superspace`: greedily adjoins the
/// earliest standard basis vectors of the ambient space that lie in the
/// superspace and are independent modulo `w` plus the vectors chosen so far,
/// then falls back to the superspace's own basis rows. The result is the
/// lexicographically earliest standard-coordinate completion.
pub fn completion_transversal(w: &Subspace, superspace: &Subspace) -> Vec<Vec<FieldScalar>> {
    w.check_compatible(superspace);
    assert!(superspace.contains(w), "w must lie inside the superspace");
    let n = w.ambient_dim();
    let field = w.field();
    let target = superspace.dim() - w.dim();
    let mut chosen = Vec::with_capacity(target);
    let mut span = w.clone();
    let standard = (0..n).map(|i| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    });
    let candidates = standard.chain(superspace.basis().iter().cloned());
    for v in candidates {
        if chosen.len() == target {
            break;
        }
        if !superspace.contains_vector(&v) || span.contains_vector(&v) {
            continue;
        }
        span = span.sum(&Subspace::span_of_vector(&v));
        chosen.push(v);
    }
    assert_eq!(chosen.len(), target, "superspace basis completes the span");
    chosen
}

/// Failure modes of [`quotient_action`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedActionError {
    /// The operator does not map `w` into `w`, so no action is induced.
    NotInvariant,
    /// The operator maps a transversal vector outside of span(w, transversal).
    OutsideSpan,
}

impl fmt::Display for InducedActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedActionError::NotInvariant => {
                write!(f, "subspace is not invariant under the operator")
            }
            InducedActionError::OutsideSpan => write!(
                f,
                "operator leaves the span of the subspace and the transversal"
            ),
        }
    }
}

impl std::error::Error for InducedActionError {}

/// The matrix of the action induced by `op` on span(w, transversal)/w in the
/// basis given by the transversal (classes transversal[j] + w).
///
/// Column j holds the transversal coordinates of op * transversal[j] after
/// discarding its w component.
pub fn quotient_action(
    op: &Matrix,
    w: &Subspace,
    transversal: &[Vec<FieldScalar>],
) -> Result<Matrix, InducedActionError> {
    assert!(op.is_square(), "operator must be square");
    assert_eq!(
        op.rows(),
        w.ambient_dim(),
        "operator size must match ambient"
    );
    assert!(!transversal.is_empty(), "empty transversal basis");
    let field = w.field();
    if !w.is_invariant_under(op) {
        return Err(InducedActionError::NotInvariant);
    }
    let mut spanning = w.basis().to_vec();
    spanning.extend(transversal.iter().cloned());
    let coords = Matrix::from_rows(spanning).transpose();
    let q = transversal.len();
    let mut columns = Vec::with_capacity(q);
    for t in transversal {
        assert_eq!(
            t.len(),
            w.ambient_dim(),
            "transversal vector length mismatch"
        );
        let image = op.mul_vector(t);
        let solution = coords
            .solve(&image)
            .ok_or(InducedActionError::OutsideSpan)?;
        columns.push(solution[w.dim()..].to_vec());
    }
    Ok(Matrix::from_fn(field, q, q, |i, j| columns[j][i].clone()))
}
