//! Subspaces of K^n represented by their reduced row-echelon basis.
//!
//! The echelon basis is the canonical representative: two subspaces are equal
//! iff their basis matrices are equal entry for entry. Sum, intersection and
//! membership all reduce to eliminations, so the whole lattice is exact.

use super::matrix::{kernel_basis, rref, Matrix};
use super::scalar::{Backend, Scalar};
use super::LinalgError;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    backend: Backend,
    /// RREF basis, one row per dimension; no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace dim {} of K^{}\n{:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(backend: Backend, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            backend,
            basis: Matrix::zero(backend, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(backend: Backend, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            backend,
            basis: Matrix::identity(backend, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, echelonized.
    pub fn from_generators(backend: Backend, ambient: usize, gens: Vec<Vec<Scalar>>) -> Result<Subspace, LinalgError> {
        let m = Matrix::from_rows(backend, gens, ambient)?;
        Ok(Self::from_matrix_span(&m))
    }

    /// Row space of a matrix.
    pub fn from_matrix_span(m: &Matrix) -> Subspace {
        let out = rref(m);
        let rows: Vec<Vec<Scalar>> = (0..out.rank).map(|r| out.matrix.row(r).to_vec()).collect();
        let basis = Matrix::from_rows(m.backend(), rows, m.cols()).expect("echelon rows rectangular");
        Subspace { ambient: m.cols(), backend: m.backend(), basis, pivots: out.pivots }
    }

    /// Kernel of a matrix, as a subspace of K^cols.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        let gens = kernel_basis(m);
        Subspace::from_generators(m.backend(), m.cols(), gens).expect("kernel vectors conform")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.backend != other.backend {
            return Err(LinalgError::BackendMismatch {
                expected: self.backend.to_string(),
                got: other.backend.to_string(),
            });
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_matrix_span(&stacked))
    }

    /// Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry an
    /// intersection basis in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis.row_vecs() {
            let mut row = r.clone();
            row.extend(r);
            rows.push(row);
        }
        let zero = Scalar::zero(self.backend);
        for r in other.basis.row_vecs() {
            let mut row = r;
            row.resize(2 * n, zero.clone());
            rows.push(row);
        }
        let m = Matrix::from_rows(self.backend, rows, 2 * n)?;
        let out = rref(&m);
        let mut gens = Vec::new();
        for r in 0..out.rank {
            let row = out.matrix.row(r);
            if row[..n].iter().all(Scalar::is_zero) {
                gens.push(row[n..].to_vec());
            }
        }
        Subspace::from_generators(self.backend, n, gens)
    }

    /// Reduce `v` against the echelon basis; the residual is the canonical
    /// representative of `v` modulo this subspace (zero iff `v` is a member).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient dimension");
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            let f = w[pc].clone();
            for c in pc..self.ambient {
                let b = self.basis.at(i, c);
                if !b.is_zero() {
                    w[c] = &w[c] - &(&f * b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Columns without a pivot; residuals of `reduce` are supported here.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().copied().peekable();
        let mut free = Vec::with_capacity(self.ambient - self.pivots.len());
        for c in 0..self.ambient {
            if it.peek() == Some(&c) {
                it.next();
            } else {
                free.push(c);
            }
        }
        free
    }

    /// Residual of `v` restricted to the non-pivot columns. Stacking these
    /// over a family of vectors turns "v in subspace" constraints into a
    /// kernel computation in codimension-many coordinates.
    pub fn residual_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let w = self.reduce(v);
        self.non_pivot_columns().iter().map(|&c| w[c].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[&[i64]], ambient: usize) -> Subspace {
        let m = Matrix::from_i64_rows(Backend::Rational, rows);
        assert_eq!(m.cols(), ambient);
        Subspace::from_matrix_span(&m)
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let s = span(&[&[1, 0, 2], &[0, 1, 1]], 3);
        let z = Subspace::zero(Backend::Rational, 3);
        assert_eq!(s.sum(&z).unwrap(), s);
    }

    #[test]
    fn intersect_with_full_is_identity() {
        let s = span(&[&[1, 2, 3]], 3);
        let f = Subspace::full(Backend::Rational, 3);
        assert_eq!(s.intersect(&f).unwrap(), s);
    }

    #[test]
    fn dimension_formula_on_named_subspaces() {
        let s = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        let t = span(&[&[0, 1, 0, 0], &[0, 0, 1, 0]], 4);
        let sum = s.sum(&t).unwrap();
        let meet = s.intersect(&t).unwrap();
        assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(Matrix::from_i64_rows(Backend::Rational, &[&[0, 1, 0, 0]]).row(0)));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let s = span(&[&[1, 0]], 2);
        let t = span(&[&[1, 0, 0]], 3);
        assert!(s.sum(&t).is_err());
        assert!(s.intersect(&t).is_err());
    }

    #[test]
    fn reduce_gives_canonical_residual() {
        let s = span(&[&[1, 0, 5], &[0, 1, -1]], 3);
        let v = Matrix::from_i64_rows(Backend::Rational, &[&[2, 3, 8]]).row(0).to_vec();
        let r = s.reduce(&v);
        // residual supported on the single non-pivot column
        assert!(r[0].is_zero() && r[1].is_zero());
        assert!(!s.contains(&v));
        let member = Matrix::from_i64_rows(Backend::Rational, &[&[1, 1, 4]]).row(0).to_vec();
        assert!(s.contains(&member));
    }
}
