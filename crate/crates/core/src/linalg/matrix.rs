//! Dense row-major matrices over an exact field, with reduced row-echelon
//! form as the canonical normal form.
//!
//! Over the rationals the forward pass is fraction-free (Bareiss-style
//! condensation on denominator-cleared rows) so intermediate entries stay
//! minor-bounded; pivots are normalized and back-eliminated afterwards.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use super::scalar::{Backend, Scalar};
use super::LinalgError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    backend: Backend,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [{}]", self.rows, self.cols, self.backend)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Output of `rref`: the reduced matrix, its pivot columns, and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefOutput {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zero(backend: Backend, rows: usize, cols: usize) -> Matrix {
        Matrix {
            backend,
            rows,
            cols,
            entries: vec![Scalar::zero(backend); rows * cols],
        }
    }

    pub fn identity(backend: Backend, n: usize) -> Matrix {
        let mut m = Matrix::zero(backend, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(backend));
        }
        m
    }

    /// Build from rows, checking rectangularity and a single shared backend.
    pub fn from_rows(backend: Backend, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix, LinalgError> {
        for row in &rows {
            if row.len() != cols {
                return Err(LinalgError::NotRectangular { expected: cols, got: row.len() });
            }
            for e in row {
                if e.backend() != backend {
                    return Err(LinalgError::BackendMismatch {
                        expected: backend.to_string(),
                        got: e.backend().to_string(),
                    });
                }
            }
        }
        let n = rows.len();
        Ok(Matrix { backend, rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(backend: Backend, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&n| Scalar::from_i64(n, backend)).collect())
            .collect();
        Matrix::from_rows(backend, data, cols).expect("literal rows rectangular")
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.backend(), self.backend, "entry backend");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(self.backend);
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "conformable shapes");
        let mut out = Matrix::zero(self.backend, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Vertical stack; backends and widths must agree.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.backend != other.backend {
            return Err(LinalgError::BackendMismatch {
                expected: self.backend.to_string(),
                got: other.backend.to_string(),
            });
        }
        if self.cols != other.cols {
            return Err(LinalgError::NotRectangular { expected: self.cols, got: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { backend: self.backend, rows: self.rows + other.rows, cols: self.cols, entries })
    }
}

/// Reduced row-echelon form, the pivot column list, and the rank.
///
/// Deterministic: the pivot of each step is the first nonzero entry in
/// column order, so identical inputs give bit-identical outputs.
pub fn rref(m: &Matrix) -> RrefOutput {
    match m.backend() {
        Backend::Rational => rref_rational(m),
        Backend::Prime(_) => rref_generic(m),
    }
}

/// Fraction-free forward elimination on denominator-cleared rows, then pivot
/// normalization and upward elimination.
fn rref_rational(m: &Matrix) -> RrefOutput {
    let rows = m.rows();
    let cols = m.cols();
    // Clear denominators row by row; scaling a row does not change the RREF.
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let mut lcm = BigInt::one();
            for c in 0..cols {
                let q = m.at(r, c).as_rational().expect("rational backend");
                lcm = lcm.lcm(q.denom());
            }
            (0..cols)
                .map(|c| {
                    let q = m.at(r, c).as_rational().unwrap();
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                // Still rescale to keep the Bareiss divisibility invariant.
                for c in col..cols {
                    let v = &a[r][c] * &pivot;
                    a[r][c] = &v / &prev;
                }
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let v = &a[r][c] * &pivot - &factor * &a[rank][c];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                a[r][c] = &v / &prev;
            }
        }
        prev = pivot;
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // Normalize pivots to 1 and eliminate above, now in rational arithmetic.
    let mut rat: Vec<Vec<BigRational>> = a
        .into_iter()
        .take(rank)
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for i in (0..rank).rev() {
        let col = pivots[i];
        let inv = rat[i][col].clone();
        for c in col..cols {
            if !rat[i][c].is_zero() {
                let v = &rat[i][c] / &inv;
                rat[i][c] = v;
            }
        }
        for r in 0..i {
            if rat[r][col].is_zero() {
                continue;
            }
            let f = rat[r][col].clone();
            for c in col..cols {
                if !rat[i][c].is_zero() {
                    let v = &rat[r][c] - &f * &rat[i][c];
                    rat[r][c] = v;
                }
            }
        }
    }

    let mut out = Matrix::zero(Backend::Rational, rows, cols);
    for (r, row) in rat.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            if !v.is_zero() {
                out.set(r, c, Scalar::Rat(v));
            }
        }
    }
    RrefOutput { matrix: out, pivots, rank }
}

/// Plain Gauss-Jordan; used for prime fields where entry growth is moot.
fn rref_generic(m: &Matrix) -> RrefOutput {
    let rows = m.rows();
    let cols = m.cols();
    let backend = m.backend();
    let mut a = m.row_vecs();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = a[rank][col].inv().expect("nonzero pivot");
        for c in col..cols {
            if !a[rank][c].is_zero() {
                a[rank][c] = &a[rank][c] * &inv;
            }
        }
        for r in 0..rows {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..cols {
                if !a[rank][c].is_zero() {
                    a[r][c] = &a[r][c] - &(&f * &a[rank][c]);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    for row in a.iter_mut().skip(rank) {
        for e in row.iter_mut() {
            *e = Scalar::zero(backend);
        }
    }
    let out = Matrix::from_rows(backend, a, cols).expect("shape preserved");
    RrefOutput { matrix: out, pivots, rank }
}

/// Basis of the right kernel {v : m v = 0}, one generator per free column.
/// Rows come back echelonized through `Subspace::from_generators` upstream;
/// here the raw free-column basis is returned.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let RrefOutput { matrix: r, pivots, rank } = rref(m);
    let backend = m.backend();
    let cols = m.cols();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(backend); cols];
            v[fc] = Scalar::one(backend);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                let coeff = r.at(i, fc);
                if !coeff.is_zero() {
                    v[pc] = -coeff;
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d, Backend::Rational)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(Backend::Rational, 2);
        let out = rref(&m);
        assert_eq!(out.matrix, m);
        assert_eq!(out.pivots, vec![0, 1]);
        assert_eq!(out.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_i64_rows(Backend::Rational, &[&[1, 2], &[2, 4]]);
        let out = rref(&m);
        assert_eq!(out.rank, 1);
        assert_eq!(out.matrix, Matrix::from_i64_rows(Backend::Rational, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_is_idempotent_with_fractions() {
        let m = Matrix::from_rows(
            Backend::Rational,
            vec![
                vec![q(1, 2), q(2, 3), q(0, 1)],
                vec![q(3, 1), q(-1, 5), q(7, 2)],
            ],
            3,
        )
        .unwrap();
        let once = rref(&m);
        let twice = rref(&once.matrix);
        assert_eq!(once.matrix, twice.matrix);
        assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let m = Matrix::identity(Backend::Rational, 3);
        assert!(kernel_basis(&m).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = Matrix::zero(Backend::Rational, 2, 4);
        assert_eq!(kernel_basis(&m).len(), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64_rows(Backend::Rational, &[&[1, 1, 0]]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn mixed_backend_rejected_at_construction() {
        let rows = vec![vec![Scalar::one(Backend::Rational), Scalar::one(Backend::Prime(5))]];
        assert!(Matrix::from_rows(Backend::Rational, rows, 2).is_err());
    }

    #[test]
    fn rref_over_prime_field() {
        let m = Matrix::from_i64_rows(Backend::Prime(7), &[&[2, 4], &[1, 2]]);
        let out = rref(&m);
        assert_eq!(out.rank, 1);
        assert_eq!(out.matrix, Matrix::from_i64_rows(Backend::Prime(7), &[&[1, 2], &[0, 0]]));
    }
}
