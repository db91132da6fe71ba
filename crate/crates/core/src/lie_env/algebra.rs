//! Finite-dimensional Lie algebras given by structure constants, with the
//! adjoint-representation utilities the faithfulness certificates need.

use num::rational::BigRational;
use num::Zero;

use crate::linalg::{Backend, Matrix, Scalar, Subspace};
use crate::numutil::rational_roots;

use super::LieError;

/// A Lie algebra as structure constants over a fixed basis:
/// [x_i, x_j] = sum_k c[i][j][k] x_k.
///
/// Construction stores the constants as given; `check_lie_axioms` decides
/// whether they actually define a Lie algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    backend: Backend,
    dim: usize,
    labels: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis {:?})", self.dim, self.labels)
    }
}

impl LieAlgebra {
    /// Build from a sparse list of entries (i, j, k, value) setting
    /// c[i][j][k] = value literally; missing entries are zero.
    pub fn from_structure_constants(
        backend: Backend,
        dim: usize,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<LieAlgebra, LieError> {
        if labels.len() != dim {
            return Err(LieError::BadConstruction(format!(
                "{} labels for dimension {dim}",
                labels.len()
            )));
        }
        let zero = Scalar::zero(backend);
        let mut c = vec![vec![vec![zero; dim]; dim]; dim];
        for &(i, j, k, ref v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(LieError::BadConstruction(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if v.backend() != backend {
                return Err(LieError::BadConstruction(format!(
                    "structure constant backend {} does not match {}",
                    v.backend(),
                    backend
                )));
            }
            c[i][j][k] = v.clone();
        }
        Ok(LieAlgebra { backend, dim, labels, c })
    }

    /// Build from brackets [x_i, x_j] for i < j; the antisymmetric mirror is
    /// filled in automatically.
    pub fn from_brackets(
        backend: Backend,
        labels: &[&str],
        brackets: &[(usize, usize, &[(usize, i64)])],
    ) -> LieAlgebra {
        let dim = labels.len();
        let mut entries = Vec::new();
        for &(i, j, terms) in brackets {
            for &(k, v) in terms {
                entries.push((i, j, k, Scalar::from_i64(v, backend)));
                entries.push((j, i, k, Scalar::from_i64(-v, backend)));
            }
        }
        LieAlgebra::from_structure_constants(
            backend,
            dim,
            labels.iter().map(|s| s.to_string()).collect(),
            &entries,
        )
        .expect("builtin structure constants well-formed")
    }

    /// Built-in algebras: "abelian2", "nonabelian2", "heisenberg", "sl2".
    pub fn builtin(name: &str, backend: Backend) -> Option<LieAlgebra> {
        match name {
            "abelian2" => Some(LieAlgebra::from_brackets(backend, &["x", "y"], &[])),
            // [x, y] = y
            "nonabelian2" => {
                Some(LieAlgebra::from_brackets(backend, &["x", "y"], &[(0, 1, &[(1, 1)])]))
            }
            // [x, y] = z, z central
            "heisenberg" => {
                Some(LieAlgebra::from_brackets(backend, &["x", "y", "z"], &[(0, 1, &[(2, 1)])]))
            }
            // basis (e, f, h): [e, f] = h, [h, e] = 2e, [h, f] = -2f
            "sl2" => Some(LieAlgebra::from_brackets(
                backend,
                &["e", "f", "h"],
                &[(0, 1, &[(2, 1)]), (2, 0, &[(0, 2)]), (2, 1, &[(1, -2)])],
            )),
            _ => None,
        }
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    /// [u, v] for coefficient vectors u, v.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.backend); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] = &out[k] + &(&uv * &self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    /// Antisymmetry and the Jacobi identity, checked exactly over all
    /// basis triples.
    pub fn check_lie_axioms(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !(&self.c[i][j][k] + &self.c[j][i][k]).is_zero() {
                        return false;
                    }
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    for m in 0..self.dim {
                        // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0, coefficient of x_m
                        let mut acc = Scalar::zero(self.backend);
                        for l in 0..self.dim {
                            acc = &acc + &(&self.c[i][j][l] * &self.c[l][k][m]);
                            acc = &acc + &(&self.c[j][k][l] * &self.c[l][i][m]);
                            acc = &acc + &(&self.c[k][i][l] * &self.c[l][j][m]);
                        }
                        if !acc.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Matrix of ad(x) in the fixed basis: column j holds [x, x_j].
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim, "element dimension");
        let mut m = Matrix::zero(self.backend, self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut acc = Scalar::zero(self.backend);
                for i in 0..self.dim {
                    if !x[i].is_zero() && !self.c[i][j][k].is_zero() {
                        acc = &acc + &(&x[i] * &self.c[i][j][k]);
                    }
                }
                m.set(k, j, acc);
            }
        }
        m
    }

    /// (ad x)^dim = 0?
    pub fn is_ad_nilpotent(&self, x: &[Scalar]) -> bool {
        let ad = self.ad_matrix(x);
        let mut power = Matrix::identity(self.backend, self.dim);
        for _ in 0..self.dim {
            power = ad.mat_mul(&power);
        }
        power.is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// Center of the Lie algebra: {v : [v, x_j] = 0 for all j}.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|i| self.c[i][j][k].clone()).collect());
            }
        }
        let m = Matrix::from_rows(self.backend, rows, self.dim).expect("square system");
        Subspace::kernel_of(&m)
    }

    /// Lower central series termination.
    pub fn is_nilpotent(&self) -> bool {
        let full = Subspace::full(self.backend, self.dim);
        let mut current = full;
        for _ in 0..=self.dim {
            if current.is_zero() {
                return true;
            }
            let mut gens = Vec::new();
            for i in 0..self.dim {
                let mut e = vec![Scalar::zero(self.backend); self.dim];
                e[i] = Scalar::one(self.backend);
                for w in current.basis_vectors() {
                    gens.push(self.bracket(&e, &w));
                }
            }
            let next = Subspace::from_generators(self.backend, self.dim, gens)
                .expect("bracket vectors conform");
            if next == current {
                return false; // series stabilized above zero
            }
            current = next;
        }
        false
    }

    /// Characteristic polynomial of a square matrix by Faddeev-LeVerrier;
    /// coefficients of t^0 .. t^dim. Needs invertible 1..=dim in the field.
    fn char_poly(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let n = m.rows();
        if let Backend::Prime(p) = self.backend {
            if p <= n as u64 {
                return None;
            }
        }
        let one = Scalar::one(self.backend);
        let mut coeffs = vec![Scalar::zero(self.backend); n + 1];
        coeffs[n] = one.clone();
        let mut aux = Matrix::identity(self.backend, n);
        for k in 1..=n {
            aux = m.mat_mul(&aux);
            let mut trace = Scalar::zero(self.backend);
            for i in 0..n {
                trace = &trace + aux.at(i, i);
            }
            let c = &(-&trace) / &Scalar::from_i64(k as i64, self.backend);
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let v = aux.at(i, i) + &c;
                aux.set(i, i, v);
            }
        }
        Some(coeffs)
    }

    /// A nonzero eigenvalue of ad(x') in the ground field together with an
    /// eigenvector: [x', y] = lambda y. `None` when the spectrum has no
    /// nonzero root in the field (the configuration must then supply one).
    pub fn find_rational_eigenpair(&self, x: &[Scalar]) -> Option<(Scalar, Vec<Scalar>)> {
        let ad = self.ad_matrix(x);
        let poly = self.char_poly(&ad)?;
        let lambda = match self.backend {
            Backend::Rational => {
                let coeffs: Vec<BigRational> =
                    poly.iter().map(|c| c.as_rational().unwrap().clone()).collect();
                let mut roots = rational_roots(&coeffs)?;
                roots.retain(|r| !r.is_zero());
                // Deterministic choice: the largest nonzero rational root.
                roots.into_iter().max().map(Scalar::Rat)?
            }
            Backend::Prime(p) => {
                if p > 1 << 20 {
                    return None; // residue scan would be unbounded
                }
                let mut found = None;
                for v in 1..p {
                    let cand = Scalar::Fp { p, val: v };
                    let mut acc = Scalar::zero(self.backend);
                    for c in poly.iter().rev() {
                        acc = &(&acc * &cand) + c;
                    }
                    if acc.is_zero() {
                        found = Some(cand);
                        break;
                    }
                }
                found?
            }
        };
        // Eigenvector: first echelon basis vector of ker(ad - lambda I).
        let mut shifted = ad;
        for i in 0..self.dim {
            let v = shifted.at(i, i) - &lambda;
            shifted.set(i, i, v);
        }
        let kernel = Subspace::kernel_of(&shifted);
        let y = kernel.basis_vectors().into_iter().next()?;
        Some((lambda, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n, Backend::Rational)
    }

    #[test]
    fn axioms_hold_for_builtins() {
        for name in ["abelian2", "nonabelian2", "heisenberg", "sl2"] {
            let g = LieAlgebra::builtin(name, Backend::Rational).unwrap();
            assert!(g.check_lie_axioms(), "{name} satisfies the axioms");
        }
    }

    #[test]
    fn asymmetric_constants_fail_axioms() {
        // c[1][2][1] = 1 but c[2][1][1] = 0 in a 3-dim algebra
        let g = LieAlgebra::from_structure_constants(
            Backend::Rational,
            3,
            vec!["a".into(), "b".into(), "c".into()],
            &[(1, 2, 1, q(1))],
        )
        .unwrap();
        assert!(!g.check_lie_axioms());
    }

    #[test]
    fn ad_nilpotency_dispatch() {
        let ab = LieAlgebra::builtin("abelian2", Backend::Rational).unwrap();
        assert!(ab.is_ad_nilpotent(&[q(1), q(2)]));

        let sl2 = LieAlgebra::builtin("sl2", Backend::Rational).unwrap();
        let e = [q(1), q(0), q(0)];
        let h = [q(0), q(0), q(1)];
        assert!(sl2.is_ad_nilpotent(&e));
        assert!(!sl2.is_ad_nilpotent(&h));

        // 2-dim [x,y] = y: ad x = diag(0, 1) in basis (x, y)
        let na = LieAlgebra::builtin("nonabelian2", Backend::Rational).unwrap();
        assert!(!na.is_ad_nilpotent(&[q(1), q(0)]));
    }

    #[test]
    fn eigenpair_on_nonabelian2() {
        let g = LieAlgebra::builtin("nonabelian2", Backend::Rational).unwrap();
        let (lambda, y) = g.find_rational_eigenpair(&[q(1), q(0)]).unwrap();
        assert_eq!(lambda, q(1));
        assert_eq!(y, vec![q(0), q(1)]);
    }

    #[test]
    fn eigenpair_absent_for_nilpotent_adjoints() {
        let g = LieAlgebra::builtin("abelian2", Backend::Rational).unwrap();
        assert!(g.find_rational_eigenpair(&[q(1), q(2)]).is_none());
    }

    #[test]
    fn eigenpair_over_prime_field() {
        let p = Backend::prime(10007).unwrap();
        let g = LieAlgebra::builtin("sl2", p).unwrap();
        let h = [Scalar::zero(p), Scalar::zero(p), Scalar::one(p)];
        let (lambda, y) = g.find_rational_eigenpair(&h).unwrap();
        assert_eq!(lambda, Scalar::from_i64(2, p));
        assert_eq!(y[0], Scalar::one(p));
    }

    #[test]
    fn eigenpair_on_sl2_h() {
        let g = LieAlgebra::builtin("sl2", Backend::Rational).unwrap();
        let h = [q(0), q(0), q(1)];
        let (lambda, y) = g.find_rational_eigenpair(&h).unwrap();
        assert_eq!(lambda, q(2));
        assert_eq!(y, vec![q(1), q(0), q(0)], "eigenvector is e");
        let ad_y = g.bracket(&h, &y);
        assert_eq!(ad_y, vec![q(2), q(0), q(0)]);
    }

    #[test]
    fn nilpotency_and_center() {
        let h = LieAlgebra::builtin("heisenberg", Backend::Rational).unwrap();
        assert!(h.is_nilpotent());
        let z = h.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&[q(0), q(0), q(1)]));

        let na = LieAlgebra::builtin("nonabelian2", Backend::Rational).unwrap();
        assert!(!na.is_nilpotent());

        let sl2 = LieAlgebra::builtin("sl2", Backend::Rational).unwrap();
        assert!(!sl2.is_nilpotent());
        assert!(sl2.center().is_zero());
    }
}
