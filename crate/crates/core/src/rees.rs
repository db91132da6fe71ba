//! The Rees ring of the standard filtration on U(g) — the homogenized
//! enveloping algebra H(g) — and the faithfulness-transfer certificate.
//!
//! A homogeneous element of degree n is u z^n with u in U_n, stored as the
//! pair (n, u); multiplication adds degrees and multiplies coefficients, so
//! U[z] is never materialized.

use crate::lie_env::{anchors as env_anchors, faithfulness_certificate_env, Enveloping, LieError, UeaElement};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::report::{CertificateReport, CheckRecord, CheckStatus, Verdict};

pub mod anchors {
    pub const LEMMA_RR: &str = "Lemma RR: U/Ux faithful iff H/H(x z) faithful";
    pub const H1: &str = "H(g)(1) = Kz + gz";
}

/// u z^n with deg u <= n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesElement {
    degree: usize,
    coeff: UeaElement,
}

impl ReesElement {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self) -> &UeaElement {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

/// u z^n, defined only when deg u <= n.
pub fn homogenize(u: &UeaElement, n: usize) -> Result<ReesElement, LieError> {
    if !u.is_zero() && u.degree() > n {
        return Err(LieError::DegreeOverflow { degree: u.degree(), cap: n });
    }
    Ok(ReesElement { degree: n, coeff: u.clone() })
}

pub fn rees_multiply(env: &Enveloping, a: &ReesElement, b: &ReesElement) -> ReesElement {
    ReesElement {
        degree: a.degree + b.degree,
        coeff: env.multiply(&a.coeff, &b.coeff),
    }
}

/// dim of the graded piece H(g)(n) = U_n z^n.
pub fn graded_dim(env: &Enveloping, n: usize) -> usize {
    env.filtration_dim(n)
}

/// Graded annihilator stratum of H/H(x z) at degree m, truncated: elements
/// u z^m whose products with every basis monomial of U_k land in the ideal
/// slice, for k = 0..=window. Constraints accumulate until the stratum dies
/// or the window is exhausted.
fn annihilator_stratum(
    env: &Enveloping,
    x: &UeaElement,
    m: usize,
    window: usize,
) -> Result<Subspace, LieError> {
    let backend = env.algebra().backend();
    let basis = env.filtration_basis(m);
    let mut current = Subspace::full(backend, basis.len());
    for k in 0..=window {
        if current.is_zero() {
            break;
        }
        let target = m + k;
        let lit = env.left_ideal_truncation(x, target.max(1))?;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for w in env.filtration_basis(k) {
            let mut wit = UeaElement::zero();
            wit.add_term(w, Scalar::one(backend));
            let mut cols = Vec::with_capacity(basis.len());
            for mon in &basis {
                let mut u = UeaElement::zero();
                u.add_term(mon.clone(), Scalar::one(backend));
                let prod = env.multiply(&u, &wit);
                cols.push(lit.residual_coords(&env.element_to_vector(&prod, target.max(1))?));
            }
            let res_len = cols.first().map_or(0, Vec::len);
            for i in 0..res_len {
                rows.push(cols.iter().map(|c| c[i].clone()).collect());
            }
        }
        let mat = Matrix::from_rows(backend, rows, basis.len())?;
        current = current.intersect(&Subspace::kernel_of(&mat))?;
    }
    Ok(current)
}

/// The transfer certificate: run the filtered certificate on U/Ux, compute
/// the truncated graded annihilator strata of H/H(x z), and require the two
/// verdicts to agree.
pub fn verify_rees_transfer(env: &Enveloping, x: &UeaElement, d: usize) -> CertificateReport {
    let mut checks = Vec::new();

    if env.split_affine(x).is_none_or(|(lin, _)| lin.iter().all(Scalar::is_zero)) {
        checks.push(
            CheckRecord::new("transfer preconditions", anchors::LEMMA_RR, CheckStatus::PreconditionError)
                .with("reason", "x must lie in U_1 with nonzero degree-1 part"),
        );
        return CertificateReport::from_checks(checks);
    }

    let filtered = faithfulness_certificate_env(env, x, d, None, None);
    let filtered_status = match filtered.verdict {
        Verdict::Pass => CheckStatus::Pass,
        Verdict::Fail => CheckStatus::Fail,
        Verdict::Inconclusive => CheckStatus::Inconclusive,
        Verdict::Error => CheckStatus::PreconditionError,
    };
    checks.push(
        CheckRecord::new("filtered certificate on U/Ux", env_anchors::THEOREM_EA, filtered_status)
            .with("degree_cap", d),
    );
    if matches!(filtered.verdict, Verdict::Error | Verdict::Inconclusive) {
        checks.push(
            CheckRecord::new("transfer agreement", anchors::LEMMA_RR, CheckStatus::Inconclusive)
                .with("reason", "filtered side produced no pass/fail verdict"),
        );
        return CertificateReport::from_checks(checks);
    }
    let filtered_pass = filtered.verdict == Verdict::Pass;

    let mut strata_dims: Vec<i64> = Vec::new();
    let mut graded_pass = true;
    for m in 0..=d {
        match annihilator_stratum(env, x, m, d) {
            Ok(s) => {
                strata_dims.push(s.dim() as i64);
                if !s.is_zero() {
                    graded_pass = false;
                }
            }
            Err(e) => {
                checks.push(
                    CheckRecord::new("graded annihilator strata of H/H(x z)", anchors::LEMMA_RR, CheckStatus::PreconditionError)
                        .with("reason", e.to_string()),
                );
                return CertificateReport::from_checks(checks);
            }
        }
    }
    checks.push(
        CheckRecord::new(
            "graded annihilator strata of H/H(x z)",
            anchors::LEMMA_RR,
            if graded_pass { CheckStatus::Pass } else { CheckStatus::Fail },
        )
        .with("degree_cap", d)
        .with("stratum_dims", strata_dims),
    );

    checks.push(
        CheckRecord::new(
            "transfer agreement",
            anchors::LEMMA_RR,
            if filtered_pass == graded_pass { CheckStatus::Pass } else { CheckStatus::Fail },
        )
        .with("filtered", if filtered_pass { "pass" } else { "fail" })
        .with("graded", if graded_pass { "pass" } else { "fail" }),
    );
    CertificateReport::from_checks(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_env::LieAlgebra;
    use crate::linalg::Backend;

    fn env(name: &str) -> Enveloping {
        Enveloping::new(LieAlgebra::builtin(name, Backend::Rational).unwrap())
    }

    #[test]
    fn homogenize_respects_degree_bound() {
        let u = env("nonabelian2");
        assert!(homogenize(&u.one(), 0).is_ok());
        let x = u.generator(0);
        let x_tilde = homogenize(&x, 1).unwrap();
        assert_eq!(x_tilde.degree(), 1);
        // y z^2 is a legal z-multiple
        assert!(homogenize(&u.generator(1), 2).is_ok());
        // deg 2 coefficient cannot sit in degree 1
        assert!(homogenize(&u.multiply(&x, &x), 1).is_err());
    }

    #[test]
    fn h1_has_dimension_dim_g_plus_one() {
        for (name, expect) in [("abelian2", 3), ("nonabelian2", 3), ("heisenberg", 4), ("sl2", 4)] {
            let u = env(name);
            assert_eq!(graded_dim(&u, 1), expect, "{name}");
        }
    }

    #[test]
    fn rees_product_degree_and_coefficient() {
        let u = env("nonabelian2");
        let x_t = homogenize(&u.generator(0), 1).unwrap();
        let y_t = homogenize(&u.generator(1), 1).unwrap();
        let xy = rees_multiply(&u, &x_t, &y_t);
        assert_eq!(xy.degree(), 2);
        assert_eq!(*xy.coeff(), u.multiply(&u.generator(0), &u.generator(1)));

        // ytilde xtilde - xtilde ytilde = -(y z) z in H(2)
        let com = rees_multiply(&u, &y_t, &x_t).coeff().sub(rees_multiply(&u, &x_t, &y_t).coeff());
        let expect = homogenize(&u.generator(1).scale(&Scalar::from_i64(-1, Backend::Rational)), 2).unwrap();
        assert_eq!(com, *expect.coeff());
    }

    #[test]
    fn central_z_multiplication_is_a_degree_shift() {
        let u = env("heisenberg");
        // z-multiplication in the Rees ring: homogenize(1, 1) shifts degree
        // without touching the coefficient
        let z = homogenize(&u.one(), 1).unwrap();
        let a = homogenize(&u.multiply(&u.generator(0), &u.generator(1)), 3).unwrap();
        let shifted = rees_multiply(&u, &z, &a);
        assert_eq!(shifted.degree(), 4);
        assert_eq!(shifted.coeff(), a.coeff());
        assert_eq!(rees_multiply(&u, &a, &z), shifted);
    }

    #[test]
    fn rees_multiplication_is_associative_on_samples() {
        let u = env("heisenberg");
        let a = homogenize(&u.generator(0), 1).unwrap();
        let b = homogenize(&u.generator(1), 2).unwrap();
        let c = homogenize(&u.multiply(&u.generator(2), &u.generator(0)), 2).unwrap();
        let left = rees_multiply(&u, &rees_multiply(&u, &a, &b), &c);
        let right = rees_multiply(&u, &a, &rees_multiply(&u, &b, &c));
        assert_eq!(left, right);
        assert_eq!(left.degree(), 5);
    }

    #[test]
    fn transfer_agreement_nonabelian2() {
        let u = env("nonabelian2");
        let report = verify_rees_transfer(&u, &u.generator(0), 3);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn transfer_agreement_abelian_fails_both_sides() {
        let u = env("abelian2");
        let report = verify_rees_transfer(&u, &u.generator(0), 3);
        assert_eq!(report.verdict, Verdict::Fail);
        let agreement = report.checks.iter().find(|c| c.name == "transfer agreement").unwrap();
        assert_eq!(agreement.status, CheckStatus::Pass, "fail/fail still agrees");
    }
}
