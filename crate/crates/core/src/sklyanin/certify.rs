//! Left-ideal membership and the truncated annihilator certificates for the
//! cyclic modules A/AL.
//!
//! Everything is decided in fixed graded components: the slice of AL in
//! degree m is span(V^(m-1) tensor L) + I(m), membership is reduction against
//! its echelon, and annihilator strata are kernels of residual matrices over
//! the standard-monomial coordinates of A(m).

use std::collections::BTreeMap;

use crate::linalg::{Backend, Matrix, Scalar, Subspace};
use crate::report::{CertificateReport, CheckRecord, CheckStatus};

use super::context::{AlgebraElement, SklyaninContext};
use super::echelon::SparseEchelon;
use super::tensor::{dim_of_degree, TensorElement};
use super::tower::SklyaninTower;
use super::SklyaninError;

pub mod anchors {
    pub const RELATIONS: &str = "R_n: tensors vanishing on the sigma-orbit locus";
    pub const HILBERT: &str = "dim A(n) = (n+1)(n+2)/2";
    pub const IDEAL_STABLE: &str = "degree-4 relations lie in the ideal of R_2 and R_3";
    pub const CENTRAL_G: &str = "central g in A(3) with g A = A g";
    pub const LEMMA_Y1: &str = "Lemma Y1(2): L_n M_(n-1) = M_n L_(n-1) in A(2)";
    pub const EQ2: &str = "Eq. (2): L_n N_n = N'_n L_0";
    pub const DIV_NN: &str = "Div(N_n) vanishing set";
    pub const Y2_FIRST: &str = "Lemma Y2, first step: N_n not in A L_0";
    pub const LEMMA_Y2: &str = "Lemma Y2: ann(Nbar_n) = A L_n";
    pub const LEMMA_Y12: &str = "Lemma Y12: intersection of the A L_n is 0";
    pub const THEOREM_Y11: &str = "Theorem Y11: A/AL is faithful";
    pub const INFINITE_ORDER: &str = "translation point has infinite order";
}

fn require_line(l: &AlgebraElement) -> Result<&TensorElement, SklyaninError> {
    if l.degree() != 1 {
        return Err(SklyaninError::WrongDegree { expected: 1, got: l.degree() });
    }
    if l.is_zero() {
        return Err(SklyaninError::RelationInconsistency("zero line".into()));
    }
    Ok(l.representative())
}

/// Echelon of the degree-m slice of A L: span(V^(m-1) tensor L) + I(m).
fn al_echelon(ctx: &SklyaninContext, l: &TensorElement, m: usize) -> Result<SparseEchelon, SklyaninError> {
    debug_assert_eq!(l.degree(), 1);
    let mut ech = if m == 0 {
        SparseEchelon::new(Backend::Rational, 1)
    } else {
        (*ctx.ideal_slice(m)?).clone()
    };
    if m >= 1 {
        for &c in &ctx.coset_basis(m - 1)? {
            let map: BTreeMap<usize, Scalar> =
                l.terms().map(|(j, v)| (c * 3 + j, v.clone())).collect();
            ech.insert_map(&map);
        }
    }
    Ok(ech)
}

/// The degree-m slice of A L as a dense subspace of V^(tensor m).
pub fn left_ideal_slice(ctx: &SklyaninContext, l: &AlgebraElement, m: usize) -> Result<Subspace, SklyaninError> {
    let rep = require_line(l)?;
    Ok(al_echelon(ctx, rep, m)?.to_subspace())
}

/// The image of the degree-m slice of A L in the coset coordinates of A(m).
pub fn al_slice_cosets(ctx: &SklyaninContext, l: &AlgebraElement, m: usize) -> Result<Subspace, SklyaninError> {
    let rep = require_line(l)?;
    let dim_m = ctx.algebra_dim(m)?;
    if m == 0 {
        return Ok(Subspace::zero(Backend::Rational, dim_m));
    }
    let mut gens = Vec::new();
    for &c in &ctx.coset_basis(m - 1)? {
        let mono = TensorElement::monomial(m - 1, c, Backend::Rational);
        let prod = ctx.normal_form(&mono.tensor(rep))?;
        gens.push(ctx.coset_coords(&prod)?);
    }
    Ok(Subspace::from_generators(Backend::Rational, dim_m, gens)?)
}

/// Exact membership of a tensor in the left ideal A L (decided in its own
/// degree).
pub fn membership_in_al(ctx: &SklyaninContext, f: &TensorElement, l: &AlgebraElement) -> Result<bool, SklyaninError> {
    let rep = require_line(l)?;
    if f.is_zero() {
        return Ok(true);
    }
    let ech = al_echelon(ctx, rep, f.degree())?;
    Ok(ech.reduce_tensor(f).is_zero())
}

/// {a in A(m) : a w lies in A L}, in coset coordinates of A(m); the
/// membership is decided in degree m + deg w.
pub fn truncated_annihilator_al(
    ctx: &SklyaninContext,
    l: &AlgebraElement,
    w: &AlgebraElement,
    m: usize,
) -> Result<Subspace, SklyaninError> {
    let rep = require_line(l)?;
    let target = m + w.degree();
    let ech = al_echelon(ctx, rep, target)?;
    annihilator_against(ctx, &ech, w, m)
}

/// Kernel of a -> (a w reduced mod the echelon), over the coset basis of A(m).
fn annihilator_against(
    ctx: &SklyaninContext,
    ech: &SparseEchelon,
    w: &AlgebraElement,
    m: usize,
) -> Result<Subspace, SklyaninError> {
    let basis = ctx.coset_basis(m)?;
    let shift = dim_of_degree(w.degree());
    let non_pivot = ech.non_pivot_columns();
    let pos: BTreeMap<usize, usize> = non_pivot.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut rows = vec![vec![Scalar::zero(Backend::Rational); basis.len()]; non_pivot.len()];
    for (col, &c) in basis.iter().enumerate() {
        let prod: BTreeMap<usize, Scalar> =
            w.representative().terms().map(|(j, v)| (c * shift + j, v.clone())).collect();
        for (idx, v) in ech.reduce_map(&prod) {
            rows[pos[&idx]][col] = v;
        }
    }
    let mat = Matrix::from_rows(Backend::Rational, rows, basis.len())?;
    Ok(Subspace::kernel_of(&mat))
}

/// Intersection of the degree-m slices of A L_n for n = 0..=n_cap, plus the
/// smallest n at which the intersection already equals I(m) (zero in A(m)).
pub fn intersect_aln_slices(
    ctx: &SklyaninContext,
    tower: &SklyaninTower,
    m: usize,
    n_cap: usize,
) -> Result<(Subspace, Option<usize>), SklyaninError> {
    let ideal = ctx.ideal_slice(m)?.to_subspace();
    let mut acc: Option<Subspace> = None;
    let mut minimal = None;
    for n in 0..=n_cap.min(tower.n_max()) {
        let l = ctx.normal_form(tower.line_l(n))?;
        let slice = left_ideal_slice(ctx, &l, m)?;
        let next = match acc {
            None => slice,
            Some(prev) => prev.intersect(&slice)?,
        };
        acc = Some(next);
        if minimal.is_none() && acc.as_ref().unwrap() == &ideal {
            minimal = Some(n);
            break;
        }
    }
    Ok((acc.expect("at least one slice"), minimal))
}

/// Set-wise vanishing of N_n at its claimed divisor points, with nonvanishing
/// controls at fresh points.
pub fn verify_divisor_of_nn(ctx: &SklyaninContext, tower: &SklyaninTower, n: usize) -> Result<bool, SklyaninError> {
    assert!(n >= 1 && n <= tower.n_max());
    let curve = ctx.curve();
    let (_, _, r) = tower.chord_points();
    let (s, t) = tower.secondary_points();
    let shift = ctx.multiple((n as i64) - 1);
    let mut claimed = vec![curve.add(s, &shift)?, curve.add(t, &shift)?];
    for i in 0..n {
        let k = 3 * (i as i64) - 2 * ((n as i64) - 1);
        claimed.push(curve.add(r, &ctx.multiple(k))?);
    }
    let rep = tower.n_elem(n).representative();
    for point in &claimed {
        if !ctx.evaluate(rep, point)?.is_zero() {
            return Ok(false);
        }
    }
    // Controls: points outside the claimed support must not vanish.
    let mut controls = 0;
    let mut k = 50i64;
    while controls < 2 {
        let fresh = ctx.multiple(k);
        if !claimed.contains(&fresh) {
            if ctx.evaluate(rep, &fresh)?.is_zero() {
                return Ok(false);
            }
            controls += 1;
        }
        k += 1;
    }
    Ok(true)
}

/// Lemma Y2's first step: N_n does not lie in A L_0. Also certifies the
/// membership test itself is not vacuous via a positive control.
pub fn verify_nn_not_in_al(ctx: &SklyaninContext, tower: &SklyaninTower, n: usize) -> Result<bool, SklyaninError> {
    assert!(n >= 1 && n <= tower.n_max());
    let l0 = ctx.normal_form(tower.l0_tensor())?;
    if membership_in_al(ctx, tower.n_elem(n).representative(), &l0)? {
        return Ok(false);
    }
    // positive control: an actual multiple of L_0 is recognized
    let c = ctx.coset_basis(n - 1)?[0];
    let member = TensorElement::monomial(n - 1, c, Backend::Rational).tensor(tower.l0_tensor());
    membership_in_al(ctx, &member, &l0)
}

/// The full Theorem Y11 certificate at stratum cap `d`.
///
/// For each m <= d the witness route intersects the annihilator conditions
/// against Nbar_0 = 1bar, Nbar_1, ... until the stratum dies; the direct
/// route constrains by whole graded components A(k). Both must reach zero and
/// agree; exhausted caps yield an inconclusive stratum, never a false pass.
pub fn faithfulness_certificate_sklyanin(
    ctx: &SklyaninContext,
    tower: &SklyaninTower,
    d: usize,
) -> CertificateReport {
    let mut checks = Vec::new();
    if !ctx.infinite_order_certified() {
        checks.push(
            CheckRecord::new("certificate preconditions", anchors::THEOREM_Y11, CheckStatus::PreconditionError)
                .with("reason", "infinite-order flag not set"),
        );
        return CertificateReport::from_checks(checks);
    }
    let l0 = match ctx.normal_form(tower.l0_tensor()) {
        Ok(l) => l,
        Err(e) => {
            checks.push(
                CheckRecord::new("certificate preconditions", anchors::THEOREM_Y11, CheckStatus::PreconditionError)
                    .with("reason", e.to_string()),
            );
            return CertificateReport::from_checks(checks);
        }
    };

    let mut echelons: BTreeMap<usize, SparseEchelon> = BTreeMap::new();
    let mut witness_zero = Vec::new();
    for m in 0..=d {
        let result = witness_stratum(ctx, tower, &l0, m, &mut echelons);
        match result {
            Ok((dim_left, used, capped)) => {
                let zero = dim_left == 0;
                witness_zero.push(zero);
                let status = if zero { CheckStatus::Pass } else { CheckStatus::Inconclusive };
                let mut rec = CheckRecord::new(
                    &format!("annihilator stratum m = {m} via Nbar witnesses"),
                    anchors::THEOREM_Y11,
                    status,
                )
                .with("witnesses_used", used)
                .with("dim_residual", dim_left);
                if !zero {
                    rec = rec.with(
                        "reason",
                        if capped { "degree cap reached" } else { "witness supply exhausted" },
                    );
                }
                checks.push(rec);
            }
            Err(e) => {
                checks.push(
                    CheckRecord::new(
                        &format!("annihilator stratum m = {m} via Nbar witnesses"),
                        anchors::THEOREM_Y11,
                        CheckStatus::PreconditionError,
                    )
                    .with("reason", e.to_string()),
                );
                witness_zero.push(false);
            }
        }
    }

    let mut direct_zero = Vec::new();
    for m in 0..=d {
        match direct_stratum(ctx, &l0, m, d, &mut echelons) {
            Ok((dim_left, window_used)) => {
                let zero = dim_left == 0;
                direct_zero.push(zero);
                checks.push(
                    CheckRecord::new(
                        &format!("annihilator stratum m = {m} via graded components"),
                        anchors::THEOREM_Y11,
                        if zero { CheckStatus::Pass } else { CheckStatus::Inconclusive },
                    )
                    .with("window_used", window_used)
                    .with("dim_residual", dim_left),
                );
            }
            Err(e) => {
                checks.push(
                    CheckRecord::new(
                        &format!("annihilator stratum m = {m} via graded components"),
                        anchors::THEOREM_Y11,
                        CheckStatus::PreconditionError,
                    )
                    .with("reason", e.to_string()),
                );
                direct_zero.push(false);
            }
        }
    }

    let agree = witness_zero == direct_zero;
    let all_zero = witness_zero.iter().all(|&z| z);
    let status = if agree && all_zero { CheckStatus::Pass } else { CheckStatus::Inconclusive };
    checks.push(
        CheckRecord::new("route agreement", anchors::THEOREM_Y11, status)
            .with("strata", d + 1)
            .with(
                "witness_route",
                witness_zero.iter().map(|&z| i64::from(z)).collect::<Vec<i64>>(),
            )
            .with(
                "direct_route",
                direct_zero.iter().map(|&z| i64::from(z)).collect::<Vec<i64>>(),
            ),
    );
    CertificateReport::from_checks(checks)
}

/// One witness stratum: intersect {a : a Nbar_n in A L_0} over n until zero.
/// Returns (residual dim, witnesses used, hit degree cap).
fn witness_stratum(
    ctx: &SklyaninContext,
    tower: &SklyaninTower,
    l0: &AlgebraElement,
    m: usize,
    echelons: &mut BTreeMap<usize, SparseEchelon>,
) -> Result<(usize, usize, bool), SklyaninError> {
    let l0_rep = l0.representative().clone();
    let mut current = Subspace::full(Backend::Rational, ctx.algebra_dim(m)?);
    let mut used = 0usize;
    let mut capped = false;
    for n in 0..=tower.n_max() {
        if m + n > ctx.degree_cap() {
            capped = true;
            break;
        }
        if let std::collections::btree_map::Entry::Vacant(e) = echelons.entry(m + n) {
            e.insert(al_echelon(ctx, &l0_rep, m + n)?);
        }
        let ech = &echelons[&(m + n)];
        let ann = annihilator_against(ctx, ech, tower.n_elem(n), m)?;
        current = current.intersect(&ann)?;
        used = n;
        if current.is_zero() {
            break;
        }
    }
    Ok((current.dim(), used, capped))
}

/// One direct stratum: intersect {a : a A(k) in A L_0} over k = 0..=window.
fn direct_stratum(
    ctx: &SklyaninContext,
    l0: &AlgebraElement,
    m: usize,
    window: usize,
    echelons: &mut BTreeMap<usize, SparseEchelon>,
) -> Result<(usize, usize), SklyaninError> {
    let l0_rep = l0.representative().clone();
    let mut current = Subspace::full(Backend::Rational, ctx.algebra_dim(m)?);
    let mut used = 0usize;
    for k in 0..=window {
        if m + k > ctx.degree_cap() {
            break;
        }
        if let std::collections::btree_map::Entry::Vacant(e) = echelons.entry(m + k) {
            e.insert(al_echelon(ctx, &l0_rep, m + k)?);
        }
        let ech = &echelons[&(m + k)];
        for &c in &ctx.coset_basis(k)? {
            let w = AlgebraElement::from_monomial(k, c);
            let ann = annihilator_against(ctx, ech, &w, m)?;
            current = current.intersect(&ann)?;
            if current.is_zero() {
                break;
            }
        }
        used = k;
        if current.is_zero() {
            break;
        }
    }
    Ok((current.dim(), used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecurve::{HesseCurve, ProjPoint};
    use crate::sklyanin::tower::construct_tower;

    fn context() -> SklyaninContext {
        let curve = HesseCurve::new(Scalar::from_i64(2, Backend::Rational)).unwrap();
        let p = ProjPoint::from_i64(1, 2, 3, Backend::Rational);
        SklyaninContext::new(curve, p, 8, 12).unwrap()
    }

    fn tower(ctx: &SklyaninContext, n_max: usize) -> SklyaninTower {
        construct_tower(ctx, &ctx.multiple(1), &ctx.multiple(2), &ctx.multiple(4), n_max).unwrap()
    }

    #[test]
    fn slice_codimension_is_m_plus_one() {
        let ctx = context();
        let l = ctx.normal_form(&TensorElement::linear(&[
            Scalar::from_i64(1, Backend::Rational),
            Scalar::from_i64(2, Backend::Rational),
            Scalar::from_i64(-1, Backend::Rational),
        ]))
        .unwrap();
        assert_eq!(left_ideal_slice(&ctx, &l, 1).unwrap().dim(), 1, "span(L) only");
        for m in 2..=4usize {
            let slice = left_ideal_slice(&ctx, &l, m).unwrap();
            let codim = dim_of_degree(m) - slice.dim();
            assert_eq!(codim, m + 1, "codim at degree {m}");
        }
    }

    #[test]
    fn membership_basics() {
        let ctx = context();
        let tw = tower(&ctx, 3);
        let l0 = ctx.normal_form(tw.l0_tensor()).unwrap();
        assert!(membership_in_al(&ctx, &TensorElement::zero(2), &l0).unwrap());
        let w = TensorElement::monomial(1, 2, Backend::Rational).tensor(tw.l0_tensor());
        assert!(membership_in_al(&ctx, &w, &l0).unwrap());
        // the central element is not in A L_0 at degree 3
        let g = ctx.find_central_g().unwrap();
        assert!(!membership_in_al(&ctx, g.representative(), &l0).unwrap());
    }

    #[test]
    fn degree_check_on_lines() {
        let ctx = context();
        let g = ctx.find_central_g().unwrap();
        assert!(matches!(
            left_ideal_slice(&ctx, &g, 3),
            Err(SklyaninError::WrongDegree { expected: 1, got: 3 })
        ));
    }

    #[test]
    fn nn_not_in_al_for_small_n() {
        let ctx = context();
        let tw = tower(&ctx, 3);
        for n in 1..=3 {
            assert!(verify_nn_not_in_al(&ctx, &tw, n).unwrap(), "N_{n}");
        }
    }

    #[test]
    fn divisors_of_nn_vanish_setwise() {
        let ctx = context();
        let tw = tower(&ctx, 3);
        for n in 1..=3 {
            assert!(verify_divisor_of_nn(&ctx, &tw, n).unwrap(), "Div(N_{n})");
        }
    }

    #[test]
    fn annihilator_matches_aln_slice() {
        let ctx = context();
        let tw = tower(&ctx, 3);
        let l0 = ctx.normal_form(tw.l0_tensor()).unwrap();
        for n in 0..=2usize {
            for m in 0..=2usize {
                let ann = truncated_annihilator_al(&ctx, &l0, tw.n_elem(n), m).unwrap();
                let ln = ctx.normal_form(tw.line_l(n)).unwrap();
                let slice = al_slice_cosets(&ctx, &ln, m).unwrap();
                assert_eq!(ann, slice, "n={n}, m={m}");
            }
        }
    }

    #[test]
    fn aln_intersection_reaches_the_ideal() {
        let ctx = context();
        let tw = tower(&ctx, 6);
        // a single slice is still nonzero in A(m)
        let (first, minimal0) = intersect_aln_slices(&ctx, &tw, 2, 0).unwrap();
        assert!(first.dim() > ctx.ideal_slice(2).unwrap().rank());
        assert_eq!(minimal0, None);
        let (meet, minimal) = intersect_aln_slices(&ctx, &tw, 2, 6).unwrap();
        assert_eq!(meet, ctx.ideal_slice(2).unwrap().to_subspace());
        assert!(minimal.unwrap() <= 4, "minimal N = {minimal:?}");
    }

    #[test]
    fn certificate_smoke_at_low_cap() {
        let ctx = context();
        let tw = tower(&ctx, 4);
        let report = faithfulness_certificate_sklyanin(&ctx, &tw, 2);
        assert!(report.passed(), "{report:#?}");
    }

    #[test]
    fn concurrent_certificates_agree() {
        let ctx = std::sync::Arc::new(context());
        let tw = std::sync::Arc::new(tower(&ctx, 3));
        let mut handles = Vec::new();
        for _ in 0..2 {
            let ctx = ctx.clone();
            let tw = tw.clone();
            handles.push(std::thread::spawn(move || faithfulness_certificate_sklyanin(&ctx, &tw, 2)));
        }
        let reports: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(reports[0], reports[1], "scheduling must not affect results");
        assert!(reports[0].passed());
    }

    #[test]
    fn starved_tower_is_inconclusive_not_passing() {
        let ctx = context();
        let tw = tower(&ctx, 1);
        let report = faithfulness_certificate_sklyanin(&ctx, &tw, 3);
        assert_eq!(report.verdict, crate::report::Verdict::Inconclusive, "{report:#?}");
        // no stratum may falsely pass: the residuals that survive are reported
        let survivors: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Inconclusive && c.name.contains("witness"))
            .collect();
        assert!(!survivors.is_empty());
    }
}
