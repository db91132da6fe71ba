//! The line towers behind the faithfulness certificate: L_n through the
//! translated chord points, M_n with the prescribed divisor rescaled so that
//! L_n M_{n-1} = M_n L_{n-1} holds on the nose in A(2), and the products
//! N_n, N'_n that witness the annihilator identities.

use crate::ecurve::{HesseCurve, ProjPoint};
use crate::linalg::Scalar;

use super::context::{AlgebraElement, SklyaninContext};
use super::tensor::TensorElement;
use super::SklyaninError;

#[derive(Debug, Clone)]
pub struct SklyaninTower {
    n_max: usize,
    p: ProjPoint,
    q: ProjPoint,
    r: ProjPoint,
    s: ProjPoint,
    t: ProjPoint,
    /// L_0..L_n_max as degree-1 tensors (normalized line forms).
    lines_l: Vec<TensorElement>,
    /// M_0..M_n_max, with the exact rescalings folded in.
    lines_m: Vec<TensorElement>,
    /// N_0 = 1, N_n = M_{n-1} N_{n-1}.
    n_elems: Vec<AlgebraElement>,
    /// N'_0 = 1, N'_1 = M_1, N'_n = M_n N'_{n-1}.
    n_primes: Vec<AlgebraElement>,
}

impl SklyaninTower {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn chord_points(&self) -> (&ProjPoint, &ProjPoint, &ProjPoint) {
        (&self.p, &self.q, &self.r)
    }

    pub fn secondary_points(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.s, &self.t)
    }

    pub fn line_l(&self, n: usize) -> &TensorElement {
        &self.lines_l[n]
    }

    pub fn line_m(&self, n: usize) -> &TensorElement {
        &self.lines_m[n]
    }

    /// N_n as an algebra element; N_0 is the unit.
    pub fn n_elem(&self, n: usize) -> &AlgebraElement {
        &self.n_elems[n]
    }

    pub fn n_prime(&self, n: usize) -> &AlgebraElement {
        &self.n_primes[n]
    }

    pub fn l0_tensor(&self) -> &TensorElement {
        &self.lines_l[0]
    }
}

fn line_tensor(p: &ProjPoint, q: &ProjPoint) -> Result<TensorElement, SklyaninError> {
    let line = HesseCurve::line_through(p, q)?;
    Ok(TensorElement::linear(line.coeffs()))
}

/// Solve u = lambda v coordinatewise; errors when v = 0 or the two are not
/// proportional (which would mean R_2 is wrong).
fn proportionality(u: &AlgebraElement, v: &AlgebraElement) -> Result<Scalar, SklyaninError> {
    let Some((idx, lead)) = v.representative().terms().next() else {
        return Err(SklyaninError::RelationInconsistency("zero product in A(2)".into()));
    };
    let u_at = u
        .representative()
        .coefficient(idx)
        .cloned()
        .unwrap_or_else(|| Scalar::zero(lead.backend()));
    let lambda = &u_at / lead;
    if lambda.is_zero() || u.representative() != &v.representative().scale(&lambda) {
        return Err(SklyaninError::RelationInconsistency(
            "L_n M_{n-1} and M_n L_{n-1} are not proportional in A(2)".into(),
        ));
    }
    Ok(lambda)
}

/// Build the tower from chord points P, Q and a secondary point S.
///
/// R is the third chord point; the hypothesis 3(R - np) != 0 must hold below
/// the cap for one of the three chord points (which is then relabeled to play
/// the role of R), and S must avoid the chord so M_0 is independent of L_0.
pub fn construct_tower(
    ctx: &SklyaninContext,
    p: &ProjPoint,
    q: &ProjPoint,
    s: &ProjPoint,
    n_max: usize,
) -> Result<SklyaninTower, SklyaninError> {
    let curve = ctx.curve();
    let trans = ctx.translation_point();
    if !ctx.infinite_order_certified() {
        return Err(SklyaninError::HypothesisViolated("infinite-order flag not set".into()));
    }
    for point in [p, q, s] {
        if !curve.on_curve(point) {
            return Err(SklyaninError::Curve(crate::ecurve::CurveError::NotOnCurve(format!("{point}"))));
        }
    }
    if p == q {
        return Err(SklyaninError::HypothesisViolated("P and Q must be distinct".into()));
    }
    let r = curve.third_intersection(p, q)?;
    // The divisor roles can be rotated; find a labeling whose R satisfies
    // the 3(R - np) condition.
    let cap = (2 * n_max).max(1) as u32;
    let labelings = [
        (p.clone(), q.clone(), r.clone()),
        (q.clone(), r.clone(), p.clone()),
        (r.clone(), p.clone(), q.clone()),
    ];
    let mut chosen = None;
    for (a, b, c) in labelings {
        if curve.condition_3r(trans, &c, cap)? {
            chosen = Some((a, b, c));
            break;
        }
    }
    let Some((p, q, r)) = chosen else {
        return Err(SklyaninError::HypothesisViolated(format!(
            "3(R - np) vanishes below the cap for every labeling of the chord points (cap {cap})"
        )));
    };

    let t = curve.third_intersection(&r, s)?;
    if s == &p || s == &q || *s == r || t == p || t == q {
        return Err(SklyaninError::HypothesisViolated(
            "S and T must avoid the chord points P, Q (and S must differ from R)".into(),
        ));
    }

    let mut lines_l = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let np = ctx.multiple(n as i64);
        let pn = curve.add(&p, &np)?;
        let qn = curve.add(&q, &np)?;
        lines_l.push(line_tensor(&pn, &qn)?);
    }

    let mut lines_m = Vec::with_capacity(n_max + 1);
    lines_m.push(line_tensor(&r, s)?);
    for n in 1..=n_max {
        let rn = curve.sub(&r, &ctx.multiple(2 * n as i64))?;
        let sn = curve.add(s, &ctx.multiple(n as i64))?;
        if rn == sn {
            return Err(SklyaninError::HypothesisViolated(format!(
                "tower points collide at level {n}: R - 2np = S + np"
            )));
        }
        let raw = line_tensor(&rn, &sn)?;
        // Exact rescaling: L_n M_{n-1} = lambda^{-1} (lambda M_n^{raw}) L_{n-1}.
        let u = ctx.normal_form(&lines_l[n].tensor(&lines_m[n - 1]))?;
        let v = ctx.normal_form(&raw.tensor(&lines_l[n - 1]))?;
        let lambda = proportionality(&u, &v)?;
        lines_m.push(raw.scale(&lambda));
    }

    let mut n_elems = vec![ctx.unit()];
    for n in 1..=n_max {
        let prev = n_elems[n - 1].representative().clone();
        n_elems.push(ctx.normal_form(&lines_m[n - 1].tensor(&prev))?);
    }
    let mut n_primes = vec![ctx.unit()];
    for n in 1..=n_max {
        let prev = n_primes[n - 1].representative().clone();
        let rep = if n == 1 { lines_m[1].clone() } else { lines_m[n].tensor(&prev) };
        n_primes.push(ctx.normal_form(&rep)?);
    }

    Ok(SklyaninTower { n_max, p, q, r, s: s.clone(), t, lines_l, lines_m, n_elems, n_primes })
}
