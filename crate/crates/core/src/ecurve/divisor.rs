//! Divisors on the Hesse cubic: finite formal point sums, the divisor of a
//! line (its three intersection points by Vieta), and the pushforward along
//! the translation automorphism.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Scalar;

use super::curve::{HesseCurve, LineForm, ProjPoint};
use super::roots::binary_form_roots;
use super::CurveError;

/// A finite formal sum of curve points with integer multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    terms: BTreeMap<ProjPoint, i64>,
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, n)| format!("{n}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Divisor {
    pub fn zero() -> Divisor {
        Divisor::default()
    }

    pub fn add_point(&mut self, p: ProjPoint, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(p).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            let key = self.terms.iter().find(|(_, &v)| v == 0).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn from_points(points: impl IntoIterator<Item = (ProjPoint, i64)>) -> Divisor {
        let mut d = Divisor::zero();
        for (p, m) in points {
            d.add_point(p, m);
        }
        d
    }

    pub fn multiplicity(&self, p: &ProjPoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ProjPoint, i64)> {
        self.terms.iter().map(|(p, &n)| (p, n))
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&n| n >= 0)
    }

    pub fn support(&self) -> Vec<ProjPoint> {
        self.terms.keys().cloned().collect()
    }

    /// Group-law sum of the divisor, n_p * P summed over the support.
    pub fn point_sum(&self, curve: &HesseCurve) -> Result<ProjPoint, CurveError> {
        let mut acc = curve.identity();
        for (p, n) in self.terms() {
            let m = curve.smul(n, p)?;
            acc = curve.add(&acc, &m)?;
        }
        Ok(acc)
    }
}

/// Pointwise pushforward along sigma(P) = P - p; multiplicities carry over.
pub fn sigma_star(curve: &HesseCurve, p: &ProjPoint, d: &Divisor) -> Result<Divisor, CurveError> {
    let mut out = Divisor::zero();
    for (point, n) in d.terms() {
        out.add_point(curve.sigma(p, point)?, n);
    }
    Ok(out)
}

/// The three intersection points of a line with the curve, with
/// multiplicities from repeated Vieta roots.
pub fn divisor_of_line(curve: &HesseCurve, line: &LineForm) -> Result<Divisor, CurveError> {
    // Parametrize the line by its kernel basis and restrict the cubic.
    let m = crate::linalg::Matrix::from_rows(curve.backend(), vec![line.coeffs().to_vec()], 3)?;
    let kernel = crate::linalg::Subspace::kernel_of(&m);
    let basis = kernel.basis_vectors();
    if basis.len() != 2 {
        return Err(CurveError::DegenerateLine);
    }
    let u: [Scalar; 3] = basis[0].clone().try_into().unwrap();
    let v: [Scalar; 3] = basis[1].clone().try_into().unwrap();
    let grad_u = |c: &[Scalar; 3]| {
        // directional coefficient grad F(u) . c
        let g = curve_gradient(curve, &u);
        dot3(&g, c)
    };
    let grad_v = |c: &[Scalar; 3]| {
        let g = curve_gradient(curve, &v);
        dot3(&g, c)
    };
    let coeffs = vec![curve.cubic_at(&u), grad_u(&v), grad_v(&u), curve.cubic_at(&v)];
    let roots = binary_form_roots(&coeffs)?;
    let mut divisor = Divisor::zero();
    for ((s, t), mult) in roots {
        let point = ProjPoint::new(
            &(&s * &u[0]) + &(&t * &v[0]),
            &(&s * &u[1]) + &(&t * &v[1]),
            &(&s * &u[2]) + &(&t * &v[2]),
        )?;
        debug_assert!(curve.on_curve(&point));
        divisor.add_point(point, mult as i64);
    }
    Ok(divisor)
}

fn curve_gradient(curve: &HesseCurve, c: &[Scalar; 3]) -> [Scalar; 3] {
    let backend = curve.backend();
    let three = Scalar::from_i64(3, backend);
    let three_psi = &three * curve.psi();
    [
        &(&three * &(&c[0] * &c[0])) - &(&three_psi * &(&c[1] * &c[2])),
        &(&three * &(&c[1] * &c[1])) - &(&three_psi * &(&c[0] * &c[2])),
        &(&three * &(&c[2] * &c[2])) - &(&three_psi * &(&c[0] * &c[1])),
    ]
}

fn dot3(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    let mut acc = Scalar::zero(a[0].backend());
    for i in 0..3 {
        acc = &acc + &(&a[i] * &b[i]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Backend;

    fn curve() -> HesseCurve {
        HesseCurve::new(Scalar::from_i64(2, Backend::Rational)).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::from_i64(x, y, z, Backend::Rational)
    }

    #[test]
    fn divisor_bookkeeping() {
        let mut d = Divisor::zero();
        d.add_point(pt(1, 2, 3), 2);
        d.add_point(pt(2, 1, 3), 1);
        d.add_point(pt(1, 2, 3), -2);
        assert_eq!(d.degree(), 1);
        assert!(d.is_effective());
        assert_eq!(d.multiplicity(&pt(1, 2, 3)), 0);
    }

    #[test]
    fn line_through_two_points_has_their_third() {
        let e = curve();
        let p = pt(1, 2, 3);
        let q = e.smul(2, &p).unwrap();
        let line = HesseCurve::line_through(&p, &q).unwrap();
        let d = divisor_of_line(&e, &line).unwrap();
        assert_eq!(d.degree(), 3);
        let r = e.third_intersection(&p, &q).unwrap();
        assert_eq!(d.multiplicity(&r), 1);
        assert_eq!(d.multiplicity(&p), 1);
        assert_eq!(d.multiplicity(&q), 1);
        // collinearity law: the three points sum to the identity
        assert_eq!(d.point_sum(&e).unwrap(), e.identity());
    }

    #[test]
    fn tangent_at_identity_is_triple() {
        let e = curve();
        let o = e.identity();
        let tangent = e.tangent_line(&o).unwrap();
        let d = divisor_of_line(&e, &tangent).unwrap();
        assert_eq!(d.degree(), 3);
        assert_eq!(d.multiplicity(&o), 3);
    }

    #[test]
    fn pushforward_preserves_degree_and_translates() {
        let e = curve();
        let p = pt(1, 2, 3);
        let q = e.smul(3, &p).unwrap();
        let d = Divisor::from_points([(q.clone(), 2), (e.identity(), 1)]);
        let pushed = sigma_star(&e, &p, &d).unwrap();
        assert_eq!(pushed.degree(), d.degree());
        assert_eq!(pushed.multiplicity(&e.smul(2, &p).unwrap()), 2);
        assert_eq!(pushed.multiplicity(&e.neg(&p).unwrap()), 1);
        assert_eq!(sigma_star(&e, &p, &Divisor::zero()).unwrap(), Divisor::zero());
    }
}
