//! The Hesse cubic x^3 + y^3 + z^3 = 3 psi xyz with identity (1:-1:0),
//! chord-tangent group law, translation, and torsion certification.
//!
//! The identity is a flex, so three points sum to zero exactly when they are
//! collinear; the whole group law is Vieta on restricted cubics and stays
//! inside the field of the inputs.

use std::cmp::Ordering;
use std::fmt;

use crate::linalg::{Backend, Matrix, Scalar, Subspace};

use super::CurveError;

/// A point of P^2, normalized so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [Scalar; 3],
}

impl ProjPoint {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<ProjPoint, CurveError> {
        let coords = [x, y, z];
        if coords.iter().all(Scalar::is_zero) {
            return Err(CurveError::ZeroPoint);
        }
        let lead = coords.iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv().unwrap();
        Ok(ProjPoint { coords: [&coords[0] * &inv, &coords[1] * &inv, &coords[2] * &inv] })
    }

    pub fn from_i64(x: i64, y: i64, z: i64, backend: Backend) -> ProjPoint {
        ProjPoint::new(
            Scalar::from_i64(x, backend),
            Scalar::from_i64(y, backend),
            Scalar::from_i64(z, backend),
        )
        .expect("nonzero literal point")
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn backend(&self) -> Backend {
        self.coords[0].backend()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &ProjPoint) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &ProjPoint) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the dual plane: the line a x + b y + c z = 0, normalized.
/// Modules that need an exact scale (the tower rescalings) keep raw
/// coefficient triples instead of this type.
#[derive(Clone, PartialEq, Eq)]
pub struct LineForm {
    coeffs: [Scalar; 3],
}

impl LineForm {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<LineForm, CurveError> {
        let p = ProjPoint::new(a, b, c).map_err(|_| CurveError::DegenerateLine)?;
        Ok(LineForm { coeffs: p.coords.clone() })
    }

    pub fn coeffs(&self) -> &[Scalar; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &ProjPoint) -> Scalar {
        dot(&self.coeffs, p.coords())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Debug for LineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

fn dot(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    let mut acc = Scalar::zero(a[0].backend());
    for i in 0..3 {
        if !a[i].is_zero() && !b[i].is_zero() {
            acc = &acc + &(&a[i] * &b[i]);
        }
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct HesseCurve {
    psi: Scalar,
}

impl fmt::Debug for HesseCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HesseCurve(psi = {})", self.psi)
    }
}

impl HesseCurve {
    /// Requires psi^3 != 1 (nonsingularity); over a prime field also p > 3,
    /// since characteristics 2 and 3 degenerate the Hesse form.
    pub fn new(psi: Scalar) -> Result<HesseCurve, CurveError> {
        if let Backend::Prime(p) = psi.backend() {
            if p <= 3 {
                return Err(CurveError::Singular(format!("characteristic {p} unsupported")));
            }
        }
        let cube = &(&psi * &psi) * &psi;
        if cube.is_one() {
            return Err(CurveError::Singular(format!("psi = {psi} gives a singular cubic")));
        }
        Ok(HesseCurve { psi })
    }

    pub fn psi(&self) -> &Scalar {
        &self.psi
    }

    pub fn backend(&self) -> Backend {
        self.psi.backend()
    }

    /// The flex (1:-1:0) serving as the group identity.
    pub fn identity(&self) -> ProjPoint {
        let backend = self.backend();
        ProjPoint::new(
            Scalar::one(backend),
            Scalar::from_i64(-1, backend),
            Scalar::zero(backend),
        )
        .unwrap()
    }

    /// x^3 + y^3 + z^3 - 3 psi x y z at the given coordinates.
    pub fn cubic_at(&self, c: &[Scalar; 3]) -> Scalar {
        let backend = self.backend();
        let mut acc = Scalar::zero(backend);
        for v in c {
            acc = &acc + &(&(v * v) * v);
        }
        let three_psi = &Scalar::from_i64(3, backend) * &self.psi;
        let xyz = &(&c[0] * &c[1]) * &c[2];
        &acc - &(&three_psi * &xyz)
    }

    pub fn on_curve(&self, p: &ProjPoint) -> bool {
        self.cubic_at(p.coords()).is_zero()
    }

    fn gradient(&self, c: &[Scalar; 3]) -> [Scalar; 3] {
        let backend = self.backend();
        let three = Scalar::from_i64(3, backend);
        let three_psi = &three * &self.psi;
        [
            &(&three * &(&c[0] * &c[0])) - &(&three_psi * &(&c[1] * &c[2])),
            &(&three * &(&c[1] * &c[1])) - &(&three_psi * &(&c[0] * &c[2])),
            &(&three * &(&c[2] * &c[2])) - &(&three_psi * &(&c[0] * &c[1])),
        ]
    }

    /// Tangent line at an on-curve point.
    pub fn tangent_line(&self, p: &ProjPoint) -> Result<LineForm, CurveError> {
        self.require_on_curve(p)?;
        let g = self.gradient(p.coords());
        LineForm::new(g[0].clone(), g[1].clone(), g[2].clone())
    }

    /// Line through two distinct points (cross product in the dual plane).
    pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<LineForm, CurveError> {
        if p == q {
            return Err(CurveError::SamePoint);
        }
        let a = p.coords();
        let b = q.coords();
        LineForm::new(
            &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
            &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
            &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
        )
    }

    fn require_on_curve(&self, p: &ProjPoint) -> Result<(), CurveError> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve(format!("{p}")))
        }
    }

    fn combine(p: &ProjPoint, q: &ProjPoint, s: &Scalar, t: &Scalar) -> Result<ProjPoint, CurveError> {
        let a = p.coords();
        let b = q.coords();
        ProjPoint::new(
            &(s * &a[0]) + &(t * &b[0]),
            &(s * &a[1]) + &(t * &b[1]),
            &(s * &a[2]) + &(t * &b[2]),
        )
    }

    /// The third point in which the line through P and Q (the tangent when
    /// P = Q) meets the curve, by Vieta on the restricted cubic.
    pub fn third_intersection(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint, CurveError> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        if p == q {
            return self.tangent_third(p);
        }
        // F(sP + tQ) = s^2 t (grad F(P).Q) + s t^2 (grad F(Q).P)
        let b = dot(&self.gradient(p.coords()), q.coords());
        let c = dot(&self.gradient(q.coords()), p.coords());
        if b.is_zero() && c.is_zero() {
            return Err(CurveError::DegenerateLine);
        }
        // remaining root of b s + c t = 0
        HesseCurve::combine(p, q, &-&c, &b)
    }

    fn tangent_third(&self, p: &ProjPoint) -> Result<ProjPoint, CurveError> {
        let grad = self.gradient(p.coords());
        if grad.iter().all(Scalar::is_zero) {
            return Err(CurveError::Singular(format!("singular point {p}")));
        }
        // Any second point spanning the tangent line.
        let m = Matrix::from_rows(self.backend(), vec![grad.to_vec()], 3)
            .expect("gradient row");
        let kernel = Subspace::kernel_of(&m);
        let q = kernel
            .basis_vectors()
            .into_iter()
            .filter_map(|v| ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).ok())
            .find(|cand| cand != p)
            .ok_or(CurveError::DegenerateLine)?;
        // F(sP + tQ) = s t^2 (grad F(Q).P) + t^3 F(Q); remaining root of
        // (grad F(Q).P) s + F(Q) t = 0.
        let c = dot(&self.gradient(q.coords()), p.coords());
        let d = self.cubic_at(q.coords());
        if c.is_zero() && d.is_zero() {
            return Err(CurveError::DegenerateLine);
        }
        HesseCurve::combine(p, &q, &-&d, &c)
    }

    pub fn neg(&self, p: &ProjPoint) -> Result<ProjPoint, CurveError> {
        self.third_intersection(p, &self.identity())
    }

    pub fn add(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint, CurveError> {
        let r = self.third_intersection(p, q)?;
        self.third_intersection(&r, &self.identity())
    }

    pub fn sub(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint, CurveError> {
        let nq = self.neg(q)?;
        self.add(p, &nq)
    }

    /// n P by double-and-add; negative n goes through the inverse.
    pub fn smul(&self, n: i64, p: &ProjPoint) -> Result<ProjPoint, CurveError> {
        if n < 0 {
            let m = self.smul(-n, p)?;
            return self.neg(&m);
        }
        let mut acc = self.identity();
        let mut base = p.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Translation sigma(P) = P - p for a fixed point p on the curve.
    pub fn sigma(&self, p: &ProjPoint, point: &ProjPoint) -> Result<ProjPoint, CurveError> {
        self.sub(point, p)
    }

    /// sigma^k with k of either sign.
    pub fn sigma_iter(&self, p: &ProjPoint, point: &ProjPoint, k: i64) -> Result<ProjPoint, CurveError> {
        let shift = self.smul(-k, p)?;
        self.add(point, &shift)
    }

    /// True when n p differs from the identity for all 1 <= n <= bound.
    /// Over Q, bound 12 certifies infinite order: no rational point has
    /// torsion order above 12. Refuses to run over a prime field.
    pub fn certify_infinite_order(&self, p: &ProjPoint, bound: u32) -> Result<bool, CurveError> {
        if let Backend::Prime(_) = self.backend() {
            return Err(CurveError::RationalOnly(
                "no infinite-order points over a finite field",
            ));
        }
        self.require_on_curve(p)?;
        let o = self.identity();
        let mut acc = o.clone();
        for _ in 1..=bound {
            acc = self.add(&acc, p)?;
            if acc == o {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when 3(R - n p) != 0 for all 1 <= n <= cap.
    pub fn condition_3r(&self, p: &ProjPoint, r: &ProjPoint, cap: u32) -> Result<bool, CurveError> {
        let o = self.identity();
        for n in 1..=cap {
            let shifted = self.sub(r, &self.smul(n as i64, p)?)?;
            if self.smul(3, &shifted)? == o {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
