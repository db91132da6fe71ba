//! Root extraction for homogeneous binary forms over the exact scalar types,
//! with multiplicities via repeated exact deflation.
//!
//! Rational roots are found without factoring coefficients: linear and
//! quadratic forms are solved directly (exact discriminant square root),
//! and for cubics a root is lifted p-adically from a good prime and
//! recognized by rational reconstruction, then verified exactly. Everything
//! stays in integer arithmetic. Lines produced by chord-tangent
//! constructions always split completely, so a form that does not split is
//! reported as an error.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::linalg::{Backend, Scalar};
use crate::numutil::exact_sqrt;

use super::CurveError;

/// coeffs[i] is the coefficient of s^(d-i) t^i. Returns roots (s:t) with
/// multiplicities summing to d.
pub(crate) fn binary_form_roots(
    coeffs: &[Scalar],
) -> Result<Vec<((Scalar, Scalar), usize)>, CurveError> {
    let d = coeffs.len() - 1;
    assert!(d >= 1, "form degree");
    let backend = coeffs[0].backend();
    if coeffs.iter().all(Scalar::is_zero) {
        return Err(CurveError::DegenerateLine);
    }
    let mut current = coeffs.to_vec();
    let mut roots: Vec<((Scalar, Scalar), usize)> = Vec::new();
    while current.len() > 1 {
        let Some(root) = find_one_root(&current, backend)? else {
            return Err(CurveError::NonRationalIntersection);
        };
        current = deflate(&current, &root);
        match roots.iter_mut().find(|(r, _)| r == &root) {
            Some((_, m)) => *m += 1,
            None => roots.push((root, 1)),
        }
    }
    debug_assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), d);
    Ok(roots)
}

fn eval_form(coeffs: &[Scalar], s: &Scalar, t: &Scalar) -> Scalar {
    let backend = s.backend();
    let mut acc = Scalar::zero(backend);
    let mut t_pow = Scalar::one(backend);
    let d = coeffs.len() - 1;
    for (i, c) in coeffs.iter().enumerate() {
        acc = &(&acc * s) + &(c * &t_pow);
        if i < d {
            t_pow = &t_pow * t;
        }
    }
    acc
}

fn find_one_root(coeffs: &[Scalar], backend: Backend) -> Result<Option<(Scalar, Scalar)>, CurveError> {
    let one = Scalar::one(backend);
    let zero = Scalar::zero(backend);
    // (1:0) is a root iff the leading s-coefficient vanishes.
    if coeffs[0].is_zero() {
        return Ok(Some((one, zero)));
    }
    match backend {
        Backend::Rational => {
            // Dehomogenize at t = 1: ascending coefficients of r = s/t.
            let rats: Vec<BigRational> = coeffs
                .iter()
                .rev()
                .map(|c| c.as_rational().unwrap().clone())
                .collect();
            let ints = primitive_int_poly(&rats);
            Ok(rational_root_int(&ints).map(|r| (Scalar::Rat(r), one)))
        }
        Backend::Prime(p) => {
            if p > 100_000 {
                return Err(CurveError::RootSearchOverflow);
            }
            for v in 0..p {
                let s = Scalar::Fp { p, val: v };
                if eval_form(coeffs, &s, &one).is_zero() {
                    return Ok(Some((s, one)));
                }
            }
            Ok(None)
        }
    }
}

/// Clear denominators and content; ascending coefficients.
fn primitive_int_poly(poly: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in &mut ints {
            *v = &*v / &content;
        }
    }
    ints
}

fn poly_eval_rat(poly: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// One rational root of an integer polynomial (ascending coefficients,
/// nonzero leading coefficient), or None if there is none.
fn rational_root_int(poly: &[BigInt]) -> Option<BigRational> {
    let deg = poly.len() - 1;
    match deg {
        0 => None,
        1 => Some(BigRational::new(-poly[0].clone(), poly[1].clone())),
        2 => {
            // (-b +- sqrt(b^2 - 4ac)) / 2a, rational iff the discriminant is
            // a perfect square
            let disc = &poly[1] * &poly[1] - BigInt::from(4) * &poly[2] * &poly[0];
            let root = exact_sqrt(&disc)?;
            Some(BigRational::new(-&poly[1] + root, BigInt::from(2) * &poly[2]))
        }
        _ => {
            // Multiple roots live in gcd(f, f'), which has smaller degree;
            // otherwise the squarefree cubic goes through the p-adic lift.
            let derivative: Vec<BigInt> =
                poly.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
            let common = poly_gcd_int(poly, &derivative);
            if common.len() > 1 {
                return rational_root_int(&common);
            }
            hensel_root(poly)
        }
    }
}

/// Primitive integer gcd of two integer polynomials via rational Euclid.
fn poly_gcd_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let to_rat = |p: &[BigInt]| -> Vec<BigRational> {
        p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    let mut r0 = to_rat(a);
    let mut r1 = to_rat(b);
    let trim = |p: &mut Vec<BigRational>| {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    };
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        // r0 mod r1
        while r0.len() >= r1.len() && !r0.is_empty() {
            let shift = r0.len() - r1.len();
            let factor = r0.last().unwrap() / r1.last().unwrap();
            for (i, c) in r1.iter().enumerate() {
                let v = &r0[shift + i] - &(&factor * c);
                r0[shift + i] = v;
            }
            trim(&mut r0);
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    trim(&mut r0);
    if r0.is_empty() {
        return Vec::new();
    }
    primitive_int_poly(&r0)
}

const LIFT_PRIMES: [u64; 12] = [101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 10007];

/// A rational root of a squarefree integer polynomial by Hensel lifting from
/// a prime of good reduction and rational reconstruction. Deterministic: the
/// first good prime decides, and a prime with no modular roots certifies
/// that no rational root exists.
fn hensel_root(poly: &[BigInt]) -> Option<BigRational> {
    let deg = poly.len() - 1;
    let lead = &poly[deg];
    let trail = &poly[0];
    if trail.is_zero() {
        return Some(BigRational::zero());
    }
    // Any rational root u/v (reduced) has u | trail and v | lead; the
    // reconstruction bounds and the p-admissibility both come from that.
    let bound_u = trail.abs();
    let bound_v = lead.abs();
    let target = BigInt::from(2) * &bound_u * &bound_v;
    'primes: for &p in &LIFT_PRIMES {
        let pb = BigInt::from(p);
        if (lead % &pb).is_zero() {
            continue;
        }
        let fp: Vec<u64> = poly
            .iter()
            .map(|c| {
                let m = c % &pb;
                let m = if m.is_negative() { m + &pb } else { m };
                u64::try_from(m).unwrap()
            })
            .collect();
        let eval_mod = |x: u64, coeffs: &[u64]| -> u64 {
            let mut acc = 0u64;
            for c in coeffs.iter().rev() {
                acc = ((acc as u128 * x as u128 + *c as u128) % p as u128) as u64;
            }
            acc
        };
        let deriv: Vec<u64> = fp
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| ((i as u128 * *c as u128) % p as u128) as u64)
            .collect();
        let mut simple_roots = Vec::new();
        let mut saw_multiple = false;
        for x in 0..p {
            if eval_mod(x, &fp) == 0 {
                if eval_mod(x, &deriv) == 0 {
                    saw_multiple = true;
                } else {
                    simple_roots.push(x);
                }
            }
        }
        if saw_multiple {
            continue 'primes; // bad reduction; a later prime decides
        }
        if simple_roots.is_empty() {
            // good reduction and no modular root: no rational root exists
            return None;
        }
        for r0 in simple_roots {
            if let Some(candidate) = lift_and_reconstruct(poly, r0, p, &target, &bound_u, &bound_v) {
                if poly_eval_rat(poly, &candidate).is_zero() {
                    return Some(candidate);
                }
            }
        }
        // all modular roots failed to reconstruct: no rational root
        return None;
    }
    None
}

fn lift_and_reconstruct(
    poly: &[BigInt],
    root_mod_p: u64,
    p: u64,
    target: &BigInt,
    bound_u: &BigInt,
    bound_v: &BigInt,
) -> Option<BigRational> {
    let eval = |x: &BigInt, modulus: &BigInt, coeffs: &[BigInt]| -> BigInt {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = (acc * x + c) % modulus;
        }
        acc.mod_floor(modulus)
    };
    let derivative: Vec<BigInt> =
        poly.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut modulus = BigInt::from(p);
    let mut x = BigInt::from(root_mod_p);
    while modulus <= *target {
        let next = &modulus * &modulus;
        // Newton step mod next: x <- x - f(x) / f'(x)
        let fx = eval(&x, &next, poly);
        let dfx = eval(&x, &next, &derivative);
        let inv = mod_inverse(&dfx, &next)?;
        x = (&x - fx * inv).mod_floor(&next);
        modulus = next;
    }
    // Rational reconstruction: find u/v with x v = u mod modulus and small
    // numerator/denominator.
    let (mut r0, mut r1) = (modulus.clone(), x);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1.abs() > *bound_u {
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound_v {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(modulus);
    let e = a.extended_gcd(modulus);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(modulus))
    } else {
        None
    }
}

/// Exact division of the form by (beta s - alpha t), where (alpha:beta) is a
/// known root.
fn deflate(coeffs: &[Scalar], root: &(Scalar, Scalar)) -> Vec<Scalar> {
    let (alpha, beta) = root;
    let d = coeffs.len() - 1;
    let mut q = vec![Scalar::zero(alpha.backend()); d];
    if !beta.is_zero() {
        // c_i = beta q_i - alpha q_{i-1}
        let binv = beta.inv().unwrap();
        for i in 0..d {
            let prev = if i == 0 { Scalar::zero(alpha.backend()) } else { q[i - 1].clone() };
            q[i] = &(&coeffs[i] + &(alpha * &prev)) * &binv;
        }
        debug_assert!((&coeffs[d] + &(alpha * &q[d - 1])).is_zero(), "root divides the form");
    } else {
        // root (1:0): c_0 = 0, c_i = -alpha q_{i-1}
        debug_assert!(coeffs[0].is_zero());
        let ainv = alpha.inv().unwrap();
        for i in 1..=d {
            q[i - 1] = -&(&coeffs[i] * &ainv);
        }
    }
    q
}
