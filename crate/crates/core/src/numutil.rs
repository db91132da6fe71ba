//! Small integer/rational helpers shared by the root-finding paths: bounded
//! factorization for rational-root candidate enumeration and exact square
//! detection.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Factor `n > 0` by trial division. Works whenever every prime factor except
/// at most one is below 10^6; returns `None` when the cofactor is too large
/// to certify prime this way.
pub(crate) fn factor_u64(mut n: u64) -> Option<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut push = |p: u64, k: u32| {
        if k > 0 {
            out.push((p, k));
        }
    };
    let mut k = 0;
    while n % 2 == 0 {
        n /= 2;
        k += 1;
    }
    push(2, k);
    let mut d = 3u64;
    while d <= 1_000_000 && d * d <= n {
        let mut k = 0;
        while n % d == 0 {
            n /= d;
            k += 1;
        }
        push(d, k);
        d += 2;
    }
    if n > 1 {
        // Any composite leftover would have a factor <= 10^6 already removed,
        // so a leftover below 10^12 must be prime.
        if n < 1_000_000_000_000 {
            push(n, 1);
        } else {
            return None;
        }
    }
    Some(out)
}

/// All positive divisors of `n`, capped to keep candidate scans bounded.
pub(crate) fn divisors_u64(n: u64, cap: usize) -> Option<Vec<u64>> {
    if n == 0 {
        return None;
    }
    let factors = factor_u64(n)?;
    let mut divs = vec![1u64];
    for (p, k) in factors {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..k {
            pk = pk.checked_mul(p)?;
            for d in &prev {
                divs.push(d.checked_mul(pk)?);
                if divs.len() > cap {
                    return None;
                }
            }
        }
    }
    divs.sort_unstable();
    Some(divs)
}

/// Distinct rational roots of a polynomial with rational coefficients,
/// `poly[i]` the coefficient of t^i. Uses the rational root theorem on the
/// primitive integer form; `None` when the candidate set cannot be
/// enumerated (oversized coefficients).
pub(crate) fn rational_roots(poly: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut coeffs: Vec<BigRational> = poly.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return None; // zero polynomial: every value is a root
    }
    let mut roots = Vec::new();
    // t = 0 roots: strip trailing zero coefficients from the low end.
    let low = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero poly");
    if low > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..low);
    }
    if coeffs.len() == 1 {
        return Some(roots);
    }
    // Primitive integer form.
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let a0 = u64::try_from(ints[0].abs()).ok()?;
    let am = u64::try_from(ints[ints.len() - 1].abs()).ok()?;
    let nums = divisors_u64(a0, 20_000)?;
    let dens = divisors_u64(am, 20_000)?;
    let eval = |t: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    };
    for u in &nums {
        for v in &dens {
            let base = BigRational::new(BigInt::from(*u), BigInt::from(*v));
            for cand in [base.clone(), -base] {
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

/// Exact integer square root if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
