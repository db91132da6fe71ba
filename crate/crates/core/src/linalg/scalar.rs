//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every certificate in this crate is an equality of subspaces, so all
//! arithmetic is exact. The rational backend is the default; the prime-field
//! backend is a fast cross-check mode for the linear-algebra layers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::LinalgError;

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backend {
    Rational,
    /// Integers mod `p`, `p` prime.
    Prime(u64),
}

impl Backend {
    /// Prime-field backend with a primality check on `p`.
    pub fn prime(p: u64) -> Result<Backend, LinalgError> {
        if is_prime_u64(p) {
            Ok(Backend::Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x <= 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Modular inverse by extended Euclid; `a` must be nonzero mod `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit mod p");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

/// An exact field element. All entries of a matrix share one backend; the
/// arithmetic operators panic on mixed backends, which the matrix and
/// subspace constructors rule out up front.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rat(_) => Backend::Rational,
            Scalar::Fp { p, .. } => Backend::Prime(*p),
        }
    }

    pub fn zero(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rat(BigRational::zero()),
            Backend::Prime(p) => Scalar::Fp { p, val: 0 },
        }
    }

    pub fn one(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rat(BigRational::one()),
            Backend::Prime(p) => Scalar::Fp { p, val: 1 % p },
        }
    }

    pub fn from_i64(n: i64, backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Backend::Prime(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: v % p }
            }
        }
    }

    pub fn from_ratio(num: i64, den: i64, backend: Backend) -> Scalar {
        assert!(den != 0, "zero denominator");
        &Scalar::from_i64(num, backend) / &Scalar::from_i64(den, backend)
    }

    /// Parse "a" or "a/b" with arbitrary-precision integers.
    pub fn parse(text: &str, backend: Backend) -> Result<Scalar, LinalgError> {
        let text = text.trim();
        let (num_s, den_s) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| LinalgError::BadScalar(text.to_string()))?;
        let den: BigInt = den_s
            .parse()
            .map_err(|_| LinalgError::BadScalar(text.to_string()))?;
        if den.is_zero() {
            return Err(LinalgError::BadScalar(text.to_string()));
        }
        let q = BigRational::new(num, den);
        Ok(match backend {
            Backend::Rational => Scalar::Rat(q),
            Backend::Prime(p) => {
                let red = |n: &BigInt| -> u64 {
                    let m = n % BigInt::from(p);
                    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
                    u64::try_from(m).expect("residue fits u64")
                };
                let n = red(q.numer());
                let d = red(q.denom());
                if d == 0 {
                    return Err(LinalgError::BadScalar(format!(
                        "{text} has denominator divisible by {p}"
                    )));
                }
                Scalar::Fp { p, val: mul_mod(n, inv_mod(d, p), p) }
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Fp { p, val } => Scalar::Fp { p: *p, val: inv_mod(*val, *p) },
        })
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    fn binary(&self, rhs: &Scalar, f: impl Fn(&BigRational, &BigRational) -> BigRational, g: impl Fn(u64, u64, u64) -> u64) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(f(a, b)),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) if p == q => {
                Scalar::Fp { p: *p, val: g(*a, *b, *p) }
            }
            _ => panic!("mixed scalar backends: {} vs {}", self.backend(), rhs.backend()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Total order used only to fix canonical container layouts; rational
/// scalars sort before prime-field ones.
impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { p, val }, Scalar::Fp { p: q, val: w }) => (p, val).cmp(&(q, w)),
            (Scalar::Rat(_), Scalar::Fp { .. }) => Ordering::Less,
            (Scalar::Fp { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a - b, |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a * b, mul_mod)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Fp { p, val } => Scalar::Fp { p: *p, val: if *val == 0 { 0 } else { p - val } },
        }
    }
}
