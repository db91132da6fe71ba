//! The PBW engine for U(g): ordered monomials, straightening-based
//! multiplication, filtration coordinates, and the truncated left-ideal /
//! annihilator / center computations used by the certificates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Matrix, Scalar, Subspace};

use super::algebra::LieAlgebra;
use super::LieError;

/// An ordered monomial x_1^{a_1} ... x_m^{a_m} against the fixed basis order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    exps: Vec<u32>,
}

impl PbwMonomial {
    pub fn one(dim: usize) -> PbwMonomial {
        PbwMonomial { exps: vec![0; dim] }
    }

    pub fn generator(i: usize, dim: usize) -> PbwMonomial {
        let mut exps = vec![0; dim];
        exps[i] = 1;
        PbwMonomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> PbwMonomial {
        PbwMonomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Expand into a word of generator indices in basis order.
    fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, &e) in self.exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(i, e as usize));
        }
        w
    }

    fn from_sorted_word(word: &[usize], dim: usize) -> PbwMonomial {
        let mut exps = vec![0u32; dim];
        for &i in word {
            exps[i] += 1;
        }
        PbwMonomial { exps }
    }
}

/// Graded lexicographic order: total degree first, then exponent vector.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &PbwMonomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &PbwMonomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// An element of U(g) in PBW normal form: a sparse map from ordered
/// monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl UeaElement {
    pub fn zero() -> UeaElement {
        UeaElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    /// Filtration degree: the largest total degree in the support (0 for the
    /// zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> UeaElement {
        if s.is_zero() {
            return UeaElement::zero();
        }
        UeaElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The enveloping algebra U(g) of a fixed Lie algebra: owns the straightening
/// rewriter and all filtration-level linear algebra. Pure and immutable.
#[derive(Debug, Clone)]
pub struct Enveloping {
    algebra: LieAlgebra,
}

impl Enveloping {
    pub fn new(algebra: LieAlgebra) -> Enveloping {
        Enveloping { algebra }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn scalar(&self, c: Scalar) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_term(PbwMonomial::one(self.dim()), c);
        out
    }

    pub fn one(&self) -> UeaElement {
        self.scalar(Scalar::one(self.algebra.backend()))
    }

    pub fn generator(&self, i: usize) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_term(
            PbwMonomial::generator(i, self.dim()),
            Scalar::one(self.algebra.backend()),
        );
        out
    }

    /// Element of g (degree-1 part only) from a coefficient vector.
    pub fn from_vector_in_g(&self, v: &[Scalar]) -> UeaElement {
        assert_eq!(v.len(), self.dim(), "coefficient vector length");
        let mut out = UeaElement::zero();
        for (i, c) in v.iter().enumerate() {
            out.add_term(PbwMonomial::generator(i, self.dim()), c.clone());
        }
        out
    }

    /// The degree-1 part of `x` as a vector in g, and its constant term.
    pub fn split_affine(&self, x: &UeaElement) -> Option<(Vec<Scalar>, Scalar)> {
        let backend = self.algebra.backend();
        let mut linear = vec![Scalar::zero(backend); self.dim()];
        let mut constant = Scalar::zero(backend);
        for (m, c) in x.terms() {
            match m.degree() {
                0 => constant = c.clone(),
                1 => {
                    let i = m.exponents().iter().position(|&e| e == 1).unwrap();
                    linear[i] = c.clone();
                }
                _ => return None,
            }
        }
        Some((linear, constant))
    }

    /// PBW normal form of the product, by straightening descents
    /// x_j x_i -> x_i x_j + [x_j, x_i] (j > i) until the word is ordered.
    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut word = ma.word();
                word.extend(mb.word());
                self.normalize_word(word, ca * cb, &mut out);
            }
        }
        out
    }

    fn normalize_word(&self, word: Vec<usize>, coeff: Scalar, out: &mut UeaElement) {
        let dim = self.dim();
        let mut stack = vec![(word, coeff)];
        while let Some((w, c)) = stack.pop() {
            match w.windows(2).position(|p| p[0] > p[1]) {
                None => out.add_term(PbwMonomial::from_sorted_word(&w, dim), c),
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    // bracket correction: [x_{w[i]}, x_{w[i+1]}]
                    for k in 0..dim {
                        let sc = self.algebra.constant(w[i], w[i + 1], k);
                        if !sc.is_zero() {
                            let mut shorter = Vec::with_capacity(w.len() - 1);
                            shorter.extend_from_slice(&w[..i]);
                            shorter.push(k);
                            shorter.extend_from_slice(&w[i + 2..]);
                            stack.push((shorter, &c * sc));
                        }
                    }
                    stack.push((swapped, c));
                }
            }
        }
    }

    /// u - n, shifting the constant term.
    pub fn shift(&self, u: &UeaElement, n: i64) -> UeaElement {
        let mut out = u.clone();
        out.add_term(
            PbwMonomial::one(self.dim()),
            Scalar::from_i64(-n, self.algebra.backend()),
        );
        out
    }

    pub fn pow(&self, u: &UeaElement, n: usize) -> UeaElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, u);
        }
        acc
    }

    /// All monomials of total degree <= d, in graded-lex order. The count is
    /// binomial(dim + d, d).
    pub fn filtration_basis(&self, d: usize) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.dim()];
        self.enumerate_monomials(0, d, &mut exps, &mut out);
        out.sort();
        out
    }

    fn enumerate_monomials(&self, pos: usize, budget: usize, exps: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if pos == self.dim() {
            out.push(PbwMonomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=budget {
            exps[pos] = e as u32;
            self.enumerate_monomials(pos + 1, budget - e, exps, out);
        }
        exps[pos] = 0;
    }

    pub fn filtration_dim(&self, d: usize) -> usize {
        // binomial(dim + d, d)
        let mut n = 1usize;
        for i in 1..=d {
            n = n * (self.dim() + i) / i;
        }
        n
    }

    /// Coordinates of u in U_d against `filtration_basis(d)`.
    pub fn element_to_vector(&self, u: &UeaElement, d: usize) -> Result<Vec<Scalar>, LieError> {
        if u.degree() > d && !u.is_zero() {
            return Err(LieError::DegreeOverflow { degree: u.degree(), cap: d });
        }
        let basis = self.filtration_basis(d);
        let index: BTreeMap<&PbwMonomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![Scalar::zero(self.algebra.backend()); basis.len()];
        for (m, c) in u.terms() {
            v[index[m]] = c.clone();
        }
        Ok(v)
    }

    pub fn vector_to_element(&self, v: &[Scalar], d: usize) -> UeaElement {
        let basis = self.filtration_basis(d);
        assert_eq!(v.len(), basis.len(), "coordinate length");
        let mut out = UeaElement::zero();
        for (m, c) in basis.into_iter().zip(v) {
            out.add_term(m, c.clone());
        }
        out
    }

    /// Truncated left ideal Ux ∩ U_d = span{m x : m a monomial of degree
    /// < d}, as a subspace of U_d. Requires deg x = 1 with nonzero
    /// degree-1 part, so that deg(ux) = deg u + 1 and the span is exact.
    pub fn left_ideal_truncation(&self, x: &UeaElement, d: usize) -> Result<Subspace, LieError> {
        let (linear, _) = self
            .split_affine(x)
            .ok_or_else(|| LieError::BadElement("left ideal generator must lie in U_1".into()))?;
        if linear.iter().all(Scalar::is_zero) {
            return Err(LieError::BadElement(
                "left ideal generator must have a nonzero degree-1 part".into(),
            ));
        }
        assert!(d >= 1, "truncation degree");
        let mut gens = Vec::new();
        for m in self.filtration_basis(d - 1) {
            let mut u = UeaElement::zero();
            u.add_term(m, Scalar::one(self.algebra.backend()));
            gens.push(self.element_to_vector(&self.multiply(&u, x), d)?);
        }
        Ok(Subspace::from_generators(self.algebra.backend(), self.filtration_dim(d), gens)?)
    }

    /// {u in U_d : u w ∈ Ux}, with membership decided inside the truncation
    /// U_{d + deg w}.
    pub fn truncated_annihilator_mod(
        &self,
        x: &UeaElement,
        w: &UeaElement,
        d: usize,
    ) -> Result<Subspace, LieError> {
        let target = d + w.degree();
        let lit = self.left_ideal_truncation(x, target)?;
        let basis = self.filtration_basis(d);
        let mut cols = Vec::with_capacity(basis.len());
        for m in &basis {
            let mut u = UeaElement::zero();
            u.add_term(m.clone(), Scalar::one(self.algebra.backend()));
            let prod = self.multiply(&u, w);
            cols.push(lit.residual_coords(&self.element_to_vector(&prod, target)?));
        }
        let res_len = cols.first().map_or(0, Vec::len);
        let mut rows = vec![vec![Scalar::zero(self.algebra.backend()); basis.len()]; res_len];
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                rows[i][j] = v;
            }
        }
        let m = Matrix::from_rows(self.algebra.backend(), rows, basis.len())?;
        Ok(Subspace::kernel_of(&m))
    }

    /// Intersection over n = 0..=shifts of the truncated ideals U(x - n) in
    /// U_d. Vanishes once shifts >= dim U_d (and usually much sooner).
    pub fn intersect_shifted_ideals(
        &self,
        x: &UeaElement,
        shifts: usize,
        d: usize,
    ) -> Result<Subspace, LieError> {
        let mut acc = self.left_ideal_truncation(x, d)?;
        for n in 1..=shifts {
            if acc.is_zero() {
                break;
            }
            let lit = self.left_ideal_truncation(&self.shift(x, n as i64), d)?;
            acc = acc.intersect(&lit)?;
        }
        Ok(acc)
    }

    /// Truncated center {z in U_d : z x_i = x_i z for all basis x_i}.
    pub fn center_truncated(&self, d: usize) -> Result<Subspace, LieError> {
        let backend = self.algebra.backend();
        let basis = self.filtration_basis(d);
        let target_dim = self.filtration_dim(d + 1);
        let mut cols: Vec<Vec<Scalar>> = vec![Vec::new(); basis.len()];
        for i in 0..self.dim() {
            let g = self.generator(i);
            for (j, m) in basis.iter().enumerate() {
                let mut u = UeaElement::zero();
                u.add_term(m.clone(), Scalar::one(backend));
                let comm = self.multiply(&u, &g).sub(&self.multiply(&g, &u));
                cols[j].extend(self.element_to_vector(&comm, d + 1)?);
            }
        }
        let rows_n = self.dim() * target_dim;
        let mut rows = vec![vec![Scalar::zero(backend); basis.len()]; rows_n];
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                rows[i][j] = v;
            }
        }
        let m = Matrix::from_rows(backend, rows, basis.len())?;
        Ok(Subspace::kernel_of(&m))
    }

    /// (ad y)^k (u) for y in g, extended as a derivation of U.
    pub fn ad_derivation_power(&self, y: &[Scalar], u: &UeaElement, k: usize) -> UeaElement {
        let y_elem = self.from_vector_in_g(y);
        let mut acc = u.clone();
        for _ in 0..k {
            acc = self.multiply(&y_elem, &acc).sub(&self.multiply(&acc, &y_elem));
        }
        acc
    }

    /// Least i with (ad y)^{i+1}(u) = 0, with a hard cap for safety.
    pub fn ad_vanishing_order(&self, y: &[Scalar], u: &UeaElement, cap: usize) -> Result<usize, LieError> {
        let y_elem = self.from_vector_in_g(y);
        let mut acc = u.clone();
        let mut i = 0usize;
        loop {
            let next = self.multiply(&y_elem, &acc).sub(&self.multiply(&acc, &y_elem));
            if next.is_zero() {
                return Ok(i);
            }
            acc = next;
            i += 1;
            if i > cap {
                return Err(LieError::BadElement(format!(
                    "ad y not locally nilpotent within {cap} steps"
                )));
            }
        }
    }
}
