//! Sparse degree-n tensors on V = K^3: coordinates over the monomial basis
//! of V^(tensor n), indexed 0..3^n with the leftmost factor in the most
//! significant base-3 digit.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Backend, Scalar};

pub fn dim_of_degree(n: usize) -> usize {
    3usize.pow(n as u32)
}

/// Decode a monomial index into its factor letters (0, 1, 2 for x, y, z).
pub fn digits_of(index: usize, degree: usize) -> Vec<usize> {
    let mut digits = vec![0; degree];
    let mut rest = index;
    for slot in (0..degree).rev() {
        digits[slot] = rest % 3;
        rest /= 3;
    }
    debug_assert_eq!(rest, 0);
    digits
}

#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<usize, Scalar>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (deg {})", self.degree);
        }
        let names = ["x", "y", "z"];
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&i, c)| {
                let word: String =
                    digits_of(i, self.degree).into_iter().map(|d| names[d]).collect();
                if self.degree == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*{word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl TensorElement {
    pub fn zero(degree: usize) -> TensorElement {
        TensorElement { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Scalar) -> TensorElement {
        let mut t = TensorElement::zero(0);
        t.set(0, c);
        t
    }

    /// The basis monomial with the given index.
    pub fn monomial(degree: usize, index: usize, backend: Backend) -> TensorElement {
        let mut t = TensorElement::zero(degree);
        t.set(index, Scalar::one(backend));
        t
    }

    /// A degree-1 element from its (x, y, z) coefficients.
    pub fn linear(coeffs: &[Scalar; 3]) -> TensorElement {
        let mut t = TensorElement::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            t.set(i, c.clone());
        }
        t
    }

    pub fn from_dense(degree: usize, dense: &[Scalar]) -> TensorElement {
        assert_eq!(dense.len(), dim_of_degree(degree));
        let mut t = TensorElement::zero(degree);
        for (i, c) in dense.iter().enumerate() {
            t.set(i, c.clone());
        }
        t
    }

    pub fn to_dense(&self, backend: Backend) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(backend); dim_of_degree(self.degree)];
        for (&i, c) in &self.terms {
            v[i] = c.clone();
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, index: usize) -> Option<&Scalar> {
        self.terms.get(&index)
    }

    pub fn set(&mut self, index: usize, c: Scalar) {
        debug_assert!(index < dim_of_degree(self.degree));
        if c.is_zero() {
            self.terms.remove(&index);
        } else {
            self.terms.insert(index, c);
        }
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, other.degree, "tensor degrees");
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, other.degree, "tensor degrees");
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, &-c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(self.degree);
        }
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(&i, c)| (i, c * s)).collect(),
        }
    }

    /// Tensor product; degrees add, indices concatenate in base 3.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let shift = dim_of_degree(other.degree);
        let mut out = TensorElement::zero(self.degree + other.degree);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i * shift + j, &(a * b));
            }
        }
        out
    }
}
