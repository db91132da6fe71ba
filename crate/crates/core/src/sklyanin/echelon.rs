//! Reduced row-echelon bases in sparse row storage.
//!
//! The graded ideal slices have tiny codimension, so every reduced echelon
//! row is supported on its pivot plus the few non-pivot columns; storing rows
//! sparsely keeps degree-7 eliminations (3^7 columns) cheap. The reduced
//! form maintained here is exactly the RREF of the row space, just not
//! materialized densely.

use std::collections::BTreeMap;

use crate::linalg::{Backend, Matrix, Scalar, Subspace};

use super::tensor::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq)]
struct SparseRow {
    pivot: usize,
    /// Sorted by column; first entry is (pivot, 1).
    entries: Vec<(usize, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseEchelon {
    ambient: usize,
    backend: Backend,
    /// Sorted by pivot column.
    rows: Vec<SparseRow>,
}

impl SparseEchelon {
    pub fn new(backend: Backend, ambient: usize) -> SparseEchelon {
        SparseEchelon { ambient, backend, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot(col).is_some()
    }

    fn row_of_pivot(&self, col: usize) -> Option<usize> {
        self.rows.binary_search_by_key(&col, |r| r.pivot).ok()
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.rows.len());
        let mut rows = self.rows.iter().peekable();
        for c in 0..self.ambient {
            if rows.peek().map(|r| r.pivot) == Some(c) {
                rows.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Canonical residual of `v` modulo the row space: zero at every pivot
    /// column. Columns are cleared left to right; a reduced row only touches
    /// columns at or past its pivot, so one pass suffices.
    pub fn reduce_map(&self, v: &BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut work: BTreeMap<usize, Scalar> = v.clone();
        let mut cursor = 0usize;
        loop {
            let Some((&col, _)) = work.range(cursor..).next() else {
                break;
            };
            cursor = col + 1;
            let Some(row_idx) = self.row_of_pivot(col) else {
                continue;
            };
            let factor = work.remove(&col).unwrap();
            for (c, val) in &self.rows[row_idx].entries[1..] {
                match work.entry(*c) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        let nv = -&(&factor * val);
                        if !nv.is_zero() {
                            e.insert(nv);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get() - &(&factor * val);
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                }
            }
        }
        work
    }

    pub fn reduce_tensor(&self, t: &TensorElement) -> TensorElement {
        let map: BTreeMap<usize, Scalar> = t.terms().map(|(i, c)| (i, c.clone())).collect();
        let reduced = self.reduce_map(&map);
        let mut out = TensorElement::zero(t.degree());
        for (i, c) in reduced {
            out.set(i, c);
        }
        out
    }

    pub fn contains_map(&self, v: &BTreeMap<usize, Scalar>) -> bool {
        self.reduce_map(v).is_empty()
    }

    /// Insert a vector; returns true when the rank grew. Keeps the reduced
    /// echelon invariant by clearing the new pivot column everywhere.
    pub fn insert_map(&mut self, v: &BTreeMap<usize, Scalar>) -> bool {
        let reduced = self.reduce_map(v);
        let Some((&pivot, _)) = reduced.iter().next() else {
            return false;
        };
        let inv = reduced[&pivot].inv().expect("leading entry nonzero");
        let entries: Vec<(usize, Scalar)> =
            reduced.iter().map(|(&c, val)| (c, val * &inv)).collect();
        let new_row = SparseRow { pivot, entries };
        // Clear the new pivot column from every existing row.
        for row in &mut self.rows {
            let Ok(pos) = row.entries.binary_search_by_key(&pivot, |e| e.0) else {
                continue;
            };
            let factor = row.entries[pos].1.clone();
            let mut merged: BTreeMap<usize, Scalar> = row.entries.drain(..).collect();
            merged.remove(&pivot);
            for (c, val) in &new_row.entries[1..] {
                let delta = -&(&factor * val);
                match merged.entry(*c) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !delta.is_zero() {
                            e.insert(delta);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get() + &delta;
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                }
            }
            row.entries = merged.into_iter().collect();
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(at, new_row);
        true
    }

    pub fn insert_tensor(&mut self, t: &TensorElement) -> bool {
        let map: BTreeMap<usize, Scalar> = t.terms().map(|(i, c)| (i, c.clone())).collect();
        self.insert_map(&map)
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        let map: BTreeMap<usize, Scalar> =
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        self.insert_map(&map)
    }

    /// Shift every row into the `block`-th slot of an ambient space blown up
    /// by `factor` (rows of B become rows of e_block tensor B).
    pub fn shifted_block(&self, block: usize, factor: usize) -> Vec<(usize, Vec<(usize, Scalar)>)> {
        let offset = block * self.ambient;
        debug_assert!(block < factor);
        self.rows
            .iter()
            .map(|r| {
                (
                    r.pivot + offset,
                    r.entries.iter().map(|(c, v)| (c + offset, v.clone())).collect(),
                )
            })
            .collect()
    }

    /// Assemble an echelon directly from rows already known to be in reduced
    /// echelon position (distinct pivots, unit leading entries, mutually
    /// reduced); used for the block-diagonal lift V tensor I(n-1).
    pub fn from_reduced_rows(
        backend: Backend,
        ambient: usize,
        rows: Vec<(usize, Vec<(usize, Scalar)>)>,
    ) -> SparseEchelon {
        let mut rows: Vec<SparseRow> =
            rows.into_iter().map(|(pivot, entries)| SparseRow { pivot, entries }).collect();
        rows.sort_by_key(|r| r.pivot);
        debug_assert!(rows.windows(2).all(|w| w[0].pivot < w[1].pivot));
        SparseEchelon { ambient, backend, rows }
    }

    /// Dense materialization; only sensible for small ambient dimensions.
    pub fn to_subspace(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut dense = vec![Scalar::zero(self.backend); self.ambient];
            for (c, v) in &r.entries {
                dense[*c] = v.clone();
            }
            rows.push(dense);
        }
        let m = Matrix::from_rows(self.backend, rows, self.ambient).expect("echelon rows");
        Subspace::from_matrix_span(&m)
    }
}
