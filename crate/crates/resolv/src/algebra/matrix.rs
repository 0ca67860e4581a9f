//! Dense matrices over a finite field, with reduced row-echelon form,
//! rank, and kernel bases. Everything is exact and n stays small (<= 64),
//! so there is no sparse path.

use std::sync::Arc;

use crate::algebra::field::{FieldElement, FiniteField};

#[derive(Debug, Clone)]
pub struct MatrixGF {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>, // row-major
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}
impl Eq for MatrixGF {}

impl MatrixGF {
    pub fn new(field: Arc<FiniteField>, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        debug_assert!(entries.iter().all(|e| (e.0 as u64) < field.q()));
        MatrixGF { field, rows, cols, entries }
    }

    pub fn zeros(field: Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        MatrixGF { field, rows, cols, entries: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Build from integer encodings, checking them against the field.
    pub fn from_rows(field: Arc<FiniteField>, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                entries.push(field.elem(v));
            }
        }
        MatrixGF { field, rows: r, cols: c, entries }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = f.mul(a, other.get(k, c));
                    out.set(r, c, f.add(out.get(r, c), add));
                }
            }
        }
        out
    }

    /// New matrix from the selected columns, in the given order.
    pub fn select_cols(&self, sel: &[usize]) -> MatrixGF {
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, sel.len());
        for r in 0..self.rows {
            for (j, &c) in sel.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form: (R, rank, pivot columns). R is unique.
    pub fn rref(&self) -> (MatrixGF, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank, pivots)
    }

    /// In-place Gauss-Jordan; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(src) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if src != pr {
                for j in 0..self.cols {
                    let a = self.get(pr, j);
                    let b = self.get(src, j);
                    self.set(pr, j, b);
                    self.set(src, j, a);
                }
            }
            let inv = f.inv(self.get(pr, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                self.set(pr, j, f.mul(self.get(pr, j), inv));
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(pr, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// RREF with zero rows dropped: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> MatrixGF {
        let (r, rank, _) = self.rref();
        MatrixGF {
            field: r.field.clone(),
            rows: rank,
            cols: r.cols,
            entries: r.entries[..rank * r.cols].to_vec(),
        }
    }

    /// Rows form a basis of the right null space {x : M x^T = 0}.
    /// Row count is cols - rank. The result is in RREF.
    pub fn kernel_basis(&self) -> MatrixGF {
        let f = self.field.clone();
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatrixGF::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, FieldElement::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        out.rref_in_place();
        debug_assert_eq!(out.rows, self.cols - rank);
        out
    }

    /// Stack other's rows under self's.
    pub fn vstack(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MatrixGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Whether v lies in the row space.
    pub fn row_space_contains(&self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut ext = self.vstack(&MatrixGF {
            field: self.field.clone(),
            rows: 1,
            cols: self.cols,
            entries: v.to_vec(),
        });
        let before = self.rank();
        let after = ext.rref_in_place().len();
        before == after
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }
}

impl std::fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
