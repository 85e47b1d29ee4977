use std::fmt;
use std::ops::Mul;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::parity::ParityVector;
use super::scalar::{FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::HopfError;

/// Dense row-major matrix over an exact field.
///
/// A linear map `V → W` between spaces with bases of size `n` and `m` is an `m × n`
/// matrix acting on column vectors. Tensor powers use the flattened index
/// `(i, j) ↦ i·dim_b + j`, for rows and columns alike.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from row-major entries, checking length and field membership.
    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, HopfError> {
        if entries.len() != rows * cols {
            return Err(HopfError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| !field.owns(s)) {
            return Err(HopfError::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count");
        Matrix {
            field,
            rows,
            cols,
            entries: values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self, HopfError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HopfError::Shape("ragged rows".into()));
        }
        Matrix::from_entries(field, rows.len(), cols, rows.concat())
    }

    pub fn column(field: FieldSpec, values: &[Scalar]) -> Result<Self, HopfError> {
        Matrix::from_entries(field, values.len(), 1, values.to_vec())
    }

    pub fn row_vector(field: FieldSpec, values: &[Scalar]) -> Result<Self, HopfError> {
        Matrix::from_entries(field, 1, values.len(), values.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert!(self.field.owns(&value), "scalar from a foreign field");
        self.entries[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: &Scalar) {
        let idx = r * self.cols + c;
        self.entries[idx] = &self.entries[idx] + value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<(), HopfError> {
        if self.field != other.field {
            return Err(HopfError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self · other`, skipping zero entries on both sides.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, HopfError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(HopfError::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let nonzero: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &j in &nonzero[k] {
                    let prod = a * other.get(k, j);
                    out.add_at(i, j, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, HopfError> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(HopfError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix, HopfError> {
        self.try_add(&other.scale(&self.field.from_i64(-1)))
    }

    /// Sum of two matrices of the same shape; panics on mismatch.
    pub fn plus(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix sum")
    }

    /// Difference of two matrices of the same shape; panics on mismatch.
    pub fn minus(&self, other: &Matrix) -> Matrix {
        self.try_sub(other).expect("matrix difference")
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Kronecker product with index `(i, j) ↦ i·dim_b + j` on rows and columns.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, HopfError> {
        self.check_field(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Position of the first entry where `self` and `other` differ (row-major).
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape(), "comparing matrices of different shape");
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(cols.len() * self.rows);
        for r in 0..self.rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// Rows stacked on top of each other; all inputs share the column count.
    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Result<Matrix, HopfError> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.field != field {
                return Err(HopfError::FieldMismatch(field, p.field));
            }
            if p.cols != cols {
                return Err(HopfError::Shape(format!("vstack: {} columns, expected {cols}", p.cols)));
            }
            rows += p.rows;
            entries.extend_from_slice(&p.entries);
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Matrix]) -> Result<Matrix, HopfError> {
        let transposed: Vec<Matrix> = parts.iter().map(|p| p.transpose()).collect();
        let refs: Vec<&Matrix> = transposed.iter().collect();
        Ok(Matrix::vstack(field, rows, &refs)?.transpose())
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`, adding to existing entries.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of range"
        );
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.get(r, c);
                if !v.is_zero() {
                    self.add_at(r0 + r, c0 + c, v);
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let rs: Vec<usize> = (r0..r0 + rows).collect();
        let cs: Vec<usize> = (c0..c0 + cols).collect();
        self.select_rows(&rs).select_cols(&cs)
    }

    /// Reduced row-echelon form and pivot columns, by exact Gauss–Jordan elimination.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(lead, j) * &inv;
                m.entries[lead * m.cols + j] = v;
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pivot_entry = m.get(lead, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(r, j) - &(&factor * pivot_entry);
                    m.entries[r * m.cols + j] = v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{x : self·x = 0}` in canonical form.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                let v = r.get(row, f);
                if !v.is_zero() {
                    basis.set(k, p, -v);
                }
            }
        }
        Subspace::from_spanning_rows(self.cols, &basis).expect("nullspace basis has the right width")
    }

    /// One solution of `self·x = rhs`, with all free variables set to zero.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, HopfError> {
        if rhs.len() != self.rows {
            return Err(HopfError::Shape(format!(
                "right-hand side of length {} for {} equations",
                rhs.len(),
                self.rows
            )));
        }
        let b = Matrix::column(self.field, rhs)?;
        let aug = Matrix::hstack(self.field, self.rows, &[self, &b])?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Applies the matrix to a column vector given as a slice.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Whether the map sends each homogeneous basis vector to a vector of the same parity.
    pub fn is_even_map(&self, source: &ParityVector, target: &ParityVector) -> bool {
        assert_eq!((target.len(), source.len()), self.shape(), "parity lengths");
        (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c).is_zero() || target.get(r) == source.get(c)))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Composition; panics on shape or field mismatch. Use [`Matrix::try_mul`] for
    /// untrusted shapes.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `{rows, cols, entries}` with row-major scalar entries.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Matrix", 3)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}
