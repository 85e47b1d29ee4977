use serde::Serialize;

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use crate::error::HopfError;

/// A subspace of `k^n` held as the nonzero rows of its reduced row-echelon basis.
///
/// The representation is canonical: two subspaces are equal as sets exactly when
/// their basis matrices are equal entrywise, so `PartialEq` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The row span of `generators`.
    pub fn from_spanning_rows(ambient_dim: usize, generators: &Matrix) -> Result<Self, HopfError> {
        if generators.cols() != ambient_dim {
            return Err(HopfError::Shape(format!(
                "generators of width {} in a space of dimension {ambient_dim}",
                generators.cols()
            )));
        }
        let (r, pivots) = generators.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Ok(Subspace {
            ambient_dim,
            basis: r.select_rows(&keep),
            pivots,
        })
    }

    /// The column span of `generators`.
    pub fn from_spanning_cols(ambient_dim: usize, generators: &Matrix) -> Result<Self, HopfError> {
        Subspace::from_spanning_rows(ambient_dim, &generators.transpose())
    }

    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self, HopfError> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient_dim));
        }
        Subspace::from_spanning_rows(ambient_dim, &Matrix::from_rows(field, vectors)?)
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis vectors as rows, in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), HopfError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(HopfError::Shape(format!(
                "subspaces of k^{} and k^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.field() != other.field() {
            return Err(HopfError::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, HopfError> {
        self.check_ambient(other)?;
        let stacked = Matrix::vstack(self.field(), self.ambient_dim, &[&self.basis, &other.basis])?;
        Subspace::from_spanning_rows(self.ambient_dim, &stacked)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, HopfError> {
        self.check_ambient(other)?;
        let field = self.field();
        // x·A = y·B  ⇔  (x, y) ∈ ker [Aᵀ | −Bᵀ]
        let neg_b = other.basis.scale(&field.from_i64(-1));
        let system = Matrix::hstack(field, self.ambient_dim, &[&self.basis.transpose(), &neg_b.transpose()])?;
        let kernel = system.nullspace();
        let coeffs = kernel.basis.block(0, 0, kernel.dim(), self.dim());
        Subspace::from_spanning_rows(self.ambient_dim, &(&coeffs * &self.basis))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies outside.
    ///
    /// The coordinates of a member are its entries at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, HopfError> {
        if v.len() != self.ambient_dim {
            return Err(HopfError::Shape(format!(
                "vector of length {} in k^{}",
                v.len(),
                self.ambient_dim
            )));
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let field = self.field();
        let mut recon = vec![field.zero(); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    recon[j] = &recon[j] + &(c * b);
                }
            }
        }
        Ok((recon.as_slice() == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, HopfError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, HopfError> {
        self.check_ambient(other)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix sending coordinates (in the canonical basis) to ambient vectors: `basisᵀ`.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Matrix sending ambient vectors of this subspace to their coordinates: picks pivots.
    pub fn coordinate_map(&self) -> Matrix {
        let field = self.field();
        let mut m = Matrix::zeros(field, self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, field.one());
        }
        m
    }
}

/// `k^n / W` with the deterministic complement spanned by the non-pivot coordinates of `W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub subspace: Subspace,
    /// `k^n → k^q`; reduces modulo `W` and reads off the non-pivot coordinates.
    pub projection: Matrix,
    /// `k^q → k^n`; the unit vectors at the non-pivot coordinates.
    pub section: Matrix,
    /// Ambient indices of the quotient coordinates.
    pub representatives: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, subspace: &Subspace) -> Result<Self, HopfError> {
        if subspace.ambient_dim() != ambient_dim {
            return Err(HopfError::Shape(format!(
                "subspace of k^{} quotiented out of k^{ambient_dim}",
                subspace.ambient_dim()
            )));
        }
        let field = subspace.field();
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !subspace.pivots().contains(c)).collect();
        let mut projection = Matrix::zeros(field, free.len(), ambient_dim);
        let mut section = Matrix::zeros(field, ambient_dim, free.len());
        for (q, &f) in free.iter().enumerate() {
            projection.set(q, f, field.one());
            section.set(f, q, field.one());
            for (row, &p) in subspace.pivots().iter().enumerate() {
                let b = subspace.basis().get(row, f);
                if !b.is_zero() {
                    projection.set(q, p, -b);
                }
            }
        }
        Ok(QuotientSpace {
            ambient_dim,
            subspace: subspace.clone(),
            projection,
            section,
            representatives: free,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}
