use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A constant real (d+1)×(d+1) matrix acting on gradients in R^d × R_+.
///
/// Indices are 0-based; index d is the vertical direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantMatrix {
    dim: usize,
    entries: Vec<f64>,
    op_norm: f64,
    is_orthogonal: bool,
}

impl ConstantMatrix {
    /// Build from row-major entries; `dim` is d+1.
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!("matrix dimension must be at least 2, got {dim}")));
        }
        if entries.len() != dim * dim {
            return Err(Error::Domain(format!("expected {} entries, got {}", dim * dim, entries.len())));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        let m = DMatrix::from_row_slice(dim, dim, &entries);
        let op_norm = m.singular_values().max();
        let is_orthogonal = (0..dim).all(|i| (0..dim).all(|j| (entries[i * dim + j] + entries[j * dim + i]).abs() <= 1e-14));
        Ok(ConstantMatrix { dim, entries, op_norm, is_orthogonal })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Domain("matrix rows must all have length equal to the row count".into()));
        }
        Self::new(dim, rows.concat())
    }

    pub fn identity(dim: usize) -> Self {
        let mut e = vec![0.0; dim * dim];
        for i in 0..dim {
            e[i * dim + i] = 1.0;
        }
        ConstantMatrix { dim, entries: e, op_norm: 1.0, is_orthogonal: false }
    }

    pub fn zero(dim: usize) -> Self {
        ConstantMatrix { dim, entries: vec![0.0; dim * dim], op_norm: 0.0, is_orthogonal: true }
    }

    /// d + 1.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The spatial dimension d.
    pub fn d(&self) -> usize {
        self.dim - 1
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Largest singular value.
    pub fn op_norm(&self) -> f64 {
        self.op_norm
    }

    /// ⟨Av, v⟩ = 0 for every v.
    pub fn is_orthogonal(&self) -> bool {
        self.is_orthogonal
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries.chunks(self.dim).map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// (A u)·v.
    #[inline]
    pub fn bilinear(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.dim;
        let mut s = 0.0;
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let mut au = 0.0;
            for j in 0..n {
                au += row[j] * u[j];
            }
            s += au * v[i];
        }
        s
    }
}

/// The matrix H^(k): −1 at (k, d+1), +1 at (d+1, k), 1-based, zero elsewhere.
pub fn hmatrix(k: usize, d: usize) -> Result<ConstantMatrix> {
    if d == 0 || k == 0 || k > d {
        return Err(Error::Domain(format!("axis k = {k} out of range 1..={d}")));
    }
    let n = d + 1;
    let mut e = vec![0.0; n * n];
    e[(k - 1) * n + d] = -1.0;
    e[d * n + (k - 1)] = 1.0;
    Ok(ConstantMatrix { dim: n, entries: e, op_norm: 1.0, is_orthogonal: true })
}
