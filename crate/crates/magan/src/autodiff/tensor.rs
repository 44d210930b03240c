//! Dense row-major `f64` matrices, the unit of all computation and gradients.
//!
//! Everything the networks touch is rank two: a scalar is `1x1`, a feature
//! vector is `1xn`, a minibatch is `bxn`. Storage is a flat `Vec<f64>` in
//! row-major order, so `data[i * cols + j]` addresses row `i`, column `j`.

use crate::error::{MaganError, Result};

/// A dense row-major matrix of 64-bit floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Tensor {
    /// Builds a tensor from flat row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(MaganError::Contract(format!(
                "tensor extents must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(MaganError::shape(
                "tensor::new",
                format!("{rows}x{cols} ({} elements)", rows * cols),
                format!("{} elements of data", data.len()),
            ));
        }
        Ok(Tensor { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, value: f64) -> Self {
        Tensor {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// A `1x1` tensor.
    pub fn scalar(value: f64) -> Self {
        Tensor {
            rows: 1,
            cols: 1,
            data: vec![value],
        }
    }

    /// Builds a tensor from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(MaganError::Contract("from_rows: no rows given".into()));
        }
        let cols = rows[0].len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(MaganError::shape(
                    "tensor::from_rows",
                    format!("row 0 has {cols} columns"),
                    format!("row {i} has {} columns", r.len()),
                ));
            }
        }
        let data = rows.iter().flatten().copied().collect();
        Tensor::new(rows.len(), cols, data)
    }

    /// A `1xn` row vector.
    pub fn row(values: &[f64]) -> Result<Self> {
        Tensor::new(1, values.len(), values.to_vec())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Tensor { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> [usize; 2] {
        [self.rows, self.cols]
    }

    pub fn shape_string(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn same_shape(&self, other: &Tensor) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    pub fn is_scalar(&self) -> bool {
        self.rows == 1 && self.cols == 1
    }

    /// Value of a `1x1` tensor.
    pub fn scalar_value(&self) -> Result<f64> {
        if !self.is_scalar() {
            return Err(MaganError::Contract(format!(
                "expected a scalar, got {}",
                self.shape_string()
            )));
        }
        Ok(self.data[0])
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
    }

    pub fn row_slice(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// One column copied out as a `Vec`.
    pub fn col_vec(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Tensor {
        Tensor {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Elementwise combination of two same-shaped tensors.
    pub fn zip_map(&self, other: &Tensor, op: &'static str, f: impl Fn(f64, f64) -> f64) -> Result<Tensor> {
        if !self.same_shape(other) {
            return Err(MaganError::shape(op, self.shape_string(), other.shape_string()));
        }
        Ok(Tensor {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// `self += scale * other`, shapes must agree.
    pub fn add_scaled(&mut self, other: &Tensor, scale: f64) {
        debug_assert!(self.same_shape(other));
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += scale * b;
        }
    }

    /// Matrix product, delegated to a tuned dgemm kernel.
    pub fn matmul(&self, other: &Tensor) -> Result<Tensor> {
        if self.cols != other.rows {
            return Err(MaganError::shape(
                "matmul",
                self.shape_string(),
                other.shape_string(),
            ));
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = vec![0.0; m * n];
        unsafe {
            matrixmultiply::dgemm(
                m,
                k,
                n,
                1.0,
                self.data.as_ptr(),
                k as isize,
                1,
                other.data.as_ptr(),
                n as isize,
                1,
                0.0,
                out.as_mut_ptr(),
                n as isize,
                1,
            );
        }
        Ok(Tensor {
            rows: m,
            cols: n,
            data: out,
        })
    }

    /// Like `matmul` but with either operand transposed in place, avoiding
    /// materialized transposes in the backward pass.
    pub(crate) fn matmul_opts(&self, other: &Tensor, trans_a: bool, trans_b: bool) -> Result<Tensor> {
        let (m, ka) = if trans_a {
            (self.cols, self.rows)
        } else {
            (self.rows, self.cols)
        };
        let (kb, n) = if trans_b {
            (other.cols, other.rows)
        } else {
            (other.rows, other.cols)
        };
        if ka != kb {
            return Err(MaganError::shape(
                "matmul",
                self.shape_string(),
                other.shape_string(),
            ));
        }
        let (rsa, csa) = if trans_a {
            (1, self.cols as isize)
        } else {
            (self.cols as isize, 1)
        };
        let (rsb, csb) = if trans_b {
            (1, other.cols as isize)
        } else {
            (other.cols as isize, 1)
        };
        let mut out = vec![0.0; m * n];
        unsafe {
            matrixmultiply::dgemm(
                m,
                ka,
                n,
                1.0,
                self.data.as_ptr(),
                rsa,
                csa,
                other.data.as_ptr(),
                rsb,
                csb,
                0.0,
                out.as_mut_ptr(),
                n as isize,
                1,
            );
        }
        Ok(Tensor {
            rows: m,
            cols: n,
            data: out,
        })
    }

    /// Mean of each column: `bxn -> 1xn`.
    pub fn col_mean(&self) -> Tensor {
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (o, &v) in out.iter_mut().zip(self.row_slice(i)) {
                *o += v;
            }
        }
        let inv = 1.0 / self.rows as f64;
        for o in &mut out {
            *o *= inv;
        }
        Tensor {
            rows: 1,
            cols: self.cols,
            data: out,
        }
    }

    /// Copies the given rows into a new tensor, in order.
    pub fn gather_rows(&self, indices: &[usize]) -> Result<Tensor> {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            if i >= self.rows {
                return Err(MaganError::Contract(format!(
                    "row index {i} out of range for {} rows",
                    self.rows
                )));
            }
            data.extend_from_slice(self.row_slice(i));
        }
        Tensor::new(indices.len(), self.cols, data)
    }

    /// Copies the given columns into a new tensor, in order.
    pub fn select_cols(&self, indices: &[usize]) -> Result<Tensor> {
        for &j in indices {
            if j >= self.cols {
                return Err(MaganError::Config(format!(
                    "column index {j} out of range for {} columns",
                    self.cols
                )));
            }
        }
        let mut data = Vec::with_capacity(indices.len() * self.rows);
        for i in 0..self.rows {
            let row = self.row_slice(i);
            for &j in indices {
                data.push(row[j]);
            }
        }
        Tensor::new(self.rows, indices.len(), data)
    }

    /// Mean of `(a - b)^2` over all elements.
    pub fn mse(&self, other: &Tensor) -> Result<f64> {
        if !self.same_shape(other) {
            return Err(MaganError::shape(
                "mse",
                self.shape_string(),
                other.shape_string(),
            ));
        }
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b) * (a - b))
            .sum();
        Ok(sum / self.data.len() as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_checks_length() {
        assert!(Tensor::new(2, 3, vec![0.0; 6]).is_ok());
        assert!(matches!(
            Tensor::new(2, 3, vec![0.0; 5]),
            Err(MaganError::Shape { .. })
        ));
    }

    #[test]
    fn matmul_identity() {
        let eye = Tensor::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let a = Tensor::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let prod = eye.matmul(&a).unwrap();
        assert_eq!(prod, a);
    }

    #[test]
    fn matmul_small_case() {
        let a = Tensor::from_rows(&[vec![1.0, 2.0]]).unwrap();
        let b = Tensor::from_rows(&[vec![3.0], vec![4.0]]).unwrap();
        let c = a.matmul(&b).unwrap();
        assert_eq!(c.shape(), [1, 1]);
        assert_eq!(c.scalar_value().unwrap(), 11.0);
    }

    #[test]
    fn matmul_shape_error_names_both_shapes() {
        let a = Tensor::zeros(2, 3);
        let b = Tensor::zeros(2, 3);
        let err = a.matmul(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3"), "message should name shapes: {msg}");
    }

    #[test]
    fn matmul_opts_matches_explicit_loops() {
        let a = Tensor::from_fn(3, 4, |i, j| (i * 7 + j) as f64 * 0.25 - 1.0);
        let b = Tensor::from_fn(3, 5, |i, j| (i as f64 - j as f64) * 0.5);
        // a^T (4x3) * b (3x5)
        let c = a.matmul_opts(&b, true, false).unwrap();
        for i in 0..4 {
            for j in 0..5 {
                let mut s = 0.0;
                for p in 0..3 {
                    s += a.get(p, i) * b.get(p, j);
                }
                assert!((c.get(i, j) - s).abs() < 1e-12);
            }
        }
        // b (3x5) * a^T would mismatch; b^T (5x3) * a (3x4)
        let d = b.matmul_opts(&a, true, false).unwrap();
        assert_eq!(d.shape(), [5, 4]);
    }

    #[test]
    fn mse_cases() {
        let a = Tensor::row(&[0.0, 0.0]).unwrap();
        let b = Tensor::row(&[2.0, 2.0]).unwrap();
        assert_eq!(a.mse(&a).unwrap(), 0.0);
        assert_eq!(a.mse(&b).unwrap(), 4.0);
        let c = Tensor::row(&[1.0, 3.0]).unwrap();
        let d = Tensor::row(&[2.0, 5.0]).unwrap();
        assert_eq!(c.mse(&d).unwrap(), 2.5);
    }

    #[test]
    fn select_cols_out_of_range() {
        let a = Tensor::zeros(2, 3);
        assert!(matches!(a.select_cols(&[3]), Err(MaganError::Config(_))));
    }

    #[test]
    fn col_mean_averages_rows() {
        let a = Tensor::from_rows(&[vec![1.0, 2.0], vec![3.0, 6.0]]).unwrap();
        let m = a.col_mean();
        assert_eq!(m.data(), &[2.0, 4.0]);
    }
}
