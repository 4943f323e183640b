//! Minimal dense complex matrix. The toolkit only ever needs matrix-vector
//! products, Hermitian inner products, and small matrix powers, so this stays
//! deliberately small instead of pulling in a linear-algebra crate.

use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type Complex = Complex64;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        Self {
            rows,
            cols,
            data: vec![Complex::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(1.0, 0.0);
        }
        m
    }

    /// Build from a row-major entry slice.
    pub fn from_rows(rows: usize, cols: usize, entries: &[Complex]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        Self {
            rows,
            cols,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Copy of column `j`.
    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// `self` raised to a positive integer power (repeated multiplication;
    /// orders here never exceed 5).
    pub fn pow(&self, p: u32) -> ComplexMatrix {
        assert_eq!(self.rows, self.cols, "power requires a square matrix");
        assert!(p >= 1, "power must be >= 1");
        let mut out = self.clone();
        for _ in 1..p {
            out = out.matmul(self);
        }
        out
    }

    /// Hermitian transpose.
    pub fn hermitian(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Max entrywise absolute deviation from another matrix.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.data[i * self.cols + j]
    }
}

/// Hermitian inner product `a^H b` of two equal-length vectors.
pub fn hermitian_dot(a: &[Complex], b: &[Complex]) -> Complex {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.conj() * y)
        .sum()
}

/// Plain (non-conjugated) product `a · b`, as in a row vector times a column.
pub fn dot(a: &[Complex], b: &[Complex]) -> Complex {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
