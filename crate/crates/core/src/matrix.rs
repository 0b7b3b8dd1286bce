//! Dense matrices over exact rationals.
//!
//! Provides the arithmetic and the elimination-based kernels (RREF, rank,
//! determinant, inverse, nullspace, general linear solving) that every other
//! module builds on. Zero-row and zero-column shapes are legal throughout;
//! they appear as empty decomposition blocks and empty subspace bases.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of reduced row-echelon elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Complete solution set of `A x = b`: one particular solution (free
/// variables pinned to zero) plus the kernel of `A`.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: RMatrix,
    pub homogeneous: Subspace,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(RMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::dim("ragged rows"));
        }
        Ok(RMatrix {
            rows: height,
            cols: width,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-literal constructor for demos and tests. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(converted).expect("ragged rows")
    }

    /// Column vector from integer literals.
    pub fn column_i64(entries: &[i64]) -> Self {
        RMatrix {
            rows: entries.len(),
            cols: 1,
            entries: entries.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn column(entries: Vec<Rational>) -> Self {
        RMatrix {
            rows: entries.len(),
            cols: 1,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_column(&self) -> bool {
        self.cols == 1
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * factor)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::dim(format!(
                "hstack: {} rows vs {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &RMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::dim(format!(
                "vstack: {} cols vs {} cols",
                self.cols, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)].clone()
            } else {
                other[(r - self.rows, c)].clone()
            }
        }))
    }

    /// Contiguous submatrix starting at `(top, left)`. Panics out of range.
    pub fn block(&self, top: usize, left: usize, height: usize, width: usize) -> Self {
        assert!(
            top + height <= self.rows && left + width <= self.cols,
            "block out of range"
        );
        Self::from_fn(height, width, |r, c| self[(top + r, left + c)].clone())
    }

    pub fn col(&self, j: usize) -> Self {
        self.block(0, j, self.rows, 1)
    }

    /// Block-diagonal assembly of square or rectangular blocks.
    pub fn block_diag(blocks: &[&RMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Rational) {
        for c in 0..self.cols {
            let idx = row * self.cols + c;
            self.entries[idx] = &self.entries[idx] * factor;
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let delta = &self.entries[source * self.cols + c] * factor;
            let idx = target * self.cols + c;
            self.entries[idx] = &self.entries[idx] - &delta;
        }
    }

    /// Unique reduced row-echelon form, rank and pivot columns.
    ///
    /// # Examples
    /// ```
    /// use desys::rmat;
    /// let reduced = rmat![[0, 1], [1, 1]].rref();
    /// assert_eq!(reduced.rank, 2);
    /// assert_eq!(reduced.pivots, vec![0, 1]);
    /// ```
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pivot_row);
            let inv = m[(row, col)].clone().recip();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Exact determinant by fraction Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = -det;
            }
            det *= m[(col, col)].clone();
            let inv = m[(col, col)].clone().recip();
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    m.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RMatrix> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let augmented = self.hstack(&Self::identity(n))?;
        let reduced = augmented.rref();
        // The identity block keeps the augmented rank at n no matter what, so
        // singularity shows up as pivots escaping into the right half.
        let left_rank = reduced.pivots.iter().filter(|&&c| c < n).count();
        if left_rank < n {
            return Err(Error::SingularMatrix);
        }
        Ok(reduced.matrix.block(0, n, n, n))
    }

    /// Exact matrix power; `matpow(M, 0)` is the identity.
    pub fn matpow(&self, mut exp: usize) -> Result<RMatrix> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "power of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Kernel `{x : A x = 0}` as a canonical subspace of the column domain.
    pub fn nullspace(&self) -> Subspace {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut generators = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            generators[(f, j)] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                generators[(p, j)] = -r[(i, f)].clone();
            }
        }
        Subspace::from_columns(self.cols, &generators)
            .expect("nullspace generators have ambient dimension cols")
    }

    /// Column span as a canonical subspace of the row codomain.
    pub fn colspace(&self) -> Subspace {
        Subspace::from_columns(self.rows, self).expect("column generators match ambient")
    }

    /// Solve `A x = b` exactly. The particular solution pins every free
    /// variable to zero, so the result is deterministic.
    pub fn solve_general(&self, rhs: &RMatrix) -> Result<LinearSolution> {
        if !rhs.is_column() || rhs.rows != self.rows {
            return Err(Error::dim(format!(
                "solve: A is {}x{}, b is {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let augmented = self.hstack(rhs)?;
        let Rref {
            matrix: r, pivots, ..
        } = augmented.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut particular = Self::zeros(self.cols, 1);
        for (i, &p) in pivots.iter().enumerate() {
            particular[(p, 0)] = r[(i, self.cols)].clone();
        }
        Ok(LinearSolution {
            particular,
            homogeneous: self.nullspace(),
        })
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        &mut self.entries[r * self.cols + c]
    }
}

impl Add for &RMatrix {
    type Output = RMatrix;

    fn add(self, other: &RMatrix) -> RMatrix {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "add: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        RMatrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &other[(r, c)])
    }
}

impl Sub for &RMatrix {
    type Output = RMatrix;

    fn sub(self, other: &RMatrix) -> RMatrix {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "sub: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        RMatrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &other[(r, c)])
    }
}

impl Neg for &RMatrix {
    type Output = RMatrix;

    fn neg(self) -> RMatrix {
        RMatrix::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;

    fn mul(self, other: &RMatrix) -> RMatrix {
        assert!(
            self.cols == other.rows,
            "mul: {}x{} by {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        RMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += &self[(r, k)] * &other[(k, c)];
            }
            acc
        })
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let mut widths = vec![0usize; self.cols];
        for (i, cell) in cells.iter().enumerate() {
            let c = i % self.cols;
            widths[c] = widths[c].max(cell.len());
        }
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c], width = widths[c])?;
            }
            write!(f, "]")?;
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RMatrix {}x{}:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Matrix literal from integer rows: `rmat![[1, 2], [3, 4]]`.
#[macro_export]
macro_rules! rmat {
    ($([$($x:expr),* $(,)?]),* $(,)?) => {
        $crate::matrix::RMatrix::from_i64_rows(&[$(&[$($x as i64),*][..]),*])
    };
}

/// Column-vector literal from integers: `rcol![1, -2, 3]`.
#[macro_export]
macro_rules! rcol {
    ($($x:expr),* $(,)?) => {
        $crate::matrix::RMatrix::column_i64(&[$($x as i64),*])
    };
}
