//! Canonical subspaces of Q^n and exact span arithmetic.
//!
//! A subspace is stored through one distinguished basis: the column echelon
//! form obtained by row-reducing the transpose of any generating set. Two
//! values describing the same span are therefore structurally equal, which is
//! what makes reachable-set comparisons exact.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RMatrix,
}

impl Subspace {
    /// Span of the columns of `generators`, canonicalized.
    pub fn from_columns(ambient: usize, generators: &RMatrix) -> Result<Self> {
        if generators.rows() != ambient {
            return Err(Error::dim(format!(
                "generators live in dimension {}, ambient is {}",
                generators.rows(),
                ambient
            )));
        }
        let reduced = generators.transpose().rref();
        let basis = reduced
            .matrix
            .block(0, 0, reduced.rank, ambient)
            .transpose();
        Ok(Subspace { ambient, basis })
    }

    pub fn trivial(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RMatrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RMatrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one column per dimension.
    pub fn basis(&self) -> &RMatrix {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains(&self, x: &RMatrix) -> Result<bool> {
        if !x.is_column() || x.rows() != self.ambient {
            return Err(Error::dim(format!(
                "membership of {}x{} vector in ambient {}",
                x.rows(),
                x.cols(),
                self.ambient
            )));
        }
        if self.is_trivial() {
            return Ok(x.is_zero());
        }
        Ok(self.basis.hstack(x)?.rank() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient dimensions differ"));
        }
        for j in 0..self.dim() {
            if !other.contains(&self.basis.col(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient dimensions differ"));
        }
        Subspace::from_columns(self.ambient, &self.basis.hstack(&other.basis)?)
    }

    /// Exact intersection via the kernel of `[B1 | -B2]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient dimensions differ"));
        }
        let stacked = self.basis.hstack(&(-&other.basis))?;
        let kernel = stacked.nullspace();
        let coeffs = kernel.basis().block(0, 0, self.dim(), kernel.dim());
        Subspace::from_columns(self.ambient, &(&self.basis * &coeffs))
    }

    pub fn direct_sum_check(&self, other: &Subspace) -> Result<bool> {
        Ok(self.intersect(other)?.is_trivial())
    }

    /// Image `{A x : x in self}`; `a.cols()` must equal the ambient dimension.
    pub fn apply(&self, a: &RMatrix) -> Result<Subspace> {
        if a.cols() != self.ambient {
            return Err(Error::dim(format!(
                "applying {}x{} matrix to ambient {}",
                a.rows(),
                a.cols(),
                self.ambient
            )));
        }
        Subspace::from_columns(a.rows(), &(a * &self.basis))
    }

    /// Preimage `{x : A x in target}`; `a.rows()` must equal the target's
    /// ambient dimension. Computed from the kernel of `[A | -B]`.
    pub fn preimage(a: &RMatrix, target: &Subspace) -> Result<Subspace> {
        if a.rows() != target.ambient {
            return Err(Error::dim(format!(
                "preimage through {}x{} matrix of ambient {}",
                a.rows(),
                a.cols(),
                target.ambient
            )));
        }
        let stacked = a.hstack(&(-&target.basis))?;
        let kernel = stacked.nullspace();
        let projected = kernel.basis().block(0, 0, a.cols(), kernel.dim());
        Subspace::from_columns(a.cols(), &projected)
    }

    /// Row index of the pivot entry of basis column `j`.
    fn pivot_row(&self, j: usize) -> usize {
        for i in 0..self.ambient {
            if !self.basis[(i, j)].is_zero() {
                return i;
            }
        }
        unreachable!("canonical basis column cannot be zero")
    }

    /// Canonical coset representative of `x` modulo this subspace: the unique
    /// member of `x + self` with zeros in every pivot coordinate of the basis.
    pub fn reduce_mod(&self, x: &RMatrix) -> Result<RMatrix> {
        if !x.is_column() || x.rows() != self.ambient {
            return Err(Error::dim(format!(
                "reducing {}x{} vector in ambient {}",
                x.rows(),
                x.cols(),
                self.ambient
            )));
        }
        let mut reduced = x.clone();
        for j in 0..self.dim() {
            let pivot = self.pivot_row(j);
            let coeff = reduced[(pivot, 0)].clone();
            if !coeff.is_zero() {
                let correction = self.basis.col(j).scale(&coeff);
                reduced = &reduced - &correction;
            }
        }
        Ok(reduced)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Subspace dim {} of Q^{}:", self.dim(), self.ambient)?;
        std::fmt::Display::fmt(&self.basis, f)
    }
}

/// True when the pivot entry of each canonical basis column is one. Used only
/// in tests and debug assertions.
#[allow(dead_code)]
pub(crate) fn pivot_entries_are_one(s: &Subspace) -> bool {
    (0..s.dim()).all(|j| {
        let pivot = (0..s.ambient_dim()).find(|&i| !s.basis()[(i, j)].is_zero());
        pivot.is_some_and(|i| s.basis()[(i, j)] == Rational::one())
    })
}
