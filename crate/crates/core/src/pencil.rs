//! Pencil regularity and the slow/fast block decomposition.
//!
//! A descriptor system couples a (typically singular) matrix F with G and an
//! input matrix B through F·X_{k+1} = G·X_k + B·V_k. When the pencil sF − G
//! is regular — det(sF − G) not identically zero — there are invertible P and
//! Q with P·F·Q = blockdiag(I_p, N) and P·G·Q = blockdiag(A_p, I_q), where N
//! is nilpotent. That splits the dynamics into a forward ("slow") recursion
//! of size p and a backward ("fast") one of size q. P and Q are built from
//! two nested subspace iterations, so the whole construction stays inside
//! rational arithmetic; no eigenvalue computation is involved, and the slow
//! block A_p is *not* reduced further to Jordan form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;

/// The triple (F, G, B) of F·X_{k+1} = G·X_k + B·V_k.
///
/// F and G are square of equal size m; B is m×r with r ≥ 1. F may be (and
/// usually is) singular — that is the whole point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptorSystem {
    f: RMatrix,
    g: RMatrix,
    b: RMatrix,
}

impl DescriptorSystem {
    pub fn new(f: RMatrix, g: RMatrix, b: RMatrix) -> Result<Self> {
        if !f.is_square() || f.rows() != g.rows() || !g.is_square() {
            return Err(Error::dim(format!(
                "F and G must be square of equal size, got {}x{} and {}x{}",
                f.rows(),
                f.cols(),
                g.rows(),
                g.cols()
            )));
        }
        if b.rows() != f.rows() || b.cols() == 0 {
            return Err(Error::dim(format!(
                "B must be {}x{} with r >= 1, got {}x{}",
                f.rows(),
                "r",
                b.rows(),
                b.cols()
            )));
        }
        Ok(DescriptorSystem { f, g, b })
    }

    pub fn f(&self) -> &RMatrix {
        &self.f
    }

    pub fn g(&self) -> &RMatrix {
        &self.g
    }

    pub fn b(&self) -> &RMatrix {
        &self.b
    }

    /// State dimension m.
    pub fn state_dim(&self) -> usize {
        self.f.rows()
    }

    /// Input dimension r.
    pub fn input_dim(&self) -> usize {
        self.b.cols()
    }

    pub fn is_regular(&self) -> Result<bool> {
        is_regular(&self.f, &self.g)
    }

    /// Residual F·x_next − G·x − B·v of one transition; zero iff the step
    /// satisfies the system equation.
    pub fn residual(&self, x_next: &RMatrix, x: &RMatrix, v: &RMatrix) -> RMatrix {
        &(&(&self.f * x_next) - &(&self.g * x)) - &(&self.b * v)
    }

    /// Quasi-Weierstrass decomposition via the Wong-sequence change of basis.
    ///
    /// With V, W basis matrices of the two limit subspaces, take
    /// Q = [V | W] and P = [F·V | G·W]⁻¹. The subspace invariances
    /// G·𝒱* ⊆ F·𝒱* and F·𝒲* ⊆ G·𝒲* then force the block shapes
    /// P·F·Q = blockdiag(I_p, N) and P·G·Q = blockdiag(A_p, I_q) with no
    /// further normalization; both identities are re-checked entry-exact
    /// before returning (a failure would be a bug, not bad input).
    pub fn decompose(&self) -> Result<QwDecomposition> {
        let (vstar, wstar) = wong_sequences(&self.f, &self.g)?;
        let m = self.state_dim();
        let p = vstar.dim();
        let q = wstar.dim();
        if p + q != m || !vstar.direct_sum_check(&wstar)? {
            return Err(Error::Internal(format!(
                "slow/fast subspaces of dim {} and {} do not split the {}-dim state space",
                p, q, m
            )));
        }
        let v = vstar.basis();
        let w = wstar.basis();
        let q_mat = v.hstack(w)?;
        let s = (&self.f * v).hstack(&(&self.g * w))?;
        let p_mat = s.inverse().map_err(|_| {
            Error::Internal("change-of-basis matrix [F·V | G·W] is singular".into())
        })?;

        let fw = &(&p_mat * &self.f) * &q_mat;
        let gw = &(&p_mat * &self.g) * &q_mat;
        let fast_n = fw.block(p, p, q, q);
        let slow_a = gw.block(0, 0, p, p);
        let index = nilpotency_index(&fast_n)
            .map_err(|_| Error::Internal("fast block is not nilpotent".into()))?;

        let expect_f = RMatrix::block_diag(&[&RMatrix::identity(p), &fast_n]);
        let expect_g = RMatrix::block_diag(&[&slow_a, &RMatrix::identity(q)]);
        if fw != expect_f || gw != expect_g {
            return Err(Error::Internal(
                "transformed pencil is not in block-diagonal form".into(),
            ));
        }

        let pb = &p_mat * &self.b;
        let r = self.input_dim();
        Ok(QwDecomposition {
            p_mat,
            q_mat,
            slow_a,
            fast_n,
            slow_b: pb.block(0, 0, p, r),
            fast_b: pb.block(p, 0, q, r),
            slow_dim: p,
            fast_dim: q,
            index,
        })
    }
}

/// Change of basis splitting a regular pencil into slow and fast blocks.
///
/// Invariants (checked at construction time): `p_mat`·F·`q_mat` equals
/// blockdiag(I, `fast_n`), `p_mat`·G·`q_mat` equals blockdiag(`slow_a`, I),
/// `fast_n`^`index` = 0 with `index` minimal, and [`slow_b`; `fast_b`] is
/// `p_mat`·B split at row `slow_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QwDecomposition {
    pub p_mat: RMatrix,
    pub q_mat: RMatrix,
    pub slow_a: RMatrix,
    pub fast_n: RMatrix,
    pub slow_b: RMatrix,
    pub fast_b: RMatrix,
    pub slow_dim: usize,
    pub fast_dim: usize,
    pub index: usize,
}

impl QwDecomposition {
    pub fn state_dim(&self) -> usize {
        self.slow_dim + self.fast_dim
    }

    pub fn input_dim(&self) -> usize {
        self.slow_b.cols()
    }

    /// blockdiag(I_p, N), the transformed F.
    pub fn canonical_f(&self) -> RMatrix {
        RMatrix::block_diag(&[&RMatrix::identity(self.slow_dim), &self.fast_n])
    }

    /// blockdiag(A_p, I_q), the transformed G.
    pub fn canonical_g(&self) -> RMatrix {
        RMatrix::block_diag(&[&self.slow_a, &RMatrix::identity(self.fast_dim)])
    }

    /// Split a canonical-coordinate state into its slow and fast parts.
    pub fn split_state(&self, y: &RMatrix) -> Result<(RMatrix, RMatrix)> {
        if y.rows() != self.state_dim() || y.cols() != 1 {
            return Err(Error::dim(format!(
                "state must be {}x1, got {}x{}",
                self.state_dim(),
                y.rows(),
                y.cols()
            )));
        }
        Ok((
            y.block(0, 0, self.slow_dim, 1),
            y.block(self.slow_dim, 0, self.fast_dim, 1),
        ))
    }

    /// Stack slow and fast parts into a canonical-coordinate state.
    pub fn join_state(&self, slow: &RMatrix, fast: &RMatrix) -> Result<RMatrix> {
        if slow.rows() != self.slow_dim || fast.rows() != self.fast_dim {
            return Err(Error::dim(format!(
                "expected parts of {} and {} rows, got {} and {}",
                self.slow_dim,
                self.fast_dim,
                slow.rows(),
                fast.rows()
            )));
        }
        slow.vstack(fast)
    }

    /// Map a canonical-coordinate state back to original coordinates, X = Q·Y.
    pub fn to_original(&self, y: &RMatrix) -> RMatrix {
        &self.q_mat * y
    }
}

/// True iff det(sF − G) is not the zero polynomial.
///
/// The determinant is a polynomial of degree at most m, so it vanishes at the
/// m+1 sample points s = 0, 1, …, m only if it is identically zero.
pub fn is_regular(f: &RMatrix, g: &RMatrix) -> Result<bool> {
    check_pencil_shapes(f, g)?;
    for s in 0..=f.rows() {
        if !pencil_at(f, g, s).det()?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Coefficients of det(sF − G), lowest degree first, trailing zeros trimmed
/// (so the zero polynomial comes back as an empty vector).
///
/// Built by Newton divided differences through the values at s = 0, …, m and
/// expanded to the monomial basis; everything is exact.
pub fn det_poly(f: &RMatrix, g: &RMatrix) -> Result<Vec<Rational>> {
    check_pencil_shapes(f, g)?;
    let m = f.rows();
    let xs: Vec<Rational> = (0..=m).map(|i| rat(i as i64)).collect();
    let mut table: Vec<Rational> = (0..=m)
        .map(|s| pencil_at(f, g, s).det())
        .collect::<Result<_>>()?;
    for j in 1..=m {
        for i in (j..=m).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }

    // Expand c_0 + c_1(x−x_0) + c_2(x−x_0)(x−x_1) + … into monomials.
    let mut coeffs = vec![Rational::zero(); m + 1];
    let mut basis = vec![Rational::one()];
    for (j, c) in table.iter().enumerate() {
        for (t, b) in basis.iter().enumerate() {
            coeffs[t] = &coeffs[t] + &(b * c);
        }
        if j < m {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (t, b) in basis.iter().enumerate() {
                next[t + 1] = &next[t + 1] + b;
                next[t] = &next[t] - &(b * &xs[j]);
            }
            basis = next;
        }
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Degree of det(sF − G); `None` for the zero polynomial (irregular pencil).
/// For a regular pencil this equals the slow dimension p.
pub fn det_degree(f: &RMatrix, g: &RMatrix) -> Result<Option<usize>> {
    let coeffs = det_poly(f, g)?;
    Ok(coeffs.len().checked_sub(1))
}

/// Limits of the two nested subspace sequences of a regular pencil.
///
/// 𝒱_0 = full space, 𝒱_{i+1} = G⁻¹(F·𝒱_i) shrinks to the slow subspace;
/// 𝒲_0 = {0}, 𝒲_{i+1} = F⁻¹(G·𝒲_i) grows to the fast subspace. Both
/// stabilize in at most m steps, and for a regular pencil the limits form a
/// direct sum of the whole state space.
pub fn wong_sequences(f: &RMatrix, g: &RMatrix) -> Result<(Subspace, Subspace)> {
    if !is_regular(f, g)? {
        return Err(Error::IrregularPencil);
    }
    let m = f.rows();
    let mut v = Subspace::full(m);
    loop {
        let next = Subspace::preimage(g, &v.apply(f)?)?;
        if next == v {
            break;
        }
        v = next;
    }
    let mut w = Subspace::trivial(m);
    loop {
        let next = Subspace::preimage(f, &w.apply(g)?)?;
        if next == w {
            break;
        }
        w = next;
    }
    Ok((v, w))
}

/// Smallest i ≥ 0 with N^i = 0; only the empty matrix has index 0.
pub fn nilpotency_index(n: &RMatrix) -> Result<usize> {
    if !n.is_square() {
        return Err(Error::dim(format!(
            "nilpotency index of {}x{} matrix",
            n.rows(),
            n.cols()
        )));
    }
    let mut power = RMatrix::identity(n.rows());
    for i in 0..=n.rows() {
        if power.is_zero() {
            return Ok(i);
        }
        power = &power * n;
    }
    Err(Error::NotNilpotent)
}

fn check_pencil_shapes(f: &RMatrix, g: &RMatrix) -> Result<()> {
    if !f.is_square() || !g.is_square() || f.rows() != g.rows() {
        return Err(Error::dim(format!(
            "pencil needs square matrices of equal size, got {}x{} and {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    Ok(())
}

/// s·F − G at an integer sample point.
fn pencil_at(f: &RMatrix, g: &RMatrix, s: usize) -> RMatrix {
    &f.scale(&rat(s as i64)) - g
}
