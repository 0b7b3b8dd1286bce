//! Reachable sets: which states the inputs can steer to.
//!
//! Everything here reduces to spans of Krylov blocks [B, A·B, …, A^{i−1}·B].
//! From the zero condition, the reachable set splits cleanly into a slow
//! factor (Krylov span of (A_p, B_p) at depth p) and a fast factor (Krylov
//! span of (N, B_q) at depth equal to the nilpotency index); their
//! block-diagonal embedding is the reachable set in canonical coordinates,
//! and its image under Q is the same set for the original state variables.
//! Under a fixed terminal fast value the attainable *initial* states instead
//! form, per time step, an affine set: a shifted copy of a (possibly smaller)
//! fast Krylov span, while the slow factor stays the whole slow space because
//! the initial slow value is a free parameter.

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::pencil::QwDecomposition;
use crate::subspace::Subspace;

/// Horizontal concatenation [B, A·B, …, A^{depth−1}·B]; depth 0 gives an
/// n×0 matrix.
pub fn krylov_matrix(a: &RMatrix, b: &RMatrix, depth: usize) -> Result<RMatrix> {
    if !a.is_square() || a.rows() != b.rows() {
        return Err(Error::dim(format!(
            "krylov blocks need A square matching B, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut stacked = RMatrix::zeros(a.rows(), 0);
    let mut power = b.clone();
    for i in 0..depth {
        if i > 0 {
            power = a * &power;
        }
        stacked = stacked.hstack(&power)?;
    }
    Ok(stacked)
}

/// Column span of the Krylov blocks up to the given depth.
pub fn krylov_span(a: &RMatrix, b: &RMatrix, depth: usize) -> Result<Subspace> {
    Ok(krylov_matrix(a, b, depth)?.colspace())
}

/// The set of states reachable from the zero condition, in all the coordinate
/// systems a caller might want it in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachableSet {
    /// Krylov span of (A_p, B_p) at depth p, ambient p.
    pub slow_part: Subspace,
    /// Krylov span of (N, B_q) at depth index, ambient q.
    pub fast_part: Subspace,
    /// Block-diagonal embedding slow ⊕ fast, ambient m, canonical coordinates.
    pub embedded: Subspace,
    /// Image of `embedded` under Q: the same set for the original variables.
    pub original_coords: Subspace,
}

/// Reachable set from the zero condition: slow ⊕ fast Krylov spans.
///
/// Depth p suffices for the slow factor (higher powers of A_p are linear
/// combinations of lower ones) and depth index for the fast factor (higher
/// powers of N vanish).
pub fn reachable_from_zero(dec: &QwDecomposition) -> Result<ReachableSet> {
    let slow_part = krylov_span(&dec.slow_a, &dec.slow_b, dec.slow_dim)?;
    let fast_part = krylov_span(&dec.fast_n, &dec.fast_b, dec.index)?;
    let stacked = RMatrix::block_diag(&[slow_part.basis(), fast_part.basis()]);
    let embedded = Subspace::from_columns(dec.state_dim(), &stacked)?;
    let original_coords = embedded.apply(&dec.q_mat)?;
    Ok(ReachableSet {
        slow_part,
        fast_part,
        embedded,
        original_coords,
    })
}

/// Inputs steering the zero condition to `target` (canonical coordinates).
///
/// Returns the arrival step k = p + index together with inputs
/// V_0 … V_{k+index−1}: the first k drive the slow part to the target's slow
/// component, the trailing index of them pin the fast component through the
/// consistency sum. All constraints are gathered into one linear system and
/// solved exactly, with free input coordinates pinned to zero.
pub fn witness_inputs(dec: &QwDecomposition, target: &RMatrix) -> Result<(usize, Vec<RMatrix>)> {
    if target.rows() != dec.state_dim() || target.cols() != 1 {
        return Err(Error::dim(format!(
            "target must be {}x1, got {}x{}",
            dec.state_dim(),
            target.rows(),
            target.cols()
        )));
    }
    let reach = reachable_from_zero(dec)?;
    if !reach.embedded.contains(target)? {
        return Err(Error::NotReachable);
    }

    let p = dec.slow_dim;
    let q = dec.fast_dim;
    let r = dec.input_dim();
    let arrival = p + dec.index;
    let total = arrival + dec.index;

    // Row block 1: Σ_{i<arrival} A_p^{arrival−1−i}·B_p·V_i = target_slow.
    // Row block 2: −Σ_{i<index} N^i·B_q·V_{arrival+i} = target_fast.
    let mut coeff = RMatrix::zeros(p + q, 0);
    for i in 0..total {
        let slow = if i < arrival {
            &dec.slow_a.matpow(arrival - 1 - i)? * &dec.slow_b
        } else {
            RMatrix::zeros(p, r)
        };
        let fast = if i >= arrival {
            -&(&dec.fast_n.matpow(i - arrival)? * &dec.fast_b)
        } else {
            RMatrix::zeros(q, r)
        };
        coeff = coeff.hstack(&slow.vstack(&fast)?)?;
    }
    let solution = coeff
        .solve_general(target)
        .map_err(|_| Error::Internal("reachable target has no steering inputs".into()))?;
    let flat = solution.particular;
    let inputs = (0..total).map(|i| flat.block(i * r, 0, r, 1)).collect();
    Ok((arrival, inputs))
}

/// An affine set `offset + directions`, stored canonically: the offset is the
/// unique coset representative with zeros in the pivot coordinates of the
/// direction basis, so equal sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSet {
    offset: RMatrix,
    directions: Subspace,
}

impl AffineSet {
    pub fn new(offset: RMatrix, directions: Subspace) -> Result<Self> {
        let offset = directions.reduce_mod(&offset)?;
        Ok(AffineSet { offset, directions })
    }

    pub fn offset(&self) -> &RMatrix {
        &self.offset
    }

    pub fn directions(&self) -> &Subspace {
        &self.directions
    }

    pub fn ambient_dim(&self) -> usize {
        self.directions.ambient_dim()
    }

    /// Dimension of the direction space (0 means a single point).
    pub fn dim(&self) -> usize {
        self.directions.dim()
    }

    pub fn is_singleton(&self) -> bool {
        self.directions.is_trivial()
    }

    pub fn contains(&self, x: &RMatrix) -> Result<bool> {
        self.directions.contains(&(x - &self.offset))
    }
}

/// Attainable states per time step when the terminal fast value is fixed:
/// the slow factor is always the whole slow space (the initial slow state is
/// free), the fast factor is one affine set per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialReachableSet {
    /// Dimension of the always-full slow factor.
    pub slow_dim: usize,
    /// Pairs (k, fast-part affine set) for k = 0 … M.
    pub per_step: Vec<(usize, AffineSet)>,
}

impl InitialReachableSet {
    /// Fast-part affine set at step k, if k lies on the horizon.
    pub fn fast_at(&self, k: usize) -> Option<&AffineSet> {
        self.per_step
            .iter()
            .find(|(step, _)| *step == k)
            .map(|(_, set)| set)
    }

    /// Whether the canonical-coordinate state `[slow; fast]` is attainable at
    /// step k. The slow part always is; only the fast part constrains.
    pub fn contains_state(&self, k: usize, y: &RMatrix) -> Result<bool> {
        let set = self
            .fast_at(k)
            .ok_or_else(|| Error::BadHorizon(format!("step {} beyond horizon", k)))?;
        if y.rows() != self.slow_dim + set.ambient_dim() || y.cols() != 1 {
            return Err(Error::dim(format!(
                "state must be {}x1, got {}x{}",
                self.slow_dim + set.ambient_dim(),
                y.rows(),
                y.cols()
            )));
        }
        set.contains(&y.block(self.slow_dim, 0, set.ambient_dim(), 1))
    }
}

/// For each step k ≤ M, the fast states attainable at k given the terminal
/// fast value: offset N^{M−k}·Y^q_M shifted by the span of
/// [B_q, N·B_q, …, N^{min(M−k, index)−1}·B_q]. At k = M the set degenerates
/// to the singleton {Y^q_M}; for M − k ≥ index the offset is zero and the
/// set no longer depends on the terminal value.
pub fn initial_reachable_set(
    dec: &QwDecomposition,
    terminal_fast: &RMatrix,
    horizon: usize,
) -> Result<InitialReachableSet> {
    if terminal_fast.rows() != dec.fast_dim || terminal_fast.cols() != 1 {
        return Err(Error::dim(format!(
            "terminal fast state must be {}x1, got {}x{}",
            dec.fast_dim,
            terminal_fast.rows(),
            terminal_fast.cols()
        )));
    }
    let mut per_step = Vec::with_capacity(horizon + 1);
    for k in 0..=horizon {
        let depth = (horizon - k).min(dec.index);
        let offset = if horizon - k >= dec.index {
            RMatrix::zeros(dec.fast_dim, 1)
        } else {
            &dec.fast_n.matpow(horizon - k)? * terminal_fast
        };
        let directions = krylov_span(&dec.fast_n, &dec.fast_b, depth)?;
        per_step.push((k, AffineSet::new(offset, directions)?));
    }
    Ok(InitialReachableSet {
        slow_dim: dec.slow_dim,
        per_step,
    })
}
