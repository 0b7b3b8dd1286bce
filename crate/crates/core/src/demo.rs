//! Ready-made small systems used by the runnable examples, the test suite,
//! and the shipped fixture files.
//!
//! Two of them come in structurally different variants with the same input
//! column, which makes them handy for contrasting verdicts: the 2+2 split of
//! `example_a` is controllable while the 3+1 split of `example_a_alt` is not,
//! and both `example_b` variants are uncontrollable because their fast block
//! receives no input at all.

use crate::matrix::RMatrix;
use crate::pencil::DescriptorSystem;
use crate::{rcol, rmat};

/// 4-state, single-input system already in block form: the slow part is the
/// 2×2 unipotent Jordan-type block [[1,1],[0,1]], the fast part the 2×2
/// shift [[0,1],[0,0]] (index 2). Both subsystem rank tests pass, so the
/// system is controllable.
pub fn example_a() -> DescriptorSystem {
    let f = RMatrix::block_diag(&[&RMatrix::identity(2), &rmat![[0, 1], [0, 0]]]);
    let g = RMatrix::block_diag(&[&rmat![[1, 1], [0, 1]], &RMatrix::identity(2)]);
    DescriptorSystem::new(f, g, rcol![0, 1, 1, -1]).expect("example_a dimensions")
}

/// Variant of [`example_a`] with a 3+1 split: slow dimension 3 (a unipotent
/// 3×3 block beside an identity direction), scalar fast block N = [0]. Its
/// slow pair only reaches a 2-dimensional span, so it is *not* controllable.
pub fn example_a_alt() -> DescriptorSystem {
    let f = rmat![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]];
    let g = rmat![[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    DescriptorSystem::new(f, g, rcol![0, 1, 1, -1]).expect("example_a_alt dimensions")
}

/// 3-state, single-input diagonal system: slow part diag(2, 1), scalar fast
/// block N = [0] whose input row is zero. The fast rank test fails (0 < 1),
/// so the system is not controllable, and the fast state sits frozen at zero
/// until the terminal step.
pub fn example_b() -> DescriptorSystem {
    let f = rmat![[1, 0, 0], [0, 1, 0], [0, 0, 0]];
    let g = rmat![[2, 0, 0], [0, 1, 0], [0, 0, 1]];
    DescriptorSystem::new(f, g, rcol![1, 1, 0]).expect("example_b dimensions")
}

/// Variant of [`example_b`] with a 1+2 split: scalar slow part [2], fast
/// part the 2×2 shift (index 2), input still confined to the slow part.
/// Not controllable for the same reason.
pub fn example_b_alt() -> DescriptorSystem {
    let f = rmat![[1, 0, 0], [0, 0, 1], [0, 0, 0]];
    let g = rmat![[2, 0, 0], [0, 1, 0], [0, 0, 1]];
    DescriptorSystem::new(f, g, rcol![1, 0, 0]).expect("example_b_alt dimensions")
}

/// The 2×2 zero pencil with a placeholder input column: det(sF − G) ≡ 0, so
/// every pencil-level operation must refuse it as irregular.
pub fn zero_pencil() -> DescriptorSystem {
    DescriptorSystem::new(RMatrix::zeros(2, 2), RMatrix::zeros(2, 2), rcol![1, 0])
        .expect("zero_pencil dimensions")
}
