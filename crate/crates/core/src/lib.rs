//! Exact analysis of singular linear discrete-time systems
//! `F X_{k+1} = G X_k + B V_k`.
//!
//! Everything runs over arbitrary-precision rationals: pencil regularity,
//! the slow/fast quasi-Weierstrass decomposition computed from Wong
//! sequences, forward and backward solution formulas, reachable sets,
//! controllability tests and exact control-input synthesis. No floating
//! point is involved anywhere, so every rank decision and every reported
//! matrix is exact.
//!
//! Start with [`pencil::DescriptorSystem`] and its
//! [`decompose`](pencil::DescriptorSystem::decompose) method, then feed the
//! decomposition to the [`solver`], [`reachability`] and [`controllability`]
//! modules. The `examples/` directory has one runnable program per
//! capability, and the `desys` binary exposes the same analyses over JSON
//! system files.

pub mod cli;
pub mod controllability;
pub mod demo;
pub mod error;
pub mod io;
pub mod matrix;
pub mod pencil;
pub mod rational;
pub mod reachability;
pub mod solver;
pub mod subspace;

pub use controllability::{ControllabilityReport, SynthesisResult};
pub use error::{Error, Result};
pub use io::SystemFile;
pub use matrix::RMatrix;
pub use pencil::{DescriptorSystem, QwDecomposition};
pub use rational::Rational;
pub use reachability::{AffineSet, InitialReachableSet, ReachableSet};
pub use solver::{BoundaryData, Trajectory};
pub use subspace::Subspace;
