//! Seeded random generators shared by the integration suites.
//!
//! Everything is deterministic: each suite passes an explicit seed, so a
//! failure reproduces exactly. Entry ranges are kept small because the
//! interesting behavior is structural, not numeric.
//!
//! Each test binary compiles its own copy and uses its own subset.
#![allow(dead_code)]

use desys::matrix::RMatrix;
use desys::pencil::{is_regular, DescriptorSystem};
use desys::rational::rat;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Matrix with integer entries drawn uniformly from `lo..=hi`.
pub fn rand_matrix(rng: &mut StdRng, rows: usize, cols: usize, lo: i64, hi: i64) -> RMatrix {
    RMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(lo..=hi)))
}

/// Column vector with integer entries from `lo..=hi`.
pub fn rand_column(rng: &mut StdRng, rows: usize, lo: i64, hi: i64) -> RMatrix {
    rand_matrix(rng, rows, 1, lo, hi)
}

/// Random input sequence of `len` columns of width 1 x `r`.
pub fn rand_inputs(rng: &mut StdRng, len: usize, r: usize, lo: i64, hi: i64) -> Vec<RMatrix> {
    (0..len).map(|_| rand_matrix(rng, r, 1, lo, hi)).collect()
}

/// Unimodular integer matrix built as (unit lower) * (unit upper); always
/// invertible, with entries that stay small.
pub fn rand_unimodular(rng: &mut StdRng, n: usize) -> RMatrix {
    let lower = RMatrix::from_fn(n, n, |i, j| {
        if i == j {
            rat(1)
        } else if i > j {
            rat(rng.gen_range(-2..=2))
        } else {
            rat(0)
        }
    });
    let upper = RMatrix::from_fn(n, n, |i, j| {
        if i == j {
            rat(1)
        } else if i < j {
            rat(rng.gen_range(-2..=2))
        } else {
            rat(0)
        }
    });
    &lower * &upper
}

/// Regular pencil with entries in [-5, 5], found by rejection sampling.
/// Sizes are drawn from 1..=max_m. Irregular draws are rare, so the retry
/// loop terminates almost immediately in practice.
pub fn rand_regular_pencil(rng: &mut StdRng, max_m: usize) -> (RMatrix, RMatrix) {
    let m = rng.gen_range(1..=max_m);
    loop {
        let f = rand_matrix(rng, m, m, -5, 5);
        let g = rand_matrix(rng, m, m, -5, 5);
        if is_regular(&f, &g).expect("square pencil") {
            return (f, g);
        }
    }
}

/// Regular system: random regular pencil plus a random input matrix.
pub fn rand_system(rng: &mut StdRng, max_m: usize, max_r: usize) -> DescriptorSystem {
    let (f, g) = rand_regular_pencil(rng, max_m);
    let r = rng.gen_range(1..=max_r);
    let b = rand_matrix(rng, f.rows(), r, -5, 5);
    DescriptorSystem::new(f, g, b).expect("dimensions agree")
}

/// Shift matrix with ones on the superdiagonal: nilpotent of index n.
pub fn shift_matrix(n: usize) -> RMatrix {
    RMatrix::from_fn(n, n, |i, j| if j == i + 1 { rat(1) } else { rat(0) })
}

/// Companion matrix for coefficients c_0..c_{n-1} (last row), which together
/// with the last unit column makes a controllable single-input pair.
fn companion(rng: &mut StdRng, n: usize) -> RMatrix {
    RMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            rat(1)
        } else if i == n - 1 {
            rat(rng.gen_range(-3..=3))
        } else {
            rat(0)
        }
    })
}

/// Controllable single-input system, planted then disguised: the slow block
/// is a companion pair, the fast block a full shift chain, both fed through
/// the last coordinate, and the whole thing is conjugated by unimodular
/// changes of equations and variables so nothing is block-shaped anymore.
pub fn rand_controllable_system(rng: &mut StdRng, max_p: usize, max_q: usize) -> DescriptorSystem {
    let p = rng.gen_range(1..=max_p);
    let q = rng.gen_range(0..=max_q);
    let m = p + q;

    let a_p = companion(rng, p);
    let n = shift_matrix(q);
    let canon_f = RMatrix::block_diag(&[&RMatrix::identity(p), &n]);
    let canon_g = RMatrix::block_diag(&[&a_p, &RMatrix::identity(q)]);
    // Unit vector into the last slow and last fast coordinate: both Krylov
    // chains then walk the full block.
    let b = RMatrix::from_fn(m, 1, |i, _| {
        if i + 1 == p || i + 1 == m {
            rat(1)
        } else {
            rat(0)
        }
    });

    let rows = rand_unimodular(rng, m);
    let vars = rand_unimodular(rng, m);
    DescriptorSystem::new(
        &(&rows * &canon_f) * &vars,
        &(&rows * &canon_g) * &vars,
        &rows * &b,
    )
    .expect("dimensions agree")
}
