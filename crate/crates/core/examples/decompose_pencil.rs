//! Quasi-Weierstrass decomposition from Wong sequences.
//!
//! For a regular pencil the two Wong limits split the state space into a
//! slow part (difference equation Y' = A_p Y + B_p V) and a fast part
//! (nilpotent backward recursion N Y' = Y + B_q V). The change-of-basis
//! pair (P, Q) makes this exact: P F Q = diag(I, N) and P G Q = diag(A_p, I).
//!
//! The demo system is deliberately scrambled by an invertible change of
//! coordinates first, so the printed P and Q have real work to do.
//!
//! Run with: cargo run --example decompose_pencil

use desys::pencil::{nilpotency_index, wong_sequences};
use desys::{demo, rmat, DescriptorSystem};

fn main() -> desys::Result<()> {
    let plain = demo::example_a();

    // Mix the equations (left factor) and the variables (right factor).
    let mix_rows = rmat![[1, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 1]];
    let mix_vars = rmat![[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]];
    assert!(mix_rows.det()? != desys::rational::rat(0));
    assert!(mix_vars.det()? != desys::rational::rat(0));
    let sys = DescriptorSystem::new(
        &(&mix_rows * plain.f()) * &mix_vars,
        &(&mix_rows * plain.g()) * &mix_vars,
        &mix_rows * plain.b(),
    )?;

    println!("F =\n{}", sys.f());
    println!("G =\n{}", sys.g());

    // The Wong sequences converge to the two deflating subspaces whose
    // dimensions already reveal the slow/fast split.
    let (v_star, w_star) = wong_sequences(sys.f(), sys.g())?;
    println!(
        "\nWong limits: dim V* = {} (slow), dim W* = {} (fast)",
        v_star.dim(),
        w_star.dim()
    );

    let dec = sys.decompose()?;
    println!("\nQ (columns: slow basis | fast basis) =\n{}", dec.q_mat);
    println!("P =\n{}", dec.p_mat);
    println!("A_p =\n{}", dec.slow_a);
    println!("N   =\n{}", dec.fast_n);
    println!("B_p =\n{}", dec.slow_b);
    println!("B_q =\n{}", dec.fast_b);
    println!("nilpotency index q* = {}", dec.index);
    assert_eq!(nilpotency_index(&dec.fast_n)?, dec.index);

    // The defining identities hold with exact equality, not approximately.
    let pfq = &(&dec.p_mat * sys.f()) * &dec.q_mat;
    let pgq = &(&dec.p_mat * sys.g()) * &dec.q_mat;
    assert_eq!(pfq, dec.canonical_f());
    assert_eq!(pgq, dec.canonical_g());
    println!("\nP F Q =\n{}", pfq);
    println!("P G Q =\n{}", pgq);

    // States in canonical coordinates split into block parts; Q carries them
    // back to the original variables.
    let y = desys::rcol![1, 2, 3, 4];
    let (slow, fast) = dec.split_state(&y)?;
    assert_eq!(dec.join_state(&slow, &fast)?, y);
    println!(
        "\ncanonical state [1,2,3,4] as original variables X = Q·Y:\n{}",
        dec.to_original(&y)
    );

    // The scrambled system and the plain one share the same invariants.
    let plain_dec = plain.decompose()?;
    assert_eq!(plain_dec.slow_dim, dec.slow_dim);
    assert_eq!(plain_dec.fast_dim, dec.fast_dim);
    assert_eq!(plain_dec.index, dec.index);
    println!(
        "scrambling the coordinates left (p, q, q*) = ({}, {}, {}) unchanged",
        dec.slow_dim, dec.fast_dim, dec.index
    );
    Ok(())
}
