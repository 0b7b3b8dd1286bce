//! Solving F X_{k+1} = G X_k + B V_k over a finite horizon.
//!
//! Boundary data for these systems is split: the slow part takes an initial
//! value, but the fast part is pinned at the *terminal* step M and unwinds
//! backwards through the nilpotent block. The solver combines the forward
//! closed form for the slow part with that backward recursion, and every
//! returned transition is re-checked against the original equations.
//!
//! Run with: cargo run --example simulate_trajectory

use desys::solver::{solve_finite, BoundaryData};
use desys::{demo, rcol};

fn main() -> desys::Result<()> {
    let sys = demo::example_a();
    let dec = sys.decompose()?;
    println!(
        "system: {} states ({} slow + {} fast, index {})",
        dec.state_dim(),
        dec.slow_dim,
        dec.fast_dim,
        dec.index
    );

    // Slow state at k = 0, fast state at k = M, horizon M = 4.
    let bd = BoundaryData::new(&dec, rcol![1, 1], rcol![1, 1], 4)?;
    let inputs: Vec<_> = (0..bd.horizon).map(|_| rcol![1]).collect();

    let run = solve_finite(&sys, &dec, &bd, &inputs)?;
    println!("\n k | state X_k (original coords) | slow Y^p_k | fast Y^q_k");
    for k in 0..=run.horizon() {
        let fmt = |m: &desys::RMatrix| {
            let parts: Vec<String> = (0..m.rows()).map(|i| m[(i, 0)].to_string()).collect();
            format!("[{}]", parts.join(", "))
        };
        println!(
            "{:2} | {:28} | {:10} | {}",
            k,
            fmt(&run.states[k]),
            fmt(&run.slow_states[k]),
            fmt(&run.fast_states[k]),
        );
    }

    // Spot-check one transition by hand through the residual.
    let k = 1;
    let r = sys.residual(&run.states[k + 1], &run.states[k], &run.inputs[k]);
    assert!(r.is_zero());
    println!("\nresidual F*X_2 - G*X_1 - B*V_1 = 0 confirmed");

    // The same machinery rejects impossible boundary conditions early.
    match BoundaryData::new(&dec, rcol![1, 1], rcol![1, 1], 0) {
        Err(e) => println!("horizon 0 rejected: {}", e),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
