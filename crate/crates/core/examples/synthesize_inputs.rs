//! Exact input synthesis: choose V_0, …, V_{M-1} so the state equals a
//! prescribed target at a chosen time point k1, under fixed boundary data.
//!
//! The slow part of the target is shaped by the inputs before k1, the fast
//! part by the window of q* inputs from k1 onward; everything outside those
//! windows stays zero. The synthesized sequence is verified by replaying it
//! through the full solver, so a returned answer is a proof.
//!
//! Run with: cargo run --example synthesize_inputs

use desys::controllability::synthesize;
use desys::solver::{solve_finite, BoundaryData};
use desys::{demo, rcol};

fn main() -> desys::Result<()> {
    let sys = demo::example_a();
    let dec = sys.decompose()?;

    // Slow state [1,1] at step 0, fast state [1,1] at the horizon M = 4.
    let bd = BoundaryData::new(&dec, rcol![1, 1], rcol![1, 1], 4)?;
    let target = rcol![1, 0, 1, 0];

    // Default time point: k1 = p = 2.
    let result = synthesize(&dec, &bd, &target, None)?;
    let flat: Vec<String> = result
        .inputs
        .iter()
        .map(|v| v[(0, 0)].to_string())
        .collect();
    println!(
        "hit [1,0,1,0] at k1 = {} with inputs [{}]",
        result.time_point,
        flat.join(", ")
    );
    assert_eq!(result.achieved, target);

    // Replay through the general solver and look at the state at k1.
    let run = solve_finite(&sys, &dec, &bd, &result.inputs)?;
    let at_k1 = dec.join_state(
        &run.slow_states[result.time_point],
        &run.fast_states[result.time_point],
    )?;
    assert_eq!(at_k1, target);
    println!("replay through solve_finite confirms the state at k1");

    // The time point can be moved anywhere the fast window still fits.
    let later = synthesize(&dec, &bd, &target, Some(2))?;
    assert_eq!(later.time_point, 2);
    let earlier = synthesize(&dec, &bd, &target, Some(1));
    println!(
        "k1 = 1 leaves only one input before the target: {}",
        match earlier {
            Ok(_) => "still solvable here".to_string(),
            Err(e) => format!("rejected ({})", e),
        }
    );

    // An uncontrollable system cannot hit targets outside its reachable
    // affine set; the error names the obstruction rather than mis-solving.
    let sys_b = demo::example_b();
    let dec_b = sys_b.decompose()?;
    let bd_b = BoundaryData::new(&dec_b, rcol![0, 0], rcol![0], 4)?;
    match synthesize(&dec_b, &bd_b, &rcol![0, 0, 1], None) {
        Err(desys::Error::NotAchievable) => {
            println!("example_b target with nonzero fast part: not achievable")
        }
        other => panic!("expected NotAchievable, got {:?}", other.map(|_| ())),
    }
    Ok(())
}
