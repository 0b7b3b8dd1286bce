//! Which initial conditions are even admissible?
//!
//! With the fast part pinned at the terminal step M, the state at an earlier
//! step k is not free: its fast part must equal N^(M-k) Y^q_M minus a
//! combination of the upcoming inputs. Quantifying over all inputs turns
//! that into an affine set per step — the slow part stays completely free.
//! These sets are computed exactly and stored canonically, so equality and
//! membership tests are decisive.
//!
//! Run with: cargo run --example initial_reachable

use desys::reachability::initial_reachable_set;
use desys::{demo, rcol};

fn main() -> desys::Result<()> {
    // Fast block: 2x2 shift with index 2, fed by B_q = [1, -1].
    let dec = demo::example_a().decompose()?;
    let set = initial_reachable_set(&dec, &rcol![1, 1], 3)?;
    println!("example_a, terminal fast state [1,1] at M = 3:");
    println!("(slow part: all of Q^{} at every step)\n", set.slow_dim);
    for (k, fast) in &set.per_step {
        let offset: Vec<String> = (0..fast.offset().rows())
            .map(|i| fast.offset()[(i, 0)].to_string())
            .collect();
        println!(
            "  k = {}: fast set = [{}] + span of {} direction(s){}",
            k,
            offset.join(", "),
            fast.dim(),
            if fast.is_singleton() {
                "  (a single point)"
            } else {
                ""
            }
        );
    }

    // One step before the horizon only the B_q line is adjustable; two or
    // more steps out the whole fast plane is (the index caps the depth).
    assert!(set.fast_at(3).unwrap().is_singleton());
    assert_eq!(set.fast_at(2).unwrap().dim(), 1);
    assert_eq!(set.fast_at(1).unwrap().dim(), 2);
    assert_eq!(set.fast_at(0).unwrap().dim(), 2);

    // Membership works on full canonical states [slow; fast]: the slow half
    // never constrains, the fast half must lie in the affine set.
    let inside = rcol![7, -3, 1, 0];
    let outside = rcol![7, -3, 9, 9];
    assert!(set.contains_state(2, &inside)?);
    println!("\n[7,-3 | 1,0] is admissible at k = 2");
    assert!(!set.contains_state(3, &outside)?);
    println!("[7,-3 | 9,9] is not admissible at k = 3 (terminal is pinned)");

    // With no input into the fast block the sets collapse to single points:
    // frozen at zero before the horizon, the terminal value at it.
    let dec_b = demo::example_b().decompose()?;
    let set_b = initial_reachable_set(&dec_b, &rcol![9], 3)?;
    println!("\nexample_b, terminal fast state [9] at M = 3:");
    for (k, fast) in &set_b.per_step {
        println!("  k = {}: singleton {{[{}]}}", k, fast.offset()[(0, 0)]);
        assert!(fast.is_singleton());
    }
    Ok(())
}
