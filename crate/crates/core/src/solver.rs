//! Solutions of the decomposed system: a forward recursion for the slow part,
//! a backward (anticausal) relation for the fast part, and finite-horizon
//! trajectory assembly in original coordinates.
//!
//! The slow part obeys Y^p_{k+1} = A_p·Y^p_k + B_p·V_k and has the closed
//! form Y^p_k = A_p^k·Y^p_0 + Σ_{i<k} A_p^{k−i−1}·B_p·V_i. The fast part
//! obeys N·Y^q_{k+1} = Y^q_k + B_q·V_k, which runs backward in time: on a
//! finite horizon M it is pinned by the *terminal* value,
//! Y^q_k = N^{M−k}·Y^q_M − Σ_{i<M−k} N^i·B_q·V_{k+i}, and because N^i = 0
//! for i ≥ index only the first min(M−k, index) summands can be nonzero.
//! A finite-horizon problem is therefore well posed exactly when Y^p_0 and
//! Y^q_M are prescribed — that pair is free, nothing about it needs to be
//! "consistent" — while the infinite-horizon reading instead forces
//! Y^q_0 = −Σ_{i<index} N^i·B_q·V_i.

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::pencil::{DescriptorSystem, QwDecomposition};

/// The data that pins a finite-horizon trajectory: the initial slow state
/// Y^p_0, the terminal fast state Y^q_M, and the horizon M ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryData {
    pub initial_slow: RMatrix,
    pub terminal_fast: RMatrix,
    pub horizon: usize,
}

impl BoundaryData {
    pub fn new(
        dec: &QwDecomposition,
        initial_slow: RMatrix,
        terminal_fast: RMatrix,
        horizon: usize,
    ) -> Result<Self> {
        if initial_slow.rows() != dec.slow_dim || initial_slow.cols() != 1 {
            return Err(Error::dim(format!(
                "initial slow state must be {}x1, got {}x{}",
                dec.slow_dim,
                initial_slow.rows(),
                initial_slow.cols()
            )));
        }
        if terminal_fast.rows() != dec.fast_dim || terminal_fast.cols() != 1 {
            return Err(Error::dim(format!(
                "terminal fast state must be {}x1, got {}x{}",
                dec.fast_dim,
                terminal_fast.rows(),
                terminal_fast.cols()
            )));
        }
        if horizon == 0 {
            return Err(Error::BadHorizon("horizon must be at least 1".into()));
        }
        Ok(BoundaryData {
            initial_slow,
            terminal_fast,
            horizon,
        })
    }

    /// All-zero boundary data for a given horizon.
    pub fn zero(dec: &QwDecomposition, horizon: usize) -> Result<Self> {
        BoundaryData::new(
            dec,
            RMatrix::zeros(dec.slow_dim, 1),
            RMatrix::zeros(dec.fast_dim, 1),
            horizon,
        )
    }
}

/// A solved finite-horizon run: states X_0…X_M in original coordinates,
/// the inputs V_0…V_{M−1} that produced them, and the canonical-coordinate
/// slow/fast components at every step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<RMatrix>,
    pub inputs: Vec<RMatrix>,
    pub slow_states: Vec<RMatrix>,
    pub fast_states: Vec<RMatrix>,
}

impl Trajectory {
    pub fn horizon(&self) -> usize {
        self.inputs.len()
    }
}

/// Slow state at step k by the closed form
/// Y^p_k = A_p^k·Y^p_0 + Σ_{i<k} A_p^{k−i−1}·B_p·V_i.
pub fn forward_state(
    dec: &QwDecomposition,
    y0_slow: &RMatrix,
    inputs: &[RMatrix],
    k: usize,
) -> Result<RMatrix> {
    if y0_slow.rows() != dec.slow_dim || y0_slow.cols() != 1 {
        return Err(Error::dim(format!(
            "slow state must be {}x1, got {}x{}",
            dec.slow_dim,
            y0_slow.rows(),
            y0_slow.cols()
        )));
    }
    if k > inputs.len() {
        return Err(Error::dim(format!(
            "step {} needs {} inputs, got {}",
            k,
            k,
            inputs.len()
        )));
    }
    check_inputs(dec, &inputs[..k])?;
    let mut acc = &dec.slow_a.matpow(k)? * y0_slow;
    for (i, v) in inputs.iter().take(k).enumerate() {
        let term = &dec.slow_a.matpow(k - i - 1)? * &(&dec.slow_b * v);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Fast state determined purely by upcoming inputs,
/// Y^q_k = −Σ_{i<index} N^i·B_q·V_{k+i}.
///
/// `window` must supply at least the `index` inputs V_k, …, V_{k+index−1};
/// extra entries are ignored (they would be multiplied by N^i = 0 anyway).
pub fn fast_state_consistent(dec: &QwDecomposition, window: &[RMatrix]) -> Result<RMatrix> {
    if window.len() < dec.index {
        return Err(Error::dim(format!(
            "need {} upcoming inputs, got {}",
            dec.index,
            window.len()
        )));
    }
    check_inputs(dec, &window[..dec.index])?;
    let mut acc = RMatrix::zeros(dec.fast_dim, 1);
    for (i, v) in window.iter().take(dec.index).enumerate() {
        let term = &dec.fast_n.matpow(i)? * &(&dec.fast_b * v);
        acc = &acc - &term;
    }
    Ok(acc)
}

/// Fast state at step k on the horizon 0…M, pinned by the terminal value:
/// Y^q_k = N^{M−k}·Y^q_M − Σ_{i<M−k} N^i·B_q·V_{k+i}.
///
/// Summands with i ≥ index vanish, so `inputs` (indexed absolutely from 0)
/// only has to cover V_k … V_{k+min(M−k,index)−1}; for M − k ≥ index the
/// result does not depend on the terminal value at all.
pub fn fast_state_finite(
    dec: &QwDecomposition,
    terminal_fast: &RMatrix,
    inputs: &[RMatrix],
    k: usize,
    horizon: usize,
) -> Result<RMatrix> {
    if k > horizon {
        return Err(Error::BadHorizon(format!(
            "step {} lies beyond horizon {}",
            k, horizon
        )));
    }
    if terminal_fast.rows() != dec.fast_dim || terminal_fast.cols() != 1 {
        return Err(Error::dim(format!(
            "terminal fast state must be {}x1, got {}x{}",
            dec.fast_dim,
            terminal_fast.rows(),
            terminal_fast.cols()
        )));
    }
    let live = (horizon - k).min(dec.index);
    if inputs.len() < k + live {
        return Err(Error::dim(format!(
            "steps {}..{} need inputs, got only {}",
            k,
            k + live,
            inputs.len()
        )));
    }
    check_inputs(dec, &inputs[k..k + live])?;
    let mut acc = if horizon - k >= dec.index {
        RMatrix::zeros(dec.fast_dim, 1)
    } else {
        &dec.fast_n.matpow(horizon - k)? * terminal_fast
    };
    for i in 0..live {
        let term = &dec.fast_n.matpow(i)? * &(&dec.fast_b * &inputs[k + i]);
        acc = &acc - &term;
    }
    Ok(acc)
}

/// Solve the two-point boundary problem on 0…M and return the full run in
/// both coordinate systems.
///
/// Every step of the result is re-checked against F·X_{k+1} = G·X_k + B·V_k
/// before returning; a violation means the decomposition and system disagree
/// (a bug, not bad data) and surfaces as an internal error.
pub fn solve_finite(
    sys: &DescriptorSystem,
    dec: &QwDecomposition,
    bd: &BoundaryData,
    inputs: &[RMatrix],
) -> Result<Trajectory> {
    if dec.state_dim() != sys.state_dim() || dec.input_dim() != sys.input_dim() {
        return Err(Error::dim(format!(
            "decomposition is {}-state/{}-input but system is {}-state/{}-input",
            dec.state_dim(),
            dec.input_dim(),
            sys.state_dim(),
            sys.input_dim()
        )));
    }
    if inputs.len() != bd.horizon {
        return Err(Error::dim(format!(
            "horizon {} needs exactly {} inputs, got {}",
            bd.horizon,
            bd.horizon,
            inputs.len()
        )));
    }
    check_inputs(dec, inputs)?;

    let m_steps = bd.horizon;
    let mut slow_states = Vec::with_capacity(m_steps + 1);
    let mut fast_states = Vec::with_capacity(m_steps + 1);
    let mut states = Vec::with_capacity(m_steps + 1);
    for k in 0..=m_steps {
        let slow = forward_state(dec, &bd.initial_slow, inputs, k)?;
        let fast = fast_state_finite(dec, &bd.terminal_fast, inputs, k, m_steps)?;
        let y = dec.join_state(&slow, &fast)?;
        states.push(dec.to_original(&y));
        slow_states.push(slow);
        fast_states.push(fast);
    }

    for k in 0..m_steps {
        if !sys
            .residual(&states[k + 1], &states[k], &inputs[k])
            .is_zero()
        {
            return Err(Error::Internal(format!(
                "solved trajectory violates the system equation at step {}",
                k
            )));
        }
    }

    Ok(Trajectory {
        states,
        inputs: inputs.to_vec(),
        slow_states,
        fast_states,
    })
}

/// The unique fast initial state consistent with the given upcoming inputs
/// under the infinite-horizon reading: Y^q_0 = −Σ_{i<index} N^i·B_q·V_i.
///
/// Callers compare a prescribed Y^q_0 against this to detect inconsistent
/// initial data; on a finite horizon the question never arises because the
/// fast part is pinned at the terminal end instead.
pub fn admissible_initial_state(dec: &QwDecomposition, inputs: &[RMatrix]) -> Result<RMatrix> {
    fast_state_consistent(dec, inputs)
}

fn check_inputs(dec: &QwDecomposition, inputs: &[RMatrix]) -> Result<()> {
    for (i, v) in inputs.iter().enumerate() {
        if v.rows() != dec.input_dim() || v.cols() != 1 {
            return Err(Error::dim(format!(
                "input {} must be {}x1, got {}x{}",
                i,
                dec.input_dim(),
                v.rows(),
                v.cols()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::{rcol, rmat};
    use proptest::prelude::*;

    fn fixture_a() -> (DescriptorSystem, QwDecomposition) {
        let f = RMatrix::block_diag(&[&RMatrix::identity(2), &rmat![[0, 1], [0, 0]]]);
        let g = RMatrix::block_diag(&[&rmat![[1, 1], [0, 1]], &RMatrix::identity(2)]);
        let sys = DescriptorSystem::new(f, g, rcol![0, 1, 1, -1]).unwrap();
        let dec = sys.decompose().unwrap();
        (sys, dec)
    }

    fn fixture_b() -> (DescriptorSystem, QwDecomposition) {
        let f = rmat![[1, 0, 0], [0, 1, 0], [0, 0, 0]];
        let g = rmat![[2, 0, 0], [0, 1, 0], [0, 0, 1]];
        let sys = DescriptorSystem::new(f, g, rcol![1, 1, 0]).unwrap();
        let dec = sys.decompose().unwrap();
        (sys, dec)
    }

    /// Scalar slow system Y_{k+1} = 2·Y_k + V_k beside a trivial fast block.
    fn scalar_doubler() -> QwDecomposition {
        let sys = DescriptorSystem::new(RMatrix::identity(1), rmat![[2]], rcol![1]).unwrap();
        sys.decompose().unwrap()
    }

    fn cols(values: &[i64]) -> Vec<RMatrix> {
        values.iter().map(|&v| rcol![v]).collect()
    }

    #[test]
    fn forward_at_zero_returns_initial_state() {
        let (_, dec) = fixture_a();
        let y0 = rcol![4, -7];
        let inputs = cols(&[1, 2, 3]);
        assert_eq!(forward_state(&dec, &y0, &inputs, 0).unwrap(), y0);
    }

    #[test]
    fn forward_jordan_pair_with_zero_inputs() {
        let (_, dec) = fixture_a();
        let y0 = rcol![0, 1];
        let inputs = cols(&[0, 0, 0]);
        assert_eq!(forward_state(&dec, &y0, &inputs, 3).unwrap(), rcol![3, 1]);
    }

    #[test]
    fn forward_scalar_doubler() {
        let dec = scalar_doubler();
        let inputs = cols(&[1, 1]);
        assert_eq!(
            forward_state(&dec, &rcol![1], &inputs, 2).unwrap(),
            rcol![7]
        );
    }

    #[test]
    fn fast_consistent_examples() {
        let (_, dec) = fixture_a();
        assert_eq!(
            fast_state_consistent(&dec, &cols(&[0, 0])).unwrap(),
            rcol![0, 0]
        );
        assert_eq!(
            fast_state_consistent(&dec, &cols(&[1, 0])).unwrap(),
            rcol![-1, 1]
        );
        assert_eq!(
            fast_state_consistent(&dec, &cols(&[0, 1])).unwrap(),
            rcol![1, 0]
        );
    }

    #[test]
    fn fast_finite_at_terminal_step_returns_terminal_state() {
        let (_, dec) = fixture_a();
        let y_m = rcol![5, -2];
        assert_eq!(
            fast_state_finite(&dec, &y_m, &cols(&[9, 9, 9]), 3, 3).unwrap(),
            y_m
        );
    }

    #[test]
    fn fast_finite_one_step_before_terminal() {
        let (_, dec) = fixture_a();
        // N·[a;b] − B_q·v = [b − v; v]
        for (a, b, v) in [(0, 0, 1), (2, 3, 5), (-1, 4, 0)] {
            let got = fast_state_finite(&dec, &rcol![a, b], &cols(&[7, 7, v]), 2, 3).unwrap();
            assert_eq!(got, rcol![b - v, v]);
        }
    }

    #[test]
    fn fast_finite_forgets_terminal_state_beyond_index() {
        let (_, dec) = fixture_a();
        let inputs = cols(&[3, -1, 4, 1]);
        for k in 0..=2 {
            // horizon 4, index 2: steps 0..=2 cannot see the terminal value
            let one = fast_state_finite(&dec, &rcol![10, 20], &inputs, k, 4).unwrap();
            let two = fast_state_finite(&dec, &rcol![-6, 0], &inputs, k, 4).unwrap();
            assert_eq!(one, two);
        }
    }

    #[test]
    fn fast_finite_rejects_step_past_horizon() {
        let (_, dec) = fixture_a();
        assert!(matches!(
            fast_state_finite(&dec, &rcol![0, 0], &cols(&[]), 4, 3),
            Err(Error::BadHorizon(_))
        ));
    }

    #[test]
    fn solve_zero_data_gives_zero_run() {
        let (sys, dec) = fixture_a();
        let bd = BoundaryData::zero(&dec, 3).unwrap();
        let run = solve_finite(&sys, &dec, &bd, &cols(&[0, 0, 0])).unwrap();
        assert!(run.states.iter().all(|x| x.is_zero()));
        assert!(run.slow_states.iter().all(|y| y.is_zero()));
        assert!(run.fast_states.iter().all(|y| y.is_zero()));
    }

    #[test]
    fn solve_all_ones_run_satisfies_original_equation() {
        let (sys, dec) = fixture_a();
        let bd = BoundaryData::new(&dec, rcol![1, 1], rcol![1, 1], 3).unwrap();
        let inputs = cols(&[1, 1, 1]);
        let run = solve_finite(&sys, &dec, &bd, &inputs).unwrap();
        assert_eq!(run.states.len(), 4);
        for k in 0..3 {
            assert!(sys
                .residual(&run.states[k + 1], &run.states[k], &inputs[k])
                .is_zero());
        }
        assert_eq!(run.slow_states[0], rcol![1, 1]);
        assert_eq!(run.fast_states[3], rcol![1, 1]);
    }

    #[test]
    fn solve_decoupled_fast_part_stays_zero_until_terminal() {
        let (sys, dec) = fixture_b();
        let bd = BoundaryData::new(&dec, rcol![1, -2], rcol![9], 3).unwrap();
        let run = solve_finite(&sys, &dec, &bd, &cols(&[1, 2, 3])).unwrap();
        for k in 0..3 {
            assert!(run.fast_states[k].is_zero());
        }
        assert_eq!(run.fast_states[3], rcol![9]);
    }

    #[test]
    fn admissible_initial_state_examples() {
        let (_, dec) = fixture_a();
        assert_eq!(
            admissible_initial_state(&dec, &cols(&[0, 0])).unwrap(),
            rcol![0, 0]
        );
        // −B_q·1 − N·B_q·1 = −[1;−1] − [−1;0] = [0;1]
        assert_eq!(
            admissible_initial_state(&dec, &cols(&[1, 1])).unwrap(),
            rcol![0, 1]
        );

        let dec_slow_only = scalar_doubler();
        assert_eq!(
            admissible_initial_state(&dec_slow_only, &cols(&[])).unwrap(),
            RMatrix::zeros(0, 1)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        /// The closed form agrees with the stepped recursion
        /// Y_{k+1} = A·Y_k + B·V_k at every step.
        #[test]
        fn forward_closed_form_matches_recursion(
            y0 in proptest::collection::vec(-5i64..=5, 2),
            vs in proptest::collection::vec(-5i64..=5, 8),
        ) {
            let (_, dec) = fixture_a();
            let y0 = RMatrix::from_fn(2, 1, |i, _| rat(y0[i]));
            let inputs = cols(&vs);
            let mut stepped = y0.clone();
            for k in 0..=inputs.len() {
                prop_assert_eq!(
                    forward_state(&dec, &y0, &inputs, k).unwrap(),
                    stepped.clone()
                );
                if k < inputs.len() {
                    stepped = &(&dec.slow_a * &stepped) + &(&dec.slow_b * &inputs[k]);
                }
            }
        }

        /// The finite-horizon fast formula satisfies the backward recursion
        /// N·Y_{k+1} = Y_k + B_q·V_k, equivalently matches iterating
        /// Y_k = N·Y_{k+1} − B_q·V_k down from the terminal value.
        #[test]
        fn fast_finite_matches_backward_recursion(
            ym in proptest::collection::vec(-5i64..=5, 2),
            vs in proptest::collection::vec(-5i64..=5, 6),
        ) {
            let (_, dec) = fixture_a();
            let horizon = vs.len();
            let ym = RMatrix::from_fn(2, 1, |i, _| rat(ym[i]));
            let inputs = cols(&vs);
            let mut expected = ym.clone();
            for k in (0..=horizon).rev() {
                prop_assert_eq!(
                    fast_state_finite(&dec, &ym, &inputs, k, horizon).unwrap(),
                    expected.clone()
                );
                if k > 0 {
                    expected = &(&dec.fast_n * &expected) - &(&dec.fast_b * &inputs[k - 1]);
                }
            }
        }

        /// Runs are linear in the boundary data (inputs fixed at zero) and in
        /// the inputs (boundary fixed at zero), exactly.
        #[test]
        fn solve_is_linear_in_each_argument(
            d1 in proptest::collection::vec(-4i64..=4, 4),
            d2 in proptest::collection::vec(-4i64..=4, 4),
            v1 in proptest::collection::vec(-4i64..=4, 4),
            v2 in proptest::collection::vec(-4i64..=4, 4),
        ) {
            let (sys, dec) = fixture_a();
            let horizon = 4;

            // boundary-data linearity with zero inputs
            let zero_in = cols(&[0, 0, 0, 0]);
            let bd = |d: &[i64]| BoundaryData::new(
                &dec,
                RMatrix::from_fn(2, 1, |i, _| rat(d[i])),
                RMatrix::from_fn(2, 1, |i, _| rat(d[i + 2])),
                horizon,
            ).unwrap();
            let sum = bd(&[
                d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2], d1[3] + d2[3],
            ]);
            let run1 = solve_finite(&sys, &dec, &bd(&d1), &zero_in).unwrap();
            let run2 = solve_finite(&sys, &dec, &bd(&d2), &zero_in).unwrap();
            let run12 = solve_finite(&sys, &dec, &sum, &zero_in).unwrap();
            for k in 0..=horizon {
                prop_assert_eq!(&run12.states[k], &(&run1.states[k] + &run2.states[k]));
            }

            // input linearity with zero boundary data
            let zero_bd = BoundaryData::zero(&dec, horizon).unwrap();
            let vsum: Vec<i64> = v1.iter().zip(&v2).map(|(a, b)| a + b).collect();
            let r1 = solve_finite(&sys, &dec, &zero_bd, &cols(&v1)).unwrap();
            let r2 = solve_finite(&sys, &dec, &zero_bd, &cols(&v2)).unwrap();
            let r12 = solve_finite(&sys, &dec, &zero_bd, &cols(&vsum)).unwrap();
            for k in 0..=horizon {
                prop_assert_eq!(&r12.states[k], &(&r1.states[k] + &r2.states[k]));
            }
        }
    }
}
