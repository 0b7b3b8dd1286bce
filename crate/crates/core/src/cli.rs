//! File-driven command front end.
//!
//! Each command loads one JSON problem file, runs the corresponding analysis,
//! and returns a machine-readable JSON report plus a one-line human summary
//! (the binary prints the report to stdout and, under `--verbose`, the
//! summary to stderr). Matrices inside reports use the same exact
//! rational-string shape as the input files, so report fragments can be
//! pasted back into problem files without loss.
//!
//! Exit codes are a stable contract: 0 success, 2 unparseable or ill-formed
//! input, 3 irregular pencil, 4 missing problem data, 5 target not
//! reachable/achievable. Internal failures (never expected) exit 1.

use std::path::Path;

use serde_json::{json, Value};

use crate::controllability::{controllable_iff_subsystems, is_controllable, synthesize};
use crate::error::{Error, Result};
use crate::io::{column_strings, matrix_strings, SystemFile};
use crate::pencil::{det_degree, DescriptorSystem, QwDecomposition};
use crate::reachability::{initial_reachable_set, reachable_from_zero, witness_inputs};
use crate::solver::solve_finite;

/// The seven analyses the binary exposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Decompose,
    Simulate,
    Reach,
    Control,
    Synthesize,
    InitReach,
}

/// Machine-readable report plus a one-line summary for humans.
#[derive(Clone, Debug)]
pub struct Report {
    pub value: Value,
    pub summary: String,
}

/// Load the file at `path` and run one command against it.
pub fn run(command: Command, path: &Path) -> Result<Report> {
    let file = SystemFile::from_path(path)?;
    run_on(command, &file)
}

/// Same as [`run`] for an already-parsed document (handy in tests).
pub fn run_on(command: Command, file: &SystemFile) -> Result<Report> {
    match command {
        Command::Check => cmd_check(file),
        Command::Decompose => cmd_decompose(file),
        Command::Simulate => cmd_simulate(file),
        Command::Reach => cmd_reach(file),
        Command::Control => cmd_control(file),
        Command::Synthesize => cmd_synthesize(file),
        Command::InitReach => cmd_initreach(file),
    }
}

/// The stable exit-code contract.
pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Parse(_) | Error::DimensionMismatch(_) | Error::BadHorizon(_) => 2,
        Error::IrregularPencil => 3,
        Error::MissingData(_) => 4,
        Error::NotReachable | Error::NotAchievable => 5,
        _ => 1,
    }
}

fn decomposed(file: &SystemFile) -> Result<(DescriptorSystem, QwDecomposition)> {
    let sys = file.system()?;
    let dec = sys.decompose()?;
    Ok((sys, dec))
}

/// A subspace as its list of basis vectors (empty list for the trivial
/// space), which reads better in reports than an n-by-0 matrix would.
fn basis_columns(sub: &crate::subspace::Subspace) -> Vec<Vec<String>> {
    (0..sub.dim())
        .map(|j| column_strings(&sub.basis().col(j)))
        .collect()
}

fn cmd_check(file: &SystemFile) -> Result<Report> {
    let sys = file.system()?;
    let regular = sys.is_regular()?;
    let degree = det_degree(sys.f(), sys.g())?;
    let summary = match degree {
        Some(d) => format!(
            "pencil of size {} is regular, det degree {}",
            sys.state_dim(),
            d
        ),
        None => format!(
            "pencil of size {} is irregular: det(sF - G) is identically zero",
            sys.state_dim()
        ),
    };
    Ok(Report {
        value: json!({
            "command": "check",
            "m": sys.state_dim(),
            "regular": regular,
            "det_degree": degree,
        }),
        summary,
    })
}

fn cmd_decompose(file: &SystemFile) -> Result<Report> {
    let (sys, dec) = decomposed(file)?;
    let f_identity = &(&dec.p_mat * sys.f()) * &dec.q_mat == dec.canonical_f();
    let g_identity = &(&dec.p_mat * sys.g()) * &dec.q_mat == dec.canonical_g();
    let summary = format!(
        "slow dim {}, fast dim {}, nilpotency index {}; block identities {}",
        dec.slow_dim,
        dec.fast_dim,
        dec.index,
        if f_identity && g_identity {
            "verified"
        } else {
            "FAILED"
        }
    );
    Ok(Report {
        value: json!({
            "command": "decompose",
            "p": dec.slow_dim,
            "q": dec.fast_dim,
            "q_star": dec.index,
            "P": matrix_strings(&dec.p_mat),
            "Q": matrix_strings(&dec.q_mat),
            "A_p": matrix_strings(&dec.slow_a),
            "N": matrix_strings(&dec.fast_n),
            "B_p": matrix_strings(&dec.slow_b),
            "B_q": matrix_strings(&dec.fast_b),
            "verified": {
                "f_block_identity": f_identity,
                "g_block_identity": g_identity,
            },
        }),
        summary,
    })
}

fn cmd_simulate(file: &SystemFile) -> Result<Report> {
    let (sys, dec) = decomposed(file)?;
    let bd = file.boundary_data(&dec)?;
    let inputs = file.input_sequence(sys.input_dim())?;
    if inputs.len() != bd.horizon {
        return Err(Error::Parse(format!(
            "M = {} needs exactly that many inputs, got {}",
            bd.horizon,
            inputs.len()
        )));
    }
    let run = solve_finite(&sys, &dec, &bd, &inputs)?;
    let columns = |v: &[crate::matrix::RMatrix]| -> Vec<Vec<String>> {
        v.iter().map(column_strings).collect()
    };
    Ok(Report {
        value: json!({
            "command": "simulate",
            "M": bd.horizon,
            "states": columns(&run.states),
            "slow_states": columns(&run.slow_states),
            "fast_states": columns(&run.fast_states),
            "inputs": columns(&run.inputs),
            "verified": true,
        }),
        summary: format!(
            "simulated {} steps; every transition re-checked against F*X' = G*X + B*V",
            bd.horizon
        ),
    })
}

fn cmd_reach(file: &SystemFile) -> Result<Report> {
    let (_, dec) = decomposed(file)?;
    let reach = reachable_from_zero(&dec)?;
    let mut value = json!({
        "command": "reach",
        "p": dec.slow_dim,
        "q": dec.fast_dim,
        "q_star": dec.index,
        "slow_basis": basis_columns(&reach.slow_part),
        "fast_basis": basis_columns(&reach.fast_part),
        "embedded_basis": basis_columns(&reach.embedded),
        "original_basis": basis_columns(&reach.original_coords),
        "dim": reach.embedded.dim(),
        // anything reachable at all is reachable by this step
        "arrival_step_cap": dec.slow_dim + dec.index,
    });
    let mut summary = format!(
        "reachable set has dimension {} of {} (slow {}/{}, fast {}/{})",
        reach.embedded.dim(),
        dec.state_dim(),
        reach.slow_part.dim(),
        dec.slow_dim,
        reach.fast_part.dim(),
        dec.fast_dim,
    );
    if file.target.is_some() {
        let target = file.target_column()?;
        let (arrival, inputs) = witness_inputs(&dec, &target)?;
        value["witness"] = json!({
            "target": column_strings(&target),
            "arrival_step": arrival,
            "inputs": inputs.iter().map(column_strings).collect::<Vec<_>>(),
        });
        summary.push_str(&format!("; target steered in {} steps", arrival));
    }
    Ok(Report { value, summary })
}

fn cmd_control(file: &SystemFile) -> Result<Report> {
    let (_, dec) = decomposed(file)?;
    let report = is_controllable(&dec)?;
    let subsystems = controllable_iff_subsystems(&dec)?;
    Ok(Report {
        value: json!({
            "command": "control",
            "slow_rank": report.slow_rank,
            "fast_rank": report.fast_rank,
            "slow_required": report.slow_required,
            "fast_required": report.fast_required,
            "controllable": report.controllable,
            "subsystem_verdict": subsystems,
            "slow_matrix": matrix_strings(&report.slow_matrix),
            "fast_matrix": matrix_strings(&report.fast_matrix),
        }),
        summary: format!(
            "{}: slow rank {}/{}, fast rank {}/{}",
            if report.controllable {
                "controllable"
            } else {
                "not controllable"
            },
            report.slow_rank,
            report.slow_required,
            report.fast_rank,
            report.fast_required,
        ),
    })
}

fn cmd_synthesize(file: &SystemFile) -> Result<Report> {
    let (_, dec) = decomposed(file)?;
    let bd = file.boundary_data(&dec)?;
    let target = file.target_column()?;
    let result = synthesize(&dec, &bd, &target, file.k1)?;
    Ok(Report {
        value: json!({
            "command": "synthesize",
            "k1": result.time_point,
            "M": bd.horizon,
            "target": column_strings(&target),
            "achieved": column_strings(&result.achieved),
            "inputs": result.inputs.iter().map(column_strings).collect::<Vec<_>>(),
        }),
        summary: format!(
            "target attained at step {} with {} inputs (trailing ones zero)",
            result.time_point,
            result.inputs.len()
        ),
    })
}

fn cmd_initreach(file: &SystemFile) -> Result<Report> {
    let (_, dec) = decomposed(file)?;
    let terminal = file.terminal_fast(&dec)?;
    let horizon = file.horizon.ok_or_else(|| Error::MissingData("M".into()))?;
    let set = initial_reachable_set(&dec, &terminal, horizon)?;
    let steps: Vec<Value> = set
        .per_step
        .iter()
        .map(|(k, fast)| {
            json!({
                "k": k,
                "offset": column_strings(fast.offset()),
                "directions_basis": basis_columns(fast.directions()),
                "singleton": fast.is_singleton(),
            })
        })
        .collect();
    Ok(Report {
        value: json!({
            "command": "initreach",
            "M": horizon,
            // the slow factor is the entire slow space at every step
            "slow_dim_full": set.slow_dim,
            "per_step": steps,
        }),
        summary: format!(
            "per-step attainable sets over horizon {}: slow factor always full ({} dims), fast factor affine",
            horizon, set.slow_dim
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use crate::io;

    fn file_for(sys: &crate::pencil::DescriptorSystem) -> SystemFile {
        SystemFile::from_parts(sys.f(), sys.g(), sys.b())
    }

    #[test]
    fn check_reports_irregular_in_band() {
        let report = run_on(Command::Check, &file_for(&demo::zero_pencil())).unwrap();
        assert_eq!(report.value["regular"], json!(false));
        assert_eq!(report.value["det_degree"], json!(null));
    }

    #[test]
    fn check_reports_degree_for_regular_pencil() {
        let report = run_on(Command::Check, &file_for(&demo::example_a_alt())).unwrap();
        assert_eq!(report.value["regular"], json!(true));
        assert_eq!(report.value["det_degree"], json!(3));
        assert_eq!(report.value["m"], json!(4));
    }

    #[test]
    fn decompose_emits_verified_blocks() {
        let report = run_on(Command::Decompose, &file_for(&demo::example_a())).unwrap();
        assert_eq!(report.value["p"], json!(2));
        assert_eq!(report.value["q"], json!(2));
        assert_eq!(report.value["q_star"], json!(2));
        assert_eq!(report.value["verified"]["f_block_identity"], json!(true));
        assert_eq!(report.value["verified"]["g_block_identity"], json!(true));
        // report matrices parse back to the exact values
        let n = io::parse_matrix(
            &serde_json::from_value::<Vec<Vec<String>>>(report.value["N"].clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(n, crate::rmat![[0, 1], [0, 0]]);
    }

    #[test]
    fn decompose_surfaces_irregular_pencil() {
        let err = run_on(Command::Decompose, &file_for(&demo::zero_pencil())).unwrap_err();
        assert!(matches!(err, Error::IrregularPencil));
        assert_eq!(exit_code_for(&err), 3);
    }

    #[test]
    fn simulate_needs_problem_data() {
        let err = run_on(Command::Simulate, &file_for(&demo::example_a())).unwrap_err();
        assert!(matches!(err, Error::MissingData(_)));
        assert_eq!(exit_code_for(&err), 4);
    }

    #[test]
    fn simulate_full_problem() {
        let mut file = file_for(&demo::example_a());
        file.y0_p = Some(vec!["1".into(), "1".into()]);
        file.ym_q = Some(vec!["1".into(), "1".into()]);
        file.horizon = Some(3);
        file.inputs = Some(vec![vec!["1".into()], vec!["1".into()], vec!["1".into()]]);
        let report = run_on(Command::Simulate, &file).unwrap();
        assert_eq!(report.value["verified"], json!(true));
        assert_eq!(
            report.value["states"].as_array().unwrap().len(),
            4 // X_0 ... X_3
        );
    }

    #[test]
    fn reach_with_unreachable_target_exits_five() {
        let mut file = file_for(&demo::example_b());
        file.target = Some(vec!["0".into(), "0".into(), "1".into()]);
        let err = run_on(Command::Reach, &file).unwrap_err();
        assert!(matches!(err, Error::NotReachable));
        assert_eq!(exit_code_for(&err), 5);
    }

    #[test]
    fn reach_reports_witness_for_reachable_target() {
        let mut file = file_for(&demo::example_a());
        file.target = Some(vec!["1".into(), "0".into(), "0".into(), "0".into()]);
        let report = run_on(Command::Reach, &file).unwrap();
        assert_eq!(report.value["witness"]["arrival_step"], json!(4));
        assert_eq!(report.value["arrival_step_cap"], json!(4));
    }

    #[test]
    fn control_verdicts() {
        let yes = run_on(Command::Control, &file_for(&demo::example_a())).unwrap();
        assert_eq!(yes.value["controllable"], json!(true));
        assert_eq!(yes.value["subsystem_verdict"], json!(true));
        let no = run_on(Command::Control, &file_for(&demo::example_b())).unwrap();
        assert_eq!(no.value["controllable"], json!(false));
        assert_eq!(no.value["fast_rank"], json!(0));
    }

    #[test]
    fn synthesize_and_exit_codes() {
        let mut file = file_for(&demo::example_a());
        file.y0_p = Some(vec!["0".into(), "0".into()]);
        file.ym_q = Some(vec!["0".into(), "0".into()]);
        file.horizon = Some(4);
        file.target = Some(vec!["1".into(), "0".into(), "1".into(), "0".into()]);
        let report = run_on(Command::Synthesize, &file).unwrap();
        assert_eq!(report.value["k1"], json!(2));
        assert_eq!(report.value["achieved"], report.value["target"]);

        let mut bad = file_for(&demo::example_b());
        bad.y0_p = Some(vec!["0".into(), "0".into()]);
        bad.ym_q = Some(vec!["0".into()]);
        bad.horizon = Some(4);
        bad.target = Some(vec!["0".into(), "0".into(), "1".into()]);
        let err = run_on(Command::Synthesize, &bad).unwrap_err();
        assert!(matches!(err, Error::NotAchievable));
        assert_eq!(exit_code_for(&err), 5);
    }

    #[test]
    fn initreach_per_step_shape() {
        let mut file = file_for(&demo::example_b());
        file.ym_q = Some(vec!["7".into()]);
        file.horizon = Some(2);
        let report = run_on(Command::InitReach, &file).unwrap();
        let steps = report.value["per_step"].as_array().unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[0]["offset"], json!(["0"]));
        assert_eq!(steps[2]["offset"], json!(["7"]));
        assert_eq!(steps[2]["singleton"], json!(true));
        assert_eq!(report.value["slow_dim_full"], json!(2));
    }

    #[test]
    fn exit_codes_cover_the_contract() {
        assert_eq!(exit_code_for(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code_for(&Error::DimensionMismatch("x".into())), 2);
        assert_eq!(exit_code_for(&Error::BadHorizon("x".into())), 2);
        assert_eq!(exit_code_for(&Error::IrregularPencil), 3);
        assert_eq!(exit_code_for(&Error::MissingData("x".into())), 4);
        assert_eq!(exit_code_for(&Error::NotReachable), 5);
        assert_eq!(exit_code_for(&Error::NotAchievable), 5);
        assert_eq!(exit_code_for(&Error::Internal("x".into())), 1);
    }
}
