//! Slow drive H_L -> H_M -> H_R: the proton follows the instantaneous ground
//! state and the electron-nuclear entropy peaks at both avoided crossings.
//!
//! ```bash
//! cargo run --release --example adiabatic_transfer
//! ```

use nedyn::hamiltonian::{Schedule, SyntheticModel};
use nedyn::propagate::{evolve, Drive, PropagationPlan, Propagator};
use nedyn::runner::{Prepared, RunConfig};

const STRIDE: usize = 10;

fn config(model: &SyntheticModel) -> String {
    format!(
        "[source]\nkind = \"synthetic\"\n{}\n[schedule]\nt_final = 4000.0\n[propagation]\ndt = 1.0\nstride = {STRIDE}\n",
        toml::to_string(model).expect("plain numbers")
    )
}

fn moving_average(x: &[f64], w: usize) -> Vec<f64> {
    x.windows(w).map(|s| s.iter().sum::<f64>() / w as f64).collect()
}

fn main() -> nedyn::Result<()> {
    let prepared = Prepared::new(&RunConfig::parse(&config(&SyntheticModel::transfer()))?)?;
    let grounds = prepared.references()?;
    let observer = prepared.observer(grounds.clone().map(|g| g.state));
    let drive: &Drive = &prepared.drive;
    let schedule: &Schedule = &prepared.schedule;
    println!(
        "{} qubits, {} distinct Pauli strings",
        drive.num_qubits(),
        drive.term_order().len()
    );

    let plan = PropagationPlan::for_schedule(schedule, 1.0, Propagator::Trotter1, STRIDE)?;
    let (records, evolution) = evolve(&grounds[0].state, drive, schedule, &plan, &observer)?;

    println!(
        "{:>6} {:>9} {:>7} {:>7} {:>7} {:>9} {:>7}",
        "t", "E", "F_L", "F_M", "F_R", "entropy", "n_R"
    );
    for r in records.iter().step_by(25) {
        println!(
            "{:6.0} {:9.5} {:7.4} {:7.4} {:7.4} {:9.2e} {:7.4}",
            r.t, r.energy, r.f_l, r.f_m, r.f_r, r.entropy, r.n_r
        );
    }
    let last = records.last().expect("final record");
    println!(
        "final F_R {:.5}, n_R {:.5}, norm drift {:.1e}",
        last.f_r, last.n_r, evolution.max_norm_drift
    );

    let entropy: Vec<f64> = records.iter().map(|r| r.entropy).collect();
    let smooth = moving_average(&entropy, 50);
    let peaks: Vec<f64> = (1..smooth.len() - 1)
        .filter(|&i| smooth[i] > smooth[i - 1] && smooth[i] >= smooth[i + 1])
        .map(|i| records[i + 25].t)
        .collect();
    println!("smoothed entropy maxima near t = {peaks:?}");
    Ok(())
}
