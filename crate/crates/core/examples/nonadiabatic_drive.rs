//! Slow versus fast drive with the same number of steps: the fast run leaves
//! the proton in a superposition and the entropy keeps growing.
//!
//! ```bash
//! cargo run --release --example nonadiabatic_drive
//! ```

use nedyn::hamiltonian::SyntheticModel;
use nedyn::propagate::{evolve, PropagationPlan, Propagator};
use nedyn::runner::{Prepared, RunConfig};

fn main() -> nedyn::Result<()> {
    let model = toml::to_string(&SyntheticModel::transfer()).expect("plain numbers");
    for (label, t_final, dt) in [("slow", 4000.0, 1.0), ("fast", 2000.0, 0.5)] {
        let text = format!(
            "[source]\nkind = \"synthetic\"\n{model}\n[schedule]\nt_final = {t_final}\n[propagation]\ndt = {dt}\n"
        );
        let prepared = Prepared::new(&RunConfig::parse(&text)?)?;
        let grounds = prepared.references()?;
        let observer = prepared.observer(grounds.clone().map(|g| g.state));
        for propagator in [Propagator::Trotter1, Propagator::Rk4] {
            let step = if propagator == Propagator::Rk4 { dt / 10.0 } else { dt };
            let plan = PropagationPlan::for_schedule(&prepared.schedule, step, propagator, 100)?;
            let (records, _) = evolve(&grounds[0].state, &prepared.drive, &prepared.schedule, &plan, &observer)?;
            let (first, last) = (&records[0], records.last().expect("final record"));
            println!(
                "{label:4} {:7}: F_R {:.4}  n_L/n_M/n_R {:.3}/{:.3}/{:.3}  entropy {:.3e} -> {:.3e}",
                propagator.label(),
                last.f_r,
                last.n_l,
                last.n_m,
                last.n_r,
                first.entropy,
                last.entropy
            );
        }
    }
    Ok(())
}
