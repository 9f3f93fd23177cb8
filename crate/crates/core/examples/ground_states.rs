//! Ground states of the three synthetic Hamiltonians, the barrier, and the
//! spectral gap along the drive.
//!
//! ```bash
//! cargo run --release --example ground_states
//! ```

use nedyn::fermion::{total_number, Sector};
use nedyn::hamiltonian::{mix, synthetic_lmr, Schedule, SyntheticModel};
use nedyn::observables::{occupation, NumberOperatorBank};
use nedyn::spectral::{ground_state_in, low_spectrum_in, Subspace};

fn main() -> nedyn::Result<()> {
    for (name, model) in [
        ("default", SyntheticModel::default()),
        ("transfer", SyntheticModel::transfer()),
    ] {
        let layout = model.layout();
        let (h_l, h_m, h_r) = synthetic_lmr(&model)?;
        let ne = total_number(Sector::Electron, &layout)?;
        let np = total_number(Sector::Nuclear, &layout)?;
        let sector = Subspace::from_constraints(layout.qubits(), &[(&ne, 2.0), (&np, 1.0)])?;
        let bank = NumberOperatorBank::new(&layout)?;

        println!("== {name} parameters, {}-dimensional (2e, 1p) sector", sector.dim());
        let mut energies = Vec::new();
        for (label, h) in [("L", &h_l), ("M", &h_m), ("R", &h_r)] {
            let g = ground_state_in(h, &sector)?;
            let sites: Vec<String> = (0..3)
                .map(|s| occupation(&g.state, Sector::Nuclear, s, &bank).map(|n| format!("{n:.4}")))
                .collect::<nedyn::Result<_>>()?;
            println!(
                "E0(H_{label}) = {:.10}   proton on L/M/R: {}",
                g.energy,
                sites.join(" ")
            );
            energies.push(g.energy);
        }
        println!("barrier E0(M) - E0(L) = {:.6} Ha", energies[1] - energies[0]);

        let schedule = Schedule::pairwise_linear(1.0)?;
        let (mut min_gap, mut at) = (f64::INFINITY, 0.0);
        for k in 0..=100 {
            let s = k as f64 / 100.0;
            let h = mix(&h_l, &h_m, &h_r, &schedule.weights(s)?)?;
            let spectrum = low_spectrum_in(&h, 2, &sector)?;
            let gap = spectrum.gap().unwrap_or(f64::NAN);
            if gap < min_gap {
                (min_gap, at) = (gap, s);
            }
        }
        println!("minimum gap {min_gap:.6} Ha at s = t/t_f = {at:.2}\n");
    }
    Ok(())
}
