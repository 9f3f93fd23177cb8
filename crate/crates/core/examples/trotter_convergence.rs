//! Endpoint error of the product formula and RK4 against the exact exponential
//! for a time-independent random Hamiltonian.
//!
//! ```bash
//! cargo run --release --example trotter_convergence
//! ```

use nedyn::hamiltonian::Schedule;
use nedyn::propagate::{exact_step, propagate, Drive, PropagationPlan, Propagator};
use nedyn::runner::random_hamiltonians;
use nedyn::StateVector;

fn main() -> nedyn::Result<()> {
    let [h, _, _] = random_hamiltonians(4, 10, 1.0, 11)?;
    // The same sum in all three slots makes the drive time independent.
    let drive = Drive::new(h.clone(), h.clone(), h.clone())?;
    let t_final = 10.0;
    let schedule = Schedule::pairwise_linear(t_final)?;
    let initial = StateVector::basis(4, 0b0101)?;
    let exact = exact_step(&initial, &h, t_final)?;

    for propagator in [Propagator::Trotter1, Propagator::Rk4] {
        println!("{}", propagator.label());
        let mut previous: Option<f64> = None;
        for dt in [0.1, 0.05, 0.025] {
            let plan = PropagationPlan::for_schedule(&schedule, dt, propagator, usize::MAX)?;
            let error = propagate(&initial, &drive, &schedule, &plan)?
                .final_state
                .distance(&exact)?;
            match previous {
                Some(p) => println!("  dt {dt:<6} error {error:.3e}  ratio {:.2}", p / error),
                None => println!("  dt {dt:<6} error {error:.3e}"),
            }
            previous = Some(error);
        }
    }
    Ok(())
}
