//! Time evolution under `H(t) = alpha(t) H_L + beta(t) H_M + gamma(t) H_R`.
//!
//! Three propagators share one driver loop:
//!
//! - [`Propagator::Trotter1`]: first-order product formula with coefficients
//!   frozen at the step midpoint, one `exp(-i h_k dt P_k)` per Pauli string in a
//!   fixed lexicographic order;
//! - [`Propagator::Rk4`]: classical Runge-Kutta, renormalized after each step
//!   with the norm drift reported;
//! - [`Propagator::Exact`]: dense exponential of the midpoint Hamiltonian.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fermion::Sector;
use crate::hamiltonian::{mix, Schedule, ScheduleWeights};
use crate::observables::{
    entanglement_entropy, fidelity, occupation, sector_energies, total_numbers, NumberOperatorBank, Partition,
};
use crate::pauli::{accumulate_string, exp_apply_in_place, PauliString, PauliSum, StateVector, DENSE_QUBIT_LIMIT};

/// `|dt * n_steps - t_f|` allowed by a plan.
pub const PLAN_TIME_TOLERANCE: f64 = 1e-9;

/// Largest `|norm - 1|` tolerated at a record for the unitary propagators.
pub const UNITARITY_TOLERANCE: f64 = 1e-9;

/// Largest per-step RK4 norm drift before the run is declared unstable.
pub const RK4_DRIFT_LIMIT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Propagator {
    Trotter1,
    Rk4,
    Exact,
}

impl Propagator {
    pub fn label(self) -> &'static str {
        match self {
            Propagator::Trotter1 => "trotter1",
            Propagator::Rk4 => "rk4",
            Propagator::Exact => "exact",
        }
    }

    fn is_unitary(self) -> bool {
        !matches!(self, Propagator::Rk4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationPlan {
    dt: f64,
    n_steps: usize,
    propagator: Propagator,
    stride: usize,
}

impl PropagationPlan {
    pub fn new(dt: f64, n_steps: usize, propagator: Propagator, stride: usize) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Config(format!("step size {dt} must be positive")));
        }
        if n_steps == 0 || stride == 0 {
            return Err(Error::Config("step count and stride must be at least 1".into()));
        }
        Ok(PropagationPlan {
            dt,
            n_steps,
            propagator,
            stride,
        })
    }

    /// Plan whose step count is `t_f / dt`, which must come out integral.
    pub fn for_schedule(schedule: &Schedule, dt: f64, propagator: Propagator, stride: usize) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Config(format!("step size {dt} must be positive")));
        }
        let n = (schedule.t_final() / dt).round().max(1.0) as usize;
        let plan = PropagationPlan::new(dt, n, propagator, stride)?;
        plan.check(schedule)?;
        Ok(plan)
    }

    pub fn check(&self, schedule: &Schedule) -> Result<()> {
        let covered = self.dt * self.n_steps as f64;
        if (covered - schedule.t_final()).abs() > PLAN_TIME_TOLERANCE {
            return Err(Error::Config(format!(
                "dt * n_steps = {} * {} = {covered} does not reach t_f = {}",
                self.dt,
                self.n_steps,
                schedule.t_final()
            )));
        }
        Ok(())
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn propagator(&self) -> Propagator {
        self.propagator
    }

    pub fn stride(&self) -> usize {
        self.stride
    }
}

/// The three Hamiltonians with their merged, lexicographically ordered string set.
#[derive(Debug, Clone)]
pub struct Drive {
    h: [PauliSum; 3],
    strings: Vec<PauliString>,
    coefficients: Vec<[f64; 3]>,
}

impl Drive {
    pub fn new(h_l: PauliSum, h_m: PauliSum, h_r: PauliSum) -> Result<Self> {
        let n = h_l.num_qubits();
        h_m.require_size(n)?;
        h_r.require_size(n)?;
        let mut merged = std::collections::BTreeMap::<u128, (PauliString, [f64; 3])>::new();
        for (k, h) in [&h_l, &h_m, &h_r].into_iter().enumerate() {
            h.require_hermitian("time evolution")?;
            for t in h.terms() {
                merged.entry(t.string.lex_key()).or_insert((t.string, [0.0; 3])).1[k] = t.coefficient.re;
            }
        }
        let (strings, coefficients) = merged.into_values().unzip();
        Ok(Drive {
            h: [h_l, h_m, h_r],
            strings,
            coefficients,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.h[0].num_qubits()
    }

    pub fn left(&self) -> &PauliSum {
        &self.h[0]
    }

    pub fn middle(&self) -> &PauliSum {
        &self.h[1]
    }

    pub fn right(&self) -> &PauliSum {
        &self.h[2]
    }

    /// Strings in the order the product formula applies them.
    pub fn term_order(&self) -> &[PauliString] {
        &self.strings
    }

    pub fn mixed(&self, w: &ScheduleWeights) -> Result<PauliSum> {
        mix(&self.h[0], &self.h[1], &self.h[2], w)
    }

    fn coefficient(&self, k: usize, w: &ScheduleWeights) -> f64 {
        let [a, b, c] = self.coefficients[k];
        w.alpha * a + w.beta * b + w.gamma * c
    }

    /// `out = -i H(w) psi`.
    fn derivative(&self, w: &ScheduleWeights, psi: &[Complex64], out: &mut [Complex64]) {
        out.iter_mut().for_each(|o| *o = Complex64::default());
        for (k, s) in self.strings.iter().enumerate() {
            let h = self.coefficient(k, w);
            if h != 0.0 {
                accumulate_string(Complex64::new(0.0, -h), s, psi, out);
            }
        }
    }
}

/// One product-formula step with weights `w_mid` (taken at the step midpoint by the caller).
pub fn trotter_step(state: &mut StateVector, drive: &Drive, w_mid: &ScheduleWeights, dt: f64) -> Result<()> {
    state.require_size(drive.num_qubits())?;
    for (k, s) in drive.strings.iter().enumerate() {
        exp_apply_in_place(s, drive.coefficient(k, w_mid) * dt, state)?;
    }
    Ok(())
}

/// One RK4 step from `t` to `t + dt`; returns `|norm - 1|` before renormalization.
pub fn rk4_step(state: &mut StateVector, drive: &Drive, schedule: &Schedule, t: f64, dt: f64) -> Result<f64> {
    state.require_size(drive.num_qubits())?;
    let w0 = schedule.weights(t)?;
    let wh = schedule.weights(t + 0.5 * dt)?;
    let w1 = schedule.weights(t + dt)?;
    let psi = state.amplitudes().to_vec();
    let dim = psi.len();
    let mut k = [
        vec![Complex64::default(); dim],
        vec![Complex64::default(); dim],
        vec![Complex64::default(); dim],
        vec![Complex64::default(); dim],
    ];
    let mut tmp = vec![Complex64::default(); dim];

    drive.derivative(&w0, &psi, &mut k[0]);
    for (i, x) in tmp.iter_mut().enumerate() {
        *x = psi[i] + k[0][i] * (0.5 * dt);
    }
    drive.derivative(&wh, &tmp, &mut k[1]);
    for (i, x) in tmp.iter_mut().enumerate() {
        *x = psi[i] + k[1][i] * (0.5 * dt);
    }
    drive.derivative(&wh, &tmp, &mut k[2]);
    for (i, x) in tmp.iter_mut().enumerate() {
        *x = psi[i] + k[2][i] * dt;
    }
    drive.derivative(&w1, &tmp, &mut k[3]);

    let amps = state.amplitudes_mut();
    for i in 0..dim {
        amps[i] = psi[i] + (k[0][i] + k[1][i] * 2.0 + k[2][i] * 2.0 + k[3][i]) * (dt / 6.0);
    }
    let norm = state.renormalize();
    if !norm.is_finite() {
        return Err(Error::numerical("rk4 norm", "non-finite norm"));
    }
    Ok((norm - 1.0).abs())
}

/// `exp(-i H dt) |state>` through a dense eigendecomposition of `h`.
pub fn exact_step(state: &StateVector, h: &PauliSum, dt: f64) -> Result<StateVector> {
    h.require_hermitian("exact propagation")?;
    state.require_size(h.num_qubits())?;
    let eig = SymmetricEigen::new(h.to_matrix()?);
    Ok(apply_eigen_exponential(&eig, state, dt))
}

fn apply_eigen_exponential(
    eig: &SymmetricEigen<Complex64, nalgebra::Dyn>,
    state: &StateVector,
    dt: f64,
) -> StateVector {
    let psi = DVector::from_column_slice(state.amplitudes());
    let mut c = eig.eigenvectors.adjoint() * psi;
    for (ci, &l) in c.iter_mut().zip(eig.eigenvalues.iter()) {
        *ci *= Complex64::from_polar(1.0, -l * dt);
    }
    let out = &eig.eigenvectors * c;
    StateVector::from_amplitudes(out.as_slice().to_vec()).expect("same dimension")
}

/// `exp(-i H t)` for a time-independent `h` as a dense unitary.
pub fn exact_unitary(h: &PauliSum, t: f64) -> Result<DMatrix<Complex64>> {
    h.require_hermitian("exact propagation")?;
    let eig = SymmetricEigen::new(h.to_matrix()?);
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -l * t)));
    Ok(&eig.eigenvectors * phases * eig.eigenvectors.adjoint())
}

/// Observables recorded along a trajectory.
#[derive(Debug, Clone)]
pub struct Observer {
    pub bank: NumberOperatorBank,
    pub partition: Partition,
    /// Ground states of `H_L`, `H_M`, `H_R`.
    pub references: [StateVector; 3],
    /// Nuclear modes of the L, M and R sites.
    pub sites: [usize; 3],
    /// Electron modes whose occupations are recorded.
    pub tracked: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesRecord {
    pub t: f64,
    pub energy: f64,
    pub e_l: f64,
    pub e_m: f64,
    pub e_r: f64,
    pub n_l: f64,
    pub n_m: f64,
    pub n_r: f64,
    pub electron_occupations: Vec<f64>,
    pub entropy: f64,
    pub f_l: f64,
    pub f_m: f64,
    pub f_r: f64,
    pub norm: f64,
    pub n_electron: f64,
    pub n_proton: f64,
}

impl Observer {
    pub fn measure(
        &self,
        t: f64,
        state: &StateVector,
        drive: &Drive,
        w: &ScheduleWeights,
        norm: f64,
    ) -> Result<TimeSeriesRecord> {
        let e = sector_energies(state, drive.left(), drive.middle(), drive.right(), w)?;
        let site = |k: usize| occupation(state, Sector::Nuclear, self.sites[k], &self.bank);
        let electron_occupations = self
            .tracked
            .iter()
            .map(|&m| occupation(state, Sector::Electron, m, &self.bank))
            .collect::<Result<Vec<_>>>()?;
        let (n_electron, n_proton) = total_numbers(state, &self.bank)?;
        Ok(TimeSeriesRecord {
            t,
            energy: e.total,
            e_l: e.left,
            e_m: e.middle,
            e_r: e.right,
            n_l: site(0)?,
            n_m: site(1)?,
            n_r: site(2)?,
            electron_occupations,
            entropy: entanglement_entropy(state, &self.partition)?,
            f_l: fidelity(state, &self.references[0])?,
            f_m: fidelity(state, &self.references[1])?,
            f_r: fidelity(state, &self.references[2])?,
            norm,
            n_electron,
            n_proton,
        })
    }
}

/// Outcome of a propagation.
#[derive(Debug, Clone)]
pub struct Evolution {
    pub final_state: StateVector,
    /// Largest per-step `|norm - 1|` (RK4 before renormalization; otherwise the running norm).
    pub max_norm_drift: f64,
}

/// Drive `initial` through the schedule, calling `on_record(step, t, state, norm)` at
/// step 0, every `stride` steps and at the final step.
pub fn propagate_with(
    initial: &StateVector,
    drive: &Drive,
    schedule: &Schedule,
    plan: &PropagationPlan,
    mut on_record: impl FnMut(usize, f64, &StateVector, f64) -> Result<()>,
) -> Result<Evolution> {
    plan.check(schedule)?;
    initial.require_size(drive.num_qubits())?;
    let dt = plan.dt;
    let n = plan.n_steps;
    let mut state = initial.clone();
    let mut norm = state.norm();
    let mut max_drift = (norm - 1.0).abs();
    on_record(0, 0.0, &state, norm)?;

    let mut exact_cache: Option<(ScheduleWeights, SymmetricEigen<Complex64, nalgebra::Dyn>)> = None;
    if plan.propagator == Propagator::Exact && drive.num_qubits() > DENSE_QUBIT_LIMIT {
        return Err(Error::Resource(format!(
            "exact propagation needs a dense {}-qubit matrix (limit {DENSE_QUBIT_LIMIT})",
            drive.num_qubits()
        )));
    }

    for j in 0..n {
        let t = j as f64 * dt;
        match plan.propagator {
            Propagator::Trotter1 => {
                let w = schedule.weights(t + 0.5 * dt)?;
                trotter_step(&mut state, drive, &w, dt)?;
                norm = state.norm();
                max_drift = max_drift.max((norm - 1.0).abs());
            }
            Propagator::Rk4 => {
                let drift = rk4_step(&mut state, drive, schedule, t, dt)?;
                if drift > RK4_DRIFT_LIMIT {
                    return Err(Error::numerical(
                        "rk4 norm drift",
                        format!("step {j} drifted by {drift:e}; reduce dt"),
                    ));
                }
                max_drift = max_drift.max(drift);
                norm = 1.0 + drift;
            }
            Propagator::Exact => {
                let w = schedule.weights(t + 0.5 * dt)?;
                if exact_cache.as_ref().is_none_or(|(cw, _)| *cw != w) {
                    let m = drive.mixed(&w)?.to_matrix()?;
                    exact_cache = Some((w, SymmetricEigen::new(m)));
                }
                let (_, eig) = exact_cache.as_ref().expect("filled above");
                state = apply_eigen_exponential(eig, &state, dt);
                norm = state.norm();
                max_drift = max_drift.max((norm - 1.0).abs());
            }
        }
        if !norm.is_finite() {
            return Err(Error::numerical("norm", format!("non-finite norm at step {}", j + 1)));
        }
        if plan.propagator.is_unitary() && (norm - 1.0).abs() > UNITARITY_TOLERANCE {
            return Err(Error::numerical(
                "unitarity",
                format!("|norm - 1| = {:e} at step {}", (norm - 1.0).abs(), j + 1),
            ));
        }
        let step = j + 1;
        if step == n {
            on_record(step, schedule.t_final(), &state, norm)?;
        } else if step % plan.stride == 0 {
            on_record(step, step as f64 * dt, &state, norm)?;
        }
    }
    Ok(Evolution {
        final_state: state,
        max_norm_drift: max_drift,
    })
}

/// Propagate without observation.
pub fn propagate(
    initial: &StateVector,
    drive: &Drive,
    schedule: &Schedule,
    plan: &PropagationPlan,
) -> Result<Evolution> {
    propagate_with(initial, drive, schedule, plan, |_, _, _, _| Ok(()))
}

/// Propagate and hand every record to `sink` as soon as it is measured.
pub fn evolve_into(
    initial: &StateVector,
    drive: &Drive,
    schedule: &Schedule,
    plan: &PropagationPlan,
    observer: &Observer,
    mut sink: impl FnMut(&TimeSeriesRecord) -> Result<()>,
) -> Result<Evolution> {
    propagate_with(initial, drive, schedule, plan, |_, t, state, norm| {
        let w = schedule.weights(t)?;
        let record = observer.measure(t, state, drive, &w, norm)?;
        sink(&record)
    })
}

/// Propagate and collect all records.
pub fn evolve(
    initial: &StateVector,
    drive: &Drive,
    schedule: &Schedule,
    plan: &PropagationPlan,
    observer: &Observer,
) -> Result<(Vec<TimeSeriesRecord>, Evolution)> {
    let mut records = Vec::new();
    let evolution = evolve_into(initial, drive, schedule, plan, observer, |r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok((records, evolution))
}
