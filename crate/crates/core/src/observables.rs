//! Energies, occupations, electron-nuclear entanglement entropy and fidelities.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fermion::{number_operator, taper, total_number, Sector, SectorLayout};
use crate::hamiltonian::ScheduleWeights;
use crate::pauli::{expectation, PauliSum, StateVector};

/// Eigenvalues of a reduced density matrix below this count as zero.
pub const ENTROPY_EIGENVALUE_FLOOR: f64 = 1e-14;

/// Largest tolerated difference between the two subsystem entropies of a pure state.
pub const ENTROPY_SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Slack on the `[0, 1]` range of an occupation.
pub const OCCUPATION_SLACK: f64 = 1e-10;

/// Split of the register into electron and nuclear qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    electron: Vec<usize>,
    nuclear: Vec<usize>,
}

impl Partition {
    /// Qubit sets must be disjoint and together cover `0..n`.
    pub fn new(n: usize, electron: Vec<usize>, nuclear: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &q in electron.iter().chain(&nuclear) {
            if q >= n {
                return Err(Error::Config(format!(
                    "partition qubit {q} outside a {n}-qubit register"
                )));
            }
            if std::mem::replace(&mut seen[q], true) {
                return Err(Error::Config(format!("qubit {q} appears twice in the partition")));
            }
        }
        if let Some(q) = seen.iter().position(|s| !s) {
            return Err(Error::Config(format!("qubit {q} is in neither subsystem")));
        }
        Ok(Partition { n, electron, nuclear })
    }

    pub fn from_layout(layout: &SectorLayout) -> Self {
        let (electron, nuclear) = layout.partition_qubits();
        Partition {
            n: layout.qubits(),
            electron,
            nuclear,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn electron(&self) -> &[usize] {
        &self.electron
    }

    pub fn nuclear(&self) -> &[usize] {
        &self.nuclear
    }
}

/// Gather the bits of `b` at `qubits` into a compact index.
fn gather_bits(b: usize, qubits: &[usize]) -> usize {
    qubits
        .iter()
        .enumerate()
        .fold(0, |acc, (k, &q)| acc | (((b >> q) & 1) << k))
}

fn von_neumann(rho: DMatrix<Complex64>) -> f64 {
    SymmetricEigen::new(rho)
        .eigenvalues
        .iter()
        .filter(|&&l| l > ENTROPY_EIGENVALUE_FLOOR)
        .map(|&l| -l * l.ln())
        .sum()
}

/// Both subsystem entropies `(s_e, s_n)` in nats, each from its own reduced density matrix.
pub fn subsystem_entropies(state: &StateVector, partition: &Partition) -> Result<(f64, f64)> {
    if state.num_qubits() != partition.n {
        return Err(Error::Config(format!(
            "partition covers {} qubits, state has {}",
            partition.n,
            state.num_qubits()
        )));
    }
    let de = 1usize << partition.electron.len();
    let dn = 1usize << partition.nuclear.len();
    let mut m = DMatrix::<Complex64>::zeros(de, dn);
    for (b, a) in state.amplitudes().iter().enumerate() {
        m[(gather_bits(b, &partition.electron), gather_bits(b, &partition.nuclear))] = *a;
    }
    let rho_e = &m * m.adjoint();
    let rho_n = m.transpose() * m.map(|c| c.conj());
    Ok((von_neumann(rho_e), von_neumann(rho_n)))
}

/// Electron-nuclear von Neumann entropy `-Tr ρ_e ln ρ_e` (nats).
///
/// Errors with a numerical violation if the two reduced states disagree.
pub fn entanglement_entropy(state: &StateVector, partition: &Partition) -> Result<f64> {
    let (se, sn) = subsystem_entropies(state, partition)?;
    if (se - sn).abs() > ENTROPY_SYMMETRY_TOLERANCE {
        return Err(Error::numerical("entropy symmetry", format!("s_e = {se}, s_n = {sn}")));
    }
    Ok(se.max(0.0))
}

/// `|<a|b>|^2`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr().min(1.0))
}

/// Mapped (and tapered) number operators of every mode plus sector totals.
#[derive(Debug, Clone)]
pub struct NumberOperatorBank {
    electron: Vec<PauliSum>,
    nuclear: Vec<PauliSum>,
    total_electron: PauliSum,
    total_nuclear: PauliSum,
}

impl NumberOperatorBank {
    pub fn new(layout: &SectorLayout) -> Result<Self> {
        let modes = |sector| {
            (0..layout.modes(sector))
                .map(|j| taper(&number_operator(sector, j, layout)?, layout))
                .collect::<Result<Vec<_>>>()
        };
        Ok(NumberOperatorBank {
            electron: modes(Sector::Electron)?,
            nuclear: modes(Sector::Nuclear)?,
            total_electron: taper(&total_number(Sector::Electron, layout)?, layout)?,
            total_nuclear: taper(&total_number(Sector::Nuclear, layout)?, layout)?,
        })
    }

    pub fn mode(&self, sector: Sector, mode: usize) -> Result<&PauliSum> {
        let ops = match sector {
            Sector::Electron => &self.electron,
            Sector::Nuclear => &self.nuclear,
        };
        ops.get(mode)
            .ok_or_else(|| Error::Index(format!("{sector:?} mode {mode} of {}", ops.len())))
    }

    pub fn total(&self, sector: Sector) -> &PauliSum {
        match sector {
            Sector::Electron => &self.total_electron,
            Sector::Nuclear => &self.total_nuclear,
        }
    }
}

/// `<N_mode>`, checked to lie in `[0, 1]` and clipped onto it.
pub fn occupation(state: &StateVector, sector: Sector, mode: usize, bank: &NumberOperatorBank) -> Result<f64> {
    let value = expectation(bank.mode(sector, mode)?, state)?;
    if !(-OCCUPATION_SLACK..=1.0 + OCCUPATION_SLACK).contains(&value) {
        return Err(Error::numerical(
            "occupation range",
            format!("{sector:?} mode {mode} has occupation {value}"),
        ));
    }
    Ok(value.clamp(0.0, 1.0))
}

/// `(N_electron, N_nuclear)` expectation values.
pub fn total_numbers(state: &StateVector, bank: &NumberOperatorBank) -> Result<(f64, f64)> {
    Ok((
        expectation(&bank.total_electron, state)?,
        expectation(&bank.total_nuclear, state)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorEnergies {
    /// `alpha E_L + beta E_M + gamma E_R`.
    pub total: f64,
    pub left: f64,
    pub middle: f64,
    pub right: f64,
}

pub fn sector_energies(
    state: &StateVector,
    h_l: &PauliSum,
    h_m: &PauliSum,
    h_r: &PauliSum,
    w: &ScheduleWeights,
) -> Result<SectorEnergies> {
    let left = expectation(h_l, state)?;
    let middle = expectation(h_m, state)?;
    let right = expectation(h_r, state)?;
    Ok(SectorEnergies {
        total: w.alpha * left + w.beta * middle + w.gamma * right,
        left,
        middle,
        right,
    })
}
