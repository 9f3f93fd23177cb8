//! Statevector simulation of coupled electron-nuclear quantum dynamics.
//!
//! The crate compiles second-quantized two-component (electron + quantum
//! nucleus) Hamiltonians into weighted Pauli sums, prepares ground states by
//! exact diagonalization, and propagates them under a time-dependent mixture
//! `H(t) = α(t) H_L + β(t) H_M + γ(t) H_R` with a first-order product formula,
//! a fourth-order Runge-Kutta reference or piecewise exact exponentials.
//! Along the way it records energies, occupations, electron-nuclear
//! entanglement entropy and fidelities.
//!
//! Module map:
//!
//! - [`pauli`]: Pauli strings, sums, statevector kernels and the text format.
//! - [`fermion`]: Jordan-Wigner and parity mappings for two particle types, plus tapering.
//! - [`hamiltonian`]: integrals, the integral file format, schedules and the synthetic L/M/R model.
//! - [`spectral`]: dense and Lanczos eigensolvers.
//! - [`observables`]: occupations, entropy, fidelities, sector energies.
//! - [`propagate`]: product-formula, RK4 and exact propagators and the driver loop.
//! - [`runner`]: configuration files and the `run` / `ground` / `sweep-dt` / `map` commands.

pub mod error;
pub mod fermion;
pub mod hamiltonian;
pub mod observables;
pub mod pauli;
pub mod propagate;
pub mod runner;
pub mod spectral;

pub use error::{Error, Result};
pub use pauli::{PauliString, PauliSum, PauliTerm, StateVector};
