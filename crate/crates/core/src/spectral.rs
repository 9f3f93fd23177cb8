//! Exact low-lying eigenpairs of Hermitian Pauli sums.
//!
//! Registers up to [`DENSE_QUBIT_LIMIT`] qubits are diagonalized densely; larger
//! ones go through a Lanczos iteration with full reorthogonalization and
//! explicit deflation (one converged vector at a time), which also resolves
//! degenerate levels.
//!
//! A [`Subspace`] restricts the problem to computational basis states, which is
//! how fixed particle-number sectors are selected: in every supported mapping
//! the number operators are diagonal in the computational basis.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pauli::{apply_sum, PauliSum, StateVector, DENSE_QUBIT_LIMIT};

/// Gap below which the ground level is reported as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;

/// Largest allowed residual `||Hv - λv||` of a returned eigenpair.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// A set of computational basis states (ascending indices) spanning the search space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    indices: Vec<usize>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            indices: (0..1usize << n).collect(),
        }
    }

    pub fn from_indices(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::Argument("empty subspace".into()));
        }
        if indices.last().is_some_and(|&i| i >> n != 0) {
            return Err(Error::Index(format!("basis index beyond a {n}-qubit register")));
        }
        Ok(Subspace { n, indices })
    }

    /// Basis states on which each diagonal operator takes its target value (to 1e-8).
    ///
    /// Operators must contain only `I`/`Z` letters.
    pub fn from_constraints(n: usize, constraints: &[(&PauliSum, f64)]) -> Result<Self> {
        for (op, _) in constraints {
            op.require_size(n)?;
            if let Some(t) = op.terms().iter().find(|t| t.string.x_mask() != 0) {
                return Err(Error::Argument(format!(
                    "constraint operator is not diagonal (term {})",
                    t.string
                )));
            }
        }
        let indices = (0..1usize << n)
            .filter(|&b| {
                constraints.iter().all(|(op, target)| {
                    let value: f64 = op
                        .terms()
                        .iter()
                        .map(|t| {
                            let s = if (b & t.string.z_mask() as usize).count_ones() % 2 == 1 {
                                -1.0
                            } else {
                                1.0
                            };
                            s * t.coefficient.re
                        })
                        .sum();
                    (value - target).abs() < 1e-8
                })
            })
            .collect::<Vec<_>>();
        if indices.is_empty() {
            return Err(Error::Argument("no basis state satisfies the constraints".into()));
        }
        Ok(Subspace { n, indices })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    fn is_full(&self) -> bool {
        self.indices.len() == 1usize << self.n
    }

    /// Scatter subspace coefficients into a full register vector.
    pub fn embed(&self, coefficients: impl Iterator<Item = Complex64>) -> StateVector {
        let mut amps = vec![Complex64::default(); 1usize << self.n];
        for (&i, c) in self.indices.iter().zip(coefficients) {
            amps[i] = c;
        }
        StateVector::from_amplitudes(amps).expect("power-of-two length")
    }

    fn project(&self, state: &mut StateVector) {
        if self.is_full() {
            return;
        }
        let mut keep = vec![false; state.dim()];
        for &i in &self.indices {
            keep[i] = true;
        }
        for (a, k) in state.amplitudes_mut().iter_mut().zip(keep) {
            if !k {
                *a = Complex64::default();
            }
        }
    }
}

/// Ascending eigenvalues with their eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<StateVector>,
}

impl EigenResult {
    pub fn gap(&self) -> Option<f64> {
        (self.eigenvalues.len() >= 2).then(|| self.eigenvalues[1] - self.eigenvalues[0])
    }
}

#[derive(Debug, Clone)]
pub struct GroundState {
    pub energy: f64,
    pub state: StateVector,
    /// The next level lies within [`DEGENERACY_GAP`]; `state` is one arbitrary member.
    pub degenerate: bool,
}

/// Rotate the global phase so the largest-magnitude amplitude is real and positive.
pub fn fix_phase(state: &mut StateVector) {
    let mut best = 0usize;
    let mut best_mag = -1.0;
    for (i, a) in state.amplitudes().iter().enumerate() {
        let mag = a.norm_sqr();
        if mag > best_mag * (1.0 + 1e-12) {
            best = i;
            best_mag = mag;
        }
    }
    let a = state.amplitudes()[best];
    if a.norm() == 0.0 {
        return;
    }
    let phase = a.conj() / a.norm();
    for x in state.amplitudes_mut() {
        *x *= phase;
    }
}

/// Dense matrix of `h` restricted to the subspace basis.
pub fn restricted_matrix(h: &PauliSum, subspace: &Subspace) -> Result<DMatrix<Complex64>> {
    h.require_size(subspace.n)?;
    let full = 1usize << subspace.n;
    let mut position = vec![usize::MAX; full];
    for (p, &i) in subspace.indices.iter().enumerate() {
        position[i] = p;
    }
    let d = subspace.dim();
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for t in h.terms() {
        let x = t.string.x_mask() as usize;
        let z = t.string.z_mask() as usize;
        let base = t.coefficient * crate::pauli::i_pow(t.string.y_count());
        for (col, &b) in subspace.indices.iter().enumerate() {
            let row = position[b ^ x];
            if row != usize::MAX {
                let sign = if (b & z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                m[(row, col)] += base * sign;
            }
        }
    }
    Ok(m)
}

fn dense_low_spectrum(h: &PauliSum, k: usize, subspace: &Subspace) -> Result<EigenResult> {
    let m = restricted_matrix(h, subspace)?;
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut eigenvalues = Vec::with_capacity(k);
    let mut eigenvectors = Vec::with_capacity(k);
    for &i in order.iter().take(k) {
        eigenvalues.push(eig.eigenvalues[i]);
        let mut v = subspace.embed(eig.eigenvectors.column(i).iter().copied());
        fix_phase(&mut v);
        eigenvectors.push(v);
    }
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
    })
}

/// Options for the Lanczos path.
#[derive(Debug, Clone, Copy)]
pub struct LanczosOptions {
    pub max_iterations: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for LanczosOptions {
    fn default() -> Self {
        LanczosOptions {
            max_iterations: 400,
            tolerance: 1e-11,
            seed: 0x5eed,
        }
    }
}

fn axpy(y: &mut StateVector, a: Complex64, x: &StateVector) {
    for (yi, xi) in y.amplitudes_mut().iter_mut().zip(x.amplitudes()) {
        *yi += a * xi;
    }
}

fn orthogonalize(v: &mut StateVector, against: &[StateVector]) {
    // Two passes of classical Gram-Schmidt.
    for _ in 0..2 {
        for u in against {
            let c = u.inner(v).expect("equal sizes");
            axpy(v, -c, u);
        }
    }
}

/// Lowest eigenpair orthogonal to `locked`.
fn lanczos_lowest(
    h: &PauliSum,
    subspace: &Subspace,
    locked: &[StateVector],
    opts: &LanczosOptions,
    round: u64,
) -> Result<(f64, StateVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(round);
    let mut v = subspace.embed(
        subspace
            .indices
            .iter()
            .map(|_| Complex64::new(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5))),
    );
    orthogonalize(&mut v, locked);
    let norm = v.renormalize();
    if norm < 1e-12 {
        return Err(Error::Argument("Lanczos start vector vanished after deflation".into()));
    }

    let available = subspace.dim() - locked.len();
    let max_iter = opts.max_iterations.min(available).max(1);
    let mut basis: Vec<StateVector> = vec![v];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();

    loop {
        let j = basis.len() - 1;
        let mut w = apply_sum(h, &basis[j])?;
        subspace.project(&mut w);
        let alpha = basis[j].inner(&w)?.re;
        alphas.push(alpha);
        orthogonalize(&mut w, locked);
        orthogonalize(&mut w, &basis);
        let beta = w.norm();

        let m = alphas.len();
        let mut t = DMatrix::<f64>::zeros(m, m);
        for i in 0..m {
            t[(i, i)] = alphas[i];
            if i + 1 < m {
                t[(i, i + 1)] = betas[i];
                t[(i + 1, i)] = betas[i];
            }
        }
        let eig = SymmetricEigen::new(t);
        let lowest = (0..m)
            .min_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
            .expect("non-empty");
        let theta = eig.eigenvalues[lowest];
        let residual = (beta * eig.eigenvectors[(m - 1, lowest)]).abs();
        let converged = residual < opts.tolerance * theta.abs().max(1.0) || beta < 1e-13;

        if converged || m >= max_iter {
            let mut ritz = subspace.embed(std::iter::empty());
            for (i, b) in basis.iter().enumerate() {
                axpy(&mut ritz, Complex64::new(eig.eigenvectors[(i, lowest)], 0.0), b);
            }
            ritz.renormalize();
            return Ok((theta, ritz));
        }
        w.scale(1.0 / beta);
        betas.push(beta);
        basis.push(w);
    }
}

/// `k` lowest eigenpairs by Lanczos with deflation.
pub fn lanczos_low_spectrum(h: &PauliSum, k: usize, subspace: &Subspace, opts: &LanczosOptions) -> Result<EigenResult> {
    h.require_hermitian("Lanczos")?;
    h.require_size(subspace.n)?;
    if k == 0 || k > subspace.dim() {
        return Err(Error::Argument(format!(
            "requested {k} eigenpairs from a {}-dimensional space",
            subspace.dim()
        )));
    }
    let mut pairs: Vec<(f64, StateVector)> = Vec::with_capacity(k);
    let mut locked: Vec<StateVector> = Vec::with_capacity(k);
    for round in 0..k {
        let (value, mut vector) = lanczos_lowest(h, subspace, &locked, opts, round as u64)?;
        fix_phase(&mut vector);
        locked.push(vector.clone());
        pairs.push((value, vector));
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    let result = EigenResult {
        eigenvalues,
        eigenvectors,
    };
    check_residuals(h, &result)?;
    Ok(result)
}

fn check_residuals(h: &PauliSum, result: &EigenResult) -> Result<()> {
    for (value, vector) in result.eigenvalues.iter().zip(&result.eigenvectors) {
        let mut r = apply_sum(h, vector)?;
        axpy(&mut r, Complex64::new(-value, 0.0), vector);
        let res = r.norm();
        if res > RESIDUAL_TOLERANCE * value.abs().max(1.0) {
            return Err(Error::numerical(
                "eigenpair residual",
                format!("||Hv - λv|| = {res:e} for λ = {value}"),
            ));
        }
    }
    Ok(())
}

/// `k` lowest eigenpairs inside `subspace`.
pub fn low_spectrum_in(h: &PauliSum, k: usize, subspace: &Subspace) -> Result<EigenResult> {
    h.require_hermitian("eigensolver")?;
    h.require_size(subspace.n)?;
    if k == 0 || k > subspace.dim() {
        return Err(Error::Argument(format!(
            "requested {k} eigenpairs from a {}-dimensional space",
            subspace.dim()
        )));
    }
    let dense_ok = subspace.n <= DENSE_QUBIT_LIMIT || subspace.dim() <= 1 << DENSE_QUBIT_LIMIT;
    if dense_ok {
        let result = dense_low_spectrum(h, k, subspace)?;
        check_residuals(h, &result)?;
        Ok(result)
    } else {
        lanczos_low_spectrum(h, k, subspace, &LanczosOptions::default())
    }
}

/// `k` lowest eigenpairs over the whole register.
pub fn low_spectrum(h: &PauliSum, k: usize) -> Result<EigenResult> {
    low_spectrum_in(h, k, &Subspace::full(h.num_qubits()))
}

pub fn ground_state_in(h: &PauliSum, subspace: &Subspace) -> Result<GroundState> {
    let k = subspace.dim().min(2);
    let spec = low_spectrum_in(h, k, subspace)?;
    let degenerate = spec.gap().is_some_and(|g| g < DEGENERACY_GAP);
    Ok(GroundState {
        energy: spec.eigenvalues[0],
        state: spec.eigenvectors.into_iter().next().expect("k >= 1"),
        degenerate,
    })
}

/// Lowest eigenpair over the whole register, largest amplitude made real-positive.
pub fn ground_state(h: &PauliSum) -> Result<GroundState> {
    ground_state_in(h, &Subspace::full(h.num_qubits()))
}
