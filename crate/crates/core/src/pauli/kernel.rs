use num_complex::Complex64;
use rayon::prelude::*;

use super::{i_pow, PauliString, PauliSum, PauliTerm};
use crate::error::{Error, Result};

/// Registers at or above this size run the amplitude loops on the rayon pool.
const PARALLEL_MIN_QUBITS: usize = 14;

/// Imaginary residue allowed on an expectation value of a Hermitian sum.
const EXPECTATION_IMAG_TOLERANCE: f64 = 1e-10;

/// Amplitudes of an `n`-qubit pure state, qubit 0 in the least-significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The computational basis state `|index>`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if n >= usize::BITS as usize - 1 {
            return Err(Error::Resource(format!("{n}-qubit statevector")));
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::Index(format!("basis index {index} on {n} qubits")));
        }
        let mut amps = vec![Complex64::default(); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    pub fn zero_state(n: usize) -> Result<Self> {
        StateVector::basis(n, 0)
    }

    /// Wrap raw amplitudes; the length must be a power of two. No normalization is applied.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::Argument(format!(
                "statevector length {dim} is not a power of two"
            )));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Argument("non-finite amplitude".into()));
        }
        Ok(StateVector {
            n: dim.trailing_zeros() as usize,
            amps,
        })
    }

    /// Like [`StateVector::from_amplitudes`] but rescaled to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        let mut s = StateVector::from_amplitudes(amps)?;
        let norm = s.norm();
        if norm == 0.0 {
            return Err(Error::Argument("cannot normalize the zero vector".into()));
        }
        s.scale(1.0 / norm);
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&mut self, factor: f64) {
        for a in &mut self.amps {
            *a *= factor;
        }
    }

    /// Rescale to unit norm and return the norm before rescaling.
    pub fn renormalize(&mut self) -> f64 {
        let norm = self.norm();
        if norm > 0.0 {
            self.scale(1.0 / norm);
        }
        norm
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.require_size(other.n)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// Euclidean distance `||self - other||`.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        self.require_size(other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    pub(crate) fn require_size(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.n,
                found: n,
            })
        }
    }

    /// Tensor product `self ⊗ low`: `low` occupies the least-significant qubits.
    pub fn tensor(&self, low: &StateVector) -> StateVector {
        let mut amps = Vec::with_capacity(self.dim() * low.dim());
        for hi in &self.amps {
            for lo in &low.amps {
                amps.push(hi * lo);
            }
        }
        StateVector {
            n: self.n + low.n,
            amps,
        }
    }
}

/// Sign `(-1)^{|src & z|}` folded into a complex weight.
#[inline(always)]
fn signed(weight: Complex64, src: usize, z: usize) -> Complex64 {
    if (src & z).count_ones() & 1 == 1 {
        -weight
    } else {
        weight
    }
}

/// `out[b] += weight * i^{ny} (-1)^{|(b^x) & z|} * input[b ^ x]`, i.e. `out += weight * P input`.
pub(crate) fn accumulate_string(weight: Complex64, string: &PauliString, input: &[Complex64], out: &mut [Complex64]) {
    let x = string.x_mask() as usize;
    let z = string.z_mask() as usize;
    let base = weight * i_pow(string.y_count());
    let kernel = |(b, o): (usize, &mut Complex64)| {
        let src = b ^ x;
        *o += signed(base, src, z) * input[src];
    };
    if input.len() >= 1 << PARALLEL_MIN_QUBITS {
        out.par_iter_mut().enumerate().for_each(kernel);
    } else {
        out.iter_mut().enumerate().for_each(kernel);
    }
}

/// `coefficient * P |state>` for a single weighted string.
pub fn apply_term(term: &PauliTerm, state: &StateVector) -> Result<StateVector> {
    state.require_size(term.num_qubits())?;
    let mut out = vec![Complex64::default(); state.dim()];
    accumulate_string(term.coefficient, &term.string, &state.amps, &mut out);
    Ok(StateVector { n: state.n, amps: out })
}

/// `H |state>`; the result is generally not normalized.
pub fn apply_sum(sum: &PauliSum, state: &StateVector) -> Result<StateVector> {
    state.require_size(sum.num_qubits())?;
    let mut out = vec![Complex64::default(); state.dim()];
    for t in sum.terms() {
        accumulate_string(t.coefficient, &t.string, &state.amps, &mut out);
    }
    Ok(StateVector { n: state.n, amps: out })
}

/// In-place `exp(-i theta P) |state> = cos(theta)|state> - i sin(theta) P|state>`.
pub fn exp_apply_in_place(string: &PauliString, theta: f64, state: &mut StateVector) -> Result<()> {
    if !theta.is_finite() {
        return Err(Error::Argument(format!("non-finite rotation angle {theta}")));
    }
    state.require_size(string.num_qubits())?;
    if theta == 0.0 {
        return Ok(());
    }
    let (s, c) = theta.sin_cos();
    let x = string.x_mask() as usize;
    let z = string.z_mask() as usize;
    // -i sin(theta) i^{ny}
    let off = Complex64::new(0.0, -s) * i_pow(string.y_count());
    let amps = &mut state.amps;

    if x == 0 {
        // Diagonal: every amplitude picks up cos(theta) -/+ i sin(theta).
        let plus = Complex64::new(c, 0.0) + off;
        let minus = Complex64::new(c, 0.0) - off;
        let kernel = |(b, a): (usize, &mut Complex64)| {
            *a *= if (b & z).count_ones() & 1 == 1 { minus } else { plus };
        };
        if amps.len() >= 1 << PARALLEL_MIN_QUBITS {
            amps.par_iter_mut().enumerate().for_each(kernel);
        } else {
            amps.iter_mut().enumerate().for_each(kernel);
        }
        return Ok(());
    }

    if amps.len() >= 1 << PARALLEL_MIN_QUBITS {
        let input = amps.clone();
        amps.par_iter_mut().enumerate().for_each(|(b, a)| {
            let src = b ^ x;
            *a = input[b] * c + signed(off, src, z) * input[src];
        });
    } else {
        let high = 1usize << (usize::BITS - 1 - x.leading_zeros());
        for b in 0..amps.len() {
            if b & high != 0 {
                continue;
            }
            let p = b ^ x;
            let (lo, hi) = (amps[b], amps[p]);
            amps[b] = lo * c + signed(off, p, z) * hi;
            amps[p] = hi * c + signed(off, b, z) * lo;
        }
    }
    Ok(())
}

/// `exp(-i theta P) |state>` returning a new state.
pub fn exp_apply(string: &PauliString, theta: f64, state: &StateVector) -> Result<StateVector> {
    let mut out = state.clone();
    exp_apply_in_place(string, theta, &mut out)?;
    Ok(out)
}

/// `<state| H |state>` for a Hermitian sum.
pub fn expectation(sum: &PauliSum, state: &StateVector) -> Result<f64> {
    sum.require_hermitian("expectation")?;
    state.require_size(sum.num_qubits())?;
    let value = raw_expectation(sum, state);
    let scale = 1.0 + sum.max_abs_coefficient() * sum.len() as f64;
    if value.im.abs() > EXPECTATION_IMAG_TOLERANCE * scale {
        return Err(Error::numerical(
            "real expectation",
            format!("imaginary residue {:e}", value.im),
        ));
    }
    Ok(value.re)
}

/// `sum_k h_k <psi|P_k|psi>` without any Hermiticity checks.
pub(crate) fn raw_expectation(sum: &PauliSum, state: &StateVector) -> Complex64 {
    let amps = &state.amps;
    let mut total = Complex64::default();
    for t in sum.terms() {
        let x = t.string.x_mask() as usize;
        let z = t.string.z_mask() as usize;
        let mut acc = Complex64::default();
        for (b, a) in amps.iter().enumerate() {
            let src = b ^ x;
            let v = amps[src];
            let prod = a.conj() * v;
            if (src & z).count_ones() & 1 == 1 {
                acc -= prod;
            } else {
                acc += prod;
            }
        }
        total += t.coefficient * i_pow(t.string.y_count()) * acc;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_term(s: &str, re: f64) -> PauliTerm {
        PauliTerm::real(re, s.parse().unwrap()).unwrap()
    }

    #[test]
    fn x_flips_zero_to_one() {
        let out = apply_term(&pauli_term("X", 1.0), &StateVector::basis(1, 0).unwrap()).unwrap();
        assert_eq!(out, StateVector::basis(1, 1).unwrap());
    }

    #[test]
    fn z_negates_one() {
        let out = apply_term(&pauli_term("Z", 1.0), &StateVector::basis(1, 1).unwrap()).unwrap();
        assert_eq!(out.amplitudes(), &[c(0.0, 0.0), c(-1.0, 0.0)]);
    }

    #[test]
    fn zero_angle_is_identity() {
        let psi = StateVector::normalized(vec![c(0.3, 0.1), c(-0.2, 0.5), c(0.1, 0.0), c(0.7, -0.2)]).unwrap();
        let out = exp_apply(&"XY".parse().unwrap(), 0.0, &psi).unwrap();
        assert_eq!(out, psi);
    }

    #[test]
    fn z_half_turn_on_zero() {
        let out = exp_apply(&"Z".parse().unwrap(), FRAC_PI_2, &StateVector::basis(1, 0).unwrap()).unwrap();
        assert!((out.amplitudes()[0] - c(0.0, -1.0)).norm() < 1e-15);
        assert!(out.amplitudes()[1].norm() < 1e-15);
    }

    #[test]
    fn non_finite_angle_rejected() {
        let mut psi = StateVector::basis(1, 0).unwrap();
        let p = "X".parse().unwrap();
        assert!(matches!(
            exp_apply_in_place(&p, f64::NAN, &mut psi),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn register_mismatch() {
        let psi = StateVector::basis(2, 0).unwrap();
        assert!(matches!(
            apply_term(&pauli_term("X", 1.0), &psi),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn eigenstate_expectations() {
        let z = PauliSum::from_term(pauli_term("Z", 1.0));
        let x = PauliSum::from_term(pauli_term("X", 1.0));
        assert_eq!(expectation(&z, &StateVector::basis(1, 0).unwrap()).unwrap(), 1.0);
        let plus = StateVector::from_amplitudes(vec![c(FRAC_1_SQRT_2, 0.0); 2]).unwrap();
        assert!((expectation(&x, &plus).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn expectation_requires_hermitian() {
        let s = PauliSum::from_term(PauliTerm::new(c(0.0, 1.0), "X".parse().unwrap()).unwrap());
        assert!(matches!(
            expectation(&s, &StateVector::basis(1, 0).unwrap()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn tensor_places_low_factor_in_low_bits() {
        let hi = StateVector::basis(1, 1).unwrap();
        let lo = StateVector::basis(2, 2).unwrap();
        assert_eq!(hi.tensor(&lo), StateVector::basis(3, 0b110).unwrap());
    }
}
