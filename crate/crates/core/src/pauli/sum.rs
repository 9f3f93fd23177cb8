use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{i_pow, PauliString};
use crate::error::{Error, Result};

/// Terms whose coefficient magnitude falls below this are dropped on canonicalization.
pub const PRUNE_THRESHOLD: f64 = 1e-12;

/// Largest register for which dense matrices are built (4096 x 4096, 256 MiB).
pub const DENSE_QUBIT_LIMIT: usize = 12;

/// Imaginary residue tolerated when converting a sum into a Hermitian one.
const HERMITIAN_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliTerm {
    pub coefficient: Complex64,
    pub string: PauliString,
}

impl PauliTerm {
    pub fn new(coefficient: Complex64, string: PauliString) -> Result<Self> {
        if !coefficient.re.is_finite() || !coefficient.im.is_finite() {
            return Err(Error::Argument(format!(
                "non-finite coefficient {coefficient} on {string}"
            )));
        }
        Ok(PauliTerm { coefficient, string })
    }

    pub fn real(coefficient: f64, string: PauliString) -> Result<Self> {
        PauliTerm::new(Complex64::new(coefficient, 0.0), string)
    }

    pub fn num_qubits(&self) -> usize {
        self.string.num_qubits()
    }
}

/// A canonical weighted sum of Pauli strings over a common register.
///
/// Terms are kept sorted by the lexicographic order of their text form, no two
/// terms share a string, and no coefficient is smaller than [`PRUNE_THRESHOLD`].
/// The sum is flagged Hermitian exactly when every coefficient is real.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: Vec<PauliTerm>,
    hermitian: bool,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        PauliSum {
            n,
            terms: Vec::new(),
            hermitian: true,
        }
    }

    pub fn identity(n: usize) -> Self {
        PauliSum::from_terms(
            n,
            [PauliTerm {
                coefficient: Complex64::new(1.0, 0.0),
                string: PauliString::identity(n),
            }],
        )
        .expect("identity term is valid")
    }

    pub fn from_term(term: PauliTerm) -> Self {
        PauliSum::from_terms(term.num_qubits(), [term]).expect("single term matches its register")
    }

    /// Sum the given terms, merging duplicates and pruning negligible weights.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = PauliTerm>) -> Result<Self> {
        let mut acc: BTreeMap<u128, PauliTerm> = BTreeMap::new();
        for term in terms {
            if term.num_qubits() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: term.num_qubits(),
                });
            }
            if !term.coefficient.re.is_finite() || !term.coefficient.im.is_finite() {
                return Err(Error::Argument(format!("non-finite coefficient on {}", term.string)));
            }
            acc.entry(term.string.lex_key())
                .and_modify(|t| t.coefficient += term.coefficient)
                .or_insert(term);
        }
        Ok(PauliSum::from_sorted(n, acc.into_values()))
    }

    fn from_sorted(n: usize, terms: impl IntoIterator<Item = PauliTerm>) -> Self {
        let terms: Vec<PauliTerm> = terms
            .into_iter()
            .filter(|t| t.coefficient.norm() >= PRUNE_THRESHOLD)
            .collect();
        let hermitian = terms.iter().all(|t| t.coefficient.im == 0.0);
        PauliSum { n, terms, hermitian }
    }

    /// Re-run canonicalization; a no-op on any sum built through this API.
    pub fn canonicalize(&self) -> PauliSum {
        PauliSum::from_terms(self.n, self.terms.iter().copied()).expect("terms already validated")
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    /// Coefficient of `string`, zero when absent.
    pub fn coefficient(&self, string: &PauliString) -> Complex64 {
        let key = string.lex_key();
        self.terms
            .binary_search_by_key(&key, |t| t.string.lex_key())
            .map(|i| self.terms[i].coefficient)
            .unwrap_or_default()
    }

    /// Drop imaginary residues up to a small tolerance and flag the sum Hermitian.
    pub fn into_hermitian(self) -> Result<PauliSum> {
        if let Some(bad) = self.terms.iter().find(|t| t.coefficient.im.abs() > HERMITIAN_TOLERANCE) {
            return Err(Error::Contract(format!(
                "term {} has imaginary weight {:e}; the sum is not Hermitian",
                bad.string, bad.coefficient.im
            )));
        }
        let n = self.n;
        Ok(PauliSum::from_sorted(
            n,
            self.terms.into_iter().map(|t| PauliTerm {
                coefficient: Complex64::new(t.coefficient.re, 0.0),
                string: t.string,
            }),
        ))
    }

    pub(crate) fn require_hermitian(&self, what: &str) -> Result<()> {
        if self.hermitian {
            Ok(())
        } else {
            Err(Error::Contract(format!("{what} requires a Hermitian sum")))
        }
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

    pub fn scale(&self, factor: Complex64) -> PauliSum {
        PauliSum::from_sorted(
            self.n,
            self.terms.iter().map(|t| PauliTerm {
                coefficient: t.coefficient * factor,
                string: t.string,
            }),
        )
    }

    pub fn scale_real(&self, factor: f64) -> PauliSum {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn try_add(&self, other: &PauliSum) -> Result<PauliSum> {
        self.require_size(other.n)?;
        PauliSum::from_terms(self.n, self.terms.iter().chain(other.terms.iter()).copied())
    }

    /// Operator product `self * other` with exact phase bookkeeping.
    pub fn multiply(&self, other: &PauliSum) -> Result<PauliSum> {
        self.require_size(other.n)?;
        let mut acc: BTreeMap<u128, PauliTerm> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let (k, string) = a.string.mul_phase(&b.string);
                let coefficient = a.coefficient * b.coefficient * i_pow(k);
                acc.entry(string.lex_key())
                    .and_modify(|t| t.coefficient += coefficient)
                    .or_insert(PauliTerm { coefficient, string });
            }
        }
        Ok(PauliSum::from_sorted(self.n, acc.into_values()))
    }

    pub fn adjoint(&self) -> PauliSum {
        PauliSum::from_sorted(
            self.n,
            self.terms.iter().map(|t| PauliTerm {
                coefficient: t.coefficient.conj(),
                string: t.string,
            }),
        )
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &PauliSum) -> Result<PauliSum> {
        Ok(self.multiply(other)? - other.multiply(self)?)
    }

    /// Largest coefficient magnitude, zero for the empty sum.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms.iter().map(|t| t.coefficient.norm()).fold(0.0, f64::max)
    }

    /// Dense `2^n x 2^n` matrix, guarded at [`DENSE_QUBIT_LIMIT`] qubits.
    pub fn to_matrix(&self) -> Result<DMatrix<Complex64>> {
        self.to_matrix_with_limit(DENSE_QUBIT_LIMIT)
    }

    pub fn to_matrix_with_limit(&self, max_qubits: usize) -> Result<DMatrix<Complex64>> {
        if self.n > max_qubits {
            return Err(Error::Resource(format!(
                "dense matrix of a {}-qubit sum exceeds the {max_qubits}-qubit guard",
                self.n
            )));
        }
        let dim = 1usize << self.n;
        let mut m = DMatrix::<Complex64>::zeros(dim, dim);
        for t in &self.terms {
            let x = t.string.x_mask() as usize;
            let z = t.string.z_mask() as usize;
            let base = t.coefficient * i_pow(t.string.y_count());
            for col in 0..dim {
                let sign = if (col & z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                m[(col ^ x, col)] += base * sign;
            }
        }
        Ok(m)
    }
}

impl Add for PauliSum {
    type Output = PauliSum;

    /// Panics on mismatched registers; use [`PauliSum::try_add`] to get an error instead.
    fn add(self, rhs: PauliSum) -> PauliSum {
        self.try_add(&rhs).expect("register sizes must match")
    }
}

impl Sub for PauliSum {
    type Output = PauliSum;

    fn sub(self, rhs: PauliSum) -> PauliSum {
        self.try_add(&(-rhs)).expect("register sizes must match")
    }
}

impl Neg for PauliSum {
    type Output = PauliSum;

    fn neg(self) -> PauliSum {
        self.scale_real(-1.0)
    }
}

impl Mul for &PauliSum {
    type Output = PauliSum;

    fn mul(self, rhs: &PauliSum) -> PauliSum {
        self.multiply(rhs).expect("register sizes must match")
    }
}
