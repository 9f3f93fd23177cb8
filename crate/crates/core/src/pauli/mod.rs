//! Pauli strings, weighted Pauli sums and their action on statevectors.
//!
//! Qubit 0 is the least-significant bit of an amplitude index. Textual Pauli
//! strings are written most-significant qubit first, so `"XZ"` is `Z` on qubit 0
//! and `X` on qubit 1.
//!
//! A string is stored as a pair of bit masks `(x, z)`; the letter on qubit `q`
//! is `I` for `(0, 0)`, `X` for `(1, 0)`, `Z` for `(0, 1)` and `Y` for `(1, 1)`,
//! with the phase convention `Y = i X Z`.

mod kernel;
mod sum;
mod text;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) use kernel::accumulate_string;
pub use kernel::{apply_sum, apply_term, exp_apply, exp_apply_in_place, expectation, StateVector};
pub use sum::{PauliSum, PauliTerm, DENSE_QUBIT_LIMIT, PRUNE_THRESHOLD};
pub use text::{parse_pauli_sum, write_pauli_sum};

/// Largest register representable by the mask encoding.
pub const MAX_QUBITS: usize = 64;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    /// Rank used for lexicographic ordering of strings (`I < X < Y < Z`).
    fn rank(self) -> u128 {
        match self {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Argument(format!("invalid Pauli letter {other:?}"))),
        }
    }
}

/// Unweighted tensor product of Pauli letters on an `n`-qubit register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
}

fn register_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "register of {n} qubits exceeds {MAX_QUBITS}");
        PauliString { n, x: 0, z: 0 }
    }

    pub fn from_masks(n: usize, x: u64, z: u64) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::Resource(format!("register of {n} qubits exceeds {MAX_QUBITS}")));
        }
        let mask = register_mask(n);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::Index(format!(
                "masks ({x:#x}, {z:#x}) address qubits beyond a {n}-qubit register"
            )));
        }
        Ok(PauliString { n, x, z })
    }

    /// A single letter on qubit `q`, identity elsewhere.
    pub fn single(n: usize, q: usize, p: Pauli) -> Result<Self> {
        if q >= n {
            return Err(Error::Index(format!("qubit {q} on a {n}-qubit register")));
        }
        let (xb, zb) = p.bits();
        PauliString::from_masks(n, (xb as u64) << q, (zb as u64) << q)
    }

    /// Build from `(qubit, letter)` pairs; later letters on the same qubit overwrite.
    pub fn from_letters(n: usize, letters: &[(usize, Pauli)]) -> Result<Self> {
        let mut s = PauliString::identity(n);
        for &(q, p) in letters {
            s.set(q, p)?;
        }
        Ok(s)
    }

    pub fn set(&mut self, q: usize, p: Pauli) -> Result<()> {
        if q >= self.n {
            return Err(Error::Index(format!("qubit {q} on a {}-qubit register", self.n)));
        }
        let (xb, zb) = p.bits();
        let bit = 1u64 << q;
        self.x = (self.x & !bit) | ((xb as u64) << q);
        self.z = (self.z & !bit) | ((zb as u64) << q);
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn letter(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x >> q & 1 == 1, self.z >> q & 1 == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of `Y` letters.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()).is_multiple_of(2)
    }

    /// Product `self * other` as `(i^k, string)`, with `k` returned modulo 4.
    pub fn mul_phase(&self, other: &PauliString) -> (u32, PauliString) {
        debug_assert_eq!(self.n, other.n);
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        // P = i^{x.z} X^x Z^z per qubit; moving Z^z1 past X^x2 costs (-1)^{z1.x2}.
        let k = self.y_count() + other.y_count() + 2 * (self.z & other.x).count_ones() + 4 * 64 - (x & z).count_ones();
        (k % 4, PauliString { n: self.n, x, z })
    }

    /// Key whose numeric order equals the lexicographic order of the text form.
    pub fn lex_key(&self) -> u128 {
        (0..self.n).fold(0u128, |acc, q| acc | (self.letter(q).rank() << (2 * q)))
    }

    /// Copy with the listed qubits deleted; the remaining qubits keep their order.
    pub(crate) fn remove_qubits(&self, removed: &[usize]) -> PauliString {
        let mut out = PauliString::identity(self.n - removed.len());
        let mut dst = 0;
        for q in 0..self.n {
            if removed.contains(&q) {
                continue;
            }
            out.x |= (self.x >> q & 1) << dst;
            out.z |= (self.z >> q & 1) << dst;
            dst += 1;
        }
        out
    }

    /// Place this string on qubits `offset..offset + n` of a larger register.
    pub fn embed(&self, total: usize, offset: usize) -> Result<PauliString> {
        if offset + self.n > total {
            return Err(Error::Dimension {
                expected: total,
                found: offset + self.n,
            });
        }
        PauliString::from_masks(total, self.x << offset, self.z << offset)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in (0..self.n).rev() {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        let mut out = PauliString::from_masks(n, 0, 0)?;
        for (pos, c) in s.chars().enumerate() {
            out.set(n - 1 - pos, Pauli::try_from(c)?)?;
        }
        Ok(out)
    }
}

/// `i^k` as a complex number.
pub(crate) fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_msb_first() {
        let s: PauliString = "XIZY".parse().unwrap();
        assert_eq!(s.letter(0), Pauli::Y);
        assert_eq!(s.letter(1), Pauli::Z);
        assert_eq!(s.letter(2), Pauli::I);
        assert_eq!(s.letter(3), Pauli::X);
        assert_eq!(s.to_string(), "XIZY");
    }

    #[test]
    fn single_qubit_products() {
        let x: PauliString = "X".parse().unwrap();
        let y: PauliString = "Y".parse().unwrap();
        let z: PauliString = "Z".parse().unwrap();
        // XZ = -iY
        assert_eq!(x.mul_phase(&z), (3, y));
        // ZX = iY
        assert_eq!(z.mul_phase(&x), (1, y));
        // XY = iZ, YZ = iX
        assert_eq!(x.mul_phase(&y), (1, z));
        assert_eq!(y.mul_phase(&z), (1, x));
        assert_eq!(y.mul_phase(&y), (0, PauliString::identity(1)));
    }

    #[test]
    fn lex_key_matches_string_order() {
        let mut words: Vec<PauliString> = ["ZI", "IX", "XY", "YI", "II", "IZ", "XX"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        words.sort_by_key(|s| s.lex_key());
        let text: Vec<String> = words.iter().map(|s| s.to_string()).collect();
        let mut sorted = text.clone();
        sorted.sort();
        assert_eq!(text, sorted);
    }

    #[test]
    fn remove_qubits_compacts() {
        let s: PauliString = "XZYI".parse().unwrap();
        assert_eq!(s.remove_qubits(&[1]).to_string(), "XZI");
        assert_eq!(s.remove_qubits(&[0, 3]).to_string(), "ZY");
    }

    #[test]
    fn rejects_bad_letters() {
        assert!("XQ".parse::<PauliString>().is_err());
        assert!(PauliString::single(2, 2, Pauli::X).is_err());
    }
}
