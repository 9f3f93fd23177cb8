//! Fermion-to-qubit compilation for two distinguishable particle types.
//!
//! Electrons occupy the low block of qubits, quantum nuclei the high block.
//! Each block is encoded independently (Jordan-Wigner or parity), so operators
//! of one sector carry no parity strings into the other: ladder operators
//! anticommute within a sector and commute across sectors.
//!
//! Ladder operators are compiled on the full, untapered register. Tapering is
//! a separate step applied to symmetry-respecting sums such as Hamiltonians
//! and number operators.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum, PauliTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Electron,
    Nuclear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mapping {
    JordanWigner,
    Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    Create,
    Annihilate,
}

/// A qubit removed by tapering, with the fixed eigenvalue of `Z` on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RemovedQubit {
    /// Position inside the sector block, before tapering.
    pub position: usize,
    /// `+1` or `-1`.
    pub eigenvalue: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorSpec {
    pub modes: usize,
    pub mapping: Mapping,
    pub removed: Vec<RemovedQubit>,
}

impl SectorSpec {
    pub fn qubits(&self) -> usize {
        self.modes - self.removed.len()
    }
}

/// How electron and nuclear modes are laid out on the qubit register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorLayout {
    electron: SectorSpec,
    nuclear: SectorSpec,
}

impl SectorLayout {
    /// Jordan-Wigner in both sectors, no tapering.
    pub fn new(electron_modes: usize, nuclear_modes: usize) -> Result<Self> {
        if electron_modes == 0 || nuclear_modes == 0 {
            return Err(Error::Validation(format!(
                "mode counts must be positive, got {electron_modes} electron and {nuclear_modes} nuclear"
            )));
        }
        if electron_modes + nuclear_modes > crate::pauli::MAX_QUBITS {
            return Err(Error::Resource(format!(
                "{} modes exceed the {}-qubit register limit",
                electron_modes + nuclear_modes,
                crate::pauli::MAX_QUBITS
            )));
        }
        let spec = |modes| SectorSpec {
            modes,
            mapping: Mapping::JordanWigner,
            removed: Vec::new(),
        };
        Ok(SectorLayout {
            electron: spec(electron_modes),
            nuclear: spec(nuclear_modes),
        })
    }

    pub fn with_mapping(mut self, sector: Sector, mapping: Mapping) -> Self {
        self.spec_mut(sector).mapping = mapping;
        self
    }

    /// Remove the given sector-local qubits, fixing `Z` on each to its eigenvalue.
    pub fn with_tapering(mut self, sector: Sector, removed: Vec<RemovedQubit>) -> Result<Self> {
        let modes = self.spec(sector).modes;
        for (i, r) in removed.iter().enumerate() {
            if r.position >= modes {
                return Err(Error::Validation(format!(
                    "{sector:?} tapering position {} outside {modes} modes",
                    r.position
                )));
            }
            if r.eigenvalue != 1 && r.eigenvalue != -1 {
                return Err(Error::Validation(format!(
                    "tapering eigenvalue {} is not +1 or -1",
                    r.eigenvalue
                )));
            }
            if removed[..i].iter().any(|o| o.position == r.position) {
                return Err(Error::Validation(format!(
                    "{sector:?} tapering position {} listed twice",
                    r.position
                )));
            }
        }
        let other = match sector {
            Sector::Electron => self.nuclear.qubits(),
            Sector::Nuclear => self.electron.qubits(),
        };
        if modes - removed.len() + other == 0 {
            return Err(Error::Validation(
                "tapering would remove every qubit of the register".into(),
            ));
        }
        self.spec_mut(sector).removed = removed;
        Ok(self)
    }

    pub fn spec(&self, sector: Sector) -> &SectorSpec {
        match sector {
            Sector::Electron => &self.electron,
            Sector::Nuclear => &self.nuclear,
        }
    }

    fn spec_mut(&mut self, sector: Sector) -> &mut SectorSpec {
        match sector {
            Sector::Electron => &mut self.electron,
            Sector::Nuclear => &mut self.nuclear,
        }
    }

    pub fn modes(&self, sector: Sector) -> usize {
        self.spec(sector).modes
    }

    /// One qubit per mode, before tapering.
    pub fn untapered_qubits(&self) -> usize {
        self.electron.modes + self.nuclear.modes
    }

    /// Register size after tapering.
    pub fn qubits(&self) -> usize {
        self.electron.qubits() + self.nuclear.qubits()
    }

    pub fn is_tapered(&self) -> bool {
        !self.electron.removed.is_empty() || !self.nuclear.removed.is_empty()
    }

    /// First untapered qubit of a sector block.
    pub fn offset(&self, sector: Sector) -> usize {
        match sector {
            Sector::Electron => 0,
            Sector::Nuclear => self.electron.modes,
        }
    }

    /// Qubits of each sector on the tapered register: `(electron, nuclear)`.
    pub fn partition_qubits(&self) -> (Vec<usize>, Vec<usize>) {
        let ne = self.electron.qubits();
        ((0..ne).collect(), (ne..self.qubits()).collect())
    }

    /// Removed qubits as global untapered positions, ascending.
    fn removed_global(&self) -> Vec<(usize, i8)> {
        let mut out: Vec<(usize, i8)> = [Sector::Electron, Sector::Nuclear]
            .into_iter()
            .flat_map(|s| {
                let offset = self.offset(s);
                self.spec(s)
                    .removed
                    .iter()
                    .map(move |r| (offset + r.position, r.eigenvalue))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// One creation or annihilation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderOp {
    pub sector: Sector,
    pub mode: usize,
    pub kind: Ladder,
}

impl LadderOp {
    pub fn create(sector: Sector, mode: usize) -> Self {
        LadderOp {
            sector,
            mode,
            kind: Ladder::Create,
        }
    }

    pub fn annihilate(sector: Sector, mode: usize) -> Self {
        LadderOp {
            sector,
            mode,
            kind: Ladder::Annihilate,
        }
    }
}

/// `prefactor * f_1 f_2 ... f_k`, applied right to left as written.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionProduct {
    pub factors: Vec<LadderOp>,
    pub prefactor: Complex64,
}

impl FermionProduct {
    pub fn new(prefactor: f64, factors: Vec<LadderOp>) -> Self {
        FermionProduct {
            factors,
            prefactor: Complex64::new(prefactor, 0.0),
        }
    }
}

fn term(coefficient: Complex64, string: PauliString) -> PauliTerm {
    PauliTerm { coefficient, string }
}

/// Compile one ladder operator onto the untapered register.
pub fn lower_op(sector: Sector, mode: usize, kind: Ladder, layout: &SectorLayout) -> Result<PauliSum> {
    let spec = layout.spec(sector);
    if mode >= spec.modes {
        return Err(Error::Index(format!(
            "{sector:?} mode {mode} outside {} modes",
            spec.modes
        )));
    }
    let n = layout.untapered_qubits();
    let offset = layout.offset(sector);
    let q = offset + mode;

    // Annihilator a = (A + i B) / 2 with Pauli strings A, B.
    let (mut a, mut b) = (PauliString::identity(n), PauliString::identity(n));
    match spec.mapping {
        Mapping::JordanWigner => {
            // a_j = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2
            for p in offset..q {
                a.set(p, Pauli::Z)?;
                b.set(p, Pauli::Z)?;
            }
            a.set(q, Pauli::X)?;
            b.set(q, Pauli::Y)?;
        }
        Mapping::Parity => {
            // a_j = X_{j+1} ... X_{m-1} (Z_{j-1} X_j + i Y_j) / 2
            for p in q + 1..offset + spec.modes {
                a.set(p, Pauli::X)?;
                b.set(p, Pauli::X)?;
            }
            if q > offset {
                a.set(q - 1, Pauli::Z)?;
            }
            a.set(q, Pauli::X)?;
            b.set(q, Pauli::Y)?;
        }
    }
    let sign = match kind {
        Ladder::Annihilate => 1.0,
        Ladder::Create => -1.0,
    };
    PauliSum::from_terms(
        n,
        [
            term(Complex64::new(0.5, 0.0), a),
            term(Complex64::new(0.0, 0.5 * sign), b),
        ],
    )
}

/// Compile an ordered product of ladder operators onto the untapered register.
pub fn map_product(product: &FermionProduct, layout: &SectorLayout) -> Result<PauliSum> {
    let n = layout.untapered_qubits();
    let mut acc = PauliSum::identity(n).scale(product.prefactor);
    for f in &product.factors {
        let op = lower_op(f.sector, f.mode, f.kind, layout)?;
        acc = acc.multiply(&op)?;
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// `a†_j a_j` on the untapered register.
pub fn number_operator(sector: Sector, mode: usize, layout: &SectorLayout) -> Result<PauliSum> {
    map_product(
        &FermionProduct::new(
            1.0,
            vec![LadderOp::create(sector, mode), LadderOp::annihilate(sector, mode)],
        ),
        layout,
    )?
    .into_hermitian()
}

/// Total particle number of one sector on the untapered register.
pub fn total_number(sector: Sector, layout: &SectorLayout) -> Result<PauliSum> {
    let mut acc = PauliSum::zero(layout.untapered_qubits());
    for mode in 0..layout.modes(sector) {
        acc = acc.try_add(&number_operator(sector, mode, layout)?)?;
    }
    Ok(acc)
}

/// Substitute the layout's fixed `Z` eigenvalues on removed qubits and delete them.
///
/// Input must live on the untapered register. Every term must act with `I` or
/// `Z` on each removed qubit; anything else means the sum does not commute
/// with the assumed symmetry.
pub fn taper(sum: &PauliSum, layout: &SectorLayout) -> Result<PauliSum> {
    sum.require_size(layout.untapered_qubits())?;
    if !layout.is_tapered() {
        return Ok(sum.clone());
    }
    let removed = layout.removed_global();
    let positions: Vec<usize> = removed.iter().map(|&(p, _)| p).collect();
    let mut terms = Vec::with_capacity(sum.len());
    for t in sum.terms() {
        let mut coefficient = t.coefficient;
        for &(p, eigenvalue) in &removed {
            match t.string.letter(p) {
                Pauli::I => {}
                Pauli::Z => coefficient *= f64::from(eigenvalue),
                other => {
                    return Err(Error::Symmetry(format!(
                        "term {} acts with {} on tapered qubit {p}",
                        t.string,
                        other.as_char()
                    )))
                }
            }
        }
        terms.push(term(coefficient, t.string.remove_qubits(&positions)));
    }
    let out = PauliSum::from_terms(layout.qubits(), terms)?;
    if sum.is_hermitian() {
        out.into_hermitian()
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sum(n: usize, ts: &[(&str, f64, f64)]) -> PauliSum {
        PauliSum::from_terms(
            n,
            ts.iter()
                .map(|&(s, re, im)| PauliTerm::new(c(re, im), s.parse().unwrap()).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn single_mode_annihilator() {
        let layout = SectorLayout::new(1, 1).unwrap();
        let a = lower_op(Sector::Electron, 0, Ladder::Annihilate, &layout).unwrap();
        assert_eq!(a, sum(2, &[("IX", 0.5, 0.0), ("IY", 0.0, 0.5)]));
    }

    #[test]
    fn single_mode_number_operator() {
        let layout = SectorLayout::new(1, 1).unwrap();
        let n = number_operator(Sector::Electron, 0, &layout).unwrap();
        assert_eq!(n, sum(2, &[("II", 0.5, 0.0), ("IZ", -0.5, 0.0)]));
    }

    #[test]
    fn nuclear_ops_have_no_electron_string() {
        let layout = SectorLayout::new(2, 2).unwrap();
        let a = lower_op(Sector::Nuclear, 1, Ladder::Annihilate, &layout).unwrap();
        assert_eq!(a, sum(4, &[("XZII", 0.5, 0.0), ("YZII", 0.0, 0.5)]));
    }

    #[test]
    fn hopping_pair_in_jordan_wigner() {
        // a†_0 a_1 on two modes
        let layout = SectorLayout::new(2, 1).unwrap();
        let hop = map_product(
            &FermionProduct::new(
                1.0,
                vec![
                    LadderOp::create(Sector::Electron, 0),
                    LadderOp::annihilate(Sector::Electron, 1),
                ],
            ),
            &layout,
        )
        .unwrap();
        // (X0 X1 + Y0 Y1 + i X0 Y1 - i Y0 X1) / 4, text MSB first
        let expected = sum(
            3,
            &[
                ("IXX", 0.25, 0.0),
                ("IYY", 0.25, 0.0),
                ("IYX", 0.0, 0.25),
                ("IXY", 0.0, -0.25),
            ],
        );
        assert_eq!(hop, expected);
    }

    #[test]
    fn empty_product_is_scaled_identity() {
        let layout = SectorLayout::new(2, 1).unwrap();
        let p = FermionProduct {
            factors: vec![],
            prefactor: c(0.3, -0.1),
        };
        assert_eq!(map_product(&p, &layout).unwrap(), sum(3, &[("III", 0.3, -0.1)]));
    }

    #[test]
    fn mode_out_of_range() {
        let layout = SectorLayout::new(2, 1).unwrap();
        assert!(matches!(
            lower_op(Sector::Nuclear, 1, Ladder::Create, &layout),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn taper_substitutes_eigenvalues() {
        let layout = SectorLayout::new(1, 1)
            .unwrap()
            .with_tapering(
                Sector::Nuclear,
                vec![RemovedQubit {
                    position: 0,
                    eigenvalue: 1,
                }],
            )
            .unwrap();
        assert_eq!(
            taper(&sum(2, &[("ZI", 1.0, 0.0)]), &layout).unwrap(),
            sum(1, &[("I", 1.0, 0.0)])
        );

        let layout = layout
            .with_tapering(
                Sector::Nuclear,
                vec![RemovedQubit {
                    position: 0,
                    eigenvalue: -1,
                }],
            )
            .unwrap();
        assert_eq!(
            taper(&sum(2, &[("ZZ", 1.0, 0.0)]), &layout).unwrap(),
            sum(1, &[("Z", -1.0, 0.0)])
        );
        assert!(matches!(
            taper(&sum(2, &[("XZ", 1.0, 0.0)]), &layout),
            Err(Error::Symmetry(_))
        ));
    }

    #[test]
    fn tapering_validation() {
        let base = SectorLayout::new(3, 2).unwrap();
        let r = |position, eigenvalue| RemovedQubit { position, eigenvalue };
        assert!(base.clone().with_tapering(Sector::Electron, vec![r(3, 1)]).is_err());
        assert!(base.clone().with_tapering(Sector::Electron, vec![r(0, 0)]).is_err());
        assert!(base
            .clone()
            .with_tapering(Sector::Electron, vec![r(1, 1), r(1, -1)])
            .is_err());
        let one = SectorLayout::new(1, 1)
            .unwrap()
            .with_tapering(Sector::Nuclear, vec![r(0, 1)])
            .unwrap();
        assert!(one.with_tapering(Sector::Electron, vec![r(0, 1)]).is_err());
        let ok = base.with_tapering(Sector::Electron, vec![r(2, -1)]).unwrap();
        assert_eq!(ok.qubits(), 4);
        assert_eq!(ok.partition_qubits(), (vec![0, 1], vec![2, 3]));
        assert!(SectorLayout::new(0, 2).is_err());
    }
}
