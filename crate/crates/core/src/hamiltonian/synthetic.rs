//! A three-site stand-in for an intramolecular proton transfer.
//!
//! One proton hops between nuclear sites L, M, R (nearest-neighbour only);
//! two electrons live in a left and a right bond orbital (`ℓ`, `r`), each in
//! two spin channels. Variant `X` of the Hamiltonian
//!
//! - puts the proton's site energy `-detuning` on site `X` and `+barrier` on M;
//! - lowers the bond orbital next to `X` by `relaxation` (none for M);
//! - binds the proton on site `X` to the adjacent bond-orbital pair with
//!   strength `en_coupling` (split evenly over both pairs for M).
//!
//! Nuclear hopping is common to all three variants. Swapping L with R together
//! with `ℓ` with `r` maps `H_L` onto `H_R` and leaves `H_M` unchanged, so the
//! left and right wells are exactly degenerate.
//!
//! Spin-orbital order: `ℓα, rα, ℓβ, rβ` (alpha block first); nuclear order `L, M, R`.

use super::{build_hamiltonian, IntegralSet};
use crate::error::{Error, Result};
use crate::fermion::{Mapping, RemovedQubit, Sector, SectorLayout};
use crate::pauli::PauliSum;

/// Nuclear mode indices of the L, M and R sites.
pub const NUCLEAR_SITES: [usize; 3] = [0, 1, 2];

const ELECTRON_MODES: usize = 4;
const NUCLEAR_MODES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Left,
    Middle,
    Right,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Left, Variant::Middle, Variant::Right];

    pub fn site(self) -> usize {
        match self {
            Variant::Left => NUCLEAR_SITES[0],
            Variant::Middle => NUCLEAR_SITES[1],
            Variant::Right => NUCLEAR_SITES[2],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Variant::Left => "L",
            Variant::Middle => "M",
            Variant::Right => "R",
        }
    }
}

/// Parameters of the synthetic model, all in Hartree.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SyntheticModel {
    /// Proton hopping L↔M and M↔R (enters as `-coupling`).
    pub coupling: f64,
    pub detuning: f64,
    pub barrier: f64,
    pub en_coupling: f64,
    pub orbital_energy: f64,
    /// Electron hopping ℓ↔r within a spin channel (enters as `-electron_hopping`).
    pub electron_hopping: f64,
    /// On-site repulsion between opposite spins in the same bond orbital.
    pub hubbard: f64,
    pub relaxation: f64,
}

impl Default for SyntheticModel {
    fn default() -> Self {
        SyntheticModel {
            coupling: 0.005,
            detuning: 0.02,
            barrier: 0.005,
            en_coupling: 0.01,
            orbital_energy: -0.1,
            electron_hopping: 0.05,
            hubbard: 0.05,
            relaxation: 0.005,
        }
    }
}

fn spin_orbital(bond: usize, spin: usize) -> usize {
    bond + 2 * spin
}

impl SyntheticModel {
    /// Parameters for a clean adiabatic transfer over a 4000 a.u. drive.
    ///
    /// Deep wells keep the proton localized (`n_R ≈ 0.99` in the H_R ground
    /// state) and the strong binding polarizes the bond pair, so the entropy
    /// peaks at both avoided crossings.
    pub fn transfer() -> Self {
        SyntheticModel {
            coupling: 0.017,
            detuning: 0.044,
            barrier: 0.024,
            en_coupling: 0.064,
            orbital_energy: 0.0,
            electron_hopping: 0.034,
            hubbard: 0.0015,
            relaxation: 0.008,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let values = [
            self.coupling,
            self.detuning,
            self.barrier,
            self.en_coupling,
            self.orbital_energy,
            self.electron_hopping,
            self.hubbard,
            self.relaxation,
        ];
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Validation("synthetic model parameters must be finite".into()));
        }
        if self.barrier <= 0.0 {
            return Err(Error::Validation(format!("barrier {} must be positive", self.barrier)));
        }
        Ok(())
    }

    /// Two electrons and one proton.
    pub fn particle_numbers(&self) -> (usize, usize) {
        (2, 1)
    }

    /// Jordan-Wigner in both sectors: 4 electron + 3 nuclear qubits.
    pub fn layout(&self) -> SectorLayout {
        SectorLayout::new(ELECTRON_MODES, NUCLEAR_MODES).expect("fixed mode counts are valid")
    }

    /// Parity mapping with the alpha-parity, total electron parity and proton
    /// parity qubits removed (singlet two-electron, one-proton sector): 2 + 2 qubits.
    pub fn tapered_layout(&self) -> SectorLayout {
        let r = |position, eigenvalue| RemovedQubit { position, eigenvalue };
        self.layout()
            .with_mapping(Sector::Electron, Mapping::Parity)
            .with_mapping(Sector::Nuclear, Mapping::Parity)
            .with_tapering(Sector::Electron, vec![r(1, -1), r(3, 1)])
            .and_then(|l| l.with_tapering(Sector::Nuclear, vec![r(2, -1)]))
            .expect("fixed tapering is valid")
    }

    pub fn integrals(&self, variant: Variant) -> IntegralSet {
        let mut ints = IntegralSet::zeros(ELECTRON_MODES, NUCLEAR_MODES);
        let [l, m, r] = NUCLEAR_SITES;

        // Nuclear sector.
        for (a, b) in [(l, m), (m, r)] {
            ints.h_n.set(a, b, -self.coupling);
            ints.h_n.set(b, a, -self.coupling);
        }
        let site = variant.site();
        ints.h_n.set(site, site, -self.detuning);
        ints.h_n.set(m, m, ints.h_n.get(m, m) + self.barrier);

        // Electron sector.
        let relaxed_bond = match variant {
            Variant::Left => Some(0),
            Variant::Middle => None,
            Variant::Right => Some(1),
        };
        for spin in 0..2 {
            for bond in 0..2 {
                let p = spin_orbital(bond, spin);
                let shift = if relaxed_bond == Some(bond) {
                    self.relaxation
                } else {
                    0.0
                };
                ints.h_e.set(p, p, self.orbital_energy - shift);
            }
            let (a, b) = (spin_orbital(0, spin), spin_orbital(1, spin));
            ints.h_e.set(a, b, -self.electron_hopping);
            ints.h_e.set(b, a, -self.electron_hopping);
        }
        for bond in 0..2 {
            let (up, down) = (spin_orbital(bond, 0), spin_orbital(bond, 1));
            ints.g_ee.set([up, up, down, down], self.hubbard);
            ints.g_ee.set([down, down, up, up], self.hubbard);
        }

        // Mixed sector: the proton on `site` binds the adjacent bond pair.
        let bonds: &[(usize, f64)] = match variant {
            Variant::Left => &[(0, 1.0)],
            Variant::Middle => &[(0, 0.5), (1, 0.5)],
            Variant::Right => &[(1, 1.0)],
        };
        for &(bond, share) in bonds {
            for spin in 0..2 {
                let p = spin_orbital(bond, spin);
                ints.g_en.set([p, p, site, site], share * self.en_coupling);
            }
        }
        ints
    }

    /// `(H_L, H_M, H_R)` on `layout`.
    pub fn hamiltonians_on(&self, layout: &SectorLayout) -> Result<(PauliSum, PauliSum, PauliSum)> {
        self.validate()?;
        let build = |v| build_hamiltonian(&self.integrals(v), layout);
        Ok((build(Variant::Left)?, build(Variant::Middle)?, build(Variant::Right)?))
    }
}

/// `(H_L, H_M, H_R)` of the synthetic model on its Jordan-Wigner layout.
pub fn synthetic_lmr(model: &SyntheticModel) -> Result<(PauliSum, PauliSum, PauliSum)> {
    model.hamiltonians_on(&model.layout())
}
