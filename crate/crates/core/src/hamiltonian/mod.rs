//! Two-component Hamiltonians: compilation from integrals, time-dependent
//! mixing, and the synthetic three-site proton-transfer model.

mod integrals;
mod schedule;
mod synthetic;

pub use integrals::{parse_integrals, write_integrals, IntegralSet, Matrix, Tensor4, INTEGRAL_SYMMETRY_TOLERANCE};
pub use schedule::{schedule_weights, Schedule, ScheduleShape, ScheduleWeights, WEIGHT_SUM_TOLERANCE};
pub use synthetic::{synthetic_lmr, SyntheticModel, Variant, NUCLEAR_SITES};

use crate::error::{Error, Result};
use crate::fermion::{lower_op, taper, Ladder, Sector, SectorLayout};
use crate::pauli::PauliSum;

/// Pre-lowered creation and annihilation operators of one sector.
struct Ladders {
    create: Vec<PauliSum>,
    annihilate: Vec<PauliSum>,
}

impl Ladders {
    fn new(sector: Sector, layout: &SectorLayout) -> Result<Self> {
        let modes = layout.modes(sector);
        let lower = |kind| {
            (0..modes)
                .map(|j| lower_op(sector, j, kind, layout))
                .collect::<Result<Vec<_>>>()
        };
        Ok(Ladders {
            create: lower(Ladder::Create)?,
            annihilate: lower(Ladder::Annihilate)?,
        })
    }
}

/// Compile the two-component Hamiltonian
///
/// ```text
/// H = Σ h_e[i][j] a†_i a_j + Σ h_n[I][J] a†_I a_J
///   + ½ Σ g_ee[i][j][k][l] a†_i a†_k a_l a_j + ½ Σ g_nn[I][J][K][L] a†_I a†_K a_L a_J
///   − Σ g_en[i][j][K][L] a†_i a†_K a_L a_j + core_energy
/// ```
///
/// onto the layout's register, tapering if the layout asks for it.
pub fn build_hamiltonian(ints: &IntegralSet, layout: &SectorLayout) -> Result<PauliSum> {
    if ints.electron_modes() != layout.modes(Sector::Electron) || ints.nuclear_modes() != layout.modes(Sector::Nuclear)
    {
        return Err(Error::Shape(format!(
            "integrals cover {} electron and {} nuclear modes, layout has {} and {}",
            ints.electron_modes(),
            ints.nuclear_modes(),
            layout.modes(Sector::Electron),
            layout.modes(Sector::Nuclear)
        )));
    }
    ints.validate()?;

    let n = layout.untapered_qubits();
    let e = Ladders::new(Sector::Electron, layout)?;
    let nuc = Ladders::new(Sector::Nuclear, layout)?;
    let mut h = PauliSum::identity(n).scale_real(ints.core_energy);

    for (ops, h1) in [(&e, &ints.h_e), (&nuc, &ints.h_n)] {
        for (i, j, v) in h1.nonzeros() {
            h = h.try_add(&ops.create[i].multiply(&ops.annihilate[j])?.scale_real(v))?;
        }
    }
    for (ops, g) in [(&e, &ints.g_ee), (&nuc, &ints.g_nn)] {
        for ([i, j, k, l], v) in g.nonzeros() {
            if i == k || j == l {
                continue; // a†_i a†_i = 0
            }
            let term = ops.create[i]
                .multiply(&ops.create[k])?
                .multiply(&ops.annihilate[l])?
                .multiply(&ops.annihilate[j])?;
            h = h.try_add(&term.scale_real(0.5 * v))?;
        }
    }
    for ([i, j, k, l], v) in ints.g_en.nonzeros() {
        let term = e.create[i]
            .multiply(&nuc.create[k])?
            .multiply(&nuc.annihilate[l])?
            .multiply(&e.annihilate[j])?;
        h = h.try_add(&term.scale_real(-v))?;
    }
    let h = h.into_hermitian()?;
    taper(&h, layout)
}

/// `alpha H_L + beta H_M + gamma H_R`.
pub fn mix(h_l: &PauliSum, h_m: &PauliSum, h_r: &PauliSum, w: &ScheduleWeights) -> Result<PauliSum> {
    let n = h_l.num_qubits();
    h_m.require_size(n)?;
    h_r.require_size(n)?;
    for h in [h_l, h_m, h_r] {
        h.require_hermitian("mixing")?;
    }
    let mut terms = Vec::with_capacity(h_l.len() + h_m.len() + h_r.len());
    for (h, weight) in [(h_l, w.alpha), (h_m, w.beta), (h_r, w.gamma)] {
        if weight != 0.0 {
            terms.extend(h.terms().iter().map(|t| crate::pauli::PauliTerm {
                coefficient: t.coefficient * weight,
                string: t.string,
            }));
        }
    }
    PauliSum::from_terms(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::{Mapping, RemovedQubit};
    use num_complex::Complex64;

    #[test]
    fn core_energy_only() {
        let mut ints = IntegralSet::zeros(2, 1);
        ints.core_energy = -1.5;
        let layout = SectorLayout::new(2, 1).unwrap();
        let h = build_hamiltonian(&ints, &layout).unwrap();
        assert_eq!(h, PauliSum::identity(3).scale_real(-1.5));
    }

    #[test]
    fn single_mode_orbital_energy() {
        let mut ints = IntegralSet::zeros(1, 1);
        ints.h_e.set(0, 0, -0.3);
        let h = build_hamiltonian(&ints, &SectorLayout::new(1, 1).unwrap()).unwrap();
        let z0: crate::PauliString = "IZ".parse().unwrap();
        assert_eq!(h.len(), 2);
        assert!((h.coefficient(&crate::PauliString::identity(2)).re + 0.15).abs() < 1e-15);
        assert!((h.coefficient(&z0).re - 0.15).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_a_shape_error() {
        let ints = IntegralSet::zeros(2, 1);
        let layout = SectorLayout::new(3, 1).unwrap();
        assert!(matches!(build_hamiltonian(&ints, &layout), Err(Error::Shape(_))));
    }

    #[test]
    fn asymmetric_integrals_are_rejected() {
        let mut ints = IntegralSet::zeros(2, 1);
        ints.h_e.set(0, 1, 0.1);
        let layout = SectorLayout::new(2, 1).unwrap();
        assert!(matches!(build_hamiltonian(&ints, &layout), Err(Error::Validation(_))));
    }

    #[test]
    fn mix_endpoints_return_inputs() {
        let (l, m, r) = synthetic_lmr(&SyntheticModel::default()).unwrap();
        assert_eq!(mix(&l, &m, &r, &ScheduleWeights::left()).unwrap(), l);
        assert_eq!(mix(&l, &m, &r, &ScheduleWeights::right()).unwrap(), r);
    }

    #[test]
    fn mix_rejects_non_hermitian_and_size_mismatch() {
        let a = PauliSum::identity(1);
        let b = PauliSum::identity(2);
        assert!(matches!(
            mix(&a, &b, &a, &ScheduleWeights::left()),
            Err(Error::Dimension { .. })
        ));
        let c = a.scale(Complex64::new(0.0, 1.0));
        assert!(matches!(
            mix(&a, &c, &a, &ScheduleWeights::left()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn tapered_build_shrinks_register() {
        let model = SyntheticModel::default();
        let ints = model.integrals(Variant::Left);
        let layout = SectorLayout::new(4, 3)
            .unwrap()
            .with_mapping(Sector::Nuclear, Mapping::Parity)
            .with_tapering(
                Sector::Nuclear,
                vec![RemovedQubit {
                    position: 2,
                    eigenvalue: -1,
                }],
            )
            .unwrap();
        let h = build_hamiltonian(&ints, &layout).unwrap();
        assert_eq!(h.num_qubits(), 6);
        assert!(h.is_hermitian());
    }
}
