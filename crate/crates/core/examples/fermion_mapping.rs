//! Fermion-to-qubit mapping for two particle types, and qubit tapering.
//!
//! ```bash
//! cargo run --release --example fermion_mapping
//! ```

use nedyn::fermion::{
    lower_op, number_operator, taper, total_number, Ladder, Mapping, RemovedQubit, Sector, SectorLayout,
};
use nedyn::hamiltonian::{synthetic_lmr, SyntheticModel};
use nedyn::pauli::write_pauli_sum;
use nedyn::spectral::{ground_state_in, low_spectrum, Subspace};
use nedyn::PauliSum;

fn anticommutator(a: &PauliSum, b: &PauliSum) -> nedyn::Result<PauliSum> {
    a.multiply(b)?.try_add(&b.multiply(a)?)
}

fn main() -> nedyn::Result<()> {
    // Two electron modes on qubits 0-1, one nuclear mode on qubit 2.
    for mapping in [Mapping::JordanWigner, Mapping::Parity] {
        let layout = SectorLayout::new(2, 1)?
            .with_mapping(Sector::Electron, mapping)
            .with_mapping(Sector::Nuclear, mapping);
        let a1 = lower_op(Sector::Electron, 1, Ladder::Annihilate, &layout)?;
        let a1_dag = lower_op(Sector::Electron, 1, Ladder::Create, &layout)?;
        println!("{mapping:?}: a_1 =\n{}", write_pauli_sum(&a1));
        println!(
            "{{a_1, a_1^dag}} =\n{}",
            write_pauli_sum(&anticommutator(&a1, &a1_dag)?)
        );

        // Electrons and nuclei are distinguishable: their operators commute.
        let b0 = lower_op(Sector::Nuclear, 0, Ladder::Annihilate, &layout)?;
        let c = a1.commutator(&b0)?;
        println!("[a_1, b_0] has {} terms\n", c.len());
    }

    let layout = SectorLayout::new(4, 3)?;
    println!(
        "n_2 (electron) = {}",
        write_pauli_sum(&number_operator(Sector::Electron, 2, &layout)?).trim_end()
    );
    println!(
        "N_p = {}",
        write_pauli_sum(&total_number(Sector::Nuclear, &layout)?).trim_end()
    );

    // Tapering the synthetic model: parity mapping, then fix the alpha-parity,
    // total electron parity and proton parity qubits.
    let model = SyntheticModel::transfer();
    let (h_full, _, _) = synthetic_lmr(&model)?;
    let tapered = model.tapered_layout();
    let (h_small, _, _) = model.hamiltonians_on(&tapered)?;
    println!(
        "H_L on {} qubits ({} terms) -> {} qubits ({} terms)",
        h_full.num_qubits(),
        h_full.len(),
        h_small.num_qubits(),
        h_small.len()
    );
    let ne = total_number(Sector::Electron, &model.layout())?;
    let np = total_number(Sector::Nuclear, &model.layout())?;
    let sector = Subspace::from_constraints(h_full.num_qubits(), &[(&ne, 2.0), (&np, 1.0)])?;
    let e_full = ground_state_in(&h_full, &sector)?.energy;
    let e_small = low_spectrum(&h_small, 1)?.eigenvalues[0];
    println!("ground energy in the (2e, 1p) sector: {e_full:.12}; tapered register: {e_small:.12}");

    // Tapering by hand on a plain sum.
    let layout = SectorLayout::new(2, 1)?
        .with_mapping(Sector::Electron, Mapping::Parity)
        .with_tapering(
            Sector::Electron,
            vec![RemovedQubit {
                position: 1,
                eigenvalue: -1,
            }],
        )?;
    let n = total_number(
        Sector::Electron,
        &SectorLayout::new(2, 1)?.with_mapping(Sector::Electron, Mapping::Parity),
    )?;
    println!(
        "N_e with parity qubit fixed to -1: {}",
        write_pauli_sum(&taper(&n, &layout)?).trim_end()
    );
    Ok(())
}
