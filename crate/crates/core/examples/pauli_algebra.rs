//! Pauli strings and sums: products, commutators, kernels and the text format.
//!
//! ```bash
//! cargo run --release --example pauli_algebra
//! ```

use nedyn::pauli::{apply_sum, exp_apply, expectation, parse_pauli_sum, write_pauli_sum, Pauli};
use nedyn::{PauliString, PauliSum, PauliTerm, StateVector};
use num_complex::Complex64;

fn main() -> nedyn::Result<()> {
    // Text is most-significant qubit first: "XZ" is X on qubit 1, Z on qubit 0.
    let xz: PauliString = "XZ".parse()?;
    let zx: PauliString = "ZX".parse()?;
    let (k, product) = xz.mul_phase(&zx);
    println!("XZ * ZX = i^{k} {product}");
    println!("XZ and ZX commute: {}", xz.commutes_with(&zx));

    let x0 = PauliString::single(2, 0, Pauli::X)?;
    let y0 = PauliString::single(2, 0, Pauli::Y)?;
    let a = PauliSum::from_term(PauliTerm::real(1.0, x0)?);
    let b = PauliSum::from_term(PauliTerm::real(1.0, y0)?);
    println!("[X0, Y0] = {}", write_pauli_sum(&a.commutator(&b)?).trim_end());

    // A two-qubit transverse-field Ising Hamiltonian.
    let h = parse_pauli_sum(
        "qubits 2\n\
         ZZ -1.0 0.0\n\
         IX -0.5 0.0\n\
         XI -0.5 0.0\n",
    )?;
    println!("H has {} terms, Hermitian: {}", h.len(), h.is_hermitian());

    let plus = StateVector::normalized(vec![Complex64::new(1.0, 0.0); 4])?;
    println!("<+ +|H|+ +> = {:.6}", expectation(&h, &plus)?);

    let h_psi = apply_sum(&h, &plus)?;
    println!("||H|+ +>|| = {:.6}", h_psi.norm());

    // exp(-i theta P) on |00>: a quarter turn about X on qubit 0 gives -i|01>.
    let zero = StateVector::zero_state(2)?;
    let turned = exp_apply(&"IX".parse()?, std::f64::consts::FRAC_PI_2, &zero)?;
    println!("exp(-i pi/2 X0)|00> amplitudes: {:?}", turned.amplitudes());

    let squared = h.multiply(&h)?;
    println!(
        "H^2 has {} terms; H^2 text:\n{}",
        squared.len(),
        write_pauli_sum(&squared)
    );
    Ok(())
}
