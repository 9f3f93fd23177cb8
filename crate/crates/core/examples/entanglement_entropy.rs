//! Electron-nuclear entanglement entropy from either reduced density matrix.
//!
//! ```bash
//! cargo run --release --example entanglement_entropy
//! ```

use nedyn::observables::{entanglement_entropy, subsystem_entropies, Partition};
use nedyn::StateVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> nedyn::Result<()> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bell = StateVector::from_amplitudes(vec![
        Complex64::new(s, 0.0),
        Complex64::default(),
        Complex64::default(),
        Complex64::new(s, 0.0),
    ])?;
    let pair = Partition::new(2, vec![0], vec![1])?;
    println!(
        "Bell pair: S = {:.12} (ln 2 = {:.12})",
        entanglement_entropy(&bell, &pair)?,
        2f64.ln()
    );

    let product = StateVector::basis(2, 0b10)?;
    println!("|10>: S = {:.3e}", entanglement_entropy(&product, &pair)?);

    // Random 8-qubit states split 6|2: both reduced density matrices give the same entropy.
    let partition = Partition::new(8, (0..6).collect(), vec![6, 7])?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let amps = (0..256)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let psi = StateVector::normalized(amps)?;
        let (s_e, s_n) = subsystem_entropies(&psi, &partition)?;
        println!("S_e = {s_e:.12}  S_n = {s_n:.12}  |diff| = {:.1e}", (s_e - s_n).abs());
    }
    Ok(())
}
