//! Low spectrum of a register beyond the dense limit with the iterative solver,
//! checked against the dense solver where both apply.
//!
//! ```bash
//! cargo run --release --example lanczos
//! ```

use std::time::Instant;

use nedyn::spectral::{lanczos_low_spectrum, low_spectrum, LanczosOptions, Subspace};
use nedyn::{PauliString, PauliSum, PauliTerm};

/// Heisenberg ring with a weak staggered field.
fn ring(n: usize) -> nedyn::Result<PauliSum> {
    let mut terms = Vec::new();
    for q in 0..n {
        let r = (q + 1) % n;
        for p in ['X', 'Y', 'Z'] {
            let text: String = (0..n).rev().map(|k| if k == q || k == r { p } else { 'I' }).collect();
            terms.push(PauliTerm::real(1.0, text.parse::<PauliString>()?)?);
        }
        let z: String = (0..n).rev().map(|k| if k == q { 'Z' } else { 'I' }).collect();
        terms.push(PauliTerm::real(if q % 2 == 0 { 0.1 } else { -0.1 }, z.parse()?)?);
    }
    PauliSum::from_terms(n, terms)
}

fn main() -> nedyn::Result<()> {
    let h = ring(10)?;
    let dense = low_spectrum(&h, 3)?;
    let iterative = lanczos_low_spectrum(&h, 3, &Subspace::full(10), &LanczosOptions::default())?;
    for (a, b) in dense.eigenvalues.iter().zip(&iterative.eigenvalues) {
        println!("10 qubits: dense {a:.12}  lanczos {b:.12}");
    }

    let start = Instant::now();
    let big = lanczos_low_spectrum(&ring(16)?, 2, &Subspace::full(16), &LanczosOptions::default())?;
    println!(
        "16 qubits: E0 = {:.10}, E1 = {:.10} ({:.1} s)",
        big.eigenvalues[0],
        big.eigenvalues[1],
        start.elapsed().as_secs_f64()
    );
    Ok(())
}
