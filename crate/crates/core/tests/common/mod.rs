//! Independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use nalgebra::DMatrix;
use nedyn::fermion::{lower_op, Ladder, Mapping, Sector, SectorLayout};
use nedyn::hamiltonian::IntegralSet;
use nedyn::PauliSum;
use num_complex::Complex64;
use rand::Rng;

pub type CMatrix = DMatrix<Complex64>;

/// Act with one ladder operator on an occupation bitstring: bit `offset + mode` is the
/// occupation, and the sign counts occupied lower modes of the same sector.
fn ladder(bits: usize, offset: usize, mode: usize, create: bool) -> Option<(f64, usize)> {
    let q = offset + mode;
    if (bits >> q & 1 == 1) == create {
        return None;
    }
    let below = (bits >> offset) & ((1 << mode) - 1);
    let sign = if below.count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    Some((sign, bits ^ (1 << q)))
}

/// Apply `ops` right to left (`(offset, mode, create)`), returning the sign and image.
fn act(bits: usize, ops: &[(usize, usize, bool)]) -> Option<(f64, usize)> {
    ops.iter().rev().try_fold((1.0, bits), |(s, b), &(o, m, c)| {
        ladder(b, o, m, c).map(|(t, nb)| (s * t, nb))
    })
}

/// The two-component Hamiltonian built by acting on every occupation basis state.
pub fn oracle_hamiltonian(ints: &IntegralSet) -> CMatrix {
    let (e, n) = (ints.electron_modes(), ints.nuclear_modes());
    let dim = 1usize << (e + n);
    let mut terms: Vec<(f64, Vec<(usize, usize, bool)>)> = Vec::new();
    for (offset, h, m) in [(0, &ints.h_e, e), (e, &ints.h_n, n)] {
        for i in 0..m {
            for j in 0..m {
                terms.push((h.get(i, j), vec![(offset, i, true), (offset, j, false)]));
            }
        }
    }
    for (offset, g, m) in [(0, &ints.g_ee, e), (e, &ints.g_nn, n)] {
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let ops = vec![
                            (offset, i, true),
                            (offset, k, true),
                            (offset, l, false),
                            (offset, j, false),
                        ];
                        terms.push((0.5 * g.get([i, j, k, l]), ops));
                    }
                }
            }
        }
    }
    for i in 0..e {
        for j in 0..e {
            for k in 0..n {
                for l in 0..n {
                    let ops = vec![(0, i, true), (e, k, true), (e, l, false), (0, j, false)];
                    terms.push((-ints.g_en.get([i, j, k, l]), ops));
                }
            }
        }
    }
    terms.retain(|(v, _)| *v != 0.0);
    let mut h = CMatrix::identity(dim, dim) * Complex64::new(ints.core_energy, 0.0);
    for col in 0..dim {
        for (v, ops) in &terms {
            if let Some((sign, row)) = act(col, ops) {
                h[(row, col)] += Complex64::new(sign * v, 0.0);
            }
        }
    }
    h
}

/// Register index of an occupation-basis state under the layout's mappings.
pub fn encode(occupation: usize, layout: &SectorLayout) -> usize {
    let mut out = 0;
    for sector in [Sector::Electron, Sector::Nuclear] {
        let offset = layout.offset(sector);
        let modes = layout.modes(sector);
        let bits = (occupation >> offset) & ((1 << modes) - 1);
        let coded = match layout.spec(sector).mapping {
            Mapping::JordanWigner => bits,
            Mapping::Parity => (0..modes).fold(0, |acc, j| {
                acc | (((bits & ((2 << j) - 1)).count_ones() as usize & 1) << j)
            }),
        };
        out |= coded << offset;
    }
    out
}

/// Largest entry of `|H_mapped - P H_oracle P^T|` where `P` re-encodes occupations.
pub fn oracle_deviation(ints: &IntegralSet, layout: &SectorLayout, mapped: &PauliSum) -> f64 {
    let oracle = oracle_hamiltonian(ints);
    let m = mapped.to_matrix().expect("small register");
    let dim = oracle.nrows();
    let mut worst: f64 = 0.0;
    for r in 0..dim {
        for c in 0..dim {
            let d = m[(encode(r, layout), encode(c, layout))] - oracle[(r, c)];
            worst = worst.max(d.norm());
        }
    }
    worst
}

fn symmetrize4(t: &mut nedyn::hamiltonian::Tensor4, orbit: impl Fn([usize; 4]) -> Vec<[usize; 4]>) {
    let [a, b, c, d] = t.dims();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                for l in 0..d {
                    let idx = [i, j, k, l];
                    let partners = orbit(idx);
                    let mean = partners.iter().map(|&p| t.get(p)).sum::<f64>() / partners.len() as f64;
                    for p in partners {
                        t.set(p, mean);
                    }
                }
            }
        }
    }
}

/// Dense random integrals with the symmetries the builder requires.
pub fn random_integrals(e: usize, n: usize, rng: &mut impl Rng) -> IntegralSet {
    let mut ints = IntegralSet::zeros(e, n);
    ints.core_energy = rng.random_range(-1.0..1.0);
    for (h, m) in [(&mut ints.h_e, e), (&mut ints.h_n, n)] {
        for i in 0..m {
            for j in 0..=i {
                let v = rng.random_range(-1.0..1.0);
                h.set(i, j, v);
                h.set(j, i, v);
            }
        }
    }
    for t in [&mut ints.g_ee, &mut ints.g_nn, &mut ints.g_en] {
        let [a, b, c, d] = t.dims();
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    for l in 0..d {
                        t.set([i, j, k, l], rng.random_range(-0.5..0.5));
                    }
                }
            }
        }
    }
    let eight = |[i, j, k, l]: [usize; 4]| vec![[i, j, k, l], [j, i, l, k], [k, l, i, j], [l, k, j, i]];
    symmetrize4(&mut ints.g_ee, eight);
    symmetrize4(&mut ints.g_nn, eight);
    symmetrize4(&mut ints.g_en, |[i, j, k, l]| vec![[i, j, k, l], [j, i, l, k]]);
    ints
}

/// Largest coefficient left in the canonical (anti)commutation relations of a layout.
pub fn canonical_relation_error(layout: &SectorLayout) -> f64 {
    let mut ops = Vec::new();
    for sector in [Sector::Electron, Sector::Nuclear] {
        for j in 0..layout.modes(sector) {
            for kind in [Ladder::Annihilate, Ladder::Create] {
                ops.push((sector, j, kind, lower_op(sector, j, kind, layout).unwrap()));
            }
        }
    }
    let n = layout.untapered_qubits();
    let mut worst: f64 = 0.0;
    for (s1, j1, k1, a) in &ops {
        for (s2, j2, k2, b) in &ops {
            let ab = a.multiply(b).unwrap();
            let ba = b.multiply(a).unwrap();
            let residual = if s1 == s2 {
                let anti = ab.try_add(&ba).unwrap();
                if j1 == j2 && k1 != k2 {
                    anti.try_add(&PauliSum::identity(n).scale_real(-1.0)).unwrap()
                } else {
                    anti
                }
            } else {
                ab.try_add(&ba.scale_real(-1.0)).unwrap()
            };
            worst = worst.max(residual.max_abs_coefficient());
        }
    }
    worst
}
