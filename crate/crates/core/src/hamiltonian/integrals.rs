//! Integral containers and the plain-text integral file.
//!
//! ```text
//! MODES 4 3
//! E_CORE 0.0
//! HE 0 0 -0.1
//! HE 0 1 -0.05        # (1, 0) is filled in by the loader
//! HN 0 1 -0.005
//! GEE 0 0 2 2 0.05
//! GEN 0 0 0 0 0.01
//! ```
//!
//! Indices are 0-based. Unlisted entries are zero. Entries implied by
//! Hermiticity (and, for same-sector two-body terms, by particle exchange) may
//! be listed once; a listed partner must carry the same value.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Tolerance for Hermiticity checks on integral tensors.
pub const INTEGRAL_SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Dense real rank-4 tensor with per-axis extents.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4 {
    dims: [usize; 4],
    data: Vec<f64>,
}

impl Tensor4 {
    pub fn zeros(dims: [usize; 4]) -> Self {
        Tensor4 {
            dims,
            data: vec![0.0; dims.iter().product()],
        }
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    fn offset(&self, [i, j, k, l]: [usize; 4]) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2] && l < self.dims[3]);
        ((i * self.dims[1] + j) * self.dims[2] + k) * self.dims[3] + l
    }

    pub fn get(&self, idx: [usize; 4]) -> f64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: [usize; 4], value: f64) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    /// Non-zero entries in index order.
    pub fn nonzeros(&self) -> impl Iterator<Item = ([usize; 4], f64)> + '_ {
        let [_, d1, d2, d3] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(move |(o, &v)| {
                let l = o % d3;
                let k = (o / d3) % d2;
                let j = (o / (d3 * d2)) % d1;
                let i = o / (d3 * d2 * d1);
                ([i, j, k, l], v)
            })
    }
}

/// Square real matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(move |(o, &v)| (o / self.n, o % self.n, v))
    }
}

/// One- and two-body integrals of a two-component Hamiltonian (Hartree).
///
/// Attraction to classical nuclei is already folded into `h_e` (negative) and
/// `h_n` (positive); nuclear repulsion and frozen-core constants live in `core_energy`.
/// `g_en` enters the Hamiltonian with a minus sign.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralSet {
    pub h_e: Matrix,
    pub h_n: Matrix,
    pub g_ee: Tensor4,
    pub g_nn: Tensor4,
    pub g_en: Tensor4,
    pub core_energy: f64,
}

impl IntegralSet {
    pub fn zeros(electron_modes: usize, nuclear_modes: usize) -> Self {
        let (e, n) = (electron_modes, nuclear_modes);
        IntegralSet {
            h_e: Matrix::zeros(e),
            h_n: Matrix::zeros(n),
            g_ee: Tensor4::zeros([e; 4]),
            g_nn: Tensor4::zeros([n; 4]),
            g_en: Tensor4::zeros([e, e, n, n]),
            core_energy: 0.0,
        }
    }

    pub fn electron_modes(&self) -> usize {
        self.h_e.dim()
    }

    pub fn nuclear_modes(&self) -> usize {
        self.h_n.dim()
    }

    /// Consistent shapes, finite entries, and the Hermiticity pattern of the Hamiltonian.
    pub fn validate(&self) -> Result<()> {
        let (e, n) = (self.electron_modes(), self.nuclear_modes());
        if self.g_ee.dims() != [e; 4] || self.g_nn.dims() != [n; 4] || self.g_en.dims() != [e, e, n, n] {
            return Err(Error::Shape(format!(
                "tensor extents {:?} / {:?} / {:?} inconsistent with {e} electron and {n} nuclear modes",
                self.g_ee.dims(),
                self.g_nn.dims(),
                self.g_en.dims()
            )));
        }
        let finite = self.core_energy.is_finite()
            && self.h_e.data.iter().chain(&self.h_n.data).all(|v| v.is_finite())
            && [&self.g_ee, &self.g_nn, &self.g_en]
                .iter()
                .all(|t| t.data.iter().all(|v| v.is_finite()));
        if !finite {
            return Err(Error::Validation("non-finite integral".into()));
        }
        let close = |a: f64, b: f64| (a - b).abs() <= INTEGRAL_SYMMETRY_TOLERANCE;
        for (name, h) in [("h_e", &self.h_e), ("h_n", &self.h_n)] {
            for (i, j, v) in h.nonzeros() {
                if !close(v, h.get(j, i)) {
                    return Err(Error::Validation(format!("{name}[{i}][{j}] != {name}[{j}][{i}]")));
                }
            }
        }
        for (name, g) in [("g_ee", &self.g_ee), ("g_nn", &self.g_nn)] {
            for ([i, j, k, l], v) in g.nonzeros() {
                for partner in [[j, i, l, k], [k, l, i, j]] {
                    if !close(v, g.get(partner)) {
                        return Err(Error::Validation(format!(
                            "{name}{:?} = {v} but partner {name}{partner:?} = {}",
                            [i, j, k, l],
                            g.get(partner)
                        )));
                    }
                }
            }
        }
        for ([i, j, k, l], v) in self.g_en.nonzeros() {
            if !close(v, self.g_en.get([j, i, l, k])) {
                return Err(Error::Validation(format!(
                    "g_en{:?} is not matched by g_en{:?}",
                    [i, j, k, l],
                    [j, i, l, k]
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    He,
    Hn,
    Gee,
    Gnn,
    Gen,
}

impl Block {
    fn keyword(self) -> &'static str {
        match self {
            Block::He => "HE",
            Block::Hn => "HN",
            Block::Gee => "GEE",
            Block::Gnn => "GNN",
            Block::Gen => "GEN",
        }
    }

    /// Index tuples whose entries must equal the listed one.
    fn orbit(self, idx: &[usize]) -> Vec<Vec<usize>> {
        match (self, idx) {
            (Block::He | Block::Hn, &[i, j]) => vec![vec![i, j], vec![j, i]],
            (Block::Gee | Block::Gnn, &[i, j, k, l]) => {
                vec![vec![i, j, k, l], vec![j, i, l, k], vec![k, l, i, j], vec![l, k, j, i]]
            }
            (Block::Gen, &[i, j, k, l]) => vec![vec![i, j, k, l], vec![j, i, l, k]],
            _ => unreachable!("index arity checked by the parser"),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parse the integral file format; symmetric partners are filled in.
pub fn parse_integrals(text: &str) -> Result<IntegralSet> {
    let mut modes: Option<(usize, usize)> = None;
    let mut core: Option<f64> = None;
    // (block, index) -> (value, line where it was fixed)
    let mut entries: BTreeMap<(Block, Vec<usize>), (f64, usize)> = BTreeMap::new();
    let mut listed: BTreeMap<(Block, Vec<usize>), usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let keyword = tokens[0];
        let Some((ne, nn)) = modes else {
            if keyword != "MODES" {
                return Err(Error::parse(
                    line,
                    "the first entry must be `MODES <electron> <nuclear>`",
                ));
            }
            let [_, e, n] = tokens.as_slice() else {
                return Err(Error::parse(line, "expected `MODES <electron> <nuclear>`"));
            };
            let parse = |t: &str| -> Result<usize> {
                t.parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::parse(line, format!("bad mode count {t:?}")))
            };
            modes = Some((parse(e)?, parse(n)?));
            continue;
        };
        let (block, extents): (Block, Vec<usize>) = match keyword {
            "MODES" => return Err(Error::parse(line, "duplicate MODES line")),
            "E_CORE" => {
                let [_, v] = tokens.as_slice() else {
                    return Err(Error::parse(line, "expected `E_CORE <value>`"));
                };
                if core.is_some() {
                    return Err(Error::parse(line, "duplicate E_CORE line"));
                }
                core = Some(parse_value(v, line)?);
                continue;
            }
            "HE" => (Block::He, vec![ne, ne]),
            "HN" => (Block::Hn, vec![nn, nn]),
            "GEE" => (Block::Gee, vec![ne; 4]),
            "GNN" => (Block::Gnn, vec![nn; 4]),
            "GEN" => (Block::Gen, vec![ne, ne, nn, nn]),
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        };
        if tokens.len() != extents.len() + 2 {
            return Err(Error::parse(
                line,
                format!("{keyword} takes {} indices and a value", extents.len()),
            ));
        }
        let mut index = Vec::with_capacity(extents.len());
        for (t, &extent) in tokens[1..=extents.len()].iter().zip(&extents) {
            let i: usize = t.parse().map_err(|_| Error::parse(line, format!("bad index {t:?}")))?;
            if i >= extent {
                return Err(Error::parse(line, format!("index {i} out of range 0..{extent}")));
            }
            index.push(i);
        }
        let value = parse_value(tokens[extents.len() + 1], line)?;
        if let Some(first) = listed.insert((block, index.clone()), line) {
            return Err(Error::parse(
                line,
                format!("{keyword} {index:?} already listed on line {first}"),
            ));
        }
        for partner in block.orbit(&index) {
            match entries.get(&(block, partner.clone())) {
                Some(&(existing, origin)) => {
                    if (existing - value).abs() > INTEGRAL_SYMMETRY_TOLERANCE {
                        return Err(Error::parse(
                            line,
                            format!(
                                "{keyword} {index:?} = {value} conflicts with symmetric partner {partner:?} = {existing} (line {origin})"
                            ),
                        ));
                    }
                }
                None => {
                    entries.insert((block, partner), (value, line));
                }
            }
        }
    }

    let (ne, nn) = modes.ok_or_else(|| Error::parse(1, "missing `MODES <electron> <nuclear>` line"))?;
    let mut ints = IntegralSet::zeros(ne, nn);
    ints.core_energy = core.unwrap_or(0.0);
    for ((block, idx), (value, _)) in entries {
        match block {
            Block::He => ints.h_e.set(idx[0], idx[1], value),
            Block::Hn => ints.h_n.set(idx[0], idx[1], value),
            Block::Gee => ints.g_ee.set([idx[0], idx[1], idx[2], idx[3]], value),
            Block::Gnn => ints.g_nn.set([idx[0], idx[1], idx[2], idx[3]], value),
            Block::Gen => ints.g_en.set([idx[0], idx[1], idx[2], idx[3]], value),
        }
    }
    ints.validate()?;
    Ok(ints)
}

fn parse_value(token: &str, line: usize) -> Result<f64> {
    token
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::parse(line, format!("bad value {token:?}")))
}

/// Write every non-zero entry (partners included) with 17 significant digits.
pub fn write_integrals(ints: &IntegralSet) -> String {
    let mut out = format!("MODES {} {}\n", ints.electron_modes(), ints.nuclear_modes());
    let _ = writeln!(out, "E_CORE {:.16e}", ints.core_energy);
    for (block, h) in [(Block::He, &ints.h_e), (Block::Hn, &ints.h_n)] {
        for (i, j, v) in h.nonzeros() {
            let _ = writeln!(out, "{} {i} {j} {v:.16e}", block.keyword());
        }
    }
    for (block, g) in [
        (Block::Gee, &ints.g_ee),
        (Block::Gnn, &ints.g_nn),
        (Block::Gen, &ints.g_en),
    ] {
        for ([i, j, k, l], v) in g.nonzeros() {
            let _ = writeln!(out, "{} {i} {j} {k} {l} {v:.16e}", block.keyword());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loader_fills_partners() {
        let ints =
            parse_integrals("# tiny\nMODES 2 2\nE_CORE 0.5\nHE 0 1 -0.2\nGEE 0 1 0 1 0.1\nGEN 0 1 0 1 0.03\n").unwrap();
        assert_eq!(ints.core_energy, 0.5);
        assert_eq!(ints.h_e.get(1, 0), -0.2);
        assert_eq!(ints.g_ee.get([1, 0, 1, 0]), 0.1);
        assert_eq!(ints.g_en.get([1, 0, 1, 0]), 0.03);
        // exchange partner of (0,1,0,1) is itself; no spurious entries
        assert_eq!(ints.g_ee.nonzeros().count(), 2);
    }

    #[test]
    fn missing_modes_is_rejected() {
        let err = parse_integrals("HE 0 0 1.0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_integrals("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn conflicting_partner_is_rejected() {
        let err = parse_integrals("MODES 2 1\nHE 0 1 0.1\nHE 1 0 0.2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        // consistent partner is fine
        parse_integrals("MODES 2 1\nHE 0 1 0.1\nHE 1 0 0.1\n").unwrap();
    }

    #[test]
    fn duplicate_entry_is_rejected() {
        let err = parse_integrals("MODES 2 1\nHE 0 1 0.1\nHE 0 1 0.1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn index_and_value_errors() {
        assert!(matches!(
            parse_integrals("MODES 2 1\nHN 1 0 0.1\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_integrals("MODES 2 1\nHE 0 0 abc\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_integrals("MODES 2 1\nGEN 0 0 0 0\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_integrals("MODES 2 1\nFOO 1\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn validate_catches_asymmetry() {
        let mut ints = IntegralSet::zeros(2, 1);
        ints.h_e.set(0, 1, 0.3);
        assert!(matches!(ints.validate(), Err(Error::Validation(_))));
        ints.h_e.set(1, 0, 0.3);
        ints.validate().unwrap();
        ints.g_en.set([0, 1, 0, 0], 0.1);
        assert!(ints.validate().is_err());
        ints.g_en.set([1, 0, 0, 0], 0.1);
        ints.validate().unwrap();
        ints.core_energy = f64::NAN;
        assert!(ints.validate().is_err());
    }

    #[test]
    fn write_then_parse_round_trips() {
        let ints = parse_integrals(
            "MODES 2 2\nE_CORE -1.25\nHE 0 0 -0.5\nHE 0 1 0.1\nHN 0 1 -0.005\nGEE 0 0 1 1 0.2\nGNN 0 1 1 0 0.01\nGEN 1 1 0 0 0.03\n",
        )
        .unwrap();
        assert_eq!(parse_integrals(&write_integrals(&ints)).unwrap(), ints);
    }
}
