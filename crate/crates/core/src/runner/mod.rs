//! Batch front end behind the `nedyn` binary.
//!
//! Each command takes a [`RunConfig`] and writes plain-text artifacts:
//!
//! - `run`: time-series CSV, optional reference CSV and a metadata sidecar
//!   that is itself a runnable config;
//! - `ground`: ground energy on stdout and the amplitudes to a state file;
//! - `sweep-dt`: a convergence table over step sizes;
//! - `map`: integral file to Pauli-sum file.
//!
//! CSV columns, in order: `t, E, E_L, E_M, E_R, n_L, n_M, n_R, n_e<k>...,
//! entropy, F_L, F_M, F_R, norm, N_e, N_p`. Floats carry 17 significant digits.

mod config;

pub use config::{
    LayoutConfig, ObservablesConfig, OutputConfig, Particles, PlanConfig, ReferenceConfig, RunConfig, ScheduleConfig,
    Source,
};

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fermion::{Mapping, Sector, SectorLayout};
use crate::hamiltonian::{build_hamiltonian, parse_integrals, Schedule, Variant};
use crate::observables::{entanglement_entropy, fidelity, NumberOperatorBank, Partition};
use crate::pauli::{
    parse_pauli_sum, write_pauli_sum, PauliString, PauliSum, PauliTerm, StateVector, DENSE_QUBIT_LIMIT,
};
use crate::propagate::{evolve_into, propagate, Drive, Observer, PropagationPlan, Propagator, TimeSeriesRecord};
use crate::spectral::{ground_state_in, GroundState, Subspace};

/// Process exit status for an error: 2 input/config, 3 numerical invariant, 4 resource guard.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Numerical { .. } => 3,
        Error::Resource(_) => 4,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

/// Three random Hermitian sums of `terms` non-identity strings each.
pub fn random_hamiltonians(qubits: usize, terms: usize, scale: f64, seed: u64) -> Result<[PauliSum; 3]> {
    if qubits == 0 || qubits > 30 || terms == 0 {
        return Err(Error::Config(format!(
            "random source needs 1..=30 qubits and terms >= 1, got {qubits}, {terms}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let mut out = Vec::with_capacity(terms);
        while out.len() < terms {
            let x = rng.random::<u64>() & ((1u64 << qubits) - 1);
            let z = rng.random::<u64>() & ((1u64 << qubits) - 1);
            if x == 0 && z == 0 {
                continue;
            }
            let c = scale * (2.0 * rng.random::<f64>() - 1.0);
            out.push(PauliTerm::real(c, PauliString::from_masks(qubits, x, z)?)?);
        }
        PauliSum::from_terms(qubits, out)?.into_hermitian()
    };
    Ok([draw()?, draw()?, draw()?])
}

/// `(H_L, H_M, H_R)` for the configured source on `layout`.
pub fn load_hamiltonians(cfg: &RunConfig, layout: &SectorLayout) -> Result<[PauliSum; 3]> {
    let hs = match &cfg.source {
        Source::Synthetic(model) => {
            let (l, m, r) = model.hamiltonians_on(layout)?;
            [l, m, r]
        }
        Source::Integrals { left, middle, right } => {
            let load = |p: &PathBuf| build_hamiltonian(&with_file(p, parse_integrals(&read(p)?))?, layout);
            [load(left)?, load(middle)?, load(right)?]
        }
        Source::Pauli { left, middle, right } => {
            let load = |p: &PathBuf| with_file(p, parse_pauli_sum(&read(p)?))?.into_hermitian();
            [load(left)?, load(middle)?, load(right)?]
        }
        Source::Random { qubits, terms, scale } => random_hamiltonians(*qubits, *terms, *scale, cfg.seed)?,
    };
    for h in &hs {
        if h.num_qubits() != layout.qubits() {
            return Err(Error::Config(format!(
                "Hamiltonian acts on {} qubits but the layout has {}",
                h.num_qubits(),
                layout.qubits()
            )));
        }
    }
    Ok(hs)
}

/// Everything a run needs, built from a config.
pub struct Prepared {
    pub config: RunConfig,
    pub layout: SectorLayout,
    pub schedule: Schedule,
    pub plan: PropagationPlan,
    pub drive: Drive,
    pub bank: NumberOperatorBank,
    pub subspace: Subspace,
}

impl Prepared {
    pub fn new(cfg: &RunConfig) -> Result<Self> {
        let config = cfg.resolved()?;
        let layout = config.resolved_layout()?;
        let schedule = config.schedule.build()?;
        let plan = config.propagation.build(&schedule)?;
        let exact_reference = config
            .reference
            .as_ref()
            .is_some_and(|r| r.enabled && r.propagator == Propagator::Exact);
        if (plan.propagator() == Propagator::Exact || exact_reference) && layout.qubits() > DENSE_QUBIT_LIMIT {
            return Err(Error::Resource(format!(
                "exact propagation on {} qubits exceeds the dense limit of {DENSE_QUBIT_LIMIT}",
                layout.qubits()
            )));
        }
        let [l, m, r] = load_hamiltonians(&config, &layout)?;
        let drive = Drive::new(l, m, r)?;
        let bank = NumberOperatorBank::new(&layout)?;
        let subspace = match config.particles {
            Some(p) => Subspace::from_constraints(
                layout.qubits(),
                &[
                    (bank.total(Sector::Electron), p.electrons as f64),
                    (bank.total(Sector::Nuclear), p.nuclei as f64),
                ],
            )
            .map_err(|e| Error::Config(format!("particle sector {p:?}: {e}")))?,
            None => Subspace::full(layout.qubits()),
        };
        for &s in &config.observables.sites {
            if s >= layout.modes(Sector::Nuclear) {
                return Err(Error::Config(format!("site mode {s} exceeds the nuclear mode count")));
            }
        }
        for &m in config.observables.tracked_modes.as_deref().unwrap_or(&[]) {
            if m >= layout.modes(Sector::Electron) {
                return Err(Error::Config(format!("tracked electron mode {m} out of range")));
            }
        }
        Ok(Prepared {
            config,
            layout,
            schedule,
            plan,
            drive,
            bank,
            subspace,
        })
    }

    pub fn hamiltonian(&self, which: Variant) -> &PauliSum {
        match which {
            Variant::Left => self.drive.left(),
            Variant::Middle => self.drive.middle(),
            Variant::Right => self.drive.right(),
        }
    }

    /// Ground state of one of the three Hamiltonians inside the configured particle sector.
    pub fn ground(&self, which: Variant) -> Result<GroundState> {
        ground_state_in(self.hamiltonian(which), &self.subspace)
    }

    pub fn observer(&self, references: [StateVector; 3]) -> Observer {
        Observer {
            bank: self.bank.clone(),
            partition: Partition::from_layout(&self.layout),
            references,
            sites: self.config.observables.sites,
            tracked: self.config.observables.tracked_modes.clone().unwrap_or_default(),
        }
    }

    /// Ground states of `H_L`, `H_M`, `H_R`; the first must be non-degenerate.
    pub fn references(&self) -> Result<[GroundState; 3]> {
        let [l, m, r] = Variant::ALL.map(|v| self.ground(v));
        let l = l?;
        if l.degenerate {
            return Err(Error::Validation(
                "the ground state of H_L is degenerate; add a symmetry-breaking term to pick an initial state".into(),
            ));
        }
        Ok([l, m?, r?])
    }
}

pub fn csv_columns(tracked: &[usize]) -> Vec<String> {
    let mut cols: Vec<String> = ["t", "E", "E_L", "E_M", "E_R", "n_L", "n_M", "n_R"]
        .map(String::from)
        .to_vec();
    cols.extend(tracked.iter().map(|m| format!("n_e{m}")));
    cols.extend(["entropy", "F_L", "F_M", "F_R", "norm", "N_e", "N_p"].map(String::from));
    cols
}

pub fn csv_header(tracked: &[usize]) -> String {
    csv_columns(tracked).join(",")
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_values(r: &TimeSeriesRecord) -> Vec<String> {
    let mut v = vec![r.t, r.energy, r.e_l, r.e_m, r.e_r, r.n_l, r.n_m, r.n_r];
    v.extend(&r.electron_occupations);
    v.extend([r.entropy, r.f_l, r.f_m, r.f_r, r.norm, r.n_electron, r.n_proton]);
    v.into_iter().map(fmt).collect()
}

pub fn csv_row(r: &TimeSeriesRecord) -> String {
    csv_values(r).join(",")
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::parse(line, format!("{other:?}")),
    }
}

/// Parse a CSV written by [`csv_header`] / [`csv_row`] back into columns.
pub fn read_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().map_err(csv_error)?.iter().map(String::from).collect();
    if header.iter().all(String::is_empty) {
        return Err(Error::parse(1, "empty CSV"));
    }
    let rows = reader
        .records()
        .enumerate()
        .map(|(i, rec)| {
            rec.map_err(csv_error)?
                .iter()
                .map(|f| f.parse::<f64>().map_err(|e| Error::parse(i + 2, e.to_string())))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((header, rows))
}

fn csv_writer(path: &Path) -> Result<csv::Writer<File>> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    Ok(csv::Writer::from_writer(File::create(path)?))
}

struct CsvSink {
    out: csv::Writer<File>,
}

impl CsvSink {
    fn create(path: &Path, tracked: &[usize]) -> Result<Self> {
        let mut out = csv_writer(path)?;
        out.write_record(csv_columns(tracked)).map_err(csv_error)?;
        Ok(CsvSink { out })
    }

    fn push(&mut self, r: &TimeSeriesRecord) -> Result<()> {
        self.out.write_record(csv_values(r)).map_err(csv_error)?;
        self.out.flush()?;
        Ok(())
    }
}

/// Output path overrides from the command line.
#[derive(Debug, Clone, Default)]
pub struct RunOverrides {
    pub csv: Option<PathBuf>,
    pub metadata: Option<PathBuf>,
    pub reference_csv: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct RunSummary {
    pub csv: PathBuf,
    pub metadata: PathBuf,
    pub records: usize,
    pub last: TimeSeriesRecord,
    pub reference_last: Option<TimeSeriesRecord>,
    /// `1 - |<psi|psi_ref>|^2` at `t_f`.
    pub reference_infidelity: Option<f64>,
    pub max_electron_drift: f64,
    pub max_proton_drift: f64,
    pub max_norm_drift: f64,
    pub wall_time_s: f64,
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("run");
    path.with_file_name(format!("{stem}{suffix}"))
}

/// Ground states, propagation, CSV and sidecar.
pub fn cmd_run(cfg: &RunConfig, overrides: &RunOverrides) -> Result<RunSummary> {
    let start = Instant::now();
    let prepared = Prepared::new(cfg)?;
    let mut resolved = prepared.config.clone();
    let csv_path = overrides
        .csv
        .clone()
        .or_else(|| resolved.output.csv.clone())
        .ok_or_else(|| Error::Config("no CSV output path (set output.csv or pass --csv)".into()))?;
    let meta_path = overrides
        .metadata
        .clone()
        .or_else(|| resolved.output.metadata.clone())
        .unwrap_or_else(|| sibling(&csv_path, ".meta.toml"));
    let reference_path = overrides
        .reference_csv
        .clone()
        .or_else(|| resolved.output.reference_csv.clone())
        .unwrap_or_else(|| sibling(&csv_path, ".reference.csv"));

    let grounds = prepared.references()?;
    let references = grounds.clone().map(|g| g.state);
    let observer = prepared.observer(references);
    let tracked = observer.tracked.clone();
    let initial = grounds[0].state.clone();

    let mut sink = CsvSink::create(&csv_path, &tracked)?;
    let mut first: Option<TimeSeriesRecord> = None;
    let mut last: Option<TimeSeriesRecord> = None;
    let mut count = 0usize;
    let (mut de, mut dp) = (0.0f64, 0.0f64);
    let evolution = evolve_into(
        &initial,
        &prepared.drive,
        &prepared.schedule,
        &prepared.plan,
        &observer,
        |r| {
            let f = first.get_or_insert_with(|| r.clone());
            de = de.max((r.n_electron - f.n_electron).abs());
            dp = dp.max((r.n_proton - f.n_proton).abs());
            count += 1;
            last = Some(r.clone());
            sink.push(r)
        },
    )?;
    let last = last.expect("at least the initial record");

    let mut reference_last = None;
    let mut reference_infidelity = None;
    if let Some(rc) = resolved.reference.as_ref().filter(|r| r.enabled) {
        let plan = rc.build(&prepared.schedule, &prepared.plan)?;
        let mut rsink = CsvSink::create(&reference_path, &tracked)?;
        let mut rl = None;
        let ev = evolve_into(&initial, &prepared.drive, &prepared.schedule, &plan, &observer, |r| {
            rl = Some(r.clone());
            rsink.push(r)
        })?;
        reference_infidelity = Some(1.0 - fidelity(&evolution.final_state, &ev.final_state)?);
        reference_last = rl;
        resolved.output.reference_csv = Some(reference_path.clone());
    }

    let wall = start.elapsed().as_secs_f64();
    resolved.output.csv = Some(csv_path.clone());
    resolved.output.metadata = Some(meta_path.clone());
    let mut info = toml::Table::new();
    info.insert("version".into(), env!("CARGO_PKG_VERSION").into());
    info.insert("wall_time_s".into(), wall.into());
    info.insert("records".into(), (count as i64).into());
    info.insert("steps".into(), (prepared.plan.n_steps() as i64).into());
    info.insert("qubits".into(), (prepared.layout.qubits() as i64).into());
    info.insert(
        "pauli_strings".into(),
        (prepared.drive.term_order().len() as i64).into(),
    );
    info.insert(
        "ground_energies".into(),
        grounds.iter().map(|g| g.energy).collect::<Vec<f64>>().into(),
    );
    info.insert("max_electron_number_drift".into(), de.into());
    info.insert("max_proton_number_drift".into(), dp.into());
    info.insert("max_norm_drift".into(), evolution.max_norm_drift.into());
    info.insert("final_norm".into(), last.norm.into());
    if let Some(x) = reference_infidelity {
        info.insert("reference_infidelity".into(), x.into());
    }
    resolved.run_info = Some(info);
    if let Some(dir) = meta_path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(&meta_path, resolved.to_toml()?)?;

    Ok(RunSummary {
        csv: csv_path,
        metadata: meta_path,
        records: count,
        last,
        reference_last,
        reference_infidelity,
        max_electron_drift: de,
        max_proton_drift: dp,
        max_norm_drift: evolution.max_norm_drift,
        wall_time_s: wall,
    })
}

#[derive(Debug, Clone)]
pub struct GroundReport {
    pub energy: f64,
    pub degenerate: bool,
    pub state_path: PathBuf,
}

/// Write amplitudes as `index re im` lines.
pub fn write_state(path: &Path, state: &StateVector) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "# qubits {}", state.num_qubits())?;
    for (i, a) in state.amplitudes().iter().enumerate() {
        writeln!(out, "{i} {} {}", fmt(a.re), fmt(a.im))?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_state(text: &str) -> Result<StateVector> {
    let mut amps = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [i, re, im] = f[..] else {
            return Err(Error::parse(k + 1, "expected `index re im`"));
        };
        let num = |s: &str| s.parse::<f64>().map_err(|e| Error::parse(k + 1, e.to_string()));
        let i: usize = i.parse().map_err(|_| Error::parse(k + 1, format!("bad index `{i}`")))?;
        if i != amps.len() {
            return Err(Error::parse(k + 1, format!("expected index {}, found {i}", amps.len())));
        }
        amps.push(Complex64::new(num(re)?, num(im)?));
    }
    StateVector::from_amplitudes(amps)
}

/// Ground state of one Hamiltonian; the state file defaults to `ground_<X>.state` in `output.states`.
pub fn cmd_ground(cfg: &RunConfig, which: Variant, state_path: Option<&Path>) -> Result<GroundReport> {
    let prepared = Prepared::new(cfg)?;
    let g = prepared.ground(which)?;
    let path = match state_path {
        Some(p) => p.to_path_buf(),
        None => prepared
            .config
            .output
            .states
            .clone()
            .unwrap_or_else(|| PathBuf::from("."))
            .join(format!("ground_{}.state", which.label())),
    };
    write_state(&path, &g.state)?;
    Ok(GroundReport {
        energy: g.energy,
        degenerate: g.degenerate,
        state_path: path,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub dt: f64,
    pub steps: usize,
    /// `|<psi(t_f)|psi_ref(t_f)>|^2`.
    pub fidelity: Option<f64>,
    /// `||psi(t_f) - psi_ref(t_f)||`.
    pub error: Option<f64>,
    pub entropy: f64,
    /// `|s(t_f) - s_ref(t_f)|`.
    pub residual_entropy: Option<f64>,
    pub wall_time_s: f64,
    /// `log2(error_prev / error) / log2(dt_prev / dt)`.
    pub order: Option<f64>,
}

pub fn sweep_header() -> &'static str {
    "dt,steps,fidelity,error,entropy,residual_entropy,wall_time_s,order"
}

fn sweep_values(r: &SweepRow) -> [String; 8] {
    let opt = |x: Option<f64>| x.map_or_else(|| "NA".to_string(), fmt);
    [
        fmt(r.dt),
        r.steps.to_string(),
        opt(r.fidelity),
        opt(r.error),
        fmt(r.entropy),
        opt(r.residual_entropy),
        format!("{:.3}", r.wall_time_s),
        opt(r.order),
    ]
}

pub fn sweep_row(r: &SweepRow) -> String {
    sweep_values(r).join(",")
}

/// Endpoint accuracy of the configured propagator over a list of step sizes.
pub fn cmd_sweep_dt(cfg: &RunConfig, dts: &[f64], out: Option<&Path>) -> Result<Vec<SweepRow>> {
    if dts.is_empty() {
        return Err(Error::Config("sweep needs at least one dt".into()));
    }
    let prepared = Prepared::new(cfg)?;
    let partition = Partition::from_layout(&prepared.layout);
    let initial = prepared.references()?[0].state.clone();
    let main = &prepared.config.propagation;

    let reference = match prepared.config.reference.as_ref().filter(|r| r.enabled) {
        Some(rc) => {
            let plan = PropagationPlan::for_schedule(&prepared.schedule, rc.dt, rc.propagator, usize::MAX)?;
            let state = propagate(&initial, &prepared.drive, &prepared.schedule, &plan)?.final_state;
            let entropy = entanglement_entropy(&state, &partition)?;
            Some((state, entropy))
        }
        None => None,
    };

    let mut rows: Vec<SweepRow> = Vec::with_capacity(dts.len());
    for &dt in dts {
        let start = Instant::now();
        let plan = PropagationPlan::for_schedule(&prepared.schedule, dt, main.propagator, usize::MAX)?;
        let state = propagate(&initial, &prepared.drive, &prepared.schedule, &plan)?.final_state;
        let entropy = entanglement_entropy(&state, &partition)?;
        let (fid, error, residual) = match &reference {
            Some((rs, re)) => (
                Some(fidelity(&state, rs)?),
                Some(state.distance(rs)?),
                Some((entropy - re).abs()),
            ),
            None => (None, None, None),
        };
        let order = match (rows.last(), error) {
            (Some(prev), Some(e)) => prev.error.map(|pe| (pe / e).log2() / (prev.dt / dt).log2()),
            _ => None,
        };
        rows.push(SweepRow {
            dt,
            steps: plan.n_steps(),
            fidelity: fid,
            error,
            entropy,
            residual_entropy: residual,
            wall_time_s: start.elapsed().as_secs_f64(),
            order,
        });
    }

    let path = out
        .map(Path::to_path_buf)
        .or_else(|| prepared.config.output.sweep.clone());
    if let Some(path) = path {
        let mut out = csv_writer(&path)?;
        out.write_record(sweep_header().split(',')).map_err(csv_error)?;
        for r in &rows {
            out.write_record(sweep_values(r)).map_err(csv_error)?;
        }
        out.flush()?;
    }
    Ok(rows)
}

/// Compile an integral file into a Pauli-sum file with the same mapping in both sectors.
pub fn cmd_map(integrals: &Path, out: &Path, mapping: Mapping) -> Result<PauliSum> {
    let ints = with_file(integrals, parse_integrals(&read(integrals)?))?;
    let layout = SectorLayout::new(ints.electron_modes(), ints.nuclear_modes())?
        .with_mapping(Sector::Electron, mapping)
        .with_mapping(Sector::Nuclear, mapping);
    let h = build_hamiltonian(&ints, &layout)?;
    if let Some(dir) = out.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(out, write_pauli_sum(&h))?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::parse(3, "x")), 2);
        assert_eq!(exit_code(&Error::Config("x".into())), 2);
        assert_eq!(exit_code(&Error::numerical("norm", "x")), 3);
        assert_eq!(exit_code(&Error::Resource("x".into())), 4);
    }

    #[test]
    fn csv_header_layout() {
        assert_eq!(
            csv_header(&[0, 2]),
            "t,E,E_L,E_M,E_R,n_L,n_M,n_R,n_e0,n_e2,entropy,F_L,F_M,F_R,norm,N_e,N_p"
        );
    }

    #[test]
    fn csv_floats_round_trip() {
        let x = 0.1f64 + 0.2;
        assert_eq!(fmt(x).parse::<f64>().unwrap(), x);
        assert_eq!(fmt(-1.0 / 3.0).parse::<f64>().unwrap(), -1.0 / 3.0);
    }

    #[test]
    fn state_file_round_trip() {
        let s = StateVector::normalized(vec![Complex64::new(0.3, -0.1), Complex64::new(0.0, 0.7)]).unwrap();
        let dir = std::env::temp_dir().join(format!("nedyn-state-{}", std::process::id()));
        let p = dir.join("s.state");
        write_state(&p, &s).unwrap();
        let back = read_state(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(back, s);
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn random_source_is_seeded() {
        let a = random_hamiltonians(4, 10, 1.0, 9).unwrap();
        let b = random_hamiltonians(4, 10, 1.0, 9).unwrap();
        let c = random_hamiltonians(4, 10, 1.0, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(PauliSum::is_hermitian));
    }
}
