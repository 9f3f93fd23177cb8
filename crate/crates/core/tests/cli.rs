//! End-to-end runs of the `nedyn` binary.

use std::path::Path;
use std::process::{Command, Output};

use nedyn::fermion::{Mapping, Sector, SectorLayout};
use nedyn::hamiltonian::{build_hamiltonian, parse_integrals};
use nedyn::pauli::parse_pauli_sum;
use nedyn::runner::read_csv;

fn nedyn(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nedyn"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SHORT: &str = r#"
seed = 1
[source]
kind = "synthetic"
coupling = 0.017
detuning = 0.044
barrier = 0.024
en_coupling = 0.064
orbital_energy = 0.0
electron_hopping = 0.034
hubbard = 0.0015
relaxation = 0.008
[schedule]
t_final = 400.0
[propagation]
dt = 1.0
stride = 4
[observables]
tracked_modes = [0, 1]
[output]
csv = "out/short.csv"
"#;

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn run_writes_csv_and_a_replayable_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "short.toml", SHORT);
    let out = nedyn(&["run", &cfg, "--quiet"], &[]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let csv = std::fs::read_to_string(dir.path().join("out/short.csv")).unwrap();
    let (header, rows) = read_csv(&csv).unwrap();
    assert_eq!(rows.len(), 101);
    assert!((rows[0][column(&header, "F_L")] - 1.0).abs() < 1e-9);
    assert_eq!(rows[100][column(&header, "t")], 400.0);
    let mid = &rows[50];
    assert_eq!(mid[0], 200.0);
    assert!(header.contains(&"n_e1".to_string()) && !header.contains(&"n_e2".to_string()));

    let sidecar = dir.path().join("out/short.meta.toml");
    let meta = std::fs::read_to_string(&sidecar).unwrap();
    assert!(meta.contains("[run_info]") && meta.contains("seed = 1"));
    let replay = dir.path().join("replay.csv");
    let out = nedyn(
        &[
            "run",
            sidecar.to_str().unwrap(),
            "--csv",
            replay.to_str().unwrap(),
            "--metadata",
            dir.path().join("r.toml").to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read(&replay).unwrap(), csv.as_bytes());
}

#[test]
fn mirror_symmetry_at_the_midpoint_of_a_slow_drive() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "slow.toml",
        &SHORT
            .replace("t_final = 400.0", "t_final = 4000.0")
            .replace("stride = 4", "stride = 100"),
    );
    assert_eq!(code(&nedyn(&["run", &cfg, "--quiet"], &[])), 0);
    let (header, rows) = read_csv(&std::fs::read_to_string(dir.path().join("out/short.csv")).unwrap()).unwrap();
    let mid = rows.iter().find(|r| r[0] == 2000.0).unwrap();
    let (e_l, e_r) = (mid[column(&header, "E_L")], mid[column(&header, "E_R")]);
    assert!((e_l - e_r).abs() < 1e-3, "E_L {e_l} vs E_R {e_r}");
    let (n_l, n_r) = (mid[column(&header, "n_L")], mid[column(&header, "n_R")]);
    assert!((n_l - n_r).abs() < 1e-2);
}

#[test]
fn ground_prints_the_energy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", SHORT);
    let energy = |which: &str| -> f64 {
        let out = nedyn(
            &[
                "ground",
                &cfg,
                "--which",
                which,
                "--quiet",
                "--out",
                dir.path().join(format!("{which}.state")).to_str().unwrap(),
            ],
            &[],
        );
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        String::from_utf8(out.stdout).unwrap().trim().parse().unwrap()
    };
    let (l, m, r) = (energy("l"), energy("m"), energy("r"));
    assert!((l - r).abs() < 1e-10 && m > l);
    assert!(dir.path().join("m.state").exists());
}

#[test]
fn map_compiles_integral_files() {
    let dir = tempfile::tempdir().unwrap();
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/transfer_L.int");
    for (flag, mapping) in [("jordan-wigner", Mapping::JordanWigner), ("parity", Mapping::Parity)] {
        let out_path = dir.path().join(format!("{flag}.pauli"));
        let out = nedyn(
            &[
                "map",
                data.to_str().unwrap(),
                "--out",
                out_path.to_str().unwrap(),
                "--mapping",
                flag,
            ],
            &[],
        );
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let written = parse_pauli_sum(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
        let ints = parse_integrals(&std::fs::read_to_string(&data).unwrap()).unwrap();
        let layout = SectorLayout::new(4, 3)
            .unwrap()
            .with_mapping(Sector::Electron, mapping)
            .with_mapping(Sector::Nuclear, mapping);
        let built = build_hamiltonian(&ints, &layout).unwrap();
        assert!(written.try_add(&built.scale_real(-1.0)).unwrap().max_abs_coefficient() < 1e-15);
    }
}

#[test]
fn sweep_reports_first_order_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "r.toml",
        "seed = 5\n[source]\nkind = \"random\"\nqubits = 4\nterms = 8\n[schedule]\nt_final = 5.0\n[propagation]\ndt = 0.1\n[reference]\npropagator = \"exact\"\ndt = 0.001\n",
    );
    let csv = dir.path().join("sweep.csv");
    let out = nedyn(
        &[
            "sweep-dt",
            &cfg,
            "--dt",
            "0.05,0.025",
            "--out",
            csv.to_str().unwrap(),
            "--quiet",
        ],
        &[("NEDYN_THREADS", "2")],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = read_csv(&std::fs::read_to_string(&csv).unwrap().replace("NA", "NaN")).unwrap();
    let order = rows[1][column(&header, "order")];
    assert!((0.8..1.2).contains(&order), "order {order}");
}

#[test]
fn configuration_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_steps = write(
        dir.path(),
        "a.toml",
        &SHORT.replace("stride = 4", "stride = 4\nsteps = 399"),
    );
    let unknown = write(
        dir.path(),
        "b.toml",
        &SHORT.replace("[observables]", "[observables]\ncolour = 3"),
    );
    let missing = dir.path().join("missing.toml");
    for args in [
        vec!["run", bad_steps.as_str()],
        vec!["run", unknown.as_str()],
        vec!["run", missing.to_str().unwrap()],
        vec!["ground", bad_steps.as_str(), "--which", "q"],
    ] {
        let out = nedyn(&args, &[]);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let cfg = write(dir.path(), "ok.toml", SHORT);
    assert_eq!(code(&nedyn(&["run", &cfg], &[("NEDYN_THREADS", "zero")])), 2);
}

#[test]
fn numerical_failure_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "blowup.toml",
        "seed = 5\n[source]\nkind = \"random\"\nqubits = 4\nterms = 8\nscale = 50.0\n[schedule]\nt_final = 10.0\n[propagation]\ndt = 1.0\npropagator = \"rk4\"\n[output]\ncsv = \"x.csv\"\n",
    );
    let out = nedyn(&["run", &cfg], &[]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn resource_guard_exits_with_four() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "big.toml",
        "[source]\nkind = \"random\"\nqubits = 13\nterms = 20\n[schedule]\nt_final = 1.0\n[propagation]\ndt = 0.5\npropagator = \"exact\"\n[output]\ncsv = \"x.csv\"\n",
    );
    let out = nedyn(&["run", &cfg], &[]);
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn ground_of_a_single_z_string_is_minus_one() {
    let dir = tempfile::tempdir().unwrap();
    let z = write(dir.path(), "z.pauli", "qubits 4\nZIII 1 0\n");
    let cfg = write(
        dir.path(),
        "p.toml",
        &format!(
            "[source]\nkind = \"pauli\"\nleft = \"{z}\"\nmiddle = \"{z}\"\nright = \"{z}\"\n[layout]\nelectron_modes = 2\nnuclear_modes = 2\n[observables]\nsites = [0, 1, 1]\n[schedule]\nt_final = 1.0\n[propagation]\ndt = 0.5\n"
        ),
    );
    let out = nedyn(
        &[
            "ground",
            &cfg,
            "--which",
            "l",
            "--out",
            dir.path().join("z.state").to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let e: f64 = String::from_utf8(out.stdout).unwrap().trim().parse().unwrap();
    assert_eq!(e, -1.0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
}

#[test]
fn sweep_on_the_slow_drive_shrinks_the_residual_entropy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/configs/slow.toml");
    let csv = dir.path().join("sweep.csv");
    let out = nedyn(
        &[
            "sweep-dt",
            cfg.to_str().unwrap(),
            "--dt",
            "1.0,0.5",
            "--out",
            csv.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = read_csv(&std::fs::read_to_string(&csv).unwrap().replace("NA", "NaN")).unwrap();
    let k = column(&header, "residual_entropy");
    assert!(rows[1][k] < rows[0][k], "{} vs {}", rows[1][k], rows[0][k]);
}

#[test]
fn single_dt_sweep_without_reference_marks_errors_absent() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "r.toml",
        "seed = 5\n[source]\nkind = \"random\"\nqubits = 4\nterms = 8\n[schedule]\nt_final = 1.0\n[propagation]\ndt = 0.1\n",
    );
    let csv = dir.path().join("s.csv");
    let out = nedyn(&["sweep-dt", &cfg, "--dt", "0.1", "--out", csv.to_str().unwrap()], &[]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row.split(',').filter(|f| *f == "NA").count(), 4);
}
