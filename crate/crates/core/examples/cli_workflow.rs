//! The command-line workflow driven from code: run a config, re-run it from
//! its metadata sidecar, compile an integral file, and sweep the step size.
//!
//! ```bash
//! cargo run --release --example cli_workflow
//! ```
//!
//! The same steps from the shell:
//!
//! ```bash
//! nedyn run crates/core/examples/configs/slow.toml
//! nedyn ground crates/core/examples/configs/integrals.toml --which m
//! nedyn map crates/core/examples/data/transfer_L.int --out h_l.pauli
//! nedyn sweep-dt crates/core/examples/configs/random.toml --dt 0.1,0.05,0.025
//! ```

use std::path::Path;

use nedyn::fermion::Mapping;
use nedyn::hamiltonian::Variant;
use nedyn::runner::{self, RunConfig, RunOverrides};

fn main() -> nedyn::Result<()> {
    let here = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let scratch = std::env::temp_dir().join("nedyn-cli-workflow");
    std::fs::create_dir_all(&scratch)?;

    let cfg = RunConfig::load(&here.join("configs/integrals.toml"))?;
    let first = runner::cmd_run(
        &cfg,
        &RunOverrides {
            csv: Some(scratch.join("run.csv")),
            ..Default::default()
        },
    )?;
    println!("{} records, final F_R {:.5}", first.records, first.last.f_r);

    // The sidecar is a complete config: running it again reproduces the CSV.
    let replay = RunConfig::load(&first.metadata)?;
    runner::cmd_run(
        &replay,
        &RunOverrides {
            csv: Some(scratch.join("replay.csv")),
            metadata: Some(scratch.join("replay.meta.toml")),
            ..Default::default()
        },
    )?;
    let same = std::fs::read(scratch.join("run.csv"))? == std::fs::read(scratch.join("replay.csv"))?;
    println!("replay from {} is byte-identical: {same}", first.metadata.display());

    let g = runner::cmd_ground(&cfg, Variant::Middle, Some(&scratch.join("ground_M.state")))?;
    println!("E0(H_M) = {:.11e}", g.energy);

    let h = runner::cmd_map(
        &here.join("data/transfer_L.int"),
        &scratch.join("h_l.pauli"),
        Mapping::JordanWigner,
    )?;
    println!("H_L: {} Pauli terms on {} qubits", h.len(), h.num_qubits());

    let sweep = RunConfig::load(&here.join("configs/random.toml"))?;
    println!("{}", runner::sweep_header());
    for row in runner::cmd_sweep_dt(&sweep, &[0.1, 0.05, 0.025], Some(&scratch.join("sweep.csv")))? {
        println!("{}", runner::sweep_row(&row));
    }

    let bad = RunConfig::parse(
        "[source]\nkind = \"synthetic\"\n[schedule]\nt_final = 10\n[propagation]\ndt = 1\nsteps = 3\n",
    )
    .and_then(|c| nedyn::runner::Prepared::new(&c).map(|_| ()));
    if let Err(e) = bad {
        println!("inconsistent steps: exit code {} ({e})", runner::exit_code(&e));
    }
    Ok(())
}
