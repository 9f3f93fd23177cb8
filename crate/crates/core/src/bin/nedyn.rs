use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nedyn::fermion::Mapping;
use nedyn::hamiltonian::Variant;
use nedyn::runner::{self, RunConfig, RunOverrides};
use nedyn::Error;

/// Electron-nuclear statevector dynamics.
///
/// Set NEDYN_THREADS to bound the worker threads used by large-register kernels.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// Suppress the summary printed on success.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prepare the H_L ground state, drive it to H_R and record the time series.
    Run {
        config: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        metadata: Option<PathBuf>,
        #[arg(long)]
        reference_csv: Option<PathBuf>,
    },
    /// Ground state of one of the three Hamiltonians.
    Ground {
        config: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        /// State file (defaults to ground_<X>.state under output.states).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Endpoint convergence of the configured propagator over step sizes.
    SweepDt {
        config: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        dt: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compile an integral file to a Pauli-sum file.
    Map {
        integrals: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "jordan-wigner")]
        mapping: MappingArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    L,
    M,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum MappingArg {
    JordanWigner,
    Parity,
}

fn configure_threads() -> Result<(), Error> {
    let Ok(value) = std::env::var("NEDYN_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Config(format!("NEDYN_THREADS must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Config(e.to_string()))
}

fn execute(cli: Cli) -> Result<(), Error> {
    configure_threads()?;
    match cli.command {
        Command::Run {
            config,
            csv,
            metadata,
            reference_csv,
        } => {
            let cfg = RunConfig::load(&config)?;
            let s = runner::cmd_run(
                &cfg,
                &RunOverrides {
                    csv,
                    metadata,
                    reference_csv,
                },
            )?;
            if !cli.quiet {
                let r = &s.last;
                println!("records      {}", s.records);
                println!("csv          {}", s.csv.display());
                println!("metadata     {}", s.metadata.display());
                println!("final F_L/F_M/F_R  {:.6} {:.6} {:.6}", r.f_l, r.f_m, r.f_r);
                println!("final n_L/n_M/n_R  {:.6} {:.6} {:.6}", r.n_l, r.n_m, r.n_r);
                println!("final entropy      {:.6e}", r.entropy);
                println!("norm drift         {:.3e}", s.max_norm_drift);
                if let Some(x) = s.reference_infidelity {
                    println!("reference infidelity {x:.3e}");
                }
                println!("wall time          {:.2} s", s.wall_time_s);
            }
        }
        Command::Ground { config, which, out } => {
            let cfg = RunConfig::load(&config)?;
            let variant = match which {
                Which::L => Variant::Left,
                Which::M => Variant::Middle,
                Which::R => Variant::Right,
            };
            let g = runner::cmd_ground(&cfg, variant, out.as_deref())?;
            if g.degenerate {
                eprintln!(
                    "warning: ground level of H_{} is degenerate; the state is one arbitrary member",
                    variant.label()
                );
            }
            println!("{:.11e}", g.energy);
            if !cli.quiet {
                eprintln!("state written to {}", g.state_path.display());
            }
        }
        Command::SweepDt { config, dt, out } => {
            let cfg = RunConfig::load(&config)?;
            let rows = runner::cmd_sweep_dt(&cfg, &dt, out.as_deref())?;
            if !cli.quiet {
                println!("{}", runner::sweep_header());
                for r in &rows {
                    println!("{}", runner::sweep_row(r));
                }
            }
        }
        Command::Map {
            integrals,
            out,
            mapping,
        } => {
            let mapping = match mapping {
                MappingArg::JordanWigner => Mapping::JordanWigner,
                MappingArg::Parity => Mapping::Parity,
            };
            let h = runner::cmd_map(&integrals, &out, mapping)?;
            if !cli.quiet {
                println!("{} terms on {} qubits -> {}", h.len(), h.num_qubits(), out.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(runner::exit_code(&e) as u8)
        }
    }
}
