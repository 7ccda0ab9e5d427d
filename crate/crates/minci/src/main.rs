//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use minci::cli::{self, OutputFormat};
use minci::Error;

#[derive(Parser)]
#[command(
    name = "minci",
    version,
    about = "Minimal configuration-interaction spectra for the atoms H to Ne",
    after_help = "Energies are in hartree unless --ev is given. Parallel scans honor \
                  the RAYON_NUM_THREADS environment variable."
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one atom or ion: optimized levels, gaps and reference columns
    Solve {
        /// Element symbol (H..Ne) or electron count (1..10)
        atom: String,
        /// Nuclear charge; defaults to the neutral atom
        #[arg(long)]
        charge: Option<f64>,
        #[arg(long, default_value = "table")]
        format: String,
        /// Report energies in electronvolt
        #[arg(long)]
        ev: bool,
    },
    /// Scan energies along a sequence of nuclear charges or atoms
    Scan {
        /// Electron count for an isoelectronic scan (with --z and --terms)
        #[arg(long)]
        n: Option<usize>,
        /// Charge range FROM:TO[:STEP] for the isoelectronic scan
        #[arg(long)]
        z: Option<String>,
        /// Two comma-separated term symbols, e.g. 3So,1Do
        #[arg(long)]
        terms: Option<String>,
        /// Scan first ionization energies along the neutral sequence
        #[arg(long)]
        ionization: bool,
        /// Atom range FROM:TO for --ionization
        #[arg(long, value_name = "FROM:TO")]
        z_eq_n: Option<String>,
        /// Scan neutral ground-state energies over an atom range FROM:TO
        #[arg(long, value_name = "FROM:TO")]
        ground: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        ev: bool,
    },
    /// Run the self-verification oracles (quick or full)
    Verify {
        #[arg(default_value = "quick")]
        level: String,
    },
    /// Print the fourteen canonical one- and two-body integrals
    Integrals {
        /// Nuclear charge
        #[arg(long)]
        z: f64,
        /// Use uniform screening and print the exact rationals
        #[arg(long)]
        pt: bool,
        #[arg(long)]
        z1: Option<f64>,
        #[arg(long)]
        z2: Option<f64>,
        #[arg(long)]
        z3: Option<f64>,
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Print the symbolic symmetry blocks of one atom
    Blocks {
        /// Element symbol (Li..Ne) or electron count (3..10)
        atom: String,
    },
    /// Ground-state percentage errors and gap comparisons for Li..Ne
    Errors {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Export the embedded reference dataset
    Dataset {
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(args: Args) -> Result<bool, Error> {
    match args.command {
        Command::Solve {
            atom,
            charge,
            format,
            ev,
        } => {
            print!("{}", cli::cmd_solve(&atom, charge, OutputFormat::parse(&format)?, ev)?);
            Ok(true)
        }
        Command::Scan {
            n,
            z,
            terms,
            ionization,
            z_eq_n,
            ground,
            format,
            ev,
        } => {
            let format = OutputFormat::parse(&format)?;
            let out = if ionization {
                let range = z_eq_n.ok_or_else(|| {
                    Error::Usage("--ionization needs --z-eq-n FROM:TO".into())
                })?;
                cli::cmd_scan_ionization(&range, format, ev)?
            } else if let Some(range) = ground {
                cli::cmd_scan_ground(&range, format, ev)?
            } else {
                let n = n.ok_or_else(|| Error::Usage("term scan needs --n".into()))?;
                let z = z.ok_or_else(|| Error::Usage("term scan needs --z FROM:TO".into()))?;
                let terms = terms.ok_or_else(|| Error::Usage("term scan needs --terms A,B".into()))?;
                cli::cmd_scan_terms(n, &z, &terms, format, ev)?
            };
            print!("{out}");
            Ok(true)
        }
        Command::Verify { level } => {
            let (report, passed) = cli::cmd_verify(&level)?;
            print!("{report}");
            Ok(passed)
        }
        Command::Integrals {
            z,
            pt,
            z1,
            z2,
            z3,
            format,
        } => {
            let params = match (z1, z2, z3) {
                (None, None, None) => None,
                (Some(a), Some(b), Some(c)) => Some((a, b, c)),
                _ => {
                    return Err(Error::Usage(
                        "provide all of --z1/--z2/--z3 or none".into(),
                    ))
                }
            };
            print!("{}", cli::cmd_integrals(z, params, pt, OutputFormat::parse(&format)?)?);
            Ok(true)
        }
        Command::Blocks { atom } => {
            print!("{}", cli::cmd_blocks(&atom)?);
            Ok(true)
        }
        Command::Errors { format } => {
            print!("{}", cli::cmd_errors(OutputFormat::parse(&format)?)?);
            Ok(true)
        }
        Command::Dataset { out } => {
            match out {
                Some(path) => std::fs::write(&path, cli::cmd_dataset())
                    .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{}", cli::cmd_dataset()),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
