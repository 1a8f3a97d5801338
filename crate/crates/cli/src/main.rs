use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dng::catalog;
use dng::oracle::DEFAULT_POSITION_BUDGET;
use dng_cli::{
    cmd_analyze, cmd_diagram, cmd_verify, parse_catalog, AnalyzeOptions, CliError, DiagramKind,
};

/// Nim-numbers of the avoidance game "do not generate" on finite groups.
///
/// Group expressions: Zn (cyclic), Dn (dihedral of order 2n), Dicn
/// (dicyclic of order 4n), Sn, An, Dih(A) for abelian A, and products
/// `G x H`. SL(2,3) and GL(2,3) are accepted by name.
#[derive(Parser)]
#[command(name = "dng", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classifier, solver and oracle nim-numbers for one group.
    Analyze {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Skip the structure-digraph solver.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        no_oracle: bool,
        /// Analyze G/N for N the largest odd normal subgroup inside the Frattini subgroup.
        #[arg(long)]
        mod_frattini: bool,
        /// Oracle position budget.
        #[arg(long, default_value_t = DEFAULT_POSITION_BUDGET)]
        budget: usize,
    },
    /// DOT text for the structure diagram, its simplification, or the subgroup lattice.
    Diagram {
        spec: String,
        #[arg(long, conflicts_with = "lattice")]
        simplified: bool,
        #[arg(long)]
        lattice: bool,
    },
    /// CSV survey over the catalog; exits 4 on any disagreement.
    Verify {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        /// File with one group expression per line, replacing the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_POSITION_BUDGET)]
        budget: usize,
        #[arg(long)]
        no_oracle: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            spec,
            json,
            fast,
            no_oracle,
            mod_frattini,
            budget,
        } => {
            let opts = AnalyzeOptions {
                fast,
                oracle: !no_oracle,
                mod_frattini,
                budget,
            };
            let report = cmd_analyze(&spec, opts)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if !report.agree {
                return Err(CliError::Disagreement(report.name));
            }
        }
        Command::Diagram {
            spec,
            simplified,
            lattice,
        } => {
            let kind = if lattice {
                DiagramKind::Lattice
            } else if simplified {
                DiagramKind::Simplified
            } else {
                DiagramKind::Structure
            };
            print!("{}", cmd_diagram(&spec, kind)?);
        }
        Command::Verify {
            max_order,
            catalog: file,
            budget,
            no_oracle,
        } => {
            let entries = match file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?;
                    parse_catalog(&text)?
                }
                None => catalog::entries(),
            };
            let report = cmd_verify(entries, max_order, budget, !no_oracle)?;
            print!("{}", report.to_csv());
            eprintln!("{}", report.summary());
            let bad = report.disagreements();
            if !bad.is_empty() {
                let names: Vec<&str> = bad.iter().map(|r| r.name.as_str()).collect();
                return Err(CliError::Disagreement(names.join(", ")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dng: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
