use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use magic_polygons::cli;
use magic_polygons::search::{SearchCaps, SearchConfig, SearchMode};

/// Construct, verify, enumerate and render magic polygons.
#[derive(Parser)]
#[command(name = "magic-polygon", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the closed-form magic n-gon for an even n as JSON.
    Construct {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a labeling document and print the verification report.
    Verify { input: PathBuf },
    /// Count all magic n-gons by backtracking search.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "pruned", value_parser = ["pruned", "exhaustive"])]
        mode: String,
        /// Search canonical representatives only.
        #[arg(long)]
        up_to_symmetry: bool,
        /// Include the sorted canonical solutions in the output.
        #[arg(long)]
        emit: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        /// Emit at most this many solutions.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = SearchCaps::default().exhaustive_max)]
        exhaustive_cap: usize,
        #[arg(long, default_value_t = SearchCaps::default().pruned_odd_max)]
        pruned_odd_cap: usize,
        #[arg(long, default_value_t = SearchCaps::default().pruned_even_max)]
        pruned_even_cap: usize,
    },
    /// Row-reduce the odd-order systems and print the proof report.
    ProveOdd {
        /// Largest k in the numeric sweep; 0 skips it.
        #[arg(long, default_value_t = cli::DEFAULT_SWEEP_MAX)]
        sweep_max: u64,
    },
    /// Draw a labeling document as SVG.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the value-range partition behind the even construction.
    CheckRanges { n: usize },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match args.command {
        Command::Construct { n, output } => {
            cli::cmd_construct(n, output.as_deref(), &mut out, &mut err)
        }
        Command::Verify { input } => cli::cmd_verify(&input, &mut out, &mut err),
        Command::Enumerate {
            n,
            mode,
            up_to_symmetry,
            emit,
            workers,
            limit,
            exhaustive_cap,
            pruned_odd_cap,
            pruned_even_cap,
        } => {
            let mode: SearchMode = mode.parse().expect("restricted by clap");
            let config = SearchConfig::new(mode)
                .up_to_symmetry(up_to_symmetry)
                .emit(emit)
                .workers(workers as usize)
                .limit(limit)
                .caps(SearchCaps {
                    exhaustive_max: exhaustive_cap,
                    pruned_odd_max: pruned_odd_cap,
                    pruned_even_max: pruned_even_cap,
                });
            cli::cmd_enumerate(n, &config, &mut out, &mut err)
        }
        Command::ProveOdd { sweep_max } => cli::cmd_prove_odd(sweep_max, &mut out, &mut err),
        Command::Render { input, output } => {
            cli::cmd_render(&input, output.as_deref(), &mut out, &mut err)
        }
        Command::CheckRanges { n } => cli::cmd_check_ranges(n, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
