use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kmatch::harness::{self, ReportRecord};
use kmatch::io::read_graph;

#[derive(Parser)]
#[command(name = "kmatch", version, about = "Exact and certified k-edge-colorable subgraphs of cubic graphs")]
struct Cli {
    /// Fill elapsed_ms in report records (otherwise null, so reruns diff clean).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact ν_k of a graph with an optimal family.
    Nu {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
        file: PathBuf,
    },
    /// Certificate for a cubic graph.
    Certify { file: PathBuf },
    /// Exact values and every inequality on many cubic graphs.
    Verify(VerifyArgs),
    /// All connected cubic multigraphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerated graphs attaining a bound with equality.
    SearchTight {
        #[arg(long)]
        n: usize,
        /// nu1_2_5, nu2_4_5, nu3_7_6 or arithmetical_mean
        #[arg(long)]
        bound: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Every cubic multigraph with up to this many vertices.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    max_n: Option<usize>,
    /// Number of random cubic graphs.
    #[arg(long, requires = "n")]
    random: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn run(cli: Cli) -> kmatch::error::Result<Vec<ReportRecord>> {
    harness::configure_workers()?;
    let t = cli.timing;
    match cli.command {
        Command::Nu { k, file } => Ok(vec![harness::nu_record(&read_graph(file)?, k.into(), t)?]),
        Command::Certify { file } => Ok(vec![harness::certify_record(&read_graph(file)?, t)?]),
        Command::Verify(v) => match (v.max_n, v.random) {
            (Some(max_n), _) => harness::verify_exhaustive(max_n, t),
            (None, Some(count)) => harness::verify_random(count, v.n.expect("required by clap"), v.seed, t),
            (None, None) => unreachable!("clap requires one mode"),
        },
        Command::Enumerate { n, out } => harness::enumerate_records(n, out.as_deref()),
        Command::SearchTight { n, bound } => harness::search_tight_records(n, &bound, t),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(records) => {
            for r in &records {
                println!("{}", r.to_json());
            }
            let failed = records.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                eprintln!("{failed} of {} graphs failed", records.len());
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
