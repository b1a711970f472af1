use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gpcoh_cli::{commands, render_text, width_from_env, Payload, ReportDocument};

#[derive(Parser)]
#[command(
    name = "gpcoh",
    version,
    about = "Cohomology of homogeneous bundles and rigidity reports"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, ρ and dimensions of a simple root system
    Roots {
        /// Cartan type A-G
        #[arg(value_name = "TYPE")]
        kind: String,
        rank: usize,
    },
    /// Borel–Weil–Bott for the irreducible bundle E_ω on G/P
    Bwb {
        #[arg(value_name = "TYPE")]
        kind: String,
        rank: usize,
        /// Crossed (1-based) nodes defining P, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        crossed: Vec<usize>,
        /// Fundamental-weight coefficients, e.g. 0,0,1,-3,0,0
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Littlewood–Richardson coefficients c^λ_{μν}
    Lr {
        /// Partition such as 2,1
        mu: String,
        nu: String,
        /// Keep partitions with at most this many rows
        #[arg(long, default_value_t = 8)]
        rows: usize,
    },
    /// Chase one twist of a Koszul scenario
    Koszul {
        /// Scenario file, or the name of a shipped scenario
        #[arg(long, default_value = "cayley.json")]
        scenario: String,
        #[arg(long)]
        twist: String,
    },
    /// Run a shipped report (cayley, vmrt, theorem1, adjunction) or a scenario file
    Report {
        #[arg(value_name = "NAME|FILE")]
        name: String,
    },
}

fn run(command: &Command) -> anyhow::Result<Payload> {
    match command {
        Command::Roots { kind, rank } => commands::roots(kind, *rank),
        Command::Bwb {
            kind,
            rank,
            crossed,
            weight,
        } => commands::bwb_cmd(kind, *rank, crossed, weight),
        Command::Lr { mu, nu, rows } => commands::lr(mu, nu, *rows),
        Command::Koszul { scenario, twist } => commands::koszul(scenario, twist),
        Command::Report { name } => commands::report(name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let payload = match run(&cli.command) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let doc = ReportDocument::new(std::env::args().skip(1).collect(), payload);
    let rendered = match cli.format {
        Format::Json => match serde_json::to_string_pretty(&doc) {
            Ok(s) => s + "\n",
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Format::Text => render_text(&doc, width_from_env()),
    };
    if let Err(e) = std::io::stdout().lock().write_all(rendered.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if doc.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
