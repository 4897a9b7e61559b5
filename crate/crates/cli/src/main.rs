use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ringlat_cli::commands::{self, Output};
use ringlat_cli::eval::Embedding;
use ringlat_cli::CliError;

#[derive(Parser)]
#[command(name = "ringlat", version, about = "Intermediate algebras of finite commutative ring extensions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice of intermediate algebras [R, S].
    Lattice {
        base: String,
        top: String,
        /// diagonal, first-factor or explicit:<i0,i1,...>
        #[arg(long, default_value = "diagonal")]
        embed: String,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Minimal-extension type and extension predicates.
    Classify {
        base: String,
        top: String,
        #[arg(long, default_value = "diagonal")]
        embed: String,
    },
    /// Seminormalization and t-closure of R in S.
    Closures {
        base: String,
        top: String,
        #[arg(long, default_value = "diagonal")]
        embed: String,
    },
    /// R inside the product of R/I_j for a separating family.
    Crt {
        ring: String,
        /// Generator lists separated by ';', e.g. "(4);(3);(3)".
        #[arg(long)]
        ideals: String,
    },
    /// Submodule census of M and the lattice of R ⊆ R(+)M.
    Idealize {
        ring: String,
        /// Direct sum of cyclic modules, e.g. "R + R/(2)".
        #[arg(long)]
        module: String,
    },
    /// Bell, Stirling and Exal counts.
    Count {
        #[command(subcommand)]
        what: CountCommand,
    },
    /// Run the verification corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    Bell {
        n: usize,
    },
    Stirling {
        n: usize,
        p: usize,
    },
    /// Distinct images of injective algebra maps R^p -> R^n.
    Exal {
        ring: String,
        p: usize,
        n: usize,
        /// Count the maps rather than their images.
        #[arg(long)]
        maps: bool,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Lattice { base, top, embed, dot } => {
            commands::lattice(base, top, &embed.parse::<Embedding>()?, dot.as_deref())
        }
        Command::Classify { base, top, embed } => commands::classify(base, top, &embed.parse()?),
        Command::Closures { base, top, embed } => commands::closures(base, top, &embed.parse()?),
        Command::Crt { ring, ideals } => commands::crt(ring, ideals),
        Command::Idealize { ring, module } => commands::idealize(ring, module),
        Command::Count { what } => match what {
            CountCommand::Bell { n } => commands::count_bell(*n),
            CountCommand::Stirling { n, p } => commands::count_stirling(*n, *p),
            CountCommand::Exal { ring, p, n, maps } => commands::count_exal(ring, *p, *n, *maps),
        },
        Command::Verify { suite } => commands::verify(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("values serialize")
                ),
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("ringlat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
