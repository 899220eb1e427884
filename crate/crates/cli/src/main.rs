//! `comax`: command-line front end for the co-maximal hypergraph toolkit.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "comax", version, about = "Co-maximal subgroup hypergraphs of dihedral groups D_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and analyse the hypergraph for one n.
    Analyze {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Analyse a range of n and compare every invariant with its prediction.
    Sweep {
        #[command(flatten)]
        range: Range,
        /// Comma-separated subset of diameter,girth,chromatic,star,hypertree,uniform,surface.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the closed formulas against brute-force group computations.
    VerifyOracle {
        #[command(flatten)]
        range: Range,
        /// Largest n the brute-force oracle accepts.
        #[arg(long, default_value_t = comax_core::oracle::DEFAULT_ORACLE_CAP)]
        cap: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Look for a certificate that the hypergraph does or does not embed in a surface.
    Certify {
        #[arg(long)]
        n: u64,
        /// plane, torus or projective.
        #[arg(long)]
        surface: String,
        #[command(flatten)]
        output: Output,
    },
    /// Write the hypergraph, co-maximal graph or incidence graph to a file.
    Export {
        #[arg(long)]
        n: u64,
        /// hypergraph, comax-graph or incidence.
        #[arg(long)]
        what: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct Range {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
}

#[derive(Args, Debug)]
struct Output {
    /// json, text, dot or graphml (availability depends on the command).
    #[arg(long)]
    format: Option<String>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { n, output } => commands::analyze(n, &output),
        Command::Sweep { range, checks, output } => commands::sweep(range.from, range.to, checks, &output),
        Command::VerifyOracle { range, cap, output } => commands::verify_oracle(range.from, range.to, cap, &output),
        Command::Certify { n, surface, output } => commands::certify(n, &surface, &output),
        Command::Export { n, what, output } => commands::export(n, &what, &output),
    };
    match result {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
