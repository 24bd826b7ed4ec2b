use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hudg::proton::Strategy;
use hudg_cli::{
    cmd_convert, cmd_cover, cmd_eval, cmd_generate, cmd_label, cmd_route, init_thread_pool,
    GenerateKind,
};

#[derive(Parser)]
#[command(
    name = "hudg",
    version,
    about = "Hyperbolic unit disk graphs: generation, tree covers, routing labels, and greedy-routing evaluation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hrg,
    Shudg,
    EuclideanGrid,
}

impl From<KindArg> for GenerateKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Hrg => GenerateKind::Hrg,
            KindArg::Shudg => GenerateKind::Shudg,
            KindArg::EuclideanGrid => GenerateKind::EuclideanGrid,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    RadiallyIncreasing,
    DegreeDecreasing,
    IdOrder,
}

impl From<StrategyArg> for Strategy {
    fn from(strategy: StrategyArg) -> Self {
        match strategy {
            StrategyArg::RadiallyIncreasing => Strategy::RadiallyIncreasing,
            StrategyArg::DegreeDecreasing => Strategy::DegreeDecreasing,
            StrategyArg::IdOrder => Strategy::IdOrder,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated disk representation.
    Generate {
        /// Instance family.
        kind: KindArg,
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Threshold radius; defaults to max(2 ln n, 1) for hrg and 1.0 for
        /// euclidean-grid, required for shudg.
        #[arg(long)]
        r: Option<f64>,
        /// Radial density parameter of the hyperbolic samplers.
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Embed a Euclidean representation into the Poincaré disk, preserving
    /// the unit disk graph exactly.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Certificate destination; defaults to the output path with a
        /// `.cert` extension.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Compute a tree cover of a graph (edge list) or representation.
    Cover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        a: f64,
        #[arg(long, default_value_t = 2.0)]
        b: f64,
        /// Defaults to radially-increasing for representations and
        /// degree-decreasing for edge lists.
        #[arg(long)]
        strategy: Option<StrategyArg>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the per-vertex routing labels of a cover.
    Label {
        /// The host graph the cover was computed over.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Route explicit source-target pairs and report their stretch.
    Route {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        /// File with one `source target` pair per line.
        #[arg(long)]
        pairs_file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample random pairs, route them, and write per-pair and summary CSVs.
    Eval {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Defaults to the output path with a `.summary.csv` extension.
        #[arg(long)]
        summary_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            kind,
            n,
            r,
            alpha,
            seed,
            out,
        } => cmd_generate(kind.into(), n, r, alpha, seed, &out),
        Command::Convert { input, out, cert } => cmd_convert(&input, &out, cert.as_deref()),
        Command::Cover {
            input,
            a,
            b,
            strategy,
            out,
        } => cmd_cover(&input, a, b, strategy.map(Into::into), &out),
        Command::Label { graph, input, out } => cmd_label(&graph, &input, &out),
        Command::Route {
            graph,
            labels,
            pairs_file,
            out,
        } => cmd_route(&graph, &labels, &pairs_file, &out),
        Command::Eval {
            graph,
            labels,
            pairs,
            seed,
            out,
            summary_out,
        } => cmd_eval(&graph, &labels, pairs, seed, &out, summary_out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("hudg: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
