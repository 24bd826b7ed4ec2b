//! Command implementations behind the `hudg` binary. Each command reads and
//! writes the documented file formats; the binary maps [`CliError::Input`]
//! to exit code 2 and [`CliError::Invariant`] to exit code 1.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use hudg::error::Error;
use hudg::graph::{read_edge_list, Graph};
use hudg::labels::{build_cover_labels, read_label_store, write_label_store};
use hudg::proton::{compute_tree_cover, read_cover, write_cover, ProtonParams, Strategy};
use hudg::repr::{
    build_udg, euclidean_grid, euclidean_to_hyperbolic, format_f64, read_representation,
    sample_hrg, sample_strongly_hyperbolic_udg, write_representation, DiskRepresentation,
};
use hudg::router::{measure_stretch, write_routes_csv, write_summary_csv, PairSpec};

/// Errors split by exit code: bad input (2) versus violated invariants (1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Invariant(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::InvariantViolation(_) => CliError::Invariant(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

pub type CliResult = Result<(), CliError>;

fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// A graph input: either a representation file (geometry available) or a
/// plain edge list.
pub struct GraphInput {
    pub graph: Graph,
    pub rep: Option<DiskRepresentation>,
}

/// Loads a graph file, sniffing representation files by their `hudg 1`
/// header and treating everything else as an edge list.
pub fn load_graph_input(path: &Path) -> Result<GraphInput, CliError> {
    let mut reader = open(path)?;
    let mut first = String::new();
    reader.read_line(&mut first)?;
    let is_rep = first.starts_with("hudg 1 ");
    let reader = open(path)?;
    if is_rep {
        let rep = read_representation(reader)?;
        let graph = build_udg(&rep)?;
        Ok(GraphInput {
            graph,
            rep: Some(rep),
        })
    } else {
        let (graph, _) = read_edge_list(reader)?;
        Ok(GraphInput { graph, rep: None })
    }
}

/// Instance families the `generate` command can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerateKind {
    /// Hyperbolic random graph; disk radius defaults to `max(2 ln n, 1)`.
    Hrg,
    /// Strongly hyperbolic unit disk graph with an explicit radius.
    Shudg,
    /// Unit-spacing Euclidean grid.
    EuclideanGrid,
}

pub fn cmd_generate(
    kind: GenerateKind,
    n: usize,
    radius: Option<f64>,
    alpha: f64,
    seed: u64,
    out: &Path,
) -> CliResult {
    let rep = match kind {
        GenerateKind::Hrg => sample_hrg(n, radius, alpha, seed)?,
        GenerateKind::Shudg => {
            let r = radius.ok_or_else(|| {
                CliError::Input("shudg generation needs an explicit --r".into())
            })?;
            sample_strongly_hyperbolic_udg(n, r, alpha, seed)?
        }
        GenerateKind::EuclideanGrid => euclidean_grid(n, radius.unwrap_or(1.0))?,
    };
    let mut writer = create(out)?;
    write_representation(&rep, &mut writer)?;
    writer.flush()?;
    println!(
        "generated {} representation: n = {}, R = {}",
        rep.metric(),
        rep.len(),
        format_f64(rep.threshold())
    );
    Ok(())
}

pub fn cmd_convert(input: &Path, out: &Path, cert_out: Option<&Path>) -> CliResult {
    let rep = read_representation(open(input)?)?;
    let (converted, cert) = euclidean_to_hyperbolic(&rep)?;
    let mut writer = create(out)?;
    write_representation(&converted, &mut writer)?;
    writer.flush()?;

    let tau = if cert.tau.is_finite() {
        format_f64(cert.tau)
    } else {
        "inf".to_string()
    };
    let cert_text = format!(
        "hudgcert 1\nrho_star {}\ntau {}\ng_hat {}\ng_check {}\nr_e_rho {}\nr_h {}\n",
        format_f64(cert.rho_star),
        tau,
        format_f64(cert.g_hat),
        format_f64(cert.g_check),
        format_f64(cert.r_e_rho),
        format_f64(cert.r_h)
    );
    let cert_path: PathBuf = cert_out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| out.with_extension("cert"));
    let mut cert_writer = create(&cert_path)?;
    cert_writer.write_all(cert_text.as_bytes())?;
    cert_writer.flush()?;
    print!("{cert_text}");
    Ok(())
}

pub fn cmd_cover(
    input: &Path,
    a: f64,
    b: f64,
    strategy: Option<Strategy>,
    out: &Path,
) -> CliResult {
    let loaded = load_graph_input(input)?;
    let strategy = strategy.unwrap_or(if loaded.rep.is_some() {
        Strategy::RadiallyIncreasing
    } else {
        Strategy::DegreeDecreasing
    });
    let params = ProtonParams::new(a, b, strategy)?;
    let cover = compute_tree_cover(&loaded.graph, loaded.rep.as_ref(), &params)?;
    let mut writer = create(out)?;
    write_cover(&cover, &mut writer)?;
    writer.flush()?;
    let stats = hudg::proton::cover_stats(&cover);
    println!(
        "cover: {} trees over {} vertices, k_max = {}, strategy = {}",
        stats.num_trees,
        loaded.graph.vertex_count(),
        stats.k_max,
        strategy.name()
    );
    Ok(())
}

pub fn cmd_label(graph_path: &Path, cover_path: &Path, out: &Path) -> CliResult {
    let loaded = load_graph_input(graph_path)?;
    let cover = read_cover(open(cover_path)?)?;
    cover.validate_against(&loaded.graph)?;
    let labels = build_cover_labels(&loaded.graph, &cover)?;
    let mut writer = create(out)?;
    write_label_store(&labels, &mut writer)?;
    writer.flush()?;
    let stats = hudg::labels::label_stats(&labels);
    println!(
        "labels: {} vertices, max {} bits, total {} bytes",
        labels.len(),
        stats.max_bits,
        stats.total_bytes
    );
    Ok(())
}

/// Reads a pairs file: one `source target` pair of internal vertex ids per
/// line, `#`/`%` comments allowed.
pub fn read_pairs(path: &Path, n: usize) -> Result<Vec<(u32, u32)>, CliError> {
    let reader = open(path)?;
    let mut pairs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let mut field = |what: &str| -> Result<u32, CliError> {
            let tok = parts.next().ok_or_else(|| {
                CliError::Input(format!("line {}: missing {what}", lineno + 1))
            })?;
            let id: u32 = tok.parse().map_err(|e| {
                CliError::Input(format!("line {}: bad {what}: {e}", lineno + 1))
            })?;
            if id as usize >= n {
                return Err(CliError::Input(format!(
                    "line {}: vertex {id} out of range for n = {n}",
                    lineno + 1
                )));
            }
            Ok(id)
        };
        let s = field("source")?;
        let t = field("target")?;
        pairs.push((s, t));
    }
    Ok(pairs)
}

pub fn cmd_route(
    graph_path: &Path,
    labels_path: &Path,
    pairs_path: &Path,
    out: &Path,
) -> CliResult {
    let loaded = load_graph_input(graph_path)?;
    let labels = read_label_store(open(labels_path)?)?;
    if labels.len() != loaded.graph.vertex_count() {
        return Err(CliError::Input(format!(
            "label store covers {} vertices, graph has {}",
            labels.len(),
            loaded.graph.vertex_count()
        )));
    }
    let pairs = read_pairs(pairs_path, labels.len())?;
    let (records, summary) =
        measure_stretch(&loaded.graph, &labels, &PairSpec::Explicit(pairs))?;
    let mut writer = create(out)?;
    write_routes_csv(&records, &mut writer)?;
    writer.flush()?;
    println!(
        "routed {} of {} pairs ({} across components skipped)",
        summary.delivered, summary.pairs_requested, summary.skipped_cross_component
    );
    Ok(())
}

pub fn cmd_eval(
    graph_path: &Path,
    labels_path: &Path,
    pairs: usize,
    seed: u64,
    out: &Path,
    summary_out: Option<&Path>,
) -> CliResult {
    let loaded = load_graph_input(graph_path)?;
    let labels = read_label_store(open(labels_path)?)?;
    if labels.len() != loaded.graph.vertex_count() {
        return Err(CliError::Input(format!(
            "label store covers {} vertices, graph has {}",
            labels.len(),
            loaded.graph.vertex_count()
        )));
    }
    let (records, summary) = measure_stretch(
        &loaded.graph,
        &labels,
        &PairSpec::Sampled { count: pairs, seed },
    )?;
    let mut writer = create(out)?;
    write_routes_csv(&records, &mut writer)?;
    writer.flush()?;
    let summary_path: PathBuf = summary_out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| out.with_extension("summary.csv"));
    let mut writer = create(&summary_path)?;
    write_summary_csv(&summary, &mut writer)?;
    writer.flush()?;
    println!(
        "eval: {} pairs, {} delivered, {} skipped, median stretch {}, max stretch {}",
        summary.pairs_requested,
        summary.delivered,
        summary.skipped_cross_component,
        format_f64(summary.median),
        format_f64(summary.max_stretch)
    );
    Ok(())
}

/// Applies the `HUDG_THREADS` cap to the global thread pool. Must run
/// before any parallel work; later calls are ignored.
pub fn init_thread_pool() {
    if let Ok(threads) = std::env::var("HUDG_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}
