//! Greedy routing with respect to the cover semi-metric, plus stretch
//! measurement against a BFS shortest-path oracle.
//!
//! At each step the current vertex queries the minimum tree distance to the
//! target over the trees both share and forwards along that tree's next-hop
//! port. The cover distance is integral and drops by at least one per hop,
//! so delivery always succeeds within the initial cover distance.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::labels::{self, RoutingLabel};
use crate::repr::format_f64;

/// One routed source-target pair.
#[derive(Debug, Clone, PartialEq)]
pub struct RouteRecord {
    pub source: u32,
    pub target: u32,
    /// Vertex sequence from source to target; consecutive entries are
    /// host-graph neighbors.
    pub path: Vec<u32>,
    /// Edge count of `path`.
    pub routed_len: u32,
    /// BFS shortest-path length.
    pub shortest_len: u32,
    /// `routed_len / shortest_len`; 1 by convention when source = target.
    pub stretch_mult: f64,
    /// `routed_len - shortest_len`.
    pub stretch_add: u32,
    /// Graph id of the tree chosen at each hop.
    pub hop_tree_ids: Vec<u32>,
}

/// Routes from `source` to `target` and measures the result against a BFS
/// shortest path. Fails when the vertices lie in different components or
/// when the per-hop descent invariant breaks (which valid labels never do).
pub fn route(
    source: u32,
    target: u32,
    labels: &[RoutingLabel],
    graph: &Graph,
) -> Result<RouteRecord> {
    let shortest = graph.bfs_distances(source)[target as usize];
    if source != target && shortest == UNREACHABLE {
        return Err(Error::DifferentComponents { from_vertex: source, to_vertex: target });
    }
    route_with_shortest(source, target, shortest, labels, graph)
}

fn route_with_shortest(
    source: u32,
    target: u32,
    shortest_len: u32,
    labels: &[RoutingLabel],
    graph: &Graph,
) -> Result<RouteRecord> {
    if source == target {
        return Ok(RouteRecord {
            source,
            target,
            path: vec![source],
            routed_len: 0,
            shortest_len: 0,
            stretch_mult: 1.0,
            stretch_add: 0,
            hop_tree_ids: Vec::new(),
        });
    }
    let target_label = &labels[target as usize];
    let (initial, mut tree_id) = labels::cover_distance(&labels[source as usize], target_label)
        .ok_or(Error::DifferentComponents { from_vertex: source, to_vertex: target })?;
    let budget = initial + 1;

    let mut cur = source;
    let mut d_cur = initial;
    let mut path = vec![source];
    let mut hop_tree_ids = Vec::new();
    while cur != target {
        if path.len() as u32 - 1 > budget {
            return Err(Error::InvariantViolation(format!(
                "route {source} -> {target} exceeded its hop budget of {budget}"
            )));
        }
        let missing = || {
            Error::InvariantViolation(format!(
                "vertex label misses tree {tree_id} chosen for routing"
            ))
        };
        let s_entry = labels[cur as usize].entry(tree_id).ok_or_else(missing)?;
        let t_entry = target_label.entry(tree_id).ok_or_else(missing)?;
        let port = labels::tree_next_hop_port(s_entry, t_entry)?;
        let next = graph.port_to_neighbor(cur, port).ok_or_else(|| {
            Error::InvariantViolation(format!("port {port} at vertex {cur} has no neighbor"))
        })?;
        path.push(next);
        hop_tree_ids.push(tree_id);

        let (d_next, id_next) = labels::cover_distance(&labels[next as usize], target_label)
            .ok_or(Error::DifferentComponents {
                from_vertex: next,
                to_vertex: target,
            })?;
        if d_next >= d_cur {
            return Err(Error::InvariantViolation(format!(
                "cover distance to {target} did not decrease at {next}: {d_next} >= {d_cur}"
            )));
        }
        cur = next;
        d_cur = d_next;
        tree_id = id_next;
    }

    let routed_len = path.len() as u32 - 1;
    Ok(RouteRecord {
        source,
        target,
        path,
        routed_len,
        shortest_len,
        stretch_mult: f64::from(routed_len) / f64::from(shortest_len),
        stretch_add: routed_len - shortest_len,
        hop_tree_ids,
    })
}

/// Which source-target pairs to measure.
#[derive(Debug, Clone)]
pub enum PairSpec {
    /// `count` pairs with distinct endpoints, drawn uniformly with a seed.
    Sampled { count: usize, seed: u64 },
    /// All unordered pairs.
    Exhaustive,
    /// Caller-provided pairs.
    Explicit(Vec<(u32, u32)>),
}

/// Aggregate statistics over the delivered routes of one measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct StretchSummary {
    pub pairs_requested: usize,
    pub delivered: usize,
    /// Pairs whose endpoints share no tree, i.e. lie in different
    /// components; they are skipped, not errors.
    pub skipped_cross_component: usize,
    pub median: f64,
    pub p25: f64,
    pub p75: f64,
    pub p0_1: f64,
    pub p99_9: f64,
    pub max_stretch: f64,
    pub max_additive: u32,
    /// Fraction of delivered routes with multiplicative stretch at most 1.5.
    pub frac_le_1_5: f64,
    pub k_max: usize,
    pub k_mean: f64,
}

/// Nearest-rank percentile of a sorted slice; `q` in (0, 1].
fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Routes the requested pairs and summarizes their stretch. Pairs across
/// components are skipped and counted. Pair processing is parallelized but
/// records keep the pair order, so results are independent of thread count.
pub fn measure_stretch(
    graph: &Graph,
    labels: &[RoutingLabel],
    spec: &PairSpec,
) -> Result<(Vec<RouteRecord>, StretchSummary)> {
    let n = graph.vertex_count() as u32;
    let pairs: Vec<(u32, u32)> = match spec {
        PairSpec::Sampled { count, seed } => {
            if n < 2 {
                Vec::new()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let s = rng.gen_range(0..n);
                        let mut t = rng.gen_range(0..n);
                        while t == s {
                            t = rng.gen_range(0..n);
                        }
                        (s, t)
                    })
                    .collect()
            }
        }
        PairSpec::Exhaustive => (0..n)
            .flat_map(|s| ((s + 1)..n).map(move |t| (s, t)))
            .collect(),
        PairSpec::Explicit(list) => {
            for &(s, t) in list {
                if s >= n || t >= n {
                    return Err(Error::InvalidParameter(format!(
                        "pair ({s}, {t}) references a vertex >= {n}"
                    )));
                }
            }
            list.clone()
        }
    };
    let pairs_requested = pairs.len();

    // group by source so each group runs one BFS
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by_key(|&i| pairs[i].0);
    let mut groups: Vec<(u32, Vec<(usize, u32)>)> = Vec::new();
    for i in order {
        let (s, t) = pairs[i];
        match groups.last_mut() {
            Some((src, list)) if *src == s => list.push((i, t)),
            _ => groups.push((s, vec![(i, t)])),
        }
    }

    let routed: Vec<Vec<(usize, Option<RouteRecord>)>> = groups
        .par_iter()
        .map(|(source, targets)| {
            let dist = graph.bfs_distances(*source);
            targets
                .iter()
                .map(|&(idx, target)| {
                    let d = dist[target as usize];
                    if *source != target && d == UNREACHABLE {
                        Ok((idx, None))
                    } else {
                        route_with_shortest(*source, target, d, labels, graph)
                            .map(|r| (idx, Some(r)))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut slots: Vec<Option<RouteRecord>> = vec![None; pairs_requested];
    let mut skipped = 0usize;
    for (idx, record) in routed.into_iter().flatten() {
        match record {
            Some(r) => slots[idx] = Some(r),
            None => skipped += 1,
        }
    }
    let records: Vec<RouteRecord> = slots.into_iter().flatten().collect();

    let mut stretches: Vec<f64> = records.iter().map(|r| r.stretch_mult).collect();
    stretches.sort_by(f64::total_cmp);
    let stats = labels::label_stats(labels);
    let le_15 = stretches.iter().filter(|&&s| s <= 1.5).count();
    let summary = StretchSummary {
        pairs_requested,
        delivered: records.len(),
        skipped_cross_component: skipped,
        median: percentile(&stretches, 0.5),
        p25: percentile(&stretches, 0.25),
        p75: percentile(&stretches, 0.75),
        p0_1: percentile(&stretches, 0.001),
        p99_9: percentile(&stretches, 0.999),
        max_stretch: stretches.last().copied().unwrap_or(f64::NAN),
        max_additive: records.iter().map(|r| r.stretch_add).max().unwrap_or(0),
        frac_le_1_5: if records.is_empty() {
            f64::NAN
        } else {
            le_15 as f64 / records.len() as f64
        },
        k_max: stats.k_max,
        k_mean: stats.k_mean,
    };
    Ok((records, summary))
}

/// Writes per-pair results as CSV:
/// `source,target,sp_len,routed_len,stretch_mult,stretch_add`.
pub fn write_routes_csv<W: Write>(records: &[RouteRecord], mut writer: W) -> Result<()> {
    writeln!(writer, "source,target,sp_len,routed_len,stretch_mult,stretch_add")?;
    for r in records {
        writeln!(
            writer,
            "{},{},{},{},{},{}",
            r.source,
            r.target,
            r.shortest_len,
            r.routed_len,
            format_f64(r.stretch_mult),
            r.stretch_add
        )?;
    }
    Ok(())
}

/// Writes the one-line summary CSV with the percentile columns.
pub fn write_summary_csv<W: Write>(summary: &StretchSummary, mut writer: W) -> Result<()> {
    writeln!(
        writer,
        "pairs,delivered,skipped_cross_component,median,p25,p75,p0_1,p99_9,max_stretch,max_additive,frac_stretch_le_1_5,k_max,k_mean"
    )?;
    writeln!(
        writer,
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        summary.pairs_requested,
        summary.delivered,
        summary.skipped_cross_component,
        format_f64(summary.median),
        format_f64(summary.p25),
        format_f64(summary.p75),
        format_f64(summary.p0_1),
        format_f64(summary.p99_9),
        format_f64(summary.max_stretch),
        summary.max_additive,
        format_f64(summary.frac_le_1_5),
        summary.k_max,
        format_f64(summary.k_mean)
    )?;
    Ok(())
}
