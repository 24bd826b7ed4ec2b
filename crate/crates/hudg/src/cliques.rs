//! Clique covers of strongly hyperbolic unit disk graphs.
//!
//! Vertices that lie in a neighborhood disk and are no farther from the
//! center than its anchor split into two cliques by angular half-plane; a
//! ring of `ceil(π / θ(R, R))` such disks along the ground-disk boundary
//! covers the whole graph with at most twice that many cliques.

use std::io::Write;

use crate::error::{Error, Result};
use crate::geom::{self, PolarPoint};
use crate::graph::Graph;
use crate::repr::{DiskRepresentation, PointSet};

/// A partition of a vertex subset into parts that each induce a clique.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueCover {
    /// Disjoint vertex groups; each induces a complete subgraph.
    pub parts: Vec<Vec<u32>>,
    /// Anchor points of the covering disks that produced the parts.
    pub centers: Vec<PolarPoint>,
    /// Angular spacing `2 θ(R, R)` between consecutive disk centers, when a
    /// ring construction was used.
    pub spacing: Option<f64>,
}

impl CliqueCover {
    pub fn covered_vertices(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }
}

fn require_strongly_hyperbolic(rep: &DiskRepresentation) -> Result<&[PolarPoint]> {
    if !rep.is_strongly_hyperbolic() {
        return Err(Error::NotStronglyHyperbolic);
    }
    match rep.points() {
        PointSet::Polar(points) => Ok(points),
        PointSet::Cartesian(_) => Err(Error::NotStronglyHyperbolic),
    }
}

/// Splits the vertices lying both within distance `R` of `p` and within
/// distance `r(p)` of the center into at most two cliques, one per angular
/// half-plane relative to `p`.
pub fn two_clique_cover_inner(
    rep: &DiskRepresentation,
    graph: &Graph,
    p: &PolarPoint,
) -> Result<CliqueCover> {
    let points = require_strongly_hyperbolic(rep)?;
    if p.radius() > rep.threshold() {
        return Err(Error::InvalidParameter(format!(
            "anchor radius {} exceeds threshold {}",
            p.radius(),
            rep.threshold()
        )));
    }
    if graph.vertex_count() != rep.len() {
        return Err(Error::InvalidParameter(
            "graph and representation sizes differ".into(),
        ));
    }
    let mut halves = [Vec::new(), Vec::new()];
    for (v, q) in points.iter().enumerate() {
        if q.radius() > p.radius() {
            continue;
        }
        if geom::hyperbolic_distance(p, q)? > rep.threshold() {
            continue;
        }
        let rel = geom::normalize_angle(q.angle() - p.angle());
        let side = usize::from(rel >= std::f64::consts::PI);
        halves[side].push(v as u32);
    }
    Ok(CliqueCover {
        parts: halves.into_iter().filter(|h| !h.is_empty()).collect(),
        centers: vec![*p],
        spacing: None,
    })
}

/// Covers all vertices of a strongly hyperbolic unit disk graph with at most
/// `2 ceil(π / θ(R, R))` cliques: disks of radius `R` anchored on the ground
/// circle at angular steps of `2 θ(R, R)`, each split by half-plane. Every
/// vertex is assigned to the lowest-index disk that contains it.
pub fn clique_cover(rep: &DiskRepresentation, graph: &Graph) -> Result<CliqueCover> {
    let points = require_strongly_hyperbolic(rep)?;
    if graph.vertex_count() != rep.len() {
        return Err(Error::InvalidParameter(
            "graph and representation sizes differ".into(),
        ));
    }
    let big_r = rep.threshold();
    let theta_rr = geom::theta_boundary(big_r)?;
    if theta_rr <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "threshold {big_r} is too large for the ring construction (spacing underflows)"
        )));
    }
    let disk_count = (std::f64::consts::PI / theta_rr).ceil() as usize;
    let spacing = 2.0 * theta_rr;

    let centers: Vec<PolarPoint> = (0..disk_count)
        .map(|i| PolarPoint::new(big_r, spacing * i as f64))
        .collect::<Result<_>>()?;
    let sinh_big_r = big_r.sinh();
    let limit = {
        let half = 0.5 * big_r;
        2.0 * half.sinh() * half.sinh()
    };

    // assignment[v] = lowest-index disk containing v
    let mut assigned: Vec<Vec<u32>> = vec![Vec::new(); disk_count];
    for (v, q) in points.iter().enumerate() {
        let sinh_q = q.radius().sinh();
        let mut owner = None;
        for (i, c) in centers.iter().enumerate() {
            let y = geom::cosh_distance_minus_one(
                c.radius(),
                sinh_big_r,
                c.angle(),
                q.radius(),
                sinh_q,
                q.angle(),
            );
            if y <= limit {
                owner = Some(i);
                break;
            }
        }
        let Some(i) = owner else {
            return Err(Error::InvariantViolation(format!(
                "vertex {v} is not covered by any boundary disk"
            )));
        };
        assigned[i].push(v as u32);
    }

    // Each disk's vertex set splits by half-plane relative to its center;
    // all radii are at most R = r(center), so the inner-region split applies.
    let mut parts = Vec::new();
    for (i, verts) in assigned.iter().enumerate() {
        if verts.is_empty() {
            continue;
        }
        let mut halves = [Vec::new(), Vec::new()];
        for &v in verts {
            let rel = geom::normalize_angle(points[v as usize].angle() - centers[i].angle());
            let side = usize::from(rel >= std::f64::consts::PI);
            halves[side].push(v);
        }
        for half in halves {
            if !half.is_empty() {
                parts.push(half);
            }
        }
    }
    Ok(CliqueCover {
        parts,
        centers,
        spacing: Some(spacing),
    })
}

/// The real-valued part-count bound `max(2π sqrt 2, 2π e^(R/2))`.
pub fn clique_cover_bound(threshold: f64) -> f64 {
    let a = 2.0 * std::f64::consts::PI * 2.0_f64.sqrt();
    let b = 2.0 * std::f64::consts::PI * (threshold / 2.0).exp();
    a.max(b)
}

/// Writes a cover as text, one part per line, vertex ids space-separated.
pub fn write_clique_cover<W: Write>(cover: &CliqueCover, mut writer: W) -> Result<()> {
    for part in &cover.parts {
        let ids: Vec<String> = part.iter().map(|v| v.to_string()).collect();
        writeln!(writer, "{}", ids.join(" "))?;
    }
    Ok(())
}
