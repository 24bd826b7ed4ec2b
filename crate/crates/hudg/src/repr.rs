//! Disk representations of graphs and their generators: unit disk graph
//! construction over three metrics, hyperbolic random graph sampling, and the
//! constructive embedding of Euclidean unit disk graphs into the Poincaré
//! disk.

use std::fmt;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{
    self, cosh_distance_minus_one, poincare_distance, EuclideanPoint, PolarPoint,
};
use crate::graph::Graph;

/// The metric a representation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Euclidean,
    HyperbolicPolar,
    Poincare,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::HyperbolicPolar => "hyperbolic-polar",
            Metric::Poincare => "poincare",
        }
    }

    pub fn parse(token: &str) -> Option<Metric> {
        match token {
            "euclidean" => Some(Metric::Euclidean),
            "hyperbolic-polar" => Some(Metric::HyperbolicPolar),
            "poincare" => Some(Metric::Poincare),
            _ => None,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-vertex coordinates, stored according to the metric.
#[derive(Debug, Clone, PartialEq)]
pub enum PointSet {
    Polar(Vec<PolarPoint>),
    Cartesian(Vec<EuclideanPoint>),
}

impl PointSet {
    pub fn len(&self) -> usize {
        match self {
            PointSet::Polar(p) => p.len(),
            PointSet::Cartesian(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A geometric representation of a graph: per-vertex points, the connection
/// threshold `R`, and the ground radius `R'` limiting how far from the
/// center points may lie.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskRepresentation {
    metric: Metric,
    points: PointSet,
    threshold: f64,
    ground_radius: f64,
}

impl DiskRepresentation {
    pub fn new_hyperbolic(
        points: Vec<PolarPoint>,
        threshold: f64,
        ground_radius: f64,
    ) -> Result<Self> {
        Self::build(
            Metric::HyperbolicPolar,
            PointSet::Polar(points),
            threshold,
            ground_radius,
        )
    }

    pub fn new_euclidean(
        points: Vec<EuclideanPoint>,
        threshold: f64,
        ground_radius: f64,
    ) -> Result<Self> {
        Self::build(
            Metric::Euclidean,
            PointSet::Cartesian(points),
            threshold,
            ground_radius,
        )
    }

    pub fn new_poincare(
        points: Vec<EuclideanPoint>,
        threshold: f64,
        ground_radius: f64,
    ) -> Result<Self> {
        if ground_radius >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "poincare ground radius must be < 1, got {ground_radius}"
            )));
        }
        Self::build(
            Metric::Poincare,
            PointSet::Cartesian(points),
            threshold,
            ground_radius,
        )
    }

    fn build(metric: Metric, points: PointSet, threshold: f64, ground_radius: f64) -> Result<Self> {
        if !(threshold.is_finite() && threshold > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "threshold must be positive and finite, got {threshold}"
            )));
        }
        if !(ground_radius.is_finite() && ground_radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "ground radius must be positive and finite, got {ground_radius}"
            )));
        }
        let rep = Self {
            metric,
            points,
            threshold,
            ground_radius,
        };
        rep.validate_ground_disk()?;
        Ok(rep)
    }

    /// Checks that every point lies within the ground disk.
    pub fn validate_ground_disk(&self) -> Result<()> {
        for v in 0..self.len() {
            let extent = match &self.points {
                PointSet::Polar(p) => p[v].radius(),
                PointSet::Cartesian(p) => p[v].norm(),
            };
            // negated form so NaN extents fail the check too
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(extent <= self.ground_radius) {
                return Err(Error::OutsideGroundDisk {
                    vertex: v,
                    extent,
                    limit: self.ground_radius,
                });
            }
        }
        Ok(())
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn ground_radius(&self) -> f64 {
        self.ground_radius
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// A representation is strongly hyperbolic when it uses the polar metric
    /// and the ground radius equals the threshold.
    pub fn is_strongly_hyperbolic(&self) -> bool {
        self.metric == Metric::HyperbolicPolar && self.ground_radius == self.threshold
    }

    pub fn polar_point(&self, v: usize) -> Option<&PolarPoint> {
        match &self.points {
            PointSet::Polar(p) => p.get(v),
            PointSet::Cartesian(_) => None,
        }
    }

    pub fn cartesian_point(&self, v: usize) -> Option<&EuclideanPoint> {
        match &self.points {
            PointSet::Cartesian(p) => p.get(v),
            PointSet::Polar(_) => None,
        }
    }

    /// Metric distance between vertices `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        match &self.points {
            PointSet::Polar(p) => geom::hyperbolic_distance(&p[u], &p[v]),
            PointSet::Cartesian(p) => match self.metric {
                Metric::Euclidean => Ok(p[u].distance_to(&p[v])),
                Metric::Poincare => poincare_distance(&p[u], &p[v]),
                Metric::HyperbolicPolar => unreachable!("polar metric stores polar points"),
            },
        }
    }
}

/// Builds the unit disk graph of a representation: `{u, v}` is an edge if
/// and only if the metric distance between the points is at most the
/// threshold. Ports follow ascending neighbor ids.
pub fn build_udg(rep: &DiskRepresentation) -> Result<Graph> {
    rep.validate_ground_disk()?;
    let n = rep.len();
    let mut adj = vec![Vec::new(); n];
    match rep.points() {
        PointSet::Polar(points) => {
            // Compare in the cosh domain: d <= R iff cosh(d) - 1 <= cosh(R) - 1,
            // with both sides accumulated through the same cancellation-free
            // expression, so threshold-exact pairs are classified consistently.
            let sinh_r: Vec<f64> = points.iter().map(|p| p.radius().sinh()).collect();
            let half = 0.5 * rep.threshold();
            let limit = 2.0 * half.sinh() * half.sinh();
            for u in 0..n {
                for v in (u + 1)..n {
                    let y = cosh_distance_minus_one(
                        points[u].radius(),
                        sinh_r[u],
                        points[u].angle(),
                        points[v].radius(),
                        sinh_r[v],
                        points[v].angle(),
                    );
                    if y <= limit {
                        adj[u].push(v as u32);
                        adj[v].push(u as u32);
                    }
                }
            }
        }
        PointSet::Cartesian(_) => {
            for u in 0..n {
                for v in (u + 1)..n {
                    if rep.distance(u, v)? <= rep.threshold() {
                        adj[u].push(v as u32);
                        adj[v].push(u as u32);
                    }
                }
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// The default hyperbolic random graph disk radius, `max(2 ln n, 1)`.
pub fn hrg_radius(n: usize) -> f64 {
    if n <= 1 {
        1.0
    } else {
        (2.0 * (n as f64).ln()).max(1.0)
    }
}

/// Samples a hyperbolic random graph representation: radii on `[0, R]` with
/// density `alpha sinh(alpha r) / (cosh(alpha R) - 1)` via inverse-CDF
/// sampling, angles uniform on `[0, 2π)`. The result is strongly hyperbolic
/// (`R' = R`). Pass `radius = None` to use [`hrg_radius`].
///
/// Per vertex the radius is drawn before the angle, so a fixed seed pins the
/// entire point set.
pub fn sample_hrg(
    n: usize,
    radius: Option<f64>,
    alpha: f64,
    seed: u64,
) -> Result<DiskRepresentation> {
    let big_r = radius.unwrap_or_else(|| hrg_radius(n));
    if !(big_r.is_finite() && big_r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "disk radius must be positive and finite, got {big_r}"
        )));
    }
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "radial density parameter must be positive, got {alpha}"
        )));
    }
    let scale = (alpha * big_r).cosh() - 1.0;
    if !scale.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "alpha * R = {} overflows the radial distribution",
            alpha * big_r
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let ur: f64 = rng.gen();
        let ua: f64 = rng.gen();
        let r = ((1.0 + ur * scale).acosh() / alpha).min(big_r);
        let phi = ua * std::f64::consts::TAU;
        points.push(PolarPoint::new(r, phi)?);
    }
    DiskRepresentation::new_hyperbolic(points, big_r, big_r)
}

/// [`sample_hrg`] with an explicit disk radius; produces test instances of
/// strongly hyperbolic unit disk graphs at any scale.
pub fn sample_strongly_hyperbolic_udg(
    n: usize,
    radius: f64,
    radial_exponent: f64,
    seed: u64,
) -> Result<DiskRepresentation> {
    sample_hrg(n, Some(radius), radial_exponent, seed)
}

/// Samples points uniformly (by area) in a Euclidean disk of the given
/// ground radius.
pub fn sample_euclidean_udg(
    n: usize,
    ground_radius: f64,
    threshold: f64,
    seed: u64,
) -> Result<DiskRepresentation> {
    if !(ground_radius.is_finite() && ground_radius > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "ground radius must be positive, got {ground_radius}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let ur: f64 = rng.gen();
        let ua: f64 = rng.gen();
        let r = ground_radius * ur.sqrt();
        let phi = ua * std::f64::consts::TAU;
        points.push(EuclideanPoint::new(r * phi.cos(), r * phi.sin()));
    }
    DiskRepresentation::new_euclidean(points, threshold, ground_radius)
}

/// A unit-spacing grid of `n` points in the Euclidean plane, centered at the
/// origin, with the given connection threshold.
pub fn euclidean_grid(n: usize, threshold: f64) -> Result<DiskRepresentation> {
    let side = (n as f64).sqrt().ceil() as usize;
    let mut points = Vec::with_capacity(n);
    let offset = (side.saturating_sub(1)) as f64 / 2.0;
    'outer: for row in 0..side {
        for col in 0..side {
            if points.len() == n {
                break 'outer;
            }
            points.push(EuclideanPoint::new(
                col as f64 - offset,
                row as f64 - offset,
            ));
        }
    }
    let ground = points
        .iter()
        .map(|p| p.norm())
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    DiskRepresentation::new_euclidean(points, threshold, ground)
}

/// The neighbor set of `v`, sorted ascending.
pub fn neighborhood(graph: &Graph, v: u32) -> Vec<u32> {
    graph.neighbors(v).to_vec()
}

/// Moves vertex `v` radially toward the center, keeping its angle. The new
/// radius must not exceed the current one. On strongly hyperbolic inputs the
/// rebuilt graph's neighborhood of `v` is a superset of the old one.
pub fn move_inward(
    rep: &DiskRepresentation,
    v: usize,
    new_radius: f64,
) -> Result<DiskRepresentation> {
    let PointSet::Polar(points) = rep.points() else {
        return Err(Error::MetricMismatch {
            expected: "hyperbolic-polar",
            got: rep.metric().name(),
        });
    };
    let Some(old) = points.get(v) else {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} out of range for representation of size {}",
            rep.len()
        )));
    };
    if !(new_radius >= 0.0 && new_radius <= old.radius()) {
        return Err(Error::InvalidParameter(format!(
            "new radius {new_radius} must lie in [0, {}]",
            old.radius()
        )));
    }
    let mut moved = points.clone();
    moved[v] = PolarPoint::new(new_radius, old.angle())?;
    DiskRepresentation::new_hyperbolic(moved, rep.threshold(), rep.ground_radius())
}

/// Witness data for a Euclidean-to-hyperbolic conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionCertificate {
    /// Scale of the Euclidean disk the points were squeezed into.
    pub rho_star: f64,
    /// Minimum distance-to-threshold ratio over non-adjacent pairs;
    /// infinite when every pair is adjacent.
    pub tau: f64,
    /// Upper-bound factor `2 / (1 - rho²)` at `rho_star`.
    pub g_hat: f64,
    /// Lower-bound factor `2 (1 - rho / (1 + 4 rho²)^{3/2})` at `rho_star`.
    pub g_check: f64,
    /// The rescaled Euclidean threshold.
    pub r_e_rho: f64,
    /// The chosen hyperbolic threshold.
    pub r_h: f64,
}

fn g_hat(rho: f64) -> f64 {
    2.0 / (1.0 - rho * rho)
}

fn g_check(rho: f64) -> f64 {
    2.0 * (1.0 - rho / (1.0 + 4.0 * rho * rho).powf(1.5))
}

/// Embeds a Euclidean unit disk representation into the Poincaré disk so
/// that the unit disk graph is preserved exactly.
///
/// The points are scaled into a disk of radius `rho* <= 1/2`, found by
/// halving from `1/2` until the distance-distortion factors separate edges
/// from non-edges; the hyperbolic threshold is the midpoint of the
/// admissible interval. The output is re-checked against the input graph
/// and any adjacency mismatch is an error.
pub fn euclidean_to_hyperbolic(
    rep: &DiskRepresentation,
) -> Result<(DiskRepresentation, ConversionCertificate)> {
    if rep.metric() != Metric::Euclidean {
        return Err(Error::MetricMismatch {
            expected: "euclidean",
            got: rep.metric().name(),
        });
    }
    let input_graph = build_udg(rep)?;
    let n = rep.len();
    let threshold = rep.threshold();

    let mut tau = f64::INFINITY;
    for u in 0..n {
        for v in (u + 1)..n {
            if !input_graph.has_edge(u as u32, v as u32) {
                tau = tau.min(rep.distance(u, v)? / threshold);
            }
        }
    }
    if tau <= 1.0 {
        return Err(Error::ConversionFailed(format!(
            "closest non-adjacent pair ratio {tau} is not separable from 1 in double precision"
        )));
    }

    let mut rho = 0.5;
    let mut found = false;
    for _ in 0..60 {
        if g_hat(rho) < tau * g_check(rho) {
            found = true;
            break;
        }
        rho /= 2.0;
    }
    if !found {
        return Err(Error::ConversionFailed(format!(
            "no admissible scale above 2^-61 for tau = {tau}"
        )));
    }

    let scale = rho / rep.ground_radius();
    let r_e_rho = scale * threshold;
    let hat = g_hat(rho);
    let check = g_check(rho);
    let r_h = if tau.is_finite() {
        0.5 * (hat + tau * check) * r_e_rho
    } else {
        2.0 * hat * r_e_rho
    };

    let PointSet::Cartesian(points) = rep.points() else {
        unreachable!("euclidean metric stores cartesian points");
    };
    let scaled: Vec<EuclideanPoint> = points
        .iter()
        .map(|p| EuclideanPoint::new(p.x * scale, p.y * scale))
        .collect();
    let ground = scaled
        .iter()
        .map(|p| p.norm())
        .fold(rho, f64::max);
    let out = DiskRepresentation::new_poincare(scaled, r_h, ground)?;

    let output_graph = build_udg(&out)?;
    if output_graph != input_graph {
        return Err(Error::InvariantViolation(
            "conversion to the Poincaré disk changed the edge set".into(),
        ));
    }

    Ok((
        out,
        ConversionCertificate {
            rho_star: rho,
            tau,
            g_hat: hat,
            g_check: check,
            r_e_rho,
            r_h,
        },
    ))
}

/// Formats a float with 17 significant digits, enough to round-trip `f64`
/// bit-exactly through text.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_f64(token: &str, line: usize) -> Result<f64> {
    token.parse::<f64>().map_err(|e| Error::Format {
        line,
        message: format!("bad float {token:?}: {e}"),
    })
}

/// Writes the representation file format:
/// a `hudg 1 <n> <R> <R'> <metric>` header, then one `<id> <c1> <c2>` line
/// per vertex with 17-significant-digit coordinates.
pub fn write_representation<W: Write>(rep: &DiskRepresentation, mut writer: W) -> Result<()> {
    writeln!(
        writer,
        "hudg 1 {} {} {} {}",
        rep.len(),
        format_f64(rep.threshold()),
        format_f64(rep.ground_radius()),
        rep.metric().name()
    )?;
    for v in 0..rep.len() {
        let (c1, c2) = match rep.points() {
            PointSet::Polar(p) => (p[v].radius(), p[v].angle()),
            PointSet::Cartesian(p) => (p[v].x, p[v].y),
        };
        writeln!(writer, "{v} {} {}", format_f64(c1), format_f64(c2))?;
    }
    Ok(())
}

/// Reads the representation file format written by [`write_representation`].
pub fn read_representation<R: BufRead>(reader: R) -> Result<DiskRepresentation> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format {
            line: 1,
            message: "empty file".into(),
        })?
        .map_err(Error::Io)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 6 || tokens[0] != "hudg" || tokens[1] != "1" {
        return Err(Error::Format {
            line: 1,
            message: "expected header `hudg 1 <n> <R> <R'> <metric>`".into(),
        });
    }
    let n: usize = tokens[2].parse().map_err(|e| Error::Format {
        line: 1,
        message: format!("bad vertex count: {e}"),
    })?;
    let threshold = parse_f64(tokens[3], 1)?;
    let ground = parse_f64(tokens[4], 1)?;
    let metric = Metric::parse(tokens[5]).ok_or_else(|| Error::Format {
        line: 1,
        message: format!("unknown metric {:?}", tokens[5]),
    })?;

    let mut polar = Vec::new();
    let mut cartesian = Vec::new();
    for v in 0..n {
        let lineno = v + 2;
        let line = lines
            .next()
            .ok_or_else(|| Error::Format {
                line: lineno,
                message: format!("expected {n} point lines"),
            })?
            .map_err(Error::Io)?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::Format {
                line: lineno,
                message: "expected `<id> <c1> <c2>`".into(),
            });
        }
        let id: usize = toks[0].parse().map_err(|e| Error::Format {
            line: lineno,
            message: format!("bad vertex id: {e}"),
        })?;
        if id != v {
            return Err(Error::Format {
                line: lineno,
                message: format!("expected vertex id {v}, got {id}"),
            });
        }
        let c1 = parse_f64(toks[1], lineno)?;
        let c2 = parse_f64(toks[2], lineno)?;
        match metric {
            Metric::HyperbolicPolar => polar.push(PolarPoint::new(c1, c2).map_err(|e| {
                Error::Format {
                    line: lineno,
                    message: e.to_string(),
                }
            })?),
            _ => cartesian.push(EuclideanPoint::new(c1, c2)),
        }
    }
    match metric {
        Metric::HyperbolicPolar => DiskRepresentation::new_hyperbolic(polar, threshold, ground),
        Metric::Euclidean => DiskRepresentation::new_euclidean(cartesian, threshold, ground),
        Metric::Poincare => DiskRepresentation::new_poincare(cartesian, threshold, ground),
    }
}
