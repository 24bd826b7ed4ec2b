//! Phase-based tree covers of graphs.
//!
//! In phase `i` the deletion radius is `b^i`. While undeleted vertices
//! remain, a root is selected by the configured strategy, the partial BFS
//! tree over the residual graph is recorded down to depth
//! `floor((1 + a) b^i)`, and all residual vertices within distance
//! `floor(b^i)` of the root are deleted. After a phase the graph is
//! restored; the process stops once the first tree of a phase deletes a
//! whole component. Every vertex pair then shares a tree approximating its
//! graph distance within factor `1 + 2b/a` or additively by `2`.

use std::collections::{HashMap, VecDeque};
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::repr::{format_f64, DiskRepresentation};

/// Root selection strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest disk radius first; requires a representation.
    RadiallyIncreasing,
    /// Largest degree in the input graph first.
    DegreeDecreasing,
    /// Smallest vertex id first.
    IdOrder,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::RadiallyIncreasing => "radially-increasing",
            Strategy::DegreeDecreasing => "degree-decreasing",
            Strategy::IdOrder => "id-order",
        }
    }

    pub fn parse(token: &str) -> Option<Strategy> {
        match token {
            "radially-increasing" => Some(Strategy::RadiallyIncreasing),
            "degree-decreasing" => Some(Strategy::DegreeDecreasing),
            "id-order" => Some(Strategy::IdOrder),
            _ => None,
        }
    }
}

/// Parameters of the cover construction: tree depth factor `a > 0`, radius
/// base `b > 1`, and the root selection strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtonParams {
    pub a: f64,
    pub b: f64,
    pub strategy: Strategy,
}

impl ProtonParams {
    pub fn new(a: f64, b: f64, strategy: Strategy) -> Result<Self> {
        let params = Self { a, b, strategy };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.a > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "parameter a must be positive, got {}",
                self.a
            )));
        }
        if !(self.b.is_finite() && self.b > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "parameter b must exceed 1, got {}",
                self.b
            )));
        }
        Ok(())
    }

    /// The multiplicative stretch `1 + 2b/a` guaranteed together with the
    /// additive bound 2.
    pub fn stretch(&self) -> f64 {
        1.0 + 2.0 * self.b / self.a
    }
}

/// A partial BFS tree recorded during cover construction. `members` is in
/// BFS order; `parent` and `depth` are parallel to it, with the root marked
/// by `u32::MAX` in `parent`. Depths equal BFS distances in the residual
/// graph the tree was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct RootedTree {
    pub graph_id: u32,
    pub phase: u32,
    pub root: u32,
    pub members: Vec<u32>,
    pub parent: Vec<u32>,
    pub depth: Vec<u32>,
    index: HashMap<u32, u32>,
}

impl RootedTree {
    /// Assembles a tree from parallel member/parent/depth arrays.
    /// `members[0]` must be the root and every vertex's parent must appear
    /// before it.
    pub fn from_parts(
        graph_id: u32,
        phase: u32,
        root: u32,
        members: Vec<u32>,
        parent: Vec<u32>,
        depth: Vec<u32>,
    ) -> Self {
        Self::new(graph_id, phase, root, members, parent, depth)
    }

    fn new(
        graph_id: u32,
        phase: u32,
        root: u32,
        members: Vec<u32>,
        parent: Vec<u32>,
        depth: Vec<u32>,
    ) -> Self {
        let index = members
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        Self {
            graph_id,
            phase,
            root,
            members,
            parent,
            depth,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: u32) -> Option<u32> {
        self.index.get(&v).copied()
    }

    pub fn depth_of(&self, v: u32) -> Option<u32> {
        self.index_of(v).map(|i| self.depth[i as usize])
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        let i = self.index_of(v)?;
        let p = self.parent[i as usize];
        (p != UNREACHABLE).then_some(p)
    }

    /// Hop distance between two members along the tree.
    pub fn distance_between(&self, u: u32, v: u32) -> Option<u32> {
        let mut iu = self.index_of(u)? as usize;
        let mut iv = self.index_of(v)? as usize;
        let (du, dv) = (self.depth[iu], self.depth[iv]);
        let mut hu = du;
        let mut hv = dv;
        while hu > hv {
            iu = self.index[&self.parent[iu]] as usize;
            hu -= 1;
        }
        while hv > hu {
            iv = self.index[&self.parent[iv]] as usize;
            hv -= 1;
        }
        while self.members[iu] != self.members[iv] {
            iu = self.index[&self.parent[iu]] as usize;
            iv = self.index[&self.parent[iv]] as usize;
            hu -= 1;
        }
        Some(du + dv - 2 * hu)
    }

    /// Checks that every tree edge exists in the host graph.
    pub fn validate_edges(&self, graph: &Graph) -> Result<()> {
        for (i, &v) in self.members.iter().enumerate() {
            let p = self.parent[i];
            if p != UNREACHABLE && !graph.has_edge(v, p) {
                return Err(Error::TreeGraphMismatch(format!(
                    "tree {} edge ({v}, {p}) is not a host edge",
                    self.graph_id
                )));
            }
        }
        Ok(())
    }
}

/// A collection of rooted trees with per-vertex membership. Graph ids are
/// `1..=trees.len()` in creation order; membership lists are sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeCover {
    pub trees: Vec<RootedTree>,
    pub membership: Vec<Vec<u32>>,
    pub params: ProtonParams,
}

impl TreeCover {
    pub fn tree(&self, graph_id: u32) -> Option<&RootedTree> {
        self.trees.get((graph_id as usize).checked_sub(1)?)
    }

    /// Checks size agreement and that every tree edge is a host edge.
    pub fn validate_against(&self, graph: &Graph) -> Result<()> {
        if self.membership.len() != graph.vertex_count() {
            return Err(Error::TreeGraphMismatch(format!(
                "cover is over {} vertices, graph has {}",
                self.membership.len(),
                graph.vertex_count()
            )));
        }
        for tree in &self.trees {
            tree.validate_edges(graph)?;
        }
        Ok(())
    }
}

/// Summary statistics of a cover.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverStats {
    pub num_trees: usize,
    /// Largest number of trees any vertex belongs to.
    pub k_max: usize,
    /// Mean membership count over vertices.
    pub k_mean: f64,
    /// Tree count per phase, indexed by phase.
    pub trees_per_phase: Vec<usize>,
}

/// Membership statistics of a cover.
pub fn cover_stats(cover: &TreeCover) -> CoverStats {
    let num_trees = cover.trees.len();
    let k_max = cover.membership.iter().map(Vec::len).max().unwrap_or(0);
    let total: usize = cover.membership.iter().map(Vec::len).sum();
    let k_mean = if cover.membership.is_empty() {
        0.0
    } else {
        total as f64 / cover.membership.len() as f64
    };
    let phases = cover.trees.iter().map(|t| t.phase).max().map_or(0, |p| p + 1);
    let mut trees_per_phase = vec![0usize; phases as usize];
    for tree in &cover.trees {
        trees_per_phase[tree.phase as usize] += 1;
    }
    CoverStats {
        num_trees,
        k_max,
        k_mean,
        trees_per_phase,
    }
}

/// Closed-form bound on the maximum membership count produced with the
/// radially increasing strategy on a strongly hyperbolic unit disk graph:
/// `π e ((1+a)/(b-1) (b² diam - 1) R + 2 (log_b diam + 2))`.
pub fn k_bound(threshold: f64, a: f64, b: f64, diam: u32) -> Result<f64> {
    if diam < 1 {
        return Err(Error::InvalidParameter(
            "k bound requires diameter >= 1".into(),
        ));
    }
    let d = diam as f64;
    let geometric = (1.0 + a) / (b - 1.0) * (b * b * d - 1.0) * threshold;
    let logarithmic = 2.0 * (d.ln() / b.ln() + 2.0);
    Ok(std::f64::consts::PI * std::f64::consts::E * (geometric + logarithmic))
}

/// Closed-form bound on the number of trees of phase `i` that any single
/// vertex belongs to under the radially increasing strategy:
/// `π e (R (1+a) b^i + 2)`.
pub fn phase_root_bound(threshold: f64, a: f64, b: f64, phase: u32) -> f64 {
    std::f64::consts::PI
        * std::f64::consts::E
        * (threshold * (1.0 + a) * b.powi(phase as i32) + 2.0)
}

fn selection_order(
    graph: &Graph,
    rep: Option<&DiskRepresentation>,
    strategy: Strategy,
) -> Result<Vec<u32>> {
    let n = graph.vertex_count();
    let mut order: Vec<u32> = (0..n as u32).collect();
    match strategy {
        Strategy::IdOrder => {}
        Strategy::DegreeDecreasing => {
            order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        }
        Strategy::RadiallyIncreasing => {
            let rep = rep.ok_or_else(|| {
                Error::InvalidParameter(
                    "radially-increasing root selection needs a representation".into(),
                )
            })?;
            if rep.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "representation has {} points, graph has {n} vertices",
                    rep.len()
                )));
            }
            let radii: Vec<f64> = (0..n)
                .map(|v| {
                    rep.polar_point(v).map(|p| p.radius()).ok_or_else(|| {
                        Error::MetricMismatch {
                            expected: "hyperbolic-polar",
                            got: rep.metric().name(),
                        }
                    })
                })
                .collect::<Result<_>>()?;
            order.sort_by(|&u, &v| {
                radii[u as usize]
                    .total_cmp(&radii[v as usize])
                    .then_with(|| u.cmp(&v))
            });
        }
    }
    Ok(order)
}

/// Depth cutoffs for a phase, clamped to the vertex count so huge bases
/// cannot overflow.
fn phase_cutoffs(params: &ProtonParams, phase: u32, n: usize) -> (u32, u32) {
    let radius = params.b.powi(phase as i32);
    let cap = n as f64;
    let delete = radius.floor().min(cap) as u32;
    let keep = ((1.0 + params.a) * radius).floor().min(cap) as u32;
    (delete, keep)
}

/// Computes the tree cover. A representation is required exactly when the
/// radially increasing strategy is used. Components are processed
/// independently in order of their smallest vertex.
pub fn compute_tree_cover(
    graph: &Graph,
    rep: Option<&DiskRepresentation>,
    params: &ProtonParams,
) -> Result<TreeCover> {
    params.validate()?;
    let n = graph.vertex_count();
    let order = selection_order(graph, rep, params.strategy)?;

    let comp = graph.connected_components();
    let comp_count = comp.iter().copied().max().map_or(0, |c| c as usize + 1);
    // selection order restricted to each component
    let mut comp_order: Vec<Vec<u32>> = vec![Vec::new(); comp_count];
    for &v in &order {
        comp_order[comp[v as usize] as usize].push(v);
    }

    let mut trees: Vec<RootedTree> = Vec::new();
    let mut deleted = vec![false; n];
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = VecDeque::new();

    for members in &comp_order {
        let comp_size = members.len();
        let mut phase = 0u32;
        loop {
            let (delete_cutoff, keep_cutoff) = phase_cutoffs(params, phase, n);
            for &v in members {
                deleted[v as usize] = false;
            }
            let mut remaining = comp_size;
            let mut cursor = 0usize;
            let mut first_tree_cleared = false;
            let mut first = true;
            while remaining > 0 {
                while deleted[members[cursor] as usize] {
                    cursor += 1;
                }
                let root = members[cursor];

                // truncated BFS over the residual graph
                let mut tree_members = Vec::new();
                let mut tree_parent = Vec::new();
                let mut tree_depth = Vec::new();
                dist[root as usize] = 0;
                queue.push_back((root, UNREACHABLE));
                while let Some((u, par)) = queue.pop_front() {
                    let du = dist[u as usize];
                    tree_members.push(u);
                    tree_parent.push(par);
                    tree_depth.push(du);
                    if du < keep_cutoff {
                        for &w in graph.neighbors(u) {
                            if !deleted[w as usize] && dist[w as usize] == UNREACHABLE {
                                dist[w as usize] = du + 1;
                                queue.push_back((w, u));
                            }
                        }
                    }
                }
                for (&m, &d) in tree_members.iter().zip(&tree_depth) {
                    dist[m as usize] = UNREACHABLE;
                    if d <= delete_cutoff {
                        deleted[m as usize] = true;
                        remaining -= 1;
                    }
                }
                trees.push(RootedTree::new(
                    trees.len() as u32 + 1,
                    phase,
                    root,
                    tree_members,
                    tree_parent,
                    tree_depth,
                ));
                if first && remaining == 0 {
                    first_tree_cleared = true;
                }
                first = false;
            }
            if first_tree_cleared {
                break;
            }
            phase += 1;
        }
    }

    let mut membership: Vec<Vec<u32>> = vec![Vec::new(); n];
    for tree in &trees {
        for &v in &tree.members {
            membership[v as usize].push(tree.graph_id);
        }
    }
    Ok(TreeCover {
        trees,
        membership,
        params: *params,
    })
}

/// A vertex pair whose best shared tree misses the stretch guarantee.
#[derive(Debug, Clone, PartialEq)]
pub struct StretchViolation {
    pub source: u32,
    pub target: u32,
    pub graph_distance: u32,
    /// Best shared tree distance, or `None` when no tree contains both.
    pub cover_distance: Option<u32>,
}

/// Result of checking a cover's stretch guarantee.
#[derive(Debug, Clone, PartialEq)]
pub struct StretchReport {
    pub pairs_checked: usize,
    pub cross_component_skipped: usize,
    pub violations: Vec<StretchViolation>,
    /// Largest observed ratio of cover distance to graph distance.
    pub max_ratio: f64,
}

impl StretchReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn best_shared_tree_distance(cover: &TreeCover, s: u32, t: u32) -> Option<u32> {
    let ms = &cover.membership[s as usize];
    let mt = &cover.membership[t as usize];
    let (mut i, mut j) = (0, 0);
    let mut best: Option<u32> = None;
    while i < ms.len() && j < mt.len() {
        match ms[i].cmp(&mt[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let tree = cover.tree(ms[i]).expect("membership ids are valid");
                let d = tree
                    .distance_between(s, t)
                    .expect("membership implies containment");
                best = Some(best.map_or(d, |b| b.min(d)));
                i += 1;
                j += 1;
            }
        }
    }
    best
}

/// Verifies the stretch guarantee of a cover: every same-component pair must
/// have a shared tree within factor `1 + 2b/a` or within additive 2 of its
/// graph distance. Checks all pairs when the graph has at most 500 vertices
/// and 10,000 seeded random pairs otherwise.
pub fn verify_cover_stretch(
    graph: &Graph,
    cover: &TreeCover,
    params: &ProtonParams,
    seed: u64,
) -> StretchReport {
    const EXHAUSTIVE_LIMIT: usize = 500;
    const SAMPLE_COUNT: usize = 10_000;

    let n = graph.vertex_count();
    let c = params.stretch();
    let mut report = StretchReport {
        pairs_checked: 0,
        cross_component_skipped: 0,
        violations: Vec::new(),
        max_ratio: 0.0,
    };
    if n < 2 {
        return report;
    }

    let check = |s: u32, t: u32, d_g: u32, report: &mut StretchReport| {
        report.pairs_checked += 1;
        let best = best_shared_tree_distance(cover, s, t);
        let within = match best {
            Some(d_t) => d_t as f64 <= c * d_g as f64 || d_t <= d_g + 2,
            None => false,
        };
        if let Some(d_t) = best {
            let ratio = d_t as f64 / d_g as f64;
            if ratio > report.max_ratio {
                report.max_ratio = ratio;
            }
        }
        if !within {
            report.violations.push(StretchViolation {
                source: s,
                target: t,
                graph_distance: d_g,
                cover_distance: best,
            });
        }
    };

    if n <= EXHAUSTIVE_LIMIT {
        for s in 0..n as u32 {
            let dist = graph.bfs_distances(s);
            for t in (s + 1)..n as u32 {
                match dist[t as usize] {
                    UNREACHABLE => report.cross_component_skipped += 1,
                    d_g => check(s, t, d_g, &mut report),
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(SAMPLE_COUNT);
        for _ in 0..SAMPLE_COUNT {
            let s = rng.gen_range(0..n as u32);
            let mut t = rng.gen_range(0..n as u32);
            while t == s {
                t = rng.gen_range(0..n as u32);
            }
            pairs.push((s, t));
        }
        pairs.sort_unstable();
        let mut dist: Vec<u32> = Vec::new();
        let mut current_source = u32::MAX;
        for (s, t) in pairs {
            if s != current_source {
                dist = graph.bfs_distances(s);
                current_source = s;
            }
            match dist[t as usize] {
                UNREACHABLE => report.cross_component_skipped += 1,
                d_g => check(s, t, d_g, &mut report),
            }
        }
    }
    report
}

/// Writes a cover: a `hudgcover 1 <trees> <n> <a> <b> <strategy>` header,
/// then per tree a `tree <graph-id> root <v> phase <i>` line followed by
/// `child parent` lines in BFS order.
pub fn write_cover<W: Write>(cover: &TreeCover, mut writer: W) -> Result<()> {
    writeln!(
        writer,
        "hudgcover 1 {} {} {} {} {}",
        cover.trees.len(),
        cover.membership.len(),
        format_f64(cover.params.a),
        format_f64(cover.params.b),
        cover.params.strategy.name()
    )?;
    for tree in &cover.trees {
        writeln!(
            writer,
            "tree {} root {} phase {}",
            tree.graph_id, tree.root, tree.phase
        )?;
        for (i, &v) in tree.members.iter().enumerate() {
            if tree.parent[i] != UNREACHABLE {
                writeln!(writer, "{v} {}", tree.parent[i])?;
            }
        }
    }
    Ok(())
}

/// Reads a cover written by [`write_cover`].
pub fn read_cover<R: BufRead>(reader: R) -> Result<TreeCover> {
    let mut lines = reader.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Format {
        line: 1,
        message: "empty file".into(),
    })?;
    let header = header.map_err(Error::Io)?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 7 || toks[0] != "hudgcover" || toks[1] != "1" {
        return Err(Error::Format {
            line: 1,
            message: "expected header `hudgcover 1 <trees> <n> <a> <b> <strategy>`".into(),
        });
    }
    let num_trees: usize = toks[2].parse().map_err(|e| Error::Format {
        line: 1,
        message: format!("bad tree count: {e}"),
    })?;
    let n: usize = toks[3].parse().map_err(|e| Error::Format {
        line: 1,
        message: format!("bad vertex count: {e}"),
    })?;
    let a: f64 = toks[4].parse().map_err(|e| Error::Format {
        line: 1,
        message: format!("bad parameter a: {e}"),
    })?;
    let b: f64 = toks[5].parse().map_err(|e| Error::Format {
        line: 1,
        message: format!("bad parameter b: {e}"),
    })?;
    let strategy = Strategy::parse(toks[6]).ok_or_else(|| Error::Format {
        line: 1,
        message: format!("unknown strategy {:?}", toks[6]),
    })?;
    let params = ProtonParams::new(a, b, strategy).map_err(|e| Error::Format {
        line: 1,
        message: e.to_string(),
    })?;

    struct Partial {
        graph_id: u32,
        phase: u32,
        root: u32,
        members: Vec<u32>,
        parent: Vec<u32>,
        depth: Vec<u32>,
        index: HashMap<u32, u32>,
    }
    let mut trees: Vec<RootedTree> = Vec::with_capacity(num_trees);
    let mut current: Option<Partial> = None;
    let finish = |p: Partial, trees: &mut Vec<RootedTree>| {
        trees.push(RootedTree::new(
            p.graph_id, p.phase, p.root, p.members, p.parent, p.depth,
        ));
    };
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.map_err(Error::Io)?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "tree" {
            if toks.len() != 6 || toks[2] != "root" || toks[4] != "phase" {
                return Err(Error::Format {
                    line: lineno,
                    message: "expected `tree <id> root <v> phase <i>`".into(),
                });
            }
            let graph_id: u32 = toks[1].parse().map_err(|e| Error::Format {
                line: lineno,
                message: format!("bad graph id: {e}"),
            })?;
            if graph_id as usize != trees.len() + current.is_some() as usize + 1 {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("graph ids must be sequential, got {graph_id}"),
                });
            }
            let root: u32 = toks[3].parse().map_err(|e| Error::Format {
                line: lineno,
                message: format!("bad root: {e}"),
            })?;
            let phase: u32 = toks[5].parse().map_err(|e| Error::Format {
                line: lineno,
                message: format!("bad phase: {e}"),
            })?;
            if let Some(p) = current.take() {
                finish(p, &mut trees);
            }
            let mut index = HashMap::new();
            index.insert(root, 0);
            current = Some(Partial {
                graph_id,
                phase,
                root,
                members: vec![root],
                parent: vec![UNREACHABLE],
                depth: vec![0],
                index,
            });
        } else {
            if toks.len() != 2 {
                return Err(Error::Format {
                    line: lineno,
                    message: "expected `child parent`".into(),
                });
            }
            let child: u32 = toks[0].parse().map_err(|e| Error::Format {
                line: lineno,
                message: format!("bad child id: {e}"),
            })?;
            let parent: u32 = toks[1].parse().map_err(|e| Error::Format {
                line: lineno,
                message: format!("bad parent id: {e}"),
            })?;
            let Some(p) = current.as_mut() else {
                return Err(Error::Format {
                    line: lineno,
                    message: "edge line before any tree header".into(),
                });
            };
            let Some(&pi) = p.index.get(&parent) else {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("parent {parent} not seen before child {child}"),
                });
            };
            if p.index.contains_key(&child) {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("vertex {child} appears twice in tree {}", p.graph_id),
                });
            }
            if child as usize >= n {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("vertex {child} out of range for n = {n}"),
                });
            }
            let d = p.depth[pi as usize] + 1;
            p.index.insert(child, p.members.len() as u32);
            p.members.push(child);
            p.parent.push(parent);
            p.depth.push(d);
        }
    }
    if let Some(p) = current.take() {
        finish(p, &mut trees);
    }
    if trees.len() != num_trees {
        return Err(Error::Format {
            line: 1,
            message: format!("header promised {num_trees} trees, found {}", trees.len()),
        });
    }
    let mut membership: Vec<Vec<u32>> = vec![Vec::new(); n];
    for tree in &trees {
        for &v in &tree.members {
            if v as usize >= n {
                return Err(Error::Format {
                    line: 1,
                    message: format!("vertex {v} out of range for n = {n}"),
                });
            }
            membership[v as usize].push(tree.graph_id);
        }
    }
    Ok(TreeCover {
        trees,
        membership,
        params,
    })
}
