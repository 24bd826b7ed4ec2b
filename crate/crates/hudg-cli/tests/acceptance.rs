//! Acceptance suite: one test per shipped guarantee, each printing a
//! `[acceptance] criterion N: PASS/FAIL` line (run with `--nocapture` to see
//! them). Budgeted criteria assert their wall-clock limits.

use std::collections::VecDeque;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use hudg::cliques::{clique_cover, clique_cover_bound};
use hudg::geom::{
    theta, theta_boundary, theta_lower_bound, theta_simple_lower_bound, theta_upper_bound,
};
use hudg::graph::Graph;
use hudg::labels::{build_cover_labels, build_tree_labels, encoded_bits, label_stats};
use hudg::proton::{
    compute_tree_cover, cover_stats, k_bound, phase_root_bound, verify_cover_stretch,
    ProtonParams, RootedTree, Strategy,
};
use hudg::repr::{
    build_udg, euclidean_to_hyperbolic, move_inward, sample_euclidean_udg, sample_hrg,
    sample_strongly_hyperbolic_udg,
};
use hudg::router::{measure_stretch, write_routes_csv, PairSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: u32, ok: bool, detail: &str) {
    println!(
        "[acceptance] criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_theta_sandwich() {
    const SLACK: f64 = 1e-9;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a17d);
    let mut violations = 0usize;
    let mut simple_bound_checked = 0usize;
    let mut checked = 0usize;
    while checked < 100_000 {
        let big_r = rng.gen_range(1.0..=30.0f64);
        let r1 = rng.gen_range(0.0..1.0f64) * big_r;
        let r2 = rng.gen_range(0.0..1.0f64) * big_r;
        if r1 <= 0.0 || r2 <= 0.0 || r1 + r2 < big_r {
            continue;
        }
        checked += 1;
        let t = theta(r1, r2, big_r).unwrap();
        let lo = theta_lower_bound(r1, r2, big_r).unwrap();
        let hi = theta_upper_bound(r1, r2, big_r).unwrap();
        if !(lo <= t + SLACK && t <= hi + SLACK) {
            violations += 1;
        }
        if (r1 - r2).abs() <= big_r - 1.0 {
            simple_bound_checked += 1;
            let simple = theta_simple_lower_bound(r1, r2, big_r).unwrap();
            if !(simple <= t + SLACK && t <= hi + SLACK) {
                violations += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = violations == 0 && elapsed.as_secs_f64() < 5.0;
    report(
        1,
        ok,
        &format!(
            "{checked} sandwich triples ({simple_bound_checked} also under the simple-bound preconditions), {violations} violations, {:.2}s (< 5s)",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_02_theta_monotonicity() {
    let mut violations = 0usize;
    let mut prev = f64::INFINITY;
    for i in 1..=3000 {
        let r = i as f64 * 0.01;
        let t = theta_boundary(r).unwrap();
        if t > prev {
            violations += 1;
        }
        prev = t;
    }
    report(
        2,
        violations == 0,
        &format!("theta(r, r) non-increasing over 3000 grid points in (0, 30], {violations} violations"),
    );
}

#[test]
fn criterion_03_nested_neighborhoods() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    let mut trials = 0usize;
    let mut failures = 0usize;
    for instance in 0..40 {
        let n = rng.gen_range(20..=500usize);
        let big_r = rng.gen_range(1.0..=12.0f64);
        let rep = sample_strongly_hyperbolic_udg(n, big_r, 1.0, 1000 + instance).unwrap();
        let graph = build_udg(&rep).unwrap();
        for _ in 0..25 {
            trials += 1;
            let v = rng.gen_range(0..n);
            let old_radius = rep.polar_point(v).unwrap().radius();
            let new_radius = rng.gen_range(0.0..=1.0f64) * old_radius;
            let moved = move_inward(&rep, v, new_radius).unwrap();
            let rebuilt = build_udg(&moved).unwrap();
            for &u in graph.neighbors(v as u32) {
                if !rebuilt.has_edge(v as u32, u) {
                    failures += 1;
                    break;
                }
            }
        }
    }
    report(
        3,
        trials == 1000 && failures == 0,
        &format!("{trials} inward moves on strongly hyperbolic instances, {failures} neighborhood losses"),
    );
}

#[test]
fn criterion_04_euclidean_converter() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let mut agreements = 0usize;
    for instance in 0..50u64 {
        let n = rng.gen_range(2..=200usize);
        let ground = rng.gen_range(0.5..=3.0f64);
        let threshold = ground * rng.gen_range(0.05..=1.2f64);
        let rep = sample_euclidean_udg(n, ground, threshold, 7000 + instance).unwrap();
        let input_graph = build_udg(&rep).unwrap();
        let (converted, cert) = euclidean_to_hyperbolic(&rep).unwrap();
        let output_graph = build_udg(&converted).unwrap();
        assert_eq!(
            output_graph, input_graph,
            "instance {instance}: edge sets differ"
        );
        assert!(cert.rho_star > 0.0 && cert.rho_star < 1.0);
        assert!(cert.tau > 1.0);
        assert!(cert.g_hat < cert.tau * cert.g_check);
        assert!(cert.r_h >= cert.g_hat * cert.r_e_rho);
        assert!(cert.r_h <= cert.tau * cert.g_check * cert.r_e_rho);
        agreements += 1;
    }
    report(
        4,
        agreements == 50,
        &format!("{agreements}/50 random Euclidean unit disk graphs preserved exactly, certificates valid"),
    );
}

#[test]
fn criterion_05_clique_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc11c);
    let mut covered_instances = 0usize;
    for instance in 0..100u64 {
        let n = rng.gen_range(1..=2000usize);
        let big_r = rng.gen_range(0.5..=15.0f64);
        let rep = sample_strongly_hyperbolic_udg(n, big_r, 1.0, 3000 + instance).unwrap();
        let graph = build_udg(&rep).unwrap();
        let cover = clique_cover(&rep, &graph).unwrap();

        let mut seen = vec![false; n];
        for part in &cover.parts {
            for (i, &u) in part.iter().enumerate() {
                assert!(!seen[u as usize], "instance {instance}: vertex {u} twice");
                seen[u as usize] = true;
                for &v in &part[i + 1..] {
                    assert!(
                        graph.has_edge(u, v),
                        "instance {instance}: part not a clique at ({u}, {v})"
                    );
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "instance {instance}: vertex missed");
        let bound = clique_cover_bound(big_r).ceil() + 2.0;
        assert!(
            cover.parts.len() as f64 <= bound,
            "instance {instance}: {} parts > bound {bound}",
            cover.parts.len()
        );
        covered_instances += 1;
    }
    report(
        5,
        covered_instances == 100,
        &format!("{covered_instances}/100 instances: disjoint clique parts within the ring bound"),
    );
}

fn grid_graph(side: u32) -> Graph {
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            let v = r * side + c;
            if c + 1 < side {
                edges.push((v, v + 1));
            }
            if r + 1 < side {
                edges.push((v, v + side));
            }
        }
    }
    Graph::from_edges((side * side) as usize, &edges).unwrap()
}

fn path_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn random_tree_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdős–Rényi-style graph above the connectivity threshold; advances the
/// seed deterministically until the sample is connected.
fn connected_gnp(n: usize, mut seed: u64) -> Graph {
    let p = 2.0 * (n as f64).ln() / n as f64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.connected_components().iter().all(|&c| c == 0) {
            return g;
        }
        seed += 1;
    }
}

#[test]
fn criterion_06_proton_stretch() {
    let start = Instant::now();
    let mut instances: Vec<(String, Graph, Option<hudg::DiskRepresentation>)> = vec![
        ("path-5".into(), path_graph(5), None),
        ("path-100".into(), path_graph(100), None),
        ("path-500".into(), path_graph(500), None),
        ("grid-10".into(), grid_graph(10), None),
        ("grid-22".into(), grid_graph(22), None),
        ("tree-300".into(), random_tree_graph(300, 71), None),
        ("tree-500".into(), random_tree_graph(500, 72), None),
        ("gnp-200".into(), connected_gnp(200, 73), None),
        ("gnp-400".into(), connected_gnp(400, 74), None),
    ];
    for (i, n) in [(0u64, 300usize), (1, 500)] {
        let rep = sample_hrg(n, None, 1.0, 8000 + i).unwrap();
        let graph = build_udg(&rep).unwrap();
        instances.push((format!("hrg-{n}"), graph, Some(rep)));
    }

    let mut pairs_total = 0usize;
    let mut violations = 0usize;
    for &(a, b) in &[(2.0, 2.0), (1.0, 1.5)] {
        for (name, graph, rep) in &instances {
            let mut strategies = vec![Strategy::DegreeDecreasing];
            if rep.is_some() {
                strategies.push(Strategy::RadiallyIncreasing);
            }
            for strategy in strategies {
                let params = ProtonParams::new(a, b, strategy).unwrap();
                let cover = compute_tree_cover(graph, rep.as_ref(), &params).unwrap();
                let rpt = verify_cover_stretch(graph, &cover, &params, 1);
                pairs_total += rpt.pairs_checked;
                violations += rpt.violations.len();
                assert!(
                    rpt.violations.is_empty(),
                    "{name} a={a} b={b} {}: {:?}",
                    strategy.name(),
                    rpt.violations.first()
                );
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = violations == 0 && elapsed.as_secs_f64() < 60.0;
    report(
        6,
        ok,
        &format!(
            "{pairs_total} all-pairs checks over {} instances x 2 parameter sets, {violations} violations, {:.2}s (< 60s)",
            instances.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_07_membership_k_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0d);
    let (a, b) = (2.0, 2.0);
    let params = ProtonParams::new(a, b, Strategy::RadiallyIncreasing).unwrap();
    let mut max_quotient = 0.0f64;
    for instance in 0..20u64 {
        let n = rng.gen_range(100..=2000usize);
        let rep = sample_hrg(n, None, 1.0, 5000 + instance).unwrap();
        let graph = build_udg(&rep).unwrap();
        let cover = compute_tree_cover(&graph, Some(&rep), &params).unwrap();
        let stats = cover_stats(&cover);
        let diam = graph.max_component_diameter().max(1);
        let bound = k_bound(rep.threshold(), a, b, diam).unwrap();
        assert!(
            (stats.k_max as f64) <= bound,
            "instance {instance}: k_max {} > bound {bound}",
            stats.k_max
        );
        max_quotient = max_quotient.max(stats.k_max as f64 / bound);

        // per-phase membership obeys the phase bound as well
        let phases = cover.trees.iter().map(|t| t.phase).max().unwrap_or(0);
        for phase in 0..=phases {
            let mut counts = vec![0u32; n];
            for tree in cover.trees.iter().filter(|t| t.phase == phase) {
                for &v in &tree.members {
                    counts[v as usize] += 1;
                }
            }
            let observed = counts.iter().copied().max().unwrap_or(0);
            let phase_bound = phase_root_bound(rep.threshold(), a, b, phase);
            assert!(
                f64::from(observed) <= phase_bound,
                "instance {instance} phase {phase}: {observed} > {phase_bound}"
            );
        }
    }
    report(
        7,
        true,
        &format!(
            "20 hyperbolic random graphs: k_max within the closed-form bound (max quotient {max_quotient:.4}), per-phase bounds hold"
        ),
    );
}

/// Queue BFS written against plain adjacency lists, independent of the
/// library's traversals.
fn oracle_bfs(adj: &[Vec<u32>], src: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[src as usize] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u as usize] {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[u as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[test]
fn criterion_08_label_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1abe1);
    let mut pairs_checked = 0usize;
    for instance in 0..100 {
        let n = rng.gen_range(2..=5000usize);
        let mut edges = Vec::new();
        let mut parent = vec![u32::MAX];
        let mut depth = vec![0u32];
        for v in 1..n as u32 {
            // mix shapes: uniform attachment, paths, and shallow stars
            let p = match instance % 5 {
                0 => v - 1,                         // path
                1 => rng.gen_range(0..=(v - 1) / 8), // star-ish
                _ => rng.gen_range(0..v),           // uniform random
            };
            edges.push((p, v));
            parent.push(p);
            depth.push(depth[p as usize] + 1);
        }
        let graph = Graph::from_edges(n, &edges).unwrap();
        let members: Vec<u32> = (0..n as u32).collect();
        let tree = RootedTree::from_parts(1, 0, 0, members, parent, depth);
        let labels = build_tree_labels(&tree, &graph).unwrap();
        let adj: Vec<Vec<u32>> = (0..n as u32).map(|v| graph.neighbors(v).to_vec()).collect();

        for _ in 0..100 {
            let s = rng.gen_range(0..n as u32);
            let dist = oracle_bfs(&adj, s);
            for _ in 0..100 {
                let t = rng.gen_range(0..n as u32);
                pairs_checked += 1;
                let decoded = hudg::labels::tree_distance(&labels[s as usize], &labels[t as usize]);
                assert_eq!(
                    decoded, dist[t as usize],
                    "instance {instance}: d({s}, {t})"
                );
                let mut cur = s;
                for _ in 0..decoded {
                    let port = hudg::labels::tree_next_hop_port(
                        &labels[cur as usize],
                        &labels[t as usize],
                    )
                    .unwrap();
                    cur = graph.port_to_neighbor(cur, port).unwrap_or_else(|| {
                        panic!("instance {instance}: invalid port {port} at {cur}")
                    });
                }
                assert_eq!(cur, t, "instance {instance}: walk from {s}");
            }
        }
    }
    report(
        8,
        true,
        &format!("100 random trees, {pairs_checked} pairs: decoded distances exact, walks land in exactly that many hops"),
    );
}

#[test]
fn criterion_09_label_size_shape() {
    let params = ProtonParams::new(2.0, 2.0, Strategy::RadiallyIncreasing).unwrap();
    let mut constants = Vec::new();
    for (i, n) in [(0u64, 1000usize), (1, 10_000)] {
        let rep = sample_hrg(n, None, 1.0, 600 + i).unwrap();
        let graph = build_udg(&rep).unwrap();
        let cover = compute_tree_cover(&graph, Some(&rep), &params).unwrap();
        let labels = build_cover_labels(&graph, &cover).unwrap();
        let stats = label_stats(&labels);
        let max_bits = labels.iter().map(encoded_bits).max().unwrap();
        let log2n = (n as f64).log2();
        constants.push((n, max_bits, stats.k_max, max_bits as f64 / (stats.k_max as f64 * log2n * log2n)));
    }
    let (n_small, bits_small, k_small, c_small) = constants[0];
    let (n_large, bits_large, k_large, c_large) = constants[1];
    let fitted = c_small.max(c_large);
    let ok = c_large <= 1.5 * c_small;
    report(
        9,
        ok,
        &format!(
            "fitted C' = {fitted:.3}: n={n_small}: max {bits_small} bits (k_max {k_small}, c={c_small:.3}); n={n_large}: max {bits_large} bits (k_max {k_large}, c={c_large:.3}); growth ratio {:.3} <= 1.5",
            c_large / c_small
        ),
    );
}

#[test]
fn criterion_10_routing_guarantees() {
    let start = Instant::now();
    let n = 10_000;
    // alpha = 1 sits near the percolation point, so the giant component
    // fluctuates by seed; this one yields a few thousand routable pairs
    let rep = sample_hrg(n, None, 1.0, 5).unwrap();
    let graph = build_udg(&rep).unwrap();
    let params = ProtonParams::new(2.0, 2.0, Strategy::RadiallyIncreasing).unwrap();
    let cover = compute_tree_cover(&graph, Some(&rep), &params).unwrap();
    let labels = build_cover_labels(&graph, &cover).unwrap();
    let (records, summary) = measure_stretch(
        &graph,
        &labels,
        &PairSpec::Sampled {
            count: 10_000,
            seed: 9,
        },
    )
    .expect("routing must be starvation-free (per-hop descent is asserted inline)");

    assert_eq!(
        summary.delivered + summary.skipped_cross_component,
        summary.pairs_requested,
        "every same-component pair must be delivered"
    );
    assert!(summary.delivered >= 500, "sample too thin to be meaningful");
    let mut bound_violations = 0usize;
    for r in &records {
        let bound = (3 * r.shortest_len).max(r.shortest_len + 2);
        if r.routed_len > bound {
            bound_violations += 1;
        }
        // the cover distance dominates the graph distance, obeys the same
        // stretch bound, and caps the routed length
        let (d_c, _) = hudg::labels::cover_distance(
            &labels[r.source as usize],
            &labels[r.target as usize],
        )
        .expect("delivered pairs share a tree");
        assert!(d_c >= r.shortest_len, "{r:?}: d_C {d_c} below graph distance");
        assert!(d_c <= bound, "{r:?}: d_C {d_c} above stretch bound");
        assert!(r.routed_len <= d_c, "{r:?}: route longer than d_C {d_c}");
    }
    let elapsed = start.elapsed();
    let ok = bound_violations == 0 && elapsed.as_secs_f64() < 120.0;
    report(
        10,
        ok,
        &format!(
            "n=10^4 HRG, 10^4 pairs: {} delivered, {} cross-component skipped, {bound_violations} bound violations, max stretch {:.3}, stretch<=1.5 fraction {:.4} (informational), median {:.3}, {:.2}s (< 120s)",
            summary.delivered,
            summary.skipped_cross_component,
            summary.max_stretch,
            summary.frac_le_1_5,
            summary.median,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_11_determinism() {
    // full pipeline through the binary, twice, byte-compared
    let exe = env!("CARGO_BIN_EXE_hudg");
    let base = std::env::temp_dir().join(format!("hudg-acceptance-{}", std::process::id()));
    let mut identical = true;
    let mut artifacts = Vec::new();
    for run in ["a", "b"] {
        let dir = base.join(run);
        fs::create_dir_all(&dir).unwrap();
        let rep = dir.join("g.rep");
        let cover = dir.join("g.cover");
        let lbl = dir.join("g.lbl");
        let routes = dir.join("g.routes.csv");
        let summary = dir.join("g.summary.csv");
        let steps: Vec<Vec<&str>> = vec![
            vec!["generate", "hrg", "--n", "2000", "--seed", "42", "--out", rep.to_str().unwrap()],
            vec!["cover", "--in", rep.to_str().unwrap(), "--out", cover.to_str().unwrap()],
            vec![
                "label",
                "--graph",
                rep.to_str().unwrap(),
                "--in",
                cover.to_str().unwrap(),
                "--out",
                lbl.to_str().unwrap(),
            ],
            vec![
                "eval",
                "--graph",
                rep.to_str().unwrap(),
                "--labels",
                lbl.to_str().unwrap(),
                "--pairs",
                "2000",
                "--seed",
                "9",
                "--out",
                routes.to_str().unwrap(),
                "--summary-out",
                summary.to_str().unwrap(),
            ],
        ];
        for step in steps {
            let out = Command::new(exe).args(&step).output().unwrap();
            assert!(
                out.status.success(),
                "step {step:?}: {}",
                String::from_utf8_lossy(&out.stderr)
            );
        }
        artifacts.push(
            [rep, cover, lbl, routes, summary]
                .map(|p| fs::read(Path::new(&p)).unwrap())
                .to_vec(),
        );
    }
    for (a, b) in artifacts[0].iter().zip(&artifacts[1]) {
        identical &= a == b;
    }

    // in-process repetition of the cover/label/eval stages
    let rep = sample_hrg(600, None, 1.0, 4242).unwrap();
    let graph = build_udg(&rep).unwrap();
    let params = ProtonParams::new(2.0, 2.0, Strategy::RadiallyIncreasing).unwrap();
    let mut dumps = Vec::new();
    for _ in 0..2 {
        let cover = compute_tree_cover(&graph, Some(&rep), &params).unwrap();
        let labels = build_cover_labels(&graph, &cover).unwrap();
        let (records, _) = measure_stretch(
            &graph,
            &labels,
            &PairSpec::Sampled {
                count: 1500,
                seed: 3,
            },
        )
        .unwrap();
        let mut cover_bytes = Vec::new();
        hudg::proton::write_cover(&cover, &mut cover_bytes).unwrap();
        let mut label_bytes = Vec::new();
        hudg::labels::write_label_store(&labels, &mut label_bytes).unwrap();
        let mut route_bytes = Vec::new();
        write_routes_csv(&records, &mut route_bytes).unwrap();
        dumps.push((cover_bytes, label_bytes, route_bytes));
    }
    identical &= dumps[0] == dumps[1];

    report(
        11,
        identical,
        "two binary pipeline runs (n=2000) and two in-process runs yield byte-identical representation, cover, label store, and CSV outputs",
    );
}
