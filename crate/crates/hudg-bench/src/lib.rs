//! Shared fixtures for the pipeline benchmarks.

use hudg::graph::Graph;
use hudg::labels::{build_cover_labels, RoutingLabel};
use hudg::proton::{compute_tree_cover, ProtonParams, Strategy, TreeCover};
use hudg::repr::{build_udg, sample_hrg, DiskRepresentation};

/// A generated instance with everything the routing stages need.
pub struct Fixture {
    pub rep: DiskRepresentation,
    pub graph: Graph,
    pub cover: TreeCover,
    pub labels: Vec<RoutingLabel>,
}

/// Builds the standard benchmark instance: an HRG with the experiment
/// defaults (a = b = 2, radially increasing roots).
pub fn fixture(n: usize, seed: u64) -> Fixture {
    let rep = sample_hrg(n, None, 1.0, seed).expect("valid parameters");
    let graph = build_udg(&rep).expect("valid representation");
    let params = ProtonParams::new(2.0, 2.0, Strategy::RadiallyIncreasing).expect("valid params");
    let cover = compute_tree_cover(&graph, Some(&rep), &params).expect("cover");
    let labels = build_cover_labels(&graph, &cover).expect("labels");
    Fixture {
        rep,
        graph,
        cover,
        labels,
    }
}
