//! Hyperbolic unit disk graphs and compact routing on them.
//!
//! The crate covers the full pipeline: exact hyperbolic geometry and the
//! adjacency-threshold angle ([`geom`]), disk representations, generators,
//! and the Euclidean-to-hyperbolic embedding ([`repr`]), clique covers of
//! strongly hyperbolic instances ([`cliques`]), phase-based tree covers
//! ([`proton`]), heavy-path distance/port labels composed per cover
//! ([`labels`]), and starvation-free greedy routing with stretch
//! measurement ([`router`]).

pub mod cliques;
pub mod error;
pub mod geom;
pub mod graph;
pub mod labels;
pub mod proton;
pub mod repr;
pub mod router;

pub use cliques::CliqueCover;
pub use error::{Error, Result};
pub use geom::{EuclideanPoint, PolarPoint};
pub use graph::Graph;
pub use labels::{RoutingLabel, TreeLabel};
pub use proton::{ProtonParams, RootedTree, Strategy, TreeCover};
pub use repr::{ConversionCertificate, DiskRepresentation, Metric};
pub use router::{PairSpec, RouteRecord, StretchSummary};
