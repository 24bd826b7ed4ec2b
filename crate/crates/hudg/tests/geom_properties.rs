//! Property tests for the geometric kernel: the theta sandwich, adjacency
//! characterization, monotonicity, and exact symmetries.

use hudg::geom::{
    angular_distance, hyperbolic_distance, theta, theta_boundary, theta_lower_bound,
    theta_simple_lower_bound, theta_upper_bound, PolarPoint,
};
use proptest::prelude::*;

const SLACK: f64 = 1e-9;

/// An admissible (r1, r2, R) triple with r1 + r2 >= R.
fn sandwich_triple() -> impl Strategy<Value = (f64, f64, f64)> {
    (1.0..30.0f64, 0.0..1.0f64, 0.0..1.0f64).prop_filter_map(
        "radii must be positive with r1 + r2 >= R",
        |(big_r, f1, f2)| {
            let r1 = f1 * big_r;
            let r2 = f2 * big_r;
            (r1 > 0.0 && r2 > 0.0 && r1 + r2 >= big_r).then_some((r1, r2, big_r))
        },
    )
}

proptest! {
    #[test]
    fn theta_sandwich((r1, r2, big_r) in sandwich_triple()) {
        let t = theta(r1, r2, big_r).unwrap();
        let lo = theta_lower_bound(r1, r2, big_r).unwrap();
        let hi = theta_upper_bound(r1, r2, big_r).unwrap();
        prop_assert!(lo <= t + SLACK, "lower {lo} > theta {t}");
        prop_assert!(t <= hi + SLACK, "theta {t} > upper {hi}");
    }

    #[test]
    fn simple_sandwich((r1, r2, big_r) in sandwich_triple()) {
        prop_assume!((r1 - r2).abs() <= big_r - 1.0);
        let t = theta(r1, r2, big_r).unwrap();
        let lo = theta_simple_lower_bound(r1, r2, big_r).unwrap();
        let hi = theta_upper_bound(r1, r2, big_r).unwrap();
        prop_assert!(lo <= t + SLACK);
        prop_assert!(t <= hi + SLACK);
    }

    #[test]
    fn theta_symmetry_exact((r1, r2, big_r) in sandwich_triple()) {
        prop_assert_eq!(theta(r1, r2, big_r).unwrap(), theta(r2, r1, big_r).unwrap());
    }

    #[test]
    fn adjacency_matches_theta_characterization(
        (r1, r2, big_r) in sandwich_triple(),
        phi1 in 0.0..std::f64::consts::TAU,
        phi2 in 0.0..std::f64::consts::TAU,
    ) {
        let p = PolarPoint::new(r1, phi1).unwrap();
        let q = PolarPoint::new(r2, phi2).unwrap();
        let d = hyperbolic_distance(&p, &q).unwrap();
        let t = theta(r1, r2, big_r).unwrap();
        let dphi = angular_distance(phi1, phi2);
        let by_distance = d <= big_r;
        let by_angle = dphi <= t;
        if by_distance != by_angle {
            prop_assert!((dphi - t).abs() <= SLACK,
                "distance test {by_distance} vs angle test {by_angle} away from boundary: dphi={dphi}, theta={t}");
        }
    }

    #[test]
    fn boundary_theta_monotone(r in 0.0..30.0f64, delta in 1e-6..10.0f64) {
        prop_assert!(theta_boundary(r).unwrap() >= theta_boundary(r + delta).unwrap());
    }

    #[test]
    fn distance_symmetry_exact(
        r1 in 0.0..25.0f64,
        r2 in 0.0..25.0f64,
        phi1 in 0.0..std::f64::consts::TAU,
        phi2 in 0.0..std::f64::consts::TAU,
    ) {
        let p = PolarPoint::new(r1, phi1).unwrap();
        let q = PolarPoint::new(r2, phi2).unwrap();
        prop_assert_eq!(
            hyperbolic_distance(&p, &q).unwrap(),
            hyperbolic_distance(&q, &p).unwrap()
        );
        prop_assert_eq!(hyperbolic_distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn angular_distance_range(a in -100.0..100.0f64, b in -100.0..100.0f64) {
        let d = angular_distance(a, b);
        prop_assert!((0.0..=std::f64::consts::PI).contains(&d));
        prop_assert_eq!(d, angular_distance(b, a));
    }
}
