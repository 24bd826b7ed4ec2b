//! Hyperbolic geometry in the polar-coordinate and Poincaré disk models:
//! distances, the adjacency-threshold angle `theta`, and the closed-form
//! bounds on it that the verification suites rely on.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Tolerance for arguments that land just outside the domain of `acos`,
/// `asin`, or `acosh` due to round-off. Beyond it, a domain error is raised.
pub const DOMAIN_EPS: f64 = 1e-12;

/// A point of the hyperbolic plane in polar coordinates: distance to the
/// pole and angle against the polar axis, normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    radius: f64,
    angle: f64,
}

impl PolarPoint {
    /// Creates a point, normalizing the angle into `[0, 2π)`.
    /// Fails if the radius is negative or either coordinate is non-finite.
    pub fn new(radius: f64, angle: f64) -> Result<Self> {
        if !radius.is_finite() || radius < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "polar radius must be finite and non-negative, got {radius}"
            )));
        }
        if !angle.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "polar angle must be finite, got {angle}"
            )));
        }
        Ok(Self {
            radius,
            angle: normalize_angle(angle),
        })
    }

    /// The pole of the plane.
    pub fn origin() -> Self {
        Self {
            radius: 0.0,
            angle: 0.0,
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }
}

/// A point in Cartesian coordinates, used for Euclidean representations and
/// for the Poincaré disk (where the open unit disk is required).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanPoint {
    pub x: f64,
    pub y: f64,
}

impl EuclideanPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    pub fn distance_to(&self, other: &EuclideanPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

/// Maps an angle to `[0, 2π)`.
pub fn normalize_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// Angular distance between two angles, in `[0, π]`.
pub fn angular_distance(phi1: f64, phi2: f64) -> f64 {
    let d = (normalize_angle(phi1) - normalize_angle(phi2)).abs();
    PI - (PI - d).abs()
}

/// `cosh(d) - 1` for the hyperbolic distance `d` between two polar points,
/// written as a sum of non-negative terms so that no cancellation occurs:
/// `2 sinh²(Δr/2) + 2 sinh(r₁) sinh(r₂) sin²(Δφ/2)`.
///
/// `sinh_r1` and `sinh_r2` must equal `r1.sinh()` and `r2.sinh()`; callers
/// that precompute them per vertex get bit-identical results to
/// [`hyperbolic_distance`].
#[inline]
pub(crate) fn cosh_distance_minus_one(
    r1: f64,
    sinh_r1: f64,
    phi1: f64,
    r2: f64,
    sinh_r2: f64,
    phi2: f64,
) -> f64 {
    let half_dr = 0.5 * (r1 - r2);
    let sh = half_dr.sinh();
    let sa = (0.5 * angular_distance(phi1, phi2)).sin();
    2.0 * (sh * sh + sinh_r1 * sinh_r2 * sa * sa)
}

/// Hyperbolic distance between two polar points.
///
/// Evaluated as `acosh(1 + y)` with `y = cosh(d) - 1` accumulated without
/// cancellation, and the final `acosh` expanded through `ln_1p`, so small
/// distances keep full relative precision. Arguments within [`DOMAIN_EPS`]
/// below the `acosh` domain are clamped; anything further out is an error.
pub fn hyperbolic_distance(p: &PolarPoint, q: &PolarPoint) -> Result<f64> {
    let y = cosh_distance_minus_one(
        p.radius,
        p.radius.sinh(),
        p.angle,
        q.radius,
        q.radius.sinh(),
        q.angle,
    );
    acosh_one_plus(y)
}

/// `acosh(1 + y)` with the round-off clamp policy applied to `y`.
pub(crate) fn acosh_one_plus(y: f64) -> Result<f64> {
    if y >= 0.0 {
        Ok((y + (y * (y + 2.0)).sqrt()).ln_1p())
    } else if y >= -DOMAIN_EPS {
        Ok(0.0)
    } else {
        Err(Error::NumericalDomain {
            context: "acosh",
            value: 1.0 + y,
        })
    }
}

/// Hyperbolic distance between two points of the Poincaré disk.
/// Both points must lie strictly inside the unit disk.
pub fn poincare_distance(p: &EuclideanPoint, q: &EuclideanPoint) -> Result<f64> {
    let np = p.norm();
    let nq = q.norm();
    if np >= 1.0 {
        return Err(Error::NumericalDomain {
            context: "poincare point norm",
            value: np,
        });
    }
    if nq >= 1.0 {
        return Err(Error::NumericalDomain {
            context: "poincare point norm",
            value: nq,
        });
    }
    let t = p.distance_to(q) / ((1.0 - np * np) * (1.0 - nq * nq)).sqrt();
    Ok(2.0 * t.asinh())
}

fn check_theta_radii(r1: f64, r2: f64, threshold: f64) -> Result<()> {
    if !(r1 > 0.0 && r2 > 0.0 && r1 <= threshold && r2 <= threshold) {
        return Err(Error::InvalidParameter(format!(
            "theta radii must lie in (0, R]; got r1={r1}, r2={r2}, R={threshold}"
        )));
    }
    Ok(())
}

/// The largest angular distance at which points of radii `r1` and `r2` are
/// still within hyperbolic distance `threshold` of each other.
///
/// Returns `π` when `r1 + r2 <= threshold` (the points are within reach at
/// any angle). Requires `r1, r2 ∈ (0, R]`.
pub fn theta(r1: f64, r2: f64, threshold: f64) -> Result<f64> {
    check_theta_radii(r1, r2, threshold)?;
    if r1 + r2 <= threshold {
        return Ok(PI);
    }
    // acos((cosh r1 cosh r2 - cosh R)/(sinh r1 sinh r2)) recast as
    // 2 asin(sqrt(sinh((R+r1-r2)/2) sinh((R-r1+r2)/2) / (sinh r1 sinh r2))),
    // which keeps full relative precision for small angles. Going through
    // `delta` keeps the evaluation exactly symmetric in r1 and r2.
    let delta = r1 - r2;
    let s1 = (0.5 * (threshold + delta)).sinh();
    let s2 = (0.5 * (threshold - delta)).sinh();
    let ratio = s1 * s2 / (r1.sinh() * r2.sinh());
    let root = ratio.max(0.0).sqrt();
    if root <= 1.0 {
        Ok(2.0 * root.asin())
    } else if root <= 1.0 + DOMAIN_EPS {
        Ok(PI)
    } else {
        Err(Error::NumericalDomain {
            context: "theta asin",
            value: root,
        })
    }
}

/// `theta(r, r)` with the threshold equal to `r`, via the closed form
/// `acos(1 - 1/(cosh r + 1))`. Monotonically decreasing in `r`.
pub fn theta_boundary(r: f64) -> Result<f64> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "boundary radius must be finite and non-negative, got {r}"
        )));
    }
    Ok((1.0 - 1.0 / (r.cosh() + 1.0)).acos())
}

fn check_sandwich_pre(r1: f64, r2: f64, threshold: f64) -> Result<()> {
    if threshold <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "threshold must be positive, got {threshold}"
        )));
    }
    check_theta_radii(r1, r2, threshold)?;
    if r1 + r2 < threshold {
        return Err(Error::InvalidParameter(format!(
            "bounds require r1 + r2 >= R; got r1={r1}, r2={r2}, R={threshold}"
        )));
    }
    Ok(())
}

/// Lower bound on [`theta`]:
/// `2 sqrt(e^(R-r1-r2) + e^(-R-r1-r2) - e^(-2 r1) - e^(-2 r2))`.
///
/// Requires `R > 0`, `r1, r2 ∈ (0, R]` and `r1 + r2 >= R`. The radicand is
/// non-negative under these preconditions and is clamped at zero.
pub fn theta_lower_bound(r1: f64, r2: f64, threshold: f64) -> Result<f64> {
    check_sandwich_pre(r1, r2, threshold)?;
    let radicand = (threshold - r1 - r2).exp() + (-threshold - r1 - r2).exp()
        - ((-2.0 * r1).exp() + (-2.0 * r2).exp());
    Ok(2.0 * radicand.max(0.0).sqrt())
}

/// Upper bound on [`theta`]: `π e^((R-r1-r2)/2)`. Same preconditions as
/// [`theta_lower_bound`].
pub fn theta_upper_bound(r1: f64, r2: f64, threshold: f64) -> Result<f64> {
    check_sandwich_pre(r1, r2, threshold)?;
    Ok(PI * (0.5 * (threshold - r1 - r2)).exp())
}

/// Weaker but simpler lower bound on [`theta`]: `e^((R-r1-r2)/2)`.
///
/// Requires `R >= 1`, `r1, r2 ∈ (0, R]`, `r1 + r2 >= R`, and
/// `|r1 - r2| <= R - 1`.
pub fn theta_simple_lower_bound(r1: f64, r2: f64, threshold: f64) -> Result<f64> {
    if threshold < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "simple lower bound requires R >= 1, got {threshold}"
        )));
    }
    check_sandwich_pre(r1, r2, threshold)?;
    if (r1 - r2).abs() > threshold - 1.0 {
        return Err(Error::InvalidParameter(format!(
            "simple lower bound requires |r1 - r2| <= R - 1; got r1={r1}, r2={r2}, R={threshold}"
        )));
    }
    Ok((0.5 * (threshold - r1 - r2)).exp())
}

/// Upper bound `k π e^(R/2 - r)` on the angular distance spanned by a
/// `k`-hop path whose vertices all have radius at least `r >= R/2`.
pub fn path_angle_bound(hops: u32, r: f64, threshold: f64) -> Result<f64> {
    if hops == 0 {
        return Err(Error::InvalidParameter(
            "path angle bound requires at least one hop".into(),
        ));
    }
    if r < threshold / 2.0 {
        return Err(Error::InvalidParameter(format!(
            "path angle bound requires r >= R/2; got r={r}, R={threshold}"
        )));
    }
    Ok(hops as f64 * PI * (threshold / 2.0 - r).exp())
}
