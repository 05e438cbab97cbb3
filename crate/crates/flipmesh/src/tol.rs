//! Tolerance model shared by every module.
//!
//! All relative tolerances are scaled by a local length (typically the
//! bounding-box diagonal of the points involved), never by a global
//! constant, so classification is invariant under uniform scaling.

use serde::{Deserialize, Serialize};

/// Tolerance bands for geometric classification.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Half-width of the NonStrict band around an angle sum of π, in radians.
    pub angle: f64,
    /// Relative coplanarity tolerance, scaled by the local bounding-box diagonal.
    pub plane: f64,
    /// Relative degeneracy tolerance for lengths and areas.
    pub deg: f64,
    /// Relative tolerance for area comparisons.
    pub area: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            angle: 1e-9,
            plane: 1e-9,
            deg: 1e-12,
            area: 1e-12,
        }
    }
}

impl Tolerances {
    /// Length below which a segment counts as degenerate at the given scale.
    pub fn degenerate_length(&self, scale: f64) -> f64 {
        self.deg * scale.max(1.0)
    }

    /// Distance below which a point counts as lying on a plane at the given scale.
    pub fn coplanar_distance(&self, scale: f64) -> f64 {
        self.plane * scale.max(1.0)
    }
}
