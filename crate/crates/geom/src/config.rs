use serde::{Deserialize, Serialize};
use thiserror::Error;

use gammakit_core::labels::DISKS;

use crate::point::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    #[default]
    Counterclockwise,
    Clockwise,
}

impl Sense {
    pub fn sign(self) -> f64 {
        match self {
            Sense::Counterclockwise => 1.0,
            Sense::Clockwise => -1.0,
        }
    }
}

/// Geometry of the six disks and the supports of the generator maps.
///
/// Disk `j` is centred at angle `(j-1)·2π/6` on the circle of radius
/// `ring_radius` about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DiskConfig {
    pub ring_radius: f64,
    pub disk_radius: f64,
    /// Rigid radius and outer radius of the twist-back annulus around each disk.
    pub damping: (f64, f64),
    /// Rigid radius and outer radius of the ball swapping two neighbours.
    pub swap: (f64, f64),
    /// Half-widths of the rigid band and of the support of the ring transport.
    pub transport: (f64, f64),
    pub depth: u32,
    pub tolerance: f64,
    pub sigma_sense: Sense,
    pub alpha1_sense: Sense,
}

impl Default for DiskConfig {
    fn default() -> Self {
        DiskConfig {
            ring_radius: 12.0,
            disk_radius: 2.0,
            damping: (2.2, 2.8),
            swap: (9.0, 12.5),
            transport: (3.0, 5.0),
            depth: 3,
            tolerance: 1e-9,
            sigma_sense: Sense::Clockwise,
            alpha1_sense: Sense::Counterclockwise,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("{field} must be a positive finite number, got {value}")]
    NotPositive { field: &'static str, value: f64 },
    #[error("{0}")]
    Constraint(String),
    #[error("depth must be between 1 and {max}, got {depth}")]
    Depth { depth: u32, max: u32 },
    #[error("cannot read geometry config: {0}")]
    Parse(String),
}

pub const MAX_DEPTH: u32 = 8;

impl DiskConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: DiskConfig = serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    pub fn center(&self, disk: usize) -> Point {
        let theta = (disk - 1) as f64 * std::f64::consts::TAU / DISKS as f64;
        Point::polar(self.ring_radius, theta)
    }

    /// Midpoint between the centres of disk `i` and its ring successor.
    pub fn swap_center(&self, i: usize) -> Point {
        self.center(i).midpoint(self.center(i % DISKS + 1))
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let scalars = [
            ("ring_radius", self.ring_radius),
            ("disk_radius", self.disk_radius),
            ("damping.0", self.damping.0),
            ("damping.1", self.damping.1),
            ("swap.0", self.swap.0),
            ("swap.1", self.swap.1),
            ("transport.0", self.transport.0),
            ("transport.1", self.transport.1),
            ("tolerance", self.tolerance),
        ];
        for (field, value) in scalars {
            if !(value.is_finite() && value > 0.0) {
                return Err(ConfigError::NotPositive { field, value });
            }
        }
        if self.depth == 0 || self.depth > MAX_DEPTH {
            return Err(ConfigError::Depth { depth: self.depth, max: MAX_DEPTH });
        }
        let ring = self.ring_radius;
        let (r0, r1) = self.damping;
        let (s0, s1) = self.swap;
        let (t0, t1) = self.transport;
        let need = |ok: bool, msg: String| if ok { Ok(()) } else { Err(ConfigError::Constraint(msg)) };

        need(r0 < r1 && s0 < s1 && t0 < t1, "inner radii must be below outer radii".into())?;
        need(
            self.disk_radius <= r0,
            format!("disk radius {} exceeds the rigid damping radius {r0}", self.disk_radius),
        )?;
        // Neighbouring centres are one ring radius apart.
        need(
            2.0 * r1 < ring,
            format!("damping annuli of radius {r1} overlap on a ring of radius {ring}"),
        )?;
        // The swapped pair sits ring/2 from the midpoint, the next disks ring·√7/2.
        need(
            ring / 2.0 + r1 <= s0,
            format!("swap ball radius {s0} does not contain both disks (needs {})", ring / 2.0 + r1),
        )?;
        let far = ring * 7f64.sqrt() / 2.0 - r1;
        need(s1 < far, format!("swap ball radius {s1} reaches a third disk (limit {far})"))?;
        need(
            r1 <= t0 && t1 < ring,
            format!("transport band ({t0}, {t1}) must cover the damping annuli and miss the origin"),
        )?;
        Ok(())
    }
}
