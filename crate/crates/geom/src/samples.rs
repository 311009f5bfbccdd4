use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use gammakit_core::labels::{WedgeLabel, BRANCHES, DISKS};

use crate::config::{ConfigError, DiskConfig};
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub position: Point,
    pub label: WedgeLabel,
    /// Middle-third address, each digit 0 or 2.
    pub address: String,
}

/// Fraction of the branch radius for a Cantor address: the right endpoint
/// of its interval, so no point lands on the wedge point itself.
fn cantor_point(digits: &[u8]) -> f64 {
    let left: f64 = digits
        .iter()
        .enumerate()
        .map(|(k, &d)| d as f64 / 3f64.powi(k as i32 + 1))
        .sum();
    left + 3f64.powi(-(digits.len() as i32))
}

#[derive(Debug, Clone)]
pub struct SampleSet {
    pub points: Vec<LabeledPoint>,
    /// Indices into `points`, sorted by x coordinate.
    by_x: Vec<usize>,
}

impl SampleSet {
    pub fn build(cfg: &DiskConfig) -> Result<SampleSet, ConfigError> {
        cfg.validate()?;
        let d = cfg.depth as usize;
        let mut points = Vec::with_capacity((DISKS * BRANCHES) << d);
        for disk in 1..=DISKS {
            let c = cfg.center(disk);
            for branch in 0..BRANCHES {
                let theta = branch as f64 * TAU / BRANCHES as f64;
                for code in 0..1u32 << d {
                    let digits: Vec<u8> = (0..d).map(|k| 2 * ((code >> (d - 1 - k)) & 1) as u8).collect();
                    let r = cfg.disk_radius * cantor_point(&digits);
                    let off = Point::polar(r, theta);
                    points.push(LabeledPoint {
                        position: Point::new(c.x + off.x, c.y + off.y),
                        label: WedgeLabel::new(disk, branch as i64),
                        address: digits.iter().map(|v| char::from(b'0' + v)).collect(),
                    });
                }
            }
        }
        let mut by_x: Vec<usize> = (0..points.len()).collect();
        by_x.sort_by(|&a, &b| points[a].position.x.total_cmp(&points[b].position.x));
        Ok(SampleSet { points, by_x })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// All sample indices within `tol` of `p`.
    pub fn near(&self, p: Point, tol: f64) -> Vec<usize> {
        let lo = self.by_x.partition_point(|&i| self.points[i].position.x < p.x - tol);
        self.by_x[lo..]
            .iter()
            .take_while(|&&i| self.points[i].position.x <= p.x + tol)
            .copied()
            .filter(|&i| self.points[i].position.dist(p) <= tol)
            .collect()
    }

    /// Smallest distance between two samples, for sanity against the tolerance.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (k, &i) in self.by_x.iter().enumerate() {
            let p = self.points[i].position;
            for &j in &self.by_x[k + 1..] {
                let q = self.points[j].position;
                if q.x - p.x >= best {
                    break;
                }
                best = best.min(p.dist(q));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_follow_depth() {
        for depth in 1..=4 {
            let cfg = DiskConfig { depth, ..DiskConfig::default() };
            let s = SampleSet::build(&cfg).unwrap();
            assert_eq!(s.len(), 6 * 30 * (1 << depth));
        }
    }

    #[test]
    fn samples_sit_inside_their_disk() {
        let cfg = DiskConfig::default();
        let s = SampleSet::build(&cfg).unwrap();
        for p in &s.points {
            assert!(p.position.dist(cfg.center(p.label.disk)) <= cfg.disk_radius + 1e-12);
        }
        assert!(s.min_separation() > 1000.0 * cfg.tolerance);
    }

    #[test]
    fn cantor_points_are_right_endpoints() {
        assert_eq!(cantor_point(&[0]), 1.0 / 3.0);
        assert_eq!(cantor_point(&[2]), 1.0);
        assert!((cantor_point(&[2, 0]) - 7.0 / 9.0).abs() < 1e-15);
    }
}
