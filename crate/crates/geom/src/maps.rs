//! The generator homeomorphisms. Each is a rotation whose angle depends only
//! on the distance to a fixed centre, so it preserves those distances and its
//! inverse is the same map with the angle negated.

use std::f64::consts::{PI, TAU};

use gammakit_core::labels::{BRANCHES, DISKS};

use crate::config::DiskConfig;
use crate::point::Point;

/// Rotation about `c` by `angle`, rigid within `inner`, fading linearly to
/// the identity at `outer`.
fn twist(p: Point, c: Point, angle: f64, inner: f64, outer: f64) -> Point {
    let d = p.dist(c);
    if d >= outer {
        return p;
    }
    let k = if d <= inner { 1.0 } else { (outer - d) / (outer - inner) };
    p.rotate_about(c, angle * k)
}

/// Rotation about the origin, rigid on the band `|r - ring| <= inner`.
fn band_twist(p: Point, ring: f64, angle: f64, inner: f64, outer: f64) -> Point {
    let off = (p.dist(Point::ORIGIN) - ring).abs();
    if off >= outer {
        return p;
    }
    let k = if off <= inner { 1.0 } else { (outer - off) / (outer - inner) };
    p.rotate_about(Point::ORIGIN, angle * k)
}

/// Rotates every disk by `angle` about its own centre (at most one disk's
/// annulus contains `p`).
fn spin_disks(cfg: &DiskConfig, p: Point, angle: f64, disks: &[usize]) -> Point {
    let (r0, r1) = cfg.damping;
    for &j in disks {
        let c = cfg.center(j);
        if p.dist(c) < r1 {
            return twist(p, c, angle, r0, r1);
        }
    }
    p
}

const ALL_DISKS: [usize; DISKS] = [1, 2, 3, 4, 5, 6];

/// `R^m`: every disk turns by `m · 2π/30`, twisted back on its annulus.
pub fn eval_r(m: i64, p: Point, cfg: &DiskConfig) -> Point {
    let angle = m as f64 * TAU / BRANCHES as f64;
    spin_disks(cfg, p, angle, &ALL_DISKS)
}

/// Half twist exchanging disk `i` and its ring successor, keeping both
/// interiors parallel to themselves.
pub fn eval_sigma(i: usize, inverse: bool, p: Point, cfg: &DiskConfig) -> Point {
    let pair = [i, i % DISKS + 1];
    let m = cfg.swap_center(i);
    let s = cfg.sigma_sense.sign() * if inverse { -1.0 } else { 1.0 };
    let (s0, s1) = cfg.swap;
    if inverse {
        let q = twist(p, m, s * PI, s0, s1);
        spin_disks(cfg, q, -s * PI, &pair)
    } else {
        let q = spin_disks(cfg, p, -s * PI, &pair);
        twist(q, m, s * PI, s0, s1)
    }
}

/// `α₁`: the global rotation of order six about the origin.
pub fn eval_alpha1(inverse: bool, p: Point, cfg: &DiskConfig) -> Point {
    let s = cfg.alpha1_sense.sign() * if inverse { -1.0 } else { 1.0 };
    p.rotate_about(Point::ORIGIN, s * TAU / DISKS as f64)
}

/// `α₁ʳ`: each disk slides one step counterclockwise along the ring with its
/// interior kept parallel; identity off the transport band.
pub fn eval_alpha1r(inverse: bool, p: Point, cfg: &DiskConfig) -> Point {
    let step = TAU / DISKS as f64 * if inverse { -1.0 } else { 1.0 };
    let (t0, t1) = cfg.transport;
    if inverse {
        let q = band_twist(p, cfg.ring_radius, step, t0, t1);
        spin_disks(cfg, q, -step, &ALL_DISKS)
    } else {
        let q = spin_disks(cfg, p, -step, &ALL_DISKS);
        band_twist(q, cfg.ring_radius, step, t0, t1)
    }
}

/// Where a generator may move points. `None` means the whole plane.
#[derive(Debug, Clone, PartialEq)]
pub enum Support {
    Disks { radius: f64 },
    Ball { center: Point, radius: f64 },
    Band { inner: f64, outer: f64 },
    Plane,
}

impl Support {
    pub fn contains(&self, p: Point, cfg: &DiskConfig) -> bool {
        match *self {
            Support::Disks { radius } => (1..=DISKS).any(|j| p.dist(cfg.center(j)) < radius),
            Support::Ball { center, radius } => p.dist(center) < radius,
            Support::Band { inner, outer } => {
                let r = p.dist(Point::ORIGIN);
                r > inner && r < outer
            }
            Support::Plane => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Point, b: Point) -> bool {
        a.dist(b) < 1e-9
    }

    #[test]
    fn sigma_swaps_centres_both_ways() {
        let cfg = DiskConfig::default();
        for i in 1..=6 {
            let j = i % 6 + 1;
            let (pi, pj) = (cfg.center(i), cfg.center(j));
            assert!(close(eval_sigma(i, false, pi, &cfg), pj));
            assert!(close(eval_sigma(i, false, pj, &cfg), pi));
            assert!(close(eval_sigma(i, true, pj, &cfg), pi));
        }
    }

    #[test]
    fn centres_are_fixed_by_rotation() {
        let cfg = DiskConfig::default();
        for j in 1..=6 {
            assert!(close(eval_r(7, cfg.center(j), &cfg), cfg.center(j)));
        }
    }

    #[test]
    fn alpha1r_carries_each_disk_to_the_next() {
        let cfg = DiskConfig::default();
        for j in 1..=6 {
            let q = eval_alpha1r(false, cfg.center(j), &cfg);
            assert!(close(q, cfg.center(j % 6 + 1)));
        }
        assert!(close(eval_alpha1r(false, Point::ORIGIN, &cfg), Point::ORIGIN));
    }
}
