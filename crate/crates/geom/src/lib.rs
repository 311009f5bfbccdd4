//! Planar realisation of the model generators.
//!
//! Six disks sit on a ring around the origin `O`; each carries a wedge of
//! thirty Cantor branches, sampled at finite depth. The maps here are
//! compactly supported homeomorphisms of the plane, and [`apply_word`]
//! recovers the permutation they induce on the wedge labels so it can be
//! compared with the algebraic label action.

pub mod config;
pub mod maps;
pub mod point;
pub mod samples;
pub mod svg;
pub mod word;

pub use config::{ConfigError, DiskConfig, Sense};
pub use maps::{eval_alpha1, eval_alpha1r, eval_r, eval_sigma, Support};
pub use point::Point;
pub use samples::{LabeledPoint, SampleSet};
pub use word::{apply_word, GeomError, MapExpr, MapGen, MapStep, Orbit};

/// Probe points on a square grid over `[-half, half]²`.
pub fn probe_grid(n: usize, half: f64) -> Vec<Point> {
    let step = 2.0 * half / (n - 1) as f64;
    (0..n)
        .flat_map(|i| (0..n).map(move |j| Point::new(-half + i as f64 * step, -half + j as f64 * step)))
        .collect()
}

/// Probe points outside the support of `step` that it nevertheless moves.
pub fn support_violations(step: &MapStep, cfg: &DiskConfig, probes: &[Point]) -> Vec<Point> {
    let support = step.support(cfg);
    probes
        .iter()
        .copied()
        .filter(|&p| !support.contains(p, cfg) && step.apply(p, cfg).dist(p) > cfg.tolerance)
        .collect()
}
