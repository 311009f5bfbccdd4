use std::fmt;

use serde::Serialize;
use thiserror::Error;

use gammakit_core::dsl::{Atom, Expr};
use gammakit_core::labels::{LabelAction, WedgeLabel, LABELS};

use crate::config::DiskConfig;
use crate::maps::{eval_alpha1, eval_alpha1r, eval_r, eval_sigma, Support};
use crate::point::Point;
use crate::samples::SampleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapGen {
    Sigma(u8),
    /// `R^m`; the sign lives in `m`.
    R(i64),
    A1,
    A1r,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapStep {
    pub gen: MapGen,
    pub inverse: bool,
}

impl fmt::Display for MapStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = if self.inverse { "^-1" } else { "" };
        match self.gen {
            MapGen::Sigma(i) => write!(f, "s{i}{inv}"),
            MapGen::R(1) => write!(f, "R"),
            MapGen::R(m) => write!(f, "R^{m}"),
            MapGen::A1 => write!(f, "a1{inv}"),
            MapGen::A1r => write!(f, "a1r{inv}"),
        }
    }
}

impl MapStep {
    pub fn apply(&self, p: Point, cfg: &DiskConfig) -> Point {
        match self.gen {
            MapGen::Sigma(i) => eval_sigma(i as usize, self.inverse, p, cfg),
            MapGen::R(m) => eval_r(m, p, cfg),
            MapGen::A1 => eval_alpha1(self.inverse, p, cfg),
            MapGen::A1r => eval_alpha1r(self.inverse, p, cfg),
        }
    }

    pub fn support(&self, cfg: &DiskConfig) -> Support {
        match self.gen {
            MapGen::Sigma(i) => Support::Ball {
                center: cfg.swap_center(i as usize),
                radius: cfg.swap.1,
            },
            MapGen::R(0) => Support::Disks { radius: 0.0 },
            MapGen::R(_) => Support::Disks { radius: cfg.damping.1 },
            MapGen::A1 => Support::Plane,
            MapGen::A1r => Support::Band {
                inner: cfg.ring_radius - cfg.transport.1,
                outer: cfg.ring_radius + cfg.transport.1,
            },
        }
    }
}

/// A word in the planar generators, written left to right and applied right
/// to left.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct MapExpr(pub Vec<MapStep>);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("expression expands past {cap} generator steps")]
    Cap { cap: usize },
    #[error("sample {label} moved to ({x}, {y}), within tolerance of {matches} samples")]
    Tolerance {
        label: WedgeLabel,
        x: f64,
        y: f64,
        matches: usize,
    },
    #[error("samples {first} and {second} both land on {target}")]
    NotBijective {
        first: WedgeLabel,
        second: WedgeLabel,
        target: WedgeLabel,
    },
    #[error("labels {label} of one wedge do not move together")]
    Incoherent { label: WedgeLabel },
}

impl MapExpr {
    /// Expands a model expression into planar generators: `rho` is the ring
    /// transport and `a2` is `a1 s5 R`. Adjacent rotations are merged.
    pub fn from_expr(e: &Expr, cap: usize) -> Result<MapExpr, GeomError> {
        let atoms = e.expand(cap).map_err(|cap| GeomError::Cap { cap })?;
        let mut steps: Vec<MapStep> = Vec::new();
        let mut push = |gen: MapGen, inverse: bool| {
            if let (MapGen::R(m), Some(MapStep { gen: MapGen::R(k), .. })) = (gen, steps.last_mut()) {
                *k += m;
                if *k == 0 {
                    steps.pop();
                }
                return;
            }
            steps.push(MapStep { gen, inverse });
        };
        for (atom, inv) in atoms {
            let sign = if inv { -1 } else { 1 };
            match atom {
                Atom::Id => {}
                Atom::Sigma(i) => push(MapGen::Sigma(i), inv),
                Atom::R => push(MapGen::R(sign), false),
                Atom::Rho => push(MapGen::A1r, inv),
                Atom::A1 => push(MapGen::A1, inv),
                Atom::A2 => {
                    let part = [
                        (MapGen::A1, inv),
                        (MapGen::Sigma(5), inv),
                        (MapGen::R(sign), false),
                    ];
                    if inv {
                        part.into_iter().rev().for_each(|(g, i)| push(g, i));
                    } else {
                        part.into_iter().for_each(|(g, i)| push(g, i));
                    }
                }
            }
        }
        Ok(MapExpr(steps))
    }

    pub fn apply(&self, p: Point, cfg: &DiskConfig) -> Point {
        self.0.iter().rev().fold(p, |q, s| s.apply(q, cfg))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MapExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub moved: Vec<Point>,
    /// For each sample, the sample it lands on.
    pub target: Vec<usize>,
    pub labels: LabelAction,
}

/// Moves every sample through the word and reads off the induced label
/// permutation by nearest-sample matching.
pub fn apply_word(expr: &MapExpr, samples: &SampleSet, cfg: &DiskConfig) -> Result<Orbit, GeomError> {
    let moved: Vec<Point> = samples.points.iter().map(|s| expr.apply(s.position, cfg)).collect();
    let mut target = Vec::with_capacity(moved.len());
    let mut hit: Vec<Option<usize>> = vec![None; samples.len()];
    for (i, &q) in moved.iter().enumerate() {
        let near = samples.near(q, cfg.tolerance);
        let label = samples.points[i].label;
        let &[j] = near.as_slice() else {
            return Err(GeomError::Tolerance { label, x: q.x, y: q.y, matches: near.len() });
        };
        if let Some(prev) = hit[j] {
            return Err(GeomError::NotBijective {
                first: samples.points[prev].label,
                second: label,
                target: samples.points[j].label,
            });
        }
        hit[j] = Some(i);
        target.push(j);
    }

    // Every point of a wedge branch must go to the same branch, with its
    // Cantor address intact.
    let mut image: Vec<Option<WedgeLabel>> = vec![None; LABELS];
    for (i, &j) in target.iter().enumerate() {
        let (src, dst) = (&samples.points[i], &samples.points[j]);
        let slot = &mut image[src.label.index()];
        if src.address != dst.address || slot.is_some_and(|l| l != dst.label) {
            return Err(GeomError::Incoherent { label: src.label });
        }
        *slot = Some(dst.label);
    }
    let labels = LabelAction::from_fn(|l| image[l.index()].expect("every label sampled"))
        .expect("matching is a bijection");
    Ok(Orbit { moved, target, labels })
}
