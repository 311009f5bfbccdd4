//! Wedge labels: the 180 Cantor copies indexed by (disk slot, branch).

use std::fmt;

use serde::{Deserialize, Serialize};

pub const DISKS: usize = 6;
pub const BRANCHES: usize = 30;
pub const LABELS: usize = DISKS * BRANCHES;

/// A branch of the wedge inside disk slot `disk` (1..=6), branch `0..30`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeLabel {
    pub disk: usize,
    pub branch: usize,
}

impl WedgeLabel {
    pub fn new(disk: usize, branch: i64) -> Self {
        assert!((1..=DISKS).contains(&disk), "disk {disk} out of range");
        WedgeLabel {
            disk,
            branch: branch.rem_euclid(BRANCHES as i64) as usize,
        }
    }

    pub fn index(self) -> usize {
        (self.disk - 1) * BRANCHES + self.branch
    }

    pub fn from_index(i: usize) -> Self {
        WedgeLabel {
            disk: i / BRANCHES + 1,
            branch: i % BRANCHES,
        }
    }

    pub fn all() -> impl Iterator<Item = WedgeLabel> {
        (0..LABELS).map(WedgeLabel::from_index)
    }
}

impl fmt::Display for WedgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}:{}", self.disk, self.branch)
    }
}

/// Where one disk's wedge goes: target slot and (uniform) branch shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskMove {
    pub from: usize,
    pub to: usize,
    /// `None` when the branches of this disk are not moved by a common shift.
    pub shift: Option<usize>,
}

/// A permutation of the 180 wedge labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelAction(Vec<usize>);

impl LabelAction {
    pub fn identity() -> Self {
        LabelAction((0..LABELS).collect())
    }

    /// Builds the action from a map on labels; `None` unless it is a bijection.
    pub fn from_fn(f: impl Fn(WedgeLabel) -> WedgeLabel) -> Option<Self> {
        let images: Vec<usize> = WedgeLabel::all().map(|l| f(l).index()).collect();
        let mut seen = [false; LABELS];
        for &i in &images {
            if std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(LabelAction(images))
    }

    pub fn apply(&self, l: WedgeLabel) -> WedgeLabel {
        WedgeLabel::from_index(self.0[l.index()])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LabelAction) -> LabelAction {
        LabelAction(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn first_difference(&self, other: &LabelAction) -> Option<WedgeLabel> {
        (0..LABELS)
            .find(|&i| self.0[i] != other.0[i])
            .map(WedgeLabel::from_index)
    }

    /// Order as a permutation: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = [false; LABELS];
        let mut order = 1u64;
        for start in 0..LABELS {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn disk_moves(&self) -> Vec<DiskMove> {
        (1..=DISKS)
            .map(|disk| {
                let first = self.apply(WedgeLabel::new(disk, 0));
                let shift = first.branch;
                let uniform = (0..BRANCHES).all(|b| {
                    self.apply(WedgeLabel::new(disk, b as i64))
                        == WedgeLabel::new(first.disk, (b + shift) as i64)
                });
                DiskMove {
                    from: disk,
                    to: first.disk,
                    shift: uniform.then_some(shift),
                }
            })
            .collect()
    }

    /// Disks whose wedge is mapped back into the same disk.
    pub fn fixed_disks(&self) -> Vec<usize> {
        self.disk_moves()
            .into_iter()
            .filter(|m| m.from == m.to)
            .map(|m| m.from)
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for l in WedgeLabel::all() {
            assert_eq!(WedgeLabel::from_index(l.index()), l);
        }
        assert_eq!(WedgeLabel::new(2, -1), WedgeLabel { disk: 2, branch: 29 });
    }

    #[test]
    fn branch_shift_order() {
        let shift = |k: i64| {
            LabelAction::from_fn(|l| WedgeLabel::new(l.disk, l.branch as i64 + k)).unwrap()
        };
        assert_eq!(shift(1).order(), 30);
        assert_eq!(shift(6).order(), 5);
        assert_eq!(shift(0).order(), 1);
        assert!(shift(30).is_identity());
        assert_eq!(shift(2).compose(&shift(3)), shift(5));
    }

    #[test]
    fn disk_swap_summary() {
        let swap = LabelAction::from_fn(|l| {
            let disk = match l.disk {
                1 => 2,
                2 => 1,
                d => d,
            };
            WedgeLabel::new(disk, l.branch as i64 + if l.disk == 1 { 3 } else { 0 })
        })
        .unwrap();
        let moves = swap.disk_moves();
        assert_eq!(moves[0], DiskMove { from: 1, to: 2, shift: Some(3) });
        assert_eq!(moves[1], DiskMove { from: 2, to: 1, shift: Some(0) });
        assert_eq!(swap.fixed_disks(), vec![3, 4, 5, 6]);
        assert_eq!(swap.order(), 20);
    }

    #[test]
    fn non_bijection_rejected() {
        assert!(LabelAction::from_fn(|_| WedgeLabel::new(1, 0)).is_none());
    }
}
