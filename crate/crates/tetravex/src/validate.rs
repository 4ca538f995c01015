//! Adjacency validation.

use crate::error::{Error, Result};
use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::tiling::Tiling;

/// One mismatched adjacency: `first` is the left (or upper) cell of the
/// pair, `labels` the two facing edge labels in the same order. Wrap pairs
/// on a toroidal board list the last-column/last-row cell first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyViolation {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub labels: (Label, Label),
}

/// Outcome of [`validate_tiling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AdjacencyViolation>,
    pub multiset_ok: bool,
}

impl ValidationReport {
    /// True iff there are no mismatched adjacencies and the grid uses
    /// exactly the instance's tile multiset.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.multiset_ok
    }
}

/// Check a tiling against an instance: every horizontally adjacent pair must
/// satisfy `left.right == right.left`, every vertically adjacent pair
/// `upper.bottom == lower.top`, plus the wrap pairs on a toroidal board.
/// A bordered boundary leaves outer edges unconstrained.
///
/// A grid over the wrong tile multiset is reported (`multiset_ok = false`),
/// not an error; only a dimension mismatch is an error.
pub fn validate_tiling(instance: &Instance, tiling: &Tiling) -> Result<ValidationReport> {
    if tiling.width() != instance.width() || tiling.height() != instance.height() {
        return Err(Error::DimensionMismatch {
            got_w: tiling.width(),
            got_h: tiling.height(),
            want_w: instance.width(),
            want_h: instance.height(),
        });
    }

    let (w, h) = (instance.width(), instance.height());
    let mut violations = Vec::new();
    let mut check = |first: (usize, usize), second: (usize, usize), a: Label, b: Label| {
        if a != b {
            violations.push(AdjacencyViolation { first, second, labels: (a, b) });
        }
    };

    for r in 0..h {
        for c in 0..w.saturating_sub(1) {
            check((r, c), (r, c + 1), tiling.get(r, c).right, tiling.get(r, c + 1).left);
        }
    }
    for r in 0..h.saturating_sub(1) {
        for c in 0..w {
            check((r, c), (r + 1, c), tiling.get(r, c).bottom, tiling.get(r + 1, c).top);
        }
    }
    if instance.boundary() == Boundary::Toroidal {
        for r in 0..h {
            check((r, w - 1), (r, 0), tiling.get(r, w - 1).right, tiling.get(r, 0).left);
        }
        for c in 0..w {
            check((h - 1, c), (0, c), tiling.get(h - 1, c).bottom, tiling.get(0, c).top);
        }
    }

    let multiset_ok = tiling.sorted_tiles() == instance.tiles();
    Ok(ValidationReport { violations, multiset_ok })
}
