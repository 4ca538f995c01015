//! Square tiles.

use std::fmt;

use crate::label::Label;

/// A unit tile with one label per edge. Tiles are value objects and are
/// never rotated or reflected: two tiles are the same type iff all four
/// labels are equal.
///
/// The derived ordering (lexicographic by top, right, bottom, left under the
/// canonical label order) is the canonical tile order used for serialization
/// and for deterministic tie-breaking in the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tile {
    pub top: Label,
    pub right: Label,
    pub bottom: Label,
    pub left: Label,
}

impl Tile {
    pub fn new(top: Label, right: Label, bottom: Label, left: Label) -> Self {
        Tile { top, right, bottom, left }
    }

    /// Shorthand for a tile with four numeric labels.
    pub fn nums(top: i64, right: i64, bottom: i64, left: i64) -> Self {
        Tile::new(Label::Num(top), Label::Num(right), Label::Num(bottom), Label::Num(left))
    }

    /// The all-zero tile.
    pub fn zero() -> Self {
        Tile::nums(0, 0, 0, 0)
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.top, self.right, self.bottom, self.left)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_all_four_labels() {
        assert_eq!(Tile::nums(0, 1, 2, 3), Tile::nums(0, 1, 2, 3));
        assert_ne!(Tile::nums(0, 1, 2, 3), Tile::nums(3, 0, 1, 2)); // rotation is a different tile
    }

    #[test]
    fn order_is_lexicographic_by_edge() {
        let a = Tile::new(Label::Num(0), Label::Num(0), Label::Num(0), Label::Num(0));
        let b = Tile::new(Label::Num(0), Label::Num(0), Label::Num(0), Label::Top);
        let c = Tile::new(Label::Top, Label::Num(-5), Label::Num(0), Label::Num(0));
        let mut v = vec![c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }

    #[test]
    fn display_matches_token_table() {
        let t = Tile::new(Label::Top, Label::Num(1), Label::Num(0), Label::Left);
        assert_eq!(t.to_string(), "T 1 0 L");
    }
}
