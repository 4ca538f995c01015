//! Puzzle instances: board dimensions, boundary mode, and a tile multiset.

use crate::error::{Error, Result};
use crate::tile::Tile;

/// Whether outer edges are free (`Bordered`) or wrap around (`Toroidal`,
/// where the top row must match the bottom row and the left column the
/// right column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    Bordered,
    Toroidal,
}

/// An immutable puzzle: place the tile multiset on a `width`x`height` board
/// so that every pair of touching edges carries the same label.
///
/// Tiles are held sorted in canonical order, so the multiset is canonical by
/// construction: two instances are equal iff they describe the same puzzle.
/// Duplicate tile types are allowed and carry multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    width: usize,
    height: usize,
    boundary: Boundary,
    tiles: Vec<Tile>,
}

impl Instance {
    /// Build an instance, checking that the tile count fills the board.
    /// The tile order given here is irrelevant; it is canonicalized.
    pub fn new(width: usize, height: usize, boundary: Boundary, mut tiles: Vec<Tile>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyDims);
        }
        if tiles.len() != width * height {
            return Err(Error::TileCount { count: tiles.len(), width, height });
        }
        tiles.sort_unstable();
        Ok(Instance { width, height, boundary, tiles })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn cell_count(&self) -> usize {
        self.width * self.height
    }

    /// The tile multiset in canonical order (duplicates adjacent). Indices
    /// into this slice are the slot numbers used by tiling files.
    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Distinct tile types in canonical order with their multiplicities.
    pub fn tile_types(&self) -> Vec<(Tile, usize)> {
        let mut out: Vec<(Tile, usize)> = Vec::new();
        for &t in &self.tiles {
            match out.last_mut() {
                Some((ty, n)) if *ty == t => *n += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_must_fill_board() {
        let err = Instance::new(2, 2, Boundary::Bordered, vec![Tile::zero(); 3]).unwrap_err();
        assert!(matches!(err, Error::TileCount { count: 3, width: 2, height: 2 }));
        assert!(Instance::new(0, 2, Boundary::Bordered, vec![]).is_err());
    }

    #[test]
    fn multiset_is_order_insensitive() {
        let a = Tile::nums(0, 1, 2, 3);
        let b = Tile::nums(4, 5, 6, 7);
        let x = Instance::new(2, 1, Boundary::Bordered, vec![a, b]).unwrap();
        let y = Instance::new(2, 1, Boundary::Bordered, vec![b, a]).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn tile_types_collapse_duplicates() {
        let a = Tile::zero();
        let b = Tile::nums(1, 1, 1, 1);
        let inst = Instance::new(3, 1, Boundary::Bordered, vec![b, a, a]).unwrap();
        assert_eq!(inst.tile_types(), vec![(a, 2), (b, 1)]);
    }
}
