//! Tilings: a complete placement of tiles on a board.

use crate::error::{Error, Result};
use crate::tile::Tile;

/// A row-major grid of tiles. The tile at each cell is stored by value, so
/// two tilings are equal iff every cell holds the same tile type; which
/// physical copy of a duplicated tile sits where is not a distinction this
/// type can express.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    width: usize,
    height: usize,
    grid: Vec<Tile>,
}

impl Tiling {
    pub fn new(width: usize, height: usize, grid: Vec<Tile>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyDims);
        }
        if grid.len() != width * height {
            return Err(Error::TileCount { count: grid.len(), width, height });
        }
        Ok(Tiling { width, height, grid })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        debug_assert!(row < self.height && col < self.width);
        self.grid[row * self.width + col]
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[Tile] {
        &self.grid
    }

    /// The grid's tile multiset in canonical order.
    pub fn sorted_tiles(&self) -> Vec<Tile> {
        let mut v = self.grid.clone();
        v.sort_unstable();
        v
    }
}
