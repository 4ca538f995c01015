//! Square padding for rectangular reduction boards.

use crate::error::{Error, Result};
use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::tile::Tile;

use super::build::emitted_tile;
use super::ReductionMap;

/// Grow a bordered reduction board to a square by prepending a rigid block
/// of padding tiles, preserving solvability in both directions.
///
/// The construction's left edge carries the constant `Left` sentinel and no
/// reduction tile has `Left` as its right label, so a block of fresh-label
/// columns whose rightmost column ends in `Left` docks exactly there. Every
/// padding edge gets a fresh numeric label above all existing ones, shared
/// by exactly the two tiles that meet at it (or by one tile on the block's
/// outer rim), which pins each padding tile to its position. Boards wider
/// than tall are padded with rows on top against the constant `Top` edge
/// instead.
///
/// A square input is returned unchanged. Anything that is not this map's
/// bordered reduction output is refused.
pub fn pad_to_square(instance: &Instance, map: &ReductionMap) -> Result<Instance> {
    if map.boundary() == Boundary::Toroidal || instance.boundary() == Boundary::Toroidal {
        return Err(Error::Pad("toroidal boards have no sentinel edge to dock against".into()));
    }
    if instance.width() != map.width() || instance.height() != map.height() {
        return Err(Error::Pad(format!(
            "instance is {}x{} but the map describes {}x{}",
            instance.width(),
            instance.height(),
            map.width(),
            map.height()
        )));
    }
    let mut reduction_tiles = Vec::with_capacity(map.width() * map.height());
    for r in 0..map.height() {
        for c in 0..map.width() {
            reduction_tiles.push(emitted_tile(map, r, c));
        }
    }
    reduction_tiles.sort_unstable();
    if reduction_tiles != instance.tiles() {
        return Err(Error::Pad("instance is not this map's reduction output".into()));
    }

    let (w, h) = (instance.width(), instance.height());
    if w == h {
        return Ok(instance.clone());
    }

    let mut next = map.plan().max_numeric() + 1;
    let mut fresh = move || {
        let label = Label::Num(next);
        next += 1;
        label
    };

    let side = w.max(h);
    let mut tiles = instance.tiles().to_vec();
    if w < h {
        // k fresh columns to the left of the construction.
        let k = h - w;
        let mut hedges = vec![vec![Label::Num(0); k]; h + 1];
        for row in hedges.iter_mut() {
            for e in row.iter_mut() {
                *e = fresh();
            }
        }
        let mut vedges = vec![vec![Label::Num(0); k + 1]; h];
        for row in vedges.iter_mut() {
            for e in row.iter_mut().take(k) {
                *e = fresh();
            }
            row[k] = Label::Left; // docks against the construction's left edge
        }
        for r in 0..h {
            for c in 0..k {
                tiles.push(Tile::new(hedges[r][c], vedges[r][c + 1], hedges[r + 1][c], vedges[r][c]));
            }
        }
    } else {
        // k fresh rows above the construction.
        let k = w - h;
        let mut hedges = vec![vec![Label::Num(0); w]; k + 1];
        for (i, row) in hedges.iter_mut().enumerate() {
            for e in row.iter_mut() {
                *e = if i == k { Label::Top } else { fresh() };
            }
        }
        let mut vedges = vec![vec![Label::Num(0); w + 1]; k];
        for row in vedges.iter_mut() {
            for e in row.iter_mut() {
                *e = fresh();
            }
        }
        for r in 0..k {
            for c in 0..w {
                tiles.push(Tile::new(hedges[r][c], vedges[r][c + 1], hedges[r + 1][c], vedges[r][c]));
            }
        }
    }

    Instance::new(side, side, Boundary::Bordered, tiles)
}
