//! Bit-exact text formats for instances and tilings.
//!
//! Instance file (UTF-8, LF):
//!
//! ```text
//! tvx 1
//! dims <W> <H>
//! boundary bordered|toroidal
//! tiles <count>
//! <top> <right> <bottom> <left>     (count lines)
//! ```
//!
//! Edge tokens are decimal integers or `T`/`L`/`R` for the sentinel labels.
//! Serialization is canonical: tiles are emitted in canonical sorted order,
//! so two instances are equal iff their serializations are byte-identical.
//!
//! Tiling file:
//!
//! ```text
//! tvxsol 1
//! dims <W> <H>
//! <W 0-based indices>               (H lines, top row first)
//! ```
//!
//! Indices refer to the instance's canonical tile list and must cover
//! `0..count` exactly once.

use crate::error::{Error, Result};
use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::tile::Tile;
use crate::tiling::Tiling;

pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = String::new();
    out.push_str("tvx 1\n");
    out.push_str(&format!("dims {} {}\n", instance.width(), instance.height()));
    out.push_str(match instance.boundary() {
        Boundary::Bordered => "boundary bordered\n",
        Boundary::Toroidal => "boundary toroidal\n",
    });
    out.push_str(&format!("tiles {}\n", instance.tiles().len()));
    for tile in instance.tiles() {
        out.push_str(&tile.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);

    let magic = lines.next_required("header")?;
    if magic.1 != "tvx 1" {
        return Err(Error::parse(magic.0, format!("expected `tvx 1`, got `{}`", magic.1)));
    }
    let (width, height) = parse_dims(lines.next_required("dims line")?)?;
    let boundary = {
        let (no, line) = lines.next_required("boundary line")?;
        match line {
            "boundary bordered" => Boundary::Bordered,
            "boundary toroidal" => Boundary::Toroidal,
            other => {
                return Err(Error::parse(
                    no,
                    format!("expected `boundary bordered` or `boundary toroidal`, got `{other}`"),
                ))
            }
        }
    };
    let count = {
        let (no, line) = lines.next_required("tiles line")?;
        let rest = line
            .strip_prefix("tiles ")
            .ok_or_else(|| Error::parse(no, format!("expected `tiles <count>`, got `{line}`")))?;
        rest.parse::<usize>()
            .map_err(|_| Error::parse(no, format!("bad tile count `{rest}`")))?
    };
    if count != width * height {
        return Err(Error::parse(
            4,
            format!("tile count {count} does not match dims {width}x{height}"),
        ));
    }

    let mut tiles = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines.next_required("tile line")?;
        let mut labels = [Label::Num(0); 4];
        let mut toks = line.split_whitespace();
        for slot in labels.iter_mut() {
            let tok = toks
                .next()
                .ok_or_else(|| Error::parse(no, "tile line needs 4 edge tokens"))?;
            *slot = Label::from_token(tok)
                .ok_or_else(|| Error::parse(no, format!("unknown edge token `{tok}`")))?;
        }
        if toks.next().is_some() {
            return Err(Error::parse(no, "tile line needs exactly 4 edge tokens"));
        }
        tiles.push(Tile::new(labels[0], labels[1], labels[2], labels[3]));
    }
    lines.expect_end()?;

    Instance::new(width, height, boundary, tiles)
}

/// Serialize a tiling as slot indices into `instance`'s canonical tile
/// list. Each cell takes the first unused slot of its tile type, row-major,
/// so the output is deterministic. Fails if the grid's multiset differs from
/// the instance's.
pub fn serialize_tiling(tiling: &Tiling, instance: &Instance) -> Result<String> {
    if tiling.width() != instance.width() || tiling.height() != instance.height() {
        return Err(Error::DimensionMismatch {
            got_w: tiling.width(),
            got_h: tiling.height(),
            want_w: instance.width(),
            want_h: instance.height(),
        });
    }
    let slots = instance.tiles();
    let mut used = vec![false; slots.len()];
    let mut out = String::new();
    out.push_str("tvxsol 1\n");
    out.push_str(&format!("dims {} {}\n", tiling.width(), tiling.height()));
    for r in 0..tiling.height() {
        let mut row = String::new();
        for c in 0..tiling.width() {
            let tile = tiling.get(r, c);
            // Canonical list is sorted, so the slots of a type are contiguous.
            let base = slots.partition_point(|t| *t < tile);
            let idx = (base..slots.len())
                .take_while(|&i| slots[i] == tile)
                .find(|&i| !used[i])
                .ok_or(Error::MultisetMismatch)?;
            used[idx] = true;
            if !row.is_empty() {
                row.push(' ');
            }
            row.push_str(&idx.to_string());
        }
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_tiling(text: &str, instance: &Instance) -> Result<Tiling> {
    let mut lines = Lines::new(text);

    let magic = lines.next_required("header")?;
    if magic.1 != "tvxsol 1" {
        return Err(Error::parse(magic.0, format!("expected `tvxsol 1`, got `{}`", magic.1)));
    }
    let (width, height) = parse_dims(lines.next_required("dims line")?)?;
    if width != instance.width() || height != instance.height() {
        return Err(Error::DimensionMismatch {
            got_w: width,
            got_h: height,
            want_w: instance.width(),
            want_h: instance.height(),
        });
    }

    let slots = instance.tiles();
    let mut used = vec![false; slots.len()];
    let mut grid = Vec::with_capacity(width * height);
    for _ in 0..height {
        let (no, line) = lines.next_required("tiling row")?;
        let mut cols = 0;
        for tok in line.split_whitespace() {
            let idx: usize = tok
                .parse()
                .map_err(|_| Error::parse(no, format!("bad slot index `{tok}`")))?;
            if idx >= slots.len() {
                return Err(Error::parse(
                    no,
                    format!("slot index {idx} out of range (instance has {} tiles)", slots.len()),
                ));
            }
            if used[idx] {
                return Err(Error::parse(no, format!("slot index {idx} used twice")));
            }
            used[idx] = true;
            grid.push(slots[idx]);
            cols += 1;
        }
        if cols != width {
            return Err(Error::parse(no, format!("expected {width} indices, got {cols}")));
        }
    }
    lines.expect_end()?;

    Tiling::new(width, height, grid)
}

fn parse_dims((no, line): (usize, &str)) -> Result<(usize, usize)> {
    let rest = line
        .strip_prefix("dims ")
        .ok_or_else(|| Error::parse(no, format!("expected `dims <W> <H>`, got `{line}`")))?;
    let mut it = rest.split_whitespace();
    let (w, h) = match (it.next(), it.next(), it.next()) {
        (Some(w), Some(h), None) => (w, h),
        _ => return Err(Error::parse(no, "expected `dims <W> <H>`")),
    };
    let w: usize = w.parse().map_err(|_| Error::parse(no, format!("bad width `{w}`")))?;
    let h: usize = h.parse().map_err(|_| Error::parse(no, format!("bad height `{h}`")))?;
    if w == 0 || h == 0 {
        return Err(Error::parse(no, "dims must be positive"));
    }
    Ok((w, h))
}

/// Line cursor with 1-based numbering. A single trailing newline is
/// tolerated; interior blank lines are not.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    fn next_required(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, line)) => Ok((i + 1, line.trim_end_matches('\r'))),
            None => Err(Error::parse(0, format!("unexpected end of input, missing {what}"))),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.inner.next() {
            None => Ok(()),
            Some((_, line)) if line.trim().is_empty() && self.inner.next().is_none() => Ok(()),
            Some((i, _)) => Err(Error::parse(i + 1, "trailing content after the last line")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_tile_instance() {
        let inst = Instance::new(1, 1, Boundary::Bordered, vec![Tile::zero()]).unwrap();
        let text = serialize_instance(&inst);
        assert_eq!(text, "tvx 1\ndims 1 1\nboundary bordered\ntiles 1\n0 0 0 0\n");
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn sentinel_tokens() {
        let tile = Tile::new(Label::Top, Label::Num(1), Label::Num(0), Label::Left);
        let inst = Instance::new(1, 1, Boundary::Bordered, vec![tile]).unwrap();
        let text = serialize_instance(&inst);
        assert!(text.ends_with("T 1 0 L\n"));
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad_token = "tvx 1\ndims 1 1\nboundary bordered\ntiles 1\n0 0 Q 0\n";
        match parse_instance(bad_token).unwrap_err() {
            Error::Parse { line, msg } => {
                assert_eq!(line, 5);
                assert!(msg.contains("Q"));
            }
            other => panic!("unexpected error {other:?}"),
        }

        let count_mismatch = "tvx 1\ndims 2 1\nboundary bordered\ntiles 1\n0 0 0 0\n";
        assert!(matches!(parse_instance(count_mismatch), Err(Error::Parse { line: 4, .. })));

        let missing_tile = "tvx 1\ndims 2 1\nboundary bordered\ntiles 2\n0 0 0 0\n";
        assert!(matches!(parse_instance(missing_tile), Err(Error::Parse { .. })));

        let extra_tile = "tvx 1\ndims 1 1\nboundary bordered\ntiles 1\n0 0 0 0\n1 1 1 1\n";
        assert!(matches!(parse_instance(extra_tile), Err(Error::Parse { line: 6, .. })));

        let bad_boundary = "tvx 1\ndims 1 1\nboundary open\ntiles 1\n0 0 0 0\n";
        assert!(matches!(parse_instance(bad_boundary), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn tiling_round_trip() {
        let a = Tile::nums(0, 5, 0, 1);
        let b = Tile::nums(0, 2, 0, 5);
        let inst = Instance::new(2, 1, Boundary::Bordered, vec![a, b]).unwrap();
        let tiling = Tiling::new(2, 1, vec![a, b]).unwrap();
        let text = serialize_tiling(&tiling, &inst).unwrap();
        // Canonical order sorts b (right label 2) before a (right label 5).
        assert_eq!(text, "tvxsol 1\ndims 2 1\n1 0\n");
        assert_eq!(parse_tiling(&text, &inst).unwrap(), tiling);
    }

    #[test]
    fn identical_tiles_accept_any_slot_permutation() {
        let inst = Instance::new(2, 2, Boundary::Bordered, vec![Tile::zero(); 4]).unwrap();
        let tiling = Tiling::new(2, 2, vec![Tile::zero(); 4]).unwrap();
        for text in ["tvxsol 1\ndims 2 2\n0 1\n2 3\n", "tvxsol 1\ndims 2 2\n3 0\n1 2\n"] {
            assert_eq!(parse_tiling(text, &inst).unwrap(), tiling);
        }
    }

    #[test]
    fn tiling_parse_errors() {
        let inst = Instance::new(2, 1, Boundary::Bordered, vec![Tile::zero(); 2]).unwrap();
        let out_of_range = "tvxsol 1\ndims 2 1\n0 2\n";
        assert!(matches!(parse_tiling(out_of_range, &inst), Err(Error::Parse { line: 3, .. })));
        let repeated = "tvxsol 1\ndims 2 1\n0 0\n";
        assert!(matches!(parse_tiling(repeated, &inst), Err(Error::Parse { line: 3, .. })));
        let wrong_rows = "tvxsol 1\ndims 2 1\n0 1\n0 1\n";
        assert!(matches!(parse_tiling(wrong_rows, &inst), Err(Error::Parse { .. })));
        let wrong_dims = "tvxsol 1\ndims 1 2\n0\n1\n";
        assert!(matches!(parse_tiling(wrong_dims, &inst), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn serialize_tiling_rejects_foreign_tiles() {
        let inst = Instance::new(1, 1, Boundary::Bordered, vec![Tile::zero()]).unwrap();
        let tiling = Tiling::new(1, 1, vec![Tile::nums(1, 1, 1, 1)]).unwrap();
        assert!(matches!(serialize_tiling(&tiling, &inst), Err(Error::MultisetMismatch)));
    }
}
