//! Board layout and tile emission for the reduction.

use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::tile::Tile;

use super::{
    pad_to_square, CellRole, Corner, LabelPlan, OneInThreeInstance, ReductionMap, WireRow,
    WireSide,
};

/// Which flavour of board [`reduce`] emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceVariant {
    /// The plain bordered construction, `4n+2` by `12m+1`.
    Bordered,
    /// Bordered, then padded to a square with a rigid block of fresh-label
    /// tiles docked against the construction's sentinel edge.
    BorderedSquare,
    /// All sentinels replaced by zero, plus a terminator row and column that
    /// close off the wires so every outer edge is zero and wrapping is
    /// harmless. `4n+3` by `12m+2`.
    Toroidal,
}

/// Compile a formula into a Tetravex instance together with the map tying
/// each cell back to its gadget role. The emitted tile multiset depends only
/// on the formula, never on any assignment.
pub fn reduce(problem: &OneInThreeInstance, variant: ReduceVariant) -> (Instance, ReductionMap) {
    let boundary = match variant {
        ReduceVariant::Toroidal => Boundary::Toroidal,
        _ => Boundary::Bordered,
    };
    let map = build_map(problem, boundary);
    let mut tiles = Vec::with_capacity(map.width() * map.height());
    for r in 0..map.height() {
        for c in 0..map.width() {
            tiles.push(emitted_tile(&map, r, c));
        }
    }
    let instance =
        Instance::new(map.width(), map.height(), boundary, tiles).expect("counts match by construction");
    match variant {
        ReduceVariant::BorderedSquare => {
            let padded = pad_to_square(&instance, &map).expect("own reduction output");
            (padded, map)
        }
        _ => (instance, map),
    }
}

pub(super) fn build_map(problem: &OneInThreeInstance, boundary: Boundary) -> ReductionMap {
    let n = problem.var_count();
    let m = problem.clause_count();
    let core_w = 4 * n + 2;
    let core_h = 12 * m + 1;
    let (width, height) = match boundary {
        Boundary::Bordered => (core_w, core_h),
        Boundary::Toroidal => (core_w + 1, core_h + 1),
    };
    let mut roles = Vec::with_capacity(width * height);
    for r in 0..height {
        for c in 0..width {
            roles.push(classify(problem, r, c, core_w, core_h));
        }
    }
    ReductionMap::from_parts(width, height, boundary, problem.clone(), LabelPlan::new(n, m), roles)
}

/// Gadget role of cell `(r, c)`. Cells beyond the core dimensions are the
/// toroidal terminators: wire ends keep their wire role, the rest is filler.
fn classify(problem: &OneInThreeInstance, r: usize, c: usize, core_w: usize, core_h: usize) -> CellRole {
    let n = problem.var_count();
    let m = problem.clause_count();
    let term_row = r >= core_h;
    let term_col = c >= core_w;
    if term_row && term_col {
        return CellRole::Filler;
    }
    if term_row {
        return match wire_col(n, c) {
            Some((var, side)) => CellRole::VerticalWire { var, side },
            None => CellRole::Filler,
        };
    }
    if term_col {
        return match wire_row(m, r) {
            Some((clause, slot, row)) => CellRole::HorizontalWire { clause, slot, row },
            None => CellRole::Filler,
        };
    }
    if r == 0 {
        if c == 0 {
            return CellRole::TopStart;
        }
        if c == core_w - 1 {
            return CellRole::TopEnd;
        }
        return CellRole::AssignBlock { var: (c - 1) / 4 + 1, pos: ((c - 1) % 4 + 1) as u8 };
    }
    if c == 0 {
        return CellRole::ClauseCell { clause: (r - 1) / 12 + 1, offset: ((r - 1) % 12 + 1) as u8 };
    }
    match (wire_col(n, c), wire_row(m, r)) {
        (Some((var, side)), Some((clause, slot, row))) => {
            if problem.var(clause, slot as usize) == var {
                let corner = match (row, side) {
                    (WireRow::Upper, WireSide::Left) => Corner::TopLeft,
                    (WireRow::Upper, WireSide::Right) => Corner::TopRight,
                    (WireRow::Lower, WireSide::Left) => Corner::BottomLeft,
                    (WireRow::Lower, WireSide::Right) => Corner::BottomRight,
                };
                CellRole::Junction { clause, slot, corner }
            } else {
                CellRole::Crossing { var, clause, slot }
            }
        }
        (Some((var, side)), None) => CellRole::VerticalWire { var, side },
        (None, Some((clause, slot, row))) => CellRole::HorizontalWire { clause, slot, row },
        (None, None) => CellRole::Filler,
    }
}

/// Variable `q`'s wire occupies columns `4q-2` and `4q-1`.
pub(super) fn wire_col(n: usize, c: usize) -> Option<(usize, WireSide)> {
    if c < 2 || c > 4 * n - 1 {
        return None;
    }
    match c % 4 {
        2 => Some(((c + 2) / 4, WireSide::Left)),
        3 => Some(((c + 1) / 4, WireSide::Right)),
        _ => None,
    }
}

/// Clause `p` slot `s`'s wire occupies the rows at offsets `3s` and `3s+1`
/// within the clause's band of rows `12(p-1)+1 ..= 12p`.
pub(super) fn wire_row(m: usize, r: usize) -> Option<(usize, u8, WireRow)> {
    if r < 1 || r > 12 * m {
        return None;
    }
    let clause = (r - 1) / 12 + 1;
    let offset = (r - 1) % 12 + 1;
    match offset {
        3 | 6 | 9 => Some((clause, (offset / 3) as u8, WireRow::Upper)),
        4 | 7 | 10 => Some((clause, ((offset - 1) / 3) as u8, WireRow::Lower)),
        _ => None,
    }
}

/// The tile [`reduce`] emits at cell `(r, c)`. Exposed so the multiset can
/// be rebuilt by walking cells in any order.
pub fn emitted_tile(map: &ReductionMap, r: usize, c: usize) -> Tile {
    let plan = map.plan();
    let toroidal = map.boundary() == Boundary::Toroidal;
    let (top_s, left_s, right_s) = sentinels(toroidal);
    let num = Label::Num;

    match map.role(r, c) {
        CellRole::TopStart => Tile::new(top_s, num(plan.chain(0)), num(0), left_s),
        CellRole::TopEnd => {
            let n = map.problem().var_count();
            Tile::new(top_s, right_s, num(0), num(plan.chain(n)))
        }
        CellRole::AssignBlock { var, pos } => {
            let i = plan.variable(var);
            match pos {
                1 => Tile::new(top_s, num(i), num(0), num(plan.chain(var - 1))),
                2 => Tile::new(top_s, num(i), num(i), num(i)),
                3 => Tile::new(top_s, num(i), num(-i), num(i)),
                4 => Tile::new(top_s, num(plan.chain(var)), num(0), num(i)),
                _ => unreachable!("block position {pos}"),
            }
        }
        CellRole::ClauseCell { clause, offset } => {
            let c_label = plan.clause(clause);
            let slot_var = |s: usize| plan.variable(map.problem().var(clause, s));
            clause_tile(c_label, offset, slot_var, left_s)
        }
        CellRole::VerticalWire { var, side } => {
            let sign = match side {
                WireSide::Left => 1,
                WireSide::Right => -1,
            };
            let top = sign * plan.wire_boundary(var, r - 1);
            if toroidal && r == map.height() - 1 {
                Tile::new(num(top), num(0), num(0), num(0)) // terminator
            } else {
                Tile::new(num(top), num(0), num(sign * plan.wire_boundary(var, r)), num(0))
            }
        }
        CellRole::HorizontalWire { clause, slot, row } => {
            let v = plan.variable(map.problem().var(clause, slot as usize));
            let sig = match row {
                WireRow::Upper => v,
                WireRow::Lower => -v,
            };
            if toroidal && c == map.width() - 1 {
                Tile::new(num(0), num(0), num(0), num(sig)) // terminator
            } else {
                Tile::new(num(0), num(sig), num(0), num(sig))
            }
        }
        CellRole::Crossing { var, clause, slot } => {
            let v = plan.variable(map.problem().var(clause, slot as usize));
            // One cell of a 2x2 block carrying all four sign combinations.
            let col_sign = match wire_col(map.problem().var_count(), c) {
                Some((_, WireSide::Left)) => 1,
                _ => -1,
            };
            let row_sig = match wire_row(map.problem().clause_count(), r) {
                Some((_, _, WireRow::Upper)) => v,
                _ => -v,
            };
            let top = col_sign * plan.wire_boundary(var, r - 1);
            let bottom = col_sign * plan.wire_boundary(var, r);
            Tile::new(num(top), num(row_sig), num(bottom), num(row_sig))
        }
        CellRole::Junction { clause, slot, corner } => {
            let var = map.problem().var(clause, slot as usize);
            let v = plan.variable(var);
            let a = plan.alternation(var, slot as usize);
            let j = plan.junction(clause, slot as usize);
            junction_tile(v, a, j, corner)
        }
        CellRole::Filler => Tile::zero(),
    }
}

/// Clause-column tile at `offset`, laid out with slot 1 seated true; any
/// fixed seating yields the same 12-tile multiset.
fn clause_tile(c: i64, offset: u8, slot_var: impl Fn(usize) -> i64, left_s: Label) -> Tile {
    let num = Label::Num;
    let (top, right, bottom) = match offset {
        1 => (0, 0, -c),
        2 => (-c, 0, c),
        3 => (c, slot_var(1), -c),
        4 => (-c, -slot_var(1), c),
        5 => (c, 0, -c),
        6 => (-c, -slot_var(2), c),
        7 => (c, slot_var(2), -c),
        8 => (-c, 0, -c),
        9 => (-c, -slot_var(3), c),
        10 => (c, slot_var(3), -c),
        11 => (-c, 0, -c),
        12 => (-c, 0, 0),
        _ => unreachable!("clause offset {offset}"),
    };
    Tile::new(num(top), num(right), num(bottom), left_s)
}

/// The four junction tiles; both polarities of the junction arrange the
/// same four tiles (the false arrangement swaps the columns), so emission
/// fixes one corner assignment. Vertically the junction plugs into the
/// wire's alternation edges (`a` above and below, its own `j` inside),
/// which is what confines it to a horizontal-wire row pair.
pub(super) fn junction_tile(v: i64, a: i64, j: i64, corner: Corner) -> Tile {
    let num = Label::Num;
    match corner {
        Corner::TopLeft => Tile::new(num(a), num(-v), num(-j), num(v)),
        Corner::TopRight => Tile::new(num(-a), num(v), num(j), num(-v)),
        Corner::BottomLeft => Tile::new(num(-j), num(v), num(a), num(-v)),
        Corner::BottomRight => Tile::new(num(j), num(-v), num(-a), num(v)),
    }
}

fn sentinels(toroidal: bool) -> (Label, Label, Label) {
    if toroidal {
        (Label::Num(0), Label::Num(0), Label::Num(0))
    } else {
        (Label::Top, Label::Left, Label::Right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_tiling;

    fn phi(n: usize, clauses: &[[usize; 3]]) -> OneInThreeInstance {
        OneInThreeInstance::new(n, clauses.to_vec()).unwrap()
    }

    #[test]
    fn smallest_reduction_dimensions() {
        let (inst, map) = reduce(&phi(1, &[[1, 1, 1]]), ReduceVariant::Bordered);
        assert_eq!((inst.width(), inst.height()), (6, 13));
        assert_eq!(inst.tiles().len(), 78);
        assert_eq!((map.width(), map.height()), (6, 13));
    }

    #[test]
    fn every_cell_has_one_role_and_tallies_match() {
        for (n, clauses) in [
            (3, vec![[1, 2, 3]]),
            (2, vec![[1, 2, 2], [1, 1, 2]]),
            (4, vec![[1, 2, 3], [2, 3, 4], [1, 1, 4]]),
        ] {
            let problem = phi(n, &clauses);
            let m = clauses.len();
            let (_, map) = reduce(&problem, ReduceVariant::Bordered);
            let tally = map.tally();
            let expected = super::super::expected_counts(n, m);
            assert_eq!(tally, expected, "n={n} m={m}");
        }
    }

    #[test]
    fn junctions_occupy_their_slot_and_variable_intersection() {
        let problem = phi(3, &[[1, 2, 3], [2, 2, 1]]);
        let (_, map) = reduce(&problem, ReduceVariant::Bordered);
        for p in 1..=2 {
            for s in 1..=3usize {
                let v = problem.var(p, s);
                let rows = [12 * (p - 1) + 3 * s, 12 * (p - 1) + 3 * s + 1];
                let cols = [4 * v - 2, 4 * v - 1];
                let mut corners = Vec::new();
                for (ri, &r) in rows.iter().enumerate() {
                    for (ci, &c) in cols.iter().enumerate() {
                        match map.role(r, c) {
                            CellRole::Junction { clause, slot, corner } => {
                                assert_eq!((clause, slot as usize), (p, s));
                                corners.push(corner);
                                let want = match (ri, ci) {
                                    (0, 0) => Corner::TopLeft,
                                    (0, 1) => Corner::TopRight,
                                    (1, 0) => Corner::BottomLeft,
                                    _ => Corner::BottomRight,
                                };
                                assert_eq!(corner, want);
                            }
                            other => panic!("expected junction at ({r},{c}), got {other:?}"),
                        }
                    }
                }
                assert_eq!(corners.len(), 4);
            }
        }
    }

    #[test]
    fn sentinel_discipline_on_bordered_output() {
        let (inst, _) = reduce(&phi(3, &[[1, 2, 3], [1, 3, 3]]), ReduceVariant::Bordered);
        for tile in inst.tiles() {
            assert_ne!(tile.bottom, Label::Top);
            assert_ne!(tile.right, Label::Left);
            assert_ne!(tile.left, Label::Right);
        }
    }

    #[test]
    fn toroidal_board_adds_terminators_and_drops_sentinels() {
        let problem = phi(1, &[[1, 1, 1]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Toroidal);
        assert_eq!((inst.width(), inst.height()), (7, 14));
        for tile in inst.tiles() {
            for label in [tile.top, tile.right, tile.bottom, tile.left] {
                assert!(matches!(label, Label::Num(_)));
            }
        }
        // Wire ends: one terminator per wire column and per wire row.
        assert!(matches!(map.role(13, 2), CellRole::VerticalWire { var: 1, side: WireSide::Left }));
        assert!(matches!(map.role(13, 3), CellRole::VerticalWire { var: 1, side: WireSide::Right }));
        assert!(matches!(map.role(3, 6), CellRole::HorizontalWire { clause: 1, slot: 1, .. }));
        assert_eq!(emitted_tile(&map, 13, 2), Tile::nums(1, 0, 0, 0));
        assert_eq!(emitted_tile(&map, 3, 6), Tile::nums(0, 0, 0, 1));
    }

    #[test]
    fn multiset_is_enumeration_order_independent() {
        let problem = phi(2, &[[1, 2, 2]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Bordered);
        // Walk the cells in a different order and rebuild the multiset.
        let mut tiles = Vec::new();
        for c in (0..map.width()).rev() {
            for r in 0..map.height() {
                tiles.push(emitted_tile(&map, r, c));
            }
        }
        tiles.sort_unstable();
        assert_eq!(tiles, inst.tiles());
    }

    #[test]
    fn emitted_grid_is_not_itself_a_tiling_unless_satisfiable_seating_matches() {
        // The emission order lays each gadget out in its fixed reference
        // arrangement; for a satisfiable formula whose first slots happen to
        // be consistent that grid is already a valid tiling.
        let problem = phi(1, &[[1, 1, 1]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Bordered);
        let mut grid = Vec::new();
        for r in 0..map.height() {
            for c in 0..map.width() {
                grid.push(emitted_tile(&map, r, c));
            }
        }
        let tiling = crate::tiling::Tiling::new(inst.width(), inst.height(), grid).unwrap();
        let report = validate_tiling(&inst, &tiling).unwrap();
        // (1,1,1) is unsatisfiable, so the reference grid cannot be valid.
        assert!(!report.is_valid());
        assert!(report.multiset_ok);
    }
}
