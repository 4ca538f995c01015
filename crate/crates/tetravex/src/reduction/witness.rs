//! Laying out witness tilings from assignments and reading them back.

use crate::error::{Error, Result};
use crate::instance::Boundary;
use crate::label::Label;
use crate::tile::Tile;
use crate::tiling::Tiling;

use super::build::{build_map, junction_tile};
use super::sat::require_one_in_three;
use super::{Assignment, CellRole, Corner, OneInThreeInstance, ReductionMap, WireRow, WireSide};

/// Lay the bordered reduction's tiles out according to a satisfying
/// assignment: block middles ordered by truth value, wire polarities
/// propagated, junctions arranged to turn each vertical signal into the
/// matching horizontal one, and each clause's one true pair seated between
/// its `+c` buffer faces.
///
/// Fails unless `a` satisfies exactly one occurrence per clause.
pub fn layout_witness(problem: &OneInThreeInstance, a: &Assignment) -> Result<Tiling> {
    require_one_in_three(problem, a)?;
    let map = build_map(problem, Boundary::Bordered);
    let mut grid = Vec::with_capacity(map.width() * map.height());
    for r in 0..map.height() {
        for c in 0..map.width() {
            grid.push(witness_tile(&map, r, c, a));
        }
    }
    Tiling::new(map.width(), map.height(), grid)
}

fn witness_tile(map: &ReductionMap, r: usize, c: usize, a: &Assignment) -> Tile {
    let plan = map.plan();
    let problem = map.problem();
    let num = Label::Num;
    // Signed signal of a variable: positive iff true.
    let signal = |var: usize| {
        let v = plan.variable(var);
        if a.get(var) {
            v
        } else {
            -v
        }
    };

    match map.role(r, c) {
        CellRole::AssignBlock { var, pos } => {
            let i = plan.variable(var);
            let middle = match (pos, a.get(var)) {
                (2, true) | (3, false) => Some(i),
                (3, true) | (2, false) => Some(-i),
                _ => None,
            };
            match middle {
                Some(b) => Tile::new(Label::Top, num(i), num(b), num(i)),
                None => super::build::emitted_tile(map, r, c), // end tiles of the block are fixed
            }
        }
        CellRole::ClauseCell { clause, offset } => {
            let c_label = plan.clause(clause);
            let true_slot =
                (1..=3).find(|&s| a.get(problem.var(clause, s))).expect("checked 1-in-3") as u8;
            clause_witness_tile(c_label, offset, true_slot, |s| {
                (plan.variable(problem.var(clause, s)), a.get(problem.var(clause, s)))
            })
        }
        CellRole::VerticalWire { var, side } => {
            let polarity = if a.get(var) { 1 } else { -1 };
            let sign = match side {
                WireSide::Left => polarity,
                WireSide::Right => -polarity,
            };
            Tile::new(
                num(sign * plan.wire_boundary(var, r - 1)),
                num(0),
                num(sign * plan.wire_boundary(var, r)),
                num(0),
            )
        }
        CellRole::HorizontalWire { clause, slot, row } => {
            let sig = match row {
                WireRow::Upper => signal(problem.var(clause, slot as usize)),
                WireRow::Lower => -signal(problem.var(clause, slot as usize)),
            };
            Tile::new(num(0), num(sig), num(0), num(sig))
        }
        CellRole::Crossing { var, clause, slot } => {
            let polarity = if a.get(var) { 1 } else { -1 };
            let col_sign = match super::build::wire_col(problem.var_count(), c) {
                Some((_, WireSide::Left)) => polarity,
                _ => -polarity,
            };
            let slot_var = problem.var(clause, slot as usize);
            let row_sig = match super::build::wire_row(problem.clause_count(), r) {
                Some((_, _, WireRow::Upper)) => signal(slot_var),
                _ => -signal(slot_var),
            };
            Tile::new(
                num(col_sign * plan.wire_boundary(var, r - 1)),
                num(row_sig),
                num(col_sign * plan.wire_boundary(var, r)),
                num(row_sig),
            )
        }
        CellRole::Junction { clause, slot, corner } => {
            let var = problem.var(clause, slot as usize);
            let v = plan.variable(var);
            let alt = plan.alternation(var, slot as usize);
            let j = plan.junction(clause, slot as usize);
            // The false arrangement swaps the two columns of the true one.
            let corner = if a.get(var) {
                corner
            } else {
                match corner {
                    Corner::TopLeft => Corner::TopRight,
                    Corner::TopRight => Corner::TopLeft,
                    Corner::BottomLeft => Corner::BottomRight,
                    Corner::BottomRight => Corner::BottomLeft,
                }
            };
            junction_tile(v, alt, j, corner)
        }
        // Start, end, and filler tiles do not depend on the assignment.
        _ => super::build::emitted_tile(map, r, c),
    }
}

/// Clause-column tile at `offset` with slot `true_slot` seated true.
/// `slot_sig` returns a slot's variable label and truth value.
fn clause_witness_tile(
    c: i64,
    offset: u8,
    true_slot: u8,
    slot_sig: impl Fn(usize) -> (i64, bool),
) -> Tile {
    let num = Label::Num;
    let (top, right, bottom) = match offset {
        1 => (0, 0, -c),
        12 => (-c, 0, 0),
        // Buffers at offsets 2, 5, 8, 11 (indices 1..=4): the one just
        // above the true pair opens with bottom +c, the one just below
        // closes with top +c, the rest are -c on both faces.
        2 | 5 | 8 | 11 => {
            let b = (offset + 1) / 3; // 1..=4
            if b == true_slot {
                (-c, 0, c)
            } else if b == true_slot + 1 {
                (c, 0, -c)
            } else {
                (-c, 0, -c)
            }
        }
        // Connector pairs at offsets (3s, 3s+1).
        _ => {
            let s = (offset / 3) as usize; // 3,4 -> 1; 6,7 -> 2; 9,10 -> 3
            let upper = offset % 3 == 0;
            let (v, truth) = slot_sig(s);
            debug_assert_eq!(truth, s == true_slot as usize);
            match (truth, upper) {
                (true, true) => (c, v, -c),
                (true, false) => (-c, -v, c),
                (false, true) => (-c, -v, c),
                (false, false) => (c, v, -c),
            }
        }
    };
    Tile::new(num(top), num(right), num(bottom), Label::Left)
}

/// Read the assignment encoded by a tiling of the reduced instance: for each
/// variable the bottoms of its block's two middle cells in the assignment
/// row, `(i, -i)` meaning true and `(-i, i)` false.
///
/// The tiling may be of the square-padded instance; the core construction
/// then sits at the bottom-right and the offsets follow from the dimension
/// difference. Toroidal witnesses are readable only if untranslated, since
/// a torus admits shifted copies of every tiling.
pub fn decode_assignment(map: &ReductionMap, tiling: &Tiling) -> Result<Assignment> {
    if tiling.width() < map.width() || tiling.height() < map.height() {
        return Err(Error::DimensionMismatch {
            got_w: tiling.width(),
            got_h: tiling.height(),
            want_w: map.width(),
            want_h: map.height(),
        });
    }
    let row0 = tiling.height() - map.height();
    let col0 = tiling.width() - map.width();

    let n = map.problem().var_count();
    let mut values = Vec::with_capacity(n);
    for var in 1..=n {
        let i = map.plan().variable(var);
        let a = tiling.get(row0, col0 + 4 * var - 2).bottom;
        let b = tiling.get(row0, col0 + 4 * var - 1).bottom;
        if (a, b) == (Label::Num(i), Label::Num(-i)) {
            values.push(true);
        } else if (a, b) == (Label::Num(-i), Label::Num(i)) {
            values.push(false);
        } else {
            return Err(Error::CorruptWitness { var, got: format!("({a}, {b})") });
        }
    }
    Ok(Assignment::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{reduce, sat_oracle, ReduceVariant};
    use crate::validate::validate_tiling;

    fn phi(n: usize, clauses: &[[usize; 3]]) -> OneInThreeInstance {
        OneInThreeInstance::new(n, clauses.to_vec()).unwrap()
    }

    #[test]
    fn witness_is_valid_and_round_trips() {
        let problem = phi(3, &[[1, 2, 3]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Bordered);
        for a in sat_oracle(&problem).unwrap() {
            let tiling = layout_witness(&problem, &a).unwrap();
            let report = validate_tiling(&inst, &tiling).unwrap();
            assert!(report.is_valid(), "assignment {a}: {:?}", report.violations.first());
            assert_eq!(decode_assignment(&map, &tiling).unwrap(), a);
        }
    }

    #[test]
    fn witness_for_two_clauses() {
        let problem = phi(4, &[[1, 2, 3], [1, 2, 4]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Bordered);
        let a = Assignment::new(vec![false, false, true, true]);
        let tiling = layout_witness(&problem, &a).unwrap();
        assert!(validate_tiling(&inst, &tiling).unwrap().is_valid());
        assert_eq!(decode_assignment(&map, &tiling).unwrap().bits(), "0011");
    }

    #[test]
    fn witness_with_repeated_variables() {
        let problem = phi(2, &[[1, 1, 2]]);
        let (inst, _) = reduce(&problem, ReduceVariant::Bordered);
        let a = Assignment::new(vec![false, true]);
        let tiling = layout_witness(&problem, &a).unwrap();
        assert!(validate_tiling(&inst, &tiling).unwrap().is_valid());
    }

    #[test]
    fn non_satisfying_assignment_is_rejected() {
        let problem = phi(3, &[[1, 2, 3]]);
        let a = Assignment::new(vec![true, true, false]);
        assert!(matches!(
            layout_witness(&problem, &a),
            Err(Error::NotOneInThree { clause: 1, true_count: 2 })
        ));
        let a = Assignment::new(vec![true, false]);
        assert!(matches!(layout_witness(&problem, &a), Err(Error::AssignmentLength { .. })));
    }

    #[test]
    fn corrupt_grid_fails_to_decode() {
        let problem = phi(1, &[[1, 1, 1]]);
        let (inst, map) = reduce(&problem, ReduceVariant::Bordered);
        // All-zero bottoms under block 1.
        let grid = vec![Tile::zero(); inst.cell_count()];
        let tiling = Tiling::new(inst.width(), inst.height(), grid).unwrap();
        assert!(matches!(
            decode_assignment(&map, &tiling),
            Err(Error::CorruptWitness { var: 1, .. })
        ));
    }
}
