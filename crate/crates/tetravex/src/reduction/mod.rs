//! Compiling positive 1-in-3-SAT into Tetravex.
//!
//! A formula with `n` variables and `m` clauses (each clause three positive
//! variable occurrences, of which exactly one must be true) becomes a
//! bordered board of `4n+2` by `12m+1` tiles that has a tiling iff the
//! formula is satisfiable. Five kinds of gadget are laid down:
//!
//! * an assignment row along the top edge: per variable a 4-tile block whose
//!   two middle tiles carry bottoms `i` and `-i`; their order in a tiling
//!   encodes the variable's truth value;
//! * a 12-tile clause column per clause along the left edge, which seats
//!   exactly one of its three incoming wire pairs as true;
//! * vertical wire pairs carrying each variable's signal down the board and
//!   horizontal wire pairs carrying each clause slot's signal across it;
//! * 2x2 junction blocks with a unique label wherever a slot's horizontal
//!   wire meets its own variable's vertical wire, turning the vertical
//!   signal into the horizontal one;
//! * all-zero filler everywhere else.
//!
//! Sentinel labels pin gadgets to board edges: no tile has `Top` as its
//! bottom label, `Left` as its right label, or `Right` as its left label.
//! The toroidal variant replaces the sentinels with zero and appends one
//! terminator row and column that close off the wires, so every outer edge
//! is zero and the wrap constraints stay satisfiable.
//!
//! The emitted tile multiset is a function of the formula alone; no gadget
//! is laid out by reference to any particular assignment.

mod build;
mod mapio;
mod pad;
mod sat;
mod witness;

pub use build::{emitted_tile, reduce, ReduceVariant};
pub use mapio::{parse_map, serialize_map};
pub use pad::pad_to_square;
pub use sat::{parse_1in3, sat_oracle, satisfies_one_in_three};
pub use witness::{decode_assignment, layout_witness};

use crate::error::{Error, Result};
use crate::instance::Boundary;

/// A positive 1-in-3-SAT formula: `n` variables, clauses of three variable
/// indices in `1..=n`. A clause may repeat a variable; each occurrence
/// counts separately, so `(x, x, x)` is unsatisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneInThreeInstance {
    n: usize,
    clauses: Vec<[usize; 3]>,
}

impl OneInThreeInstance {
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if n == 0 {
            return Err(Error::parse(0, "need at least one variable"));
        }
        if clauses.is_empty() {
            return Err(Error::parse(0, "need at least one clause"));
        }
        for (p, clause) in clauses.iter().enumerate() {
            for &v in clause {
                if v == 0 || v > n {
                    return Err(Error::parse(
                        0,
                        format!("clause {} references variable {v} outside 1..={n}", p + 1),
                    ));
                }
            }
        }
        Ok(OneInThreeInstance { n, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Variable of clause `p` (1-based) at slot `s` (1..=3).
    pub fn var(&self, p: usize, s: usize) -> usize {
        self.clauses[p - 1][s - 1]
    }
}

/// A truth assignment; index 0 holds variable 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Truth value of 1-based variable `var`.
    pub fn get(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    /// Bit string `x1 x2 ... xn`, e.g. `010`.
    pub fn bits(&self) -> String {
        self.values.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl std::fmt::Display for Assignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.bits())
    }
}

/// The numeric label ranges of a reduction. All ranges are pairwise
/// disjoint and every junction label exceeds `n+m`:
///
/// * variable labels `1..=n`;
/// * clause labels `n+p` for clause `p`;
/// * junction labels `n+m+3(p-1)+s`, up to `n+4m`;
/// * per-variable wire labels, four per variable starting at `n+4m+1`: an
///   entry label `e_v` and one alternation label `A_{v,s}` per slot
///   position. Within every 12-row band, variable `v`'s vertical wire is
///   the forced chain `v, e, A1, *, A1, A2, *, A2, A3, *, A3, e, v` of edge
///   labels (`*` the pair-internal edge: the negated alternation label at a
///   crossing, the junction's own label at a junction), so wire tiles
///   cannot reorder and a junction block fits at exactly its slot's row
///   pair and nowhere else;
/// * assignment-row chain labels starting at `5n+4m+1`: the top row chains
///   start -> block 1 -> ... -> block n -> end through them, and since they
///   match no interior label the blocks are rigid up to the order of their
///   two middle tiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelPlan {
    n: usize,
    m: usize,
}

impl LabelPlan {
    pub fn new(n: usize, m: usize) -> Self {
        LabelPlan { n, m }
    }

    pub fn variable(&self, i: usize) -> i64 {
        debug_assert!(1 <= i && i <= self.n);
        i as i64
    }

    pub fn clause(&self, p: usize) -> i64 {
        debug_assert!(1 <= p && p <= self.m);
        (self.n + p) as i64
    }

    pub fn junction(&self, p: usize, s: usize) -> i64 {
        debug_assert!(1 <= p && p <= self.m && 1 <= s && s <= 3);
        (self.n + self.m + 3 * (p - 1) + s) as i64
    }

    /// Entry/exit label of variable `v`'s vertical wire, used on the edges
    /// just inside each band boundary.
    pub fn wire_entry(&self, v: usize) -> i64 {
        debug_assert!(1 <= v && v <= self.n);
        (self.n + 4 * self.m + 4 * (v - 1) + 1) as i64
    }

    /// Alternation label bounding slot `s`'s row pair on variable `v`'s
    /// vertical wire.
    pub fn alternation(&self, v: usize, s: usize) -> i64 {
        debug_assert!(1 <= v && v <= self.n && 1 <= s && s <= 3);
        (self.n + 4 * self.m + 4 * (v - 1) + 1 + s) as i64
    }

    /// Chain label between block `k` and block `k+1` of the assignment row
    /// (`k = 0` before block 1, `k = n` after block n).
    pub fn chain(&self, k: usize) -> i64 {
        debug_assert!(k <= self.n);
        (5 * self.n + 4 * self.m + 1 + k) as i64
    }

    /// Largest numeric label the construction uses (the last chain label).
    pub fn max_numeric(&self) -> i64 {
        (6 * self.n + 4 * self.m + 1) as i64
    }

    /// Label on variable `v`'s vertical wire at edge boundary `b` (the edge
    /// between rows `b` and `b+1`), for positive polarity. A junction
    /// replaces the negated pair-internal label with its own.
    pub fn wire_boundary(&self, v: usize, b: usize) -> i64 {
        match b % 12 {
            0 => self.variable(v),
            1 | 11 => self.wire_entry(v),
            2 | 4 => self.alternation(v, 1),
            5 | 7 => self.alternation(v, 2),
            8 | 10 => self.alternation(v, 3),
            3 => -self.alternation(v, 1),
            6 => -self.alternation(v, 2),
            _ => -self.alternation(v, 3), // 9
        }
    }
}

/// Which column of a vertical wire pair a cell sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WireSide {
    Left,
    Right,
}

/// Which row of a horizontal wire pair a cell sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WireRow {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

/// The gadget role of one board cell. Role geometry depends only on the
/// formula, never on an assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRole {
    TopStart,
    /// Tile `pos` (1..=4) of variable `var`'s assignment block.
    AssignBlock { var: usize, pos: u8 },
    TopEnd,
    /// Tile `offset` (1..=12, top to bottom) of clause `clause`'s column.
    ClauseCell { clause: usize, offset: u8 },
    VerticalWire { var: usize, side: WireSide },
    HorizontalWire { clause: usize, slot: u8, row: WireRow },
    /// A cell where `var`'s vertical wire crosses the horizontal wire of
    /// `(clause, slot)`, whose variable differs from `var`.
    Crossing { var: usize, clause: usize, slot: u8 },
    Junction { clause: usize, slot: u8, corner: Corner },
    Filler,
}

/// Per-cell gadget roles of a reduced board, tying it back to the formula.
///
/// The bordered board is `4n+2` wide and `12m+1` high; the toroidal variant
/// adds one terminator column and row. For a square-padded instance the map
/// still describes the core construction, which sits at the bottom-right of
/// the padded board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    width: usize,
    height: usize,
    boundary: Boundary,
    problem: OneInThreeInstance,
    plan: LabelPlan,
    roles: Vec<CellRole>,
}

impl ReductionMap {
    pub(crate) fn from_parts(
        width: usize,
        height: usize,
        boundary: Boundary,
        problem: OneInThreeInstance,
        plan: LabelPlan,
        roles: Vec<CellRole>,
    ) -> Self {
        debug_assert_eq!(roles.len(), width * height);
        ReductionMap { width, height, boundary, problem, plan, roles }
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

    pub fn problem(&self) -> &OneInThreeInstance {
        &self.problem
    }

    pub fn plan(&self) -> LabelPlan {
        self.plan
    }

    pub fn role(&self, row: usize, col: usize) -> CellRole {
        debug_assert!(row < self.height && col < self.width);
        self.roles[row * self.width + col]
    }

    pub fn roles(&self) -> &[CellRole] {
        &self.roles
    }

    /// Per-role cell tallies. The vertical and horizontal wire categories
    /// both include crossing cells, matching the way the construction counts
    /// its wiring tiles; `crossing_cells` exposes the overlap.
    pub fn tally(&self) -> CountReport {
        let mut junction = 0;
        let mut vertical = 0;
        let mut horizontal = 0;
        let mut crossing = 0;
        let mut filler = 0;
        for role in &self.roles {
            match role {
                CellRole::Junction { .. } => junction += 1,
                CellRole::VerticalWire { .. } => vertical += 1,
                CellRole::HorizontalWire { .. } => horizontal += 1,
                CellRole::Crossing { .. } => crossing += 1,
                CellRole::Filler => filler += 1,
                _ => {}
            }
        }
        CountReport {
            width: self.width,
            height: self.height,
            total_tiles: self.width * self.height,
            junction_tiles: junction,
            vertical_wire_cells: vertical + crossing,
            horizontal_wire_cells: horizontal + crossing,
            crossing_cells: crossing,
            filler_tiles: filler,
        }
    }
}

/// Cell counts of a bordered reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub width: usize,
    pub height: usize,
    pub total_tiles: usize,
    pub junction_tiles: usize,
    /// Vertical wiring cells, crossings included.
    pub vertical_wire_cells: usize,
    /// Horizontal wiring cells, crossings included.
    pub horizontal_wire_cells: usize,
    /// Cells counted in both wire categories above.
    pub crossing_cells: usize,
    pub filler_tiles: usize,
}

/// Closed-form cell counts for a bordered reduction of `n` variables and
/// `m` clauses.
pub fn expected_counts(n: usize, m: usize) -> CountReport {
    assert!(n >= 1 && m >= 1);
    let width = 4 * n + 2;
    let height = 12 * m + 1;
    CountReport {
        width,
        height,
        total_tiles: width * height,
        junction_tiles: 12 * m,
        vertical_wire_cells: 24 * n * m - 12 * m,
        horizontal_wire_cells: 24 * n * m - 6 * m,
        crossing_cells: 12 * n * m - 12 * m,
        filler_tiles: 12 * n * m + 6 * m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_validation() {
        assert!(OneInThreeInstance::new(3, vec![[1, 2, 3]]).is_ok());
        assert!(OneInThreeInstance::new(1, vec![[1, 1, 1]]).is_ok());
        assert!(OneInThreeInstance::new(0, vec![[1, 1, 1]]).is_err());
        assert!(OneInThreeInstance::new(2, vec![]).is_err());
        assert!(OneInThreeInstance::new(2, vec![[1, 2, 3]]).is_err());
        assert!(OneInThreeInstance::new(2, vec![[0, 1, 2]]).is_err());
    }

    #[test]
    fn label_plan_ranges_are_disjoint() {
        for n in 1..=4 {
            for m in 1..=3 {
                let plan = LabelPlan::new(n, m);
                let mut seen = std::collections::HashSet::new();
                for i in 1..=n {
                    assert!(seen.insert(plan.variable(i)));
                    assert!(seen.insert(plan.wire_entry(i)));
                    for s in 1..=3 {
                        assert!(seen.insert(plan.alternation(i, s)));
                    }
                }
                for p in 1..=m {
                    assert!(seen.insert(plan.clause(p)));
                    for s in 1..=3 {
                        let j = plan.junction(p, s);
                        assert!(j > (n + m) as i64);
                        assert!(seen.insert(j));
                    }
                }
                for k in 0..=n {
                    assert!(seen.insert(plan.chain(k)));
                }
                assert_eq!(seen.iter().max(), Some(&plan.max_numeric()));
            }
        }
    }

    #[test]
    fn wire_boundaries_form_the_forced_band_chain() {
        let plan = LabelPlan::new(2, 2);
        let v = 1;
        let e = plan.wire_entry(v);
        let (a1, a2, a3) = (plan.alternation(v, 1), plan.alternation(v, 2), plan.alternation(v, 3));
        let expect = [1, e, a1, -a1, a1, a2, -a2, a2, a3, -a3, a3, e];
        for band in 0..2 {
            for (off, &want) in expect.iter().enumerate() {
                assert_eq!(plan.wire_boundary(v, 12 * band + off), want);
            }
        }
        assert_eq!(plan.wire_boundary(v, 24), 1); // bottom edge of the board
    }

    #[test]
    fn expected_counts_reference_values() {
        let r = expected_counts(1, 1);
        assert_eq!((r.width, r.height, r.total_tiles), (6, 13, 78));
        assert_eq!(r.junction_tiles, 12);
        assert_eq!(r.vertical_wire_cells, 12);
        assert_eq!(r.horizontal_wire_cells, 18);
        assert_eq!(r.crossing_cells, 0);
        assert_eq!(r.filler_tiles, 18);
        // Assignment row (6) + clause column (12) + the categories above,
        // with no crossing overlap, account for every cell.
        assert_eq!(6 + 12 + 12 + 12 + 18 + 18, 78);

        let r = expected_counts(2, 1);
        assert_eq!(r.vertical_wire_cells, 36);
        assert_eq!(r.horizontal_wire_cells, 42);
        assert_eq!(r.crossing_cells, 12);
    }

    #[test]
    fn assignment_bits() {
        let a = Assignment::new(vec![false, true, false]);
        assert_eq!(a.bits(), "010");
        assert!(!a.get(1));
        assert!(a.get(2));
    }
}
