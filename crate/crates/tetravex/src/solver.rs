//! Exact solver: decide solvability, count tilings, and produce witnesses.
//!
//! The search fills cells row-major (left to right, top to bottom), so each
//! new cell is constrained by at most two already-placed neighbours. For
//! every (required-left, required-top) pair the candidate tile types come
//! from a precomputed index, with wildcard tiers for the top row and left
//! column. Candidates are tile *types* with remaining multiplicity, never
//! individual copies, so identical tiles are neither branched on nor counted
//! separately: two tilings are distinct iff some cell holds a different tile
//! type. Ties are broken in canonical tile order, which makes counts,
//! statuses and witnesses deterministic.
//!
//! On a toroidal board the wrap constraints are enforced as early as the
//! search order allows: the row wrap when a row's last cell is placed, the
//! column wrap when a bottom-row cell is placed.
//!
//! Two families of sound prunings keep the reduction-style instances (long
//! forced chains, heavy tile duplication) tractable. Neither changes counts
//! or the order in which solutions are found:
//!
//! * supply lookahead: placing a tile whose bottom label no remaining tile
//!   can match is rejected as soon as the cell below is known to exist;
//! * edge-capacity accounting: a tile whose top label occurs on no tile's
//!   bottom can only ever sit in row 0 of a bordered board (and likewise for
//!   the other three edges), so a branch dies when more such tiles remain
//!   than free cells in their only possible row or column.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::tile::Tile;
use crate::tiling::Tiling;
use crate::validate::validate_tiling;

/// Outcome kind of a [`solve`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The search space was exhausted and at least one tiling was found.
    Solvable,
    /// The search space was exhausted and no tiling exists.
    Unsolvable,
    /// The solution limit was hit before exhausting the search space.
    LimitReached,
}

/// Search cost counters.
#[derive(Debug, Clone)]
pub struct SearchStats {
    /// Candidate placement attempts, successful or failed.
    pub nodes_expanded: u64,
    /// Deepest number of simultaneously placed tiles.
    pub max_depth: usize,
    /// Wall-clock time. Informational only; everything else is deterministic.
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Tilings found before stopping (exact when status is not `LimitReached`).
    pub count: u64,
    /// Up to `collect` witnesses, in discovery order.
    pub witnesses: Vec<Tiling>,
    pub stats: SearchStats,
}

/// Count tilings of `instance` up to `limit`, returning up to `collect`
/// witnesses. `limit` must be at least 1 and `collect` at most `limit`.
pub fn solve(instance: &Instance, limit: u64, collect: usize) -> SolveResult {
    assert!(limit >= 1, "limit must be at least 1");
    assert!(collect as u64 <= limit, "collect must not exceed limit");

    let start = Instant::now();
    let mut search = Search::new(instance, limit, collect);
    if search.feasible {
        search.dfs(0);
    }

    let status = if search.limit_hit {
        SolveStatus::LimitReached
    } else if search.count > 0 {
        SolveStatus::Solvable
    } else {
        SolveStatus::Unsolvable
    };
    SolveResult {
        status,
        count: search.count,
        witnesses: search.witnesses,
        stats: SearchStats {
            nodes_expanded: search.nodes,
            max_depth: search.max_depth,
            elapsed: start.elapsed(),
        },
    }
}

/// True iff the instance has exactly one tiling at the tile-type level.
pub fn is_uniquely_solvable(instance: &Instance) -> bool {
    solve(instance, 2, 0).count == 1
}

const BRUTE_FORCE_MAX_CELLS: usize = 9;

/// Independent counting oracle for small boards: enumerate every distinct
/// arrangement of the tile multiset over the grid and check each one with
/// [`validate_tiling`]. No pruning, no code shared with [`solve`]'s search.
pub fn brute_force_count(instance: &Instance) -> Result<u64> {
    let cells = instance.cell_count();
    if cells > BRUTE_FORCE_MAX_CELLS {
        return Err(Error::BruteForceBound { cells, max: BRUTE_FORCE_MAX_CELLS });
    }

    let types = instance.tile_types();
    let mut counts: Vec<usize> = types.iter().map(|&(_, n)| n).collect();
    let mut grid: Vec<Tile> = Vec::with_capacity(cells);
    let mut found = 0u64;

    fn fill(
        types: &[(Tile, usize)],
        counts: &mut [usize],
        grid: &mut Vec<Tile>,
        instance: &Instance,
        found: &mut u64,
    ) {
        if grid.len() == instance.cell_count() {
            let tiling =
                Tiling::new(instance.width(), instance.height(), grid.clone()).expect("full grid");
            let report = validate_tiling(instance, &tiling).expect("dims match");
            if report.is_valid() {
                *found += 1;
            }
            return;
        }
        for i in 0..types.len() {
            if counts[i] == 0 {
                continue;
            }
            counts[i] -= 1;
            grid.push(types[i].0);
            fill(types, counts, grid, instance, found);
            grid.pop();
            counts[i] += 1;
        }
    }

    fill(&types, &mut counts, &mut grid, instance, &mut found);
    Ok(found)
}

const NO_TILE: u16 = u16::MAX;

struct Search {
    width: usize,
    height: usize,
    cells: usize,
    toroidal: bool,
    types: Vec<Tile>,
    remaining: Vec<u32>,
    grid: Vec<u16>,

    // Candidate lists (type ids in canonical order) addressed through the
    // three index tiers plus the wildcard list.
    lists: Vec<Vec<u16>>,
    by_left_top: HashMap<(Label, Label), usize>,
    by_left: HashMap<Label, usize>,
    by_top: HashMap<Label, usize>,
    all: usize,
    empty: usize,

    // Supply of remaining tiles keyed by their top and bottom labels.
    top_supply: HashMap<Label, u32>,
    bottom_supply: HashMap<Label, u32>,
    // Toroidal column wrap: every label placed as a row-0 top must
    // eventually be matched by a bottom-row tile's bottom.
    wrap_demand: HashMap<Label, u32>,

    // Edge-capacity accounting (bordered boards only).
    must_mask: Vec<u8>, // per type: bit 0 row0, 1 col0, 2 last row, 3 last col
    need: [usize; 4],
    slots: [usize; 4],

    feasible: bool,
    limit: u64,
    collect: usize,
    count: u64,
    witnesses: Vec<Tiling>,
    nodes: u64,
    max_depth: usize,
    limit_hit: bool,
    stop: bool,
}

const ROW0: usize = 0;
const COL0: usize = 1;
const LAST_ROW: usize = 2;
const LAST_COL: usize = 3;

impl Search {
    fn new(instance: &Instance, limit: u64, collect: usize) -> Self {
        let width = instance.width();
        let height = instance.height();
        let cells = width * height;
        let toroidal = instance.boundary() == Boundary::Toroidal;

        let type_table = instance.tile_types();
        let types: Vec<Tile> = type_table.iter().map(|&(t, _)| t).collect();
        let remaining: Vec<u32> = type_table.iter().map(|&(_, n)| n as u32).collect();
        assert!(types.len() < NO_TILE as usize);

        let mut lists: Vec<Vec<u16>> = vec![Vec::new(), Vec::new()];
        let empty = 0;
        let all = 1;
        let mut by_left_top: HashMap<(Label, Label), usize> = HashMap::new();
        let mut by_left: HashMap<Label, usize> = HashMap::new();
        let mut by_top: HashMap<Label, usize> = HashMap::new();
        for (id, tile) in types.iter().enumerate() {
            let id = id as u16;
            lists[all].push(id);
            for (key, map) in [
                (tile.left, &mut by_left),
                (tile.top, &mut by_top),
            ] {
                let slot = *map.entry(key).or_insert_with(|| {
                    lists.push(Vec::new());
                    lists.len() - 1
                });
                lists[slot].push(id);
            }
            let slot = *by_left_top.entry((tile.left, tile.top)).or_insert_with(|| {
                lists.push(Vec::new());
                lists.len() - 1
            });
            lists[slot].push(id);
        }

        // Face counts over the full multiset. A label that appears on no
        // tile's opposite edge can only face the border, which pins the tile
        // to one edge of a bordered board.
        let mut bottoms: HashMap<Label, u32> = HashMap::new();
        let mut tops: HashMap<Label, u32> = HashMap::new();
        let mut rights: HashMap<Label, u32> = HashMap::new();
        let mut lefts: HashMap<Label, u32> = HashMap::new();
        for &(tile, n) in &type_table {
            *bottoms.entry(tile.bottom).or_insert(0) += n as u32;
            *tops.entry(tile.top).or_insert(0) += n as u32;
            *rights.entry(tile.right).or_insert(0) += n as u32;
            *lefts.entry(tile.left).or_insert(0) += n as u32;
        }
        let top_supply = tops.clone();
        let bottom_supply = bottoms.clone();
        let mut must_mask = vec![0u8; types.len()];
        let mut need = [0usize; 4];
        let mut feasible = true;
        for (id, &(tile, n)) in type_table.iter().enumerate() {
            let mut mask = 0u8;
            if !bottoms.contains_key(&tile.top) {
                mask |= 1 << ROW0;
            }
            if !rights.contains_key(&tile.left) {
                mask |= 1 << COL0;
            }
            if !tops.contains_key(&tile.bottom) {
                mask |= 1 << LAST_ROW;
            }
            if !lefts.contains_key(&tile.right) {
                mask |= 1 << LAST_COL;
            }
            if toroidal && mask != 0 {
                // Every edge must be matched on a torus.
                feasible = false;
            }
            must_mask[id] = mask;
            for class in 0..4 {
                if mask & (1 << class) != 0 {
                    need[class] += n;
                }
            }
        }
        if toroidal {
            // Every top edge pairs with some bottom edge across the whole
            // board, so the per-label face counts must balance exactly.
            if bottoms != tops || rights != lefts {
                feasible = false;
            }
            must_mask.iter_mut().for_each(|m| *m = 0);
            need = [0; 4];
        }

        let slots = [width, height, width, height];

        Search {
            width,
            height,
            cells,
            toroidal,
            types,
            remaining,
            grid: vec![NO_TILE; cells],
            lists,
            by_left_top,
            by_left,
            by_top,
            all,
            empty,
            top_supply,
            bottom_supply,
            wrap_demand: HashMap::new(),
            must_mask,
            need,
            slots,
            feasible,
            limit,
            collect,
            count: 0,
            witnesses: Vec::new(),
            nodes: 0,
            max_depth: 0,
            limit_hit: false,
            stop: false,
        }
    }

    fn tile_at(&self, cell: usize) -> Tile {
        self.types[self.grid[cell] as usize]
    }

    fn dfs(&mut self, cell: usize) {
        if cell == self.cells {
            self.count += 1;
            if self.witnesses.len() < self.collect {
                let tiles: Vec<Tile> = self.grid.iter().map(|&t| self.types[t as usize]).collect();
                self.witnesses.push(Tiling::new(self.width, self.height, tiles).expect("full grid"));
            }
            if self.count >= self.limit {
                self.limit_hit = true;
                self.stop = true;
            }
            return;
        }

        let r = cell / self.width;
        let c = cell % self.width;
        let req_left = (c > 0).then(|| self.tile_at(cell - 1).right);
        let req_top = (r > 0).then(|| self.tile_at(cell - self.width).bottom);
        let list = match (req_left, req_top) {
            (Some(l), Some(t)) => *self.by_left_top.get(&(l, t)).unwrap_or(&self.empty),
            (Some(l), None) => *self.by_left.get(&l).unwrap_or(&self.empty),
            (None, Some(t)) => *self.by_top.get(&t).unwrap_or(&self.empty),
            (None, None) => self.all,
        };

        let mut i = 0;
        while i < self.lists[list].len() {
            let id = self.lists[list][i];
            i += 1;
            if self.remaining[id as usize] == 0 {
                continue;
            }
            self.nodes += 1;
            let tile = self.types[id as usize];

            if self.toroidal {
                if c == self.width - 1 {
                    let wrap_left =
                        if self.width == 1 { tile.left } else { self.tile_at(cell + 1 - self.width).left };
                    if tile.right != wrap_left {
                        continue;
                    }
                }
                if r == self.height - 1 {
                    let wrap_top = if self.height == 1 { tile.top } else { self.tile_at(c).top };
                    if tile.bottom != wrap_top {
                        continue;
                    }
                }
            }

            // Place.
            self.remaining[id as usize] -= 1;
            self.grid[cell] = id;
            *self.top_supply.get_mut(&tile.top).expect("known label") -= 1;
            *self.bottom_supply.get_mut(&tile.bottom).expect("known label") -= 1;
            let track_wrap = self.toroidal && self.height > 1;
            if track_wrap {
                if r == 0 {
                    *self.wrap_demand.entry(tile.top).or_insert(0) += 1;
                }
                if r == self.height - 1 {
                    *self.wrap_demand.get_mut(&tile.bottom).expect("row 0 placed first") -= 1;
                }
            }
            let mask = self.must_mask[id as usize];
            let on_edge =
                [r == 0, c == 0, r == self.height - 1, c == self.width - 1];
            for class in 0..4 {
                if mask & (1 << class) != 0 {
                    self.need[class] -= 1;
                }
                if on_edge[class] {
                    self.slots[class] -= 1;
                }
            }

            let depth = cell + 1;
            if depth > self.max_depth {
                self.max_depth = depth;
            }

            let below_exists = r + 1 < self.height;
            let supply_ok = !below_exists
                || self.top_supply.get(&tile.bottom).copied().unwrap_or(0) > 0;
            let capacity_ok = (0..4).all(|class| self.need[class] <= self.slots[class]);
            // Column-wrap feasibility: enough matching bottoms must remain
            // for every still-unfilled bottom-row column.
            let wrap_ok = !track_wrap
                || ([tile.bottom, tile.top].iter().all(|l| {
                    self.wrap_demand.get(l).copied().unwrap_or(0)
                        <= self.bottom_supply.get(l).copied().unwrap_or(0)
                }));

            if supply_ok && capacity_ok && wrap_ok {
                self.dfs(cell + 1);
            }

            // Undo.
            for class in 0..4 {
                if mask & (1 << class) != 0 {
                    self.need[class] += 1;
                }
                if on_edge[class] {
                    self.slots[class] += 1;
                }
            }
            if track_wrap {
                if r == 0 {
                    *self.wrap_demand.get_mut(&tile.top).expect("just added") -= 1;
                }
                if r == self.height - 1 {
                    *self.wrap_demand.get_mut(&tile.bottom).expect("restored") += 1;
                }
            }
            *self.bottom_supply.get_mut(&tile.bottom).expect("known label") += 1;
            *self.top_supply.get_mut(&tile.top).expect("known label") += 1;
            self.grid[cell] = NO_TILE;
            self.remaining[id as usize] += 1;

            if self.stop {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(w: usize, h: usize, boundary: Boundary, tiles: Vec<Tile>) -> Instance {
        Instance::new(w, h, boundary, tiles).unwrap()
    }

    #[test]
    fn single_cell() {
        let i = inst(1, 1, Boundary::Bordered, vec![Tile::zero()]);
        let res = solve(&i, 2, 1);
        assert_eq!(res.status, SolveStatus::Solvable);
        assert_eq!(res.count, 1);
        assert!(validate_tiling(&i, &res.witnesses[0]).unwrap().is_valid());
    }

    #[test]
    fn identical_tiles_count_once() {
        let i = inst(2, 2, Boundary::Bordered, vec![Tile::zero(); 4]);
        let res = solve(&i, 10, 0);
        assert_eq!(res.status, SolveStatus::Solvable);
        assert_eq!(res.count, 1);
    }

    #[test]
    fn forced_pair_counts_one() {
        let a = Tile::nums(0, 5, 0, 1);
        let b = Tile::nums(0, 2, 0, 5);
        let i = inst(2, 1, Boundary::Bordered, vec![a, b]);
        assert_eq!(solve(&i, u64::MAX, 0).count, 1);
        assert_eq!(brute_force_count(&i).unwrap(), 1);
        assert!(is_uniquely_solvable(&i));
    }

    #[test]
    fn border_freedom_gives_two_tilings() {
        // Both orders are valid when the matched labels can face the border.
        let a = Tile::nums(0, 5, 0, 0);
        let b = Tile::nums(0, 0, 0, 5);
        let i = inst(2, 1, Boundary::Bordered, vec![a, b]);
        assert_eq!(solve(&i, u64::MAX, 0).count, 2);
        assert_eq!(brute_force_count(&i).unwrap(), 2);
    }

    #[test]
    fn unsolvable_reports_zero() {
        let a = Tile::nums(1, 2, 3, 4);
        let b = Tile::nums(9, 9, 9, 9);
        let i = inst(2, 1, Boundary::Bordered, vec![a, b]);
        let res = solve(&i, 1, 1);
        assert_eq!(res.status, SolveStatus::Unsolvable);
        assert_eq!(res.count, 0);
        assert!(res.witnesses.is_empty());
    }

    #[test]
    fn limit_stops_early() {
        let i = inst(2, 1, Boundary::Bordered, vec![Tile::zero(), Tile::nums(0, 0, 0, 0)]);
        // Identical tiles: exactly one type-level tiling, limit 1 reaches it.
        let res = solve(&i, 1, 0);
        assert_eq!(res.status, SolveStatus::LimitReached);
        assert_eq!(res.count, 1);
    }

    #[test]
    fn monotone_in_limit() {
        let a = Tile::nums(0, 5, 0, 0);
        let b = Tile::nums(0, 0, 0, 5);
        let i = inst(2, 1, Boundary::Bordered, vec![a, b]);
        let c1 = solve(&i, 1, 0);
        let c2 = solve(&i, 2, 0);
        let c3 = solve(&i, 3, 0);
        assert!(c1.count <= c2.count && c2.count <= c3.count);
        assert_eq!(c3.status, SolveStatus::Solvable);
        assert_eq!(c2.count, c3.count);
    }

    #[test]
    fn deterministic_across_runs() {
        let tiles = vec![
            Tile::nums(0, 1, 2, 0),
            Tile::nums(0, 0, 1, 1),
            Tile::nums(2, 2, 0, 0),
            Tile::nums(1, 0, 0, 2),
        ];
        let i = inst(2, 2, Boundary::Bordered, tiles);
        let a = solve(&i, u64::MAX, 2);
        let b = solve(&i, u64::MAX, 2);
        assert_eq!(a.count, b.count);
        assert_eq!(a.status, b.status);
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.stats.nodes_expanded, b.stats.nodes_expanded);
    }

    #[test]
    fn toroidal_wraps_are_enforced() {
        // Two tiles whose 5-edges meet only through the wrap.
        let a = Tile::nums(0, 1, 0, 5);
        let b = Tile::nums(0, 5, 0, 1);
        let i = inst(2, 1, Boundary::Toroidal, vec![a, b]);
        let res = solve(&i, u64::MAX, 1);
        assert_eq!(res.status, SolveStatus::Solvable);
        assert_eq!(res.count, 2); // the two rotations of the same cycle
        assert!(validate_tiling(&i, &res.witnesses[0]).unwrap().is_valid());

        // Same tiles, but an unmatched label makes the torus impossible.
        let c = Tile::nums(0, 1, 0, 5);
        let d = Tile::nums(0, 5, 7, 1);
        let i = inst(2, 1, Boundary::Toroidal, vec![c, d]);
        assert_eq!(solve(&i, 1, 0).status, SolveStatus::Unsolvable);
    }

    #[test]
    fn toroidal_matches_brute_force() {
        let tiles = vec![
            Tile::nums(0, 1, 0, 1),
            Tile::nums(0, 1, 0, 1),
            Tile::nums(0, 2, 0, 2),
            Tile::nums(0, 2, 0, 2),
        ];
        let i = inst(2, 2, Boundary::Toroidal, tiles);
        assert_eq!(solve(&i, u64::MAX, 0).count, brute_force_count(&i).unwrap());
    }

    #[test]
    fn brute_force_rejects_large_boards() {
        let i = inst(5, 2, Boundary::Bordered, vec![Tile::zero(); 10]);
        assert!(matches!(brute_force_count(&i), Err(Error::BruteForceBound { .. })));
    }

    #[test]
    fn nodes_dominate_solutions() {
        let i = inst(2, 2, Boundary::Bordered, vec![Tile::zero(); 4]);
        let res = solve(&i, u64::MAX, 0);
        assert!(res.stats.nodes_expanded >= res.count);
        assert_eq!(res.stats.max_depth, 4);
    }
}
