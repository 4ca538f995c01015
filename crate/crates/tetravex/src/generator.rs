//! Random puzzle generation and the experiment harness.
//!
//! Everything here is a pure function of its configuration: labels are drawn
//! from a pinned SplitMix64 stream (see [`crate::rng`]), per-trial seeds are
//! derived independently of execution order, and no wall-clock or OS
//! randomness is involved. Re-running with the same parameters reproduces
//! the same instances and the same CSV bytes, timing column aside.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::instance::{Boundary, Instance};
use crate::label::Label;
use crate::rng::{mix64, SplitMix64};
use crate::solver::{solve, SolveStatus};
use crate::tile::Tile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenMode {
    /// Label a full board and cut it into tiles: solvable by construction.
    Shredded,
    /// Draw each tile's four labels independently: no solvability guarantee.
    Iid,
}

impl GenMode {
    pub fn name(&self) -> &'static str {
        match self {
            GenMode::Shredded => "shredded",
            GenMode::Iid => "iid",
        }
    }
}

/// Generator configuration. Labels are always `Num(0..alphabet)`, never
/// sentinels, so generated puzzles can never collide with reduction
/// sentinel labels.
#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub width: usize,
    pub height: usize,
    /// Number of distinct labels, at least 1.
    pub alphabet: u64,
    pub seed: u64,
    pub mode: GenMode,
}

impl GenConfig {
    fn rng(&self) -> SplitMix64 {
        SplitMix64::new(self.seed)
    }

    fn label(&self, rng: &mut SplitMix64) -> Label {
        Label::Num(rng.below(self.alphabet) as i64)
    }
}

/// Generate per `cfg.mode`.
pub fn generate(cfg: &GenConfig) -> Instance {
    match cfg.mode {
        GenMode::Shredded => generate_shredded(cfg),
        GenMode::Iid => generate_iid(cfg),
    }
}

/// Draw every edge of the board (interior and border) uniformly from the
/// alphabet, cut the board into tiles, and shuffle them. The pre-shred board
/// is a tiling, so the instance is always solvable.
///
/// Draw order, pinned for reproducibility: horizontal edges row-major (all
/// `height+1` edge rows), then vertical edges row-major, then one
/// Fisher-Yates pass over the cut tiles by the same stream.
pub fn generate_shredded(cfg: &GenConfig) -> Instance {
    assert!(cfg.alphabet >= 1);
    assert_eq!(cfg.mode, GenMode::Shredded);
    let (w, h) = (cfg.width, cfg.height);
    let mut rng = cfg.rng();

    // hedges[r][c] is the top edge of cell (r, c); row h is the bottom border.
    let hedges: Vec<Vec<Label>> =
        (0..=h).map(|_| (0..w).map(|_| cfg.label(&mut rng)).collect()).collect();
    // vedges[r][c] is the left edge of cell (r, c); column w is the right border.
    let vedges: Vec<Vec<Label>> =
        (0..h).map(|_| (0..=w).map(|_| cfg.label(&mut rng)).collect()).collect();

    let mut tiles = Vec::with_capacity(w * h);
    for r in 0..h {
        for c in 0..w {
            tiles.push(Tile::new(hedges[r][c], vedges[r][c + 1], hedges[r + 1][c], vedges[r][c]));
        }
    }
    for j in (1..tiles.len()).rev() {
        let i = rng.below(j as u64 + 1) as usize;
        tiles.swap(i, j);
    }

    Instance::new(w, h, Boundary::Bordered, tiles).expect("w*h tiles")
}

/// Draw all four labels of each tile i.i.d. from the alphabet, tile by tile
/// in the order top, right, bottom, left.
pub fn generate_iid(cfg: &GenConfig) -> Instance {
    assert!(cfg.alphabet >= 1);
    assert_eq!(cfg.mode, GenMode::Iid);
    let mut rng = cfg.rng();
    let tiles = (0..cfg.width * cfg.height)
        .map(|_| {
            let t = cfg.label(&mut rng);
            let r = cfg.label(&mut rng);
            let b = cfg.label(&mut rng);
            let l = cfg.label(&mut rng);
            Tile::new(t, r, b, l)
        })
        .collect();
    Instance::new(cfg.width, cfg.height, Boundary::Bordered, tiles).expect("w*h tiles")
}

/// Rejection-sample shredded instances at seeds `seed, seed+1, ...` until
/// one has exactly one tiling, giving up after `budget` attempts.
pub fn generate_unique(cfg: &GenConfig, budget: u64) -> Result<Instance> {
    assert!(budget >= 1);
    assert_eq!(cfg.mode, GenMode::Shredded);
    for attempt in 0..budget {
        let candidate =
            generate_shredded(&GenConfig { seed: cfg.seed.wrapping_add(attempt), ..*cfg });
        if crate::solver::is_uniquely_solvable(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::UniqueBudgetExhausted { attempts: budget })
}

/// One aggregate line of an experiment run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub mode: GenMode,
    pub width: usize,
    pub height: usize,
    pub alphabet: u64,
    pub seed: u64,
    pub trials: u64,
    pub solvable_frac: f64,
    pub unique_frac: f64,
    pub mean_nodes: f64,
    pub mean_micros: f64,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub modes: Vec<GenMode>,
    pub sizes: Vec<(usize, usize)>,
    pub alphabets: Vec<u64>,
    pub trials: u64,
    pub seed: u64,
}

/// Seed for trial `t` of a run seeded with `master`: both values are mixed
/// so trials are independent and order-free.
fn trial_seed(master: u64, trial: u64) -> u64 {
    mix64(master ^ mix64(trial))
}

/// For every (mode, size, alphabet) combination, in that nesting order:
/// generate `trials` instances with independently derived per-trial seeds,
/// solve each with limit 2, and aggregate. Everything except `mean_micros`
/// is deterministic.
pub fn run_experiment(cfg: &ExperimentConfig) -> Vec<ExperimentRow> {
    assert!(cfg.trials >= 1);
    let mut rows = Vec::new();
    for &mode in &cfg.modes {
        for &(width, height) in &cfg.sizes {
            for &alphabet in &cfg.alphabets {
                let mut solvable = 0u64;
                let mut unique = 0u64;
                let mut nodes = 0u64;
                let mut micros = 0.0f64;
                for trial in 0..cfg.trials {
                    let gen_cfg = GenConfig {
                        width,
                        height,
                        alphabet,
                        seed: trial_seed(cfg.seed, trial),
                        mode,
                    };
                    let instance = generate(&gen_cfg);
                    let started = Instant::now();
                    let res = solve(&instance, 2, 0);
                    micros += started.elapsed().as_secs_f64() * 1e6;
                    if res.count >= 1 {
                        solvable += 1;
                    }
                    if res.count == 1 && res.status == SolveStatus::Solvable {
                        unique += 1;
                    }
                    nodes += res.stats.nodes_expanded;
                }
                let t = cfg.trials as f64;
                rows.push(ExperimentRow {
                    mode,
                    width,
                    height,
                    alphabet,
                    seed: cfg.seed,
                    trials: cfg.trials,
                    solvable_frac: solvable as f64 / t,
                    unique_frac: unique as f64 / t,
                    mean_nodes: nodes as f64 / t,
                    mean_micros: micros / t,
                });
            }
        }
    }
    rows
}

/// CSV rendering. The final `mean_micros` column is informational and rig
/// dependent; everything before it is byte-stable for fixed parameters.
pub fn experiment_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(
        "mode,width,height,alphabet,seed,trials,solvable_frac,unique_frac,mean_nodes,mean_micros\n",
    );
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.6},{:.6},{:.3},{:.3}\n",
            row.mode.name(),
            row.width,
            row.height,
            row.alphabet,
            row.seed,
            row.trials,
            row.solvable_frac,
            row.unique_frac,
            row.mean_nodes,
            row.mean_micros,
        ));
    }
    out
}
