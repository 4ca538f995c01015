//! Tetravex toolkit: board model, exact solver, a constructive compilation
//! of positive 1-in-3-SAT into puzzles, and reproducible puzzle generators.
//!
//! Tetravex places square tiles, each edge carrying a label, on a
//! rectangular board so that touching edges agree; tiles are never rotated.
//! Deciding whether a tile set admits such a placement is the hard problem
//! this crate revolves around:
//!
//! * [`solver`] decides solvability, counts tilings at the tile-type level,
//!   and returns witness placements, with a brute-force oracle for
//!   cross-checking small boards;
//! * [`reduction`] compiles a positive 1-in-3-SAT formula into a board that
//!   is solvable iff the formula is satisfiable, lays out witness tilings
//!   from satisfying assignments, and decodes assignments back out of
//!   tilings — plus toroidal and square-padded variants of the board;
//! * [`generator`] produces seeded random puzzles (always-solvable shredded
//!   boards or i.i.d. tile sets), rejection-samples unique-solution puzzles,
//!   and runs solvability/uniqueness experiments to CSV.
//!
//! ```
//! use tetravex::reduction::{parse_1in3, reduce, ReduceVariant};
//! use tetravex::solver::{solve, SolveStatus};
//!
//! let formula = parse_1in3("p 1in3 3 1\n1 2 3\n")?;
//! let (instance, map) = reduce(&formula, ReduceVariant::Bordered);
//! let result = solve(&instance, 2, 1);
//! assert_eq!(result.status, SolveStatus::LimitReached); // several tilings
//! let a = tetravex::reduction::decode_assignment(&map, &result.witnesses[0])?;
//! assert_eq!(a.len(), 3);
//! # Ok::<(), tetravex::Error>(())
//! ```
//!
//! Instances and tilings are immutable after construction and all
//! operations are pure functions of their inputs, so everything can be
//! shared freely across threads.

mod error;
mod instance;
mod label;
mod tile;
mod tiling;

pub mod generator;
pub mod reduction;
pub mod rng;
pub mod solver;
pub mod text;
pub mod validate;

pub use error::{Error, Result};
pub use instance::{Boundary, Instance};
pub use label::Label;
pub use tile::Tile;
pub use tiling::Tiling;
