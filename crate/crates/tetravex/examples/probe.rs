use std::time::Instant;

use tetravex::reduction::{parse_1in3, reduce, ReduceVariant};
use tetravex::solver::solve;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let text = std::fs::read_to_string(&args[1]).unwrap();
    let variant = match args[2].as_str() {
        "t" => ReduceVariant::Toroidal,
        "s" => ReduceVariant::BorderedSquare,
        _ => ReduceVariant::Bordered,
    };
    let p = parse_1in3(&text).unwrap();
    let (instance, _map) = reduce(&p, variant);
    eprintln!(
        "board {}x{}, {} tile types",
        instance.width(),
        instance.height(),
        instance.tile_types().len()
    );
    let started = Instant::now();
    let res = solve(&instance, 1, 0);
    eprintln!(
        "{:?} count={} nodes={} depth={} elapsed={:?}",
        res.status,
        res.count,
        res.stats.nodes_expanded,
        res.stats.max_depth,
        started.elapsed()
    );
}
