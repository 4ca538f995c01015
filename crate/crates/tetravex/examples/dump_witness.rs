use std::time::Instant;

use tetravex::reduction::{
    decode_assignment, parse_1in3, reduce, sat_oracle, OneInThreeInstance, ReduceVariant,
};
use tetravex::rng::SplitMix64;
use tetravex::solver::{solve, SolveStatus};
use tetravex::validate::validate_tiling;

fn check(problem: &OneInThreeInstance, variant: ReduceVariant, tag: &str) {
    let (instance, map) = reduce(problem, variant);
    let sat = !sat_oracle(problem).unwrap().is_empty();
    let started = Instant::now();
    let res = solve(&instance, 1, 1);
    let solvable = res.status != SolveStatus::Unsolvable;
    let decoded = res.witnesses.first().map(|w| {
        assert!(validate_tiling(&instance, w).unwrap().is_valid());
        decode_assignment(&map, w).map(|a| a.bits()).unwrap_or_else(|e| format!("<{e}>"))
    });
    println!(
        "{tag}: {}x{} sat={} solvable={} agree={} nodes={} {:?} decoded={:?}",
        instance.width(),
        instance.height(),
        sat,
        solvable,
        sat == solvable,
        res.stats.nodes_expanded,
        started.elapsed(),
        decoded,
    );
    assert_eq!(sat, solvable, "{tag} equivalence failed");
}

fn main() {
    let p123 = parse_1in3("p 1in3 3 1\n1 2 3\n").unwrap();
    let p111 = parse_1in3("p 1in3 1 1\n1 1 1\n").unwrap();

    for variant in [ReduceVariant::Bordered, ReduceVariant::BorderedSquare, ReduceVariant::Toroidal] {
        check(&p123, variant, &format!("(1,2,3) {variant:?}"));
        check(&p111, variant, &format!("(1,1,1) {variant:?}"));
    }

    // Random sweep n <= 3, m <= 2.
    let mut rng = SplitMix64::new(20260810);
    for trial in 0..30 {
        let n = 1 + (rng.below(3) as usize);
        let m = 1 + (rng.below(2) as usize);
        let clauses: Vec<[usize; 3]> = (0..m)
            .map(|_| {
                [
                    1 + rng.below(n as u64) as usize,
                    1 + rng.below(n as u64) as usize,
                    1 + rng.below(n as u64) as usize,
                ]
            })
            .collect();
        let problem = OneInThreeInstance::new(n, clauses.clone()).unwrap();
        check(&problem, ReduceVariant::Bordered, &format!("trial {trial} n={n} {clauses:?}"));
    }

    // Decoded witnesses must be oracle assignments.
    let (instance, map) = reduce(&p123, ReduceVariant::Bordered);
    let res = solve(&instance, u64::MAX, 64);
    let oracle: Vec<String> = sat_oracle(&p123).unwrap().iter().map(|a| a.bits()).collect();
    println!("(1,2,3) total tilings: {}", res.count);
    for w in &res.witnesses {
        let bits = decode_assignment(&map, w).unwrap().bits();
        assert!(oracle.contains(&bits), "decoded {bits} not in oracle {oracle:?}");
    }
    println!("all {} witnesses decode into the oracle set", res.witnesses.len());
}
