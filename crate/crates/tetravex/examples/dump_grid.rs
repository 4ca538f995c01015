use tetravex::reduction::{parse_1in3, reduce, ReduceVariant};
use tetravex::solver::solve;

fn main() {
    let p = parse_1in3("p 1in3 1 1\n1 1 1\n").unwrap();
    let (instance, _map) = reduce(&p, ReduceVariant::Bordered);
    let res = solve(&instance, 1, 1);
    println!("count {}", res.count);
    let w = &res.witnesses[0];
    for r in 0..w.height() {
        let mut line = String::new();
        for c in 0..w.width() {
            let t = w.get(r, c);
            line.push_str(&format!("[{:>2} {:>2} {:>2} {:>2}]", t.top.token(), t.right.token(), t.bottom.token(), t.left.token()));
        }
        println!("{line}");
    }
}
