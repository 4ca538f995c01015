//! Formula parsing and the exhaustive satisfiability oracle.

use crate::error::{Error, Result};

use super::{Assignment, OneInThreeInstance};

/// Parse a `.1in3` file:
///
/// ```text
/// p 1in3 <n> <m>
/// <a> <b> <c>        (m lines, 1-based positive variable indices)
/// ```
pub fn parse_1in3(text: &str) -> Result<OneInThreeInstance> {
    let mut lines = text.lines().enumerate();

    let (no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    let (n, m) = match (toks.next(), toks.next(), toks.next(), toks.next(), toks.next()) {
        (Some("p"), Some("1in3"), Some(n), Some(m), None) => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::parse(no + 1, format!("bad variable count `{n}`")))?;
            let m: usize = m
                .parse()
                .map_err(|_| Error::parse(no + 1, format!("bad clause count `{m}`")))?;
            (n, m)
        }
        _ => return Err(Error::parse(no + 1, format!("expected `p 1in3 <n> <m>`, got `{header}`"))),
    };
    if n == 0 || m == 0 {
        return Err(Error::parse(no + 1, "need at least one variable and one clause"));
    }

    let mut clauses = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("expected {m} clause lines")))?;
        let mut clause = [0usize; 3];
        let mut toks = line.split_whitespace();
        for slot in clause.iter_mut() {
            let tok = toks
                .next()
                .ok_or_else(|| Error::parse(no + 1, "clause needs exactly 3 variables"))?;
            let idx: i64 = tok
                .parse()
                .map_err(|_| Error::parse(no + 1, format!("bad variable index `{tok}`")))?;
            if idx < 0 {
                return Err(Error::parse(
                    no + 1,
                    format!("negative literal `{tok}`: clauses are purely positive"),
                ));
            }
            if idx == 0 || idx as usize > n {
                return Err(Error::parse(no + 1, format!("variable {idx} outside 1..={n}")));
            }
            *slot = idx as usize;
        }
        if toks.next().is_some() {
            return Err(Error::parse(no + 1, "clause needs exactly 3 variables"));
        }
        clauses.push(clause);
    }
    match lines.next() {
        None => {}
        Some((_, line)) if line.trim().is_empty() && lines.next().is_none() => {}
        Some((no, _)) => return Err(Error::parse(no + 1, "trailing content after the last clause")),
    }

    OneInThreeInstance::new(n, clauses)
}

/// Occurrences of true variables in clause `p` under `a`. A repeated
/// variable counts once per occurrence.
fn true_occurrences(problem: &OneInThreeInstance, a: &Assignment, p: usize) -> usize {
    (1..=3).filter(|&s| a.get(problem.var(p, s))).count()
}

/// True iff every clause has exactly one true occurrence under `a`.
pub fn satisfies_one_in_three(problem: &OneInThreeInstance, a: &Assignment) -> bool {
    a.len() == problem.var_count()
        && (1..=problem.clause_count()).all(|p| true_occurrences(problem, a, p) == 1)
}

const ORACLE_MAX_VARS: usize = 20;

/// Every satisfying assignment, by checking all `2^n` of them. Results are
/// in ascending order of the bit string `x1 x2 ... xn`.
pub fn sat_oracle(problem: &OneInThreeInstance) -> Result<Vec<Assignment>> {
    let n = problem.var_count();
    if n > ORACLE_MAX_VARS {
        return Err(Error::OracleBound { vars: n, max: ORACLE_MAX_VARS });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let a = Assignment::new((1..=n).map(|i| mask >> (n - i) & 1 == 1).collect());
        if satisfies_one_in_three(problem, &a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Pre-checked variant used by operations whose contract requires a
/// satisfying assignment.
pub(super) fn require_one_in_three(problem: &OneInThreeInstance, a: &Assignment) -> Result<()> {
    if a.len() != problem.var_count() {
        return Err(Error::AssignmentLength { got: a.len(), want: problem.var_count() });
    }
    for p in 1..=problem.clause_count() {
        let occ = true_occurrences(problem, a, p);
        if occ != 1 {
            return Err(Error::NotOneInThree { clause: p, true_count: occ });
        }
    }
    Ok(())
}
