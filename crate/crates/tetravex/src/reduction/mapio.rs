//! Text export of reduction maps: one role token per cell, for debugging
//! reduced boards and for feeding `pad` the construction it needs.
//!
//! ```text
//! tvxmap 1
//! dims <W> <H>
//! boundary bordered|toroidal
//! problem <n> <m>
//! <a> <b> <c>            (m clause lines)
//! roles
//! <W role tokens>        (H lines)
//! ```
//!
//! Tokens: `S`/`E` start and end of the assignment row, `A<i>.<pos>` block
//! tiles, `C<p>.<off>` clause tiles, `V<i>.L|R` vertical wires,
//! `H<p>.<s>.U|D` horizontal wires, `X<i>.<p>.<s>` crossings,
//! `J<p>.<s>.TL|TR|BL|BR` junctions, `.` filler.

use crate::error::{Error, Result};
use crate::instance::Boundary;

use super::build::build_map;
use super::{CellRole, Corner, OneInThreeInstance, ReductionMap, WireRow, WireSide};

pub fn serialize_map(map: &ReductionMap) -> String {
    let problem = map.problem();
    let mut out = String::new();
    out.push_str("tvxmap 1\n");
    out.push_str(&format!("dims {} {}\n", map.width(), map.height()));
    out.push_str(match map.boundary() {
        Boundary::Bordered => "boundary bordered\n",
        Boundary::Toroidal => "boundary toroidal\n",
    });
    out.push_str(&format!("problem {} {}\n", problem.var_count(), problem.clause_count()));
    for clause in problem.clauses() {
        out.push_str(&format!("{} {} {}\n", clause[0], clause[1], clause[2]));
    }
    out.push_str("roles\n");
    for r in 0..map.height() {
        let row: Vec<String> = (0..map.width()).map(|c| role_token(map.role(r, c))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn role_token(role: CellRole) -> String {
    match role {
        CellRole::TopStart => "S".into(),
        CellRole::TopEnd => "E".into(),
        CellRole::AssignBlock { var, pos } => format!("A{var}.{pos}"),
        CellRole::ClauseCell { clause, offset } => format!("C{clause}.{offset}"),
        CellRole::VerticalWire { var, side } => {
            format!("V{var}.{}", if side == WireSide::Left { "L" } else { "R" })
        }
        CellRole::HorizontalWire { clause, slot, row } => {
            format!("H{clause}.{slot}.{}", if row == WireRow::Upper { "U" } else { "D" })
        }
        CellRole::Crossing { var, clause, slot } => format!("X{var}.{clause}.{slot}"),
        CellRole::Junction { clause, slot, corner } => {
            let corner = match corner {
                Corner::TopLeft => "TL",
                Corner::TopRight => "TR",
                Corner::BottomLeft => "BL",
                Corner::BottomRight => "BR",
            };
            format!("J{clause}.{slot}.{corner}")
        }
        CellRole::Filler => ".".into(),
    }
}

/// Parse a map file. Role geometry is a function of the problem header, so
/// the grid is rebuilt from it and the listed tokens are checked against the
/// rebuilt roles; any disagreement is reported with its line number.
pub fn parse_map(text: &str) -> Result<ReductionMap> {
    let mut lines = text.lines().enumerate();
    let mut next = |what: &str| {
        lines
            .next()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .ok_or_else(|| Error::parse(0, format!("unexpected end of input, missing {what}")))
    };

    let (no, magic) = next("header")?;
    if magic != "tvxmap 1" {
        return Err(Error::parse(no, format!("expected `tvxmap 1`, got `{magic}`")));
    }
    let (no, dims) = next("dims line")?;
    let (width, height) = {
        let rest = dims
            .strip_prefix("dims ")
            .ok_or_else(|| Error::parse(no, "expected `dims <W> <H>`"))?;
        let mut it = rest.split_whitespace();
        match (it.next().and_then(|t| t.parse().ok()), it.next().and_then(|t| t.parse().ok()), it.next())
        {
            (Some(w), Some(h), None) => (w, h),
            _ => return Err(Error::parse(no, "expected `dims <W> <H>`")),
        }
    };
    let (no, line) = next("boundary line")?;
    let boundary = match line {
        "boundary bordered" => Boundary::Bordered,
        "boundary toroidal" => Boundary::Toroidal,
        other => return Err(Error::parse(no, format!("bad boundary line `{other}`"))),
    };
    let (no, line) = next("problem line")?;
    let (n, m) = {
        let rest = line
            .strip_prefix("problem ")
            .ok_or_else(|| Error::parse(no, "expected `problem <n> <m>`"))?;
        let mut it = rest.split_whitespace();
        match (it.next().and_then(|t| t.parse().ok()), it.next().and_then(|t| t.parse().ok()), it.next())
        {
            (Some(n), Some(m), None) => (n, m),
            _ => return Err(Error::parse(no, "expected `problem <n> <m>`")),
        }
    };

    let mut clauses: Vec<[usize; 3]> = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = next("clause line")?;
        let toks: Vec<usize> =
            line.split_whitespace().map(|t| t.parse().map_err(|_| Error::parse(no, format!("bad variable `{t}`")))).collect::<Result<_>>()?;
        if toks.len() != 3 {
            return Err(Error::parse(no, "clause needs exactly 3 variables"));
        }
        clauses.push([toks[0], toks[1], toks[2]]);
    }
    let problem = OneInThreeInstance::new(n, clauses)
        .map_err(|e| Error::parse(no, format!("bad problem: {e}")))?;

    let (no, line) = next("roles line")?;
    if line != "roles" {
        return Err(Error::parse(no, format!("expected `roles`, got `{line}`")));
    }

    let map = build_map(&problem, boundary);
    if (map.width(), map.height()) != (width, height) {
        return Err(Error::parse(
            no,
            format!(
                "dims {width}x{height} do not match the {n}-variable {m}-clause construction ({}x{})",
                map.width(),
                map.height()
            ),
        ));
    }
    for r in 0..height {
        let (no, line) = next("role row")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != width {
            return Err(Error::parse(no, format!("expected {width} role tokens, got {}", toks.len())));
        }
        for (c, tok) in toks.iter().enumerate() {
            let want = role_token(map.role(r, c));
            if *tok != want {
                return Err(Error::parse(
                    no,
                    format!("role `{tok}` at column {c} does not match the construction (`{want}`)"),
                ));
            }
        }
    }
    match lines.next() {
        None => {}
        Some((_, line)) if line.trim().is_empty() && lines.next().is_none() => {}
        Some((no, _)) => return Err(Error::parse(no + 1, "trailing content after the last row")),
    }

    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{reduce, ReduceVariant};

    #[test]
    fn round_trip() {
        let problem = OneInThreeInstance::new(2, vec![[1, 2, 2]]).unwrap();
        for variant in [ReduceVariant::Bordered, ReduceVariant::Toroidal] {
            let (_, map) = reduce(&problem, variant);
            let text = serialize_map(&map);
            assert_eq!(parse_map(&text).unwrap(), map);
        }
    }

    #[test]
    fn corrupted_roles_are_rejected() {
        let problem = OneInThreeInstance::new(1, vec![[1, 1, 1]]).unwrap();
        let (_, map) = reduce(&problem, ReduceVariant::Bordered);
        let text = serialize_map(&map).replace("J1.1.TL", "J1.1.TR");
        assert!(matches!(parse_map(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn header_sample() {
        let problem = OneInThreeInstance::new(1, vec![[1, 1, 1]]).unwrap();
        let (_, map) = reduce(&problem, ReduceVariant::Bordered);
        let text = serialize_map(&map);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("tvxmap 1"));
        assert_eq!(lines.next(), Some("dims 6 13"));
        assert_eq!(lines.next(), Some("boundary bordered"));
        assert_eq!(lines.next(), Some("problem 1 1"));
        assert_eq!(lines.next(), Some("1 1 1"));
        assert_eq!(lines.next(), Some("roles"));
        assert_eq!(lines.next(), Some("S A1.1 A1.2 A1.3 A1.4 E"));
    }
}
