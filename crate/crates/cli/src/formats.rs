//! Text formats. Every format allows blank lines and `c ...` comment lines
//! anywhere; indices in files are 1-based.
//!
//! ```text
//! p lin2 <n> <m>          then m lines   <w> <b> <r> <i1> ... <ir>
//! p ods <n> <m> <k>       then m lines   <r> <j1> ... <jr>
//! p graph <n> <m>         then m lines   <u> <v>
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use maxlin2::bipartize::{EdgeLabel, Graph};
use maxlin2::gadgets::OddSetInstance;
use maxlin2::{Assignment, Equation, LinSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse()
        .or_else(|_| err(line, format!("{what} must be a non-negative integer, got {tok:?}")))
}

/// Parses `p <kind> ...` and returns the numeric fields.
fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    kind: &str,
    fields: &[&str],
) -> Result<(usize, Vec<u64>), ParseError> {
    let Some((ln, toks)) = lines.next() else {
        return err(0, format!("missing header `p {kind} {}`", fields.join(" ")));
    };
    if toks.len() != fields.len() + 2 || toks[0] != "p" || toks[1] != kind {
        return err(
            ln,
            format!("expected header `p {kind} {}`", fields.join(" ")),
        );
    }
    let values = toks[2..]
        .iter()
        .zip(fields)
        .map(|(t, f)| num(ln, t, f))
        .collect::<Result<_, _>>()?;
    Ok((ln, values))
}

fn check_count(found: usize, declared: u64, ln: usize) -> Result<(), ParseError> {
    if found as u64 != declared {
        return err(ln, format!("header declares {declared} records, found {found}"));
    }
    Ok(())
}

/// 1-based index in `1..=n`, converted to 0-based.
fn index(ln: usize, tok: &str, n: usize) -> Result<usize, ParseError> {
    let i: usize = num(ln, tok, "index")?;
    if i == 0 || i > n {
        return err(ln, format!("index {i} outside 1..={n}"));
    }
    Ok(i - 1)
}

pub fn parse_lin2(text: &str) -> Result<LinSystem, ParseError> {
    let mut lines = content_lines(text);
    let (hl, h) = header(&mut lines, "lin2", &["n", "m"])?;
    let n = h[0] as usize;
    let mut eqs = Vec::new();
    for (ln, toks) in lines {
        if toks.len() < 3 {
            return err(ln, "record needs `<w> <b> <r> <indices>`");
        }
        let w: u64 = num(ln, toks[0], "weight")?;
        if w == 0 {
            return err(ln, "weight must be at least 1");
        }
        let rhs = match toks[1] {
            "0" => false,
            "1" => true,
            t => return err(ln, format!("right-hand side must be 0 or 1, got {t:?}")),
        };
        let r: usize = num(ln, toks[2], "arity")?;
        if toks.len() != 3 + r {
            return err(ln, format!("arity {r} but {} indices", toks.len() - 3));
        }
        let lhs = toks[3..]
            .iter()
            .map(|t| index(ln, t, n))
            .collect::<Result<Vec<_>, _>>()?;
        for w in lhs.windows(2) {
            if w[0] == w[1] {
                return err(ln, format!("index {} repeated", w[0] + 1));
            }
            if w[0] > w[1] {
                return err(ln, "indices must be strictly ascending");
            }
        }
        eqs.push(Equation::new(lhs, rhs, w).or_else(|e| err(ln, e.to_string()))?);
    }
    check_count(eqs.len(), h[1], hl)?;
    LinSystem::new(n, eqs).or_else(|e| err(hl, e.to_string()))
}

/// The forced ledger, if nonzero, becomes a record `<w> 1 0`.
pub fn emit_lin2(system: &LinSystem, comments: &[String]) -> String {
    let forced = system.forced_falsified();
    let m = system.m() + usize::from(forced > 0);
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p lin2 {} {m}", system.n()).unwrap();
    for eq in system.equations() {
        write!(out, "{} {} {}", eq.weight(), u8::from(eq.rhs()), eq.arity()).unwrap();
        for v in eq.lhs() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    if forced > 0 {
        writeln!(out, "{forced} 1 0").unwrap();
    }
    out
}

pub fn parse_oddset(text: &str) -> Result<OddSetInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, h) = header(&mut lines, "ods", &["n", "m", "k"])?;
    let n = h[0] as usize;
    let mut sets = Vec::new();
    for (ln, toks) in lines {
        let r: usize = num(ln, toks[0], "set size")?;
        if r == 0 {
            return err(ln, "sets must be nonempty");
        }
        if toks.len() != 1 + r {
            return err(ln, format!("set size {r} but {} elements", toks.len() - 1));
        }
        let set = toks[1..]
            .iter()
            .map(|t| index(ln, t, n))
            .collect::<Result<Vec<_>, _>>()?;
        sets.push(set);
    }
    check_count(sets.len(), h[1], hl)?;
    OddSetInstance::new(n, sets, h[2]).or_else(|e| err(hl, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, h) = header(&mut lines, "graph", &["n", "m"])?;
    let n = h[0] as usize;
    let mut g = Graph::new(n);
    for (ln, toks) in lines {
        if toks.len() != 2 {
            return err(ln, "edge line needs `<u> <v>`");
        }
        let (u, v) = (index(ln, toks[0], n)?, index(ln, toks[1], n)?);
        g.add_edge(u, v, 1, EdgeLabel::None)
            .or_else(|e| err(ln, e.to_string()))?;
    }
    check_count(g.m(), h[1], hl)?;
    Ok(g)
}

/// An assignment read from either a bare line of bits or the output of
/// `solve` (a `v` line, optionally with an `s OPTIMUM <w>` claim).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentFile {
    pub assignment: Assignment,
    pub claimed_falsified: Option<u64>,
}

pub fn parse_assignment(text: &str) -> Result<AssignmentFile, ParseError> {
    let mut bits: Option<(usize, Vec<&str>)> = None;
    let mut claim = None;
    for (ln, toks) in content_lines(text) {
        match toks[0] {
            "s" => {
                if toks.get(1) == Some(&"OPTIMUM") {
                    let t = toks.get(2).copied().unwrap_or("");
                    claim = Some(num(ln, t, "claimed weight")?);
                }
            }
            "o" => {}
            "v" => bits = Some((ln, toks[1..].to_vec())),
            _ if bits.is_none() => bits = Some((ln, toks)),
            _ => return err(ln, "more than one assignment line"),
        }
    }
    let Some((ln, toks)) = bits else {
        return err(0, "no assignment line");
    };
    let values = toks
        .iter()
        .map(|t| match *t {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => err(ln, format!("assignment values must be 0 or 1, got {t:?}")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AssignmentFile {
        assignment: Assignment::new(values),
        claimed_falsified: claim,
    })
}
