//! Canonical text form of tableaux.
//!
//! ```text
//! 3          <- size
//! 1 3 A      <- one line per non-empty box, row-major, letters A B G D
//! 2 2 A
//! 3 1 B
//! 1 1 q      <- filled tableaux append their u/q boxes
//! 1 2 u
//! ```
//!
//! Several tableaux in one stream are separated by a blank line.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::tableau::{Fill, FilledTableau, Symbol, Tableau};

pub fn write_tableau(t: &Tableau) -> String {
    let mut s = String::new();
    writeln!(s, "{}", t.size()).unwrap();
    for ((i, j), sym) in t.symbols() {
        writeln!(s, "{i} {j} {}", sym.letter().unwrap()).unwrap();
    }
    s
}

pub fn write_filled(f: &FilledTableau) -> String {
    let mut s = write_tableau(f.base());
    for ((i, j), mark) in f.fills() {
        let c = match mark {
            Fill::U => 'u',
            Fill::Q => 'q',
        };
        writeln!(s, "{i} {j} {c}").unwrap();
    }
    s
}

/// Blocks joined by blank lines.
pub fn write_blocks<'a>(ts: impl IntoIterator<Item = &'a Tableau>) -> String {
    ts.into_iter().map(write_tableau).collect::<Vec<_>>().join("\n")
}

enum Entry {
    Symbol(usize, usize, Symbol),
    Fill(usize, usize, Fill),
}

type Fills = Vec<((usize, usize), Fill)>;

fn parse_block(lines: &[(usize, &str)]) -> Result<(Tableau, Fills)> {
    let (first_line, header) = lines[0];
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: first_line, msg: format!("expected size, got {header:?}") })?;
    if n == 0 {
        return Err(Error::Parse { line: first_line, msg: "size must be positive".into() });
    }
    let mut t = Tableau::empty(n);
    let mut fills = Vec::new();
    for &(line, text) in &lines[1..] {
        let err = |msg: String| Error::Parse { line, msg };
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [i, j, tag] = parts[..] else {
            return Err(err(format!("expected `i j SYMBOL`, got {text:?}")));
        };
        let i: usize = i.parse().map_err(|_| err(format!("bad row {i:?}")))?;
        let j: usize = j.parse().map_err(|_| err(format!("bad column {j:?}")))?;
        let entry = match tag {
            "u" => Entry::Fill(i, j, Fill::U),
            "q" => Entry::Fill(i, j, Fill::Q),
            other => Entry::Symbol(
                i,
                j,
                Symbol::from_letter(other).ok_or_else(|| err(format!("unknown symbol {other:?}")))?,
            ),
        };
        match entry {
            Entry::Symbol(i, j, s) => {
                if !t.contains(i, j) {
                    return Err(err(format!("box ({i},{j}) outside size {n}")));
                }
                if !t.get(i, j).is_empty() {
                    return Err(err(format!("box ({i},{j}) given twice")));
                }
                t.set(i, j, s);
            }
            Entry::Fill(i, j, f) => fills.push(((i, j), f)),
        }
    }
    Ok((t, fills))
}

fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push((k + 1, line));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Parses a single tableau block; `u`/`q` lines are rejected.
pub fn parse_tableau(text: &str) -> Result<Tableau> {
    let mut all = parse_blocks(text)?;
    if all.len() != 1 {
        return Err(Error::Parse { line: 0, msg: format!("expected one tableau, found {}", all.len()) });
    }
    Ok(all.remove(0))
}

pub fn parse_blocks(text: &str) -> Result<Vec<Tableau>> {
    blocks(text)
        .iter()
        .map(|b| {
            let (t, fills) = parse_block(b)?;
            if let Some(((i, j), _)) = fills.first() {
                return Err(Error::Parse { line: b[0].0, msg: format!("unexpected fill at ({i},{j})") });
            }
            Ok(t)
        })
        .collect()
}

pub fn parse_filled(text: &str) -> Result<FilledTableau> {
    let bs = blocks(text);
    if bs.len() != 1 {
        return Err(Error::Parse { line: 0, msg: format!("expected one tableau, found {}", bs.len()) });
    }
    let (t, fills) = parse_block(&bs[0])?;
    FilledTableau::from_parts(t, fills)
}
