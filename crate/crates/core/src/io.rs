//! Plain-text graph files: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and lines starting with `#` are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected two integers")))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing tokens")));
    }
    Ok(pair)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header".into()))?;
    let (n, m) = numbers(header, lineno)?;
    let edges = lines
        .map(|(i, l)| numbers(l, i))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
