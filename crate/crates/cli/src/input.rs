use std::collections::HashMap;
use std::fs;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use interval_spectrum::{parse_edge_list, parse_graph6, validate, ConnectedGraph, EdgeColoring, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

/// Reads a path, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let g = match format {
        Format::Graph6 => {
            let Some(line) = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')) else {
                bail!("no graph6 record in input");
            };
            parse_graph6(line)?
        }
        Format::Edges => parse_edge_list(text)?,
    };
    Ok(g)
}

pub fn load_graph(path: &str, format: Format) -> Result<ConnectedGraph> {
    let g = parse_graph(&read_source(path)?, format)?;
    Ok(validate(g)?)
}

/// Parses `u v c` lines into a coloring of `g`. Every edge must be colored
/// exactly once. `t` defaults to the largest color seen.
pub fn parse_coloring(g: &Graph, text: &str, t: Option<u32>) -> Result<EdgeColoring> {
    let index: HashMap<(usize, usize), usize> =
        g.edges().iter().enumerate().map(|(e, &(u, v))| ((u.min(v), u.max(v)), e)).collect();
    let mut colors = vec![0u32; g.edge_count()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v, c] = tokens[..] else {
            bail!("coloring line {}: expected \"u v c\"", i + 1);
        };
        let num = |tok: &str| -> Result<usize> {
            tok.parse().with_context(|| format!("coloring line {}: {tok:?} is not a nonnegative integer", i + 1))
        };
        let (u, v, c) = (num(u)?, num(v)?, num(c)?);
        let Some(&e) = index.get(&(u.min(v), u.max(v))) else {
            bail!("coloring line {}: edge {u}-{v} is not in the graph", i + 1);
        };
        if c == 0 {
            bail!("coloring line {}: colors start at 1", i + 1);
        }
        if colors[e] != 0 {
            bail!("coloring line {}: edge {u}-{v} is colored twice", i + 1);
        }
        colors[e] = u32::try_from(c).context("color too large")?;
    }
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        let (u, v) = g.edge(e);
        bail!("edge {u}-{v} has no color");
    }
    let max = colors.iter().copied().max().unwrap_or(0);
    let t = t.unwrap_or(max);
    if max > t {
        bail!("color {max} exceeds t = {t}");
    }
    Ok(EdgeColoring::new(t, colors))
}
