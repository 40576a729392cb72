//! Edge colorings, vertex spectra and the interval count `f`.

use std::fmt;

use thiserror::Error;

use crate::graph::{ConnectedGraph, Graph};
use crate::search;

/// Placeholder for an edge that has not been assigned a color yet.
pub const UNCOLORED: u32 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {0} is uncolored")]
    Uncolored(usize),
    #[error("edge {edge} has color {color} outside 1..={t}")]
    OutOfPalette { edge: usize, color: u32, t: u32 },
    #[error("edges {0} and {1} share vertex {2} and color {3}")]
    Improper(usize, usize, usize, u32),
    #[error("coloring does not use every color in 1..={0}")]
    NotSurjective(u32),
}

/// An assignment of colors `1..=t` to edges, indexed by edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(t: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { t, colors }
    }

    /// A coloring of `m` edges with every entry [`UNCOLORED`].
    pub fn blank(t: u32, m: usize) -> Self {
        EdgeColoring { t, colors: vec![UNCOLORED; m] }
    }

    pub fn palette(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn set(&mut self, e: usize, c: u32) {
        self.colors[e] = c;
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }

    /// `c -> t + 1 - c` on every edge.
    pub fn reflected(&self) -> Self {
        let t = self.t;
        EdgeColoring { t, colors: self.colors.iter().map(|&c| t + 1 - c).collect() }
    }

    fn check_complete(&self) -> Result<(), ColoringError> {
        for (e, &c) in self.colors.iter().enumerate() {
            if c == UNCOLORED {
                return Err(ColoringError::Uncolored(e));
            }
            if c > self.t {
                return Err(ColoringError::OutOfPalette { edge: e, color: c, t: self.t });
            }
        }
        Ok(())
    }

    fn check_against(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::LengthMismatch {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        self.check_complete()
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(t={}, {:?})", self.t, self.colors)
    }
}

/// First pair of same-colored edges at a common vertex, as
/// `(vertex, edge, edge, color)`.
pub fn find_clash(g: &Graph, c: &EdgeColoring) -> Result<Option<(usize, usize, usize, u32)>, ColoringError> {
    c.check_against(g)?;
    let mut owner = vec![usize::MAX; c.t as usize + 1];
    for x in 0..g.vertex_count() {
        let nb = g.neighbors(x);
        for &(_, e) in nb {
            let col = c.color(e) as usize;
            if owner[col] != usize::MAX {
                return Ok(Some((x, owner[col], e, col as u32)));
            }
            owner[col] = e;
        }
        for &(_, e) in nb {
            owner[c.color(e) as usize] = usize::MAX;
        }
    }
    Ok(None)
}

/// True iff no two edges sharing a vertex have the same color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    Ok(find_clash(g, c)?.is_none())
}

/// True iff every color `1..=t` appears on some edge.
pub fn uses_all_colors(c: &EdgeColoring) -> Result<bool, ColoringError> {
    c.check_complete()?;
    let mut used = vec![false; c.t as usize + 1];
    for &col in &c.colors {
        used[col as usize] = true;
    }
    Ok(used[1..].iter().all(|&u| u))
}

/// The spectrum of one vertex under a proper coloring, reduced to
/// `(size, min, max)`. Properness makes the interval test `max - min + 1 == size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub size: usize,
    pub min: u32,
    pub max: u32,
    pub is_interval: bool,
}

pub type SpectrumSummary = Vec<SpectrumEntry>;

fn spectrum_unchecked(g: &Graph, c: &EdgeColoring, x: usize) -> Result<SpectrumEntry, ColoringError> {
    let nb = g.neighbors(x);
    let mut min = u32::MAX;
    let mut max = 0;
    for (i, &(_, e)) in nb.iter().enumerate() {
        let col = c.color(e);
        if let Some(&(_, f)) = nb[..i].iter().find(|&&(_, f)| c.color(f) == col) {
            return Err(ColoringError::Improper(f, e, x, col));
        }
        min = min.min(col);
        max = max.max(col);
    }
    let size = nb.len();
    let is_interval = size > 0 && (max - min + 1) as usize == size;
    Ok(SpectrumEntry { size, min, max, is_interval })
}

/// Spectrum of vertex `x`. A repeated color at `x` is a contract violation.
pub fn vertex_spectrum(g: &Graph, c: &EdgeColoring, x: usize) -> Result<SpectrumEntry, ColoringError> {
    c.check_against(g)?;
    spectrum_unchecked(g, c, x)
}

pub fn spectrum_summary(g: &Graph, c: &EdgeColoring) -> Result<SpectrumSummary, ColoringError> {
    c.check_against(g)?;
    (0..g.vertex_count()).map(|x| spectrum_unchecked(g, c, x)).collect()
}

/// Number of vertices whose spectrum is an interval. Defined only for
/// complete, proper colorings that use every color.
pub fn f_value(g: &Graph, c: &EdgeColoring) -> Result<usize, ColoringError> {
    let summary = spectrum_summary(g, c)?;
    if !uses_all_colors(c)? {
        return Err(ColoringError::NotSurjective(c.t));
    }
    Ok(summary.iter().filter(|s| s.is_interval).count())
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        for x in g.bfs_order(root) {
            for &(y, _) in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Least palette admitting a proper edge coloring; always Δ or Δ + 1.
pub fn chromatic_index(g: &ConnectedGraph) -> u32 {
    let delta = g.max_degree() as u32;
    // König: bipartite graphs are class one.
    if is_bipartite(g) || search::has_proper_coloring(g, delta) {
        delta
    } else {
        delta + 1
    }
}
