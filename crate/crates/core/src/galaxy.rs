//! Galaxies: `K2`, or a spine path `x1..xn` (n >= 3) where each internal
//! spine vertex `x_i` carries `a_{i-1}` pendant leaves. These are exactly the
//! caterpillar trees with at least one edge.

use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::graph::{ConnectedGraph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalaxyError {
    #[error("leaf-count sequence must be nonempty")]
    EmptySequence,
    #[error("t must be in [{min}, {max}]")]
    PaletteOutOfRange { t: u32, min: u32, max: u32 },
    #[error("no interval {0}-coloring found along the spine")]
    NoSpineColoring(u32),
}

/// Spine form `T[A]` of a galaxy with spine length `n >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    /// `x1..xn` as graph vertices.
    pub vertices: Vec<usize>,
    /// Edge index of `x_i x_{i+1}`, `n - 1` entries.
    pub spine_edges: Vec<usize>,
    /// `A = (a_1, ..., a_{n-2})`, leaf counts of `x2..x_{n-1}`.
    pub leaf_counts: Vec<usize>,
    /// Leaves `y_{i,1}..y_{i,a}` of each internal spine vertex, by vertex id.
    pub leaves: Vec<Vec<usize>>,
    /// Edge indices matching `leaves`.
    pub leaf_edges: Vec<Vec<usize>>,
    pub edge_count: usize,
}

impl Spine {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len() + self.leaf_counts.iter().sum::<usize>()
    }

    /// Degree of the `i`-th internal spine vertex (0-based, i.e. `x_{i+2}`).
    fn internal_degree(&self, i: usize) -> u32 {
        self.leaf_counts[i] as u32 + 2
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.leaf_counts.len()).map(|i| self.internal_degree(i)).max().unwrap_or(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GalaxyDecomposition {
    K2 { vertices: (usize, usize), edge: usize },
    Spine(Spine),
}

impl GalaxyDecomposition {
    pub fn vertex_count(&self) -> usize {
        match self {
            GalaxyDecomposition::K2 { .. } => 2,
            GalaxyDecomposition::Spine(s) => s.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            GalaxyDecomposition::K2 { .. } => 1,
            GalaxyDecomposition::Spine(s) => s.edge_count,
        }
    }

    pub fn max_degree(&self) -> u32 {
        match self {
            GalaxyDecomposition::K2 { .. } => 1,
            GalaxyDecomposition::Spine(s) => s.max_degree(),
        }
    }
}

/// Why a graph is not a galaxy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotGalaxy {
    /// Edge indices of a cycle.
    Cycle(Vec<usize>),
    /// A non-leaf vertex with at least three non-leaf neighbors.
    Branching { vertex: usize, inner_neighbors: Vec<usize> },
}

pub type Recognition = Result<GalaxyDecomposition, NotGalaxy>;

fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    for x in g.bfs_order(0) {
        for &(y, e) in g.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some((x, e));
            } else if parent[x].map(|(_, pe)| pe) != Some(e) && depth[y] <= depth[x] {
                // non-tree edge: climb both ends to their common ancestor
                let (mut a, mut b) = (x, y);
                let mut left = vec![e];
                let mut right = Vec::new();
                while a != b {
                    if depth[a] >= depth[b] {
                        let (p, pe) = parent[a].expect("non-root has a parent");
                        left.push(pe);
                        a = p;
                    } else {
                        let (p, pe) = parent[b].expect("non-root has a parent");
                        right.push(pe);
                        b = p;
                    }
                }
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("graph with m >= n has a cycle")
}

/// Decides whether `g` is a galaxy.
///
/// `A` is normalized to the lexicographic minimum of itself and its reverse;
/// for palindromic `A` the spine starts at the end with the smaller inner
/// vertex id. Spine endpoints are the smallest-id pendant neighbors of the
/// ends of the non-leaf path.
pub fn recognize_galaxy(g: &ConnectedGraph) -> Recognition {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 2 && m == 1 {
        return Ok(GalaxyDecomposition::K2 { vertices: g.edge(0), edge: 0 });
    }
    if m != n - 1 {
        return Err(NotGalaxy::Cycle(find_cycle(g)));
    }

    let inner = |x: usize| g.degree(x) >= 2;
    let inner_nb = |x: usize| -> Vec<usize> {
        let mut nb: Vec<usize> = g.neighbors(x).iter().map(|&(y, _)| y).filter(|&y| inner(y)).collect();
        nb.sort_unstable();
        nb
    };
    for x in (0..n).filter(|&x| inner(x)) {
        let nb = inner_nb(x);
        if nb.len() >= 3 {
            return Err(NotGalaxy::Branching { vertex: x, inner_neighbors: nb });
        }
    }

    // Non-leaf vertices of a tree induce a subtree; with max degree 2 it is a path.
    let ends: Vec<usize> = (0..n).filter(|&x| inner(x) && inner_nb(x).len() <= 1).collect();
    let start = *ends.iter().min().expect("a tree with n >= 3 has a non-leaf vertex");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = inner_nb(cur).iter().find(|&&y| y != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    let counts: Vec<usize> = path.iter().map(|&x| g.degree(x) - 2).collect();
    let reversed: Vec<usize> = counts.iter().rev().copied().collect();
    if reversed < counts {
        path.reverse();
    }

    let pendant = |x: usize| -> Vec<(usize, usize)> {
        let mut p: Vec<(usize, usize)> =
            g.neighbors(x).iter().copied().filter(|&(y, _)| !inner(y)).collect();
        p.sort_unstable();
        p
    };
    let k = path.len();
    let mut pendants: Vec<Vec<(usize, usize)>> = path.iter().map(|&x| pendant(x)).collect();
    let first = pendants[0].remove(0);
    let last = pendants[k - 1].remove(0);

    let mut vertices = vec![first.0];
    let mut spine_edges = vec![first.1];
    vertices.extend(&path);
    for w in path.windows(2) {
        spine_edges.push(g.edge_between(w[0], w[1]).expect("consecutive path vertices are adjacent"));
    }
    vertices.push(last.0);
    spine_edges.push(last.1);

    Ok(GalaxyDecomposition::Spine(Spine {
        vertices,
        spine_edges,
        leaf_counts: path.iter().map(|&x| g.degree(x) - 2).collect(),
        leaves: pendants.iter().map(|p| p.iter().map(|&(y, _)| y).collect()).collect(),
        leaf_edges: pendants.iter().map(|p| p.iter().map(|&(_, e)| e).collect()).collect(),
        edge_count: m,
    }))
}

/// Builds `T[A]`: spine `x1..xn` as vertices `0..n`, then the leaves of
/// `x2`, `x3`, ... in order. Spine edges come first, then leaf edges grouped
/// by spine vertex.
pub fn build_galaxy(leaf_counts: &[usize]) -> Result<ConnectedGraph, GalaxyError> {
    if leaf_counts.is_empty() {
        return Err(GalaxyError::EmptySequence);
    }
    let n = leaf_counts.len() + 2;
    let total = n + leaf_counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let mut next = n;
    for (i, &a) in leaf_counts.iter().enumerate() {
        for _ in 0..a {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    let g = Graph::new(total, edges).expect("T[A] is simple");
    Ok(crate::graph::validate(g).expect("T[A] is connected"))
}

/// Color assignment for one internal spine vertex: its block start and the
/// colors of its left and right spine edges.
#[derive(Debug, Clone, Copy)]
struct Step {
    start: u32,
    left: u32,
    right: u32,
}

/// An interval `t`-coloring of the galaxy, for any `Δ <= t <= m`.
///
/// Internal spine vertex `x_i` gets the color block `[s_i, s_i + d(x_i) - 1]`,
/// containing both of its spine edges, and hands the rest of the block to its
/// leaves in increasing order. Adjacent blocks share a spine-edge color, so
/// the blocks cover one interval and the coloring is surjective iff some
/// block touches `1` and some block touches `t`. A DP over
/// `(right spine color, touched 1, touched t)` finds such a chain.
pub fn galaxy_interval_coloring(d: &GalaxyDecomposition, t: u32) -> Result<EdgeColoring, GalaxyError> {
    let s = match d {
        GalaxyDecomposition::K2 { edge, .. } => {
            if t != 1 {
                return Err(GalaxyError::PaletteOutOfRange { t, min: 1, max: 1 });
            }
            let mut c = EdgeColoring::blank(1, 1);
            c.set(*edge, 1);
            return Ok(c);
        }
        GalaxyDecomposition::Spine(s) => s,
    };
    let (lo, hi) = (s.max_degree(), s.edge_count as u32);
    if t < lo || t > hi {
        return Err(GalaxyError::PaletteOutOfRange { t, min: lo, max: hi });
    }

    let k = s.leaf_counts.len();
    let tu = t as usize;
    let idx = |c: u32, low: bool, high: bool| (c as usize) * 4 + (low as usize) * 2 + high as usize;
    let width = (tu + 1) * 4;
    // layers[i][state] = how vertex i reached `state` and from which previous state
    let mut layers: Vec<Vec<Option<(Step, usize)>>> = Vec::with_capacity(k);
    let mut frontier: Vec<bool> = vec![false; width];
    for c in 1..=t {
        frontier[idx(c, c == 1, c == t)] = true;
    }
    for i in 0..k {
        let deg = s.internal_degree(i);
        let mut layer = vec![None; width];
        for state in (0..width).filter(|&st| frontier[st]) {
            let left = (state / 4) as u32;
            let (low, high) = (state & 2 != 0, state & 1 != 0);
            let first = left.saturating_sub(deg - 1).max(1);
            let last = left.min(t + 1 - deg);
            for start in first..=last {
                let end = start + deg - 1;
                for right in (start..=end).filter(|&r| r != left) {
                    let next = idx(right, low || start == 1, high || end == t);
                    if layer[next].is_none() {
                        layer[next] = Some((Step { start, left, right }, state));
                    }
                }
            }
        }
        frontier = layer.iter().map(Option::is_some).collect();
        layers.push(layer);
    }

    let accept = (1..=t)
        .map(|c| idx(c, true, true))
        .find(|&st| frontier[st])
        .ok_or(GalaxyError::NoSpineColoring(t))?;

    let mut steps = vec![Step { start: 0, left: 0, right: 0 }; k];
    let mut state = accept;
    for i in (0..k).rev() {
        let (step, prev) = layers[i][state].expect("reachable state has a parent");
        steps[i] = step;
        state = prev;
    }

    let mut c = EdgeColoring::blank(t, s.edge_count);
    c.set(s.spine_edges[0], steps[0].left);
    for (i, step) in steps.iter().enumerate() {
        c.set(s.spine_edges[i + 1], step.right);
        let block = step.start..step.start + s.internal_degree(i);
        let fill = block.filter(|&col| col != step.left && col != step.right);
        for (&e, col) in s.leaf_edges[i].iter().zip(fill) {
            c.set(e, col);
        }
    }
    Ok(c)
}

/// The interval coloring with `t = m`: consecutive blocks chained so the
/// right spine edge of each block opens the next one, all colors distinct.
pub fn galaxy_maximal_coloring(d: &GalaxyDecomposition) -> EdgeColoring {
    let s = match d {
        GalaxyDecomposition::K2 { edge, .. } => {
            let mut c = EdgeColoring::blank(1, 1);
            c.set(*edge, 1);
            return c;
        }
        GalaxyDecomposition::Spine(s) => s,
    };
    let mut c = EdgeColoring::blank(s.edge_count as u32, s.edge_count);
    let mut left = 1;
    c.set(s.spine_edges[0], left);
    for i in 0..s.leaf_counts.len() {
        let right = left + s.internal_degree(i) - 1;
        c.set(s.spine_edges[i + 1], right);
        for (&e, col) in s.leaf_edges[i].iter().zip(left + 1..right) {
            c.set(e, col);
        }
        left = right;
    }
    c
}
