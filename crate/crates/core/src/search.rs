//! Exact enumeration of proper surjective edge colorings.
//!
//! Every query runs the same depth-first search. Edges are colored in
//! line-graph BFS order and each vertex keeps a bitmask of the colors at it.
//! Per-vertex state is tracked incrementally: a vertex is *broken* once the
//! span of its colors exceeds its degree, after which it can never carry an
//! interval spectrum, so `f = n - broken` at every leaf.
//!
//! Prunings, all exact:
//! - surjectivity: more unused colors than uncolored edges;
//! - upper bound `n - broken` for maxima and interval existence;
//! - lower bound `closed non-broken + uncolored leaves` for minima;
//! - reflection `c -> t + 1 - c`: the first edge only takes colors
//!   `<= ceil(t/2)`, counts are weighted to compensate.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, AtomicUsize, Ordering};
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{chromatic_index, EdgeColoring};
use crate::graph::{ConnectedGraph, Graph};

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

/// Widest palette the bitmask search supports.
pub const MAX_PALETTE: u32 = 127;

/// Node budget shared by every search it is passed to. A node is one
/// attempt to extend a partial coloring by one edge.
#[derive(Debug)]
pub struct SearchBudget {
    max_nodes: u64,
    nodes_used: AtomicU64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, nodes_used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes_used.load(Ordering::Relaxed)
    }

    pub fn is_exhausted(&self) -> bool {
        self.nodes_used() >= self.max_nodes
    }

    fn charge(&self) -> bool {
        self.nodes_used.fetch_add(1, Ordering::Relaxed) < self.max_nodes
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_NODES)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads. With more than one, the colorings of the first
    /// `split_depth` edges are dealt out as independent subtrees.
    pub workers: usize,
    pub split_depth: usize,
    /// Restrict the first edge to the lower half of the palette.
    pub reflection: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { workers: 1, split_depth: 3, reflection: true }
    }
}

impl SearchConfig {
    pub fn with_workers(workers: usize) -> Self {
        SearchConfig { workers: workers.max(1), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    Completed,
    StoppedByVisitor,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("t = {t} is outside [{min}, {max}]")]
    PaletteOutOfRange { t: u32, min: u32, max: u32 },
    #[error("t = {0} exceeds the supported palette width {MAX_PALETTE}")]
    PaletteTooWide(u32),
    /// Search stopped early; the bounds are the best values seen so far.
    #[error("search budget exceeded (best so far: mu1 {mu1:?}, mu2 {mu2:?})")]
    BudgetExceeded { mu1: Option<usize>, mu2: Option<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuBounds {
    pub mu1: usize,
    pub mu2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuRow {
    pub t: u32,
    pub mu1: usize,
    pub mu2: usize,
}

/// `mu1(G, t)` and `mu2(G, t)` for every `t` from the chromatic index to
/// `m`, plus their minima and maxima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuTable {
    pub chi_prime: u32,
    pub m: usize,
    pub n: usize,
    pub rows: Vec<MuRow>,
    pub mu11: usize,
    pub mu12: usize,
    pub mu21: usize,
    pub mu22: usize,
}

impl MuTable {
    fn from_rows(g: &Graph, chi_prime: u32, rows: Vec<MuRow>) -> Self {
        let mu1s = || rows.iter().map(|r| r.mu1);
        let mu2s = || rows.iter().map(|r| r.mu2);
        MuTable {
            chi_prime,
            m: g.edge_count(),
            n: g.vertex_count(),
            mu11: mu1s().min().unwrap_or(0),
            mu12: mu1s().max().unwrap_or(0),
            mu21: mu2s().min().unwrap_or(0),
            mu22: mu2s().max().unwrap_or(0),
            rows,
        }
    }
}

/// Raised by [`mu_table`] when a row cannot be finished.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("row t = {t}: {source}")]
pub struct TableError {
    pub t: u32,
    /// Rows completed before the failure.
    pub rows: Vec<MuRow>,
    pub source: SearchError,
}

/// Feasible palette sizes for interval colorings within `[chi', m]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpread {
    pub chi_prime: u32,
    pub m: usize,
    pub feasible: Vec<u32>,
    /// Palette sizes the budget could not decide.
    pub indeterminate: Vec<u32>,
}

impl IntervalSpread {
    pub fn is_exact(&self) -> bool {
        self.indeterminate.is_empty()
    }

    /// Least feasible `t`, if the graph has any interval coloring.
    pub fn w(&self) -> Option<u32> {
        self.feasible.first().copied()
    }

    /// Greatest feasible `t`.
    #[allow(non_snake_case)]
    pub fn W(&self) -> Option<u32> {
        self.feasible.last().copied()
    }
}

// ---------------------------------------------------------------------------
// search internals

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Count,
    Max,
    Min,
    /// Stop at the first leaf; with `interval`, only leaves with `f = n`.
    Exists { interval: bool },
    Visit,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Budget,
}

struct Plan {
    n: usize,
    m: usize,
    t: u32,
    leaves: usize,
    reflect: bool,
    order: Vec<usize>,
    ends: Vec<(usize, usize)>,
    deg: Vec<u32>,
    /// Vertices whose last incident edge sits at this position.
    closes: Vec<Vec<usize>>,
    /// Leaves still uncolored once this position is colored.
    open_leaves_after: Vec<usize>,
}

impl Plan {
    fn new(g: &Graph, t: u32, reflect: bool) -> Self {
        let order = g.line_bfs_edge_order();
        let m = order.len();
        let ends: Vec<_> = order.iter().map(|&e| g.edge(e)).collect();
        let mut last = vec![0; g.vertex_count()];
        for (pos, &(u, v)) in ends.iter().enumerate() {
            last[u] = pos;
            last[v] = pos;
        }
        let mut closes = vec![Vec::new(); m];
        for x in 0..g.vertex_count() {
            if g.degree(x) > 0 {
                closes[last[x]].push(x);
            }
        }
        let leaves = g.leaf_count();
        let mut open = leaves;
        let open_leaves_after = closes
            .iter()
            .map(|cl| {
                open -= cl.iter().filter(|&&x| g.degree(x) == 1).count();
                open
            })
            .collect();
        Plan {
            n: g.vertex_count(),
            m,
            t,
            leaves,
            reflect,
            order,
            ends,
            deg: (0..g.vertex_count()).map(|x| g.degree(x) as u32).collect(),
            closes,
            open_leaves_after,
        }
    }

    fn palette_mask(&self) -> u128 {
        // bits 1..=t
        ((1u128 << self.t) - 1) << 1
    }
}

struct Shared {
    goal: Goal,
    best: AtomicI64,
    count: AtomicU64,
    stop: AtomicBool,
}

impl Shared {
    fn new(goal: Goal) -> Self {
        let best = match goal {
            Goal::Min => i64::MAX,
            _ => -1,
        };
        Shared {
            goal,
            best: AtomicI64::new(best),
            count: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    fn best(&self) -> Option<usize> {
        match self.best.load(Ordering::Relaxed) {
            -1 | i64::MAX => None,
            b => Some(b as usize),
        }
    }
}

type Visitor<'v> = &'v mut dyn FnMut(&EdgeColoring) -> ControlFlow<()>;

struct Walker<'a, 'v> {
    plan: &'a Plan,
    shared: &'a Shared,
    budget: &'a SearchBudget,
    visitor: Option<Visitor<'v>>,
    mask: Vec<u128>,
    broken: Vec<bool>,
    n_broken: usize,
    closed_ok: usize,
    used: u128,
    use_count: Vec<u32>,
    colors: Vec<u32>,
    coloring: EdgeColoring,
    count: u64,
}

fn span(mask: u128) -> u32 {
    (127 - mask.leading_zeros()) - mask.trailing_zeros() + 1
}

impl<'a, 'v> Walker<'a, 'v> {
    fn new(plan: &'a Plan, shared: &'a Shared, budget: &'a SearchBudget) -> Self {
        Walker {
            plan,
            shared,
            budget,
            visitor: None,
            mask: vec![0; plan.n],
            broken: vec![false; plan.n],
            n_broken: 0,
            closed_ok: 0,
            used: 0,
            use_count: vec![0; plan.t as usize + 1],
            colors: vec![0; plan.m],
            coloring: EdgeColoring::blank(plan.t, plan.m),
            count: 0,
        }
    }

    /// Colors position `pos` with `c`; the returned token undoes it.
    fn push(&mut self, pos: usize, c: u32) -> u8 {
        let plan = self.plan;
        let bit = 1u128 << c;
        let (u, v) = plan.ends[pos];
        let mut token = 0u8;
        for (k, x) in [u, v].into_iter().enumerate() {
            self.mask[x] |= bit;
            if !self.broken[x] && span(self.mask[x]) > plan.deg[x] {
                self.broken[x] = true;
                self.n_broken += 1;
                token |= 1 << k;
            }
        }
        for &x in &plan.closes[pos] {
            if !self.broken[x] {
                self.closed_ok += 1;
                token += 4;
            }
        }
        self.use_count[c as usize] += 1;
        self.used |= bit;
        self.colors[pos] = c;
        if self.visitor.is_some() {
            self.coloring.set(plan.order[pos], c);
        }
        token
    }

    fn pop(&mut self, pos: usize, c: u32, token: u8) {
        let bit = 1u128 << c;
        let (u, v) = self.plan.ends[pos];
        for (k, x) in [u, v].into_iter().enumerate() {
            self.mask[x] &= !bit;
            if token & (1 << k) != 0 {
                self.broken[x] = false;
                self.n_broken -= 1;
            }
        }
        self.closed_ok -= (token >> 2) as usize;
        self.use_count[c as usize] -= 1;
        if self.use_count[c as usize] == 0 {
            self.used &= !bit;
        }
    }

    /// Whether the subtree below a state with `colored` edges colored can be skipped.
    fn prune(&self, colored: usize) -> bool {
        let plan = self.plan;
        let missing = plan.t as usize - self.used.count_ones() as usize;
        if missing > plan.m - colored {
            return true;
        }
        match self.shared.goal {
            Goal::Max => {
                let ub = (plan.n - self.n_broken) as i64;
                ub <= self.shared.best.load(Ordering::Relaxed)
            }
            Goal::Min => {
                let open = if colored == 0 { plan.leaves } else { plan.open_leaves_after[colored - 1] };
                let lb = (self.closed_ok + open) as i64;
                lb >= self.shared.best.load(Ordering::Relaxed)
            }
            Goal::Exists { interval } => interval && self.n_broken > 0,
            Goal::Count | Goal::Visit => false,
        }
    }

    fn leaf(&mut self) -> Flow {
        let plan = self.plan;
        let shared = self.shared;
        let f = (plan.n - self.n_broken) as i64;
        match shared.goal {
            Goal::Count => {
                let half = plan.t % 2 == 1 && self.colors[0] == plan.t.div_ceil(2);
                self.count += if !plan.reflect || half { 1 } else { 2 };
                Flow::Continue
            }
            Goal::Max => {
                shared.best.fetch_max(f, Ordering::Relaxed);
                if f as usize == plan.n {
                    shared.stop.store(true, Ordering::Relaxed);
                    return Flow::Stop;
                }
                Flow::Continue
            }
            Goal::Min => {
                shared.best.fetch_min(f, Ordering::Relaxed);
                if f as usize <= plan.leaves {
                    shared.stop.store(true, Ordering::Relaxed);
                    return Flow::Stop;
                }
                Flow::Continue
            }
            Goal::Exists { .. } => {
                shared.best.store(1, Ordering::Relaxed);
                shared.stop.store(true, Ordering::Relaxed);
                Flow::Stop
            }
            Goal::Visit => {
                self.count += 1;
                let visitor = self.visitor.as_mut().expect("visit goal without visitor");
                match visitor(&self.coloring) {
                    ControlFlow::Continue(()) => Flow::Continue,
                    ControlFlow::Break(()) => Flow::Stop,
                }
            }
        }
    }

    /// Depth-first search from position `pos`. When `pos` reaches
    /// `cut < m`, the prefix is recorded in `frontier` instead of expanded.
    fn dfs(&mut self, pos: usize, cut: usize, frontier: &mut Vec<Vec<u32>>) -> Flow {
        let plan = self.plan;
        if pos == plan.m {
            return self.leaf();
        }
        if pos == cut {
            frontier.push(self.colors[..cut].to_vec());
            return Flow::Continue;
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return Flow::Stop;
        }
        let (u, v) = plan.ends[pos];
        let mut avail = plan.palette_mask() & !(self.mask[u] | self.mask[v]);
        if pos == 0 && plan.reflect {
            avail &= (1u128 << (plan.t.div_ceil(2) + 1)) - 1;
        }
        let missing = plan.t as usize - self.used.count_ones() as usize;
        if missing == plan.m - pos {
            avail &= !self.used;
        }
        while avail != 0 {
            let c = avail.trailing_zeros();
            avail &= avail - 1;
            if !self.budget.charge() {
                self.shared.stop.store(true, Ordering::Relaxed);
                return Flow::Budget;
            }
            let token = self.push(pos, c);
            let flow = if self.prune(pos + 1) { Flow::Continue } else { self.dfs(pos + 1, cut, frontier) };
            self.pop(pos, c, token);
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }
}

/// Runs the search to completion (or until stopped) and returns the merged
/// flow plus the total leaf count.
fn run(plan: &Plan, shared: &Shared, budget: &SearchBudget, config: &SearchConfig) -> Flow {
    let workers = config.workers.max(1);
    if workers == 1 || config.split_depth == 0 || plan.m <= config.split_depth {
        let mut w = Walker::new(plan, shared, budget);
        let flow = w.dfs(0, usize::MAX, &mut Vec::new());
        shared.count.fetch_add(w.count, Ordering::Relaxed);
        return flow;
    }

    let mut frontier = Vec::new();
    let mut root = Walker::new(plan, shared, budget);
    let flow = root.dfs(0, config.split_depth, &mut frontier);
    shared.count.fetch_add(root.count, Ordering::Relaxed);
    if flow != Flow::Continue {
        return flow;
    }

    let next = AtomicUsize::new(0);
    let flows: Vec<Flow> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut w = Walker::new(plan, shared, budget);
                    let mut flow = Flow::Continue;
                    while flow == Flow::Continue {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(prefix) = frontier.get(i) else { break };
                        let tokens: Vec<u8> =
                            prefix.iter().enumerate().map(|(pos, &c)| w.push(pos, c)).collect();
                        if !w.prune(prefix.len()) {
                            flow = w.dfs(prefix.len(), usize::MAX, &mut Vec::new());
                        }
                        for (pos, &c) in prefix.iter().enumerate().rev() {
                            w.pop(pos, c, tokens[pos]);
                        }
                    }
                    shared.count.fetch_add(w.count, Ordering::Relaxed);
                    flow
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    if flows.contains(&Flow::Budget) {
        Flow::Budget
    } else if flows.contains(&Flow::Stop) {
        Flow::Stop
    } else {
        Flow::Continue
    }
}

fn check_palette(g: &ConnectedGraph, t: u32) -> Result<(), SearchError> {
    let chi = chromatic_index(g);
    let m = g.edge_count() as u32;
    if t < chi || t > m {
        return Err(SearchError::PaletteOutOfRange { t, min: chi, max: m });
    }
    if t > MAX_PALETTE {
        return Err(SearchError::PaletteTooWide(t));
    }
    Ok(())
}

fn solve(g: &Graph, t: u32, goal: Goal, budget: &SearchBudget, config: &SearchConfig) -> (Flow, Shared) {
    let reflect = config.reflection && goal != Goal::Visit;
    let plan = Plan::new(g, t, reflect);
    let shared = Shared::new(goal);
    let flow = run(&plan, &shared, budget, config);
    (flow, shared)
}

/// Whether `g` has a proper coloring from the palette `1..=t`, with every
/// color used. Unbudgeted; the caller keeps `t` small.
pub(crate) fn has_proper_coloring(g: &Graph, t: u32) -> bool {
    if t as usize > g.edge_count() || t > MAX_PALETTE {
        return false;
    }
    let (_, shared) = solve(
        g,
        t,
        Goal::Exists { interval: false },
        &SearchBudget::unlimited(),
        &SearchConfig::default(),
    );
    shared.best().is_some()
}

/// Calls `visitor` once for every proper `t`-coloring of `g` that uses all
/// `t` colors. Order is deterministic: edges in line-graph BFS order, colors
/// ascending. Colorings are indexed by the graph's own edge indices.
pub fn for_each_proper_coloring<F>(
    g: &ConnectedGraph,
    t: u32,
    budget: &SearchBudget,
    mut visitor: F,
) -> Result<Enumeration, SearchError>
where
    F: FnMut(&EdgeColoring) -> ControlFlow<()>,
{
    check_palette(g, t)?;
    let plan = Plan::new(g, t, false);
    let shared = Shared::new(Goal::Visit);
    let mut w = Walker::new(&plan, &shared, budget);
    w.visitor = Some(&mut visitor);
    Ok(match w.dfs(0, usize::MAX, &mut Vec::new()) {
        Flow::Continue => Enumeration::Completed,
        Flow::Stop => Enumeration::StoppedByVisitor,
        Flow::Budget => Enumeration::BudgetExceeded,
    })
}

/// `|alpha(G, t)|`, the number of proper surjective `t`-colorings.
pub fn count_proper_colorings(
    g: &ConnectedGraph,
    t: u32,
    budget: &SearchBudget,
    config: &SearchConfig,
) -> Result<u64, SearchError> {
    check_palette(g, t)?;
    match solve(g, t, Goal::Count, budget, config) {
        (Flow::Budget, _) => Err(SearchError::BudgetExceeded { mu1: None, mu2: None }),
        (_, shared) => Ok(shared.count.load(Ordering::Relaxed)),
    }
}

fn extreme(g: &Graph, t: u32, goal: Goal, budget: &SearchBudget, config: &SearchConfig) -> Result<usize, Option<usize>> {
    let (flow, shared) = solve(g, t, goal, budget, config);
    match flow {
        Flow::Budget => Err(shared.best()),
        _ => Ok(shared.best().expect("alpha(G, t) is nonempty for chi' <= t <= m")),
    }
}

/// `mu2(G, t)`: the largest number of interval spectra over `alpha(G, t)`.
pub fn mu2(g: &ConnectedGraph, t: u32, budget: &SearchBudget, config: &SearchConfig) -> Result<usize, SearchError> {
    check_palette(g, t)?;
    extreme(g, t, Goal::Max, budget, config).map_err(|mu2| SearchError::BudgetExceeded { mu1: None, mu2 })
}

/// `mu1(G, t)`: the smallest number of interval spectra over `alpha(G, t)`.
pub fn mu1(g: &ConnectedGraph, t: u32, budget: &SearchBudget, config: &SearchConfig) -> Result<usize, SearchError> {
    check_palette(g, t)?;
    extreme(g, t, Goal::Min, budget, config).map_err(|mu1| SearchError::BudgetExceeded { mu1, mu2: None })
}

pub fn mu_bounds(g: &ConnectedGraph, t: u32, budget: &SearchBudget) -> Result<MuBounds, SearchError> {
    mu_bounds_with(g, t, budget, &SearchConfig::default())
}

pub fn mu_bounds_with(
    g: &ConnectedGraph,
    t: u32,
    budget: &SearchBudget,
    config: &SearchConfig,
) -> Result<MuBounds, SearchError> {
    check_palette(g, t)?;
    let hi = extreme(g, t, Goal::Max, budget, config)
        .map_err(|mu2| SearchError::BudgetExceeded { mu1: None, mu2 })?;
    let lo = extreme(g, t, Goal::Min, budget, config)
        .map_err(|mu1| SearchError::BudgetExceeded { mu1, mu2: Some(hi) })?;
    Ok(MuBounds { mu1: lo, mu2: hi })
}

pub fn mu_table(g: &ConnectedGraph, budget: &SearchBudget) -> Result<MuTable, TableError> {
    mu_table_with(g, budget, &SearchConfig::default())
}

/// Computes every row with one shared budget; the first row that exhausts
/// it ends the table.
pub fn mu_table_with(g: &ConnectedGraph, budget: &SearchBudget, config: &SearchConfig) -> Result<MuTable, TableError> {
    let chi = chromatic_index(g);
    let mut rows = Vec::new();
    for t in chi..=g.edge_count() as u32 {
        match mu_bounds_with(g, t, budget, config) {
            Ok(b) => rows.push(MuRow { t, mu1: b.mu1, mu2: b.mu2 }),
            Err(source) => return Err(TableError { t, rows, source }),
        }
    }
    Ok(MuTable::from_rows(g, chi, rows))
}

/// Whether some proper surjective `t`-coloring has every spectrum an interval.
pub fn exists_interval_coloring(g: &ConnectedGraph, t: u32, budget: &SearchBudget) -> Result<bool, SearchError> {
    exists_interval_coloring_with(g, t, budget, &SearchConfig::default())
}

pub fn exists_interval_coloring_with(
    g: &ConnectedGraph,
    t: u32,
    budget: &SearchBudget,
    config: &SearchConfig,
) -> Result<bool, SearchError> {
    check_palette(g, t)?;
    match solve(g, t, Goal::Exists { interval: true }, budget, config) {
        (Flow::Budget, _) => Err(SearchError::BudgetExceeded { mu1: None, mu2: None }),
        (_, shared) => Ok(shared.best().is_some()),
    }
}

/// Tries every `t` in `[chi', m]`. Budget failures land in `indeterminate`.
pub fn interval_spread(g: &ConnectedGraph, budget: &SearchBudget) -> Result<IntervalSpread, SearchError> {
    interval_spread_with(g, budget, &SearchConfig::default())
}

pub fn interval_spread_with(
    g: &ConnectedGraph,
    budget: &SearchBudget,
    config: &SearchConfig,
) -> Result<IntervalSpread, SearchError> {
    let chi = chromatic_index(g);
    let m = g.edge_count();
    let mut spread = IntervalSpread { chi_prime: chi, m, feasible: Vec::new(), indeterminate: Vec::new() };
    for t in chi..=m as u32 {
        match exists_interval_coloring_with(g, t, budget, config) {
            Ok(true) => spread.feasible.push(t),
            Ok(false) => {}
            Err(SearchError::BudgetExceeded { .. }) => spread.indeterminate.push(t),
            Err(e) => return Err(e),
        }
    }
    Ok(spread)
}
