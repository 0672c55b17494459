//! Exhaustive search for small instances: does `(G, k)` admit a coloring
//! whose classes are forests within the size limits?
//!
//! Backtracking over vertices in id order. Class acyclicity is tracked with
//! one union-find over all vertices (only same-class edges are ever joined)
//! and rolled back on retreat. Classes are interchangeable, so vertex `v` may
//! only open the lowest unused class.

use thiserror::Error;

use crate::graph::Graph;
use crate::union_find::UnionFind;

/// Largest graph the oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Every class has at most `ceil(n / k)` vertices.
    CapOnly,
    /// Class sizes are `floor(n / k)` or `ceil(n / k)`.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(Vec<usize>),
    NotExist,
    BudgetExceeded,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle limited to {MAX_ORACLE_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("k must be positive")]
    ZeroClasses,
    #[error("search budget exceeded at k = {0}")]
    BudgetExceeded(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct OracleQuery<'g> {
    pub graph: &'g Graph,
    pub k: usize,
    pub mode: OracleMode,
    pub node_limit: u64,
}

impl<'g> OracleQuery<'g> {
    pub fn new(graph: &'g Graph, k: usize, mode: OracleMode) -> Self {
        OracleQuery {
            graph,
            k,
            mode,
            node_limit: 50_000_000,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    cap: usize,
    strict: Option<(usize, usize)>,
    color: Vec<usize>,
    size: Vec<usize>,
    uf: UnionFind,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    // None means the budget ran out.
    fn run(&mut self, v: usize, used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        let n = self.g.n();
        if v == n {
            return Some(match self.strict {
                Some((floor, _)) => self.size.iter().all(|&s| s >= floor),
                None => true,
            });
        }
        for c in 0..(used + 1).min(self.k) {
            if self.size[c] >= self.cap || !self.strict_room(c, n - v - 1) {
                continue;
            }
            let checkpoint = self.uf.time();
            let acyclic = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&u| u < v && self.color[u] == c)
                .all(|&u| self.uf.union(u, v));
            if acyclic {
                self.color[v] = c;
                self.size[c] += 1;
                let found = self.run(v + 1, used.max(c + 1));
                if found != Some(false) {
                    return found;
                }
                self.size[c] -= 1;
                self.color[v] = usize::MAX;
            }
            self.uf.rollback(checkpoint);
        }
        Some(false)
    }

    /// Strict-mode feasibility after adding one vertex to class `c` with
    /// `remaining` vertices still to place.
    fn strict_room(&self, c: usize, remaining: usize) -> bool {
        let Some((floor, at_ceil)) = self.strict else {
            return true;
        };
        let after = |x: usize| if x == c { self.size[x] + 1 } else { self.size[x] };
        if self.cap > floor {
            let full = (0..self.k).filter(|&x| after(x) == self.cap).count();
            if full > at_ceil {
                return false;
            }
        }
        let deficit: usize = (0..self.k).map(|x| floor.saturating_sub(after(x))).sum();
        deficit <= remaining
    }
}

pub fn oracle_solve(q: &OracleQuery<'_>) -> Result<OracleOutcome, OracleError> {
    let n = q.graph.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    if q.k == 0 {
        return Err(OracleError::ZeroClasses);
    }
    let cap = n.div_ceil(q.k);
    let strict = match q.mode {
        OracleMode::CapOnly => None,
        OracleMode::Strict => Some((n / q.k, n % q.k)),
    };
    let mut search = Search {
        g: q.graph,
        k: q.k,
        cap,
        strict,
        color: vec![usize::MAX; n],
        size: vec![0; q.k],
        uf: UnionFind::new(n),
        nodes: 0,
        limit: q.node_limit,
    };
    Ok(match search.run(0, 0) {
        Some(true) => OracleOutcome::Found(search.color),
        Some(false) => OracleOutcome::NotExist,
        None => OracleOutcome::BudgetExceeded,
    })
}

/// Smallest `k` admitting a coloring in `mode` (0 for the empty graph).
pub fn oracle_min_k(g: &Graph, mode: OracleMode, node_limit: u64) -> Result<usize, OracleError> {
    for k in 1..=g.n() {
        let q = OracleQuery {
            graph: g,
            k,
            mode,
            node_limit,
        };
        match oracle_solve(&q)? {
            OracleOutcome::Found(_) => return Ok(k),
            OracleOutcome::NotExist => {}
            OracleOutcome::BudgetExceeded => return Err(OracleError::BudgetExceeded(k)),
        }
    }
    Ok(0)
}
