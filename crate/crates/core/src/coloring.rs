//! Mutable partial coloring shared by the solvers.
//!
//! Every mutation keeps each class an induced forest by only adding a vertex
//! to a class holding at most one of its neighbors.

use thiserror::Error;

use crate::graph::Graph;

/// Environment switch enabling per-mutation invariant checks in any build.
pub const DEBUG_CHECKS_ENV: &str = "EQUITREE_DEBUG_CHECKS";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("cannot put vertex {vertex} into class {class}: {reason}")]
    PreconditionViolated {
        vertex: usize,
        class: usize,
        reason: &'static str,
    },
    #[error("vertex {vertex} is frozen")]
    FrozenVertex { vertex: usize },
    #[error("class {class} broke an invariant: {detail}")]
    InvariantViolation { class: usize, detail: String },
}

pub fn debug_checks_from_env() -> bool {
    std::env::var(DEBUG_CHECKS_ENV).is_ok_and(|v| v == "1")
}

#[derive(Debug, Clone)]
pub struct PartialColoring<'g> {
    graph: &'g Graph,
    color: Vec<Option<usize>>,
    members: Vec<Vec<usize>>,
    slot: Vec<usize>,
    frozen: Vec<bool>,
    colored: usize,
    checks: bool,
    mutations: usize,
}

impl<'g> PartialColoring<'g> {
    pub fn new(graph: &'g Graph, k: usize) -> Self {
        PartialColoring {
            graph,
            color: vec![None; graph.n()],
            members: vec![Vec::new(); k],
            slot: vec![usize::MAX; graph.n()],
            frozen: vec![false; graph.n()],
            colored: 0,
            checks: cfg!(debug_assertions) || debug_checks_from_env(),
            mutations: 0,
        }
    }

    /// Loads a complete assignment at once; fails if a class is not a forest
    /// or a color is out of range.
    pub fn from_colors(graph: &'g Graph, k: usize, colors: &[usize]) -> Result<Self, ColoringError> {
        assert_eq!(colors.len(), graph.n(), "one color per vertex");
        let mut state = Self::new(graph, k);
        for (v, &c) in colors.iter().enumerate() {
            if c >= k {
                return Err(ColoringError::PreconditionViolated {
                    vertex: v,
                    class: c,
                    reason: "class id out of range",
                });
            }
            state.attach(v, c);
        }
        state.colored = graph.n();
        state.check_all()?;
        Ok(state)
    }

    /// Turns the per-mutation forest and bookkeeping checks on or off.
    pub fn set_checks(&mut self, on: bool) {
        self.checks = on;
    }

    pub fn checks_enabled(&self) -> bool {
        self.checks
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.color[v]
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.color
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn colored_count(&self) -> usize {
        self.colored
    }

    /// Number of mutations applied so far (placements plus moves).
    pub fn mutations(&self) -> usize {
        self.mutations
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen[v]
    }

    pub fn freeze(&mut self, v: usize) {
        self.frozen[v] = true;
    }

    /// Neighbors of `u` currently colored `c`.
    pub fn neighbor_count(&self, u: usize, c: usize) -> usize {
        self.graph
            .neighbors(u)
            .iter()
            .filter(|&&w| self.color[w] == Some(c))
            .count()
    }

    /// Like [`PartialColoring::neighbor_count`] but stops once the count
    /// exceeds one.
    pub fn accepts(&self, u: usize, c: usize) -> bool {
        let mut hits = 0;
        for &w in self.graph.neighbors(u) {
            if self.color[w] == Some(c) {
                hits += 1;
                if hits > 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn place(&mut self, u: usize, c: usize) -> Result<(), ColoringError> {
        if self.color[u].is_some() {
            return Err(ColoringError::PreconditionViolated {
                vertex: u,
                class: c,
                reason: "vertex already colored",
            });
        }
        self.guard_target(u, c)?;
        self.attach(u, c);
        self.colored += 1;
        self.mutations += 1;
        if self.checks {
            self.check_class(c)?;
        }
        Ok(())
    }

    pub fn move_vertex(&mut self, x: usize, to: usize) -> Result<(), ColoringError> {
        let from = self.color[x].ok_or(ColoringError::PreconditionViolated {
            vertex: x,
            class: to,
            reason: "vertex not colored",
        })?;
        if self.frozen[x] {
            return Err(ColoringError::FrozenVertex { vertex: x });
        }
        if from == to {
            return Err(ColoringError::PreconditionViolated {
                vertex: x,
                class: to,
                reason: "vertex already in target class",
            });
        }
        self.guard_target(x, to)?;
        self.detach(x);
        self.attach(x, to);
        self.mutations += 1;
        if self.checks {
            self.check_class(from)?;
            self.check_class(to)?;
        }
        Ok(())
    }

    fn guard_target(&self, u: usize, c: usize) -> Result<(), ColoringError> {
        if c >= self.k() {
            return Err(ColoringError::PreconditionViolated {
                vertex: u,
                class: c,
                reason: "class id out of range",
            });
        }
        if !self.accepts(u, c) {
            return Err(ColoringError::PreconditionViolated {
                vertex: u,
                class: c,
                reason: "two or more neighbors in target class",
            });
        }
        Ok(())
    }

    fn attach(&mut self, u: usize, c: usize) {
        self.color[u] = Some(c);
        self.slot[u] = self.members[c].len();
        self.members[c].push(u);
    }

    fn detach(&mut self, u: usize) {
        let c = self.color[u].take().unwrap();
        let i = self.slot[u];
        self.members[c].swap_remove(i);
        if let Some(&moved) = self.members[c].get(i) {
            self.slot[moved] = i;
        }
        self.slot[u] = usize::MAX;
    }

    /// Recomputes bookkeeping and acyclicity of class `c` from scratch.
    pub fn check_class(&self, c: usize) -> Result<(), ColoringError> {
        let members = &self.members[c];
        for (i, &v) in members.iter().enumerate() {
            if self.color[v] != Some(c) || self.slot[v] != i {
                return Err(ColoringError::InvariantViolation {
                    class: c,
                    detail: format!("member {v} has inconsistent bookkeeping"),
                });
            }
        }
        // Union-find over member slots; an inner edge joining one tree twice
        // closes a cycle.
        let mut parent: Vec<usize> = (0..members.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &v) in members.iter().enumerate() {
            for &w in self.graph.neighbors(v) {
                if w > v && self.color[w] == Some(c) {
                    let (a, b) = (root(&mut parent, i), root(&mut parent, self.slot[w]));
                    if a == b {
                        return Err(ColoringError::InvariantViolation {
                            class: c,
                            detail: format!("edge {v}-{w} closes a cycle"),
                        });
                    }
                    parent[a] = b;
                }
            }
        }
        Ok(())
    }

    /// Checks every class and that sizes sum to the colored count.
    pub fn check_all(&self) -> Result<(), ColoringError> {
        for c in 0..self.k() {
            self.check_class(c)?;
        }
        let total: usize = self.members.iter().map(Vec::len).sum();
        if total != self.colored {
            return Err(ColoringError::InvariantViolation {
                class: 0,
                detail: format!("class sizes sum to {total}, colored {}", self.colored),
            });
        }
        Ok(())
    }

    pub fn into_colors(self) -> Vec<Option<usize>> {
        self.color
    }
}
