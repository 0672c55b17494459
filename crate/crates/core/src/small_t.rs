//! Coloring in degenerate order with class cap `t`, repaired by at most one
//! swap per vertex.
//!
//! For the current vertex `v`, classes holding two or more colored neighbors
//! of `v` are "blocked"; the rest are "open". If an open class is below the
//! cap, `v` goes there. Otherwise some blocked class `M2` is below the cap, and
//! a vertex `w` of an open class `M1` with at most one neighbor in `M2` is
//! moved to `M2`, freeing a slot in `M1` for `v`.

use crate::coloring::{ColoringError, PartialColoring};
use crate::degeneracy::DegeneracyOrdering;
use crate::plan::SolvePlan;
use crate::solve::SolveError;

/// Classes split by how many colored neighbors of a vertex they hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwapContext {
    /// Classes with at least two neighbors of the vertex.
    pub blocked: Vec<usize>,
    /// All other classes, ascending.
    pub open: Vec<usize>,
    pub colored_neighbors: usize,
}

impl SwapContext {
    pub fn for_vertex(state: &PartialColoring<'_>, v: usize, tally: &mut [usize]) -> Self {
        let g = state.graph();
        let mut colored_neighbors = 0;
        for &w in g.neighbors(v) {
            if let Some(c) = state.color(w) {
                tally[c] += 1;
                colored_neighbors += 1;
            }
        }
        let (blocked, open): (Vec<usize>, Vec<usize>) =
            (0..state.k()).partition(|&c| tally[c] >= 2);
        for &w in g.neighbors(v) {
            if let Some(c) = state.color(w) {
                tally[c] = 0;
            }
        }
        SwapContext {
            blocked,
            open,
            colored_neighbors,
        }
    }
}

pub fn solve_small_t(
    ordering: &DegeneracyOrdering,
    plan: &SolvePlan,
    state: &mut PartialColoring<'_>,
) -> Result<(), SolveError> {
    let t = plan.t;
    let k = plan.k;

    if plan.d == 0 {
        for (i, &v) in ordering.order.iter().enumerate() {
            state.place(v, i % k)?;
        }
        return Ok(());
    }

    let mut tally = vec![0; k];
    for &v in &ordering.order {
        let ctx = SwapContext::for_vertex(state, v, &mut tally);
        assert!(ctx.blocked.len() <= ctx.colored_neighbors / 2);

        let direct = ctx
            .open
            .iter()
            .copied()
            .filter(|&c| state.size(c) < t)
            .min_by_key(|&c| (state.size(c), c));
        if let Some(c) = direct {
            state.place(v, c)?;
        } else {
            swap_in(state, v, &ctx, t)?;
        }

        if state.checks_enabled() {
            if let Some(c) = (0..k).find(|&c| state.size(c) > t) {
                return Err(ColoringError::InvariantViolation {
                    class: c,
                    detail: format!("size {} exceeds cap {t}", state.size(c)),
                }
                .into());
            }
        }
    }
    Ok(())
}

fn swap_in(
    state: &mut PartialColoring<'_>,
    v: usize,
    ctx: &SwapContext,
    t: usize,
) -> Result<(), SolveError> {
    let no_move = |state: &PartialColoring<'_>| SolveError::NoMoveAvailable {
        vertex: v,
        class_sizes: state.sizes(),
    };
    let Some(target) = ctx.blocked.iter().copied().find(|&c| state.size(c) < t) else {
        return Err(no_move(state));
    };
    let donor = ctx.open.iter().copied().find_map(|c| {
        state
            .members(c)
            .iter()
            .copied()
            .find(|&w| !state.is_frozen(w) && state.accepts(w, target))
            .map(|w| (c, w))
    });
    let Some((from, w)) = donor else {
        return Err(no_move(state));
    };
    state.move_vertex(w, target)?;
    state.place(v, from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn run(g: &Graph, k: usize) -> (SolvePlan, Result<Vec<usize>, SolveError>) {
        let ord = DegeneracyOrdering::smallest_last(g);
        let mut plan = SolvePlan::select(g.n(), ord.d, g.max_degree(), k);
        plan.base3 = None;
        let mut state = PartialColoring::new(g, k);
        state.set_checks(true);
        let res = solve_small_t(&ord, &plan, &mut state).map(|_| state.sizes());
        (plan, res)
    }

    #[test]
    fn edgeless_round_robin() {
        let (plan, sizes) = run(&Graph::empty(7), 3);
        assert_eq!(plan.t, 3);
        assert_eq!(sizes.unwrap(), vec![3, 2, 2]);
    }

    #[test]
    fn cycle_with_two_classes() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (_, sizes) = run(&g, 2);
        assert_eq!(sizes.unwrap(), vec![2, 2]);
    }

    #[test]
    fn star_with_five_classes() {
        let edges: Vec<_> = (1..10).map(|v| (0, v)).collect();
        let g = Graph::from_edges(10, &edges);
        let (plan, sizes) = run(&g, 5);
        assert_eq!(plan.t, 2);
        assert!(sizes.unwrap().iter().all(|&s| s <= 2));
    }

    #[test]
    fn swap_path_moves_one_donor() {
        // Vertex 0 is adjacent to 1 and 2; edge 3-4 is disjoint.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (3, 4)]);
        let mut state = PartialColoring::new(&g, 2);
        state.place(1, 0).unwrap();
        state.place(2, 0).unwrap();
        state.place(3, 1).unwrap();
        // Class 0 blocks vertex 0, so the open class 1 donates vertex 3.
        let mut tally = vec![0; 2];
        let ctx = SwapContext::for_vertex(&state, 0, &mut tally);
        assert_eq!(ctx.blocked, vec![0]);
        assert_eq!(ctx.open, vec![1]);
        assert!(swap_in(&mut state, 0, &ctx, 3).is_ok());
        assert_eq!(state.color(3), Some(0));
        assert_eq!(state.color(0), Some(1));
        assert_eq!(state.sizes(), vec![3, 1]);
    }

    #[test]
    fn best_effort_failure_is_reported() {
        // K5 with k = 2 (t = 3): any 3-vertex class is a triangle.
        let mut e = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                e.push((u, v));
            }
        }
        let (plan, res) = run(&Graph::from_edges(5, &e), 2);
        assert_eq!(plan.branch, crate::plan::Branch::BestEffort);
        assert!(matches!(res, Err(SolveError::NoMoveAvailable { .. })));
    }
}
