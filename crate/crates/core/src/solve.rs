//! End-to-end solve: ordering, parameter selection and branch dispatch.

use thiserror::Error;

use crate::coloring::{ColoringError, PartialColoring};
use crate::degeneracy::DegeneracyOrdering;
use crate::graph::Graph;
use crate::layered::{self, DiagnosticsReport, LayerPlan};
use crate::plan::SolvePlan;
use crate::small_t;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("no direct placement or single swap for vertex {vertex} (class sizes {class_sizes:?})")]
    NoMoveAvailable {
        vertex: usize,
        class_sizes: Vec<usize>,
    },
    #[error("layer {layer} needs {needed} vertices but only {available} remain")]
    NotEnoughVertices {
        layer: usize,
        needed: usize,
        available: usize,
    },
    #[error("no class below cap {cap} accepts vertex {vertex} in the first layer")]
    NoClassAvailable { vertex: usize, cap: usize },
    #[error("no augmenting class for vertex {vertex} in layer {layer} (y = {y})")]
    NoAugmentingClass { vertex: usize, layer: usize, y: usize },
    #[error("every class is at cap {cap} while coloring vertex {vertex} in layer {layer}")]
    EmptyY0 {
        vertex: usize,
        layer: usize,
        cap: usize,
    },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl SolveError {
    /// Stable snake_case tag used in JSON and CSV output.
    pub fn kind(&self) -> &'static str {
        match self {
            SolveError::NoMoveAvailable { .. } => "no_move_available",
            SolveError::NotEnoughVertices { .. } => "not_enough_vertices",
            SolveError::NoClassAvailable { .. } => "no_class_available",
            SolveError::NoAugmentingClass { .. } => "no_augmenting_class",
            SolveError::EmptyY0 { .. } => "empty_y0",
            SolveError::Coloring(ColoringError::InvariantViolation { .. }) => "invariant_violation",
            SolveError::Coloring(_) => "precondition_violated",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Use the layered construction even when the plan picked another branch.
    pub force_layered: bool,
    /// Overrides the build/environment default for per-mutation checks.
    pub debug_checks: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub plan: SolvePlan,
    pub colors: Vec<Option<usize>>,
    pub layer_plan: Option<LayerPlan>,
    pub diagnostics: Option<DiagnosticsReport>,
    pub error: Option<SolveError>,
    pub mutations: usize,
}

impl Solution {
    pub fn succeeded(&self) -> bool {
        self.error.is_none()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.plan.k];
        for c in self.colors.iter().flatten() {
            sizes[*c] += 1;
        }
        sizes
    }
}

/// Colors `g` with `k` classes. Panics if `g` has no vertices or `k == 0`.
pub fn solve(g: &Graph, k: usize, options: SolveOptions) -> Solution {
    let ordering = DegeneracyOrdering::smallest_last(g);
    let mut plan = SolvePlan::select(g.n(), ordering.d, g.max_degree(), k);
    if options.force_layered {
        plan.force_layered();
    }

    let mut state = PartialColoring::new(g, k);
    if let Some(on) = options.debug_checks {
        state.set_checks(on);
    }

    if plan.uses_layers() {
        let run = layered::solve_layered(g, &plan, &mut state);
        let (layer_plan, error) = match run {
            Ok(lp) => (Some(lp), None),
            Err((lp, e)) => (lp, Some(e)),
        };
        let diagnostics = layer_plan
            .as_ref()
            .map(|lp| layered::run_diagnostics(g, &plan, lp, Some(state.colors())));
        Solution {
            colors: state.colors().to_vec(),
            mutations: state.mutations(),
            plan,
            layer_plan,
            diagnostics,
            error,
        }
    } else {
        let error = small_t::solve_small_t(&ordering, &plan, &mut state).err();
        Solution {
            colors: state.colors().to_vec(),
            mutations: state.mutations(),
            plan,
            layer_plan: None,
            diagnostics: None,
            error,
        }
    }
}
