//! Layered construction for large `t`.
//!
//! Vertices are split into layers `C_1..C_{m+1}` (see [`build_layer_plan`]).
//! The first layer is colored greedily under cap `L_1`. Each later layer `i`
//! is colored under cap `L_i` with all earlier layers frozen: a vertex that
//! fits no deficit class is placed by switching witnesses along a path of
//! the [`WitnessLayering`].

mod diagnostics;
mod layer_plan;
pub mod witness;

pub use diagnostics::{run_diagnostics, Check, DiagnosticsReport, Fraction};
pub use layer_plan::{build_layer_plan, Layer, LayerPlan};
pub use witness::{deficit_classes, switch_witnesses, WitnessEntry, WitnessLayering};

use crate::coloring::{ColoringError, PartialColoring};
use crate::degeneracy::DegeneracyOrdering;
use crate::graph::Graph;
use crate::plan::SolvePlan;
use crate::solve::SolveError;

/// Runs the whole layered construction. On failure the layer plan (when it
/// was built) is returned alongside the error for diagnostics.
pub fn solve_layered(
    g: &Graph,
    plan: &SolvePlan,
    state: &mut PartialColoring<'_>,
) -> Result<LayerPlan, (Option<LayerPlan>, SolveError)> {
    let layer_plan = build_layer_plan(g, plan).map_err(|e| (None, e))?;
    let run = (|| {
        color_layer_one(g, plan, &layer_plan, state)?;
        for i in 2..=layer_plan.m() + 1 {
            color_layer_i(g, plan, &layer_plan, i, state)?;
        }
        Ok(())
    })();
    match run {
        Ok(()) => Ok(layer_plan),
        Err(e) => Err((Some(layer_plan), e)),
    }
}

/// Vertices of `layer` in a degenerate ordering of the subgraph they induce.
fn layer_order(g: &Graph, layer: &Layer) -> Vec<usize> {
    let vertices: Vec<usize> = layer.vertices().collect();
    let sub = g.induced_subgraph(&vertices);
    DegeneracyOrdering::smallest_last(&sub)
        .order
        .into_iter()
        .map(|local| vertices[local])
        .collect()
}

/// Greedy coloring of `C_1` under cap `L_1`: each vertex joins the smallest
/// class (lowest id on ties) below the cap holding at most one neighbor.
pub fn color_layer_one(
    g: &Graph,
    plan: &SolvePlan,
    layer_plan: &LayerPlan,
    state: &mut PartialColoring<'_>,
) -> Result<(), SolveError> {
    let cap = plan.base3.as_ref().unwrap().cap(1);
    let layer = layer_plan.layer(1);
    for u in layer_order(g, layer) {
        let target = (0..state.k())
            .filter(|&c| state.size(c) < cap && state.accepts(u, c))
            .min_by_key(|&c| (state.size(c), c))
            .ok_or(SolveError::NoClassAvailable { vertex: u, cap })?;
        state.place(u, target)?;
    }
    for v in layer.vertices() {
        state.freeze(v);
    }
    Ok(())
}

/// Colors `C_i` (`2 <= i <= m + 1`) under cap `L_i` without recoloring any
/// vertex of `H_{i-1}`, then freezes `C_i`.
pub fn color_layer_i(
    g: &Graph,
    plan: &SolvePlan,
    layer_plan: &LayerPlan,
    i: usize,
    state: &mut PartialColoring<'_>,
) -> Result<(), SolveError> {
    let cap = plan.base3.as_ref().unwrap().cap(i);
    let layer = layer_plan.layer(i);
    for u in layer_order(g, layer) {
        place_with_switching(state, u, i, cap)?;
    }
    for v in layer.vertices() {
        state.freeze(v);
    }
    Ok(())
}

/// Places `u` into the first layered class (in discovery order) holding at
/// most one of its neighbors, after switching witnesses along that class's
/// path to layer 0.
pub fn place_with_switching(
    state: &mut PartialColoring<'_>,
    u: usize,
    layer: usize,
    cap: usize,
) -> Result<(), SolveError> {
    let roots = deficit_classes(state, cap);
    if roots.is_empty() {
        return Err(SolveError::EmptyY0 {
            vertex: u,
            layer,
            cap,
        });
    }
    let (layering, hit) = WitnessLayering::grow(state, roots, |c| state.accepts(u, c));
    let Some(target) = hit else {
        return Err(SolveError::NoAugmentingClass {
            vertex: u,
            layer,
            y: layering.y(),
        });
    };
    let path = layering.path_from(target);
    switch_witnesses(state, &layering, &path)?;
    state.place(u, target)?;

    if state.checks_enabled() {
        let root = *path.last().unwrap();
        if state.size(root) > cap {
            return Err(ColoringError::InvariantViolation {
                class: root,
                detail: format!("size {} exceeds cap {cap}", state.size(root)),
            }
            .into());
        }
    }
    Ok(())
}
