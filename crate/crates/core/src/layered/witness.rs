//! Breadth-first layering of color classes toward deficit classes.
//!
//! Class `X` points at class `Y` when some unfrozen `x` in `X` has at most one
//! neighbor in `Y`; `x` then *witnesses* the arc and can move to `Y` without
//! creating a cycle. Layer 0 holds the deficit classes, layer `j` the classes
//! first reached at distance `j`. Switching witnesses along a path to layer
//! 0 shifts one unit of size from the path's head to its deficit end.

use serde::Serialize;

use crate::coloring::{ColoringError, PartialColoring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub class: usize,
    pub depth: usize,
    /// Class one step closer to layer 0; `None` in layer 0.
    pub parent: Option<usize>,
    /// Vertex of `class` that may move into `parent`.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WitnessLayering {
    /// Entries in discovery order.
    pub entries: Vec<WitnessEntry>,
    #[serde(skip)]
    slot: Vec<Option<usize>>,
}

impl WitnessLayering {
    /// Layering with classes of size below `cap` as layer 0.
    pub fn build(state: &PartialColoring<'_>, cap: usize) -> Self {
        Self::grow(state, deficit_classes(state, cap), |_| false).0
    }

    /// Grows the layering from `roots` (layer 0, in the given order) and
    /// stops at the first discovered class satisfying `stop`, which is
    /// returned. Discovery order is deterministic: roots first, then for each
    /// dequeued class every uncovered class in ascending id, trying its
    /// members in member order.
    pub fn grow(
        state: &PartialColoring<'_>,
        roots: Vec<usize>,
        mut stop: impl FnMut(usize) -> bool,
    ) -> (Self, Option<usize>) {
        let k = state.k();
        let mut layering = WitnessLayering {
            entries: Vec::with_capacity(k),
            slot: vec![None; k],
        };
        for c in roots {
            layering.push(WitnessEntry {
                class: c,
                depth: 0,
                parent: None,
                witness: None,
            });
            if stop(c) {
                return (layering, Some(c));
            }
        }

        let mut head = 0;
        while head < layering.entries.len() {
            let WitnessEntry { class: y, depth, .. } = layering.entries[head];
            head += 1;
            for x_class in 0..k {
                if layering.slot[x_class].is_some() {
                    continue;
                }
                let witness = state
                    .members(x_class)
                    .iter()
                    .copied()
                    .find(|&x| !state.is_frozen(x) && state.accepts(x, y));
                if let Some(x) = witness {
                    layering.push(WitnessEntry {
                        class: x_class,
                        depth: depth + 1,
                        parent: Some(y),
                        witness: Some(x),
                    });
                    if stop(x_class) {
                        return (layering, Some(x_class));
                    }
                }
            }
        }
        (layering, None)
    }

    fn push(&mut self, entry: WitnessEntry) {
        self.slot[entry.class] = Some(self.entries.len());
        self.entries.push(entry);
    }

    /// Number of layered classes.
    pub fn y(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, class: usize) -> bool {
        self.slot.get(class).is_some_and(Option::is_some)
    }

    pub fn entry(&self, class: usize) -> Option<&WitnessEntry> {
        self.slot.get(class).copied().flatten().map(|i| &self.entries[i])
    }

    /// Classes grouped by depth.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for e in &self.entries {
            if layers.len() <= e.depth {
                layers.resize(e.depth + 1, Vec::new());
            }
            layers[e.depth].push(e.class);
        }
        layers
    }

    /// Parent chain `M_j, M_{j-1}, ..., M_0` starting at `class`.
    pub fn path_from(&self, class: usize) -> Vec<usize> {
        let mut path = vec![class];
        let mut cur = self.entry(class).expect("class not layered");
        while let Some(p) = cur.parent {
            path.push(p);
            cur = self.entry(p).unwrap();
        }
        path
    }
}

/// Classes below `cap`, ascending.
pub fn deficit_classes(state: &PartialColoring<'_>, cap: usize) -> Vec<usize> {
    (0..state.k()).filter(|&c| state.size(c) < cap).collect()
}

/// Moves the witness of `path[i]` into `path[i + 1]`, starting at the
/// layer-0 end. Each parent class only loses a member before it receives
/// one, so every recorded witness still has at most one neighbor in its
/// target when its move executes.
pub fn switch_witnesses(
    state: &mut PartialColoring<'_>,
    layering: &WitnessLayering,
    path: &[usize],
) -> Result<(), ColoringError> {
    for i in (0..path.len().saturating_sub(1)).rev() {
        let entry = layering.entry(path[i]).expect("class not layered");
        assert_eq!(entry.parent, Some(path[i + 1]), "path leaves the parent chain");
        state.move_vertex(entry.witness.unwrap(), path[i + 1])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn all_deficit_is_layer_zero() {
        let g = Graph::empty(4);
        let mut s = PartialColoring::new(&g, 3);
        s.place(0, 0).unwrap();
        let l = WitnessLayering::build(&s, 5);
        assert_eq!(l.layers(), vec![vec![0, 1, 2]]);
        assert!(l.entries.iter().all(|e| e.parent.is_none()));
    }

    #[test]
    fn full_class_points_at_deficit_class() {
        // Class 0 = {0, 1} full at cap 2; class 1 = {2} deficit. Vertex 0
        // has no neighbor in class 1.
        let g = Graph::from_edges(3, &[(1, 2)]);
        let mut s = PartialColoring::new(&g, 2);
        s.place(0, 0).unwrap();
        s.place(1, 0).unwrap();
        s.place(2, 1).unwrap();
        let l = WitnessLayering::build(&s, 2);
        assert_eq!(l.layers(), vec![vec![1], vec![0]]);
        let e = l.entry(0).unwrap();
        assert_eq!((e.parent, e.witness), (Some(1), Some(0)));
    }

    #[test]
    fn frozen_vertices_never_witness() {
        let g = Graph::empty(3);
        let mut s = PartialColoring::new(&g, 2);
        s.place(0, 0).unwrap();
        s.place(1, 0).unwrap();
        s.place(2, 1).unwrap();
        s.freeze(0);
        s.freeze(1);
        let l = WitnessLayering::build(&s, 2);
        assert_eq!(l.y(), 1);
        assert!(!l.contains(0));
    }

    #[test]
    fn empty_and_single_step_switch() {
        let g = Graph::empty(3);
        let mut s = PartialColoring::new(&g, 2);
        s.place(0, 0).unwrap();
        s.place(1, 0).unwrap();
        s.place(2, 1).unwrap();
        let l = WitnessLayering::build(&s, 2);
        switch_witnesses(&mut s, &l, &[1]).unwrap();
        assert_eq!(s.sizes(), vec![2, 1]);
        let path = l.path_from(0);
        assert_eq!(path, vec![0, 1]);
        switch_witnesses(&mut s, &l, &path).unwrap();
        assert_eq!(s.sizes(), vec![1, 2]);
    }

    #[test]
    fn two_step_switch_keeps_middle_size() {
        // A = {2, 3, 4}, B = {5, 6, 7}, C = {0, 1}; every A vertex sees both
        // C vertices, so A only reaches C through B.
        let edges: Vec<_> = (2..5).flat_map(|x| [(x, 0), (x, 1)]).collect();
        let g = Graph::from_edges(8, &edges);
        let mut s = PartialColoring::new(&g, 3);
        for (v, c) in [(2, 0), (3, 0), (4, 0), (5, 1), (6, 1), (7, 1), (0, 2), (1, 2)] {
            s.place(v, c).unwrap();
        }
        let (l, hit) = WitnessLayering::grow(&s, deficit_classes(&s, 3), |c| c == 0);
        assert_eq!(hit, Some(0));
        assert_eq!(l.layers(), vec![vec![2], vec![1], vec![0]]);
        let path = l.path_from(0);
        assert_eq!(path, vec![0, 1, 2]);
        switch_witnesses(&mut s, &l, &path).unwrap();
        assert_eq!(s.sizes(), vec![2, 3, 3]);
        s.check_all().unwrap();
    }
}
