use std::collections::BTreeSet;

use serde::Serialize;

use crate::degeneracy::DegreeBuckets;
use crate::graph::{Graph, VertexSet};
use crate::plan::SolvePlan;
use crate::solve::SolveError;

/// One stage of the partition: `a` taken by residual max degree, `b` by the
/// neighbor-count closure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Layer {
    pub fn len(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.a.iter().chain(self.b.iter()).copied()
    }
}

/// Partition `C_1, ..., C_{m+1}` of the vertices. The last layer holds the
/// remainder in `a` and has an empty `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerPlan {
    pub layers: Vec<Layer>,
    /// `residual_max_degree[i - 1]` is the maximum degree of `G - H_i`,
    /// for `1 <= i <= m`.
    pub residual_max_degree: Vec<usize>,
    /// Neighbor count that pulls a vertex into `B_i`.
    pub b_threshold: usize,
}

impl LayerPlan {
    pub fn m(&self) -> usize {
        self.layers.len() - 1
    }

    /// Layer `i`, 1-based.
    pub fn layer(&self, i: usize) -> &Layer {
        &self.layers[i - 1]
    }

    /// `|H_i|` for `0 <= i <= m + 1`.
    pub fn prefix_len(&self, i: usize) -> usize {
        self.layers[..i].iter().map(Layer::len).sum()
    }

    /// `|B_1| + ... + |B_i|`.
    pub fn b_total(&self, i: usize) -> usize {
        self.layers[..i].iter().map(|l| l.b.len()).sum()
    }

    /// `H_i` as a vertex set.
    pub fn prefix_set(&self, n: usize, i: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.layers[..i].iter().flat_map(Layer::vertices))
    }

    /// 1-based layer index of every vertex.
    pub fn layer_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![0; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for v in layer.vertices() {
                of[v] = i + 1;
            }
        }
        of
    }
}

/// Builds `A_i`, `B_i` for `i = 1..m` and the remainder layer.
///
/// `A_i` takes the next `(ell_i - ell_{i-1}) k` vertices by maximum degree in
/// the residual graph; `B_i` then repeatedly absorbs the lowest-id outside
/// vertex with at least `(2 alpha - 4) d` neighbors in `H_{i-1} + A_i + B_i`.
pub fn build_layer_plan(g: &Graph, plan: &SolvePlan) -> Result<LayerPlan, SolveError> {
    let base3 = plan
        .base3
        .as_ref()
        .expect("layer plan needs the base-3 schedule");
    let n = g.n();
    let threshold = (2 * plan.alpha - 4) * plan.d;

    let mut inside = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut layers = Vec::with_capacity(base3.m + 1);
    let mut residual_max_degree = Vec::with_capacity(base3.m);

    let absorb = |v: usize, inside: &mut [bool], weight: &mut [usize]| {
        inside[v] = true;
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    };

    for i in 1..=base3.m {
        let needed = (base3.ell(i) - base3.ell(i - 1)) * plan.k;
        let mut buckets = DegreeBuckets::new(g, (0..n).filter(|&v| !inside[v]));
        if buckets.len() < needed {
            return Err(SolveError::NotEnoughVertices {
                layer: i,
                needed,
                available: buckets.len(),
            });
        }
        let mut layer = Layer::default();
        for _ in 0..needed {
            let (v, _) = buckets.pop_max(g).unwrap();
            absorb(v, &mut inside, &mut weight);
            layer.a.push(v);
        }

        let mut ready: BTreeSet<usize> = (0..n)
            .filter(|&v| !inside[v] && weight[v] >= threshold)
            .collect();
        while let Some(v) = ready.pop_first() {
            absorb(v, &mut inside, &mut weight);
            layer.b.push(v);
            for &u in g.neighbors(v) {
                if !inside[u] && weight[u] == threshold {
                    ready.insert(u);
                }
            }
        }

        let h = VertexSet::from_vertices(n, (0..n).filter(|&v| inside[v]));
        residual_max_degree.push(g.max_degree_excluding(&h));
        layers.push(layer);
    }

    layers.push(Layer {
        a: (0..n).filter(|&v| !inside[v]).collect(),
        b: Vec::new(),
    });

    Ok(LayerPlan {
        layers,
        residual_max_degree,
        b_threshold: threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plan::{Base3Plan, Branch};

    fn layered_plan(g: &Graph, k: usize, alpha: usize, beta: usize, d: usize) -> SolvePlan {
        let t = g.n().div_ceil(k);
        SolvePlan {
            n: g.n(),
            k,
            d,
            max_degree: g.max_degree(),
            t,
            alpha,
            beta,
            guaranteed: false,
            branch: Branch::Layered,
            base3: Some(Base3Plan::decompose(t, alpha)),
        }
    }

    #[test]
    fn layers_partition_and_prefix_identity() {
        // Wheel-like graph: hub 0 joined to a 40-cycle.
        let mut edges: Vec<_> = (1..=40).map(|v| (0, v)).collect();
        edges.extend((1..=40).map(|v| (v, v % 40 + 1)));
        let g = Graph::from_edges(41, &edges);
        // t = 14, ell = (0, 1, 4, 14), k = 3.
        let plan = layered_plan(&g, 3, 8, 1, 1);
        let lp = build_layer_plan(&g, &plan).unwrap();
        let base3 = plan.base3.as_ref().unwrap();
        assert_eq!(lp.m(), 2);
        assert_eq!(lp.layer(1).a[0], 0, "hub has maximum degree");
        let mut all: Vec<usize> = lp.layers.iter().flat_map(|l| l.vertices()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..41).collect::<Vec<_>>());
        for i in 1..=lp.m() {
            assert_eq!(lp.layer(i).a.len(), (base3.ell(i) - base3.ell(i - 1)) * 3);
            assert_eq!(lp.prefix_len(i), base3.ell(i) * 3 + lp.b_total(i));
        }
    }

    #[test]
    fn zero_threshold_closure_swallows_the_rest() {
        // d = 0 makes the B threshold 0, so B_1 absorbs every vertex left
        // after A_1. t = 15 = 120 in base 3: ell = (0, 1, 5, 15).
        let g = Graph::empty(30);
        let plan = layered_plan(&g, 2, 8, 1, 0);
        assert_eq!(plan.t, 15);
        let lp = build_layer_plan(&g, &plan);
        assert!(matches!(
            lp,
            Err(SolveError::NotEnoughVertices { layer: 2, needed: 8, available: 0 })
        ));
    }

    #[test]
    fn closure_invariant_holds() {
        let mut edges = Vec::new();
        for leaf in 2..40 {
            edges.push((0, leaf));
            edges.push((1, leaf));
        }
        let g = Graph::from_edges(60, &edges);
        // d = 2 (K_{2,38}), alpha = 8 gives threshold 24: no leaf qualifies.
        let plan = layered_plan(&g, 2, 8, 1, 2);
        let lp = build_layer_plan(&g, &plan).unwrap();
        for i in 1..=lp.m() {
            let h = lp.prefix_set(g.n(), i);
            for v in 0..g.n() {
                if !h.contains(v) {
                    assert!(g.neighbors_in(v, &h) < lp.b_threshold);
                }
            }
        }
    }
}
