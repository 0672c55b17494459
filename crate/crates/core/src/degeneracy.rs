//! Smallest-last degeneracy orderings and the degree bucket queue shared with
//! the max-degree peeling used by the layer plan.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Residual degrees of the still-present vertices of a graph, bucketed by
/// degree. Both extremes are extracted with lowest-id tie-breaking.
#[derive(Debug, Clone)]
pub struct DegreeBuckets {
    degree: Vec<usize>,
    present: Vec<bool>,
    buckets: Vec<BTreeSet<usize>>,
    min_hint: usize,
    max_hint: usize,
    len: usize,
}

impl DegreeBuckets {
    /// Buckets for `G[vertices]`.
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut present = vec![false; g.n()];
        for v in vertices {
            present[v] = true;
        }
        let mut degree = vec![0; g.n()];
        let mut buckets = vec![BTreeSet::new(); g.max_degree() + 1];
        let mut len = 0;
        let mut max_hint = 0;
        for v in 0..g.n() {
            if present[v] {
                let d = g.neighbors(v).iter().filter(|&&u| present[u]).count();
                degree[v] = d;
                buckets[d].insert(v);
                max_hint = max_hint.max(d);
                len += 1;
            }
        }
        DegreeBuckets {
            degree,
            present,
            buckets,
            min_hint: 0,
            max_hint,
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.present[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// Removes and returns `(vertex, residual degree)` of minimum degree.
    pub fn pop_min(&mut self, g: &Graph) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.min_hint].is_empty() {
            self.min_hint += 1;
        }
        let v = *self.buckets[self.min_hint].first().unwrap();
        Some((v, self.remove(g, v)))
    }

    /// Removes and returns `(vertex, residual degree)` of maximum degree.
    pub fn pop_max(&mut self, g: &Graph) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.max_hint].is_empty() {
            self.max_hint -= 1;
        }
        let v = *self.buckets[self.max_hint].first().unwrap();
        Some((v, self.remove(g, v)))
    }

    /// Removes `v`, updating its neighbors; returns its degree at removal.
    pub fn remove(&mut self, g: &Graph, v: usize) -> usize {
        assert!(self.present[v], "vertex {v} already removed");
        let d = self.degree[v];
        self.buckets[d].remove(&v);
        self.present[v] = false;
        self.len -= 1;
        for &u in g.neighbors(v) {
            if self.present[u] {
                let du = self.degree[u];
                self.buckets[du].remove(&u);
                self.buckets[du - 1].insert(u);
                self.degree[u] = du - 1;
                self.min_hint = self.min_hint.min(du - 1);
            }
        }
        d
    }
}

/// A degenerate ordering: every vertex has at most `d` neighbors earlier in
/// `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    pub pos: Vec<usize>,
    pub back_degree: Vec<usize>,
    pub d: usize,
}

impl DegeneracyOrdering {
    /// Smallest-last ordering: repeatedly delete a minimum-degree vertex
    /// (lowest id on ties) and reverse the deletion sequence.
    pub fn smallest_last(g: &Graph) -> Self {
        let n = g.n();
        let mut buckets = DegreeBuckets::new(g, 0..n);
        let mut deletion = Vec::with_capacity(n);
        let mut back_degree = vec![0; n];
        let mut d = 0;
        while let Some((v, deg)) = buckets.pop_min(g) {
            back_degree[v] = deg;
            d = d.max(deg);
            deletion.push(v);
        }
        deletion.reverse();
        let mut pos = vec![0; n];
        for (i, &v) in deletion.iter().enumerate() {
            pos[v] = i;
        }
        DegeneracyOrdering {
            order: deletion,
            pos,
            back_degree,
            d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e)
    }

    #[test]
    fn degeneracy_examples() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(DegeneracyOrdering::smallest_last(&path).d, 1);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(DegeneracyOrdering::smallest_last(&c4).d, 2);
        assert_eq!(DegeneracyOrdering::smallest_last(&complete(4)).d, 3);
        assert_eq!(DegeneracyOrdering::smallest_last(&Graph::empty(5)).d, 0);
    }

    #[test]
    fn ties_break_by_lowest_id() {
        // Edgeless: deletion order 0,1,2,3 so the ordering is reversed.
        let ord = DegeneracyOrdering::smallest_last(&Graph::empty(4));
        assert_eq!(ord.order, vec![3, 2, 1, 0]);
        // Path 0-1-2: delete 0 (deg 1), then 1 (deg 1), then 2.
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let ord = DegeneracyOrdering::smallest_last(&path);
        assert_eq!(ord.order, vec![2, 1, 0]);
        assert_eq!(ord.back_degree, vec![1, 1, 0]);
    }

    #[test]
    fn pop_max_prefers_high_degree_then_low_id() {
        // Star centered at 3 plus edge 0-1.
        let g = Graph::from_edges(5, &[(3, 0), (3, 1), (3, 2), (3, 4), (0, 1)]);
        let mut b = DegreeBuckets::new(&g, 0..5);
        assert_eq!(b.pop_max(&g), Some((3, 4)));
        assert_eq!(b.pop_max(&g), Some((0, 1)));
        assert_eq!(b.pop_max(&g), Some((1, 0)));
        assert_eq!(b.len(), 2);
    }
}
