//! Independent checks of a finished coloring, and a best-effort pass that
//! evens out class sizes.
//!
//! [`verify`] only uses [`Graph`] primitives, never solver bookkeeping.

use serde::Serialize;

use crate::coloring::PartialColoring;
use crate::graph::{Graph, VertexSet};
use crate::layered::witness::{switch_witnesses, WitnessLayering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub size: usize,
    pub forest: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Invalid(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub all_colored: bool,
    pub colors_in_range: bool,
    pub classes: Vec<ClassReport>,
    pub cap: usize,
    pub cap_ok: bool,
    pub spread: usize,
    pub strictly_equitable: bool,
    pub verdict: Verdict,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

pub fn verify(g: &Graph, colors: &[Option<usize>], k: usize) -> VerifyReport {
    let n = g.n();
    let mut reasons = Vec::new();

    if colors.len() != n {
        reasons.push(format!("coloring has {} entries for {n} vertices", colors.len()));
    }
    let uncolored = (0..n).filter(|&v| colors.get(v).copied().flatten().is_none()).count();
    if uncolored > 0 {
        reasons.push(format!("{uncolored} vertices uncolored"));
    }
    let out_of_range: Vec<usize> = colors.iter().flatten().copied().filter(|&c| c >= k).collect();
    if !out_of_range.is_empty() {
        reasons.push(format!("colors out of range 0..{k}: {out_of_range:?}"));
    }

    let mut sets: Vec<VertexSet> = (0..k).map(|_| VertexSet::new(n)).collect();
    for (v, c) in colors.iter().take(n).enumerate() {
        if let Some(c) = *c {
            if c < k {
                sets[c].insert(v);
            }
        }
    }
    let classes: Vec<ClassReport> = sets
        .iter()
        .map(|s| ClassReport {
            size: s.len(),
            forest: g.induces_forest(s),
        })
        .collect();
    for (c, r) in classes.iter().enumerate() {
        if !r.forest {
            reasons.push(format!("class {c} contains a cycle"));
        }
    }

    let cap = if k == 0 { 0 } else { n.div_ceil(k) };
    let max = classes.iter().map(|c| c.size).max().unwrap_or(0);
    let min = classes.iter().map(|c| c.size).min().unwrap_or(0);
    let cap_ok = k > 0 && max <= cap;
    if k == 0 {
        reasons.push("k must be positive".to_string());
    } else if !cap_ok {
        reasons.push(format!("largest class has {max} vertices, cap is {cap}"));
    }
    let spread = max - min;

    VerifyReport {
        all_colored: colors.len() == n && uncolored == 0,
        colors_in_range: out_of_range.is_empty(),
        classes,
        cap,
        cap_ok,
        spread,
        strictly_equitable: spread <= 1,
        verdict: if reasons.is_empty() {
            Verdict::Valid
        } else {
            Verdict::Invalid(reasons)
        },
    }
}

/// Shifts vertices along witness paths from largest classes toward classes
/// at least two smaller until sizes differ by at most one or no path is
/// left. Sizes only move toward each other, so a coloring over the cap may
/// come back under it. Inputs with uncolored vertices, bad colors or a
/// cyclic class are returned unchanged.
pub fn rebalance_strict(g: &Graph, colors: &[Option<usize>], k: usize) -> (Vec<Option<usize>>, VerifyReport) {
    let report = verify(g, colors, k);
    let repairable = report.all_colored && report.colors_in_range && report.classes.iter().all(|c| c.forest);
    if !repairable || report.strictly_equitable {
        return (colors.to_vec(), report);
    }
    let flat: Vec<usize> = colors.iter().map(|c| c.unwrap()).collect();
    let mut state = PartialColoring::from_colors(g, k, &flat).expect("verified coloring loads");

    loop {
        let sizes = state.sizes();
        let max = *sizes.iter().max().unwrap();
        let min = *sizes.iter().min().unwrap();
        if max - min <= 1 {
            break;
        }
        let mut roots: Vec<usize> = (0..k).filter(|&c| sizes[c] + 2 <= max).collect();
        roots.sort_by_key(|&c| (sizes[c], c));
        let (layering, head) = WitnessLayering::grow(&state, roots, |c| sizes[c] == max);
        let Some(head) = head else { break };
        let path = layering.path_from(head);
        switch_witnesses(&mut state, &layering, &path).expect("witness switch keeps forests");
    }

    let out = state.into_colors();
    let report = verify(g, &out, k);
    (out, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn some(c: &[usize]) -> Vec<Option<usize>> {
        c.iter().copied().map(Some).collect()
    }

    #[test]
    fn triangle_in_one_class_is_invalid() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let r = verify(&g, &some(&[0, 0, 0]), 1);
        assert!(!r.is_valid());
        assert!(!r.classes[0].forest);
        assert!(r.cap_ok);
    }

    #[test]
    fn four_cycle_alternating_is_valid() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let r = verify(&g, &some(&[0, 1, 0, 1]), 2);
        assert!(r.is_valid());
        assert_eq!(r.spread, 0);
        assert!(r.strictly_equitable);
    }

    #[test]
    fn cap_exceeded_is_invalid() {
        let g = Graph::empty(5);
        let r = verify(&g, &some(&[0, 0, 0, 0, 1]), 2);
        assert_eq!(r.cap, 3);
        assert!(!r.cap_ok);
        assert!(!r.is_valid());
    }

    #[test]
    fn missing_and_out_of_range_colors() {
        let g = Graph::empty(3);
        let r = verify(&g, &[Some(0), None, Some(5)], 2);
        assert!(!r.all_colored);
        assert!(!r.colors_in_range);
        assert!(!r.is_valid());
        let r = verify(&g, &some(&[0, 1]), 2);
        assert!(!r.all_colored);
    }

    #[test]
    fn rebalance_edgeless_three_one() {
        let g = Graph::empty(4);
        let input = some(&[0, 0, 0, 1]);
        assert!(!verify(&g, &input, 2).cap_ok);
        let (out, r) = rebalance_strict(&g, &input, 2);
        assert!(r.is_valid());
        assert_eq!(r.sizes(), vec![2, 2]);
        assert_eq!(out.iter().filter(|&&c| c == Some(0)).count(), 2);
    }

    #[test]
    fn rebalance_moves_along_a_path() {
        // Every vertex of class 0 sees both members of class 2, so the only
        // way to grow class 2 is class 0 -> class 1 -> class 2.
        let mut edges = Vec::new();
        for a in 0..4 {
            edges.push((a, 7));
            edges.push((a, 8));
        }
        let g = Graph::from_edges(9, &edges);
        let input = some(&[0, 0, 0, 0, 1, 1, 1, 2, 2]);
        let (out, r) = rebalance_strict(&g, &input, 3);
        assert!(r.is_valid());
        assert_eq!(r.sizes(), vec![3, 3, 3]);
        assert_eq!(out[4], Some(2));
    }

    #[test]
    fn cyclic_input_is_returned_unchanged() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let input = some(&[0, 0, 0]);
        let (out, _) = rebalance_strict(&g, &input, 2);
        assert_eq!(out, input);
    }

    #[test]
    fn rebalance_keeps_balanced_input() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let input = some(&[0, 1, 0, 1]);
        let (out, r) = rebalance_strict(&g, &input, 2);
        assert_eq!(out, input);
        assert!(r.strictly_equitable);
    }
}
