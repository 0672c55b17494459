//! Deterministic random d-degenerate graphs with a degree cap.
//!
//! Vertices arrive in order `0..n`. Vertex `i` draws a back-degree `b` (fixed
//! `d`, or uniform on `0..=d`), capped at `i`, and joins `b` distinct earlier
//! vertices whose degree is still below `max_degree`. The arrival order is
//! therefore a degenerate ordering with back-degree at most `d`.
//!
//! Randomness comes from SplitMix64 with the seed as initial state. A value
//! in `0..len` is drawn as `(next_u64() * len) >> 64` (128-bit product), so
//! any implementation of SplitMix64 reproduces the same graphs.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::degeneracy::DegeneracyOrdering;
use crate::graph::{write_edge_list, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BackDegreeDist {
    #[default]
    Fixed,
    UniformUpTo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub d: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub dist: BackDegreeDist,
    /// Percentage (0..=100) of back-edges sent to the lowest-id vertex that
    /// still has room, instead of a uniform pick. Produces hubs whose degree
    /// reaches the cap; 0 gives purely uniform attachment.
    pub hub_bias: u8,
}

impl GenSpec {
    pub fn new(n: usize, d: usize, max_degree: usize, seed: u64) -> Self {
        assert!(n >= 1, "need at least one vertex");
        assert!(max_degree >= d, "max degree must be at least d");
        GenSpec {
            n,
            d,
            max_degree,
            seed,
            dist: BackDegreeDist::Fixed,
            hub_bias: 0,
        }
    }

    pub fn with_dist(mut self, dist: BackDegreeDist) -> Self {
        self.dist = dist;
        self
    }

    pub fn with_hub_bias(mut self, percent: u8) -> Self {
        assert!(percent <= 100);
        self.hub_bias = percent;
        self
    }
}

fn below(rng: &mut SplitMix64, len: usize) -> usize {
    ((rng.next_u64() as u128 * len as u128) >> 64) as usize
}

pub fn generate(spec: &GenSpec) -> Graph {
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let mut degree = vec![0usize; spec.n];
    // Earlier vertices with room, ascending.
    let mut open: Vec<usize> = Vec::new();
    let mut edges = Vec::new();

    for i in 0..spec.n {
        let drawn = match spec.dist {
            BackDegreeDist::Fixed => spec.d,
            BackDegreeDist::UniformUpTo => below(&mut rng, spec.d + 1),
        };
        let b = drawn.min(i);

        let chosen: Vec<usize> = if open.len() <= b {
            open.clone()
        } else {
            let mut picked = vec![false; open.len()];
            let mut chosen = Vec::with_capacity(b);
            while chosen.len() < b {
                let hub = spec.hub_bias > 0 && below(&mut rng, 100) < spec.hub_bias as usize;
                let idx = if hub {
                    picked.iter().position(|&p| !p).unwrap()
                } else {
                    loop {
                        let idx = below(&mut rng, open.len());
                        if !picked[idx] {
                            break idx;
                        }
                    }
                };
                picked[idx] = true;
                chosen.push(open[idx]);
            }
            chosen
        };

        for &u in &chosen {
            edges.push((u, i));
            degree[u] += 1;
            degree[i] += 1;
        }
        if chosen.iter().any(|&u| degree[u] >= spec.max_degree) {
            open.retain(|&u| degree[u] < spec.max_degree);
        }
        if degree[i] < spec.max_degree {
            open.push(i);
        }
    }

    Graph::from_edges(spec.n, &edges)
}

/// Edge-list text with a `# gen ...` header recording realized parameters.
pub fn emit(spec: &GenSpec, g: &Graph) -> String {
    let realized_d = DegeneracyOrdering::smallest_last(g).d;
    format!(
        "# gen n={} d={} dmax={} seed={} realized_d={} realized_delta={}\n{}",
        spec.n,
        spec.d,
        spec.max_degree,
        spec.seed,
        realized_d,
        g.max_degree(),
        write_edge_list(g)
    )
}
