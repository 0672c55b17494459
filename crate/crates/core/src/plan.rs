//! Scalar planning: the class cap `t`, the `(alpha, beta)` pair, the branch
//! choice and the base-3 layer schedule with its per-layer caps.
//!
//! Everything here is exact integer arithmetic.

use serde::Serialize;

/// The admissible `(alpha, beta)` pairs, ascending in `alpha`.
pub const THEOREM_TABLE: [(usize, usize); 12] = [
    (8, 56),
    (9, 26),
    (10, 18),
    (11, 15),
    (12, 13),
    (13, 12),
    (14, 11),
    (15, 10),
    (17, 9),
    (20, 8),
    (27, 7),
    (52, 6),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    SmallT,
    Layered,
    BestEffort,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::SmallT => "small_t",
            Branch::Layered => "layered",
            Branch::BestEffort => "best_effort",
        }
    }
}

pub fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Smallest integer `t` with `t >= (2 alpha - 1) beta / alpha`.
pub fn layered_threshold(alpha: usize, beta: usize) -> usize {
    div_ceil((2 * alpha - 1) * beta, alpha)
}

/// Base-3 schedule of `t`: digits `omega_1..omega_{m+1}` (most significant
/// first), prefixes `ell_0..ell_{m+1}` and caps `L_1..L_{m+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Base3Plan {
    pub t: usize,
    pub alpha: usize,
    pub m: usize,
    pub omega: Vec<usize>,
    pub ell: Vec<usize>,
    pub caps: Vec<usize>,
}

impl Base3Plan {
    pub fn decompose(t: usize, alpha: usize) -> Self {
        assert!(t >= 1, "t must be positive");
        assert!(alpha >= 8, "alpha must be at least 8");
        let mut omega = Vec::new();
        let mut rest = t;
        while rest > 0 {
            omega.push(rest % 3);
            rest /= 3;
        }
        omega.reverse();
        let m = omega.len() - 1;

        let mut ell = Vec::with_capacity(m + 2);
        ell.push(0);
        for &w in &omega {
            ell.push(3 * ell.last().unwrap() + w);
        }

        let mut caps: Vec<usize> = (1..=m)
            .map(|i| div_ceil((2 * alpha - 3) * ell[i], 2 * alpha - 5))
            .collect();
        caps.push(t);

        Base3Plan {
            t,
            alpha,
            m,
            omega,
            ell,
            caps,
        }
    }

    /// `ell_i` for `0 <= i <= m + 1`.
    pub fn ell(&self, i: usize) -> usize {
        self.ell[i]
    }

    /// Cap `L_i` for `1 <= i <= m + 1`.
    pub fn cap(&self, i: usize) -> usize {
        self.caps[i - 1]
    }

    /// Number of layers, `m + 1`.
    pub fn layers(&self) -> usize {
        self.m + 1
    }

    /// `2 L_{i-1} <= L_i` for every `2 <= i <= m + 1`.
    pub fn caps_halve(&self) -> bool {
        (2..=self.m + 1).all(|i| 2 * self.cap(i - 1) <= self.cap(i))
    }
}

/// All scalars a solve needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolvePlan {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub max_degree: usize,
    pub t: usize,
    pub alpha: usize,
    pub beta: usize,
    /// False when `(alpha, beta)` are the best-effort substitutes.
    pub guaranteed: bool,
    pub branch: Branch,
    pub base3: Option<Base3Plan>,
}

impl SolvePlan {
    /// Picks the first table pair with `k >= alpha d` and `n >= beta Delta`,
    /// then the branch: small-t when `alpha t <= (2 alpha - 1) beta`.
    pub fn select(n: usize, d: usize, max_degree: usize, k: usize) -> Self {
        assert!(n >= 1 && k >= 1, "need n >= 1 and k >= 1");
        let t = div_ceil(n, k);
        let feasible = THEOREM_TABLE
            .iter()
            .copied()
            .find(|&(alpha, beta)| k >= alpha * d && n >= beta * max_degree);

        let (alpha, beta, guaranteed, branch) = match feasible {
            Some((alpha, beta)) => {
                let branch = if d == 0 || alpha * t <= (2 * alpha - 1) * beta {
                    Branch::SmallT
                } else {
                    Branch::Layered
                };
                (alpha, beta, true, branch)
            }
            None => (
                8.max(k / d.max(1)),
                n / max_degree.max(1),
                false,
                Branch::BestEffort,
            ),
        };

        let base3 = (branch == Branch::Layered).then(|| Base3Plan::decompose(t, alpha));
        SolvePlan {
            n,
            k,
            d,
            max_degree,
            t,
            alpha,
            beta,
            guaranteed,
            branch,
            base3,
        }
    }

    /// Makes the layered schedule available regardless of the branch.
    pub fn force_layered(&mut self) {
        if self.base3.is_none() {
            self.base3 = Some(Base3Plan::decompose(self.t, self.alpha));
        }
    }

    pub fn uses_layers(&self) -> bool {
        self.base3.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_monotone() {
        for w in THEOREM_TABLE.windows(2) {
            assert!(w[0].0 < w[1].0 && w[0].1 > w[1].1);
        }
    }

    #[test]
    fn select_examples() {
        let p = SolvePlan::select(2000, 1, 100, 52);
        assert_eq!((p.alpha, p.beta, p.t, p.branch), (10, 18, 39, Branch::Layered));
        assert!(p.guaranteed);

        let p = SolvePlan::select(600, 2, 20, 104);
        assert_eq!((p.alpha, p.beta, p.t, p.branch), (9, 26, 6, Branch::SmallT));
        assert!(p.base3.is_none());

        let p = SolvePlan::select(50, 3, 30, 10);
        assert_eq!(p.branch, Branch::BestEffort);
        assert!(!p.guaranteed);
        assert_eq!((p.alpha, p.beta), (8, 1));
    }

    #[test]
    fn boundary_takes_small_t() {
        // (52, 6): 52 t <= 103 * 6 = 618 holds up to t = 11.
        let p = SolvePlan::select(52 * 11, 1, 1, 52);
        assert_eq!((p.alpha, p.t), (8, 11));
        let p = SolvePlan::select(52 * 11, 1, 95, 52);
        assert_eq!((p.alpha, p.beta, p.branch), (52, 6, Branch::SmallT));
        let p = SolvePlan::select(52 * 12, 1, 104, 52);
        assert_eq!((p.alpha, p.beta, p.branch), (52, 6, Branch::Layered));
    }

    #[test]
    fn zero_degeneracy_is_small_t() {
        let p = SolvePlan::select(1000, 0, 0, 3);
        assert_eq!(p.branch, Branch::SmallT);
    }

    #[test]
    fn base3_examples() {
        let b = Base3Plan::decompose(14, 52);
        assert_eq!(b.m, 2);
        assert_eq!(b.omega, vec![1, 1, 2]);
        assert_eq!(b.ell, vec![0, 1, 4, 14]);
        assert_eq!(b.caps, vec![2, 5, 14]);

        let b = Base3Plan::decompose(1, 8);
        assert_eq!((b.m, b.omega.clone(), b.ell.clone(), b.caps.clone()), (0, vec![1], vec![0, 1], vec![1]));

        let b = Base3Plan::decompose(27, 10);
        assert_eq!(b.m, 3);
        assert_eq!(b.omega, vec![1, 0, 0, 0]);
        assert_eq!(b.ell, vec![0, 1, 3, 9, 27]);
    }

    #[test]
    fn threshold_values() {
        assert_eq!(layered_threshold(10, 18), 35);
        assert_eq!(layered_threshold(52, 6), 12);
        assert_eq!(layered_threshold(8, 56), 105);
    }
}
