/// Disjoint sets with union by size and an undo log.
///
/// No path compression, so any prefix of the union history can be rolled
/// back exactly. `find` is O(log n).
#[derive(Debug, Clone)]
pub struct UnionFind {
    // Negative entries are roots holding `-size`.
    parent: Vec<isize>,
    history: Vec<(usize, isize)>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: vec![-1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] >= 0 {
            v = self.parent[v] as usize;
        }
        v
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut x, mut y) = (self.find(a), self.find(b));
        if x == y {
            return false;
        }
        if self.parent[x] > self.parent[y] {
            std::mem::swap(&mut x, &mut y);
        }
        self.history.push((y, self.parent[y]));
        self.parent[x] += self.parent[y];
        self.parent[y] = x as isize;
        true
    }

    /// Checkpoint for [`UnionFind::rollback`].
    pub fn time(&self) -> usize {
        self.history.len()
    }

    pub fn rollback(&mut self, time: usize) {
        while self.history.len() > time {
            let (v, old) = self.history.pop().unwrap();
            let p = self.parent[v] as usize;
            self.parent[p] -= old;
            self.parent[v] = old;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rollback_restores_partition() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        let t = uf.time();
        assert!(uf.union(1, 2));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 2));
        uf.rollback(t);
        assert!(uf.same(0, 1));
        assert!(!uf.same(1, 2));
        assert!(!uf.same(3, 4));
        uf.rollback(0);
        assert!(!uf.same(0, 1));
    }
}
