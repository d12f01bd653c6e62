//! Congruence relations on a two-operation structure: pair-generated
//! closure by translation fixpoint, and congruence-simplicity by scanning
//! all pair closures instead of enumerating every partition.

use crate::structure::Structure;

/// A congruence as a partition: `class_of[x]` is a canonical class id
/// (the least member of the class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence { class_of: (0..n).collect() }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_count(&self) -> usize {
        let mut ids: Vec<usize> = self.class_of.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    pub fn is_identity(&self) -> bool {
        self.class_of.iter().enumerate().all(|(i, &c)| i == c)
    }

    pub fn is_full(&self) -> bool {
        self.class_count() == 1
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let n = self.class_of.len();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for id in 0..n {
            let members: Vec<usize> =
                (0..n).filter(|&x| self.class_of[x] == id).collect();
            if !members.is_empty() {
                out.push(members);
            }
        }
        out
    }

    /// Compatibility with both operations on both sides.
    pub fn is_congruence(&self, s: &Structure) -> bool {
        let n = s.n();
        for a in 0..n {
            for b in 0..n {
                if !self.same(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !self.same(s.add(c, a), s.add(c, b))
                        || !self.same(s.add(a, c), s.add(b, c))
                        || !self.same(s.mul(c, a), s.mul(c, b))
                        || !self.same(s.mul(a, c), s.mul(b, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Smallest congruence identifying a and b: union-find fixpoint over the
/// four translation families c+·, ·+c, c·, ·c.
pub fn congruence_closure(s: &Structure, a: usize, b: usize) -> Congruence {
    let n = s.n();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    if uf.union(a, b) {
        work.push((a, b));
    }
    while let Some((x, y)) = work.pop() {
        for c in 0..n {
            for (u, v) in [
                (s.add(c, x), s.add(c, y)),
                (s.add(x, c), s.add(y, c)),
                (s.mul(c, x), s.mul(c, y)),
                (s.mul(x, c), s.mul(y, c)),
            ] {
                if uf.union(u, v) {
                    work.push((u, v));
                }
            }
        }
    }
    let class_of: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Congruence { class_of }
}

/// Congruence-simplicity: every pair-generated congruence is full. The
/// witness is the first pair yielding a proper congruence.
pub fn congruence_simplicity_witness(s: &Structure) -> Option<(usize, usize)> {
    let n = s.n();
    if n <= 1 {
        return None;
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if !congruence_closure(s, a, b).is_full() {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_congruence_simple(s: &Structure) -> bool {
    congruence_simplicity_witness(s).is_none()
}
