//! Substructure machinery: closed-subset enumeration, ideals, maximal
//! subgroups of a multiplicative semigroup, and S-semigroup detection.

use std::collections::BTreeSet;

use crate::structure::Structure;
use crate::table::FiniteMagma;

/// Result of a subset enumeration; `complete` is false when a cap cut the
/// search short, in which case the subsets found are still valid.
#[derive(Debug, Clone)]
pub struct SubsetSearch {
    pub subsets: Vec<Vec<usize>>,
    pub complete: bool,
}

/// All subsemirings: subsets closed under both operations that contain an
/// additive identity for themselves. Exhaustive over the 2^n subsets for
/// n ≤ 16; generator-closure enumeration with an explicit incomplete marker
/// beyond that.
pub fn subsemirings(s: &Structure, cap: usize) -> SubsetSearch {
    let n = s.n();
    if n <= 16 {
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if is_closed(s, &subset) && local_additive_identity(s, &subset).is_some() {
                out.push(subset);
                if out.len() >= cap {
                    return SubsetSearch { subsets: out, complete: false };
                }
            }
        }
        SubsetSearch { subsets: out, complete: true }
    } else {
        // closure of growing generator sets, deduplicated
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = (0..n).map(|i| closure(s, &[i])).collect();
        while let Some(sub) = queue.pop() {
            if seen.len() >= cap {
                let subsets = seen
                    .into_iter()
                    .filter(|sub| local_additive_identity(s, sub).is_some())
                    .collect();
                return SubsetSearch { subsets, complete: false };
            }
            if !seen.insert(sub.clone()) {
                continue;
            }
            for x in 0..n {
                if !sub.contains(&x) {
                    let mut gens = sub.clone();
                    gens.push(x);
                    queue.push(closure(s, &gens));
                }
            }
        }
        let subsets = seen
            .into_iter()
            .filter(|sub| local_additive_identity(s, sub).is_some())
            .collect();
        SubsetSearch { subsets, complete: false }
    }
}

pub fn is_closed(s: &Structure, subset: &[usize]) -> bool {
    subset.iter().all(|&a| {
        subset
            .iter()
            .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
    })
}

/// The element of the subset acting as additive identity on the subset.
pub fn local_additive_identity(s: &Structure, subset: &[usize]) -> Option<usize> {
    subset
        .iter()
        .copied()
        .find(|&z| subset.iter().all(|&p| s.add(z, p) == p))
}

/// The element of the subset acting as two-sided multiplicative identity on
/// the subset.
pub fn local_multiplicative_identity(s: &Structure, subset: &[usize]) -> Option<usize> {
    subset
        .iter()
        .copied()
        .find(|&u| subset.iter().all(|&p| s.mul(u, p) == p && s.mul(p, u) == p))
}

/// Closure of a generator set under both operations.
pub fn closure(s: &Structure, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert(s.add(a, b));
                next.insert(s.mul(a, b));
            }
        }
        if next.len() == set.len() {
            return set.into_iter().collect();
        }
        set = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Ideal test: the subset is a subsemiring and absorbs multiplication from
/// the requested side(s).
pub fn is_ideal(s: &Structure, subset: &[usize], side: Side) -> bool {
    if subset.is_empty() || !is_closed(s, subset) || local_additive_identity(s, subset).is_none()
    {
        return false;
    }
    let absorb_right = || {
        subset
            .iter()
            .all(|&i| (0..s.n()).all(|x| subset.contains(&s.mul(i, x))))
    };
    let absorb_left = || {
        subset
            .iter()
            .all(|&i| (0..s.n()).all(|x| subset.contains(&s.mul(x, i))))
    };
    match side {
        Side::Right => absorb_right(),
        Side::Left => absorb_left(),
        Side::TwoSided => absorb_right() && absorb_left(),
    }
}

/// Is the subset a group under the magma operation? Requires closure, an
/// identity within the subset, and inverses relative to it.
pub fn is_subgroup(m: &FiniteMagma, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    for &a in subset {
        for &b in subset {
            if !subset.contains(&m.op(a, b)) {
                return false;
            }
        }
    }
    let Some(e) = subset
        .iter()
        .copied()
        .find(|&e| subset.iter().all(|&a| m.op(e, a) == a && m.op(a, e) == a))
    else {
        return false;
    };
    subset
        .iter()
        .all(|&a| subset.iter().any(|&b| m.op(a, b) == e && m.op(b, a) == e))
}

/// All subgroups of an associative magma via idempotent-anchored maximal
/// subgroups plus closure-generated subgroups of those.
pub fn subgroups(m: &FiniteMagma) -> Vec<Vec<usize>> {
    let n = m.n();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in (0..n).filter(|&e| m.op(e, e) == e) {
        let maximal = maximal_subgroup_at(m, e);
        // subgroups of the maximal one by generator closure
        let mut queue: Vec<Vec<usize>> = vec![vec![e]];
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        while let Some(sub) = queue.pop() {
            if !seen.insert(sub.clone()) {
                continue;
            }
            found.insert(sub.clone());
            for &x in &maximal {
                if !sub.contains(&x) {
                    let mut gens = sub.clone();
                    gens.push(x);
                    let cl = group_closure(m, &gens, e);
                    if let Some(cl) = cl {
                        queue.push(cl);
                    }
                }
            }
        }
    }
    found.into_iter().filter(|h| is_subgroup(m, h)).collect()
}

/// The maximal subgroup anchored at idempotent e: elements x of the local
/// monoid eSe (ex = xe = x) invertible relative to e.
fn maximal_subgroup_at(m: &FiniteMagma, e: usize) -> Vec<usize> {
    let n = m.n();
    let local: Vec<usize> = (0..n)
        .filter(|&x| m.op(e, x) == x && m.op(x, e) == x)
        .collect();
    local
        .iter()
        .copied()
        .filter(|&x| {
            local
                .iter()
                .any(|&y| m.op(x, y) == e && m.op(y, x) == e)
        })
        .collect()
}

fn group_closure(m: &FiniteMagma, gens: &[usize], e: usize) -> Option<Vec<usize>> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(e);
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert(m.op(a, b));
            }
        }
        if next.len() == set.len() {
            let v: Vec<usize> = set.into_iter().collect();
            return is_subgroup(m, &v).then_some(v);
        }
        if next.len() > m.n() {
            return None;
        }
        set = next;
    }
}

/// Exhaustive subgroup enumeration over all subsets; only for n ≤ 12.
pub fn subgroups_exhaustive(m: &FiniteMagma) -> Vec<Vec<usize>> {
    let n = m.n();
    assert!(n <= 12, "exhaustive subgroup search capped at 12 elements");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_subgroup(m, &subset) {
            out.push(subset);
        }
    }
    out
}

/// S-semigroup: a proper subset that is a group under the induced operation,
/// with at least two elements. Returns the smallest such subgroup
/// (by size, then lexicographically).
pub fn s_semigroup_witness(m: &FiniteMagma) -> Option<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = subgroups(m)
        .into_iter()
        .filter(|h| h.len() >= 2 && h.len() < m.n())
        .collect();
    groups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    groups.into_iter().next()
}

pub fn is_s_semigroup(m: &FiniteMagma) -> bool {
    s_semigroup_witness(m).is_some()
}
