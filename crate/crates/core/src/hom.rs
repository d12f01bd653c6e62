//! Homomorphism verification between table structures, with kernel
//! computation for the ring kind.

use crate::structure::Structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    /// both operations preserved
    Semiring,
    /// join and meet preserved (same laws, lattice vocabulary)
    Lattice,
    /// both operations preserved; kernel computed
    Ring,
    /// addition only (join homomorphism)
    Additive,
    /// multiplication only (meet homomorphism)
    Multiplicative,
}

#[derive(Debug, Clone)]
pub struct HomReport {
    pub ok: bool,
    /// first failing pair and which law broke
    pub witness: Option<(usize, usize, &'static str)>,
    /// ker φ = {x | φ(x) = 0}, for the ring kind
    pub kernel: Option<Vec<usize>>,
}

/// Verify the homomorphism law(s) selected by `kind` on every pair.
/// `map[i]` is the image in `dst` of element i of `src`.
pub fn check_hom(map: &[usize], src: &Structure, dst: &Structure, kind: HomKind) -> HomReport {
    assert_eq!(map.len(), src.n());
    assert!(map.iter().all(|&i| i < dst.n()));
    let check_add = matches!(
        kind,
        HomKind::Semiring | HomKind::Lattice | HomKind::Ring | HomKind::Additive
    );
    let check_mul = matches!(
        kind,
        HomKind::Semiring | HomKind::Lattice | HomKind::Ring | HomKind::Multiplicative
    );
    let mut witness = None;
    'outer: for a in 0..src.n() {
        for b in 0..src.n() {
            if check_add && map[src.add(a, b)] != dst.add(map[a], map[b]) {
                witness = Some((a, b, "additive law"));
                break 'outer;
            }
            if check_mul && map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                witness = Some((a, b, "multiplicative law"));
                break 'outer;
            }
        }
    }
    let kernel = if matches!(kind, HomKind::Ring) && witness.is_none() {
        dst.zero()
            .map(|z| (0..src.n()).filter(|&x| map[x] == z).collect())
    } else {
        None
    };
    HomReport { ok: witness.is_none(), witness, kernel }
}
