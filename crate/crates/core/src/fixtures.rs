//! The lattice fixture corpus.
//!
//! Named small lattices used throughout the test suite and the claims
//! corpus: the pentagon and diamond, the two-atom square, the non-chain
//! semifield "kite", a non-modular hexagon, and a few stacked shapes that
//! host ideal/subsemiring examples.

use crate::lattice::{as_lattice, boolean, chain, FiniteLattice};
use crate::poset::poset_from_labelled_covers;

fn from_covers(labels: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
    let p = poset_from_labelled_covers(labels, covers).expect("fixture covers form a poset");
    as_lattice(&p).expect("fixture is a lattice")
}

/// Pentagon N5: 0 < a < c < 1 on one side, 0 < b < 1 on the other.
/// Non-distributive and non-modular; b has the two complements a and c.
pub fn pentagon() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
}

/// Diamond M3: three pairwise-incomparable midpoints. Modular but not
/// distributive.
pub fn diamond() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
}

/// The non-distributive lattice rejected by the semiring gate. Same shape
/// as the diamond.
pub fn non_semiring_lattice() -> FiniteLattice {
    diamond()
}

/// Two-atom Boolean square {0, a, b, 1} with a∧b = 0 and a∨b = 1. The base
/// of the 2×2 matrix-semiring examples, and the smallest semiring with a
/// zero-divisor pair.
pub fn square() -> FiniteLattice {
    from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
}

/// A distributive non-chain semifield: a square {a, c, d, 1} sitting on a
/// stem 0 < a, so no two nonzero elements meet to 0 although c and d are
/// incomparable.
pub fn kite() -> FiniteLattice {
    from_covers(
        &["0", "a", "c", "d", "1"],
        &[("0", "a"), ("a", "c"), ("a", "d"), ("c", "1"), ("d", "1")],
    )
}

/// Six elements, two independent 2-chains glued at bottom and top. A
/// lattice (every pair still has unique bounds) that is not modular.
pub fn hexagon() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "d", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
    )
}

/// A square {d, c, b, a} stacked between 0 and 1: 0 < d < {c, b} < a < 1.
/// Distributive; {0, d, c, b, a} is both an ideal and a subsemiring.
pub fn stacked_square() -> FiniteLattice {
    from_covers(
        &["0", "d", "c", "b", "a", "1"],
        &[("0", "d"), ("d", "c"), ("d", "b"), ("c", "a"), ("b", "a"), ("a", "1")],
    )
}

/// Ten-element chain 0 < h < g < f < e < d < c < b < a < 1; dropping b and
/// f leaves an eight-element subsemiring.
pub fn chain10() -> FiniteLattice {
    from_covers(
        &["0", "h", "g", "f", "e", "d", "c", "b", "a", "1"],
        &[
            ("0", "h"),
            ("h", "g"),
            ("g", "f"),
            ("f", "e"),
            ("e", "d"),
            ("d", "c"),
            ("c", "b"),
            ("b", "a"),
            ("a", "1"),
        ],
    )
}

/// Six-element chain 0 < c < d < b < a < 1 hosting the pseudo-subsemiring
/// examples: {0, a, b, d} sits inside the proper subset {0, d, b, a, 1},
/// while {0, c, d, b, a} has no proper superset other than the whole set.
pub fn chain6_cdba() -> FiniteLattice {
    from_covers(
        &["0", "c", "d", "b", "a", "1"],
        &[("0", "c"), ("c", "d"), ("d", "b"), ("b", "a"), ("a", "1")],
    )
}

/// A square {d, a, b, 1} on a stem 0 < c < d: hosts the dual-ideal example
/// P = {0, a, b, d, 1} with semifield {0, 1}.
pub fn stem_square() -> FiniteLattice {
    from_covers(
        &["0", "c", "d", "a", "b", "1"],
        &[("0", "c"), ("c", "d"), ("d", "a"), ("d", "b"), ("a", "1"), ("b", "1")],
    )
}

/// Seven elements: square {a, b, c} over 0 (a∧b = 0, a∨b = c) continued by
/// the chain c < d < e < 1. Has the zero-divisor pair (a, b) while the
/// chain {0, a, c, d, e, 1} with 1 removed absorbs multiplication.
pub fn weak_semifield_host() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "d", "e", "1"],
        &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "1")],
    )
}

/// The twelve-lattice fixture corpus for the semiring gate: chains C2..C8,
/// the square, the 8-element Boolean, the kite, plus the two non-distributive
/// rejects (pentagon and diamond).
pub fn corpus() -> Vec<(String, FiniteLattice)> {
    let mut out: Vec<(String, FiniteLattice)> = (2..=8)
        .map(|n| (format!("C{n}"), chain(n)))
        .collect();
    out.push(("square".into(), square()));
    out.push(("boolean3".into(), boolean(3)));
    out.push(("kite".into(), kite()));
    out.push(("pentagon".into(), pentagon()));
    out.push(("diamond".into(), diamond()));
    out
}
