//! Builders that manufacture structures: lattice semirings, modular rings,
//! permutation and transformation semigroups, direct and mixed products,
//! matrix semirings, the ∞-adjunction, and the formal-sum algebras.

pub mod formal;
pub mod poly;

use std::fmt;

use crate::lattice::{boolean, chain};
use crate::structure::{AxiomViolation, Structure};
use crate::table::{FiniteMagma, OpTable};

pub use formal::{
    atom_factorization, group_ring, group_semiring, group_semiring_lazy, FormalAlgebra, FormalSum,
    FormalSumError,
};
pub use poly::{poly_add, poly_mul, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    Axiom(AxiomViolation),
    TooLarge { size: u128, cap: u128 },
    BadParam(String),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Axiom(v) => write!(f, "axiom violation: {v}"),
            BuildError::TooLarge { size, cap } => {
                write!(f, "structure with {size} elements exceeds the {cap}-element cap")
            }
            BuildError::BadParam(m) => write!(f, "{m}"),
        }
    }
}

impl From<AxiomViolation> for BuildError {
    fn from(v: AxiomViolation) -> Self {
        BuildError::Axiom(v)
    }
}

/// Default cap on materialized element counts; see `SEMICERT_CAP`.
pub const DEFAULT_CAP: u128 = 1 << 16;

/// n-element total order as a semiring (add = join = max, mul = meet = min).
pub fn chain_lattice(n: usize) -> Structure {
    Structure::from_lattice(&chain(n))
}

/// Boolean algebra of all subsets of a k-element set (add = union,
/// mul = intersection).
pub fn power_set_semiring(k: usize) -> Structure {
    Structure::from_lattice(&boolean(k))
}

/// Z_n with addition and multiplication mod n.
pub fn zmod_ring(n: usize) -> Structure {
    assert!(n >= 1);
    let labels = (0..n).map(|i| i.to_string()).collect();
    let add = OpTable::build(n, |a, b| (a + b) % n);
    let mul = OpTable::build(n, |a, b| (a * b) % n);
    Structure::validate_semiring(labels, add, mul).expect("Z_n is a ring")
}

/// Z_n as a multiplicative semigroup (mod-n multiplication only).
pub fn zmod_mul_semigroup(n: usize) -> FiniteMagma {
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteMagma::new(labels, OpTable::build(n, |a, b| (a * b) % n))
}

/// The cyclic group ⟨g | g^n = 1⟩ written multiplicatively.
pub fn cyclic_group(n: usize) -> FiniteMagma {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    FiniteMagma::new(labels, OpTable::build(n, |a, b| (a + b) % n))
}

pub fn trivial_group() -> FiniteMagma {
    FiniteMagma::new(vec!["e".to_string()], OpTable::build(1, |_, _| 0))
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    // lexicographic enumeration of image tuples
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn map_label(img: &[usize]) -> String {
    let parts: Vec<String> = img.iter().map(|x| (x + 1).to_string()).collect();
    format!("[{}]", parts.join(""))
}

/// Symmetric group S_n under composition (f*g)(x) = f(g(x)); elements in
/// lexicographic image order, so index 0 is the identity.
pub fn symmetric_group(n: usize) -> FiniteMagma {
    assert!((1..=5).contains(&n), "symmetric group supported for n ≤ 5");
    let ps = perms(n);
    magma_of_maps(ps)
}

/// Full transformation semigroup S(n): all n^n self-maps of an n-set under
/// composition. A monoid with the identity map.
pub fn full_transformation(n: usize) -> FiniteMagma {
    assert!((1..=4).contains(&n), "S(n) supported for n ≤ 4");
    let mut maps = Vec::new();
    let total = n.pow(n as u32);
    for code in 0..total {
        let mut img = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            img.push(c % n);
            c /= n;
        }
        maps.push(img);
    }
    magma_of_maps(maps)
}

fn magma_of_maps(maps: Vec<Vec<usize>>) -> FiniteMagma {
    let labels: Vec<String> = maps.iter().map(|m| map_label(m)).collect();
    let index = |m: &[usize]| maps.iter().position(|x| x == m).unwrap();
    let k = maps.len();
    let table = OpTable::build(k, |a, b| {
        let composed: Vec<usize> = maps[b].iter().map(|&x| maps[a][x]).collect();
        index(&composed)
    });
    FiniteMagma::new(labels, table)
}

/// Dihedral group of order 2n: rotations r^i and reflections s·r^i with
/// s r s = r^{-1}.
pub fn dihedral(n: usize) -> FiniteMagma {
    assert!(n >= 1);
    let order = 2 * n;
    let labels = (0..order)
        .map(|i| {
            let (flip, rot) = (i >= n, i % n);
            match (flip, rot) {
                (false, 0) => "1".to_string(),
                (false, r) => format!("r{r}"),
                (true, 0) => "s".to_string(),
                (true, r) => format!("sr{r}"),
            }
        })
        .collect();
    let table = OpTable::build(order, |a, b| {
        let (fa, ra) = (a >= n, a % n);
        let (fb, rb) = (b >= n, b % n);
        // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(±ra+rb)
        let rot = if fb { (n + rb - ra % n) % n } else { (ra + rb) % n };
        let flip = fa ^ fb;
        if flip {
            n + rot
        } else {
            rot
        }
    });
    FiniteMagma::new(labels, table)
}

fn product_labels(parts: &[&[String]]) -> Vec<String> {
    let mut out = vec![String::new()];
    for p in parts {
        let mut next = Vec::with_capacity(out.len() * p.len());
        for prefix in &out {
            for l in p.iter() {
                if prefix.is_empty() {
                    next.push(l.clone());
                } else {
                    next.push(format!("{prefix},{l}"));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|s| format!("({s})")).collect()
}

/// Componentwise direct product of table structures. The result is
/// validated, not assumed.
pub fn direct_product(factors: &[&Structure]) -> Result<Structure, BuildError> {
    direct_product_capped(factors, DEFAULT_CAP)
}

pub fn direct_product_capped(factors: &[&Structure], cap: u128) -> Result<Structure, BuildError> {
    if factors.is_empty() {
        return Err(BuildError::BadParam("empty factor list".into()));
    }
    let size: u128 = factors.iter().map(|s| s.n() as u128).product();
    if size > cap {
        return Err(BuildError::TooLarge { size, cap });
    }
    let n = size as usize;
    let dims: Vec<usize> = factors.iter().map(|s| s.n()).collect();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut coords = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            coords[k] = i % dims[k];
            i /= dims[k];
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        let mut i = 0;
        for (k, &c) in coords.iter().enumerate() {
            i = i * dims[k] + c;
        }
        i
    };
    let label_parts: Vec<&[String]> = factors.iter().map(|s| s.labels.as_slice()).collect();
    let labels = product_labels(&label_parts);
    let add = OpTable::build(n, |a, b| {
        let (ca, cb) = (decode(a), decode(b));
        let sum: Vec<usize> = (0..dims.len()).map(|k| factors[k].add(ca[k], cb[k])).collect();
        encode(&sum)
    });
    let mul = OpTable::build(n, |a, b| {
        let (ca, cb) = (decode(a), decode(b));
        let prod: Vec<usize> = (0..dims.len()).map(|k| factors[k].mul(ca[k], cb[k])).collect();
        encode(&prod)
    });
    Ok(Structure::validate(labels, add, mul)?)
}

/// All k×k matrices over a finite semiring base, with entrywise addition and
/// row-by-column multiplication.
pub fn matrix_semiring(base: &Structure, k: usize, cap: u128) -> Result<Structure, BuildError> {
    if k == 0 {
        return Err(BuildError::BadParam("matrix dimension must be ≥ 1".into()));
    }
    let cells = k * k;
    let size = (base.n() as u128).pow(cells as u32);
    if size > cap {
        return Err(BuildError::TooLarge { size, cap });
    }
    let n = size as usize;
    let bn = base.n();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut m = vec![0; cells];
        for c in (0..cells).rev() {
            m[c] = i % bn;
            i /= bn;
        }
        m
    };
    let encode = |m: &[usize]| -> usize {
        let mut i = 0;
        for &e in m {
            i = i * bn + e;
        }
        i
    };
    let labels: Vec<String> = (0..n).map(|i| matrix_label(&decode(i), k, base)).collect();
    let add = OpTable::build(n, |a, b| {
        let (ma, mb) = (decode(a), decode(b));
        let sum: Vec<usize> = (0..cells).map(|c| base.add(ma[c], mb[c])).collect();
        encode(&sum)
    });
    let zero_idx = base.zero().expect("matrix base must have a zero");
    let mul = OpTable::build(n, |a, b| {
        let (ma, mb) = (decode(a), decode(b));
        let mut prod = vec![zero_idx; cells];
        for i in 0..k {
            for j in 0..k {
                let mut acc = zero_idx;
                for t in 0..k {
                    acc = base.add(acc, base.mul(ma[i * k + t], mb[t * k + j]));
                }
                prod[i * k + j] = acc;
            }
        }
        encode(&prod)
    });
    Ok(Structure::validate_semiring(labels, add, mul)?)
}

pub fn matrix_label(entries: &[usize], k: usize, base: &Structure) -> String {
    let rows: Vec<String> = (0..k)
        .map(|i| {
            let row: Vec<&str> =
                (0..k).map(|j| base.label(entries[i * k + j])).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Adjoin ∞ to a multiplicative semigroup: x·∞ = ∞·x = ∞, x + x = x and
/// x + y = ∞ for x ≠ y. The addition has no identity, so the result is
/// validated without the additive-identity requirement.
pub fn v_of(s: &FiniteMagma) -> Result<Structure, BuildError> {
    if !s.table.is_associative() {
        let (a, b, c) = s.table.associativity_witness().unwrap();
        return Err(BuildError::Axiom(AxiomViolation::MulNotAssociative { a, b, c }));
    }
    let n = s.n() + 1;
    let inf = s.n();
    let mut labels = s.labels.clone();
    labels.push("∞".to_string());
    let add = OpTable::build(n, |a, b| if a == b { a } else { inf });
    let mul = OpTable::build(n, |a, b| {
        if a == inf || b == inf {
            inf
        } else {
            s.op(a, b)
        }
    });
    Ok(Structure::validate(labels, add, mul)?)
}
