//! Symbolic structures over the number archetypes Z⁰, Z, Q⁰, Q, R⁰, R (all
//! represented with exact rationals), their tuple products — possibly mixed
//! with finite table factors — and matrices over a tag.
//!
//! These structures are infinite, so classification runs in verify-only
//! mode: certificates carry explicit finite witness lists or small symbolic
//! subset descriptors, and every clause is replayed with exact arithmetic
//! or exact mask/monomial reasoning.

use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::structure::Structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Z0,
    Z,
    Q0,
    Q,
    R0,
    R,
}

impl Tag {
    pub fn parse(s: &str) -> Option<Tag> {
        match s {
            "Z0" => Some(Tag::Z0),
            "Z" => Some(Tag::Z),
            "Q0" => Some(Tag::Q0),
            "Q" => Some(Tag::Q),
            "R0" => Some(Tag::R0),
            "R" => Some(Tag::R),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tag::Z0 => "Z0",
            Tag::Z => "Z",
            Tag::Q0 => "Q0",
            Tag::Q => "Q",
            Tag::R0 => "R0",
            Tag::R => "R",
        }
    }

    /// R and R0 elements are represented by the rational sample points the
    /// engine actually touches.
    pub fn contains(self, q: &BigRational) -> bool {
        match self {
            Tag::Z0 => q.is_integer() && !q.is_negative(),
            Tag::Z => q.is_integer(),
            Tag::Q0 | Tag::R0 => !q.is_negative(),
            Tag::Q | Tag::R => true,
        }
    }

    /// Tags whose additive structure is a group (negatives available).
    pub fn is_group_like(self) -> bool {
        matches!(self, Tag::Z | Tag::Q | Tag::R)
    }

    pub fn is_nonneg(self) -> bool {
        !self.is_group_like()
    }
}

/// One coordinate of a mixed product: a number tag or a finite table factor.
#[derive(Debug, Clone)]
pub enum Factor {
    Tag(Tag),
    Table(Arc<Structure>),
}

impl Factor {
    pub fn describe(&self) -> String {
        match self {
            Factor::Tag(t) => t.name().to_string(),
            Factor::Table(s) => format!("table[{}]", s.n()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Rat(BigRational),
    Idx(usize),
}

impl Coord {
    pub fn rat_i64(v: i64) -> Coord {
        Coord::Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn rat(num: i64, den: i64) -> Coord {
        Coord::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

pub type Element = Vec<Coord>;

/// A product of tag and table factors with componentwise exact operations.
#[derive(Debug, Clone)]
pub struct ArchetypeStructure {
    pub factors: Vec<Factor>,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArchError {
    ArityMismatch { expected: usize, got: usize },
    CoordOutOfDomain { position: usize, detail: String },
    BadElement(String),
}

impl fmt::Display for ArchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchError::ArityMismatch { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            ArchError::CoordOutOfDomain { position, detail } => {
                write!(f, "coordinate {position}: {detail}")
            }
            ArchError::BadElement(m) => write!(f, "bad element: {m}"),
        }
    }
}

impl ArchetypeStructure {
    pub fn tags(tags: Vec<Tag>, name: String) -> Self {
        ArchetypeStructure { factors: tags.into_iter().map(Factor::Tag).collect(), name }
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn check(&self, e: &Element) -> Result<(), ArchError> {
        if e.len() != self.arity() {
            return Err(ArchError::ArityMismatch { expected: self.arity(), got: e.len() });
        }
        for (i, (c, f)) in e.iter().zip(&self.factors).enumerate() {
            match (c, f) {
                (Coord::Rat(q), Factor::Tag(t)) => {
                    if !t.contains(q) {
                        return Err(ArchError::CoordOutOfDomain {
                            position: i,
                            detail: format!("{q} is not in {}", t.name()),
                        });
                    }
                }
                (Coord::Idx(x), Factor::Table(s)) => {
                    if *x >= s.n() {
                        return Err(ArchError::CoordOutOfDomain {
                            position: i,
                            detail: format!("index {x} out of range"),
                        });
                    }
                }
                _ => {
                    return Err(ArchError::CoordOutOfDomain {
                        position: i,
                        detail: "coordinate kind does not match the factor".into(),
                    })
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        self.zip(a, b, |x, y| x + y, |s, x, y| s.add(x, y))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.zip(a, b, |x, y| x * y, |s, x, y| s.mul(x, y))
    }

    fn zip(
        &self,
        a: &Element,
        b: &Element,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        tab: impl Fn(&Structure, usize, usize) -> usize,
    ) -> Element {
        self.factors
            .iter()
            .zip(a.iter().zip(b.iter()))
            .map(|(f, (x, y))| match (f, x, y) {
                (Factor::Tag(_), Coord::Rat(p), Coord::Rat(q)) => Coord::Rat(rat(p, q)),
                (Factor::Table(s), Coord::Idx(i), Coord::Idx(j)) => Coord::Idx(tab(s, *i, *j)),
                _ => panic!("element does not match factor shape"),
            })
            .collect()
    }

    pub fn zero(&self) -> Element {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Tag(_) => Coord::Rat(BigRational::zero()),
                Factor::Table(s) => Coord::Idx(s.zero().expect("table factor needs a zero")),
            })
            .collect()
    }

    pub fn one(&self) -> Option<Element> {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Tag(_) => Some(Coord::Rat(BigRational::one())),
                Factor::Table(s) => s.one().map(Coord::Idx),
            })
            .collect()
    }

    pub fn is_zero(&self, e: &Element) -> bool {
        e == &self.zero()
    }

    /// Zero-sum-freeness is decidable per factor: a signed tag or a
    /// non-strict table factor yields a witness pair, otherwise the product
    /// is strict.
    pub fn strictness_witness(&self) -> Option<(Element, Element)> {
        for (i, f) in self.factors.iter().enumerate() {
            match f {
                Factor::Tag(t) if t.is_group_like() => {
                    let mut a = self.zero();
                    let mut b = self.zero();
                    a[i] = Coord::rat_i64(1);
                    b[i] = Coord::rat_i64(-1);
                    return Some((a, b));
                }
                Factor::Table(s) => {
                    if let Some((x, y)) = crate::structure::strictness_witness(s) {
                        let mut a = self.zero();
                        let mut b = self.zero();
                        a[i] = Coord::Idx(x);
                        b[i] = Coord::Idx(y);
                        return Some((a, b));
                    }
                }
                _ => {}
            }
        }
        None
    }

    pub fn render(&self, e: &Element) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.factors)
            .map(|(c, f)| match (c, f) {
                (Coord::Rat(q), _) => q.to_string(),
                (Coord::Idx(i), Factor::Table(s)) => s.label(*i).to_string(),
                (Coord::Idx(i), Factor::Tag(_)) => i.to_string(),
            })
            .collect();
        format!("({})", parts.join(","))
    }

    pub fn parse_element(&self, coords: &[String]) -> Result<Element, ArchError> {
        if coords.len() != self.arity() {
            return Err(ArchError::ArityMismatch { expected: self.arity(), got: coords.len() });
        }
        let mut out = Vec::with_capacity(coords.len());
        for (i, (raw, f)) in coords.iter().zip(&self.factors).enumerate() {
            let c = match f {
                Factor::Tag(_) => Coord::Rat(
                    parse_rational(raw)
                        .ok_or_else(|| ArchError::BadElement(format!("coordinate {i}: {raw:?}")))?,
                ),
                Factor::Table(s) => Coord::Idx(
                    s.index_of(raw)
                        .or_else(|| raw.parse::<usize>().ok().filter(|&x| x < s.n()))
                        .ok_or_else(|| ArchError::BadElement(format!("coordinate {i}: {raw:?}")))?,
                ),
            };
            out.push(c);
        }
        let e: Element = out;
        self.check(&e)?;
        Ok(e)
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

// ---------------------------------------------------------------------------
// finite witness subsets inside an archetype structure

/// Is the explicit element list closed under both operations, with the
/// results staying inside the list?
pub fn list_closed(a: &ArchetypeStructure, list: &[Element]) -> bool {
    list.iter().all(|x| {
        list.iter()
            .all(|y| list.contains(&a.add(x, y)) && list.contains(&a.mul(x, y)))
    })
}

pub fn list_additive_identity(a: &ArchetypeStructure, list: &[Element]) -> Option<Element> {
    list.iter()
        .find(|z| list.iter().all(|p| &a.add(z, p) == p))
        .cloned()
}

pub fn list_multiplicative_identity(a: &ArchetypeStructure, list: &[Element]) -> Option<Element> {
    list.iter()
        .find(|u| list.iter().all(|p| &a.mul(u, p) == p && &a.mul(p, u) == p))
        .cloned()
}

/// Field check on an explicit finite subset: closed, additive abelian group,
/// commutative multiplication with relative identity, nonzero elements
/// invertible, distributivity inherited (re-checked on the subset).
pub fn list_is_field(a: &ArchetypeStructure, list: &[Element]) -> Result<(Element, Element), String> {
    if list.len() < 2 {
        return Err("a field needs at least two elements".into());
    }
    if !list_closed(a, list) {
        return Err("subset is not closed under the operations".into());
    }
    let z = list_additive_identity(a, list).ok_or("no additive identity in subset")?;
    for x in list {
        if !list.iter().any(|y| a.add(x, y) == z) {
            return Err(format!("no additive inverse for {}", a.render(x)));
        }
    }
    let u = list_multiplicative_identity(a, list).ok_or("no multiplicative identity in subset")?;
    if u == z {
        return Err("multiplicative identity equals the additive identity".into());
    }
    for x in list {
        for y in list {
            if a.mul(x, y) != a.mul(y, x) {
                return Err("multiplication not commutative on subset".into());
            }
        }
    }
    for x in list {
        if *x == z {
            continue;
        }
        if !list.iter().any(|y| a.mul(x, y) == u) {
            return Err(format!("no multiplicative inverse for {}", a.render(x)));
        }
    }
    Ok((z, u))
}

// ---------------------------------------------------------------------------
// matrices over a single tag

/// All dim×dim matrices with entries from one tag; elements are flat
/// row-major rational vectors.
#[derive(Debug, Clone)]
pub struct MatrixArchetype {
    pub tag: Tag,
    pub dim: usize,
}

pub type Matrix = Vec<BigRational>;

impl MatrixArchetype {
    pub fn cells(&self) -> usize {
        self.dim * self.dim
    }

    pub fn zero(&self) -> Matrix {
        vec![BigRational::zero(); self.cells()]
    }

    pub fn one(&self) -> Matrix {
        let mut m = self.zero();
        for i in 0..self.dim {
            m[i * self.dim + i] = BigRational::one();
        }
        m
    }

    pub fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let k = self.dim;
        let mut out = self.zero();
        for i in 0..k {
            for j in 0..k {
                let mut acc = BigRational::zero();
                for t in 0..k {
                    acc += &a[i * k + t] * &b[t * k + j];
                }
                out[i * k + j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self, m: &Matrix) -> bool {
        m.iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.len() == self.cells() && m.iter().all(|x| self.tag.contains(x))
    }

    pub fn render(&self, m: &Matrix) -> String {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let row: Vec<String> =
                    (0..self.dim).map(|j| m[i * self.dim + j].to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    pub fn parse(&self, rows: &[Vec<String>]) -> Result<Matrix, ArchError> {
        if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
            return Err(ArchError::ArityMismatch { expected: self.dim, got: rows.len() });
        }
        let mut out = Vec::with_capacity(self.cells());
        for row in rows {
            for cell in row {
                out.push(
                    parse_rational(cell)
                        .ok_or_else(|| ArchError::BadElement(format!("entry {cell:?}")))?,
                );
            }
        }
        if !self.contains(&out) {
            return Err(ArchError::BadElement("entry outside the tag domain".into()));
        }
        Ok(out)
    }
}

/// A symbolic subset of a matrix archetype: matrices supported inside
/// `mask`. With `nonzero` set, every mask entry is nonzero (the zero matrix
/// is still a member, acting as additive identity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPattern {
    pub mask: Vec<bool>,
    pub nonzero: bool,
}

impl MatrixPattern {
    pub fn diag(dim: usize, active: &[usize], nonzero: bool) -> Self {
        let mut mask = vec![false; dim * dim];
        for &i in active {
            mask[i * dim + i] = true;
        }
        MatrixPattern { mask, nonzero }
    }

    pub fn upper_triangular(dim: usize, nonzero: bool) -> Self {
        let mut mask = vec![false; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                mask[i * dim + j] = true;
            }
        }
        MatrixPattern { mask, nonzero }
    }

    pub fn first_row(dim: usize) -> Self {
        let mut mask = vec![false; dim * dim];
        for j in 0..dim {
            mask[j] = true;
        }
        MatrixPattern { mask, nonzero: false }
    }

    pub fn popcount(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn contains(&self, a: &MatrixArchetype, m: &Matrix) -> bool {
        if !a.contains(m) {
            return false;
        }
        if a.is_zero(m) {
            return true;
        }
        let inside = m
            .iter()
            .zip(&self.mask)
            .all(|(x, &on)| on || x.is_zero());
        if !inside {
            return false;
        }
        if self.nonzero {
            m.iter().zip(&self.mask).all(|(x, &on)| !on || !x.is_zero())
        } else {
            true
        }
    }

    fn bool_product(&self, dim: usize) -> Vec<bool> {
        let mut out = vec![false; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for t in 0..dim {
                    if self.mask[i * dim + t] && self.mask[t * dim + j] {
                        out[i * dim + j] = true;
                    }
                }
            }
        }
        out
    }

    /// Closure under multiplication: the boolean mask product must stay in
    /// the mask; with `nonzero`, it must reproduce the mask exactly so every
    /// active entry of a product is again nonzero (no cancellation over a
    /// nonnegative tag).
    pub fn closed_under_mul(&self, a: &MatrixArchetype) -> bool {
        if !a.tag.is_nonneg() {
            return false; // cancellation defeats the mask argument
        }
        let prod = self.bool_product(a.dim);
        if self.nonzero {
            prod == self.mask
        } else {
            prod.iter().zip(&self.mask).all(|(&p, &m)| !p || m)
        }
    }

    /// Addition is entrywise over a nonnegative tag: supports only grow
    /// inside the mask, nonzero entries stay nonzero.
    pub fn closed_under_add(&self, a: &MatrixArchetype) -> bool {
        a.tag.is_nonneg()
    }

    /// Commutativity of the pattern as a set of matrices, decided exactly by
    /// comparing the monomial sets of the two symbolic products.
    pub fn is_commutative(&self, a: &MatrixArchetype) -> bool {
        let k = a.dim;
        let on = |i: usize, j: usize| self.mask[i * k + j];
        for i in 0..k {
            for j in 0..k {
                // (XY)_{ij} has monomials x_{it}·y_{tj}; (YX)_{ij} has
                // x_{tj}·y_{it}. Both are recorded as (x-cell, y-cell).
                let mut xy: Vec<(usize, usize)> = Vec::new();
                let mut yx: Vec<(usize, usize)> = Vec::new();
                for t in 0..k {
                    if on(i, t) && on(t, j) {
                        xy.push((i * k + t, t * k + j));
                        yx.push((t * k + j, i * k + t));
                    }
                }
                xy.sort_unstable();
                yx.sort_unstable();
                if xy != yx {
                    return false;
                }
            }
        }
        true
    }

    /// Does the pattern contain a pair of nonzero members multiplying to
    /// the zero matrix? Decided by scanning nonzero submask pairs (a member
    /// may occupy any nonzero submask unless `nonzero` pins the support).
    pub fn has_zero_divisors(&self, a: &MatrixArchetype) -> bool {
        assert!(a.tag.is_nonneg(), "zero-divisor mask reasoning needs a nonnegative tag");
        let k = a.dim;
        let cells: Vec<usize> = (0..k * k).filter(|&c| self.mask[c]).collect();
        let m = cells.len();
        assert!(m <= 12, "pattern too wide for submask scan");
        let prod_is_zero = |ma: u32, mb: u32| -> bool {
            for i in 0..k {
                for j in 0..k {
                    for t in 0..k {
                        let ca = cells.iter().position(|&c| c == i * k + t);
                        let cb = cells.iter().position(|&c| c == t * k + j);
                        if let (Some(ca), Some(cb)) = (ca, cb) {
                            if ma >> ca & 1 == 1 && mb >> cb & 1 == 1 {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        };
        if self.nonzero {
            let full = (1u32 << m) - 1;
            return prod_is_zero(full, full);
        }
        for ma in 1u32..(1 << m) {
            for mb in 1u32..(1 << m) {
                if prod_is_zero(ma, mb) {
                    return true;
                }
            }
        }
        false
    }

    /// The member acting as a two-sided multiplicative identity on the
    /// pattern, when one exists: the sub-identity matrix on the rows/columns
    /// the mask touches (it must itself lie in the pattern).
    pub fn local_identity(&self, a: &MatrixArchetype) -> Option<Matrix> {
        let k = a.dim;
        let mut active = vec![false; k];
        for i in 0..k {
            for j in 0..k {
                if self.mask[i * k + j] {
                    active[i] = true;
                    active[j] = true;
                }
            }
        }
        let mut u = a.zero();
        for (i, &on) in active.iter().enumerate() {
            if on {
                u[i * k + i] = BigRational::one();
            }
        }
        // u must belong to the pattern and fix every mask cell:
        // (uX)_{ij} = X_{ij} iff row i is active; (Xu)_{ij} similar.
        if !self.contains(a, &u) {
            return None;
        }
        for i in 0..k {
            for j in 0..k {
                if self.mask[i * k + j] && (!active[i] || !active[j]) {
                    return None;
                }
            }
        }
        Some(u)
    }

    /// Absorption of this pattern (A) under multiplication by another
    /// pattern (P): mask_P · mask_A ⊆ mask_A and symmetrically when
    /// `two_sided`.
    pub fn absorbed_by(&self, outer: &MatrixPattern, a: &MatrixArchetype, two_sided: bool) -> bool {
        if !a.tag.is_nonneg() {
            return false;
        }
        let k = a.dim;
        let prod_ok = |left: &[bool], right: &[bool]| -> bool {
            for i in 0..k {
                for j in 0..k {
                    for t in 0..k {
                        if left[i * k + t] && right[t * k + j] && !self.mask[i * k + j] {
                            return false;
                        }
                    }
                }
            }
            true
        };
        let left = prod_ok(&outer.mask, &self.mask);
        if two_sided {
            left && prod_ok(&self.mask, &outer.mask)
        } else {
            left
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod_ring;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn q0_tuple_inverse_example() {
        // (3, 1/4, 5/3, 7/2) · (1/3, 4, 3/5, 2/7) = (1,1,1,1) over Q0^4
        let s = ArchetypeStructure::tags(vec![Tag::Q0; 4], "Q0^4".into());
        let a: Element = vec![Coord::rat(3, 1), Coord::rat(1, 4), Coord::rat(5, 3), Coord::rat(7, 2)];
        let b: Element = vec![Coord::rat(1, 3), Coord::rat(4, 1), Coord::rat(3, 5), Coord::rat(2, 7)];
        s.check(&a).unwrap();
        assert_eq!(s.mul(&a, &b), s.one().unwrap());
    }

    #[test]
    fn z0_strict_and_signed_not() {
        let z0 = ArchetypeStructure::tags(vec![Tag::Z0; 3], "Z0^3".into());
        assert!(z0.strictness_witness().is_none());
        let zq = ArchetypeStructure::tags(vec![Tag::Z0, Tag::Q], "Z0×Q".into());
        let (a, b) = zq.strictness_witness().unwrap();
        assert!(zq.is_zero(&zq.add(&a, &b)));
    }

    #[test]
    fn mixed_product_with_table_factor() {
        let z7 = Arc::new(zmod_ring(7));
        let s = ArchetypeStructure {
            factors: vec![Factor::Tag(Tag::Z0), Factor::Table(z7)],
            name: "Z0×Z7".into(),
        };
        let a: Element = vec![Coord::rat_i64(2), Coord::Idx(3)];
        let b: Element = vec![Coord::rat_i64(5), Coord::Idx(6)];
        assert_eq!(s.add(&a, &b), vec![Coord::rat_i64(7), Coord::Idx(2)]);
        assert_eq!(s.mul(&a, &b), vec![Coord::rat_i64(10), Coord::Idx(4)]);
        // {0}×Z7 is a field under the induced operations
        let list: Vec<Element> = (0..7)
            .map(|k| vec![Coord::rat_i64(0), Coord::Idx(k)])
            .collect();
        let (z, u) = list_is_field(&s, &list).unwrap();
        assert_eq!(z, vec![Coord::rat_i64(0), Coord::Idx(0)]);
        assert_eq!(u, vec![Coord::rat_i64(0), Coord::Idx(1)]);
    }

    #[test]
    fn z10_z0_field_with_relative_identity_six() {
        let z10 = Arc::new(zmod_ring(10));
        let s = ArchetypeStructure {
            factors: vec![Factor::Table(z10), Factor::Tag(Tag::Z0)],
            name: "Z10×Z0".into(),
        };
        let evens: Vec<Element> = [0usize, 2, 4, 6, 8]
            .iter()
            .map(|&k| vec![Coord::Idx(k), Coord::rat_i64(0)])
            .collect();
        let (z, u) = list_is_field(&s, &evens).unwrap();
        assert_eq!(z, vec![Coord::Idx(0), Coord::rat_i64(0)]);
        assert_eq!(u, vec![Coord::Idx(6), Coord::rat_i64(0)]);
        let fives: Vec<Element> = [0usize, 5]
            .iter()
            .map(|&k| vec![Coord::Idx(k), Coord::rat_i64(0)])
            .collect();
        let (_, u5) = list_is_field(&s, &fives).unwrap();
        assert_eq!(u5, vec![Coord::Idx(5), Coord::rat_i64(0)]);
    }

    #[test]
    fn matrix_product_exact() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        // A = [[1,0],[0,0]], B = [[0,0],[1,0]] ⇒ AB = 0, BA = [[0,0],[1,0]]
        let a = vec![q(1), q(0), q(0), q(0)];
        let b = vec![q(0), q(0), q(1), q(0)];
        assert!(m.is_zero(&m.mul(&a, &b)));
        assert_eq!(m.mul(&b, &a), b);
    }

    #[test]
    fn diag_pattern_properties() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let diag = MatrixPattern::diag(2, &[0, 1], true);
        assert!(diag.closed_under_mul(&m));
        assert!(diag.closed_under_add(&m));
        assert!(diag.is_commutative(&m));
        assert!(!diag.has_zero_divisors(&m));
        assert_eq!(diag.local_identity(&m), Some(m.one()));
        // diag with zeros allowed does have zero divisors
        let diag_lax = MatrixPattern::diag(2, &[0, 1], false);
        assert!(diag_lax.has_zero_divisors(&m));
    }

    #[test]
    fn upper_triangular_pattern() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let ut = MatrixPattern::upper_triangular(2, true);
        assert!(ut.closed_under_mul(&m));
        assert!(!ut.is_commutative(&m));
        assert!(!ut.has_zero_divisors(&m));
        // with zeros allowed, E12 squares to zero
        let ut_lax = MatrixPattern::upper_triangular(2, false);
        assert!(ut_lax.has_zero_divisors(&m));
    }

    #[test]
    fn first_row_pattern_not_closed_nonzero() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let fr = MatrixPattern::first_row(2);
        // [[a,b],[0,0]]·[[c,d],[0,0]] = [[ac,ad],[0,0]] stays in the mask
        assert!(fr.closed_under_mul(&m));
        assert!(!fr.is_commutative(&m));
        assert!(fr.has_zero_divisors(&m));
    }

    #[test]
    fn corner_absorbed_by_diag() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let corner = MatrixPattern::diag(2, &[0], false);
        let diag = MatrixPattern::diag(2, &[0, 1], true);
        assert!(corner.absorbed_by(&diag, &m, true));
        let full = MatrixPattern { mask: vec![true; 4], nonzero: false };
        assert!(!corner.absorbed_by(&full, &m, true));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4"), Some(BigRational::new(3.into(), 4.into())));
        assert_eq!(parse_rational("-2"), Some(q(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert!(Tag::Z0.contains(&q(5)));
        assert!(!Tag::Z0.contains(&q(-5)));
        assert!(!Tag::Z0.contains(&BigRational::new(1.into(), 2.into())));
        assert!(Tag::Q.contains(&BigRational::new((-1).into(), 2.into())));
    }
}
