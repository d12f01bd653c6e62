//! Sparse polynomials over a table-backed semiring base: ascending exponent
//! order, zero coefficients never stored, unbounded degree.

use crate::structure::Structure;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    /// (exponent, coefficient index) pairs, exponents strictly increasing,
    /// coefficients nonzero in the base.
    terms: Vec<(usize, usize)>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    /// Normalizing constructor: sorts, merges duplicate exponents with the
    /// base addition, drops zero coefficients.
    pub fn new(mut terms: Vec<(usize, usize)>, base: &Structure) -> Self {
        terms.sort_unstable_by_key(|&(e, _)| e);
        let zero = base.zero().expect("polynomial base needs a zero");
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = base.add(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != zero);
        SparsePoly { terms: out }
    }

    pub fn constant(c: usize, base: &Structure) -> Self {
        Self::new(vec![(0, c)], base)
    }

    pub fn terms(&self) -> &[(usize, usize)] {
        &self.terms
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.last().map(|&(e, _)| e)
    }

    pub fn coeff(&self, exp: usize, base: &Structure) -> usize {
        let zero = base.zero().expect("polynomial base needs a zero");
        self.terms
            .iter()
            .find(|&&(e, _)| e == exp)
            .map_or(zero, |&(_, c)| c)
    }

    pub fn render(&self, base: &Structure) -> String {
        if self.terms.is_empty() {
            return base.zero().map_or("0".into(), |z| base.label(z).to_string());
        }
        let one = base.one();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(e, c)| {
                let cl = base.label(c);
                match (e, Some(c) == one) {
                    (0, _) => cl.to_string(),
                    (1, true) => "x".to_string(),
                    (1, false) => format!("{cl}x"),
                    (_, true) => format!("x^{e}"),
                    (_, false) => format!("{cl}x^{e}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Pointwise addition with base ops; zero coefficients drop out.
pub fn poly_add(p: &SparsePoly, q: &SparsePoly, base: &Structure) -> SparsePoly {
    let mut terms = p.terms.clone();
    terms.extend_from_slice(&q.terms);
    SparsePoly::new(terms, base)
}

/// Convolution with base ops.
pub fn poly_mul(p: &SparsePoly, q: &SparsePoly, base: &Structure) -> SparsePoly {
    let mut terms = Vec::with_capacity(p.terms.len() * q.terms.len());
    for &(e1, c1) in &p.terms {
        for &(e2, c2) in &q.terms {
            terms.push((e1 + e2, base.mul(c1, c2)));
        }
    }
    SparsePoly::new(terms, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain_lattice, zmod_ring};

    #[test]
    fn additive_identity() {
        let base = chain_lattice(3);
        let p = SparsePoly::new(vec![(0, 1), (2, 2)], &base);
        assert_eq!(poly_add(&p, &SparsePoly::zero(), &base), p);
    }

    #[test]
    fn square_of_one_plus_x_over_c2_has_no_cancellation() {
        let base = chain_lattice(2);
        let p = SparsePoly::new(vec![(0, 1), (1, 1)], &base);
        let sq = poly_mul(&p, &p, &base);
        // idempotent coefficients: 1 + x + x^2
        assert_eq!(sq.terms(), &[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(sq.render(&base), "1 + x + x^2");
    }

    #[test]
    fn binomial_over_z5_as_integer_stand_in() {
        // over Z5 the coefficients 1,2,1 are exact
        let base = zmod_ring(5);
        let p = SparsePoly::new(vec![(0, 1), (1, 1)], &base);
        let sq = poly_mul(&p, &p, &base);
        assert_eq!(sq.terms(), &[(0, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn zero_coefficients_dropped() {
        let base = zmod_ring(4);
        // (2x)(2x) = 4x^2 = 0
        let p = SparsePoly::new(vec![(1, 2)], &base);
        assert_eq!(poly_mul(&p, &p, &base), SparsePoly::zero());
    }
}
