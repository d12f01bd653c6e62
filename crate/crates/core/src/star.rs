//! Inductive star-semiring checks: operation monotonicity, the fixed-point
//! inequation a·a* + 1 ≤ a*, and the brute-forced induction rule
//! a·x + b ≤ x ⇒ a*·b ≤ x.

use crate::poset::FinitePoset;
use crate::structure::Structure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarError {
    MissingOne,
    SizeMismatch,
}

#[derive(Debug, Clone)]
pub struct StarReport {
    /// add and mul monotone w.r.t. the order; witness (op, a, b, c)
    pub monotone: Result<(), (&'static str, usize, usize, usize)>,
    /// a·a* + 1 ≤ a* for all a; witness a
    pub fixed_point: Result<(), usize>,
    /// ∀ a,b,x: a·x + b ≤ x ⇒ a*·b ≤ x; witness (a, b, x)
    pub induction: Result<(), (usize, usize, usize)>,
}

impl StarReport {
    pub fn all_hold(&self) -> bool {
        self.monotone.is_ok() && self.fixed_point.is_ok() && self.induction.is_ok()
    }
}

pub fn check_inductive_star(
    s: &Structure,
    order: &FinitePoset,
    star: &[usize],
) -> Result<StarReport, StarError> {
    let n = s.n();
    if order.n() != n || star.len() != n || star.iter().any(|&x| x >= n) {
        return Err(StarError::SizeMismatch);
    }
    let Some(one) = s.one() else {
        return Err(StarError::MissingOne);
    };
    let mut monotone = Ok(());
    'mono: for a in 0..n {
        for b in 0..n {
            if !order.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if !order.leq(s.add(a, c), s.add(b, c)) || !order.leq(s.add(c, a), s.add(c, b)) {
                    monotone = Err(("add", a, b, c));
                    break 'mono;
                }
                if !order.leq(s.mul(a, c), s.mul(b, c)) || !order.leq(s.mul(c, a), s.mul(c, b)) {
                    monotone = Err(("mul", a, b, c));
                    break 'mono;
                }
            }
        }
    }
    let fixed_point = (0..n)
        .find(|&a| !order.leq(s.add(s.mul(a, star[a]), one), star[a]))
        .map_or(Ok(()), Err);
    let mut induction = Ok(());
    'ind: for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                if order.leq(s.add(s.mul(a, x), b), x) && !order.leq(s.mul(star[a], b), x) {
                    induction = Err((a, b, x));
                    break 'ind;
                }
            }
        }
    }
    Ok(StarReport { monotone, fixed_point, induction })
}
