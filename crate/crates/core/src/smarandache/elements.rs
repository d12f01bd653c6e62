//! Element-level Smarandache refinements: S-zero divisors, S-anti zero
//! divisors, S-idempotents and S-units, as exhaustive searches over table
//! structures plus the clause replay shared with the verifier.

use crate::structure::Structure;

use super::{certificate, Certificate, Log, Witness};

fn labels(s: &Structure, items: &[usize]) -> Vec<String> {
    items.iter().map(|&i| s.label(i).to_string()).collect()
}

/// Clauses for the S-zero-divisor quadruple (a, b, x, y).
pub(crate) fn s_zero_divisor_clauses(
    s: &Structure,
    a: usize,
    b: usize,
    x: usize,
    y: usize,
    log: &mut Log,
) -> bool {
    let Some(z) = s.zero() else {
        return log.check("structure has a zero", false);
    };
    log.check("a and b are nonzero with a·b = 0", a != z && b != z && s.mul(a, b) == z);
    log.check(
        "x and y are distinct and avoid {a, b, 0}",
        x != y && ![a, b, z].contains(&x) && ![a, b, z].contains(&y),
    );
    log.check("x·a = 0 or a·x = 0", s.mul(x, a) == z || s.mul(a, x) == z);
    log.check("b·y = 0 or y·b = 0", s.mul(b, y) == z || s.mul(y, b) == z);
    log.check("x·y ≠ 0 or y·x ≠ 0", s.mul(x, y) != z || s.mul(y, x) != z);
    log.all_pass()
}

/// All S-zero-divisor quadruples.
pub fn find_s_zero_divisors(s: &Structure, name: &str) -> Vec<Certificate> {
    let Some(z) = s.zero() else { return Vec::new() };
    let n = s.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == z || b == z || s.mul(a, b) != z {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    let mut log = Log::new();
                    if s_zero_divisor_clauses(s, a, b, x, y, &mut log) {
                        out.push(certificate(
                            "s-zero-divisor",
                            name,
                            Witness::Labels(labels(s, &[a, b, x, y])),
                            true,
                            log,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Clauses for the S-anti-zero-divisor tuple (x, y, a, b).
pub(crate) fn s_anti_zero_divisor_clauses(
    s: &Structure,
    x: usize,
    y: usize,
    a: usize,
    b: usize,
    log: &mut Log,
) -> bool {
    let Some(z) = s.zero() else {
        return log.check("structure has a zero", false);
    };
    log.check("x·y ≠ 0", s.mul(x, y) != z);
    log.check(
        "a and b avoid {0, x, y}",
        ![z, x, y].contains(&a) && ![z, x, y].contains(&b),
    );
    log.check("a·x ≠ 0 or x·a ≠ 0", s.mul(a, x) != z || s.mul(x, a) != z);
    log.check("b·y ≠ 0 or y·b ≠ 0", s.mul(b, y) != z || s.mul(y, b) != z);
    log.check("a·b = 0 or b·a = 0", s.mul(a, b) == z || s.mul(b, a) == z);
    log.all_pass()
}

/// One certificate per element x that is an S-anti zero divisor.
pub fn find_s_anti_zero_divisors(s: &Structure, name: &str) -> Vec<Certificate> {
    let Some(z) = s.zero() else { return Vec::new() };
    let n = s.n();
    let mut out = Vec::new();
    for x in 0..n {
        if x == z {
            continue;
        }
        let mut found = None;
        'search: for y in 0..n {
            if s.mul(x, y) == z {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let mut log = Log::new();
                    if s_anti_zero_divisor_clauses(s, x, y, a, b, &mut log) {
                        found = Some((y, a, b, log));
                        break 'search;
                    }
                }
            }
        }
        if let Some((y, a, b, log)) = found {
            out.push(certificate(
                "s-anti-zero-divisor",
                name,
                Witness::Labels(labels(s, &[x, y, a, b])),
                true,
                log,
            ));
        }
    }
    out
}

/// Clauses for the S-idempotent pair (a, b): a² = a, b ≠ a with b² = a, and
/// exactly one of the two product conditions holds (the definition's 'or'
/// is mutually exclusive).
pub(crate) fn s_idempotent_clauses(
    s: &Structure,
    a: usize,
    b: usize,
    log: &mut Log,
) -> bool {
    let Some(z) = s.zero() else {
        return log.check("structure has a zero", false);
    };
    log.check("a is a nonzero idempotent", a != z && s.mul(a, a) == a);
    log.check("b differs from a and b² = a", b != a && s.mul(b, b) == a);
    let first = s.mul(a, b) == b || s.mul(b, a) == b;
    let second = s.mul(b, a) == a || s.mul(a, b) == a;
    log.check("exactly one of (ab = b or ba = b), (ba = a or ab = a)", first ^ second);
    log.all_pass()
}

pub fn find_s_idempotents(s: &Structure, name: &str) -> Vec<Certificate> {
    let Some(z) = s.zero() else { return Vec::new() };
    let n = s.n();
    let mut out = Vec::new();
    for a in 0..n {
        if a == z || s.mul(a, a) != a {
            continue;
        }
        for b in 0..n {
            let mut log = Log::new();
            if s_idempotent_clauses(s, a, b, &mut log) {
                out.push(certificate(
                    "s-idempotent",
                    name,
                    Witness::Labels(labels(s, &[a, b])),
                    true,
                    log,
                ));
            }
        }
    }
    out
}

/// Clauses for the S-unit tuple (x, y, a, b).
pub(crate) fn s_unit_clauses(
    s: &Structure,
    x: usize,
    y: usize,
    a: usize,
    b: usize,
    log: &mut Log,
) -> bool {
    let Some(o) = s.one() else {
        return log.check("structure has a one", false);
    };
    log.check("x ≠ 1 and x·y = 1", x != o && s.mul(x, y) == o);
    log.check(
        "a and b avoid {x, y, 1}",
        ![x, y, o].contains(&a) && ![x, y, o].contains(&b),
    );
    let link = s.mul(x, a) == y || s.mul(a, x) == y || s.mul(y, b) == x || s.mul(b, y) == x;
    log.check("x·a = y or a·x = y, or y·b = x or b·y = x", link);
    log.check("a·b = 1", s.mul(a, b) == o);
    log.all_pass()
}

pub fn find_s_units(s: &Structure, name: &str) -> Vec<Certificate> {
    let Some(o) = s.one() else { return Vec::new() };
    let n = s.n();
    let mut out = Vec::new();
    for x in 0..n {
        if x == o {
            continue;
        }
        let mut found = None;
        'search: for y in 0..n {
            if s.mul(x, y) != o {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let mut log = Log::new();
                    if s_unit_clauses(s, x, y, a, b, &mut log) {
                        found = Some((y, a, b, log));
                        break 'search;
                    }
                }
            }
        }
        if let Some((y, a, b, log)) = found {
            out.push(certificate(
                "s-unit",
                name,
                Witness::Labels(labels(s, &[x, y, a, b])),
                true,
                log,
            ));
        }
    }
    out
}
