//! Lower bounds on the order of a polytope with degrees 3..=n.
//!
//! Integer arithmetic only. Ceilings are taken on non-negative numerators,
//! which holds for every `n` in each function's domain.

use crate::error::Error;
use crate::graph::DegreeSequence;

/// Exact minimal orders for n = 3..=13.
pub const TABLE1: [(u64, u64); 11] = [
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 10),
    (9, 11),
    (10, 14),
    (11, 16),
    (12, 19),
    (13, 23),
];

fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

fn domain(what: &'static str, n: u64) -> Error {
    Error::Domain {
        what,
        value: n as i64,
    }
}

/// Bound from the degree count of a triangulated sphere: ⌈(n²−5n+30)/6⌉.
pub fn bound6(n: u64) -> Result<u64, Error> {
    if n < 3 {
        return Err(domain("n", n));
    }
    Ok(ceil_div(n * n + 30 - 5 * n, 6))
}

/// Sharper bound from the partial degree sum inequality: ⌈(n²−11n+62)/4⌉, n ≥ 8.
pub fn bound4(n: u64) -> Result<u64, Error> {
    if n < 8 {
        return Err(domain("n", n));
    }
    Ok(ceil_div(n * n + 62 - 11 * n, 4))
}

/// Minimal order of a polytope with a vertex of each degree 3..=n.
pub fn p_of(n: u64) -> Result<u64, Error> {
    if n < 3 {
        return Err(domain("n", n));
    }
    if n <= 13 {
        return Ok(TABLE1[(n - 3) as usize].1);
    }
    bound4(n)
}

/// Minimal order when three vertices of degree n−1 are also required,
/// (n²−7n+34)/4 for n ≡ 1 mod 4, n ≥ 17.
pub fn lemma6_bound(n: u64) -> Result<u64, Error> {
    if n < 17 || n % 4 != 1 {
        return Err(domain("n", n));
    }
    let num = n * n + 34 - 7 * n;
    debug_assert_eq!(num % 4, 0);
    Ok(num / 4)
}

/// Partial degree sum test: the k largest degrees of a planar graph on p
/// vertices sum to at most 2p + 6k − 16, for 3 ≤ k ≤ (p+4)/3.
pub fn bc_inequality_holds(degrees: &DegreeSequence, p: u64, k: u64) -> Result<bool, Error> {
    if k < 3 || 3 * k > p + 4 {
        return Err(domain("k", k));
    }
    let d = degrees.as_slice();
    if (k as usize) > d.len() {
        return Err(domain("k", k));
    }
    let s: u64 = d[..k as usize].iter().map(|&x| x as u64).sum();
    Ok(s + 16 <= 2 * p + 6 * k)
}

/// Every bound that applies at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub bound6: u64,
    pub bound4: Option<u64>,
    pub p_closed: Option<u64>,
    pub table1: Option<u64>,
    pub strongest: u64,
}

pub fn report(n: u64) -> Result<BoundReport, Error> {
    let b6 = bound6(n)?;
    let b4 = bound4(n).ok();
    let strongest = b6.max(b4.unwrap_or(0)).max(n + 1);
    Ok(BoundReport {
        n,
        bound6: b6,
        bound4: b4,
        p_closed: if n >= 14 { b4 } else { None },
        table1: if n <= 13 { Some(p_of(n)?) } else { None },
        strongest,
    })
}
