//! Lucas and Fibonacci numbers and the Pell equation `X² - 5Y² = -4`.
//!
//! The positive solutions of that Pell equation are exactly the odd-index
//! pairs `(L_{2n-1}, F_{2n-1})`, and they parametrize the quartic family
//! members whose `W3` invariant is 5 times a square: [`ab_from_pell`] turns
//! the `n`-th solution into parameters `(A, B)` with `A ≡ B ≡ 1 (mod 4)`,
//! `|A| = L_{2n-1}` and `B = 5·F_{2n-1} - 4`.  Two of every three indices
//! produce a valid pair; the sign of `A` alternates with `n mod 3`.
//!
//! [`pqr_residual`] evaluates the two quartic forms in `(P, Q, R) =
//! (gcd(W1,W3), gcd(W1,W2), gcd(W2,W3))` whose integer zeros pin down the
//! locus compatible with a monogenic cyclic quartic; [`curve_tables_selfcheck`]
//! re-verifies the frozen integral points on the associated elliptic and
//! hyperelliptic models.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::perfect_square_big;
use crate::error::Error;
use crate::Result;

/// Index cap for the sequence evaluators; beyond this the numbers are far
/// outside anything the rest of the crate can consume.
pub const MAX_INDEX: i64 = 10_000;

fn seq(n: i64, f0: i64, f1: i64, negation_parity: u32) -> Result<BigInt> {
    if n.abs() > MAX_INDEX {
        return Err(Error::InvalidInput(format!(
            "index {n} exceeds {MAX_INDEX} in magnitude"
        )));
    }
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::from(f0), BigInt::from(f1));
    for _ in 0..m {
        let next = &a + &b;
        a = b;
        b = next;
    }
    // a now holds the |n|-th term; fold the sign rule for negative indices.
    if n < 0 && (m + negation_parity as u64) % 2 == 1 {
        a = -a;
    }
    Ok(a)
}

/// Lucas number `L_n` (`L_0 = 2`, `L_1 = 1`), any sign of `n` via
/// `L_{-n} = (-1)^n L_n`.
pub fn lucas(n: i64) -> Result<BigInt> {
    seq(n, 2, 1, 0)
}

/// Fibonacci number `F_n` (`F_0 = 0`, `F_1 = 1`), any sign of `n` via
/// `F_{-n} = (-1)^{n+1} F_n`.
pub fn fibonacci(n: i64) -> Result<BigInt> {
    seq(n, 0, 1, 1)
}

/// Recomputes the identity scaffolding used elsewhere, for `|n| ≤ bound`:
/// recurrences, negation rules, `5F_n = 2L_{n+1} - L_n`, and
/// `L_{2n} + 2(-1)^n = L_n²`.
pub fn verify_lf_identities(bound: i64) -> Result<bool> {
    let bound = bound.min(MAX_INDEX / 2);
    for n in -bound..=bound {
        let (l, f) = (lucas(n)?, fibonacci(n)?);
        if lucas(n + 1)? + lucas(n - 1)? != BigInt::from(5) * &f {
            return Ok(false);
        }
        if BigInt::from(5) * &f != BigInt::from(2) * lucas(n + 1)? - &l {
            return Ok(false);
        }
        let sign = if n.rem_euclid(2) == 0 { 2 } else { -2 };
        if lucas(2 * n)? + BigInt::from(sign) != &l * &l {
            return Ok(false);
        }
        if lucas(-n)? != if n.rem_euclid(2) == 0 { l.clone() } else { -l } {
            return Ok(false);
        }
        if fibonacci(-n)? != if n.rem_euclid(2) == 0 { -f.clone() } else { f } {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `n`-th positive solution `(X, Y) = (L_{2n-1}, F_{2n-1})` of
/// `X² - 5Y² = -4`, for `n ≥ 1`.
pub fn pell_solution(n: i64) -> Result<(BigInt, BigInt)> {
    if n < 1 {
        return Err(Error::InvalidInput(format!(
            "solution index must be positive, got {n}"
        )));
    }
    let x = lucas(2 * n - 1)?;
    let y = fibonacci(2 * n - 1)?;
    debug_assert_eq!(
        &x * &x - BigInt::from(5) * &y * &y,
        BigInt::from(-4),
        "Pell relation"
    );
    Ok((x, y))
}

/// Quintinomial parameters attached to the `n`-th Pell solution, or `None`
/// for the third of indices (`n ≡ 2 mod 3`) where no admissible pair exists.
/// The returned pair always satisfies `A ≡ B ≡ 1 (mod 4)`.
pub fn ab_from_pell(n: i64) -> Result<Option<(BigInt, BigInt)>> {
    let (x, y) = pell_solution(n)?;
    let b = BigInt::from(5) * &y - BigInt::from(4);
    let a = match n.rem_euclid(3) {
        0 => -x,
        1 => x,
        _ => return Ok(None),
    };
    debug_assert_eq!(crate::arith::rem_euclid_big(&a, 4), 1);
    debug_assert_eq!(crate::arith::rem_euclid_big(&b, 4), 1);
    // (B+4)/5 = Y, so the pair inherits the Pell relation in A.
    debug_assert_eq!(&a * &a - BigInt::from(5) * &y * &y, BigInt::from(-4));
    Ok(Some((a, b)))
}

/// Which sign pattern of `(A, B)` a residual form describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignPair {
    /// `A > 0, B > 0`.
    PosPos,
    /// `A < 0, B < 0`.
    NegNeg,
}

/// The quartic form in `(P, Q, R)` that vanishes exactly on gcd triples
/// compatible with a monogenic cyclic quartic of the given sign pattern.
pub fn pqr_residual(kind: SignPair, p: i128, q: i128, r: i128) -> BigInt {
    let (p, q, r) = (BigInt::from(p), BigInt::from(q), BigInt::from(r));
    let base = &p * &p * &q * &q - BigInt::from(2) * &p * &q * &q * &r + &q * &q * &r * &r
        - BigInt::from(16) * &p * &r
        + BigInt::from(256);
    match kind {
        SignPair::PosPos => {
            base - BigInt::from(32) * &p * &q - BigInt::from(32) * &q * &r
        }
        SignPair::NegNeg => {
            base + BigInt::from(32) * &p * &q + BigInt::from(32) * &q * &r
        }
    }
}

/// Frozen integral points on the two auxiliary curves: `y² = R³ - 2R² + 65R`
/// and `y² = (A+9)(A+1)(A²+6A+25)`.  Returns false if any table entry fails
/// to verify.
pub fn curve_tables_selfcheck() -> bool {
    let cubic_points: [(i64, i64); 8] = [
        (0, 0),
        (1, 8),
        (5, 20),
        (13, 52),
        (16, 68),
        (45, 300),
        (65, 520),
        (1573, 62348),
    ];
    for (r, y) in cubic_points {
        let r = BigInt::from(r);
        let rhs = &r * &r * &r - BigInt::from(2) * &r * &r + BigInt::from(65) * &r;
        if rhs != BigInt::from(y) * BigInt::from(y) {
            return false;
        }
    }
    let quartic_a: [i64; 5] = [-1, 0, -9, -11, 4];
    for a in quartic_a {
        let a = BigInt::from(a);
        let rhs = (&a + BigInt::from(9))
            * (&a + BigInt::from(1))
            * (&a * &a + BigInt::from(6) * &a + BigInt::from(25));
        if rhs.is_negative() || perfect_square_big(&rhs).is_none() {
            return false;
        }
    }
    true
}
