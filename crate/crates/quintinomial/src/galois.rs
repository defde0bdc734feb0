//! Galois-group classification for the quartic and octic layers.
//!
//! Everything here runs under the residue hypothesis `A ≡ B ≡ 1 (mod 4)`,
//! where the quartic `F[2,A,B]` is automatically irreducible (neither `W1`
//! nor `W2` can vanish mod 4, and `W3 ≡ 5 (mod 8)` is never a square).  Its
//! Galois group is then `C4` exactly when `W1·W2·W3` is a perfect square and
//! `D4` otherwise.  One level up, `F[3,A,B]` has the full wreath product
//! `C2² ≀ C2` of order 32 exactly when none of `W1`, `W2`, `W1·W2`,
//! `W1·W3`, `W2·W3`, `W1·W2·W3` is a perfect square; any square among those
//! cuts the group down (reducible members of the octic family always trip
//! this, since they force `W1` or `W2` to be `(D∓2)²`).
//!
//! [`frobenius_fingerprint`] gives independent finite-field evidence: for an
//! unramified prime `q`, the factor degrees of `F[2,A,B] mod q` are the cycle
//! type of Frobenius, and the type `1+1+2` exists in `D4` but not in `C4`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{perfect_square_big, primes_up_to};
use crate::error::Error;
use crate::modp::factor_pattern;
use crate::quin::{QuinInvariants, QuinParams};
use crate::Result;

/// Classification labels.  `NotWreath` means "provably a proper subgroup of
/// the order-32 wreath product `C2² ≀ C2`", not a specific identification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaloisLabel {
    C4,
    D4,
    WreathC2sqC2,
    NotWreath,
    /// Parameters outside `A ≡ B ≡ 1 (mod 4)`, where these criteria are silent.
    OutOfScope,
}

/// One square test backing a label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareCheck {
    pub expr: String,
    #[serde(with = "crate::arith::big_decimal")]
    pub value: BigInt,
    pub is_square: bool,
}

/// A label together with the square tests that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisClass {
    pub label: GaloisLabel,
    pub evidence: Vec<SquareCheck>,
}

fn in_scope(a: i64, b: i64) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroParameter);
    }
    Ok(a.rem_euclid(4) == 1 && b.rem_euclid(4) == 1)
}

fn check(expr: &str, value: BigInt) -> SquareCheck {
    let is_square = perfect_square_big(&value).is_some();
    SquareCheck {
        expr: expr.to_string(),
        value,
        is_square,
    }
}

/// Galois group of the quartic `F[2,A,B]` for `A ≡ B ≡ 1 (mod 4)`.
pub fn quartic_galois(a: i64, b: i64) -> Result<GaloisClass> {
    if !in_scope(a, b)? {
        return Ok(GaloisClass {
            label: GaloisLabel::OutOfScope,
            evidence: vec![],
        });
    }
    let inv = QuinInvariants::new(a, b);
    let product = BigInt::from(inv.w1) * BigInt::from(inv.w2) * BigInt::from(inv.w3);
    let row = check("W1*W2*W3", product);
    let label = if row.is_square {
        GaloisLabel::C4
    } else {
        GaloisLabel::D4
    };
    Ok(GaloisClass {
        label,
        evidence: vec![row],
    })
}

/// Whether the octic `F[3,A,B]` has the full `C2² ≀ C2` group of order 32,
/// for `A ≡ B ≡ 1 (mod 4)`.
pub fn octic_wreath(a: i64, b: i64) -> Result<GaloisClass> {
    if !in_scope(a, b)? {
        return Ok(GaloisClass {
            label: GaloisLabel::OutOfScope,
            evidence: vec![],
        });
    }
    let inv = QuinInvariants::new(a, b);
    let w1 = BigInt::from(inv.w1);
    let w2 = BigInt::from(inv.w2);
    let w3 = BigInt::from(inv.w3);
    let evidence = vec![
        check("W1", w1.clone()),
        check("W2", w2.clone()),
        check("W1*W2", &w1 * &w2),
        check("W1*W3", &w1 * &w3),
        check("W2*W3", &w2 * &w3),
        check("W1*W2*W3", &w1 * &w2 * &w3),
    ];
    let label = if evidence.iter().any(|c| c.is_square) {
        GaloisLabel::NotWreath
    } else {
        GaloisLabel::WreathC2sqC2
    };
    Ok(GaloisClass { label, evidence })
}

/// Factor-degree statistics of `F[2,A,B]` over small prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    /// Number of unramified primes actually sampled.
    pub scanned: u64,
    /// First prime whose factor degrees are `[1,1,2]`, if any — a
    /// certificate that the group is not `C4`.
    pub d4_witness: Option<u64>,
    /// Sorted factor-degree multisets with their frequencies.
    pub patterns: Vec<(Vec<usize>, u64)>,
}

impl FrobeniusReport {
    /// `D4` when a `[1,1,2]` pattern was witnessed; otherwise `C4`, with the
    /// caveat that the latter is statistical — its strength is [`Self::scanned`].
    pub fn label(&self) -> GaloisLabel {
        if self.d4_witness.is_some() {
            GaloisLabel::D4
        } else {
            GaloisLabel::C4
        }
    }
}

/// Samples factor patterns of the quartic modulo all primes up to
/// `prime_bound` not dividing its discriminant.
pub fn frobenius_fingerprint(
    a: i64,
    b: i64,
    prime_bound: u64,
    seed: u64,
) -> Result<FrobeniusReport> {
    let params = QuinParams::new(2, a, b)?;
    let inv = params.invariants();
    let disc = BigInt::from(inv.w1)
        * BigInt::from(inv.w2)
        * BigInt::from(inv.w3)
        * BigInt::from(inv.w3);
    let t = crate::quin::build(&params)?;
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut scanned = 0;
    let mut d4_witness = None;
    for q in primes_up_to(prime_bound) {
        if (&disc % BigInt::from(q)).is_zero() {
            continue;
        }
        let degrees: Vec<usize> = factor_pattern(&t, q, seed)?
            .into_iter()
            .map(|(deg, mult)| {
                debug_assert_eq!(mult, 1, "unramified primes give squarefree reductions");
                deg
            })
            .collect();
        if d4_witness.is_none() && degrees == [1, 1, 2] {
            d4_witness = Some(q);
        }
        *counts.entry(degrees).or_insert(0) += 1;
        scanned += 1;
    }
    Ok(FrobeniusReport {
        scanned,
        d4_witness,
        patterns: counts.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_quartic_is_cyclic() {
        let g = quartic_galois(1, 1).unwrap();
        assert_eq!(g.label, GaloisLabel::C4);
        assert_eq!(g.evidence[0].value, BigInt::from(25));
    }

    #[test]
    fn generic_quartics_are_dihedral() {
        // (5,1): W1·W2·W3 = -7·13·29 < 0.
        let g = quartic_galois(5, 1).unwrap();
        assert_eq!(g.label, GaloisLabel::D4);
        assert_eq!(g.evidence[0].value, BigInt::from(-7 * 13 * 29));
        assert_eq!(quartic_galois(1, 9).unwrap().label, GaloisLabel::D4);
    }

    #[test]
    fn wrong_residues_are_out_of_scope() {
        assert_eq!(quartic_galois(2, 1).unwrap().label, GaloisLabel::OutOfScope);
        assert_eq!(quartic_galois(1, 3).unwrap().label, GaloisLabel::OutOfScope);
        assert_eq!(octic_wreath(3, 1).unwrap().label, GaloisLabel::OutOfScope);
        assert!(quartic_galois(0, 1).is_err());
    }

    #[test]
    fn octic_wreath_frozen_values() {
        // (9,9): W = (-7, 29, 53), no combination is a square.
        let g = octic_wreath(9, 9).unwrap();
        assert_eq!(g.label, GaloisLabel::WreathC2sqC2);
        assert_eq!(g.evidence.len(), 6);
        assert!(g.evidence.iter().all(|c| !c.is_square));
        assert_eq!(octic_wreath(5, 5).unwrap().label, GaloisLabel::WreathC2sqC2);
    }

    #[test]
    fn squares_cut_the_octic_group_down() {
        // W1(1,1) = 1 is a square.
        let g = octic_wreath(1, 1).unwrap();
        assert_eq!(g.label, GaloisLabel::NotWreath);
        assert!(g.evidence[0].is_square);
        // Products of two quartics land here too: (9,25) = F[2,1,5]·F[2,-1,5]
        // forces W1 = (D-2)^2 = 9.
        let g = octic_wreath(9, 25).unwrap();
        assert_eq!(g.label, GaloisLabel::NotWreath);
        assert!(g.evidence[0].is_square);
        assert!(crate::quin::octic_family_membership(9, 25)
            .unwrap()
            .is_some());
    }

    #[test]
    fn square_test_agrees_with_frobenius_on_a_grid() {
        // Independent oracles: the W-product square test versus factor
        // patterns over primes up to 500.  D4 certificates are exact; C4
        // agreement means no transposition pattern ever appeared.
        for a in (-23..=25i64).step_by(4) {
            for b in (-23..=25i64).step_by(4) {
                let by_squares = quartic_galois(a, b).unwrap().label;
                let by_patterns = frobenius_fingerprint(a, b, 500, 0).unwrap().label();
                assert_eq!(by_squares, by_patterns, "({a},{b})");
            }
        }
    }

    #[test]
    fn frobenius_separates_the_two_quartic_groups() {
        // D4 case: a split prime pattern [1,1,2] must show up quickly.
        let rep = frobenius_fingerprint(5, 1, 200, 0).unwrap();
        assert!(rep.d4_witness.is_some());
        // C4 case: every pattern is a cycle type of a 4-cycle's powers.
        let rep = frobenius_fingerprint(1, 1, 200, 0).unwrap();
        assert_eq!(rep.d4_witness, None);
        assert!(rep.scanned > 30);
        for (pattern, _) in &rep.patterns {
            assert!(
                matches!(pattern.as_slice(), [1, 1, 1, 1] | [2, 2] | [4]),
                "unexpected C4 pattern {pattern:?}"
            );
        }
    }
}
