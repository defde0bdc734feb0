//! The reciprocal quintinomial family and its exact invariants.
//!
//! Throughout, `F[n,A,B](x) = x^(2^n) + A x^(3·2^(n-2)) + B x^(2^(n-1))
//! + A x^(2^(n-2)) + 1` with `n >= 2` and `A·B != 0`.  Substituting `x^2`
//! walks down the tower: `F[n,A,B](x) = F[n-1,A,B](x^2)`, so the quartic
//! `F[2,A,B]` controls everything above it.
//!
//! Three integers drive the whole theory:
//!
//! ```text
//!     W1 = B + 2 - 2A = F[2,A,B](-1)
//!     W2 = B + 2 + 2A = F[2,A,B](1)
//!     W3 = A^2 - 4B + 8
//! ```
//!
//! The discriminant of `F[n,A,B]` has the closed form
//! `2^(2^n (n-2)) · (W1 · W2 · W3^2)^(2^(n-2))`, implemented in
//! [`disc_formula`] and cross-checked against the subresultant discriminant
//! in the test suite.
//!
//! Irreducibility decisions return explicit factorizations as certificates:
//! a verdict of `Reducible` always carries two nontrivial factors whose
//! product is re-verified against the constructed polynomial, so a wrong
//! branch can not survive its own constructor.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::isqrt_u128;
use crate::error::Error;
use crate::poly::IntPoly;
use crate::Result;

/// Degree cap for constructing `F[n,A,B]` and its discriminant (degree 4096).
pub const MAX_BUILD_N: u32 = 12;
/// Degree cap for irreducibility decisions (degree 32).
pub const MAX_IRREDUCIBILITY_N: u32 = 5;

/// Parameters `(n, A, B)` of a family member; `n >= 2`, `A·B != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuinParams {
    pub n: u32,
    pub a: i64,
    pub b: i64,
}

impl QuinParams {
    pub fn new(n: u32, a: i64, b: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::pre("n must be at least 2"));
        }
        if a == 0 || b == 0 {
            return Err(Error::ZeroParameter);
        }
        Ok(QuinParams { n, a, b })
    }

    pub fn invariants(&self) -> QuinInvariants {
        QuinInvariants::new(self.a, self.b)
    }

    /// The polynomial itself; degree `2^n`, capped at [`MAX_BUILD_N`].
    pub fn poly(&self) -> Result<IntPoly> {
        build(self)
    }
}

impl std::fmt::Display for QuinParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F[{},{},{}]", self.n, self.a, self.b)
    }
}

/// The invariants `W1, W2, W3` of a parameter pair, together with the
/// pairwise gcds `P = gcd(W1, W3)`, `Q = gcd(W1, W2)`, `R = gcd(W2, W3)`
/// (taken nonnegative).  `i128` is wide enough for any `i64` inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinInvariants {
    pub w1: i128,
    pub w2: i128,
    pub w3: i128,
    pub p: i128,
    pub q: i128,
    pub r: i128,
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

impl QuinInvariants {
    pub fn new(a: i64, b: i64) -> Self {
        let (a, b) = (a as i128, b as i128);
        let w1 = b + 2 - 2 * a;
        let w2 = b + 2 + 2 * a;
        let w3 = a * a - 4 * b + 8;
        QuinInvariants {
            w1,
            w2,
            w3,
            p: gcd_i128(w1, w3),
            q: gcd_i128(w1, w2),
            r: gcd_i128(w2, w3),
        }
    }
}

/// Constructs `F[n,A,B]`; errors past [`MAX_BUILD_N`].
pub fn build(params: &QuinParams) -> Result<IntPoly> {
    let QuinParams { n, a, b } = *params;
    if n > MAX_BUILD_N {
        return Err(Error::DegreeCapExceeded(n, MAX_BUILD_N));
    }
    let quarter = 1usize << (n - 2);
    let mut coeffs = vec![BigInt::from(0); 4 * quarter + 1];
    coeffs[0] = BigInt::from(1);
    coeffs[quarter] = BigInt::from(a);
    coeffs[2 * quarter] = BigInt::from(b);
    coeffs[3 * quarter] = BigInt::from(a);
    coeffs[4 * quarter] = BigInt::from(1);
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Closed-form discriminant `2^(2^n (n-2)) · (W1 W2 W3^2)^(2^(n-2))`.
///
/// For `n = 2` this is just `W1 · W2 · W3^2`.  The test suite compares this
/// formula against the subresultant discriminant of the constructed
/// polynomial across parameter grids.
pub fn disc_formula(params: &QuinParams) -> Result<BigInt> {
    if params.n > MAX_BUILD_N {
        return Err(Error::DegreeCapExceeded(params.n, MAX_BUILD_N));
    }
    let inv = params.invariants();
    let w123 = BigInt::from(inv.w1) * BigInt::from(inv.w2) * BigInt::from(inv.w3).pow(2);
    let outer = 1u32 << (params.n - 2);
    let two_exp = (1u64 << params.n) * (params.n as u64 - 2);
    Ok(BigInt::from(2).pow(u32::try_from(two_exp).unwrap()) * w123.pow(outer))
}

/// How a reducibility certificate was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    /// `x - root` divides (only `root = ±1` can occur).
    LinearRoot { root: i64 },
    /// Quartic splits as `(x^2 + p x + s)(x^2 + q x + s)`.
    QuadraticSplit,
    /// Octic member of the reciprocal-pair family: `F[2,C,D] · F[2,-C,D]`.
    FamilyCase1 { c: i64, d: i64 },
    /// Octic member of the skew-pair family: `G[C,D] · G[-C,D]` with
    /// `G[C,D] = x^4 + C x^3 + D x^2 - C x + 1`.
    FamilyCase2 { c: i64, d: i64 },
    /// `F[2,A,B] = S0^2 - x S1^2`, which splits every `F[n,A,B]`, `n >= 3`.
    CapelliCond1 { s0: IntPoly, s1: IntPoly },
    /// `F[3,A,B] = S0^2 - x S1^2`, which splits every `F[n,A,B]`, `n >= 4`.
    CapelliCond2 { s0: IntPoly, s1: IntPoly },
}

/// A verified nontrivial factorization.  Constructed only through
/// [`ReducibilityCert::checked`], which re-multiplies the factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityCert {
    pub kind: CertKind,
    pub factors: (IntPoly, IntPoly),
}

impl ReducibilityCert {
    fn checked(kind: CertKind, f: IntPoly, g: IntPoly, target: &IntPoly) -> Self {
        let cert = ReducibilityCert { kind, factors: (f, g) };
        assert!(cert.verifies(target), "certificate does not multiply back");
        cert
    }

    /// True when both factors are nonconstant and multiply to `target`.
    pub fn verifies(&self, target: &IntPoly) -> bool {
        self.factors.0.degree().unwrap_or(0) >= 1
            && self.factors.1.degree().unwrap_or(0) >= 1
            && &(&self.factors.0 * &self.factors.1) == target
    }

    /// Lifts a certificate for `F[m,A,B]` to one for `F[m',A,B]` by
    /// substituting `x^(2^(m'-m))` into both factors.
    fn lift(self, pow: usize, target: &IntPoly) -> Self {
        if pow == 1 {
            return self;
        }
        ReducibilityCert::checked(
            self.kind,
            self.factors.0.compose_x_pow(pow),
            self.factors.1.compose_x_pow(pow),
            target,
        )
    }
}

/// Outcome of an irreducibility decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Irreducibility {
    Irreducible,
    Reducible(ReducibilityCert),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

fn perfect_square_root_i128(m: i128) -> Option<i128> {
    if m < 0 {
        return None;
    }
    let r = isqrt_u128(m as u128) as i128;
    (r * r == m).then_some(r)
}

/// Decides irreducibility of the quartic `x^4 + a x^3 + b x^2 + a x + 1`
/// over the integers, with a certificate when reducible.
///
/// The complete case analysis: `W2 = 0` gives the root 1 and `W1 = 0` the
/// root -1; otherwise any factorization must be a quadratic pair with equal
/// constant terms `s = ±1` (their product is the constant term 1).  For
/// `s = 1` the pair is `(x^2 + p x + 1)(x^2 + q x + 1)` with `p + q = a`,
/// `pq = b - 2`, so `p, q = (a ∓ y)/2` where `y^2 = W3` — an integer split
/// exists iff `W3` is a perfect square with `y ≡ a (mod 2)`.  For `s = -1`
/// the cubic coefficient forces `a = 0` (excluded whenever the caller comes
/// from the family, but handled here for completeness): the split exists
/// iff `-(b + 2)` is a perfect square.
pub fn quartic_irreducible(a: i64, b: i64) -> Irreducibility {
    let target = reciprocal_quartic(a, b);
    let inv = QuinInvariants::new(a, b);
    if inv.w2 == 0 {
        let f = IntPoly::from_i64(&[-1, 1]);
        let g = target.exact_div(&f).expect("1 is a root");
        return Irreducibility::Reducible(ReducibilityCert::checked(
            CertKind::LinearRoot { root: 1 },
            f,
            g,
            &target,
        ));
    }
    if inv.w1 == 0 {
        let f = IntPoly::from_i64(&[1, 1]);
        let g = target.exact_div(&f).expect("-1 is a root");
        return Irreducibility::Reducible(ReducibilityCert::checked(
            CertKind::LinearRoot { root: -1 },
            f,
            g,
            &target,
        ));
    }
    if let Some(y) = perfect_square_root_i128(inv.w3) {
        if (y - a as i128).rem_euclid(2) == 0 {
            let p = (a as i128 + y) / 2;
            let q = (a as i128 - y) / 2;
            let f = IntPoly::from_coeffs(vec![1.into(), p.into(), 1.into()]);
            let g = IntPoly::from_coeffs(vec![1.into(), q.into(), 1.into()]);
            return Irreducibility::Reducible(ReducibilityCert::checked(
                CertKind::QuadraticSplit,
                f,
                g,
                &target,
            ));
        }
    }
    if a == 0 {
        if let Some(p) = perfect_square_root_i128(-(b as i128 + 2)) {
            let f = IntPoly::from_coeffs(vec![(-1).into(), p.into(), 1.into()]);
            let g = IntPoly::from_coeffs(vec![(-1).into(), (-p).into(), 1.into()]);
            return Irreducibility::Reducible(ReducibilityCert::checked(
                CertKind::QuadraticSplit,
                f,
                g,
                &target,
            ));
        }
    }
    Irreducibility::Irreducible
}

fn reciprocal_quartic(a: i64, b: i64) -> IntPoly {
    IntPoly::from_i64(&[1, a, b, a, 1])
}

fn f_quartic(c: i128, d: i128) -> IntPoly {
    IntPoly::from_coeffs(vec![1.into(), c.into(), d.into(), c.into(), 1.into()])
}

fn g_quartic(c: i128, d: i128) -> IntPoly {
    IntPoly::from_coeffs(vec![1.into(), (-c).into(), d.into(), c.into(), 1.into()])
}

/// Decides whether the octic `F[3,A,B]` with `A ≡ B ≡ 1 (mod 4)` belongs to
/// one of the two quartic-pair families — which, under that residue
/// hypothesis, is exactly when it is reducible.
///
/// Both families are parametrized by an odd `C >= 1` with `D = (A + C^2)/2`
/// (an odd integer, since `A ≡ 1 (mod 4)`):
///
/// * case 1: `B = D^2 + 2 - 2C^2`, factors `F[2,C,D] · F[2,-C,D]`;
/// * case 2: `B = D^2 + 2 + 2C^2`, factors `G[C,D] · G[-C,D]`.
///
/// A hit forces `(A + C^2)^2 <= 4|B| + 8 + 8C^2`, which bounds the scan:
/// beyond `C = max(8, sqrt(2|A|), (32|B| + 64)^(1/4))` the left side
/// outgrows the right.
pub fn octic_family_membership(a: i64, b: i64) -> Result<Option<ReducibilityCert>> {
    if a.rem_euclid(4) != 1 || b.rem_euclid(4) != 1 {
        return Err(Error::ResidueHypothesis(a, b));
    }
    let target = build(&QuinParams { n: 3, a, b })?;
    let (big_a, big_b) = (a as i128, b as i128);
    let c_max = {
        let from_a = isqrt_u128(2 * big_a.unsigned_abs()) as i128 + 1;
        let from_b = isqrt_u128(isqrt_u128(32 * big_b.unsigned_abs() + 64) as u128) as i128 + 1;
        8.max(from_a).max(from_b)
    };
    let mut c = 1i128;
    while c <= c_max {
        let d = (big_a + c * c) / 2;
        if let Some(d_sq) = d.checked_mul(d) {
            if d_sq + 2 - 2 * c * c == big_b {
                let (cf, df) = (c as i64, i64::try_from(d).expect("D fits i64 on a hit"));
                return Ok(Some(ReducibilityCert::checked(
                    CertKind::FamilyCase1 { c: cf, d: df },
                    f_quartic(c, d),
                    f_quartic(-c, d),
                    &target,
                )));
            }
            if d_sq + 2 + 2 * c * c == big_b {
                let (cf, df) = (c as i64, i64::try_from(d).expect("D fits i64 on a hit"));
                return Ok(Some(ReducibilityCert::checked(
                    CertKind::FamilyCase2 { c: cf, d: df },
                    g_quartic(c, d),
                    g_quartic(-c, d),
                    &target,
                )));
            }
        }
        c += 2;
    }
    Ok(None)
}

/// Searches for `(S0, S1)` with `F[2,A,B] = S0^2 - x S1^2`, `S0 = x^2 + s x
/// + t` monic, `S1 = c x + d`.  Such a witness splits `F[n,A,B]` for every
/// `n >= 3`.
///
/// Matching coefficients gives `t^2 = 1`, `c^2 = 2s - A`, `d^2 = 2st - A`
/// and `B = s^2 + 2t - 2cd`; combining them shows `(|s| - 2)^2 <= 2|A| +
/// |B| + 6`, so the scan over `|s| <= |A| + |B| + 4` is complete (and `c >=
/// 0` loses nothing, since `S1 -> -S1` fixes the square).
pub fn capelli_cond1(a: i64, b: i64) -> Option<(IntPoly, IntPoly)> {
    let (big_a, big_b) = (a as i128, b as i128);
    let bound = big_a.unsigned_abs() as i128 + big_b.unsigned_abs() as i128 + 4;
    for s in -bound..=bound {
        for t in [1i128, -1] {
            let Some(c) = perfect_square_root_i128(2 * s - big_a) else {
                continue;
            };
            let Some(d0) = perfect_square_root_i128(2 * s * t - big_a) else {
                continue;
            };
            for d in if d0 == 0 { vec![0] } else { vec![d0, -d0] } {
                if s * s + 2 * t - 2 * c * d == big_b {
                    let s0 = IntPoly::from_coeffs(vec![t.into(), s.into(), 1.into()]);
                    let s1 = IntPoly::from_coeffs(vec![d.into(), c.into()]);
                    debug_assert_eq!(
                        &(&s0 * &s0) - &(&IntPoly::monomial(1) * &(&s1 * &s1)),
                        reciprocal_quartic(a, b)
                    );
                    return Some((s0, s1));
                }
            }
        }
    }
    None
}

/// Searches for `(S0, S1)` with `F[3,A,B] = S0^2 - x S1^2`, `S0` monic of
/// degree 4, `deg S1 <= 3`.  Such a witness splits `F[n,A,B]` for every
/// `n >= 4`.  Returns `None` immediately for odd `A`: writing `S0 = x^4 +
/// a3 x^3 + ...`, the x^7 coefficient forces `a3 = 2u^2` even, and then the
/// x^6 coefficient `a3^2 + 2b3 - 2fg = A` is even.
///
/// With `S0 = x^4 + a3 x^3 + b3 x^2 + c3 x + e` and `S1 = f x^3 + g x^2 +
/// h x + i`, coefficient matching forces `f = 2u`, `a3 = 2u^2`, `g = 2v`,
/// `i = 2w`, `c3 = 2 e w^2`, `e = ±1`, and
///
/// ```text
///     b3 = A/2 - 2u^4 + 4uv                    (x^6)
///     2u·h = -2v^2 + 8u^3 v + K,  K = c3 + u^2 A - 4u^6   (x^5)
///     4w·v^2 + (8eu^2 - 16wu^3)·v + (4uw^4 + ueA - 4eu^5 - uA - 2wK) = 0  (x^2)
/// ```
///
/// so for each `(e, u, w)` the remaining unknown `v` solves a quadratic and
/// everything else is determined; the degenerate `u = 0` and `w = 0` cases
/// get their own linear treatments.  Every candidate is verified against
/// the full polynomial identity before being returned.
///
/// The loop bounds come from Mahler measure: a witness makes
/// `S0(y^2) ± y S1(y^2)` a monic degree-8 factor of `F[4,A,B]`, whose
/// Mahler measure is at most `m = ||F[2,A,B]||_2 = sqrt(2A^2 + B^2 + 2)`,
/// so `|a3| <= 28m`, `|g| <= 56m` and `|i| <= 8m` bound `u, v, w`.
pub fn capelli_cond2(a: i64, b: i64) -> Option<(IntPoly, IntPoly)> {
    if a % 2 != 0 {
        return None;
    }
    let (big_a, big_b) = (a as i128, b as i128);
    let target = build(&QuinParams { n: 3, a, b }).expect("n = 3 is under the cap");
    let mahler = isqrt_u128(
        (2 * big_a * big_a + big_b * big_b + 2) as u128,
    ) as i128
        + 1;
    let verify = |s0: &IntPoly, s1: &IntPoly| -> bool {
        let squares = s0 * s0;
        let skew = &IntPoly::monomial(1) * &(s1 * s1);
        &squares - &skew == target
    };
    let candidate = |e: i128, u: i128, v: i128, w: i128, h: i128| -> (IntPoly, IntPoly) {
        let b3 = big_a / 2 - 2 * u.pow(4) + 4 * u * v;
        let s0 = IntPoly::from_coeffs(vec![
            e.into(),
            (2 * e * w * w).into(),
            b3.into(),
            (2 * u * u).into(),
            1.into(),
        ]);
        let s1 = IntPoly::from_coeffs(vec![(2 * w).into(), h.into(), (2 * v).into(), (2 * u).into()]);
        (s0, s1)
    };

    // u = 0: the x^5 and x^1 equations force e = 1, c3 = 2v^2, |w| = v, and
    // the x^4 equation pins h linearly.
    let b3 = big_a / 2;
    for v in 1..=28 * mahler {
        for w in [v, -v] {
            let num = b3 * b3 + 2 - big_b;
            if num % (4 * v) != 0 {
                continue;
            }
            let h = num / (4 * v);
            let (s0, s1) = candidate(1, 0, v, w, h);
            if verify(&s0, &s1) {
                return Some((s0, s1));
            }
        }
    }
    let u_max = isqrt_u128((14 * mahler) as u128) as i128 + 1;
    for e in [1i128, -1] {
        for u in 1..=u_max {
            let c3 = |w: i128| 2 * e * w * w;
            // w = 0: x^2 forces 2b3·e = A, then b3's definition pins v.
            {
                let b3 = e * big_a / 2;
                let num_v = b3 - big_a / 2 + 2 * u.pow(4);
                if num_v % (4 * u) == 0 {
                    let v = num_v / (4 * u);
                    let k = c3(0) + u * u * big_a - 4 * u.pow(6);
                    let num_h = -2 * v * v + 8 * u.pow(3) * v + k;
                    if num_h % (2 * u) == 0 {
                        let (s0, s1) = candidate(e, u, v, 0, num_h / (2 * u));
                        if verify(&s0, &s1) {
                            return Some((s0, s1));
                        }
                    }
                }
            }
            for w in 1..=4 * mahler {
                for w in [w, -w] {
                    let k = c3(w) + u * u * big_a - 4 * u.pow(6);
                    let alpha = 4 * w;
                    let beta = 8 * e * u * u - 16 * w * u.pow(3);
                    let gamma =
                        4 * u * w.pow(4) + u * e * big_a - 4 * e * u.pow(5) - u * big_a - 2 * w * k;
                    let Some(disc) = beta
                        .checked_mul(beta)
                        .and_then(|b2| (4 * alpha).checked_mul(gamma).map(|t| (b2, t)))
                        .and_then(|(b2, t)| b2.checked_sub(t))
                    else {
                        continue;
                    };
                    let Some(root) = perfect_square_root_i128(disc) else {
                        continue;
                    };
                    for v in [(-beta + root), (-beta - root)] {
                        if v % (2 * alpha) != 0 {
                            continue;
                        }
                        let v = v / (2 * alpha);
                        let num_h = -2 * v * v + 8 * u.pow(3) * v + k;
                        if num_h % (2 * u) != 0 {
                            continue;
                        }
                        let (s0, s1) = candidate(e, u, v, w, num_h / (2 * u));
                        if verify(&s0, &s1) {
                            return Some((s0, s1));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Decides irreducibility of `F[n,A,B]` over the integers.
///
/// * `n = 2`: the complete quartic case analysis.
/// * `n = 3` with `A ≡ B ≡ 1 (mod 4)`: reducible exactly when the octic
///   belongs to one of the two quartic-pair families.
/// * otherwise (up to [`MAX_IRREDUCIBILITY_N`]): if the quartic splits, the
///   split lifts through `x -> x^(2^(n-2))`; if not, `F[n,A,B]` is reducible
///   exactly when one of the two square-witness conditions holds
///   ([`capelli_cond1`]; [`capelli_cond2`] additionally for `n >= 4`).
pub fn irreducible(params: &QuinParams) -> Result<Irreducibility> {
    let QuinParams { n, a, b } = *params;
    if n < 2 || a == 0 || b == 0 {
        return Err(Error::pre("parameters must satisfy n >= 2 and A·B != 0"));
    }
    if n > MAX_IRREDUCIBILITY_N {
        return Err(Error::DegreeCapExceeded(n, MAX_IRREDUCIBILITY_N));
    }
    if n == 2 {
        return Ok(quartic_irreducible(a, b));
    }
    if n == 3 && a.rem_euclid(4) == 1 && b.rem_euclid(4) == 1 {
        return Ok(match octic_family_membership(a, b)? {
            Some(cert) => Irreducibility::Reducible(cert),
            None => Irreducibility::Irreducible,
        });
    }
    let target = build(params)?;
    if let Irreducibility::Reducible(cert) = quartic_irreducible(a, b) {
        return Ok(Irreducibility::Reducible(cert.lift(1 << (n - 2), &target)));
    }
    if let Some((s0, s1)) = capelli_cond1(a, b) {
        // F[n] = S0(y)^2 - y S1(y)^2 at y = x^(2^(n-2)), a difference of
        // squares since y is itself a square.
        let pow = 1usize << (n - 2);
        let half = IntPoly::monomial(1 << (n - 3));
        let lifted0 = s0.compose_x_pow(pow);
        let lifted1 = &half * &s1.compose_x_pow(pow);
        return Ok(Irreducibility::Reducible(ReducibilityCert::checked(
            CertKind::CapelliCond1 { s0, s1 },
            &lifted0 - &lifted1,
            &lifted0 + &lifted1,
            &target,
        )));
    }
    if n >= 4 {
        if let Some((s0, s1)) = capelli_cond2(a, b) {
            let pow = 1usize << (n - 3);
            let half = IntPoly::monomial(1 << (n - 4));
            let lifted0 = s0.compose_x_pow(pow);
            let lifted1 = &half * &s1.compose_x_pow(pow);
            return Ok(Irreducibility::Reducible(ReducibilityCert::checked(
                CertKind::CapelliCond2 { s0, s1 },
                &lifted0 - &lifted1,
                &lifted0 + &lifted1,
                &target,
            )));
        }
    }
    Ok(Irreducibility::Irreducible)
}
