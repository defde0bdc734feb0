//! Independent brute-force cross-checks backing the test suite and the
//! `verify` subcommand.
//!
//! Everything here trades speed for independence: resultants come from the
//! literal Sylvester determinant, factor searches do exhaustive coefficient
//! scans inside Vieta-style bounds, and irreducibility over `F_q` is trial
//! division by every candidate divisor.  None of these share code with the
//! production routines they are meant to check, so an agreement between the
//! two is evidence rather than tautology.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::isqrt_u128;
use crate::modp::{factor_pattern, ModPoly};
use crate::poly::IntPoly;

/// Resultant via the Sylvester matrix and a fraction-free (Bareiss)
/// determinant.  Convention: `res(p, q) = lc(p)^deg(q) * prod q(alpha_i)`
/// over the roots of `p`, i.e. `res(x-2, x-3) = -1`.
///
/// Panics on zero input; callers only compare nonzero polynomials.
pub fn sylvester_resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let m = p.degree().expect("nonzero p");
    let n = q.degree().expect("nonzero q");
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    // n rows of p's coefficients (descending), then m rows of q's.
    for i in 0..n {
        for j in 0..=m {
            mat[i][i + j] = p.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            mat[n + i][i + j] = q.coeff(n - j);
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant with row pivoting; all divisions are exact by
/// the Bareiss identity (they are minors of the original matrix).
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn reciprocal_quartic(a: i64, b: i64) -> IntPoly {
    IntPoly::from_i64(&[1, a, b, a, 1])
}

fn reciprocal_octic(a: i64, b: i64) -> IntPoly {
    IntPoly::from_i64(&[1, 0, a, 0, b, 0, a, 0, 1])
}

/// Ceiling of sqrt(n) for small nonnegative n.
fn ceil_sqrt(n: i128) -> i128 {
    debug_assert!(n >= 0);
    let r = isqrt_u128(n as u128) as i128;
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Exhaustive factor search for `x^4 + a x^3 + b x^2 + a x + 1`.
///
/// A monic integer factorization forces the constant terms to be a pair of
/// integers multiplying to 1, so both are 1 or both are -1; linear factors
/// can only be `x -+ 1`.  Quadratic splits `(x^2 + p x + s)(x^2 + q x + s)`
/// have `q = a - p` from the cubic coefficient and `|p| <= 2(1 + max(|a|,|b|))`
/// from the Cauchy root bound, so the scan below is complete.
pub fn quartic_factor_brute(a: i64, b: i64) -> Option<(IntPoly, IntPoly)> {
    let w = reciprocal_quartic(a, b);
    for root in [1i64, -1] {
        let lin = IntPoly::from_i64(&[-root, 1]);
        if let Some(rest) = w.exact_div(&lin) {
            return Some((lin, rest));
        }
    }
    let bound = 2 * (1 + (a.unsigned_abs().max(b.unsigned_abs()) as i128));
    for s in [1i128, -1] {
        for p in -bound..=bound {
            let q = a as i128 - p;
            let u = IntPoly::from_coeffs(vec![s.into(), p.into(), 1.into()]);
            let v = IntPoly::from_coeffs(vec![s.into(), q.into(), 1.into()]);
            if &u * &v == w {
                return Some((u, v));
            }
        }
    }
    None
}

/// Exhaustive factor search for `x^8 + a x^6 + b x^4 + a x^2 + 1`.
///
/// Substituting `z = x^2` shows every root satisfies `|x|^2 <= 1 + max(|a|,|b|)`;
/// write `r2` for that bound and `R = ceil(sqrt(r2))`.  Any factorization has
/// a factor of degree at most 4, all constant terms are +-1, and elementary
/// symmetric functions of <= 4 roots give the coefficient ranges scanned
/// below, so this search is complete:
///
/// * degree 1: roots can only be +-1;
/// * degree 2, 3: coefficient scan + exact division;
/// * degree 4 x 4: with `u = x^4 + a1 x^3 + b1 x^2 + c1 x + d` and
///   `v = x^4 + a2 x^3 + b2 x^2 + c2 x + d`, the x^7, x^6, x^1, x^2
///   coefficients force `a2 = -a1`, `b2 = a + a1^2 - b1`, `c2 = -c1`, and
///   `c1^2 = d(b1 + b2) - a`, leaving only `(d, a1 >= 0, b1)` to scan.
pub fn octic_factor_brute(a: i64, b: i64) -> Option<(IntPoly, IntPoly)> {
    let w = reciprocal_octic(a, b);
    let aa = a as i128;
    let r2 = 1 + (a.unsigned_abs().max(b.unsigned_abs()) as i128);
    let r = ceil_sqrt(r2);

    for root in [1i64, -1] {
        let lin = IntPoly::from_i64(&[-root, 1]);
        if let Some(rest) = w.exact_div(&lin) {
            return Some((lin, rest));
        }
    }
    for c in [1i128, -1] {
        for p in -2 * r..=2 * r {
            let u = IntPoly::from_coeffs(vec![c.into(), p.into(), 1.into()]);
            if let Some(rest) = w.exact_div(&u) {
                return Some((u, rest));
            }
        }
    }
    for c in [1i128, -1] {
        for a3 in -3 * r..=3 * r {
            for b3 in -3 * r2..=3 * r2 {
                let u = IntPoly::from_coeffs(vec![c.into(), b3.into(), a3.into(), 1.into()]);
                if let Some(rest) = w.exact_div(&u) {
                    return Some((u, rest));
                }
            }
        }
    }
    for d in [1i128, -1] {
        for a1 in 0..=4 * r {
            for b1 in -6 * r2..=6 * r2 {
                let b2 = aa + a1 * a1 - b1;
                if a1 != 0 && b2 != b1 {
                    continue;
                }
                let c1_sq = d * (b1 + b2) - aa;
                if c1_sq < 0 {
                    continue;
                }
                let c1 = isqrt_u128(c1_sq as u128) as i128;
                if c1 * c1 != c1_sq {
                    continue;
                }
                if c1 != 0 && b2 != b1 {
                    continue;
                }
                for c1 in if c1 == 0 { vec![0] } else { vec![c1, -c1] } {
                    let u = IntPoly::from_coeffs(vec![
                        d.into(),
                        c1.into(),
                        b1.into(),
                        a1.into(),
                        1.into(),
                    ]);
                    let v = IntPoly::from_coeffs(vec![
                        d.into(),
                        (-c1).into(),
                        b2.into(),
                        (-a1).into(),
                        1.into(),
                    ]);
                    if &u * &v == w {
                        return Some((u, v));
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive search for `(S0, S1)` with `S0^2 - x S1^2 = x^4 + a x^3 + b x^2
/// + a x + 1`, `S0 = x^2 + s x + t` monic and `S1 = c x + d`.
///
/// Matching coefficients gives `t^2 = 1`, `c^2 = 2s - a`, `d^2 = 2st - a`,
/// and `s^2 = b - 2t + 2cd`; combining them, `(|s| - 2)^2 <= 2|a| + |b| + 6`,
/// which bounds the whole cube scanned here.  `S1 -> -S1` leaves the square
/// unchanged, so `c >= 0` loses nothing.
pub fn capelli_square_witness_brute(a: i64, b: i64) -> Option<(IntPoly, IntPoly)> {
    let w = reciprocal_quartic(a, b);
    let x = IntPoly::monomial(1);
    let s_bound = 2 + ceil_sqrt(2 * (a.unsigned_abs() as i128) + b.unsigned_abs() as i128 + 6);
    for s in -s_bound..=s_bound {
        let cd_bound = ceil_sqrt(2 * s.abs() + a.unsigned_abs() as i128);
        for t in [1i128, -1] {
            let s0 = IntPoly::from_coeffs(vec![t.into(), s.into(), 1.into()]);
            let s0_sq = &s0 * &s0;
            for c in 0..=cd_bound {
                for d in -cd_bound..=cd_bound {
                    let s1 = IntPoly::from_coeffs(vec![d.into(), c.into()]);
                    if &s0_sq - &(&x * &(&s1 * &s1)) == w {
                        return Some((s0, s1));
                    }
                }
            }
        }
    }
    None
}

/// Irreducibility over `F_q` by trial division against every monic candidate
/// of degree up to `deg(f)/2`.  Constants and zero count as not irreducible.
/// Intended for small fields; panics when the scan would exceed ~2 million
/// candidates.
pub fn modpoly_irreducible_brute(f: &ModPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let q = f.modulus();
    let mut total = 0u64;
    for d in 1..=n / 2 {
        total = total.saturating_add(q.saturating_pow(d as u32));
    }
    assert!(total <= 2_000_000, "brute divisor scan too large: q={q}, deg={n}");
    for d in 1..=n / 2 {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut rem = idx;
            for _ in 0..d {
                coeffs.push(rem % q);
                rem /= q;
            }
            coeffs.push(1);
            let g = ModPoly::new(q, coeffs).unwrap();
            if f.rem(&g).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

/// Number of roots of `f` in `F_q` counted with multiplicity, by repeated
/// synthetic division — no factorization machinery involved.
pub fn count_roots_with_multiplicity(f: &ModPoly) -> u64 {
    let q = f.modulus();
    let mut g = f.monic();
    let mut count = 0u64;
    for z in 0..q {
        while g.degree().unwrap_or(0) > 0 && g.eval(z) == 0 {
            let lin = ModPoly::new(q, vec![(q - z) % q, 1]).unwrap();
            g = g.div_rem(&lin).unwrap().0;
            count += 1;
        }
    }
    count
}

/// Tries to certify that `p` is irreducible over the integers from its
/// factor degree patterns modulo the given primes.
///
/// Any integer factorization reduces mod q to a partition of the mod-q
/// factor multiset (degrees add up, multiplicities included), so the degree
/// of a hypothetical proper factor lies in the subset-sum set of every
/// usable prime's pattern.  If the intersection of those sets contains no
/// value strictly between 0 and deg(p), no proper factor can exist.
///
/// Returns `false` when certification fails — which does *not* mean `p` is
/// reducible (e.g. `x^4 + 1` defeats every prime).  Primes where the leading
/// coefficient vanishes are skipped.
pub fn degree_partition_certifies_irreducible(p: &IntPoly, primes: &[u64], seed: u64) -> bool {
    let Some(deg) = p.degree() else { return false };
    if deg == 0 {
        return false;
    }
    assert!(deg < 120, "degree too large for the bitmask subset-sum");
    let mut intersection = !0u128;
    let mut usable = false;
    for &q in primes {
        let Ok(pattern) = factor_pattern(p, q, seed) else {
            continue;
        };
        let mut sums = 1u128;
        for (d, e) in pattern {
            for _ in 0..e {
                sums |= sums << d;
            }
        }
        usable = true;
        intersection &= sums;
    }
    let middle = (1u128 << deg) - 2;
    usable && intersection & middle == 0
}

/// Squarefree test by full trial division; fine for inputs up to ~10^10.
pub fn squarefree_trial(n: u128) -> bool {
    assert!(n > 0);
    let mut n = n;
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::resultant;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn sylvester_determinant_convention() {
        // res(x-2, x-3) = (x-3) evaluated at 2.
        assert_eq!(sylvester_resultant(&p(&[-2, 1]), &p(&[-3, 1])), BigInt::from(-1));
        assert_eq!(sylvester_resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])), BigInt::from(9));
        // Constant against a quadratic: c^deg.
        assert_eq!(sylvester_resultant(&p(&[7]), &p(&[1, 1, 1])), BigInt::from(49));
        assert_eq!(sylvester_resultant(&p(&[5]), &p(&[3])), BigInt::one());
        // Shared root => 0.
        let shared = &p(&[-1, 1]) * &p(&[1, 1, 1]);
        assert_eq!(sylvester_resultant(&shared, &p(&[-1, 0, 1])), BigInt::zero());
    }

    #[test]
    fn quartic_brute_finds_known_splits() {
        // a=1, b=2: (x^2+1)(x^2+x+1).
        let (u, v) = quartic_factor_brute(1, 2).unwrap();
        assert_eq!(&u * &v, p(&[1, 1, 2, 1, 1]));
        assert!(u.degree().unwrap() >= 1 && v.degree().unwrap() >= 1);
        // a=-2, b=2 has 1 as a root.
        let (u, v) = quartic_factor_brute(-2, 2).unwrap();
        assert_eq!(&u * &v, p(&[1, -2, 2, -2, 1]));
        assert_eq!(u, p(&[-1, 1]));
        // Irreducible examples stay irreducible.
        assert_eq!(quartic_factor_brute(1, 1), None);
        assert_eq!(quartic_factor_brute(3, 1), None);
        assert_eq!(quartic_factor_brute(2, 1), None);
    }

    #[test]
    fn octic_brute_finds_known_splits() {
        // a=b=1 splits into the 5th and 10th cyclotomic polynomials.
        let (u, v) = octic_factor_brute(1, 1).unwrap();
        let phi5 = p(&[1, 1, 1, 1, 1]);
        let phi10 = p(&[1, -1, 1, -1, 1]);
        assert!(
            (u == phi5 && v == phi10) || (u == phi10 && v == phi5),
            "unexpected split {u} * {v}"
        );
        // a=1, b=5: a quartic pair with skew-reciprocal factors.
        let (u, v) = octic_factor_brute(1, 5).unwrap();
        assert_eq!(&u * &v, p(&[1, 0, 1, 0, 5, 0, 1, 0, 1]));
        assert_eq!(u.degree(), Some(4));
        // a=b=5 is irreducible.
        assert_eq!(octic_factor_brute(5, 5), None);
    }

    #[test]
    fn capelli_witness_on_the_quartic_cyclotomic() {
        let (s0, s1) = capelli_square_witness_brute(1, 1).unwrap();
        assert_eq!(s0, p(&[1, 1, 1]));
        assert_eq!(s1, p(&[1, 1]));
        let x = IntPoly::monomial(1);
        assert_eq!(&(&s0 * &s0) - &(&x * &(&s1 * &s1)), p(&[1, 1, 1, 1, 1]));
        assert_eq!(capelli_square_witness_brute(5, 5), None);
    }

    #[test]
    fn brute_irreducibility_over_small_fields() {
        let mp = |q: u64, c: &[u64]| ModPoly::new(q, c.to_vec()).unwrap();
        assert!(modpoly_irreducible_brute(&mp(2, &[1, 1, 1, 1, 1])));
        assert!(!modpoly_irreducible_brute(&mp(11, &[1, 1, 1, 1, 1])));
        assert!(!modpoly_irreducible_brute(&mp(2, &[1, 0, 1])));
        assert!(modpoly_irreducible_brute(&mp(2, &[1, 1, 1])));
        assert!(!modpoly_irreducible_brute(&mp(5, &[3])));
    }

    #[test]
    fn root_counting_with_multiplicity() {
        let mp = |q: u64, c: &[u64]| ModPoly::new(q, c.to_vec()).unwrap();
        // (x+1)^4 over F_3.
        assert_eq!(count_roots_with_multiplicity(&mp(3, &[1, 1, 0, 1, 1])), 4);
        assert_eq!(count_roots_with_multiplicity(&mp(11, &[1, 1, 1, 1, 1])), 4);
        assert_eq!(count_roots_with_multiplicity(&mp(2, &[1, 1, 1, 1, 1])), 0);
        // x(x+1)^2 over F_5.
        assert_eq!(count_roots_with_multiplicity(&mp(5, &[0, 1, 2, 1])), 3);
    }

    #[test]
    fn degree_partition_certificates() {
        // Irreducible mod 2 certifies on its own.
        assert!(degree_partition_certifies_irreducible(
            &p(&[1, 1, 1, 1, 1]),
            &[2, 3],
            0
        ));
        // x^4+1 is irreducible over Z but splits mod every prime, so the
        // certificate must honestly fail.
        assert!(!degree_partition_certifies_irreducible(
            &p(&[1, 0, 0, 0, 1]),
            &[3, 5, 7, 11, 13, 17, 19],
            0
        ));
        // Skipping a leading-coefficient-killing prime still certifies.
        assert!(degree_partition_certifies_irreducible(
            &p(&[1, 1, 2]),
            &[2, 5],
            0
        ));
    }

    #[test]
    fn squarefree_trial_division() {
        assert!(squarefree_trial(1));
        assert!(squarefree_trial(30));
        assert!(!squarefree_trial(45));
        assert!(!squarefree_trial(49));
        assert!(squarefree_trial(2 * 3 * 5 * 7 * 11));
    }

    #[test]
    fn oracle_agrees_with_subresultant_on_structured_inputs() {
        // Reciprocal quartics against their derivatives — the shapes the
        // discriminant path exercises.
        for (a, b) in [(1i64, 1i64), (3, 1), (-7, 13), (5, 5), (2, 9)] {
            let f = reciprocal_quartic(a, b);
            let fd = f.derivative();
            assert_eq!(resultant(&f, &fd).unwrap(), sylvester_resultant(&f, &fd));
        }
    }
}
