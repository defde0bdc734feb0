//! Integer plumbing: primality, sieves, budgeted factorization, integer roots.
//!
//! Factorization is trial division up to 10^6 followed by Brent's variant of
//! Pollard rho.  The rho budget is counted in iterations of the cycle map, so
//! callers get deterministic, machine-independent "gave up" behaviour instead
//! of wall-clock flakiness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use std::sync::OnceLock;

use crate::error::Error;
use crate::Result;

/// Upper bound of the trial-division stage.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static SIEVE: OnceLock<Vec<u32>> = OnceLock::new();
    SIEVE.get_or_init(|| {
        let n = TRIAL_DIVISION_BOUND as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::with_capacity(78_498);
        for p in 2..=n {
            if !composite[p] {
                primes.push(p as u32);
                let mut m = p * p;
                while m <= n {
                    composite[m] = true;
                    m += p;
                }
            }
        }
        primes
    })
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, valid for every `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // This base set is a proven witness set for the full 64-bit range.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Floor of the square root, exact integer arithmetic only.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Newton iteration seeded from the bit length; converges monotonically.
    let mut x = 1u128 << (n.ilog2() / 2 + 1);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    x
}

/// `Some(r)` with `r >= 0` and `r*r == n`, if `n` is a perfect square.
pub fn perfect_square_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt_u128(n as u128);
    (r * r == n as u128).then_some(r as i128)
}

/// Big-integer version of [`perfect_square_i128`].
pub fn perfect_square_big(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Outcome of a budgeted factorization.  `cofactor == 1` means complete;
/// otherwise `cofactor` is the composite part the budget did not crack, and
/// it is coprime to every prime already listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorResult {
    pub sign: i8,
    /// `(prime, exponent)` pairs, ascending in the prime.
    pub factors: Vec<(u64, u32)>,
    pub cofactor: u128,
}

impl FactorResult {
    pub fn is_complete(&self) -> bool {
        self.cofactor == 1
    }

    /// Rebuild the signed input; sanity net for tests.
    pub fn reassemble(&self) -> i128 {
        let mut m: i128 = self.sign as i128;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                m *= p as i128;
            }
        }
        m * self.cofactor as i128
    }
}

/// Brent's cycle variant of Pollard rho.  Returns a (not necessarily prime)
/// nontrivial factor of composite odd `n`, or `None` when the iteration
/// budget runs dry.  `budget` is decremented in place.
fn brent_rho(n: u64, budget: &mut u64) -> Option<u64> {
    debug_assert!(n > 1 && !is_prime_u64(n) && n % 2 == 1);
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let step = |v: u64| {
            let t = mul_mod(v, v, n);
            if t + c >= n {
                t + c - n
            } else {
                t + c
            }
        };
        while d == 1 {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = step(x);
            y = step(step(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return Some(d);
        }
        // Cycle collapsed; retry with the next additive constant.
        c += 1;
        if c > 64 {
            return None;
        }
    }
}

fn push_factor(factors: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    factors.push((p, e));
}

/// Fully factor `n` (assumed to have no prime factor below the trial bound)
/// into `factors`, honouring the rho budget.  Returns the unfactored part.
fn factor_hard(n: u64, factors: &mut Vec<(u64, u32)>, budget: &mut u64) -> u128 {
    if n == 1 {
        return 1;
    }
    if is_prime_u64(n) {
        push_factor(factors, n, 1);
        return 1;
    }
    match brent_rho(n, budget) {
        None => n as u128,
        Some(d) => {
            let mut stuck = 1u128;
            // The two halves may share primes; multiplicities are merged below.
            stuck *= factor_hard(d, factors, budget);
            stuck *= factor_hard(n / d, factors, budget);
            stuck
        }
    }
}

/// Factor a nonzero signed integer.  Trial division up to 10^6, then Brent
/// rho on what remains.  Never fails outright: what the budget cannot crack
/// is reported as a composite `cofactor` (also when the survivor exceeds the
/// 64-bit rho range).
pub fn factor_integer(m: i128, budget: u64) -> Result<FactorResult> {
    if m == 0 {
        return Err(Error::ZeroInteger);
    }
    let sign: i8 = if m < 0 { -1 } else { 1 };
    let mut n = m.unsigned_abs();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        let p = p as u128;
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            push_factor(&mut factors, p as u64, e);
        }
    }
    let mut cofactor = 1u128;
    if n > 1 {
        if n <= u64::MAX as u128 {
            if is_prime_u64(n as u64) {
                push_factor(&mut factors, n as u64, 1);
            } else {
                let mut budget = budget;
                cofactor = factor_hard(n as u64, &mut factors, &mut budget);
            }
        } else {
            // Beyond the 64-bit rho range; surrender honestly.
            cofactor = n;
        }
    }
    // Merge duplicates produced by recursive rho splits, keep primes sorted.
    factors.sort_unstable();
    let mut merged: Vec<(u64, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(FactorResult {
        sign,
        factors: merged,
        cofactor,
    })
}

/// Tri-state squarefreeness: `Some(false)` as soon as any square divisor is
/// certain, `Some(true)` only on a complete squarefree factorization, `None`
/// when the budget leaves the question open.
pub fn squarefree(m: i128, budget: u64) -> Result<Option<bool>> {
    let fr = factor_integer(m, budget)?;
    if fr.factors.iter().any(|&(_, e)| e >= 2) {
        return Ok(Some(false));
    }
    if fr.is_complete() {
        return Ok(Some(true));
    }
    // The cofactor is coprime to everything found, but may hide squares.
    if isqrt_u128(fr.cofactor).pow(2) == fr.cofactor {
        return Ok(Some(false));
    }
    Ok(None)
}

/// Nonnegative gcd of two big integers.
pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let g = a.gcd(b);
    if g.is_negative() {
        -g
    } else {
        g
    }
}

/// Euclidean residue in `0..m`, for signed big integers.
pub fn rem_euclid_big(a: &BigInt, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let mut r = a % &m_big;
    if r.is_negative() {
        r += &m_big;
    }
    let digits = r.to_u64_digits().1;
    if digits.is_empty() {
        0
    } else {
        digits[0]
    }
}

/// Serde adaptor writing a `BigInt` as a decimal string — exact at any size.
/// Use as `#[serde(with = "crate::arith::big_decimal")]`.
pub mod big_decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(de)?;
        BigInt::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Like [`big_decimal`], for `Option<BigInt>` (absent as `null`).
pub mod big_decimal_opt {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => ser.serialize_some(&x.to_string()),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<BigInt>, D::Error> {
        match Option::<String>::deserialize(de)? {
            Some(s) => BigInt::from_str(&s)
                .map(Some)
                .map_err(serde::de::Error::custom),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(0));
        assert!(is_prime_u64((1 << 61) - 1)); // Mersenne
        assert!(!is_prime_u64((1 << 61) + 1));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn sieve_matches_known_prefix() {
        assert_eq!(
            primes_up_to(30),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert_eq!(primes_up_to(1).len(), 0);
        assert_eq!(primes_up_to(10_000).len(), 1229);
    }

    #[test]
    fn isqrt_boundaries() {
        assert_eq!(isqrt_u128(0), 0);
        assert_eq!(isqrt_u128(1), 1);
        assert_eq!(isqrt_u128(3), 1);
        assert_eq!(isqrt_u128(4), 2);
        assert_eq!(isqrt_u128(u64::MAX as u128), 4_294_967_295);
        let big = 123_456_789_012_345_678_901_234_567u128;
        let r = isqrt_u128(big);
        assert!(r * r <= big && (r + 1) * (r + 1) > big);
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(perfect_square_i128(0), Some(0));
        assert_eq!(perfect_square_i128(121), Some(11));
        assert_eq!(perfect_square_i128(-4), None);
        assert_eq!(perfect_square_i128(120), None);
        let n: BigInt = BigInt::from(12_345_678_901_234_567_890i128).pow(2);
        assert_eq!(
            perfect_square_big(&n),
            Some(BigInt::from(12_345_678_901_234_567_890i128))
        );
        assert_eq!(perfect_square_big(&(n + 1)), None);
    }

    #[test]
    fn factoring_small_and_signed() {
        let fr = factor_integer(-45, 0).unwrap();
        assert_eq!(fr.sign, -1);
        assert_eq!(fr.factors, vec![(3, 2), (5, 1)]);
        assert!(fr.is_complete());
        assert_eq!(fr.reassemble(), -45);

        let fr = factor_integer(1, 0).unwrap();
        assert_eq!((fr.sign, fr.factors.len(), fr.cofactor), (1, 0, 1));

        assert_eq!(factor_integer(0, 0).unwrap_err(), Error::ZeroInteger);
    }

    #[test]
    fn factoring_needs_rho_beyond_trial_range() {
        // Two primes just above the trial-division bound.
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let n = (p as i128) * (q as i128);
        let fr = factor_integer(n, 1_000_000).unwrap();
        assert_eq!(fr.factors, vec![(p, 1), (q, 1)]);
        assert!(fr.is_complete());

        // With zero budget the semiprime must survive as a cofactor.
        let fr = factor_integer(n, 0).unwrap();
        assert!(!fr.is_complete());
        assert_eq!(fr.cofactor, n as u128);
        assert_eq!(fr.reassemble(), n);
    }

    #[test]
    fn squarefree_tristate() {
        assert_eq!(squarefree(30, 1_000).unwrap(), Some(true));
        assert_eq!(squarefree(-45, 1_000).unwrap(), Some(false));
        assert_eq!(squarefree(4, 0).unwrap(), Some(false));
        // Budget-starved semiprime: honestly undecided...
        let n = 1_000_003i128 * 1_000_033;
        assert_eq!(squarefree(n, 0).unwrap(), None);
        // ...unless the stuck cofactor is itself a visible square.
        assert_eq!(squarefree(1_000_003i128 * 1_000_003, 0).unwrap(), Some(false));
    }

    #[test]
    fn rho_factors_large_semiprime() {
        // 10-digit primes; far outside trial range, easy for Brent rho.
        let p = 2_147_483_647u64; // 2^31 - 1
        let q = 2_147_483_629u64;
        let fr = factor_integer(p as i128 * q as i128, 10_000_000).unwrap();
        assert_eq!(fr.factors, vec![(q, 1), (p, 1)]);
    }

    #[test]
    fn euclidean_reduction_of_negatives() {
        assert_eq!(rem_euclid_big(&BigInt::from(-1), 5), 4);
        assert_eq!(rem_euclid_big(&BigInt::from(-10), 5), 0);
        assert_eq!(rem_euclid_big(&BigInt::from(13), 5), 3);
    }
}
