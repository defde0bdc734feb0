//! Squarefree values of integer polynomials at prime arguments.
//!
//! The input is a polynomial `G` given in factored form, each factor
//! irreducible of degree at most 3 and pairwise non-associate.  The questions
//! answered here are local and statistical:
//!
//! * `rho(ell²)` — how many unit residues `z` mod `ell²` have `ell² | G(z)`.
//!   When that count hits `ell(ell-1)`, every sufficiently large prime
//!   argument lands on a multiple of `ell²` and squarefree values die out: a
//!   local obstruction.
//! * [`obstruction_scan`] — the finitely many primes that could possibly
//!   obstruct, then the ones that actually do.  An obstruction at `ell`
//!   forces every unit residue to be a root of `G` mod `ell` of multiplicity
//!   at least 2 (expand `G(r + ell·t)`: killing all lifts needs
//!   `ell | G'(r)` too), so `2(ell-1)` never exceeds the number of linear
//!   factors `N_ell`, and `N_ell` never exceeds `deg G`.
//! * [`cg_truncated`] — the truncated product `∏ (1 - rho/(ell(ell-1)))`
//!   over primes up to a cutoff: the conjectural density constant for
//!   squarefree `G(p)`.
//! * [`ng_count`] — the actual count of primes `p ≤ X` with `G(p)`
//!   squarefree, decided by factoring each factor's value exactly and
//!   merging exponents.  A value the budget cannot crack is reported as
//!   undecided, never guessed.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{
    factor_integer, is_prime_u64, isqrt_u128, mul_mod, perfect_square_big, primes_up_to,
    rem_euclid_big,
};
use crate::error::Error;
use crate::modp::mod_reduce;
use crate::poly::IntPoly;
use crate::Result;

/// Largest prime accepted by the quadratic-time local counters.
pub const MAX_LOCAL_PRIME: u64 = 1000;

const VALIDATION_BUDGET: u64 = 1 << 20;

/// A product of validated irreducible factors of degree at most 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredPoly {
    factors: Vec<IntPoly>,
    product: IntPoly,
}

impl FactoredPoly {
    /// Validates and assembles a factored polynomial.  Each factor must be
    /// primitive, irreducible over the rationals, of degree 1 to 3, and no
    /// two factors may agree up to sign.
    pub fn new(factors: Vec<IntPoly>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("no factors given".into()));
        }
        for f in &factors {
            let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
            if deg == 0 || deg > 3 {
                return Err(Error::InvalidInput(format!(
                    "factor {f} has degree {deg}, want 1..=3"
                )));
            }
            let (content, _) = f.content_and_primitive();
            if content != BigInt::from(1) {
                return Err(Error::InvalidInput(format!(
                    "factor {f} has content {content}, want primitive"
                )));
            }
            if !irreducible_small(f)? {
                return Err(Error::InvalidInput(format!("factor {f} is reducible")));
            }
        }
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let neg = factors[j].scalar_mul(&BigInt::from(-1));
                if factors[i] == factors[j] || factors[i] == neg {
                    return Err(Error::InvalidInput(format!(
                        "factors {} and {} are associates",
                        factors[i], factors[j]
                    )));
                }
            }
        }
        let mut product = IntPoly::from_i64(&[1]);
        for f in &factors {
            product = &product * f;
        }
        Ok(FactoredPoly { factors, product })
    }

    pub fn factors(&self) -> &[IntPoly] {
        &self.factors
    }

    pub fn product(&self) -> &IntPoly {
        &self.product
    }

    pub fn degree(&self) -> usize {
        self.product.degree().expect("product of nonzero factors")
    }
}

/// Irreducibility over `Q` for degree 1..=3: degree 1 always; degree 2 by the
/// discriminant; degree 3 by exhausting rational-root candidates.
fn irreducible_small(f: &IntPoly) -> Result<bool> {
    let deg = f.degree().expect("validated nonzero");
    match deg {
        1 => Ok(true),
        2 => {
            let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
            let disc = &b * &b - BigInt::from(4) * &a * &c;
            Ok(perfect_square_big(&disc).is_none())
        }
        3 => {
            if f.coeff(0).is_zero() {
                return Ok(false); // root at 0
            }
            let lead = divisors_of(&f.coeff(3))?;
            let tail = divisors_of(&f.coeff(0))?;
            // A rational root p/q in lowest terms needs p | constant term
            // and q | leading coefficient; test the homogenized value.
            for p in &tail {
                for q in &lead {
                    for sign in [1i64, -1] {
                        let p = p * BigInt::from(sign);
                        let mut val = BigInt::zero();
                        for (i, c) in f.coeffs().iter().enumerate() {
                            val += c * p.pow(i as u32) * q.pow((deg - i) as u32);
                        }
                        if val.is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        _ => unreachable!("degree validated to 1..=3"),
    }
}

fn divisors_of(n: &BigInt) -> Result<Vec<BigInt>> {
    let n: i128 = n
        .try_into()
        .map_err(|_| Error::InvalidInput("coefficient too large to validate".into()))?;
    let fr = factor_integer(n, VALIDATION_BUDGET)?;
    if !fr.is_complete() {
        return Err(Error::InvalidInput(format!(
            "cannot certify irreducibility: {n} has an unfactored part"
        )));
    }
    let mut divs = vec![BigInt::from(1)];
    for (p, e) in fr.factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::from(1);
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= BigInt::from(p);
            }
        }
        divs = next;
    }
    Ok(divs)
}

/// Number of unit residues `z` mod `ell²` with `ell² | G(z)`, by direct
/// enumeration.  `ell` must be prime and at most [`MAX_LOCAL_PRIME`].
pub fn rho_ell2(g: &IntPoly, ell: u64) -> Result<u64> {
    if !is_prime_u64(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell > MAX_LOCAL_PRIME {
        return Err(Error::InvalidInput(format!(
            "local counting is quadratic in the prime; {ell} exceeds {MAX_LOCAL_PRIME}"
        )));
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = ell * ell;
    let coeffs: Vec<u64> = g.coeffs().iter().map(|c| rem_euclid_big(c, m)).collect();
    let mut count = 0;
    for z in 0..m {
        if z % ell == 0 {
            continue;
        }
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = (mul_mod(acc, z, m) + c) % m;
        }
        if acc == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether every unit residue mod `ell²` is a root of `G` — the local
/// obstruction to squarefree values at prime arguments.
pub fn has_local_obstruction(g: &IntPoly, ell: u64) -> Result<bool> {
    Ok(rho_ell2(g, ell)? == ell * (ell - 1))
}

/// Linear factors of `G` mod `ell`, counted with multiplicity.  Degree drop
/// from a vanishing leading coefficient is fine; a reduction that vanishes
/// identically is not (the inputs here are primitive, so it cannot).
pub fn linear_factor_count(g: &IntPoly, ell: u64) -> Result<u64> {
    let mut h = mod_reduce(g, ell)?;
    if h.is_zero() {
        return Err(Error::pre("reduction vanishes identically"));
    }
    let mut count = 0;
    for r in 0..ell {
        let x = crate::modp::ModPoly::monomial(ell, 1);
        let root = x.sub(&crate::modp::ModPoly::one(ell).scalar_mul(r))?;
        while h.degree().is_some_and(|d| d >= 1) && h.eval(r) == 0 {
            let (quot, rem) = h.div_rem(&root)?;
            debug_assert!(rem.is_zero());
            h = quot;
            count += 1;
        }
    }
    Ok(count)
}

/// Outcome of the finite obstruction search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionScan {
    /// Primes passing the coarse degree filter `2·ell ≤ deg G + 2`.
    pub candidates: Vec<u64>,
    /// Candidates that also satisfy `2·ell ≤ N_ell + 2`.
    pub survivors: Vec<u64>,
    /// Survivors where the full count confirms an obstruction.
    pub obstructed: Vec<u64>,
}

/// Finds every prime with a local obstruction.  Completeness comes from the
/// multiplicity argument in the module docs: obstructions force
/// `2(ell-1) ≤ N_ell ≤ deg G`.
pub fn obstruction_scan(g: &FactoredPoly) -> Result<ObstructionScan> {
    let deg = g.degree() as u64;
    let candidates = primes_up_to((deg + 2) / 2);
    let mut survivors = Vec::new();
    let mut obstructed = Vec::new();
    for &ell in &candidates {
        if 2 * ell > linear_factor_count(g.product(), ell)? + 2 {
            continue;
        }
        survivors.push(ell);
        if has_local_obstruction(g.product(), ell)? {
            obstructed.push(ell);
        }
    }
    Ok(ObstructionScan {
        candidates,
        survivors,
        obstructed,
    })
}

/// The density constant truncated at `trunc`, kept exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgEstimate {
    pub trunc: u64,
    #[serde(with = "crate::arith::big_decimal")]
    pub numerator: BigInt,
    #[serde(with = "crate::arith::big_decimal")]
    pub denominator: BigInt,
    /// 12 fractional digits, truncated toward zero.
    pub decimal: String,
    /// True when some factor vanished, i.e. an obstruction lies below `trunc`.
    pub vanishes: bool,
}

impl CgEstimate {
    pub fn value(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator.clone())
    }
}

fn decimal_digits(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = (r.numer() * &scale) / r.denom();
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let s = format!("{:0>width$}", s, width = digits as usize + 1);
    let split = s.len() - digits as usize;
    format!(
        "{}{}.{}",
        if neg { "-" } else { "" },
        &s[..split],
        &s[split..]
    )
}

/// `∏ (1 - rho(ell²)/(ell(ell-1)))` over primes `ell ≤ trunc`.
pub fn cg_truncated(g: &FactoredPoly, trunc: u64) -> Result<CgEstimate> {
    if trunc > MAX_LOCAL_PRIME {
        return Err(Error::InvalidInput(format!(
            "truncation {trunc} exceeds {MAX_LOCAL_PRIME}"
        )));
    }
    let mut value = BigRational::from_integer(BigInt::from(1));
    for ell in primes_up_to(trunc) {
        let rho = rho_ell2(g.product(), ell)?;
        let unit_count = ell * (ell - 1);
        value *= BigRational::new(
            BigInt::from(unit_count - rho),
            BigInt::from(unit_count),
        );
    }
    Ok(CgEstimate {
        trunc,
        numerator: value.numer().clone(),
        denominator: value.denom().clone(),
        decimal: decimal_digits(&value, 12),
        vanishes: value.is_zero(),
    })
}

/// Whether `G(z)` is squarefree; `None` when the factoring budget gave out
/// before a verdict.  `G(z) = 0` counts as not squarefree.
pub fn squarefree_at(g: &FactoredPoly, z: i64, budget: u64) -> Result<Option<bool>> {
    let zb = BigInt::from(z);
    let mut exponents: BTreeMap<u64, u32> = BTreeMap::new();
    let mut cofactors: Vec<u128> = Vec::new();
    for f in g.factors() {
        let value = f.eval(&zb);
        if value.is_zero() {
            return Ok(Some(false));
        }
        let value: i128 = match (&value).try_into() {
            Ok(v) => v,
            Err(_) => return Ok(None), // beyond factoring reach anyway
        };
        let fr = factor_integer(value, budget)?;
        for (p, e) in fr.factors {
            *exponents.entry(p).or_insert(0) += e;
        }
        if fr.cofactor != 1 {
            cofactors.push(fr.cofactor);
        }
    }
    // Pull known primes out of the cofactors, promote cofactors that become
    // provably prime or square, and re-merge until stable.
    loop {
        let mut changed = false;
        let known: Vec<u64> = exponents.keys().copied().collect();
        for c in &mut cofactors {
            for &p in &known {
                while *c % p as u128 == 0 {
                    *c /= p as u128;
                    *exponents.get_mut(&p).unwrap() += 1;
                    changed = true;
                }
            }
            if *c != 1 {
                if let Ok(small) = u64::try_from(*c) {
                    if is_prime_u64(small) {
                        *exponents.entry(small).or_insert(0) += 1;
                        *c = 1;
                        changed = true;
                        continue;
                    }
                }
                let root = isqrt_u128(*c);
                if root * root == *c {
                    // A square cofactor is decisive regardless of its primes.
                    return Ok(Some(false));
                }
            }
        }
        cofactors.retain(|&c| c != 1);
        if !changed {
            break;
        }
    }
    if exponents.values().any(|&e| e >= 2) {
        return Ok(Some(false));
    }
    // Distinct factor values sharing an unfactored prime still square it.
    for i in 0..cofactors.len() {
        for j in i + 1..cofactors.len() {
            if num_integer::gcd(cofactors[i], cofactors[j]) > 1 {
                return Ok(Some(false));
            }
        }
    }
    if cofactors.is_empty() {
        Ok(Some(true))
    } else {
        Ok(None)
    }
}

/// Tally of squarefree values over prime arguments up to `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgReport {
    pub x: u64,
    pub primes_tested: u64,
    pub squarefree: u64,
    pub not_squarefree: u64,
    pub undecided: u64,
}

/// Counts primes `p ≤ x` with `G(p)` squarefree.
pub fn ng_count(g: &FactoredPoly, x: u64, budget: u64) -> Result<NgReport> {
    let mut report = NgReport {
        x,
        primes_tested: 0,
        squarefree: 0,
        not_squarefree: 0,
        undecided: 0,
    };
    for p in primes_up_to(x) {
        report.primes_tested += 1;
        let z = i64::try_from(p).map_err(|_| Error::Overflow("prime argument"))?;
        match squarefree_at(g, z, budget)? {
            Some(true) => report.squarefree += 1,
            Some(false) => report.not_squarefree += 1,
            None => report.undecided += 1,
        }
    }
    Ok(report)
}

/// Everything the density pipeline knows about one polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub factors: Vec<IntPoly>,
    pub degree: usize,
    pub scan: ObstructionScan,
    pub cg: CgEstimate,
    pub ng: Option<NgReport>,
}

/// Runs the scan, the truncated constant, and (optionally) the prime-value
/// count in one go.
pub fn density_report(
    g: &FactoredPoly,
    trunc: u64,
    x: Option<u64>,
    budget: u64,
) -> Result<DensityReport> {
    Ok(DensityReport {
        factors: g.factors().to_vec(),
        degree: g.degree(),
        scan: obstruction_scan(g)?,
        cg: cg_truncated(g, trunc)?,
        ng: x.map(|x| ng_count(g, x, budget)).transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::squarefree_trial;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn fp(factors: &[&[i64]]) -> FactoredPoly {
        FactoredPoly::new(factors.iter().map(|c| p(c)).collect()).unwrap()
    }

    #[test]
    fn validation_accepts_and_rejects() {
        // (4t-1)(12t+5)(16t²-8t+5) is fine.
        fp(&[&[-1, 4], &[5, 12], &[5, -8, 16]]);
        // Content 2.
        assert!(FactoredPoly::new(vec![p(&[2, 2])]).is_err());
        // Square discriminant.
        assert!(FactoredPoly::new(vec![p(&[1, 2, 1])]).is_err());
        // Cubic with rational root 1.
        assert!(FactoredPoly::new(vec![p(&[-1, 0, 0, 1])]).is_err());
        // Cubic with root 1/2.
        assert!(FactoredPoly::new(vec![p(&[-1, 0, 2, 4])]).is_err());
        // Irreducible cubic passes.
        FactoredPoly::new(vec![p(&[-2, 0, 0, 1])]).unwrap();
        // Degree 4 factor.
        assert!(FactoredPoly::new(vec![p(&[1, 0, 0, 0, 1])]).is_err());
        // Associates t-1 and 1-t.
        assert!(FactoredPoly::new(vec![p(&[-1, 1]), p(&[1, -1])]).is_err());
        // Constants.
        assert!(FactoredPoly::new(vec![p(&[3])]).is_err());
        assert!(FactoredPoly::new(vec![]).is_err());
    }

    #[test]
    fn rho_frozen_values() {
        // (t-1)(t+1)(t²+1) = t⁴-1: fourth roots of unity mod 25.
        let g = fp(&[&[-1, 1], &[1, 1], &[1, 0, 1]]);
        assert_eq!(rho_ell2(g.product(), 5).unwrap(), 4);
        // (t-1)(t+1) mod 4: both units are roots — a genuine obstruction.
        let g = fp(&[&[-1, 1], &[1, 1]]);
        assert_eq!(rho_ell2(g.product(), 2).unwrap(), 2);
        assert!(has_local_obstruction(g.product(), 2).unwrap());
        let scan = obstruction_scan(&g).unwrap();
        assert_eq!(scan.candidates, vec![2]);
        assert_eq!(scan.obstructed, vec![2]);
    }

    #[test]
    fn scan_clears_the_guiding_example() {
        // (4t-1)(12t+5)(16t²-8t+5): constant mod 2, one linear factor mod 3.
        let g = fp(&[&[-1, 4], &[5, 12], &[5, -8, 16]]);
        assert_eq!(linear_factor_count(g.product(), 2).unwrap(), 0);
        assert_eq!(linear_factor_count(g.product(), 3).unwrap(), 1);
        let scan = obstruction_scan(&g).unwrap();
        assert_eq!(scan.candidates, vec![2, 3]);
        assert!(scan.survivors.is_empty());
        assert!(scan.obstructed.is_empty());
    }

    #[test]
    fn truncated_constant() {
        // G = t-1 at L=2: rho(4) counts only z ≡ 1, so the factor is 1/2.
        let g = fp(&[&[-1, 1]]);
        let cg = cg_truncated(&g, 2).unwrap();
        assert_eq!(cg.numerator, BigInt::from(1));
        assert_eq!(cg.denominator, BigInt::from(2));
        assert!(cg.decimal.starts_with("0.5000"));
        assert!(!cg.vanishes);
        // An obstructed G collapses to zero.
        let g = fp(&[&[-1, 1], &[1, 1]]);
        let cg = cg_truncated(&g, 10).unwrap();
        assert!(cg.vanishes);
        assert_eq!(cg.numerator, BigInt::from(0));
    }

    #[test]
    fn prime_value_counts() {
        // G = t: every prime is squarefree.
        let g = fp(&[&[0, 1]]);
        let r = ng_count(&g, 10, 1 << 16).unwrap();
        assert_eq!((r.primes_tested, r.squarefree), (4, 4));
        // G = t+2: values 4, 5, 7, 9.
        let g = fp(&[&[2, 1]]);
        let r = ng_count(&g, 10, 1 << 16).unwrap();
        assert_eq!(r.squarefree, 2);
        assert_eq!(r.not_squarefree, 2);
        // G = t-5 vanishes at 5, which counts against.
        let g = fp(&[&[-5, 1]]);
        let r = ng_count(&g, 10, 1 << 16).unwrap();
        assert_eq!(r.squarefree, 3);
        assert_eq!(r.not_squarefree, 1);
        assert_eq!(r.undecided, 0);
    }

    #[test]
    fn squarefree_verdicts_match_trial_division() {
        let g = fp(&[&[-1, 1], &[1, 1], &[1, 0, 1]]);
        for z in 2..200i64 {
            let got = squarefree_at(&g, z, 1 << 16).unwrap();
            let value = g.product().eval(&BigInt::from(z));
            let expect = squarefree_trial(u128::try_from(value.abs()).unwrap());
            assert_eq!(got, Some(expect), "z = {z}");
        }
    }

    #[test]
    fn exhausted_budget_says_so() {
        // 1000003 · 1000033 sits beyond trial division, and a zero budget
        // cannot split it.
        let g = fp(&[&[1_000_036_000_098, 1]]);
        assert_eq!(squarefree_at(&g, 1, 0).unwrap(), None);
        assert_eq!(squarefree_at(&g, 1, 1 << 22).unwrap(), Some(true));
    }

    #[test]
    fn shared_cofactor_primes_are_decisive() {
        // Both values are multiples of the same uncracked semiprime
        // 1000003·1000033, so its primes appear squared in the product even
        // though neither value factors within budget.
        let c = 1_000_036_000_099i64;
        let g = fp(&[&[0, 1], &[c, 1]]);
        assert_eq!(squarefree_at(&g, c, 0).unwrap(), Some(false));
    }

    #[test]
    fn report_roundtrips_through_json() {
        let g = fp(&[&[-1, 4], &[5, 12], &[5, -8, 16]]);
        let rep = density_report(&g, 20, Some(100), 1 << 16).unwrap();
        let js = serde_json::to_string(&rep).unwrap();
        let back: DensityReport = serde_json::from_str(&js).unwrap();
        assert_eq!(rep, back);
        assert!(rep.ng.unwrap().squarefree > 0);
    }
}
