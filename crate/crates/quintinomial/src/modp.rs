//! Polynomials over a prime field `F_q` and their complete factorization.
//!
//! Coefficients are `u64` residues stored low-to-high, always reduced and
//! trimmed; moduli must pass 64-bit deterministic Miller–Rabin.  Factorization
//! is the classical pipeline: squarefree decomposition (with the p-th-root
//! twist for inseparable inputs), distinct-degree splitting, then
//! Cantor–Zassenhaus equal-degree splitting — the probabilistic stage draws
//! from a ChaCha generator seeded by the caller, so identical seeds give
//! identical transcripts.  For `q = 2`, where the (q^d-1)/2 exponent trick is
//! unavailable, splitting uses the additive trace map instead.
//!
//! Output is canonical regardless of seed: factors are monic, sorted by
//! degree then lexicographic coefficient order.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime_u64, mul_mod, pow_mod, rem_euclid_big};
use crate::error::Error;
use crate::poly::IntPoly;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModPoly {
    q: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Builds a polynomial over `F_q`, reducing the coefficients.  The
    /// modulus must be prime (deterministically checked, 64-bit range).
    pub fn new(q: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(q) {
            return Err(Error::NotPrime(q));
        }
        let mut p = ModPoly {
            q,
            coeffs: coeffs.into_iter().map(|c| c % q).collect(),
        };
        p.trim();
        Ok(p)
    }

    fn raw(q: u64, coeffs: Vec<u64>) -> Self {
        let mut p = ModPoly { q, coeffs };
        p.trim();
        p
    }

    pub fn zero(q: u64) -> Self {
        ModPoly { q, coeffs: vec![] }
    }

    pub fn one(q: u64) -> Self {
        ModPoly { q, coeffs: vec![1] }
    }

    pub fn monomial(q: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = 1;
        ModPoly { q, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.q;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.q) + c) % self.q;
        }
        acc
    }

    fn check_same_field(&self, rhs: &ModPoly) -> Result<()> {
        if self.q != rhs.q {
            return Err(Error::ModulusMismatch(self.q, rhs.q));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &ModPoly) -> Result<ModPoly> {
        self.check_same_field(rhs)?;
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] = c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = (coeffs[i] + c) % self.q;
        }
        Ok(ModPoly::raw(self.q, coeffs))
    }

    pub fn sub(&self, rhs: &ModPoly) -> Result<ModPoly> {
        self.check_same_field(rhs)?;
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] = c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = (coeffs[i] + self.q - c) % self.q;
        }
        Ok(ModPoly::raw(self.q, coeffs))
    }

    pub fn mul(&self, rhs: &ModPoly) -> Result<ModPoly> {
        self.check_same_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(ModPoly::zero(self.q));
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.q)) % self.q;
            }
        }
        Ok(ModPoly::raw(self.q, coeffs))
    }

    pub fn scalar_mul(&self, k: u64) -> ModPoly {
        let k = k % self.q;
        ModPoly::raw(
            self.q,
            self.coeffs.iter().map(|&c| mul_mod(c, k, self.q)).collect(),
        )
    }

    fn inv_scalar(&self, k: u64) -> u64 {
        // q is prime, so Fermat inversion is fine.
        pow_mod(k, self.q - 2, self.q)
    }

    pub fn monic(&self) -> ModPoly {
        match self.lc() {
            0 | 1 => self.clone(),
            l => self.scalar_mul(self.inv_scalar(l)),
        }
    }

    /// Field division with remainder.
    pub fn div_rem(&self, d: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.check_same_field(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = d.degree().unwrap();
        let Some(m) = self.degree() else {
            return Ok((ModPoly::zero(self.q), ModPoly::zero(self.q)));
        };
        if m < n {
            return Ok((ModPoly::zero(self.q), self.clone()));
        }
        let inv_lead = self.inv_scalar(d.lc());
        let mut r = self.coeffs.clone();
        let mut q_coeffs = vec![0u64; m - n + 1];
        for k in (0..=m - n).rev() {
            let c = mul_mod(r[n + k], inv_lead, self.q);
            if c == 0 {
                continue;
            }
            q_coeffs[k] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let sub = mul_mod(c, dc, self.q);
                r[i + k] = (r[i + k] + self.q - sub) % self.q;
            }
        }
        Ok((ModPoly::raw(self.q, q_coeffs), ModPoly::raw(self.q, r)))
    }

    pub fn rem(&self, d: &ModPoly) -> Result<ModPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.q);
        }
        ModPoly::raw(
            self.q,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, (i as u64) % self.q, self.q))
                .collect(),
        )
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, rhs: &ModPoly) -> Result<ModPoly> {
        self.check_same_field(rhs)?;
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^exp mod m`, square-and-multiply over the bits of `exp`.
    pub fn pow_mod(&self, exp: &BigUint, m: &ModPoly) -> Result<ModPoly> {
        self.check_same_field(m)?;
        let mut result = ModPoly::one(self.q);
        let mut base = self.rem(m)?;
        for i in 0..exp.bits() {
            if exp.bit(i) {
                result = result.mul(&base)?.rem(m)?;
            }
            base = base.mul(&base)?.rem(m)?;
        }
        Ok(result)
    }

    /// Sort key: degree first, then ascending-coefficient lex order.
    fn cmp_key(&self, other: &ModPoly) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'de> Deserialize<'de> for ModPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            q: u64,
            coeffs: Vec<u64>,
        }
        let raw = Raw::deserialize(de)?;
        ModPoly::new(raw.q, raw.coeffs).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, _) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduce an integer polynomial mod a prime, mapping coefficients into `[0, q)`.
pub fn mod_reduce(p: &IntPoly, q: u64) -> Result<ModPoly> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(ModPoly::raw(
        q,
        p.coeffs().iter().map(|c| rem_euclid_big(c, q)).collect(),
    ))
}

/// Complete factorization `unit * prod factors[i]^mult[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModFactorization {
    pub modulus: u64,
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted by
    /// (degree, lexicographic coefficients).
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    /// Multiplies the factorization back out; used as a self-check.
    pub fn product(&self) -> ModPoly {
        let mut acc = ModPoly::one(self.modulus).scalar_mul(self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f).expect("same modulus");
            }
        }
        acc
    }
}

/// Squarefree decomposition of a monic polynomial in characteristic `q`.
/// Returns pairwise-coprime squarefree parts with their multiplicities.
fn squarefree_parts(f: &ModPoly) -> Result<Vec<(ModPoly, u64)>> {
    let mut out = Vec::new();
    sff_rec(f, 1, &mut out)?;
    Ok(out)
}

fn sff_rec(f: &ModPoly, scale: u64, out: &mut Vec<(ModPoly, u64)>) -> Result<()> {
    let q = f.modulus();
    let fp = f.derivative();
    if fp.is_zero() {
        return sff_rec(&pth_root(f), scale * q, out);
    }
    let mut c = f.gcd(&fp)?;
    let mut w = f.div_rem(&c)?.0;
    let mut i = 1u64;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let z = w.div_rem(&y)?.0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i * scale));
        }
        w = y;
        c = c.div_rem(&w)?.0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        sff_rec(&pth_root(&c), scale * q, out)?;
    }
    Ok(())
}

/// For `f = u(x^q)` over the prime field, recover `u` (Frobenius fixes the
/// coefficients, so this is just a stride).
fn pth_root(f: &ModPoly) -> ModPoly {
    let q = f.modulus() as usize;
    let coeffs: Vec<u64> = f.coeffs().iter().step_by(q).copied().collect();
    debug_assert!(
        f.coeffs()
            .iter()
            .enumerate()
            .all(|(i, &c)| i % q == 0 || c == 0),
        "inseparable part must be a polynomial in x^q"
    );
    ModPoly::raw(f.modulus(), coeffs)
}

/// Distinct-degree stage: splits squarefree monic `f` into products of
/// irreducibles of equal degree.
fn distinct_degree(f: &ModPoly) -> Result<Vec<(ModPoly, usize)>> {
    let q = f.modulus();
    let mut v = f.clone();
    let mut out = Vec::new();
    let mut h = ModPoly::monomial(q, 1).rem(&v)?;
    let mut d = 0usize;
    while v.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(q), &v)?;
        let hx = h.sub(&ModPoly::monomial(q, 1))?;
        let g = v.gcd(&hx)?;
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            v = v.div_rem(&g)?.0;
            h = h.rem(&v)?;
        }
    }
    if v.degree().unwrap_or(0) > 0 {
        let dv = v.degree().unwrap();
        out.push((v, dv));
    }
    Ok(out)
}

/// Equal-degree (Cantor–Zassenhaus) stage: `f` is monic squarefree, all of
/// whose irreducible factors have degree `d`.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) -> Result<()> {
    let q = f.modulus();
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    let split = loop {
        let a = random_poly(q, deg, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // A shared factor with the random element is already a split.
        let g = f.gcd(&a)?;
        if g.degree().unwrap() > 0 && g.degree().unwrap() < deg {
            break g;
        }
        let g = if q == 2 {
            // Additive trace map onto F_2: a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.clone();
            let mut pow = a.clone();
            for _ in 1..d {
                pow = pow.mul(&pow)?.rem(f)?;
                t = t.add(&pow)?;
            }
            f.gcd(&t)?
        } else {
            // a^((q^d - 1)/2) is ±1 in each residue field; the fibers split f.
            let exp = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            let b = a.pow_mod(&exp, f)?;
            let b1 = b.sub(&ModPoly::one(q))?;
            f.gcd(&b1)?
        };
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < deg {
            break g;
        }
    };
    let rest = f.div_rem(&split)?.0;
    equal_degree(&split, d, rng, out)?;
    equal_degree(&rest, d, rng, out)
}

fn random_poly(q: u64, below_degree: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let coeffs: Vec<u64> = (0..below_degree.max(1)).map(|_| rng.gen_range(0..q)).collect();
    ModPoly::raw(q, coeffs)
}

/// Complete factorization over `F_q`.  Deterministic for a fixed seed, and
/// the factor list itself is canonical for *any* seed.
pub fn factor_mod(p: &ModPoly, seed: u64) -> Result<ModFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.modulus();
    let unit = p.lc();
    let monic = p.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ModPoly, u32)> = Vec::new();
    if monic.degree().unwrap() > 0 {
        for (part, mult) in squarefree_parts(&monic)? {
            for (piece, d) in distinct_degree(&part)? {
                let mut irr = Vec::new();
                equal_degree(&piece, d, &mut rng, &mut irr)?;
                let mult =
                    u32::try_from(mult).expect("multiplicity bounded by the input degree");
                factors.extend(irr.into_iter().map(|f| (f, mult)));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp_key(&b.0));
    Ok(ModFactorization {
        modulus: q,
        unit,
        factors,
    })
}

/// Multiset of `(degree, multiplicity)` pairs of the mod-`q` factorization,
/// sorted.  Errors when the leading coefficient vanishes mod `q`, since the
/// reduced degree would silently drop.
pub fn factor_pattern(p: &IntPoly, q: u64, seed: u64) -> Result<Vec<(usize, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let reduced = mod_reduce(p, q)?;
    if reduced.degree() != p.degree() {
        return Err(Error::LeadingCoeffVanishes(q));
    }
    let fac = factor_mod(&reduced, seed)?;
    let mut pattern: Vec<(usize, u32)> = fac
        .factors
        .iter()
        .map(|(f, e)| (f.degree().unwrap(), *e))
        .collect();
    pattern.sort_unstable();
    Ok(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn mp(q: u64, coeffs: &[u64]) -> ModPoly {
        ModPoly::new(q, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(
            ModPoly::new(6, vec![1]).unwrap_err(),
            Error::NotPrime(6)
        );
        assert_eq!(
            mod_reduce(&IntPoly::from_i64(&[1, 1]), 1).unwrap_err(),
            Error::NotPrime(1)
        );
    }

    #[test]
    fn reduction_examples() {
        // x^4 + x^3 + 9x^2 + x + 1 mod 3 = x^4 + x^3 + x + 1
        let f = mod_reduce(&IntPoly::from_i64(&[1, 1, 9, 1, 1]), 3).unwrap();
        assert_eq!(f, mp(3, &[1, 1, 0, 1, 1]));
        // 3x^2 + 6 mod 3 = 0
        assert!(mod_reduce(&IntPoly::from_i64(&[6, 0, 3]), 3).unwrap().is_zero());
        // Negative coefficients land in [0, q).
        let f = mod_reduce(&IntPoly::from_i64(&[-1, -7]), 5).unwrap();
        assert_eq!(f, mp(5, &[4, 3]));
    }

    #[test]
    fn division_and_gcd() {
        let f = mp(5, &[4, 0, 1]); // x^2 - 1
        let g = mp(5, &[1, 0, 1]); // x^2 + 1
        assert_eq!(f.gcd(&g).unwrap(), ModPoly::one(5));
        let h = f.mul(&mp(5, &[1, 1])).unwrap();
        let (quot, rem) = h.div_rem(&f).unwrap();
        assert_eq!(quot, mp(5, &[1, 1]));
        assert!(rem.is_zero());
        // gcd(f, 0) is the monic normalization of f.
        let scaled = f.scalar_mul(3);
        assert_eq!(scaled.gcd(&ModPoly::zero(5)).unwrap(), f);
        assert_eq!(
            f.gcd(&mp(7, &[1])).unwrap_err(),
            Error::ModulusMismatch(5, 7)
        );
    }

    #[test]
    fn quartic_with_quadruple_root_mod_3() {
        // x^4 + x^3 + x + 1 = (x+1)^4 over F_3
        let f = mp(3, &[1, 1, 0, 1, 1]);
        let fac = factor_mod(&f, 0).unwrap();
        assert_eq!(fac.unit, 1);
        assert_eq!(fac.factors, vec![(mp(3, &[1, 1]), 4)]);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn inseparable_square_mod_2() {
        // x^2 + 1 = (x+1)^2 over F_2
        let f = mp(2, &[1, 0, 1]);
        let fac = factor_mod(&f, 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(2, &[1, 1]), 2)]);
    }

    #[test]
    fn cyclotomic_quintic_splittings() {
        let phi5 = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        // 11 = 1 mod 5: four distinct linear factors, roots 3, 4, 5, 9.
        let fac = factor_mod(&mod_reduce(&phi5, 11).unwrap(), 7).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (mp(11, &[2, 1]), 1),
                (mp(11, &[6, 1]), 1),
                (mp(11, &[7, 1]), 1),
                (mp(11, &[8, 1]), 1),
            ]
        );
        // Order of 2 mod 5 is 4: irreducible mod 2.
        let fac = factor_mod(&mod_reduce(&phi5, 2).unwrap(), 0).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0], (mp(2, &[1, 1, 1, 1, 1]), 1));
        // Totally ramified at 5: (x + 4)^4.
        let fac = factor_mod(&mod_reduce(&phi5, 5).unwrap(), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(5, &[4, 1]), 4)]);
    }

    #[test]
    fn pattern_of_cyclotomic_quintic() {
        let phi5 = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        assert_eq!(
            factor_pattern(&phi5, 11, 0).unwrap(),
            vec![(1, 1), (1, 1), (1, 1), (1, 1)]
        );
        assert_eq!(factor_pattern(&phi5, 2, 0).unwrap(), vec![(4, 1)]);
        assert_eq!(factor_pattern(&phi5, 5, 0).unwrap(), vec![(1, 4)]);
        // 3x^2 + 1 loses its degree mod 3.
        assert_eq!(
            factor_pattern(&IntPoly::from_i64(&[1, 0, 3]), 3, 0).unwrap_err(),
            Error::LeadingCoeffVanishes(3)
        );
    }

    #[test]
    fn factorization_reassembles_and_is_seed_canonical() {
        let moduli = [2u64, 3, 5, 7, 11, 13];
        let mut rng = ChaCha8Rng::seed_from_u64(0xfac);
        for _ in 0..300 {
            let q = moduli[rng.gen_range(0..moduli.len())];
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..q)).collect();
            coeffs[deg] = rng.gen_range(1..q);
            let f = ModPoly::new(q, coeffs).unwrap();
            let fac_a = factor_mod(&f, 1).unwrap();
            let fac_b = factor_mod(&f, 99).unwrap();
            assert_eq!(fac_a, fac_b, "canonical output must not depend on the seed");
            assert_eq!(fac_a.product(), f, "reassembly failed for {f}");
            for (g, _) in &fac_a.factors {
                assert!(g.is_monic());
                assert!(
                    crate::oracle::modpoly_irreducible_brute(g),
                    "non-irreducible factor {g} of {f} mod {q}"
                );
            }
        }
    }

    #[test]
    fn big_modulus_arithmetic_does_not_overflow() {
        let q = 9_223_372_036_854_775_783u64; // largest prime below 2^63
        let f = mp(q, &[q - 1, q - 1, 1]);
        let g = f.mul(&f).unwrap();
        let (quot, rem) = g.div_rem(&f).unwrap();
        assert_eq!(quot, f);
        assert!(rem.is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let f = mp(7, &[3, 0, 6, 1]);
        let js = serde_json::to_string(&f).unwrap();
        let back: ModPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}
