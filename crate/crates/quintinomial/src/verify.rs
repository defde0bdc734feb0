//! The twelve-point verification suite behind `quintinomial verify`.
//!
//! Every advertised capability is re-derived here from scratch — against the
//! subresultant oracle, a brute-force factor search, an independent
//! membership scan, or an exhaustive enumeration — and reported with the
//! wall-clock limit it was measured against.  A criterion passes only when
//! its mathematical check succeeds *and* it finishes inside its limit.
//!
//! The checks are public so integration tests can run them one at a time;
//! [`run_all`] strings them together into a [`Scoreboard`] for the CLI.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{perfect_square_i128, primes_up_to, rem_euclid_big, squarefree};
use crate::dedekind::{
    dedekind_check, dedekind_check_with_lift, is_monogenic, LiftStyle, MonogenicStatus,
};
use crate::density::{
    cg_truncated, has_local_obstruction, linear_factor_count, ng_count, obstruction_scan,
    squarefree_at, FactoredPoly,
};
use crate::galois::{octic_wreath, quartic_galois, GaloisLabel};
use crate::lucas::{
    ab_from_pell, curve_tables_selfcheck, fibonacci, lucas, pell_solution, pqr_residual,
    verify_lf_identities, SignPair,
};
use crate::modp::{factor_mod, mod_reduce, ModPoly};
use crate::oracle::{octic_factor_brute, squarefree_trial};
use crate::poly::{discriminant, IntPoly};
use crate::quin::{
    build, disc_formula, irreducible, octic_family_membership, quartic_irreducible,
    QuinInvariants, QuinParams,
};
use crate::search::{
    distinct_fields, family_invariant_poly, family_records, invariants_each_squarefree,
};
use crate::Result;

/// One verified capability: what was checked, whether it held, and how long
/// the check took against its pinned limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub details: String,
    pub elapsed_ms: u64,
    pub limit_ms: u64,
}

impl CriterionReport {
    /// One scoreboard line, `PASS`/`FAIL` first so eyes can scan the column.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {:>2} {:<32} {:>6} ms / {:>6} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.details
        )
    }
}

/// All twelve reports plus the inputs that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scoreboard {
    pub seed: u64,
    pub budget: u64,
    pub reports: Vec<CriterionReport>,
}

impl Scoreboard {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    /// Text rendering: one line per criterion and a verdict footer.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.summary_line());
            out.push('\n');
        }
        let passed = self.reports.iter().filter(|r| r.passed).count();
        out.push_str(&format!(
            "{}: {passed}/{} criteria passed\n",
            if self.all_passed() { "OK" } else { "FAILED" },
            self.reports.len()
        ));
        out
    }
}

/// Times a check body and folds a limit overrun into the verdict.
fn report(
    id: u32,
    name: &str,
    limit_ms: u64,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> Result<CriterionReport> {
    let start = Instant::now();
    let (ok, mut details) = body()?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    if ok && elapsed_ms > limit_ms {
        details = format!("{details}; exceeded the {limit_ms} ms limit");
    }
    Ok(CriterionReport {
        id,
        name: name.to_string(),
        passed: ok && elapsed_ms <= limit_ms,
        details,
        elapsed_ms,
        limit_ms,
    })
}

fn fail(details: String) -> Result<(bool, String)> {
    Ok((false, details))
}

/// Values `≡ 1 (mod 4)` in the inclusive interval.
fn residue_one(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|v| v.rem_euclid(4) == 1).collect()
}

/// The full `A ≡ B ≡ 1 (mod 4)` box `[lo, hi]²`, row-major.
fn residue_one_grid(lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let vals = residue_one(lo, hi);
    let mut out = Vec::with_capacity(vals.len() * vals.len());
    for &a in &vals {
        for &b in &vals {
            out.push((a, b));
        }
    }
    out
}

/// The factored quartic `(4t-1)(12t+5)(16t²-8t+5)` whose squarefree values
/// drive both the wreath certificates and the density pipeline.
fn wreath_quartic() -> Result<FactoredPoly> {
    FactoredPoly::new(vec![
        IntPoly::from_i64(&[-1, 4]),
        IntPoly::from_i64(&[5, 12]),
        IntPoly::from_i64(&[5, -8, 16]),
    ])
}

/// 1: the closed discriminant formula agrees with the subresultant
/// discriminant for n ∈ {2,3,4} on 200 seeded pairs with |A|,|B| ≤ 10⁴.
pub fn discriminant_formula(seed: u64) -> Result<CriterionReport> {
    report(1, "discriminant-formula", 30_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let mut pairs = Vec::with_capacity(200);
        while pairs.len() < 200 {
            let a = rng.gen_range(-10_000i64..=10_000);
            let b = rng.gen_range(-10_000i64..=10_000);
            if a != 0 && b != 0 {
                pairs.push((a, b));
            }
        }
        let bad: Vec<String> = pairs
            .par_iter()
            .map(|&(a, b)| -> Result<Option<String>> {
                for n in 2..=4 {
                    let params = QuinParams::new(n, a, b)?;
                    if disc_formula(&params)? != discriminant(&build(&params)?)? {
                        return Ok(Some(format!("n={n}, A={a}, B={b}")));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if !bad.is_empty() {
            return fail(format!("formula deviates at {}", bad.join(", ")));
        }
        Ok((
            true,
            "600 formula/subresultant agreements (200 pairs x n in 2..=4)".into(),
        ))
    })
}

/// 2: on the `A ≡ B ≡ 1 (mod 4)`, `|A|,|B| ≤ 101` grid every quartic is
/// irreducible and satisfies `W₁W₂ ≡ W₃ ≡ 5 (mod 8)`.
pub fn quartic_grid_residues() -> Result<CriterionReport> {
    report(2, "quartic-grid-residues", 10_000, || {
        let grid = residue_one_grid(-101, 101);
        for &(a, b) in &grid {
            if !quartic_irreducible(a, b).is_irreducible() {
                return fail(format!("F[2,{a},{b}] is reducible"));
            }
            let inv = QuinInvariants::new(a, b);
            let w1w2 = (inv.w1 * inv.w2).rem_euclid(8);
            let w3 = inv.w3.rem_euclid(8);
            if w1w2 != 5 || w3 != 5 {
                return fail(format!("residues ({w1w2},{w3}) mod 8 at A={a}, B={b}"));
            }
        }
        Ok((
            true,
            format!(
                "{} quartics irreducible with W1*W2 = W3 = 5 (mod 8)",
                grid.len()
            ),
        ))
    })
}

/// 3: on the same grid, the monogenicity verdict coincides with all three
/// invariants being individually squarefree.
pub fn monogenic_iff_squarefree(seed: u64, budget: u64) -> Result<CriterionReport> {
    report(3, "monogenic-iff-squarefree", 60_000, || {
        let grid = residue_one_grid(-101, 101);
        let bad: Vec<String> = grid
            .par_iter()
            .map(|&(a, b)| -> Result<Option<String>> {
                let params = QuinParams::new(2, a, b)?;
                let monogenic = is_monogenic(&params, seed, budget)?.status
                    == MonogenicStatus::Monogenic;
                match invariants_each_squarefree(&params, budget)? {
                    None => Ok(Some(format!("({a},{b}): budget left squarefreeness open"))),
                    Some(sf) if sf != monogenic => Ok(Some(format!(
                        "({a},{b}): monogenic={monogenic} but squarefree={sf}"
                    ))),
                    _ => Ok(None),
                }
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if !bad.is_empty() {
            return fail(format!(
                "{} disagreements, first: {}",
                bad.len(),
                bad[0]
            ));
        }
        Ok((
            true,
            format!(
                "{} pairs: Monogenic exactly when W1, W2, W3 are each squarefree",
                grid.len()
            ),
        ))
    })
}

/// 4: over `|A|,|B| ≤ 201` (same residues) the only monogenic quartic with
/// cyclic Galois group is `(1,1)`, of discriminant 125.
pub fn unique_cyclic_pair(seed: u64, budget: u64) -> Result<CriterionReport> {
    report(4, "unique-cyclic-pair", 300_000, || {
        let grid = residue_one_grid(-201, 201);
        let mut hits: Vec<(i64, i64)> = grid
            .par_iter()
            .map(|&(a, b)| -> Result<Option<(i64, i64)>> {
                let params = QuinParams::new(2, a, b)?;
                if is_monogenic(&params, seed, budget)?.status != MonogenicStatus::Monogenic {
                    return Ok(None);
                }
                let class = quartic_galois(a, b)?;
                Ok((class.label == GaloisLabel::C4).then_some((a, b)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        hits.sort_unstable();
        if hits != [(1, 1)] {
            return fail(format!("cyclic monogenic locus came out as {hits:?}"));
        }
        let disc = disc_formula(&QuinParams::new(2, 1, 1)?)?;
        if disc != BigInt::from(125) {
            return fail(format!("disc(F[2,1,1]) = {disc}, want 125"));
        }
        Ok((
            true,
            format!(
                "{} pairs scanned; monogenic C4 happens only at (1,1), discriminant 125",
                grid.len()
            ),
        ))
    })
}

/// 5: for k ∈ {0,1}, the first 10 prime arguments with squarefree invariant
/// product give monogenic D4 quartics with 10 pairwise-distinct field
/// discriminants.
pub fn family_walk(seed: u64, budget: u64) -> Result<CriterionReport> {
    report(5, "family-walk-d4", 60_000, || {
        let mut notes = Vec::new();
        for k in [0i64, 1] {
            let records = family_records(k, 10, true, seed, budget)?;
            for r in &records {
                if r.status() != MonogenicStatus::Monogenic {
                    return fail(format!(
                        "k={k}, (A,B)=({},{}): {:?}",
                        r.params.a,
                        r.params.b,
                        r.status()
                    ));
                }
                if r.galois.label != GaloisLabel::D4 {
                    return fail(format!(
                        "k={k}, (A,B)=({},{}): galois {:?}",
                        r.params.a, r.params.b, r.galois.label
                    ));
                }
            }
            let partition = distinct_fields(&records)?;
            if partition.classes.len() != 10 || !partition.unresolved.is_empty() {
                return fail(format!(
                    "k={k}: {} discriminant classes, {} unresolved collisions",
                    partition.classes.len(),
                    partition.unresolved.len()
                ));
            }
            notes.push(format!(
                "k={k}: B = {:?}",
                records.iter().map(|r| r.params.b).collect::<Vec<_>>()
            ));
        }
        Ok((
            true,
            format!("both walks monogenic D4 with distinct fields; {}", notes.join("; ")),
        ))
    })
}

/// 6: the two quartic-pair constructions multiply back to the octic for all
/// `|s|,|t| ≤ 6`; 500 independently constructed non-members get no
/// certificate; membership agrees with brute-force factoring on the
/// `|A|,|B| ≤ 21` grid.
pub fn octic_split_certificates(seed: u64) -> Result<CriterionReport> {
    report(6, "octic-split-certificates", 300_000, || {
        let mut products = 0u32;
        for s in -6i64..=6 {
            for t in -6i64..=6 {
                let c = 2 * s + 1;
                let d = 2 * t + 1;
                let a = 2 * d - c * c;
                let cases = [
                    (d * d + 2 - 2 * c * c, [1, c, d, c, 1], [1, -c, d, -c, 1]),
                    (d * d + 2 + 2 * c * c, [1, -c, d, c, 1], [1, c, d, -c, 1]),
                ];
                for (b, u, v) in cases {
                    let target = build(&QuinParams::new(3, a, b)?)?;
                    let u = IntPoly::from_i64(&u);
                    let v = IntPoly::from_i64(&v);
                    if &u * &v != target {
                        return fail(format!("product mismatch at C={c}, D={d}, B={b}"));
                    }
                    match octic_family_membership(a, b)? {
                        Some(cert) if cert.verifies(&target) => {}
                        Some(_) => {
                            return fail(format!("unverifiable certificate at ({a},{b})"))
                        }
                        None => return fail(format!("no certificate at ({a},{b})")),
                    }
                    products += 1;
                }
            }
        }

        // Non-members constructed by an independent scan: (A,B) is a member
        // exactly when some odd c ≥ 1 has d = (A+c²)/2 with B = d²+2∓2c²,
        // and for |A|,|B| ≤ 2001 any such c is at most 201.
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 6);
        let mut rejected = 0u32;
        while rejected < 500 {
            let a = 4 * rng.gen_range(-500i64..=500) + 1;
            let b = 4 * rng.gen_range(-500i64..=500) + 1;
            let member = (1..=201).step_by(2).any(|c| {
                let d = (a + c * c) / 2;
                b == d * d + 2 - 2 * c * c || b == d * d + 2 + 2 * c * c
            });
            if member {
                continue;
            }
            if octic_family_membership(a, b)?.is_some() {
                return fail(format!("({a},{b}) certified despite failing the scan"));
            }
            rejected += 1;
        }

        let grid = residue_one_grid(-21, 21);
        for &(a, b) in &grid {
            let member = octic_family_membership(a, b)?.is_some();
            let brute = octic_factor_brute(a, b);
            if member != brute.is_some() {
                return fail(format!(
                    "({a},{b}): membership {member} but brute factor {}",
                    brute.is_some()
                ));
            }
            if let Some((u, v)) = brute {
                if &u * &v != build(&QuinParams::new(3, a, b)?)? {
                    return fail(format!("brute factors of ({a},{b}) do not multiply back"));
                }
            }
        }
        Ok((
            true,
            format!(
                "{products} parameterized products verified; 500 non-members rejected; \
                 brute-force agreement on {} grid pairs",
                grid.len()
            ),
        ))
    })
}

/// 7: every equal-coefficient octic with `A ≡ 1 (mod 4)`, `A ≠ 1`,
/// `|A| ≤ 401` is irreducible with index divisible by 2 and auxiliary
/// polynomial `x(x+1)²(x⁴+x³+x²+x+1)` mod 2; the excluded `A = 1` octic
/// splits into the two cyclotomic quartics.
pub fn equal_coefficient_octics(seed: u64) -> Result<CriterionReport> {
    report(7, "equal-coefficient-octics", 60_000, || {
        let phi5 = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        let expected_fbar = {
            let x = IntPoly::from_i64(&[0, 1]);
            let x1 = IntPoly::from_i64(&[1, 1]);
            mod_reduce(&(&(&(&x * &x1) * &x1) * &phi5), 2)?
        };
        let mut count = 0u32;
        for a in residue_one(-401, 401) {
            if a == 1 {
                continue;
            }
            let params = QuinParams::new(3, a, a)?;
            if !irreducible(&params)?.is_irreducible() {
                return fail(format!("F[3,{a},{a}] not recognized irreducible"));
            }
            let outcome = dedekind_check(&build(&params)?, 2, seed)?;
            if !outcome.divides_index {
                return fail(format!("index not divisible by 2 at A={a}"));
            }
            if mod_reduce(&outcome.f, 2)? != expected_fbar {
                return fail(format!("auxiliary polynomial mod 2 deviates at A={a}"));
            }
            count += 1;
        }
        let phi10 = IntPoly::from_i64(&[1, -1, 1, -1, 1]);
        let one = QuinParams::new(3, 1, 1)?;
        if &phi5 * &phi10 != build(&one)? {
            return fail("F[3,1,1] is not the cyclotomic product".into());
        }
        if irreducible(&one)?.is_irreducible() {
            return fail("F[3,1,1] must split".into());
        }
        Ok((
            true,
            format!(
                "{count} octics irreducible, 2 | index, fixed auxiliary mod 2; (1,1) splits \
                 cyclotomically"
            ),
        ))
    })
}

/// 8: at least ten prime arguments `p` with `A = 4p+1 ≤ 1000` and squarefree
/// invariant product certify the order-32 wreath group, `A = 9` among them.
pub fn wreath_certificates(budget: u64) -> Result<CriterionReport> {
    report(8, "wreath-certificates", 60_000, || {
        let g = wreath_quartic()?;
        let mut hits = Vec::new();
        for p in primes_up_to(249) {
            if squarefree_at(&g, p as i64, budget)? != Some(true) {
                continue;
            }
            let a = 4 * p as i64 + 1;
            let class = octic_wreath(a, a)?;
            if class.label != GaloisLabel::WreathC2sqC2 {
                return fail(format!("A={a} labeled {:?}", class.label));
            }
            hits.push(a);
        }
        if hits.len() < 10 || !hits.contains(&9) {
            return fail(format!("wreath hits insufficient: {hits:?}"));
        }
        Ok((
            true,
            format!(
                "{} wreath certificates with A = 4p+1 <= 1000, starting {:?}",
                hits.len(),
                &hits[..6]
            ),
        ))
    })
}

/// 9: 200 seeded odd pairs outside `(1,1) (mod 4)` with squarefree
/// `W₁W₂W₃` are monogenic at both n = 2 and n = 3.
pub fn mixed_residue_monogenic(seed: u64, budget: u64) -> Result<CriterionReport> {
    report(9, "mixed-residue-monogenic", 120_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 9);
        let mut picked = Vec::with_capacity(200);
        while picked.len() < 200 {
            let a = rng.gen_range(-500i64..=500);
            let b = rng.gen_range(-500i64..=500);
            if a % 2 == 0 || b % 2 == 0 || (a.rem_euclid(4) == 1 && b.rem_euclid(4) == 1) {
                continue;
            }
            let inv = QuinInvariants::new(a, b);
            if squarefree(inv.w1 * inv.w2 * inv.w3, budget)? != Some(true) {
                continue;
            }
            picked.push((a, b));
        }
        let bad: Vec<String> = picked
            .par_iter()
            .map(|&(a, b)| -> Result<Option<String>> {
                for n in [2u32, 3] {
                    let verdict = is_monogenic(&QuinParams::new(n, a, b)?, seed, budget)?;
                    if verdict.status != MonogenicStatus::Monogenic {
                        return Ok(Some(format!("({a},{b}) at n={n}: {:?}", verdict.status)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if !bad.is_empty() {
            return fail(format!("{} failures, first: {}", bad.len(), bad[0]));
        }
        Ok((
            true,
            "200 mixed-residue pairs with squarefree W1*W2*W3 monogenic at n=2 and n=3".into(),
        ))
    })
}

/// 10: the Lucas/Fibonacci identity block, the Pell solutions, the
/// parameter table, the square-invariant identities, and the gcd residual
/// forms all check out on their stated ranges.
pub fn lucas_pell_chain() -> Result<CriterionReport> {
    report(10, "lucas-pell-chain", 30_000, || {
        if !verify_lf_identities(60)? {
            return fail("identity block fails below |N| = 60".into());
        }
        if !curve_tables_selfcheck() {
            return fail("frozen curve points fail their equations".into());
        }
        for n in 1..=30i64 {
            let (x, y) = pell_solution(n)?;
            if &x * &x - BigInt::from(5) * &y * &y != BigInt::from(-4) {
                return fail(format!("Pell relation fails at n={n}"));
            }
            if x != lucas(2 * n - 1)? || y != fibonacci(2 * n - 1)? {
                return fail(format!("Pell solution at n={n} is not (L,F) odd-indexed"));
            }
        }
        for n in 1..=200i64 {
            let got = ab_from_pell(n)?;
            let x = lucas(2 * n - 1)?;
            let b = BigInt::from(5) * fibonacci(2 * n - 1)? - BigInt::from(4);
            let want = match n.rem_euclid(3) {
                0 => Some((-x, b)),
                1 => Some((x, b)),
                _ => None,
            };
            if got != want {
                return fail(format!("parameter table deviates at n={n}"));
            }
            if let Some((a, b)) = got {
                if rem_euclid_big(&a, 4) != 1 || rem_euclid_big(&b, 4) != 1 {
                    return fail(format!("pair at n={n} leaves the residue class"));
                }
            }
        }
        for n in 1..=55i64 {
            let square = match n.rem_euclid(6) {
                1 => Some((lucas(n - 2)?, -2)),
                4 => Some((lucas(n + 1)?, 2)),
                _ => None,
            };
            if let Some((l, sign)) = square {
                let (a, b) = ab_from_pell(n)?.expect("n = 1 mod 3");
                if b + BigInt::from(2) + BigInt::from(sign) * a != &l * &l {
                    return fail(format!("square invariant fails at n={n}"));
                }
            }
        }

        // NegNeg residual: no zeros over pairwise-coprime odd squarefree
        // triples with entries <= 100.
        let pool: Vec<i128> = (1..=100i128)
            .step_by(2)
            .filter(|&m| squarefree_trial(m as u128))
            .collect();
        let mut triples = 0u64;
        for &p in &pool {
            for &q in &pool {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                for &r in &pool {
                    if num_integer::gcd(p, r) != 1 || num_integer::gcd(q, r) != 1 {
                        continue;
                    }
                    triples += 1;
                    if pqr_residual(SignPair::NegNeg, p, q, r).is_zero() {
                        return fail(format!("NegNeg residual vanishes at ({p},{q},{r})"));
                    }
                }
            }
        }

        // PosPos residual at P = 1: the zero set over Q <= 200 is exactly the
        // three known triples.
        let mut zeros = Vec::new();
        for r in [5i128, 13, 65] {
            for q in 1..=200i128 {
                if pqr_residual(SignPair::PosPos, 1, q, r).is_zero() {
                    zeros.push((1i128, q, r));
                }
            }
        }
        zeros.sort_unstable();
        let mut want = vec![(1i128, 11, 5), (1, 3, 13), (1, 1, 5)];
        want.sort_unstable();
        if zeros != want {
            return fail(format!("PosPos zero set came out as {zeros:?}"));
        }
        Ok((
            true,
            format!(
                "identities to |N|=60, Pell to n=30, table to n=200, squares to n=55; \
                 {triples} NegNeg triples nonzero; PosPos zeros exactly {want:?}"
            ),
        ))
    })
}

/// A pool entry for the exhaustive obstruction-bound check: one primitive
/// irreducible factor with positive leading coefficient and coefficients in
/// `[-5,5]`, plus its values at every unit modulo 4, 9, 25, 49.
struct PoolEntry {
    coeffs: Vec<i64>,
    tables: [Vec<u64>; 4],
}

const BOUND_PRIMES: [u64; 4] = [2, 3, 5, 7];

fn unit_values(coeffs: &[i64], ell: u64) -> Vec<u64> {
    let m = (ell * ell) as i64;
    (1..m)
        .filter(|z| z % ell as i64 != 0)
        .map(|z| {
            let mut acc = 0i64;
            for &c in coeffs.iter().rev() {
                acc = (acc * z + c).rem_euclid(m);
            }
            acc as u64
        })
        .collect()
}

fn pool_entry(coeffs: Vec<i64>) -> PoolEntry {
    let tables = [
        unit_values(&coeffs, 2),
        unit_values(&coeffs, 3),
        unit_values(&coeffs, 5),
        unit_values(&coeffs, 7),
    ];
    PoolEntry { coeffs, tables }
}

fn is_primitive(coeffs: &[i64]) -> bool {
    coeffs
        .iter()
        .fold(0i64, |g, &c| num_integer::gcd(g, c.abs()))
        == 1
}

/// No rational root: candidates are `p/q` with `p | c₀`, `q | c₃`.
fn cubic_has_rational_root(c: &[i64; 4]) -> bool {
    if c[0] == 0 {
        return true;
    }
    for p in 1..=c[0].abs() {
        if c[0] % p != 0 {
            continue;
        }
        for q in 1..=c[3] {
            if c[3] % q != 0 || num_integer::gcd(p, q) != 1 {
                continue;
            }
            for p in [p, -p] {
                if c[3] * p.pow(3) + c[2] * p * p * q + c[1] * p * q * q + c[0] * q.pow(3) == 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Every primitive irreducible factor of the given degree with positive
/// leading coefficient and coefficients in `[-5,5]`.
fn factor_pool(degree: usize) -> Vec<PoolEntry> {
    let mut out = Vec::new();
    match degree {
        1 => {
            for c1 in 1..=5i64 {
                for c0 in -5..=5i64 {
                    if is_primitive(&[c0, c1]) {
                        out.push(pool_entry(vec![c0, c1]));
                    }
                }
            }
        }
        2 => {
            for c2 in 1..=5i64 {
                for c1 in -5..=5i64 {
                    for c0 in -5..=5i64 {
                        let coeffs = [c0, c1, c2];
                        let disc = c1 * c1 - 4 * c2 * c0;
                        // Reducible over Q exactly when the discriminant is a
                        // perfect square (a double rational root included).
                        if is_primitive(&coeffs) && perfect_square_i128(disc as i128).is_none()
                        {
                            out.push(pool_entry(coeffs.to_vec()));
                        }
                    }
                }
            }
        }
        3 => {
            for c3 in 1..=5i64 {
                for c2 in -5..=5i64 {
                    for c1 in -5..=5i64 {
                        for c0 in -5..=5i64 {
                            let coeffs = [c0, c1, c2, c3];
                            if is_primitive(&coeffs) && !cubic_has_rational_root(&coeffs) {
                                out.push(pool_entry(coeffs.to_vec()));
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!("pool degrees are 1..=3"),
    }
    out
}

/// Walks every factored polynomial of total degree ≤ 4 built from the pools
/// (factors pairwise non-associate; a sign flip changes nothing the check
/// sees, so positive leading coefficients lose no generality) and verifies:
/// a local obstruction at ℓ forces `2ℓ ≤ N_ℓ + 2`.  Returns the combo count,
/// how many had an obstruction somewhere, and how many met the bound with
/// equality.
fn obstruction_bound_exhaustive() -> Result<(u64, u64, u64)> {
    let d1 = factor_pool(1);
    let d2 = factor_pool(2);
    let d3 = factor_pool(3);

    let mut combos = 0u64;
    let mut obstructed = 0u64;
    let mut tight = 0u64;

    let mut check = |entries: &[&PoolEntry]| -> Result<Option<String>> {
        combos += 1;
        let mut hit = false;
        for (idx, &ell) in BOUND_PRIMES.iter().enumerate() {
            let m = ell * ell;
            let units = entries[0].tables[idx].len();
            let blocked = (0..units).all(|u| {
                entries
                    .iter()
                    .fold(1u64, |acc, e| acc * e.tables[idx][u] % m)
                    == 0
            });
            if !blocked {
                continue;
            }
            // An actual obstruction: re-derive it through the library and
            // test the multiplicity bound.
            hit = true;
            let product = entries
                .iter()
                .map(|e| IntPoly::from_i64(&e.coeffs))
                .fold(IntPoly::one(), |acc, f| &acc * &f);
            if !has_local_obstruction(&product, ell)? {
                return Ok(Some(format!(
                    "table path and library disagree at ell={ell} for {product}"
                )));
            }
            let n_ell = linear_factor_count(&product, ell)?;
            if 2 * ell > n_ell + 2 {
                return Ok(Some(format!(
                    "bound violated: ell={ell}, N={n_ell}, G={product}"
                )));
            }
            if 2 * ell == n_ell + 2 {
                tight += 1;
            }
        }
        if hit {
            obstructed += 1;
        }
        Ok(None)
    };

    // Total degree <= 4 with factor degrees in 1..=3: every multiset shape is
    // enumerated once (indices strictly increasing within a pool).
    for f in d1.iter().chain(&d2).chain(&d3) {
        if let Some(v) = check(&[f])? {
            return Err(crate::Error::InvalidInput(v));
        }
    }
    let mut run = |entries: &[&PoolEntry]| -> Result<()> {
        if let Some(v) = check(entries)? {
            return Err(crate::Error::InvalidInput(v));
        }
        Ok(())
    };
    for i in 0..d1.len() {
        for j in i + 1..d1.len() {
            run(&[&d1[i], &d1[j]])?;
            for k in j + 1..d1.len() {
                run(&[&d1[i], &d1[j], &d1[k]])?;
                for l in k + 1..d1.len() {
                    run(&[&d1[i], &d1[j], &d1[k], &d1[l]])?;
                }
            }
            for f in &d2 {
                run(&[&d1[i], &d1[j], f])?;
            }
        }
        for f in &d2 {
            run(&[&d1[i], f])?;
        }
        for f in &d3 {
            run(&[&d1[i], f])?;
        }
    }
    for i in 0..d2.len() {
        for j in i + 1..d2.len() {
            run(&[&d2[i], &d2[j]])?;
        }
    }
    Ok((combos, obstructed, tight))
}

/// 11: no local obstruction for the five walk cubics or the wreath quartic;
/// the obstruction bound holds exhaustively for small factored polynomials;
/// the truncated density constant lies in (0,1); at least 10 prime arguments
/// are certified squarefree below 10⁴.
pub fn squarefree_density(budget: u64) -> Result<CriterionReport> {
    report(11, "squarefree-density", 300_000, || {
        for k in [-2i64, -1, 0, 1, 2] {
            let scan = obstruction_scan(&family_invariant_poly(k)?)?;
            if !scan.obstructed.is_empty() {
                return fail(format!("walk cubic k={k} obstructed at {:?}", scan.obstructed));
            }
        }
        let g = wreath_quartic()?;
        let scan = obstruction_scan(&g)?;
        if !scan.obstructed.is_empty() {
            return fail(format!("wreath quartic obstructed at {:?}", scan.obstructed));
        }

        // The exhaustive walk short-circuits a violation as InvalidInput;
        // translate that into a failed criterion rather than a suite error.
        let (combos, obstructed, tight) = match obstruction_bound_exhaustive() {
            Ok(counts) => counts,
            Err(crate::Error::InvalidInput(msg)) => return fail(msg),
            Err(e) => return Err(e),
        };

        let cg = cg_truncated(&g, 100)?;
        let value = cg.value();
        if value <= BigRational::zero() || value >= BigRational::one() {
            return fail(format!("truncated constant {} outside (0,1)", cg.decimal));
        }

        let ng = ng_count(&g, 10_000, budget)?;
        if ng.squarefree < 10 {
            return fail(format!(
                "only {} certified squarefree arguments below 10^4",
                ng.squarefree
            ));
        }
        Ok((
            true,
            format!(
                "no obstructions for the six pipeline polynomials; bound held over {combos} \
                 factored polynomials ({obstructed} obstructed, {tight} tight); C_G(100) = {}; \
                 {}/{} prime arguments certified squarefree ({} undecided)",
                cg.decimal, ng.squarefree, ng.primes_tested, ng.undecided
            ),
        ))
    })
}

/// 12: the index-divisibility verdict is independent of the lift style on
/// 500 fuzzed inputs, and finite-field factorizations multiply back exactly
/// on 500 fuzzed polynomials.
pub fn lift_independence(seed: u64) -> Result<CriterionReport> {
    report(12, "lift-independence-and-reassembly", 60_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 12);
        let primes = primes_up_to(97);
        for round in 0..500u32 {
            let q = primes[rng.gen_range(0..primes.len())];
            let deg = rng.gen_range(2..=8usize);
            let mut coeffs: Vec<BigInt> = (0..deg)
                .map(|_| BigInt::from(rng.gen_range(-30i64..=30)))
                .collect();
            coeffs.push(BigInt::one());
            let t = IntPoly::from_coeffs(coeffs);
            let canonical = dedekind_check_with_lift(&t, q, seed, LiftStyle::Canonical)?;
            let symmetric = dedekind_check_with_lift(&t, q, seed, LiftStyle::Symmetric)?;
            if canonical.divides_index != symmetric.divides_index {
                return fail(format!("lift styles disagree at round {round}: q={q}, T={t}"));
            }
        }
        for round in 0..500u32 {
            let q = primes[rng.gen_range(0..primes.len())];
            let deg = rng.gen_range(1..=8usize);
            let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
            coeffs.push(rng.gen_range(1..q));
            let f = ModPoly::new(q, coeffs)?;
            let fac = factor_mod(&f, seed)?;
            let mut prod = ModPoly::one(q).scalar_mul(fac.unit);
            for (g, e) in &fac.factors {
                if !g.is_monic() {
                    return fail(format!("non-monic factor at round {round} (q={q})"));
                }
                for _ in 0..*e {
                    prod = prod.mul(g)?;
                }
            }
            if prod != f {
                return fail(format!("reassembly mismatch at round {round}: q={q}, f={f:?}"));
            }
        }
        Ok((
            true,
            "500 lift-style agreements and 500 exact factor reassemblies".into(),
        ))
    })
}

/// Runs the whole suite in order.
pub fn run_all(seed: u64, budget: u64) -> Result<Scoreboard> {
    let reports = vec![
        discriminant_formula(seed)?,
        quartic_grid_residues()?,
        monogenic_iff_squarefree(seed, budget)?,
        unique_cyclic_pair(seed, budget)?,
        family_walk(seed, budget)?,
        octic_split_certificates(seed)?,
        equal_coefficient_octics(seed)?,
        wreath_certificates(budget)?,
        mixed_residue_monogenic(seed, budget)?,
        lucas_pell_chain()?,
        squarefree_density(budget)?,
        lift_independence(seed)?,
    ];
    Ok(Scoreboard {
        seed,
        budget,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_pools_have_expected_shapes() {
        // Spot checks: x-1 and x+1 are in the linear pool; x²+1 is in the
        // quadratic pool while x²-1 is not; x³-x-1 makes the cubic pool.
        let d1 = factor_pool(1);
        assert!(d1.iter().any(|e| e.coeffs == [-1, 1]));
        assert!(d1.iter().any(|e| e.coeffs == [1, 1]));
        let d2 = factor_pool(2);
        assert!(d2.iter().any(|e| e.coeffs == [1, 0, 1]));
        assert!(!d2.iter().any(|e| e.coeffs == [-1, 0, 1]));
        let d3 = factor_pool(3);
        assert!(d3.iter().any(|e| e.coeffs == [-1, -1, 0, 1]));
        assert!(!d3.iter().any(|e| e.coeffs == [0, 0, 0, 1]));
    }

    #[test]
    fn unit_tables_match_direct_evaluation() {
        let f = IntPoly::from_i64(&[3, -2, 0, 5]);
        let entry = pool_entry(vec![3, -2, 0, 5]);
        for (idx, &ell) in BOUND_PRIMES.iter().enumerate() {
            let m = ell * ell;
            let mut k = 0;
            for z in 1..m {
                if z % ell == 0 {
                    continue;
                }
                let direct = rem_euclid_big(&f.eval(&BigInt::from(z)), m);
                assert_eq!(entry.tables[idx][k], direct, "ell={ell}, z={z}");
                k += 1;
            }
        }
    }

    #[test]
    fn scoreboard_renders_one_line_per_report() {
        let board = Scoreboard {
            seed: 0,
            budget: 1,
            reports: vec![CriterionReport {
                id: 1,
                name: "sample".into(),
                passed: true,
                details: "ok".into(),
                elapsed_ms: 5,
                limit_ms: 10,
            }],
        };
        let text = board.render();
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("PASS"));
        assert!(text.ends_with("OK: 1/1 criteria passed\n"));
    }
}
