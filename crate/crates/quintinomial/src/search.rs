//! Parameter-space sweeps over `(A, B)` grids and structured subfamilies.
//!
//! A [`SearchRecord`] bundles everything the other modules can say about one
//! parameter pair: invariants, irreducibility, the budgeted monogenicity
//! verdict, a Galois label where the residue criteria apply (`n = 2` or 3),
//! and the field discriminant when the order is provably maximal.  Grids run
//! in parallel; record order is still deterministic (row-major over the
//! ranges), so identical inputs serialize identically regardless of thread
//! count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use crate::arith::{is_prime_u64, squarefree};
use crate::dedekind::{is_monogenic, MonogenicStatus, MonogenicityVerdict};
use crate::density::FactoredPoly;
use crate::error::Error;
use crate::galois::{octic_wreath, quartic_galois, GaloisClass, GaloisLabel};
use crate::poly::IntPoly;
use crate::quin::{disc_formula, QuinParams};
use crate::Result;

/// Which residue classes of `(A, B)` mod 4 a sweep keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResidueFilter {
    /// `A ≡ B ≡ 1 (mod 4)` — where the quartic is automatically irreducible
    /// and the square criteria classify the Galois group.
    Mod4Both1,
    /// Odd pairs other than `(1, 1) mod 4`, i.e. `(1,3)`, `(3,1)`, `(3,3)`.
    Mod4OddNotBoth1,
    /// No filtering beyond `A·B ≠ 0`.
    All,
}

impl ResidueFilter {
    fn keeps(self, a: i64, b: i64) -> bool {
        let (ra, rb) = (a.rem_euclid(4), b.rem_euclid(4));
        match self {
            ResidueFilter::Mod4Both1 => ra == 1 && rb == 1,
            ResidueFilter::Mod4OddNotBoth1 => {
                ra % 2 == 1 && rb % 2 == 1 && !(ra == 1 && rb == 1)
            }
            ResidueFilter::All => true,
        }
    }
}

/// Everything known about one parameter pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub params: QuinParams,
    pub invariants: crate::quin::QuinInvariants,
    /// Budgeted monogenicity decision, witnesses included.
    pub verdict: MonogenicityVerdict,
    pub galois: GaloisClass,
    /// Polynomial discriminant, attached only when it provably equals the
    /// field discriminant (i.e. the verdict is `Monogenic`).
    #[serde(with = "crate::arith::big_decimal_opt")]
    pub field_disc: Option<BigInt>,
}

impl SearchRecord {
    pub fn status(&self) -> MonogenicStatus {
        self.verdict.status
    }

    /// Header matching [`Self::csv_row`].
    pub fn csv_header() -> &'static str {
        "n,a,b,w1,w2,w3,status,obstruction_primes,galois,field_disc"
    }

    /// One comma-separated summary line; list-valued fields join with `;`.
    pub fn csv_row(&self) -> String {
        let primes = self
            .verdict
            .obstruction_primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let disc = self
            .field_disc
            .as_ref()
            .map(|d| d.to_string())
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{:?},{},{:?},{}",
            self.params.n,
            self.params.a,
            self.params.b,
            self.invariants.w1,
            self.invariants.w2,
            self.invariants.w3,
            self.verdict.status,
            primes,
            self.galois.label,
            disc
        )
    }
}

fn classify_one(params: &QuinParams, seed: u64, budget: u64) -> Result<SearchRecord> {
    let verdict = is_monogenic(params, seed, budget)?;
    let galois = match params.n {
        2 => quartic_galois(params.a, params.b)?,
        3 => octic_wreath(params.a, params.b)?,
        _ => GaloisClass {
            label: GaloisLabel::OutOfScope,
            evidence: vec![],
        },
    };
    let field_disc = if verdict.status == MonogenicStatus::Monogenic {
        Some(disc_formula(params)?)
    } else {
        None
    };
    Ok(SearchRecord {
        params: *params,
        invariants: params.invariants(),
        verdict,
        galois,
        field_disc,
    })
}

/// Classifies every admissible pair in the inclusive ranges, in parallel.
pub fn grid_classify(
    n: u32,
    a_range: (i64, i64),
    b_range: (i64, i64),
    filter: ResidueFilter,
    seed: u64,
    budget: u64,
) -> Result<Vec<SearchRecord>> {
    if a_range.0 > a_range.1 || b_range.0 > b_range.1 {
        return Err(Error::InvalidInput("empty parameter range".into()));
    }
    let mut pairs = Vec::new();
    for a in a_range.0..=a_range.1 {
        for b in b_range.0..=b_range.1 {
            if a != 0 && b != 0 && filter.keeps(a, b) {
                pairs.push((a, b));
            }
        }
    }
    pairs
        .par_iter()
        .map(|&(a, b)| classify_one(&QuinParams::new(n, a, b)?, seed, budget))
        .collect()
}

/// The three invariants of the subfamily `A = 8k+1`, `B = 8t+1` as
/// polynomials in `t`: `W1 = 8t + 1 - 16k`, `W2 = 8t + 5 + 16k`,
/// `W3 = 64k² + 16k + 5 - 32t`.  Their product is the cubic whose
/// squarefree values at `t` mark the monogenic members.
pub fn family_invariant_poly(k: i64) -> Result<FactoredPoly> {
    let w1 = IntPoly::from_i64(&[1 - 16 * k, 8]);
    let w2 = IntPoly::from_i64(&[5 + 16 * k, 8]);
    let w3 = IntPoly::from_i64(&[64 * k * k + 16 * k + 5, -32]);
    FactoredPoly::new(vec![w1, w2, w3])
}

/// Walks `B = 8t+1` upward (over prime `t` when `primes_only`, all `t ≥ 1`
/// otherwise) with `A = 8k+1` fixed, collecting the first `want` members
/// where the cubic from [`family_invariant_poly`] takes a squarefree value.
/// That filter is sufficient — never necessary — for a monogenic `D4`
/// quartic: members dropped for a shared prime between two invariants can
/// still be monogenic, which [`classify_one`]'s verdict would show.
pub fn family_records(
    k: i64,
    want: usize,
    primes_only: bool,
    seed: u64,
    budget: u64,
) -> Result<Vec<SearchRecord>> {
    const T_CAP: i64 = 100_000;
    let g = family_invariant_poly(k)?;
    let mut out = Vec::with_capacity(want);
    let mut t: i64 = 0;
    while out.len() < want {
        t += 1;
        if t > T_CAP {
            return Err(Error::InvalidInput(format!(
                "only {} of {want} members found with t ≤ {T_CAP}",
                out.len()
            )));
        }
        if primes_only && !is_prime_u64(t as u64) {
            continue;
        }
        if crate::density::squarefree_at(&g, t, budget)? != Some(true) {
            continue;
        }
        let params = QuinParams::new(2, 8 * k + 1, 8 * t + 1)?;
        out.push(classify_one(&params, seed, budget)?);
    }
    Ok(out)
}

/// A pair of records sharing one field discriminant, with the two follow-up
/// identities a genuine field coincidence would additionally have to satisfy
/// (`W1·W2` equal and `W3` equal up to sign).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscCollision {
    pub first: QuinParams,
    pub second: QuinParams,
    pub w1w2_equal: bool,
    pub w3_equal_up_to_sign: bool,
}

/// One discriminant value and every record that landed on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldClass {
    #[serde(with = "crate::arith::big_decimal")]
    pub disc: BigInt,
    pub members: Vec<QuinParams>,
}

/// Partition of monogenic records by field discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldPartition {
    /// Ascending by discriminant; distinct classes are distinct fields.
    pub classes: Vec<FieldClass>,
    /// Same-discriminant pairs, which group order alone cannot separate.
    pub unresolved: Vec<DiscCollision>,
}

/// Groups records by field discriminant, ascending.  Monogenicity makes the
/// polynomial discriminant equal the field discriminant, so distinct groups
/// are distinct number fields; same-discriminant pairs land in `unresolved`
/// together with the extra invariant comparisons.  Errs on any record that
/// is not `Monogenic` (its discriminant would say nothing about the field).
pub fn distinct_fields(records: &[SearchRecord]) -> Result<FieldPartition> {
    let mut groups: std::collections::BTreeMap<BigInt, Vec<&SearchRecord>> = Default::default();
    for r in records {
        let Some(d) = &r.field_disc else {
            return Err(Error::pre(format!(
                "{} is not monogenic; its field is not pinned by the discriminant",
                r.params
            )));
        };
        groups.entry(d.clone()).or_default().push(r);
    }
    let mut unresolved = Vec::new();
    for members in groups.values() {
        for pair in members.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            unresolved.push(DiscCollision {
                first: x.params,
                second: y.params,
                w1w2_equal: x.invariants.w1 * x.invariants.w2 == y.invariants.w1 * y.invariants.w2,
                w3_equal_up_to_sign: x.invariants.w3.abs() == y.invariants.w3.abs(),
            });
        }
    }
    Ok(FieldPartition {
        classes: groups
            .into_iter()
            .map(|(disc, rs)| FieldClass {
                disc,
                members: rs.into_iter().map(|r| r.params).collect(),
            })
            .collect(),
        unresolved,
    })
}

/// Whether each of `W1`, `W2`, `W3` is squarefree individually — for
/// `A ≡ B ≡ 1 (mod 4)` that is exactly monogenicity of the quartic.  Note
/// the contrast with the family filter above, which needs the *product*
/// squarefree: two invariants may share a prime without hurting the index.
/// `None` when the budget ran out before a verdict.
pub fn invariants_each_squarefree(params: &QuinParams, budget: u64) -> Result<Option<bool>> {
    let inv = params.invariants();
    if inv.w1 == 0 || inv.w2 == 0 || inv.w3 == 0 {
        return Ok(Some(false));
    }
    let mut undecided = false;
    for w in [inv.w1, inv.w2, inv.w3] {
        match squarefree(w, budget)? {
            Some(false) => return Ok(Some(false)),
            Some(true) => {}
            None => undecided = true,
        }
    }
    Ok(if undecided { None } else { Some(true) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_deterministic_and_filtered() {
        let all = grid_classify(2, (-3, 3), (-3, 3), ResidueFilter::All, 0, 1 << 16).unwrap();
        assert_eq!(all.len(), 36);
        let again = grid_classify(2, (-3, 3), (-3, 3), ResidueFilter::All, 0, 1 << 16).unwrap();
        assert_eq!(all, again);
        let both1 =
            grid_classify(2, (-3, 3), (-3, 3), ResidueFilter::Mod4Both1, 0, 1 << 16).unwrap();
        assert_eq!(both1.len(), 4);
        for r in &both1 {
            assert_eq!(r.params.a.rem_euclid(4), 1);
            assert_eq!(r.params.b.rem_euclid(4), 1);
        }
        let mixed = grid_classify(
            2,
            (-3, 3),
            (-3, 3),
            ResidueFilter::Mod4OddNotBoth1,
            0,
            1 << 16,
        )
        .unwrap();
        assert_eq!(mixed.len(), 12);
    }

    #[test]
    fn cyclotomic_record() {
        let recs = grid_classify(2, (1, 1), (1, 1), ResidueFilter::All, 0, 1 << 16).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.status(), MonogenicStatus::Monogenic);
        assert_eq!(r.galois.label, GaloisLabel::C4);
        assert_eq!(r.field_disc, Some(BigInt::from(125)));
        assert_eq!(
            r.csv_row(),
            "2,1,1,1,5,5,Monogenic,,C4,125"
        );
        // Records survive a JSON round trip bit-for-bit.
        let js = serde_json::to_string(r).unwrap();
        let back: SearchRecord = serde_json::from_str(&js).unwrap();
        assert_eq!(&back, r);
    }

    #[test]
    fn family_walk_frozen() {
        // k = 0: the walk over prime t drops t = 3, 5 (a square inside one
        // invariant), t = 7, 13 (a prime shared between two invariants) and
        // keeps t = 2, 11, 29.
        let recs = family_records(0, 3, true, 0, 1 << 16).unwrap();
        let bs: Vec<i64> = recs.iter().map(|r| r.params.b).collect();
        assert_eq!(bs, vec![17, 89, 233]);
        for r in &recs {
            assert_eq!(r.params.a, 1);
            assert_eq!(r.galois.label, GaloisLabel::D4);
            assert_eq!(r.status(), MonogenicStatus::Monogenic);
        }
        let fields = distinct_fields(&recs).unwrap();
        assert_eq!(fields.classes.len(), 3);
        assert!(fields.unresolved.is_empty());
        // t = 7 was dropped by the product filter, yet its quartic is still
        // monogenic: W1 = 3·19 and W3 = -3·73 share a prime harmlessly.
        let dropped = classify_one(&QuinParams::new(2, 1, 57).unwrap(), 0, 1 << 16).unwrap();
        assert_eq!(dropped.status(), MonogenicStatus::Monogenic);
        // Non-monogenic records refuse to partition.
        assert!(distinct_fields(&[dropped.clone()]).is_ok());
        let bad = classify_one(&QuinParams::new(2, 1, 9).unwrap(), 0, 1 << 16).unwrap();
        assert!(distinct_fields(&[bad]).is_err());
    }

    #[test]
    fn family_poly_matches_pointwise() {
        for k in [-2, 0, 1, 3] {
            let g = family_invariant_poly(k).unwrap();
            for t in 1..=12 {
                let params = QuinParams::new(2, 8 * k + 1, 8 * t + 1).unwrap();
                let inv = params.invariants();
                let product = BigInt::from(inv.w1) * BigInt::from(inv.w2) * BigInt::from(inv.w3);
                assert_eq!(g.product().eval(&BigInt::from(t)), product, "k={k} t={t}");
            }
        }
    }

    #[test]
    fn squarefree_probe_agrees_with_verdicts() {
        // Under A ≡ B ≡ 1 (mod 4), monogenic exactly when every invariant
        // is squarefree; spot-check the equivalence on a strip that mixes
        // outcomes (b = 5, 9, 21 trip squares; b = 57 shares a prime
        // between W1 and W3 and stays monogenic).
        for b in [1i64, 5, 9, 13, 17, 21, 57] {
            let params = QuinParams::new(2, 1, b).unwrap();
            let sf = invariants_each_squarefree(&params, 1 << 16)
                .unwrap()
                .unwrap();
            let verdict = is_monogenic(&params, 0, 1 << 16).unwrap();
            assert_eq!(
                sf,
                verdict.status == MonogenicStatus::Monogenic,
                "b = {b}"
            );
        }
    }

    #[test]
    fn octic_grid_labels() {
        let recs = grid_classify(3, (9, 9), (9, 9), ResidueFilter::All, 0, 1 << 16).unwrap();
        assert_eq!(recs[0].galois.label, GaloisLabel::WreathC2sqC2);
        assert_eq!(recs[0].status(), MonogenicStatus::NotMonogenic);
        assert!(recs[0].verdict.obstruction_primes.contains(&2));
    }
}
