//! Scan the quartic grid A ≡ B ≡ 1 (mod 4) and cross-check the monogenicity
//! verdict against the squarefree test on the three invariants.
//!
//!     cargo run --example monogenic_quartics

use quintinomial::dedekind::MonogenicStatus;
use quintinomial::search::{grid_classify, invariants_each_squarefree, ResidueFilter};
use quintinomial::QuinParams;

fn main() -> quintinomial::Result<()> {
    let (seed, budget) = (0, 1 << 22);
    let records = grid_classify(2, (-41, 41), (-41, 41), ResidueFilter::Mod4Both1, seed, budget)?;

    let mut monogenic = 0;
    for rec in &records {
        // Every polynomial on this grid is irreducible, and the verdict is
        // equivalent to all of W1, W2, W3 being squarefree.
        let sf = invariants_each_squarefree(&rec.params, budget)?;
        let is_mono = rec.status() == MonogenicStatus::Monogenic;
        assert_eq!(Some(is_mono), sf, "verdict/squarefree mismatch at {}", rec.params);
        if is_mono {
            monogenic += 1;
        }
    }
    println!(
        "grid |A|,|B| <= 41, A = B = 1 mod 4: {} polynomials, {} monogenic",
        records.len(),
        monogenic
    );

    println!("\nfirst few monogenic rows:");
    println!("  A     B     W1    W2    W3      galois  field disc");
    for rec in records
        .iter()
        .filter(|r| r.status() == MonogenicStatus::Monogenic)
        .take(8)
    {
        let QuinParams { a, b, .. } = rec.params;
        let inv = &rec.invariants;
        let disc = rec.field_disc.as_ref().map(|d| d.to_string()).unwrap_or_default();
        println!(
            "  {a:<5} {b:<5} {:<5} {:<5} {:<7} {:<7} {disc}",
            inv.w1,
            inv.w2,
            inv.w3,
            format!("{:?}", rec.galois.label),
        );
    }
    Ok(())
}
