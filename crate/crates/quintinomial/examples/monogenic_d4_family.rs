//! A one-parameter family of monogenic dihedral octics: walk the parameter,
//! keep the values whose invariant product is squarefree, and confirm the
//! resulting fields are pairwise distinct by their discriminants.
//!
//!     cargo run --example monogenic_d4_family

use quintinomial::dedekind::MonogenicStatus;
use quintinomial::galois::GaloisLabel;
use quintinomial::search::{distinct_fields, family_records};

fn main() -> quintinomial::Result<()> {
    let (seed, budget) = (0, 1 << 22);
    for k in [0i64, 1] {
        let records = family_records(k, 8, true, seed, budget)?;
        println!("k = {k}: first {} prime parameters with squarefree invariants", records.len());
        for rec in &records {
            assert_eq!(rec.status(), MonogenicStatus::Monogenic);
            assert_eq!(rec.galois.label, GaloisLabel::D4);
            let disc = rec.field_disc.as_ref().expect("monogenic records carry a field disc");
            println!("  {}  field disc = {disc}", rec.params);
        }

        let fields = distinct_fields(&records)?;
        println!(
            "  -> {} distinct fields, {} unresolved collisions\n",
            fields.classes.len(),
            fields.unresolved.len()
        );
        assert_eq!(fields.classes.len(), records.len());
        assert!(fields.unresolved.is_empty());
    }
    Ok(())
}
