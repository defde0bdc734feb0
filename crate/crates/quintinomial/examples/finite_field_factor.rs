//! Factor quintinomials over small prime fields and multiply the pieces back
//! together as a self-check.
//!
//!     cargo run --example finite_field_factor

use quintinomial::modp::{factor_mod, mod_reduce};
use quintinomial::quin::build;
use quintinomial::QuinParams;

fn main() -> quintinomial::Result<()> {
    let params = QuinParams::new(3, 9, 9)?;
    let f = build(&params)?;
    println!("{params} over small prime fields:\n");

    for q in [2u64, 3, 5, 7, 11, 13] {
        let fq = mod_reduce(&f, q)?;
        let fac = factor_mod(&fq, 0)?;
        // Reassemble: unit times the product of prime powers.
        assert_eq!(fac.product(), fq, "factors must multiply back mod {q}");

        let shape: Vec<String> = fac
            .factors
            .iter()
            .map(|(g, e)| {
                let d = g.degree().unwrap();
                if *e == 1 {
                    format!("deg {d}")
                } else {
                    format!("(deg {d})^{e}")
                }
            })
            .collect();
        println!("mod {q:>2}: unit {} * [{}]", fac.unit, shape.join(", "));
    }

    // Degree patterns across unramified primes are Frobenius cycle types;
    // the multiset for a fixed prime is reproducible run to run.
    let again = factor_mod(&mod_reduce(&f, 13)?, 12345)?;
    let degrees: Vec<usize> = again.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
    println!("\nmod 13 with a different seed, same degrees: {degrees:?}");
    Ok(())
}
