//! Equal-coefficient octics F[3,A,A] with A ≡ 1 (mod 4), A ≠ 1 are never
//! monogenic: Dedekind's criterion at q = 2 produces a nonconstant gcd
//! witness, so 2 divides the index for every order generated by a root.
//!
//!     cargo run --example dedekind_witness

use quintinomial::dedekind::dedekind_check;
use quintinomial::modp::{factor_mod, mod_reduce};
use quintinomial::quin::{build, irreducible};
use quintinomial::QuinParams;

fn main() -> quintinomial::Result<()> {
    for a in [5i64, -3, 9, -7, 13] {
        let params = QuinParams::new(3, a, a)?;
        let f = build(&params)?;
        assert!(irreducible(&params)?.is_irreducible());

        // Mod 2 the polynomial collapses to the square of the degree-4
        // cyclotomic reduction — the repeated factor that makes 2 a
        // candidate in the first place.
        let shape: Vec<(usize, u32)> = factor_mod(&mod_reduce(&f, 2)?, 0)?
            .factors
            .iter()
            .map(|(g, e)| (g.degree().unwrap(), *e))
            .collect();
        assert_eq!(shape, vec![(4, 2)]);

        let outcome = dedekind_check(&f, 2, 0)?;
        assert!(outcome.divides_index);
        println!(
            "{params}: 2 divides the index; gcd witness coeffs (mod 2) = {:?}",
            outcome.gcd_witness.coeffs()
        );

        // The criterion's quotient (h1*h2 - T)/2 carries the interesting
        // structure: it reduces to x (x+1)^2 times the same quartic, for
        // every A in the family.
        let rem_shape: Vec<(usize, u32)> = factor_mod(&mod_reduce(&outcome.f, 2)?, 0)?
            .factors
            .iter()
            .map(|(g, e)| (g.degree().unwrap(), *e))
            .collect();
        println!("  remainder factor shape mod 2: {rem_shape:?}");
        assert_eq!(rem_shape, vec![(1, 1), (1, 2), (4, 1)]);
    }

    // The excluded point A = 1 splits into cyclotomic factors instead.
    let split = irreducible(&QuinParams::new(3, 1, 1)?)?;
    println!("\nF[3,1,1] irreducible: {}", split.is_irreducible());
    Ok(())
}
