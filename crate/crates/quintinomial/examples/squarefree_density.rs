//! Density bookkeeping for squarefree specializations of a factored integer
//! polynomial: local obstruction scan, the truncated density constant, and
//! an exact count over prime arguments.
//!
//!     cargo run --example squarefree_density

use quintinomial::density::{cg_truncated, ng_count, obstruction_scan, FactoredPoly};
use quintinomial::IntPoly;

fn main() -> quintinomial::Result<()> {
    // G(t) = (4t - 1)(12t + 5)(16t^2 - 8t + 5), the invariant product of the
    // equal-coefficient octics taken at A = 4t + 1.
    let g = FactoredPoly::new(vec![
        IntPoly::from_i64(&[-1, 4]),
        IntPoly::from_i64(&[5, 12]),
        IntPoly::from_i64(&[5, -8, 16]),
    ])?;

    let scan = obstruction_scan(&g)?;
    println!("candidate primes (2l <= deg G + 2): {:?}", scan.candidates);
    println!("local obstructions found:           {:?}", scan.obstructed);
    assert!(scan.obstructed.is_empty(), "no prime kills every residue class");

    let cg = cg_truncated(&g, 100)?;
    println!("\nC_G truncated at l <= 100: {} (= {}/{})", cg.decimal, cg.numerator, cg.denominator);
    assert!(!cg.vanishes);

    let ng = ng_count(&g, 10_000, 1 << 22)?;
    println!(
        "\nprimes p <= {}: {} tested, {} squarefree G(p), {} not, {} undecided",
        ng.x, ng.primes_tested, ng.squarefree, ng.not_squarefree, ng.undecided
    );

    // The empirical ratio should hover near the (prime-restricted analogue
    // of the) density constant rather than collapse to zero.
    let ratio = ng.squarefree as f64 / ng.primes_tested as f64;
    println!("empirical squarefree ratio: {ratio:.4}");
    Ok(())
}
