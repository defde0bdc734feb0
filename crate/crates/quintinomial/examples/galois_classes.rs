//! Decide the Galois group of the quartic resolvent from square tests on the
//! invariants, then corroborate with factor patterns over small prime fields.
//!
//!     cargo run --example galois_classes

use quintinomial::galois::{frobenius_fingerprint, octic_wreath, quartic_galois, GaloisLabel};

fn main() -> quintinomial::Result<()> {
    let mut c4 = Vec::new();
    let mut d4 = Vec::new();
    for a in (-21..=21).filter(|a| a % 4 == 1) {
        for b in (-21..=21).filter(|b| b % 4 == 1) {
            match quartic_galois(a, b)?.label {
                GaloisLabel::C4 => c4.push((a, b)),
                GaloisLabel::D4 => d4.push((a, b)),
                other => panic!("unexpected label {other:?} at ({a}, {b})"),
            }
        }
    }
    println!("grid |A|,|B| <= 21, A = B = 1 mod 4: {} C4, {} D4", c4.len(), d4.len());
    println!("cyclic pairs: {c4:?}");

    // The C4/D4 call is certified by W1*W2*W3 being a square; the Frobenius
    // fingerprint sees the same thing through factor patterns mod q.
    for &(a, b) in c4.iter().chain(d4.iter().take(2)) {
        let fp = frobenius_fingerprint(a, b, 500, 0)?;
        println!(
            "\nF[2,{a},{b}]: {} primes sampled, label {:?}",
            fp.scanned,
            fp.label()
        );
        for (pattern, count) in &fp.patterns {
            println!("  {pattern:?} x{count}");
        }
        match fp.d4_witness {
            // A [1,1,2] split is impossible in a C4 extension.
            Some(q) => println!("  [1,1,2] first seen at q={q}"),
            None => println!("  no [1,1,2] pattern — consistent with C4"),
        }
    }

    // At degree 8 the interesting dichotomy is wreath vs not: the full
    // group needs all six invariant products to be non-squares.
    println!();
    for (a, b) in [(9i64, 9i64), (1, 5), (29, 61)] {
        let class = octic_wreath(a, b)?;
        let squares: Vec<&str> = class
            .evidence
            .iter()
            .filter(|c| c.is_square)
            .map(|c| c.expr.as_str())
            .collect();
        println!("F[3,{a},{b}]: {:?}  (squares among invariant products: {squares:?})", class.label);
    }
    Ok(())
}
