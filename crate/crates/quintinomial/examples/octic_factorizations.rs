//! The two-parameter families of reducible octics: for odd c, d the product
//! of a palindromic quartic pair lands back in the quintinomial family, and
//! membership is decidable with an explicit certificate.
//!
//!     cargo run --example octic_factorizations

use quintinomial::quin::{build, octic_family_membership};
use quintinomial::QuinParams;

fn main() -> quintinomial::Result<()> {
    println!("  c   d  ->  A     B       certificate               quartic factors");
    for c in [1i64, 3, 5] {
        for d in [-1i64, 1, 3] {
            let a = 2 * d - c * c;
            // The two parameter curves differ only in the sign in front of
            // the 2c^2 term of B.
            for b in [d * d + 2 - 2 * c * c, d * d + 2 + 2 * c * c] {
                if a == 0 || b == 0 {
                    continue;
                }
                let cert = octic_family_membership(a, b)?
                    .unwrap_or_else(|| panic!("({a}, {b}) must split"));
                let target = build(&QuinParams::new(3, a, b)?)?;
                assert!(cert.verifies(&target));
                let (u, v) = &cert.factors;
                let kind = format!("{:?}", cert.kind);
                println!(" {c:>3} {d:>3}  -> {a:<5} {b:<7} {kind:<26} ({u}) ({v})");
            }
        }
    }

    // Anything off both parameter curves stays whole (the test applies to
    // A = B = 1 mod 4, where the splitting theorem lives).
    for (a, b) in [(1, 13), (9, 9), (-3, 21)] {
        assert!(octic_family_membership(a, b)?.is_none());
        println!("({a}, {b}): not in either family — no quartic splitting");
    }
    Ok(())
}
