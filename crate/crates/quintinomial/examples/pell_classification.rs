//! Walk the Pell equation X^2 - 5Y^2 = -4 along odd Lucas/Fibonacci indices,
//! recover the (A, B) parameters it classifies, and show which invariant
//! degenerates to a Lucas square on the way.
//!
//!     cargo run --example pell_classification

use quintinomial::lucas::{ab_from_pell, lucas, pell_solution, pqr_residual, SignPair};
use quintinomial::QuinInvariants;

fn main() -> quintinomial::Result<()> {
    println!("  n   X=L(2n-1)  Y=F(2n-1)   A        B        degenerate square");
    for n in 1..=14 {
        let (x, y) = pell_solution(n)?;
        let both = num_bigint::BigInt::from(5) * &y * &y;
        assert_eq!(&x * &x - both, num_bigint::BigInt::from(-4));
        match ab_from_pell(n)? {
            None => println!(" {n:>3}  {x:>9}  {y:>9}   -        -        -"),
            Some((a, b)) => {
                let square = match n.rem_euclid(6) {
                    1 => {
                        let l = lucas(n - 2)?;
                        format!("W1 = L({})^2 = {}", n - 2, &l * &l)
                    }
                    4 => {
                        let l = lucas(n + 1)?;
                        format!("W2 = L({})^2 = {}", n + 1, &l * &l)
                    }
                    _ => "-".into(),
                };
                println!(" {n:>3}  {x:>9}  {y:>9}   {a:<8} {b:<8} {square}");
            }
        }
    }

    // The gcd triples (P, Q, R) compatible with a monogenic cyclic quartic
    // with A, B > 0 are cut out by a quartic form; its only zeros in the
    // small coprime range are three sporadic triples.
    println!("\nzeros of the positive-sign residual with P = 1, R in {{5, 13, 65}}, Q <= 20:");
    for r in [5i128, 13, 65] {
        for q in 1..=20i128 {
            if pqr_residual(SignPair::PosPos, 1, q, r) == num_bigint::BigInt::from(0) {
                println!("  (P, Q, R) = (1, {q}, {r})");
            }
        }
    }

    // Spot-check one classified pair against its invariants.
    let inv = QuinInvariants::new(29, 61);
    println!("\n(A, B) = (29, 61): W1={} W2={} W3={}", inv.w1, inv.w2, inv.w3);
    Ok(())
}
