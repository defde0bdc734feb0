//! Compare the closed-form discriminant against a subresultant computation
//! for random parameters at degrees 4, 8, and 16.
//!
//!     cargo run --example discriminant_check

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quintinomial::poly::discriminant;
use quintinomial::quin::{build, disc_formula};
use quintinomial::QuinParams;

fn main() -> quintinomial::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 2..=4 {
        for _ in 0..25 {
            let a = loop {
                let a = rng.gen_range(-1000..=1000);
                if a != 0 {
                    break a;
                }
            };
            let b = loop {
                let b = rng.gen_range(-1000..=1000);
                if b != 0 {
                    break b;
                }
            };
            let params = QuinParams::new(n, a, b)?;
            let fast = disc_formula(&params)?;
            let slow = discriminant(&build(&params)?)?;
            assert_eq!(fast, slow, "disagreement at {params}");
        }
        println!("n={n}: 25 random (A, B) agree with the subresultant discriminant");
    }

    // One fully worked value: disc F[3,1,1] spelled out both ways.
    let params = QuinParams::new(3, 1, 1)?;
    println!("\ndisc {params} = {}", disc_formula(&params)?);
    Ok(())
}
