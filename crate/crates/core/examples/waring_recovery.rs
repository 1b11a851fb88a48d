//! Rebuild a characteristic polynomial from the power traces `tr(M^k)`.
//!
//! The partition expansion needs the sign `(-1)^r`, `r` the number of parts.
//! Taking the sign from the part sum instead already fails for A2.
//!
//! Run with `cargo run --example waring_recovery`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxpoly::coxeter::coxeter_matrix;
use coxpoly::homological::{
    partitions_of, waring_alpha, waring_coefficient, waring_coefficients, SignConvention,
};
use coxpoly::linalg::IntMatrix;
use coxpoly::quiver::{cartan_matrix, Quiver};

fn main() -> coxpoly::Result<()> {
    println!("partitions of 4 and their weights:");
    for p in partitions_of(4) {
        println!("  {:?}  alpha = {}", p.parts(), waring_alpha(&p));
    }

    let phi = coxeter_matrix(&cartan_matrix(&Quiver::linear(2))?)?;
    let s = phi.power_traces(2)?;
    println!("\nA2: S1 = {}, S2 = {}", s[0], s[1]);
    println!(
        "  constant term, sign by part count: {}",
        waring_coefficient(&s, 2, SignConvention::PartCount)
    );
    println!(
        "  constant term, sign by part sum:   {}",
        waring_coefficient(&s, 2, SignConvention::PartSum)
    );
    println!("  actual polynomial: {}", phi.char_poly()?);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!();
    for _ in 0..4 {
        let n = rng.gen_range(2..=6);
        let m = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-3..=3)));
        let rebuilt = waring_coefficients(&m.power_traces(n)?)?;
        let direct = m.char_poly()?;
        println!(
            "{n}x{n}: rebuilt {}  direct {}  equal: {}",
            rebuilt.to_wire(),
            direct.to_wire(),
            rebuilt == direct
        );
    }
    Ok(())
}
