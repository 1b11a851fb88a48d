//! A one-point extension B[M] three ways: the coefficient recursion on
//! `χ_B` and the twisted Euler values `<m φ_B^i, m>`, the characteristic
//! polynomial of the block Coxeter matrix, and the Coxeter polynomial of the
//! block Cartan matrix.
//!
//! Run with `cargo run --example one_point_extension`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxpoly::coxeter::{
    coxeter_polynomial, ope_coefficients, ope_coxeter_matrix, twisted_euler_sequence,
};
use coxpoly::quiver::{cartan_matrix, one_point_ext_cartan, random_acyclic_quiver};

fn main() -> coxpoly::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..5 {
        let n = rng.gen_range(2..=6);
        let q = random_acyclic_quiver(&mut rng, n, 2);
        let base = cartan_matrix(&q)?;
        let m: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(0..=3))).collect();

        let twisted = twisted_euler_sequence(&base, &m, n - 1)?;
        let recursion = ope_coefficients(&base, &m)?;
        let blocks = ope_coxeter_matrix(&base, &m)?.char_poly()?;
        let direct = coxeter_polynomial(&one_point_ext_cartan(&base, &m)?)?;

        println!("case {case}: base {}", q.to_json());
        let m_text: Vec<String> = m.iter().map(BigInt::to_string).collect();
        let tw_text: Vec<String> = twisted.iter().map(BigInt::to_string).collect();
        println!("  m = ({})", m_text.join(", "));
        println!("  <m phi^i, m> = [{}]", tw_text.join(", "));
        println!("  recursion     {}", recursion.to_wire());
        println!("  block matrix  {}", blocks.to_wire());
        println!("  block Cartan  {}", direct.to_wire());
        println!("  agree: {}\n", recursion == blocks && blocks == direct);
    }
    Ok(())
}
