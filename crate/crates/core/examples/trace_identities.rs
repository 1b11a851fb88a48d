//! Traces of Coxeter powers recovered from Euler forms of the algebra and
//! of its enveloping algebra, compared with `tr(φ^k)` computed directly.
//!
//! Run with `cargo run --example trace_identities`.

use coxpoly::coxeter::CoxeterData;
use coxpoly::homological::{
    bimodule_dims, trace_identity_rhs, trace_identity_with, SimpleIndexOrder,
};
use coxpoly::linalg::IntMatrix;
use coxpoly::quiver::{build_star, canonical_cartan, cartan_matrix, Quiver};

fn report(name: &str, cartan: &IntMatrix) -> coxpoly::Result<()> {
    let direct = CoxeterData::new(cartan.clone())?.coxeter.power_traces(4)?;
    println!("{name}");
    for k in 1..=4u32 {
        let euler = trace_identity_rhs(cartan, k)?;
        let mark = if euler == direct[k as usize - 1] {
            "ok"
        } else {
            "MISMATCH"
        };
        let swapped = if k >= 3 {
            format!(
                ", swapped last simple gives {}",
                trace_identity_with(cartan, k, SimpleIndexOrder::LastFirst)?
            )
        } else {
            String::new()
        };
        println!(
            "  k={k}: tr(phi^k) = {}, Euler forms give {euler} [{mark}]{swapped}",
            direct[k as usize - 1]
        );
    }
    Ok(())
}

fn main() -> coxpoly::Result<()> {
    let a2 = cartan_matrix(&Quiver::linear(2))?;
    let (dim_a, dim_da) = bimodule_dims(&a2)?;
    let show = |v: &[num_bigint::BigInt]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!(
        "A2: dim A = ({}), dim DA = ({})\n",
        show(&dim_a),
        show(&dim_da)
    );

    report("A2", &a2)?;
    report("A3", &cartan_matrix(&Quiver::linear(3))?)?;
    report("D5", &cartan_matrix(&build_star(&[1, 1, 2])?)?)?;
    report("Kronecker", &cartan_matrix(&Quiver::multi_arrow(2))?)?;
    report("C(2,3,3)", &canonical_cartan(&[2, 3, 3])?)?;
    Ok(())
}
