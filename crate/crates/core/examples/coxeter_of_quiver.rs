//! Cartan matrix, Coxeter matrix and Coxeter polynomial of a few quivers.
//!
//! Run with `cargo run --example coxeter_of_quiver`.

use coxpoly::coxeter::CoxeterData;
use coxpoly::quiver::{build_star, cartan_matrix, Quiver};

fn show(name: &str, q: &Quiver) -> coxpoly::Result<()> {
    let data = CoxeterData::new(cartan_matrix(q)?)?;
    println!("== {name}");
    print!("Cartan matrix:\n{}", data.cartan);
    print!("Coxeter matrix:\n{}", data.coxeter);
    println!("trace: {}", data.trace());
    println!("polynomial: {}  {}\n", data.chi, data.chi.to_wire());
    Ok(())
}

fn main() -> coxpoly::Result<()> {
    show("A3, linear", &Quiver::linear(3))?;
    show("Kronecker quiver", &Quiver::multi_arrow(2))?;
    show("D4 as the star T(1,1,1)", &build_star(&[1, 1, 1])?)?;

    let json = r#"{"n": 4, "arrows": [[1, 2], [1, 3], [2, 4], [3, 4]]}"#;
    let square = Quiver::from_json(json).expect("valid JSON");
    show("commutative square without relations", &square)?;
    Ok(())
}
