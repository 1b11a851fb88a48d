//! CSV tables of tree and three-branch canonical Coxeter polynomials.

use std::io::Write;

use super::verify::separation_families;

/// Rows `n,kind,params,coefficients` for every tree and every canonical
/// algebra `C(p1,p2,p3)` with nonnegative weight defect on `n <= max_size`
/// vertices. Coefficients use the bracketed ascending wire format.
pub fn write_tables(out: &mut dyn Write, max_size: usize) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "kind", "params", "coefficients"])?;
    for n in 1..=max_size {
        let (trees, canon) = separation_families(n).map_err(to_io)?;
        for (kind, family) in [("tree", trees), ("canonical", canon)] {
            for (label, chi) in family {
                w.write_record([n.to_string(), kind.to_string(), label, chi.to_wire()])?;
            }
        }
    }
    w.flush()
}

fn to_io(e: crate::error::Error) -> std::io::Error {
    std::io::Error::other(e)
}
