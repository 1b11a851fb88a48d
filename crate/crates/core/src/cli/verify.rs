//! Invariant suites behind `coxpoly verify`.
//!
//! Every suite is deterministic: random instances come from a fixed seed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{separate_trace_minus_one, weight_type, RepType, Separation};
use crate::closed_forms::{
    coeff_t_window, m_cinv_vector, poly_boldt_t, poly_linear_a, poly_t_one,
    predicted_canonical_coeffs, star_coxeter_blocks,
};
use crate::coxeter::{
    coxeter_matrix, coxeter_polynomial, ope_coefficients, ope_coxeter_matrix, CoxeterData,
};
use crate::error::Result;
use crate::homological::{
    trace_identity_rhs, waring_coefficient, waring_coefficients, SignConvention,
};
use crate::linalg::IntMatrix;
use crate::poly::Poly;
use crate::quiver::{
    build_star, canonical_base, canonical_cartan, canonical_weights, cartan_matrix,
    enumerate_trees, one_point_ext_cartan, random_acyclic_quiver, tree_shape, Quiver, TreeShape,
};

const SEED: u64 = 0x00c0_ffee;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Ope,
    Traces,
    Waring,
    Separation,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Ope => "ope",
            Suite::Traces => "traces",
            Suite::Waring => "waring",
            Suite::Separation => "separation",
        })
    }
}

/// Pass count and one line per counterexample.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_size: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_size: usize) -> Self {
        SuiteReport {
            suite,
            max_size,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(describe());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {} (max size {})", self.suite, self.max_size)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.failures.len())?;
        for c in &self.failures {
            writeln!(f, "counterexample: {c}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, max_size: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(suite, max_size);
    match suite {
        Suite::ClosedForms => closed_forms(&mut r)?,
        Suite::Ope => ope(&mut r)?,
        Suite::Traces => traces(&mut r)?,
        Suite::Waring => waring(&mut r)?,
        Suite::Separation => separation(&mut r)?,
    }
    Ok(r)
}

/// Short name of a tree: `A<n>`, `T(a,b,c)` or its canonical code.
pub(crate) fn tree_label(q: &Quiver) -> Result<String> {
    Ok(match tree_shape(q)? {
        TreeShape::LinearA(n) => format!("A{n}"),
        TreeShape::StarT(a, b, c) => format!("T({a},{b},{c})"),
        TreeShape::OtherTree => crate::quiver::canonical_form(q)?,
    })
}

fn weights_label(w: &[u64]) -> String {
    let parts: Vec<String> = w.iter().map(u64::to_string).collect();
    format!("C({})", parts.join(","))
}

fn star_poly(lengths: &[usize]) -> Result<Poly> {
    coxeter_polynomial(&cartan_matrix(&build_star(lengths)?)?)
}

/// Triples `a <= b <= c`, all at least 1, with `a + b + c <= total`.
fn sorted_triples(total: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=total {
        for b in a..=total {
            for c in b..=total {
                if a + b + c <= total {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn closed_forms(r: &mut SuiteReport) -> Result<()> {
    let n_max = r.max_size;
    for n in 1..=n_max {
        let direct = coxeter_polynomial(&cartan_matrix(&Quiver::linear(n))?)?;
        r.check(direct == poly_linear_a(n), || {
            format!("A{n}: got {}", direct.to_wire())
        });
    }
    for n in 4..=n_max {
        let direct = star_poly(&[1, 1, n - 3])?;
        let mut d = vec![0i64; n + 1];
        for k in [0, 1, n - 1, n] {
            d[k] = 1;
        }
        r.check(direct == Poly::from_i64s(&d), || {
            format!("D{n}: got {}", direct.to_wire())
        });
    }
    for (a, b, c) in sorted_triples(n_max.saturating_sub(1)) {
        let tag = format!("T({a},{b},{c})");
        let direct = star_poly(&[a, b, c])?;
        let boldt = poly_boldt_t(a, b, c);
        r.check(boldt == direct, || {
            format!(
                "{tag}: product formula {} vs {}",
                boldt.to_wire(),
                direct.to_wire()
            )
        });
        for ell in 0..=a {
            let want = BigInt::from(coeff_t_window(a, b, c, ell)?);
            let got = direct.coeff(a + b + c - ell);
            r.check(got == want, || {
                format!("{tag}: window l={ell} gives {want}, matrix {got}")
            });
        }
        if a == 1 {
            let explicit = poly_t_one(b, c);
            r.check(explicit == direct, || {
                format!("{tag}: explicit {}", explicit.to_wire())
            });
        }
        let blocks = star_coxeter_blocks(a, b, c);
        let phi = coxeter_matrix(&cartan_matrix(&build_star(&[a, b, c])?)?)?;
        r.check(blocks == phi, || {
            format!("{tag}: block Coxeter matrix differs")
        });
        let (star, m) = canonical_base(&[a as u64 + 1, b as u64 + 1, c as u64 + 1])?;
        let cinv = cartan_matrix(&star)?.inverse_unimodular()?;
        let got = cinv.left_mul_vec(&m)?;
        r.check(got == m_cinv_vector(a, b, c), || {
            format!("{tag}: m C^-1 = {got:?}")
        });
    }
    // canonical algebras have a + b + c + 2 vertices
    for (a, b, c) in sorted_triples(n_max.saturating_sub(2)) {
        let Ok(predicted) = predicted_canonical_coeffs(a, b, c) else {
            continue;
        };
        let chi = coxeter_polynomial(&canonical_cartan(&[
            a as u64 + 1,
            b as u64 + 1,
            c as u64 + 1,
        ])?)?;
        check_predicted(r, (a, b, c), &predicted, &chi);
    }
    Ok(())
}

fn check_predicted(
    r: &mut SuiteReport,
    (a, b, c): (usize, usize, usize),
    predicted: &BTreeMap<i64, i64>,
    chi: &Poly,
) {
    let n = (a + b + c + 1) as i64;
    for (&ell, &want) in predicted {
        let got = chi.coeff_signed(n - ell);
        r.check(got == BigInt::from(want), || {
            format!(
                "C({},{},{}): coefficient of x^{} is {got}, predicted {want}",
                a + 1,
                b + 1,
                c + 1,
                n - ell
            )
        });
    }
}

/// Random base quiver on `1..=max_base` vertices and module entries in `0..=3`.
pub(crate) fn random_extension(
    rng: &mut ChaCha8Rng,
    max_base: usize,
) -> Result<(IntMatrix, Vec<BigInt>)> {
    let n = rng.gen_range(1..=max_base);
    let base = cartan_matrix(&random_acyclic_quiver(rng, n, 2))?;
    let m = (0..n).map(|_| BigInt::from(rng.gen_range(0..=3))).collect();
    Ok((base, m))
}

fn ope(r: &mut SuiteReport) -> Result<()> {
    if r.max_size < 2 {
        return Ok(());
    }
    let max_base = (r.max_size - 1).min(8);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..200 {
        let (base, m) = random_extension(&mut rng, max_base)?;
        let recursion = ope_coefficients(&base, &m)?;
        let blocks = ope_coxeter_matrix(&base, &m)?.char_poly()?;
        let cartan = coxeter_polynomial(&one_point_ext_cartan(&base, &m)?)?;
        r.check(recursion == blocks && blocks == cartan, || {
            format!(
                "case {case} (base size {}, m = {m:?}): recursion {}, block matrix {}, Cartan {}",
                base.rows(),
                recursion.to_wire(),
                blocks.to_wire(),
                cartan.to_wire()
            )
        });
    }
    Ok(())
}

fn check_traces(r: &mut SuiteReport, name: &str, cartan: &IntMatrix) -> Result<()> {
    let data = CoxeterData::new(cartan.clone())?;
    let traces = data.coxeter.power_traces(4)?;
    for (k, want) in (1..=4u32).zip(traces) {
        let got = trace_identity_rhs(cartan, k)?;
        r.check(got == want, || {
            format!("{name}: tr(phi^{k}) = {want}, Euler-form side {got}")
        });
    }
    Ok(())
}

fn traces(r: &mut SuiteReport) -> Result<()> {
    let n_max = r.max_size;
    for n in 1..=n_max.min(8) {
        for q in enumerate_trees(n) {
            check_traces(r, &tree_label(&q)?, &cartan_matrix(&q)?)?;
        }
    }
    for size in 4..=n_max.min(10) {
        for t in 2..=size - 2 {
            for w in canonical_weights(t, size) {
                check_traces(r, &weights_label(&w), &canonical_cartan(&w)?)?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..50 {
        let n = rng.gen_range(1..=n_max.clamp(1, 5));
        let q = random_acyclic_quiver(&mut rng, n, 2);
        check_traces(
            r,
            &format!("random quiver {case} {}", q.to_json()),
            &cartan_matrix(&q)?,
        )?;
    }
    Ok(())
}

/// Random square matrix of size `1..=max_n` with entries in `[-3, 3]`.
pub(crate) fn random_small_matrix(rng: &mut ChaCha8Rng, max_n: usize) -> IntMatrix {
    let n = rng.gen_range(1..=max_n);
    IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-3..=3)))
}

fn waring(r: &mut SuiteReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let max_n = r.max_size.clamp(1, 7);
    for case in 0..100 {
        let m = random_small_matrix(&mut rng, max_n);
        let traces = m.power_traces(m.rows())?;
        let rebuilt = waring_coefficients(&traces)?;
        let direct = m.char_poly()?;
        r.check(rebuilt == direct, || {
            format!(
                "matrix {case}:\n{m}rebuilt {}, direct {}",
                rebuilt.to_wire(),
                direct.to_wire()
            )
        });
    }
    // with the sign taken from the part sum, A2 at l = 2 comes out 0
    let a2 = coxeter_matrix(&cartan_matrix(&Quiver::linear(2))?)?;
    let s = a2.power_traces(2)?;
    let part_count = waring_coefficient(&s, 2, SignConvention::PartCount);
    let part_sum = waring_coefficient(&s, 2, SignConvention::PartSum);
    r.check(part_count == BigInt::from(1).into(), || {
        format!("A2 constant term by part count is {part_count}")
    });
    r.check(part_sum == BigInt::from(0).into(), || {
        format!("A2 constant term by part sum is {part_sum}")
    });
    Ok(())
}

type Labelled = Vec<(String, Poly)>;

/// Trees on `n` vertices and three-branch canonical algebras with
/// nonnegative weight defect on `n` vertices.
pub(crate) fn separation_families(n: usize) -> Result<(Labelled, Labelled)> {
    let trees = enumerate_trees(n)
        .iter()
        .map(|q| Ok((tree_label(q)?, coxeter_polynomial(&cartan_matrix(q)?)?)))
        .collect::<Result<_>>()?;
    let mut canon = Vec::new();
    for w in canonical_weights(3, n) {
        if weight_type(&w)?.kind == RepType::Domestic {
            continue;
        }
        canon.push((
            weights_label(&w),
            coxeter_polynomial(&canonical_cartan(&w)?)?,
        ));
    }
    Ok((trees, canon))
}

fn separation(r: &mut SuiteReport) -> Result<()> {
    for n in 1..=r.max_size {
        let (trees, canon) = separation_families(n)?;
        let tree_polys: BTreeMap<&[BigInt], &str> = trees
            .iter()
            .map(|(l, p)| (p.coeffs(), l.as_str()))
            .collect();
        for (label, chi) in &canon {
            let clash = tree_polys.get(chi.coeffs());
            r.check(clash.is_none(), || {
                format!(
                    "{label} and tree {} share {}",
                    clash.unwrap(),
                    chi.to_wire()
                )
            });
        }
        for (label, chi) in &trees {
            let sep = separate_trace_minus_one(chi)?;
            r.check(sep == Separation::Tree, || {
                format!(
                    "tree {label} ({}) labelled {}",
                    chi.to_wire(),
                    sep.label_text()
                )
            });
        }
        for (label, chi) in &canon {
            let sep = separate_trace_minus_one(chi)?;
            r.check(sep != Separation::Tree, || {
                format!("{label} ({}) labelled tree type", chi.to_wire())
            });
        }
    }
    Ok(())
}

impl Separation {
    fn label_text(self) -> String {
        match self {
            Separation::Tree => "tree type".to_string(),
            Separation::Canonical(c) => format!("canonical t=3 (condition {c})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passing_suites_at_small_size() {
        for suite in [Suite::ClosedForms, Suite::Ope, Suite::Traces, Suite::Waring] {
            let r = run_suite(suite, 7).unwrap();
            assert!(r.failures.is_empty(), "{r}");
            assert!(r.passed > 0);
        }
    }

    #[test]
    fn separation_reports_counterexamples() {
        let r = run_suite(Suite::Separation, 6).unwrap();
        assert!(r.failures.is_empty(), "{r}");
        let r = run_suite(Suite::Separation, 7).unwrap();
        assert!(
            r.failures.iter().any(|f| f.starts_with("tree T(1,2,3)")),
            "{r}"
        );
    }
}
