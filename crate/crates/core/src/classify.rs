//! Combinatorial classification of connected piecewise hereditary algebras
//! from their Coxeter polynomial.
//!
//! The trace of the Coxeter matrix separates three cases: above -1 the
//! algebra is of path-algebra type over a non-tree graph, below -1 it is of
//! canonical type with more than three branches. At exactly -1 the next few
//! coefficients decide between trees and three-branch canonical algebras.
//!
//! None of these routines can check that the input really is piecewise
//! hereditary; the conclusions only hold under that assumption.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coxeter::CoxeterData;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quiver::AlgebraSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepType {
    Domestic,
    Tubular,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Domestic => "domestic",
            RepType::Tubular => "tubular",
            RepType::Wild => "wild",
        })
    }
}

/// Weight defect `δ = t - 2 - Σ 1/p_i` and the representation type its sign
/// selects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightType {
    pub delta: BigRational,
    pub kind: RepType,
}

pub fn weight_type(weights: &[u64]) -> Result<WeightType> {
    if weights.len() < 2 || weights.iter().any(|&p| p < 2) {
        return Err(Error::InvalidWeights {
            weights: weights.to_vec(),
        });
    }
    let t = BigRational::from_integer(BigInt::from(weights.len()));
    let two = BigRational::from_integer(BigInt::from(2));
    let inv_sum: BigRational = weights
        .iter()
        .map(|&p| BigRational::new(BigInt::one(), BigInt::from(p)))
        .sum();
    let delta = t - two - inv_sum;
    let kind = if delta.is_negative() {
        RepType::Domestic
    } else if delta.is_zero() {
        RepType::Tubular
    } else {
        RepType::Wild
    };
    Ok(WeightType { delta, kind })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branches {
    Three,
    MoreThanThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    /// Path algebra of a quiver whose underlying graph is not a tree.
    NonTreeHereditary,
    /// Path algebra of a tree.
    TreeType,
    CanonicalType {
        branches: Branches,
        rep_type: Option<RepType>,
    },
    /// Trace is -1; the coefficient test is still to be applied.
    TraceMinusOne,
}

/// Classification from the trace alone.
pub fn trace_trichotomy(trace: &BigInt) -> ClassLabel {
    let minus_one = -BigInt::one();
    match trace.cmp(&minus_one) {
        std::cmp::Ordering::Greater => ClassLabel::NonTreeHereditary,
        std::cmp::Ordering::Less => ClassLabel::CanonicalType {
            branches: Branches::MoreThanThree,
            rep_type: None,
        },
        std::cmp::Ordering::Equal => ClassLabel::TraceMinusOne,
    }
}

/// The three coefficient patterns singling out three-branch canonical type.
///
/// With `N = n + 1` the matrix size and `λ_k` the coefficient of `x^k`:
/// * `I`: `λ_{n-1} = 0`, `λ_{n-2} = λ_{n-3} = -1`, `λ_{n-4} = 0`;
/// * `II`: `λ_{n-1} = λ_{n-2} = 0` and `λ_{n-ℓ} <= -1` for some `ℓ >= 3`;
/// * `III`: `λ_{n-1} = 1` and `λ_{n-ℓ} <= 0` for some `ℓ >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    I,
    II,
    III,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Separation {
    Tree,
    Canonical(Condition),
}

impl Separation {
    pub fn label(self) -> ClassLabel {
        match self {
            Separation::Tree => ClassLabel::TreeType,
            Separation::Canonical(_) => ClassLabel::CanonicalType {
                branches: Branches::Three,
                rep_type: None,
            },
        }
    }
}

/// Every condition among I, II, III that `chi` satisfies, in that order.
///
/// Indices below zero are never satisfied; in particular condition I needs
/// `n >= 4`.
pub fn satisfied_conditions(chi: &Poly) -> Result<Vec<Condition>> {
    let big_n = chi.degree().unwrap_or(0);
    let n = big_n as i64 - 1;
    if n < 0 || !chi.coeff_signed(n).is_one() {
        return Err(Error::TraceMismatch {
            degree: n.max(0) as usize,
            found: chi.coeff_signed(n).to_string(),
        });
    }
    let lam = |ell: i64| -> Option<BigInt> { (n - ell >= 0).then(|| chi.coeff_signed(n - ell)) };
    let is = |ell: i64, v: i64| lam(ell) == Some(BigInt::from(v));
    let exists_at_most = |from: i64, bound: i64| {
        (from..=n).any(|ell| lam(ell).is_some_and(|x| x <= BigInt::from(bound)))
    };

    let mut out = Vec::new();
    if is(1, 0) && is(2, -1) && is(3, -1) && is(4, 0) {
        out.push(Condition::I);
    }
    if is(1, 0) && is(2, 0) && exists_at_most(3, -1) {
        out.push(Condition::II);
    }
    if is(1, 1) && exists_at_most(2, 0) {
        out.push(Condition::III);
    }
    Ok(out)
}

/// Decide tree type versus three-branch canonical type for a Coxeter
/// polynomial whose trace is -1.
pub fn separate_trace_minus_one(chi: &Poly) -> Result<Separation> {
    Ok(satisfied_conditions(chi)?
        .first()
        .map_or(Separation::Tree, |&c| Separation::Canonical(c)))
}

/// Outcome of [`classify_algebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub label: ClassLabel,
    pub trace: BigInt,
    pub chi: Poly,
    pub condition: Option<Condition>,
    pub weight: Option<WeightType>,
}

/// Coxeter polynomial, trace test, then the coefficient test when the trace
/// is -1. `weights`, when given, attaches the weight defect of the
/// canonical algebra `spec` describes.
pub fn classify_algebra(spec: &AlgebraSpec, weights: Option<&[u64]>) -> Result<Classification> {
    let data = CoxeterData::new(spec.cartan()?)?;
    let trace = data.trace();
    let weight = weights.map(weight_type).transpose()?;
    let mut condition = None;
    let mut label = trace_trichotomy(&trace);
    if label == ClassLabel::TraceMinusOne {
        let sep = separate_trace_minus_one(&data.chi)?;
        if let Separation::Canonical(c) = sep {
            condition = Some(c);
        }
        label = sep.label();
    }
    if let (ClassLabel::CanonicalType { branches, .. }, Some(w)) = (label, &weight) {
        label = ClassLabel::CanonicalType {
            branches,
            rep_type: Some(w.kind),
        };
    }
    Ok(Classification {
        label,
        trace,
        chi: data.chi,
        condition,
        weight,
    })
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            ClassLabel::NonTreeHereditary => {
                write!(f, "non-tree hereditary (tr = {})", self.trace)?
            }
            ClassLabel::TreeType => {
                write!(f, "tree type (tr = {}, conditions i-iii fail)", self.trace)?
            }
            ClassLabel::CanonicalType {
                branches: Branches::MoreThanThree,
                ..
            } => write!(f, "canonical t>3 (tr = {})", self.trace)?,
            ClassLabel::CanonicalType {
                branches: Branches::Three,
                ..
            } => match self.condition {
                Some(c) => write!(f, "canonical t=3 (condition {c})")?,
                None => write!(f, "canonical t=3")?,
            },
            ClassLabel::TraceMinusOne => write!(f, "trace -1 (tr = {})", self.trace)?,
        }
        if let Some(w) = &self.weight {
            write!(f, ", {}, delta={}", w.kind, w.delta)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_star, Quiver};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn weight_examples() {
        let w = weight_type(&[2, 2, 2]).unwrap();
        assert_eq!((w.delta, w.kind), (rat(-1, 2), RepType::Domestic));
        let w = weight_type(&[2, 3, 6]).unwrap();
        assert_eq!((w.delta, w.kind), (rat(0, 1), RepType::Tubular));
        let w = weight_type(&[2, 3, 7]).unwrap();
        assert_eq!((w.delta, w.kind), (rat(1, 42), RepType::Wild));
        assert_eq!(weight_type(&[2, 2, 2, 2]).unwrap().kind, RepType::Tubular);
        assert!(weight_type(&[2, 3, 1]).is_err());
        assert!(weight_type(&[3]).is_err());
    }

    #[test]
    fn trichotomy() {
        assert_eq!(
            trace_trichotomy(&BigInt::from(2)),
            ClassLabel::NonTreeHereditary
        );
        assert_eq!(
            trace_trichotomy(&BigInt::from(-3)),
            ClassLabel::CanonicalType {
                branches: Branches::MoreThanThree,
                rep_type: None
            }
        );
        assert_eq!(
            trace_trichotomy(&BigInt::from(-1)),
            ClassLabel::TraceMinusOne
        );
    }

    #[test]
    fn separation_on_known_polynomials() {
        assert_eq!(
            separate_trace_minus_one(&Poly::geometric(10)).unwrap(),
            Separation::Tree
        );
        assert_eq!(
            separate_trace_minus_one(&Poly::from_i64s(&[1, 1, 0, 1, 1])).unwrap(),
            Separation::Tree
        );
        assert!(matches!(
            separate_trace_minus_one(&Poly::from_i64s(&[1, -2, 1])),
            Err(Error::TraceMismatch { .. })
        ));
        assert_eq!(
            separate_trace_minus_one(&Poly::from_i64s(&[1, 1])).unwrap(),
            Separation::Tree
        );
    }

    #[test]
    fn classify_examples() {
        let kr = AlgebraSpec::PathAlgebra(Quiver::multi_arrow(2));
        let c = classify_algebra(&kr, None).unwrap();
        assert_eq!(c.label, ClassLabel::NonTreeHereditary);
        assert_eq!(c.trace, BigInt::from(2));

        let d4 = AlgebraSpec::PathAlgebra(build_star(&[1, 1, 1]).unwrap());
        let c = classify_algebra(&d4, None).unwrap();
        assert_eq!(c.label, ClassLabel::TreeType);
        assert_eq!(c.to_string(), "tree type (tr = -1, conditions i-iii fail)");

        let c237 = AlgebraSpec::canonical(&[2, 3, 7]).unwrap();
        let c = classify_algebra(&c237, Some(&[2, 3, 7])).unwrap();
        assert_eq!(
            c.label,
            ClassLabel::CanonicalType {
                branches: Branches::Three,
                rep_type: Some(RepType::Wild)
            }
        );

        let c236 = AlgebraSpec::canonical(&[2, 3, 6]).unwrap();
        let c = classify_algebra(&c236, Some(&[2, 3, 6])).unwrap();
        assert_eq!(c.condition, Some(Condition::I));
        assert_eq!(
            c.to_string(),
            "canonical t=3 (condition i), tubular, delta=0"
        );
    }

    #[test]
    fn canonical_three_branch_conditions() {
        let chi = crate::coxeter::coxeter_polynomial(
            &crate::quiver::canonical_cartan(&[3, 3, 3]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            separate_trace_minus_one(&chi).unwrap(),
            Separation::Canonical(Condition::III)
        );
        let chi = crate::coxeter::coxeter_polynomial(
            &crate::quiver::canonical_cartan(&[2, 4, 4]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            separate_trace_minus_one(&chi).unwrap(),
            Separation::Canonical(Condition::II)
        );
    }
}
