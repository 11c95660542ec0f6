//! Classification of `s_{lambda/mu}(1, q, ..., q^{k-1})` modulo `q^m - 1`,
//! with the sufficient conditions for a nonnegative decomposition checked as
//! hard assertions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qpoly::{bigint_json, csp_decompose, gaussian_binomial, CspDecomposition, QPoly, Verdict};
use crate::schur::{count_ssyt, principal_specialization, principal_specialization_mod};
use crate::shapes::SkewShape;

/// Which route computes the specialization before decomposing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Route {
    /// Determinant evaluated inside `Z[q]/(q^m - 1)`.
    #[default]
    Residue,
    /// Full polynomial, reduced afterwards.
    Full,
}

/// Known sufficient conditions for a nonnegative decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    /// `m | lambda_i - mu_i` for every row and `m | k`.
    pub rows_divisible_vars_multiple: bool,
    /// The shape is a border strip and `m | lambda_i - mu_i` for every row.
    pub border_strip_rows_divisible: bool,
}

impl Hypotheses {
    pub fn evaluate(shape: &SkewShape, k: usize, m: usize) -> Self {
        let rows_divisible = (0..shape.rows()).all(|i| shape.row_len(i).is_multiple_of(m));
        Hypotheses {
            rows_divisible_vars_multiple: rows_divisible && k.is_multiple_of(m),
            border_strip_rows_divisible: rows_divisible && shape.is_border_strip(),
        }
    }

    pub fn any(&self) -> bool {
        self.rows_divisible_vars_multiple || self.border_strip_rows_divisible
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspReport {
    pub shape: SkewShape,
    pub k: usize,
    pub m: usize,
    pub decomposition: CspDecomposition,
    pub hypotheses: Hypotheses,
    /// Number of semistandard tableaux, the value at `q = 1`.
    pub cardinality: BigInt,
    /// `d -> a_d`, read as the number of orbits of size `d`; only for `Csp`.
    pub orbit_counts: Option<BTreeMap<usize, BigInt>>,
}

impl CspReport {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "shape": self.shape.to_string(),
            "k": self.k,
            "m": self.m,
            "decomposition": self.decomposition.to_json(),
            "hypotheses": {
                "rows_divisible_vars_multiple": self.hypotheses.rows_divisible_vars_multiple,
                "border_strip_rows_divisible": self.hypotheses.border_strip_rows_divisible,
            },
            "cardinality": bigint_json(&self.cardinality),
        });
        if let Some(orbits) = &self.orbit_counts {
            let map: serde_json::Map<String, Value> =
                orbits.iter().map(|(d, a)| (d.to_string(), bigint_json(a))).collect();
            out["orbit_counts"] = Value::Object(map);
        }
        out
    }
}

fn check_positive(k: usize, m: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::NonPositive { name: "k" });
    }
    if m == 0 {
        return Err(Error::NonPositive { name: "m" });
    }
    Ok(())
}

fn specialization(shape: &SkewShape, k: usize, m: usize, route: Route) -> QPoly {
    match route {
        Route::Residue => principal_specialization_mod(shape, k, m),
        Route::Full => principal_specialization(shape, k).reduce_mod(m),
    }
}

/// Decomposes the specialization modulo `q^m - 1` via the residue ring.
pub fn analyze(shape: &SkewShape, k: usize, m: usize) -> Result<CspReport> {
    analyze_with(shape, k, m, Route::Residue)
}

/// [`analyze`] with an explicit route.
///
/// Fails with [`Error::Consistency`] when a sufficient condition holds but the
/// verdict is not `Csp`, or when the orbit sizes do not add up to the number
/// of tableaux.
pub fn analyze_with(shape: &SkewShape, k: usize, m: usize, route: Route) -> Result<CspReport> {
    check_positive(k, m)?;
    let reduced = specialization(shape, k, m, route);
    let decomposition = csp_decompose(&reduced, m);
    let hypotheses = Hypotheses::evaluate(shape, k, m);
    if hypotheses.any() && decomposition.verdict() != Verdict::Csp {
        return Err(Error::Consistency(format!(
            "{shape} with k = {k}, m = {m} satisfies {hypotheses:?} but decomposes as {}",
            decomposition.verdict()
        )));
    }
    let cardinality = count_ssyt(shape, k);
    let orbit_counts = (decomposition.verdict() == Verdict::Csp).then(|| decomposition.coefficients().unwrap().clone());
    if let Some(orbits) = &orbit_counts {
        let total: BigInt = orbits.iter().map(|(d, a)| a * BigInt::from(*d)).sum();
        if total != cardinality {
            return Err(Error::Consistency(format!(
                "orbit sizes of {shape} sum to {total}, expected {cardinality}"
            )));
        }
    }
    Ok(CspReport {
        shape: shape.clone(),
        k,
        m,
        decomposition,
        hypotheses,
        cardinality,
        orbit_counts,
    })
}

/// Decomposition of `q^shift * s_{lambda/mu}(1, ..., q^{k-1})` modulo `q^m - 1`.
pub fn analyze_shifted(shape: &SkewShape, k: usize, m: usize, shift: usize) -> Result<CspDecomposition> {
    analyze_shifted_with(shape, k, m, shift, Route::Residue)
}

pub fn analyze_shifted_with(
    shape: &SkewShape,
    k: usize,
    m: usize,
    shift: usize,
    route: Route,
) -> Result<CspDecomposition> {
    check_positive(k, m)?;
    if shift >= m {
        return Err(Error::SizeMismatch(format!(
            "shift {shift} must be below the modulus {m}"
        )));
    }
    let reduced = specialization(shape, k, m, route);
    Ok(csp_decompose(&reduced.shift(shift), m))
}

/// Runs [`analyze`] over many inputs in parallel; results keep input order.
pub fn analyze_batch(inputs: &[(SkewShape, usize, usize)]) -> Vec<Result<CspReport>> {
    inputs.par_iter().map(|(shape, k, m)| analyze(shape, *k, *m)).collect()
}

/// Checks `h_n(1, ..., q^{k-1}) = sum_{0 <= j < k} h_j(1, ..., q^{n-1})`
/// modulo `q^m - 1` for `m | n`.
pub fn verify_h_fold(n: usize, k: usize, m: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive { name: "n" });
    }
    check_positive(k, m)?;
    if !n.is_multiple_of(m) {
        return Err(Error::NotDivisor { d: m, n });
    }
    let lhs = gaussian_binomial(n as i64, k).reduce_mod(m);
    let mut rhs = QPoly::zero();
    for j in 0..k {
        rhs = &rhs + &gaussian_binomial(j as i64, n);
    }
    Ok(lhs == rhs.reduce_mod(m))
}
