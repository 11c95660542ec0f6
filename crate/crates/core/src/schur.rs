//! Principal specializations `s_{lambda/mu}(1, q, ..., q^{k-1})` through the
//! Jacobi-Trudi determinant, and semistandard tableau enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::{gaussian_binomial, CyclicRing, IntRing, PolyRing, QPoly, Ring};
use crate::shapes::SkewShape;

/// `M_{i,j} = lambda_i - mu_j + j - i` (0-indexed here, same values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JtMatrix {
    entries: Vec<Vec<i64>>,
}

impl JtMatrix {
    pub fn new(shape: &SkewShape) -> Self {
        let n = shape.rows();
        let lam = shape.lambda();
        let mu = shape.mu_rows();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| lam.part(i) as i64 - mu[j] as i64 + j as i64 - i as i64)
                    .collect()
            })
            .collect();
        JtMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-indexed `(i, j)`, matching the usual matrix convention.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The principal submatrix on the given 1-indexed rows/columns.
    pub fn restrict(&self, indices: &[usize]) -> JtMatrix {
        JtMatrix {
            entries: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.get(i, j)).collect())
                .collect(),
        }
    }
}

pub fn jt_matrix(shape: &SkewShape) -> JtMatrix {
    JtMatrix::new(shape)
}

/// Determinant by Laplace expansion over column subsets.
///
/// `minor[mask]` is the determinant of the bottom `popcount(mask)` rows
/// restricted to the columns in `mask`; every proper submask is numerically
/// smaller, so one pass in increasing order fills the table.
pub fn determinant<R: Ring>(ring: &R, matrix: &[Vec<R::Elem>]) -> R::Elem {
    let n = matrix.len();
    if n == 0 {
        return ring.one();
    }
    assert!(n < usize::BITS as usize, "matrix too large");
    let full = (1usize << n) - 1;
    let mut minor: Vec<Option<R::Elem>> = vec![None; full + 1];
    minor[0] = Some(ring.one());
    for mask in 1..=full {
        let row = n - mask.count_ones() as usize;
        let mut acc = ring.zero();
        let mut below = 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = &matrix[row][j];
            if let (false, Some(sub)) = (ring.is_zero(entry), &minor[mask ^ (1 << j)]) {
                let term = ring.mul(entry, sub);
                acc = if below % 2 == 0 {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            below += 1;
        }
        if !ring.is_zero(&acc) {
            minor[mask] = Some(acc);
        }
    }
    minor[full].take().unwrap_or_else(|| ring.zero())
}

/// The full polynomial `s_{lambda/mu}(1, q, ..., q^{k-1})`.
pub fn principal_specialization(shape: &SkewShape, k: usize) -> QPoly {
    assert!(k >= 1, "need at least one variable");
    let m = jt_matrix(shape);
    let entries: Vec<Vec<QPoly>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|&e| gaussian_binomial(e, k)).collect())
        .collect();
    determinant(&PolyRing, &entries)
}

/// The specialization reduced modulo `q^modulus - 1`, computed inside the
/// residue ring.
pub fn principal_specialization_mod(shape: &SkewShape, k: usize, modulus: usize) -> QPoly {
    assert!(k >= 1 && modulus >= 1);
    let m = jt_matrix(shape);
    let entries: Vec<Vec<QPoly>> = m
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| gaussian_binomial(e, k).reduce_mod(modulus))
                .collect()
        })
        .collect();
    determinant(&CyclicRing { m: modulus }, &entries)
}

/// Ordinary binomial `C(n + k - 1, n)`, zero for negative `n`.
fn multichoose(n: i64, k: usize) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    let mut acc = BigInt::one();
    for i in 0..n {
        acc = acc * BigInt::from(k - 1 + n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of semistandard tableaux with entries in `1..=k`, i.e. the
/// specialization at `q = 1`.
pub fn count_ssyt(shape: &SkewShape, k: usize) -> BigInt {
    assert!(k >= 1, "need at least one variable");
    let m = jt_matrix(shape);
    let entries: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|&e| multichoose(e, k)).collect())
        .collect();
    determinant(&IntRing, &entries)
}

/// A filling of a skew shape, stored row by row over the shape's cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), usize>,
}

impl Tableau {
    /// Validates that `entries` covers exactly the shape's cells, lies in
    /// `1..=k`, and is semistandard.
    pub fn new(shape: SkewShape, entries: BTreeMap<(usize, usize), usize>, k: usize) -> Result<Self> {
        let cells = shape.cells();
        if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::SizeMismatch("entries do not match the shape's cells".into()));
        }
        for (&(i, j), &v) in &entries {
            if v == 0 || v > k {
                return Err(Error::Consistency(format!("entry {v} at ({i}, {j}) outside 1..={k}")));
            }
            if let Some(&right) = entries.get(&(i, j + 1)) {
                if right < v {
                    return Err(Error::Consistency(format!("row {i} decreases at column {j}")));
                }
            }
            if let Some(&below) = entries.get(&(i + 1, j)) {
                if below <= v {
                    return Err(Error::Consistency(format!("column {j} not strict at row {i}")));
                }
            }
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    /// `sum (i - 1) m_i` where `m_i` counts occurrences of `i`.
    pub fn weight(&self) -> usize {
        self.entries.values().map(|v| v - 1).sum()
    }
}

/// Calls `visit` with the entries (in row-major cell order) of every
/// semistandard tableau of `shape` with entries in `1..=k`, in lexicographic
/// order of the entry sequence.
pub fn for_each_ssyt(shape: &SkewShape, k: usize, mut visit: impl FnMut(&[usize])) {
    let cells = shape.cells();
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(n, &c)| (c, n)).collect();
    // Earlier neighbours: left cell (weak) and upper cell (strict).
    let constraints: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|&(i, j)| {
            let left = j.checked_sub(1).and_then(|jj| index.get(&(i, jj)).copied());
            let up = i.checked_sub(1).and_then(|ii| index.get(&(ii, j)).copied());
            (left, up)
        })
        .collect();
    let mut filling = vec![0; cells.len()];

    fn go(
        pos: usize,
        k: usize,
        constraints: &[(Option<usize>, Option<usize>)],
        filling: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == filling.len() {
            visit(filling);
            return;
        }
        let (left, up) = constraints[pos];
        let lo = left.map_or(1, |l| filling[l]).max(up.map_or(1, |u| filling[u] + 1));
        for v in lo..=k {
            filling[pos] = v;
            go(pos + 1, k, constraints, filling, visit);
        }
    }

    go(0, k, &constraints, &mut filling, &mut visit);
}

/// `sum_T q^{weight(T)}` by exhaustive enumeration.
pub fn ssyt_generating_function(shape: &SkewShape, k: usize) -> QPoly {
    assert!(k >= 1, "need at least one variable");
    let mut counts: Vec<u64> = Vec::new();
    for_each_ssyt(shape, k, |entries| {
        let w: usize = entries.iter().map(|v| v - 1).sum();
        if counts.len() <= w {
            counts.resize(w + 1, 0);
        }
        counts[w] += 1;
    });
    QPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// All tableaux, materialized. Intended for small shapes.
pub fn enumerate_ssyt(shape: &SkewShape, k: usize) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    for_each_ssyt(shape, k, |entries| {
        let map = cells.iter().copied().zip(entries.iter().copied()).collect();
        out.push(Tableau {
            shape: shape.clone(),
            entries: map,
        });
    });
    out
}
