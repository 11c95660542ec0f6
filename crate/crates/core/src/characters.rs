//! Border-strip tableaux, skew characters of rectangular type, `perm(lambda/mu)`
//! and evaluations of principal specializations at roots of unity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abacus::{bead_moves, beta_quotient_exists, skew_quotient};
use crate::error::{Error, Result};
use crate::schur::count_ssyt;
use crate::shapes::{Composition, Partition, SkewShape};

/// Shapes up to this many cells get full tableau enumeration in
/// [`skew_char_rect`]; larger ones use the permutation sign and the quotient
/// product count.
pub const FULL_ENUMERATION_LIMIT: usize = 40;

/// A border-strip tableau: `strips[i]` holds the cells labelled `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStripTableau {
    strips: Vec<Vec<(usize, usize)>>,
    heights: Vec<usize>,
}

impl BorderStripTableau {
    /// Cells of each strip, label `1` first; cells are 0-indexed `(row, col)`.
    pub fn strips(&self) -> &[Vec<(usize, usize)>] {
        &self.strips
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn total_height(&self) -> usize {
        self.heights.iter().sum()
    }

    /// `(-1)^{total height}`.
    pub fn sign(&self) -> i8 {
        if self.total_height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cell -> label.
    pub fn filling(&self) -> BTreeMap<(usize, usize), usize> {
        self.strips
            .iter()
            .enumerate()
            .flat_map(|(i, cells)| cells.iter().map(move |&c| (c, i + 1)))
            .collect()
    }

    /// One line per row of the shape; cells of `mu` shown as `.`.
    pub fn render(&self, shape: &SkewShape) -> String {
        let filling = self.filling();
        let width = self.strips.len().to_string().len();
        let mut out = String::new();
        for i in 0..shape.rows() {
            let row: Vec<String> = (0..shape.lambda().part(i))
                .map(|j| match filling.get(&(i, j)) {
                    Some(label) => format!("{label:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Cells of `outer` not in `inner`.
fn cell_difference(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j)))
        .collect()
}

/// All border-strip tableaux of `shape` and type `(d^m)`, `m = |shape| / d`.
///
/// Strips are removed from the outside in with bead moves `p -> p - d`, so the
/// first strip removed carries the largest label. Moves are tried in
/// decreasing order of `p`, which fixes the output order. Empty when `d` does
/// not divide the size.
pub fn enumerate_bst(shape: &SkewShape, d: usize) -> Result<Vec<BorderStripTableau>> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d" });
    }
    if !shape.size().is_multiple_of(d) {
        return Ok(Vec::new());
    }
    let r = shape.rows();
    let start = shape.lambda().beta_set(r)?;
    let target = shape.mu().beta_set(r)?;
    if !beta_quotient_exists(&start, &target, d) {
        return Ok(Vec::new());
    }

    fn go(
        beta: &[usize],
        target: &[usize],
        d: usize,
        removed: &mut Vec<(Vec<(usize, usize)>, usize)>,
        out: &mut Vec<BorderStripTableau>,
    ) {
        if beta == target {
            let (strips, heights) = removed.iter().rev().cloned().unzip();
            out.push(BorderStripTableau { strips, heights });
            return;
        }
        let here = Partition::from_beta_set(beta);
        for (_, next, height) in bead_moves(beta, d) {
            if !beta_quotient_exists(&next, target, d) {
                continue;
            }
            let cells = cell_difference(&here, &Partition::from_beta_set(&next));
            removed.push((cells, height));
            go(&next, target, d, removed, out);
            removed.pop();
        }
    }

    let mut out = Vec::new();
    go(&start, &target, d, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `chi^{lambda/mu}((d^m)) = epsilon * |BST(lambda/mu, d)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCharValue {
    pub value: BigInt,
    pub bst_count: BigInt,
    pub epsilon: i8,
}

/// The skew character at the rectangular class `(d^m)`.
///
/// Every tableau must have the same height parity; a disagreement is reported
/// as an internal consistency error.
pub fn skew_char_rect(shape: &SkewShape, d: usize) -> Result<SkewCharValue> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d" });
    }
    if !shape.size().is_multiple_of(d) {
        return Err(Error::SizeMismatch(format!(
            "{d} does not divide |{shape}| = {}",
            shape.size()
        )));
    }
    if shape.size() > FULL_ENUMERATION_LIMIT {
        return skew_char_rect_by_quotient(shape, d);
    }
    let tableaux = enumerate_bst(shape, d)?;
    let Some(first) = tableaux.first() else {
        return Ok(SkewCharValue {
            value: BigInt::zero(),
            bst_count: BigInt::zero(),
            epsilon: 0,
        });
    };
    let epsilon = first.sign();
    if let Some(bad) = tableaux.iter().find(|t| t.sign() != epsilon) {
        return Err(Error::Consistency(format!(
            "border-strip tableaux of {shape} have heights {} and {} of different parity",
            first.total_height(),
            bad.total_height()
        )));
    }
    let bst_count = BigInt::from(tableaux.len());
    Ok(SkewCharValue {
        value: &bst_count * epsilon,
        bst_count,
        epsilon,
    })
}

/// Closed form: `epsilon = sgn(perm)` and
/// `|BST| = m! / prod |c_i|! * prod f^{c_i}` over the quotient components `c_i`.
pub(crate) fn skew_char_rect_by_quotient(shape: &SkewShape, d: usize) -> Result<SkewCharValue> {
    let quotient = skew_quotient(shape, d)?;
    let Some(components) = quotient.components() else {
        return Ok(SkewCharValue {
            value: BigInt::zero(),
            bst_count: BigInt::zero(),
            epsilon: 0,
        });
    };
    let epsilon = perm(shape, d)?.sign();
    let mut count = factorial(shape.size() / d);
    for c in &components {
        count = count / factorial(c.size()) * standard_count(c);
    }
    Ok(SkewCharValue {
        value: &count * epsilon,
        bst_count: count,
        epsilon,
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Number of standard tableaux of a skew shape (maximal chains from `mu` to
/// `lambda`).
fn standard_count(shape: &SkewShape) -> BigInt {
    fn go(current: &Partition, mu: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if current == mu {
            return BigInt::one();
        }
        if let Some(v) = memo.get(current) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..current.len() {
            if current.part(i) > current.part(i + 1) && current.part(i) > mu.part(i) {
                let mut parts = current.parts().to_vec();
                parts[i] -= 1;
                let next = Partition::new(parts).expect("removing a corner keeps a partition");
                total += go(&next, mu, memo);
            }
        }
        memo.insert(current.clone(), total.clone());
        total
    }
    go(shape.lambda(), shape.mu(), &mut HashMap::new())
}

/// `chi^{lambda/mu}(nu) = sum_T (-1)^{ht(T)}` over border-strip tableaux of
/// type `nu`. Zero parts of `nu` are dropped; strips of size `nu_last` are
/// removed first.
pub fn skew_char(shape: &SkewShape, nu: &Composition) -> Result<BigInt> {
    let nu = nu.without_zeros();
    if nu.size() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "|nu| = {} but |{shape}| = {}",
            nu.size(),
            shape.size()
        )));
    }
    let start = shape.lambda().beta_set(shape.rows())?;
    let sizes: Vec<usize> = nu.parts().iter().rev().copied().collect();

    fn go(
        beta: &[usize],
        step: usize,
        sizes: &[usize],
        mu: &Partition,
        memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        if step == sizes.len() {
            return BigInt::one();
        }
        let key = (beta.to_vec(), step);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (_, next, height) in bead_moves(beta, sizes[step]) {
            if !Partition::from_beta_set(&next).contains(mu) {
                continue;
            }
            let sub = go(&next, step + 1, sizes, mu, memo);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo.insert(key, total.clone());
        total
    }

    Ok(go(&start, 0, &sizes, shape.mu(), &mut HashMap::new()))
}

/// A permutation of `1..=n` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Images `w(1), ..., w(n)`.
    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn sign(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| w == i + 1)
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when `n <= 9` (`2147356`), space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        let sep = if self.0.len() <= 9 { "" } else { " " };
        f.write_str(&strs.join(sep))
    }
}

/// Matches, inside each residue class `r` mod `d`, the rows of `lambda` whose
/// beta-value `lambda_j + l - j` is `r` with those of `mu`, both in increasing
/// row order.
pub fn perm(shape: &SkewShape, d: usize) -> Result<Permutation> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d" });
    }
    let l = shape.rows();
    let mut lam_classes = vec![Vec::new(); d];
    let mut mu_classes = vec![Vec::new(); d];
    for j in 0..l {
        lam_classes[(shape.lambda().part(j) + l - 1 - j) % d].push(j + 1);
        mu_classes[(shape.mu_rows()[j] + l - 1 - j) % d].push(j + 1);
    }
    let mut images = vec![0; l];
    for (a, b) in lam_classes.iter().zip(&mu_classes) {
        if a.len() != b.len() {
            return Err(Error::CoresDiffer {
                shape: shape.to_string(),
                d,
            });
        }
        for (&from, &to) in a.iter().zip(b) {
            images[from - 1] = to;
        }
    }
    Ok(Permutation(images))
}

/// `s_{lambda/mu}(1, w, ..., w^{N-1})` for `w` a primitive `d`-th root of
/// unity, `d | N`: zero without a `d`-quotient, otherwise
/// `sgn(chi((d^m))) * prod_i count_ssyt(lambda^(i)/mu^(i), N/d)`.
pub fn eval_at_root(shape: &SkewShape, n_vars: usize, d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d" });
    }
    if n_vars == 0 {
        return Err(Error::NonPositive { name: "N" });
    }
    if !n_vars.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, n: n_vars });
    }
    let Some(components) = skew_quotient(shape, d)?.components() else {
        return Ok(BigInt::zero());
    };
    if !shape.size().is_multiple_of(d) {
        return Err(Error::Consistency(format!(
            "{d}-quotient of {shape} exists but {d} does not divide {}",
            shape.size()
        )));
    }
    let sign = perm(shape, d)?.sign();
    let mut product = BigInt::from(sign);
    for c in &components {
        if product.is_zero() {
            break;
        }
        product *= count_ssyt(c, n_vars / d);
    }
    Ok(product)
}

/// `K_{lambda/mu, (m^N)}(w_N) = (-1)^{(N-1)m} s_{lambda/mu}(1, w_N, ..., w_N^{N-1})`.
pub fn kostka_foulkes_rect_at_root(shape: &SkewShape, n_vars: usize, m: usize) -> Result<BigInt> {
    if n_vars == 0 {
        return Err(Error::NonPositive { name: "N" });
    }
    if m == 0 {
        return Err(Error::NonPositive { name: "m" });
    }
    if shape.size() != n_vars * m {
        return Err(Error::SizeMismatch(format!(
            "|{shape}| = {} but N*m = {}",
            shape.size(),
            n_vars * m
        )));
    }
    let value = eval_at_root(shape, n_vars, n_vars)?;
    Ok(if ((n_vars - 1) * m).is_multiple_of(2) {
        value
    } else {
        -value
    })
}

/// Whether every `N`-quotient component of `shape` is a horizontal strip
/// (false when the quotient does not exist).
pub fn quotient_is_horizontal(shape: &SkewShape, n: usize) -> Result<bool> {
    Ok(skew_quotient(shape, n)?
        .components()
        .is_some_and(|cs| cs.iter().all(SkewShape::is_horizontal_strip)))
}

/// `value` as a sign in `{-1, 0, 1}`.
pub fn signum(value: &BigInt) -> i8 {
    if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    }
}
