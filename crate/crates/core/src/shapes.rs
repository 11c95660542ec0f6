//! Partitions, skew shapes and compositions.
//!
//! A [`Partition`] is kept in canonical form (trailing zeros stripped), so two
//! partitions that differ only by zero padding compare equal. A [`SkewShape`]
//! stores `mu` padded with zeros to the length of `lambda`, which makes every
//! row-indexed formula total over `0..rows()`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, accepting (and stripping) trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Positive parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(cols)
    }

    /// Diagram containment: `self_i >= other_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// The stretched partition `(m*l_1, ..., m*l_len)`.
    pub fn stretch(&self, m: usize) -> Result<Partition> {
        if m == 0 {
            return Err(Error::NonPositive { name: "m" });
        }
        Ok(Partition(self.0.iter().map(|p| p * m).collect()))
    }

    /// `(l_1 + r - 1, l_2 + r - 2, ..., l_r)`, the bead positions of an abacus
    /// display with `r` beads.
    pub fn beta_set(&self, r: usize) -> Result<Vec<usize>> {
        if r < self.len() {
            return Err(Error::RTooSmall { r, len: self.len() });
        }
        Ok((0..r).map(|i| self.part(i) + r - 1 - i).collect())
    }

    /// Inverse of [`Partition::beta_set`]. The input must consist of distinct
    /// values; order does not matter.
    pub fn from_beta_set(beta: &[usize]) -> Partition {
        let mut sorted = beta.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(sorted.windows(2).all(|w| w[0] > w[1]), "beta-set has repeats");
        let r = sorted.len();
        let mut parts: Vec<usize> = sorted.iter().enumerate().map(|(i, &b)| b - (r - 1 - i)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// `sum (i - 1) * l_i` over 1-indexed rows.
    pub fn kappa(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of nonnegative integers starting at byte
/// `offset` of the original input (used for error positions).
fn parse_parts(s: &str, offset: usize) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for token in s.split(',') {
        let trimmed = token.trim();
        let lead = token.len() - token.trim_start().len();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                position: pos + lead,
                message: "expected an integer".into(),
            });
        }
        if let Some(bad) = trimmed.find(|c: char| !c.is_ascii_digit()) {
            return Err(Error::Parse {
                position: pos + lead + bad,
                message: format!("unexpected character {:?}", trimmed[bad..].chars().next().unwrap()),
            });
        }
        let value = trimmed.parse::<usize>().map_err(|e| Error::Parse {
            position: pos + lead,
            message: e.to_string(),
        })?;
        parts.push(value);
        pos += token.len() + 1;
    }
    Ok(parts)
}

fn decreasing_at(parts: &[usize], s: &str, offset: usize) -> Result<()> {
    if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
        // position of the offending (i+1)-th token
        let position = offset + s.split(',').take(i + 1).map(|t| t.len() + 1).sum::<usize>();
        return Err(Error::Parse {
            position,
            message: "parts must be weakly decreasing".into(),
        });
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, 0)?;
        decreasing_at(&parts, s, 0)?;
        Partition::new(parts)
    }
}

/// A composition (finite sequence of nonnegative integers, any order).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The same composition with zero parts removed.
    pub fn without_zeros(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s, 0).map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&strs.join(","))
    }
}

/// A skew shape `lambda/mu` with `mu` contained in `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
    mu_rows: Vec<usize>,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::NotContained {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        let mu_rows = (0..lambda.len()).map(|i| mu.part(i)).collect();
        Ok(SkewShape { lambda, mu, mu_rows })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?)
    }

    /// The straight shape `lambda/()`.
    pub fn straight(lambda: Partition) -> Self {
        let mu_rows = vec![0; lambda.len()];
        SkewShape {
            lambda,
            mu: Partition::empty(),
            mu_rows,
        }
    }

    /// The border strip whose rows, top to bottom, have lengths `alpha_i` and
    /// whose consecutive rows overlap in exactly one column. Every part of
    /// `alpha` must be positive.
    pub fn ribbon(alpha: &Composition) -> Result<Self> {
        let parts = alpha.parts();
        if parts.contains(&0) {
            return Err(Error::NonPositive {
                name: "ribbon row length",
            });
        }
        let l = parts.len();
        let mut lambda = vec![0; l];
        for i in (0..l).rev() {
            lambda[i] = if i + 1 == l {
                parts[i]
            } else {
                parts[i] + lambda[i + 1] - 1
            };
        }
        let mu: Vec<usize> = (0..l).map(|i| if i + 1 < l { lambda[i + 1] - 1 } else { 0 }).collect();
        SkewShape::from_parts(&lambda, &mu)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// `mu` padded with zeros to `rows()` entries.
    pub fn mu_rows(&self) -> &[usize] {
        &self.mu_rows
    }

    /// Number of rows of `lambda`.
    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// `lambda_i - mu_i` for 0-indexed row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.lambda.part(i) - self.mu_rows.get(i).copied().unwrap_or(0)
    }

    /// Number of cells `|lambda| - |mu|`.
    pub fn size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells as 0-indexed `(row, column)` pairs in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| (self.mu_rows[i]..self.lambda.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn stretch(&self, m: usize) -> Result<SkewShape> {
        SkewShape::new(self.lambda.stretch(m)?, self.mu.stretch(m)?)
    }

    /// Edge-connected and free of 2x2 blocks. The empty shape is not a border strip.
    pub fn is_border_strip(&self) -> bool {
        let cells: BTreeSet<(usize, usize)> = self.cells().into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return false;
        };
        let has_square = cells.iter().any(|&(i, j)| {
            cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1))
        });
        if has_square {
            return false;
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((i, j)) = queue.pop_front() {
            let mut neighbours = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                neighbours.push((i - 1, j));
            }
            if j > 0 {
                neighbours.push((i, j - 1));
            }
            for n in neighbours {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// At most one cell in every column: `lambda'_j - mu'_j <= 1`.
    pub fn is_horizontal_strip(&self) -> bool {
        let lc = self.lambda.conjugate();
        let mc = self.mu.conjugate();
        (0..lc.len()).all(|j| lc.part(j) - mc.part(j) <= 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "{}", self.lambda)
        } else {
            write!(f, "{}/{}", self.lambda, self.mu)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `LAMBDA` or `LAMBDA/MU`, each a comma-separated part list.
    fn from_str(s: &str) -> Result<Self> {
        let (lam_str, mu_str, mu_offset) = match s.find('/') {
            Some(idx) => (&s[..idx], &s[idx + 1..], idx + 1),
            None => (s, "", s.len()),
        };
        if let Some(extra) = mu_str.find('/') {
            return Err(Error::Parse {
                position: mu_offset + extra,
                message: "more than one '/'".into(),
            });
        }
        let lam = parse_parts(lam_str, 0)?;
        decreasing_at(&lam, lam_str, 0)?;
        let mu = parse_parts(mu_str, mu_offset)?;
        decreasing_at(&mu, mu_str, mu_offset)?;
        SkewShape::new(Partition::new(lam)?, Partition::new(mu)?).map_err(|e| match e {
            Error::NotContained { .. } => Error::Parse {
                position: mu_offset,
                message: e.to_string(),
            },
            other => other,
        })
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `lambda`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            let mut parts = prefix.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition(parts));
            return;
        }
        for p in 0..=lambda.part(i).min(max) {
            prefix.push(p);
            go(lambda, i + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every skew shape `lambda/mu` with `|lambda| <= max_size`, including the
/// empty shapes `lambda/lambda`.
pub fn skew_shapes_up_to(max_size: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for lambda in partitions(n) {
            for mu in subpartitions(&lambda) {
                out.push(SkewShape::new(lambda.clone(), mu).expect("subpartition is contained"));
            }
        }
    }
    out
}
