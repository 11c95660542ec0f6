//! The `d`-abacus: bead displays, cores, quotients and strip removal as bead
//! moves.
//!
//! Runners are numbered `0..d` left to right and position `p` sits on runner
//! `p mod d` in row `p / d`. Skew computations always use `r = rows(lambda)`
//! beads for both `lambda` and `mu`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// Bead positions of a partition on a `d`-runner abacus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    d: usize,
    positions: Vec<usize>,
}

impl AbacusDisplay {
    pub fn new(lambda: &Partition, d: usize, r: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::NonPositive { name: "d" });
        }
        Ok(AbacusDisplay {
            d,
            positions: lambda.beta_set(r)?,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of beads.
    pub fn r(&self) -> usize {
        self.positions.len()
    }

    /// Bead positions, strictly decreasing.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn runner_of(&self, p: usize) -> usize {
        p % self.d
    }

    /// Rows of the beads on runner `i`, top to bottom.
    pub fn bead_rows(&self, i: usize) -> Vec<usize> {
        let mut rows: Vec<usize> = self
            .positions
            .iter()
            .filter(|&&p| p % self.d == i)
            .map(|&p| p / self.d)
            .collect();
        rows.sort_unstable();
        rows
    }

    pub fn partition(&self) -> Partition {
        Partition::from_beta_set(&self.positions)
    }

    /// The partition read off runner `i`: its `j`-th part is the number of
    /// non-beads above the `j`-th bead from the bottom.
    pub fn runner_partition(&self, i: usize) -> Partition {
        let rows = self.bead_rows(i);
        let parts: Vec<usize> = rows.iter().enumerate().rev().map(|(t, &row)| row - t).collect();
        Partition::new(parts).expect("runner parts are weakly decreasing")
    }

    /// Text rendering: a header of runner indices, then one line per abacus
    /// row with `●` for a bead and `·` for an empty position.
    pub fn render(&self) -> String {
        let beads: BTreeSet<usize> = self.positions.iter().copied().collect();
        let width = self.d.to_string().len().max(1);
        let mut out = String::new();
        let header: Vec<String> = (0..self.d).map(|i| format!("{i:>width$}")).collect();
        out.push_str(&header.join(" "));
        out.push('\n');
        let rows = self.positions.first().map_or(0, |&top| top / self.d + 1);
        for row in 0..rows {
            let cells: Vec<String> = (0..self.d)
                .map(|i| {
                    let mark = if beads.contains(&(row * self.d + i)) {
                        "●"
                    } else {
                        "·"
                    };
                    format!("{mark:>width$}")
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The `d`-core: push every bead as far up its runner as it goes.
pub fn core(lambda: &Partition, d: usize) -> Result<Partition> {
    let abacus = AbacusDisplay::new(lambda, d, lambda.len())?;
    let mut beta = Vec::with_capacity(abacus.r());
    for i in 0..d {
        let count = abacus.bead_rows(i).len();
        beta.extend((0..count).map(|row| row * d + i));
    }
    Ok(Partition::from_beta_set(&beta))
}

/// The `d`-quotient `(lambda^(0), ..., lambda^(d-1))` read with `r` beads.
pub fn quotient(lambda: &Partition, d: usize, r: usize) -> Result<Vec<Partition>> {
    let abacus = AbacusDisplay::new(lambda, d, r)?;
    Ok((0..d).map(|i| abacus.runner_partition(i)).collect())
}

/// The `d`-quotient of a skew shape: runner partitions of `lambda` and `mu`
/// (both with `r = rows(lambda)` beads), and whether each `lambda`-component
/// contains the matching `mu`-component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewQuotient {
    lambda_parts: Vec<Partition>,
    mu_parts: Vec<Partition>,
    exists: bool,
}

impl SkewQuotient {
    pub fn exists(&self) -> bool {
        self.exists
    }

    pub fn lambda_parts(&self) -> &[Partition] {
        &self.lambda_parts
    }

    pub fn mu_parts(&self) -> &[Partition] {
        &self.mu_parts
    }

    /// The skew components `lambda^(i)/mu^(i)`, when the quotient exists.
    pub fn components(&self) -> Option<Vec<SkewShape>> {
        if !self.exists {
            return None;
        }
        Some(
            self.lambda_parts
                .iter()
                .zip(&self.mu_parts)
                .map(|(l, m)| SkewShape::new(l.clone(), m.clone()).expect("containment checked"))
                .collect(),
        )
    }
}

/// Skew quotient with `r = rows(lambda)`.
///
/// The quotient exists when every runner carries the same number of beads for
/// `lambda` and `mu` (equal `d`-cores) and each `lambda`-component contains the
/// corresponding `mu`-component.
pub fn skew_quotient(shape: &SkewShape, d: usize) -> Result<SkewQuotient> {
    let r = shape.rows();
    let la = AbacusDisplay::new(shape.lambda(), d, r)?;
    let ma = AbacusDisplay::new(shape.mu(), d, r)?;
    let mut exists = true;
    for i in 0..d {
        let (lr, mr) = (la.bead_rows(i), ma.bead_rows(i));
        if lr.len() != mr.len() || lr.iter().zip(&mr).any(|(l, m)| l < m) {
            exists = false;
        }
    }
    Ok(SkewQuotient {
        lambda_parts: (0..d).map(|i| la.runner_partition(i)).collect(),
        mu_parts: (0..d).map(|i| ma.runner_partition(i)).collect(),
        exists,
    })
}

/// Which beta-values `runner_classes` sorts rows by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunnerSource {
    Lambda,
    Mu,
}

/// `C_t = { i : (value_i + l - i) mod d = t }` over 1-indexed rows `i` of
/// `lambda`, where `value` is `lambda` or (zero-padded) `mu`.
pub fn runner_classes(shape: &SkewShape, d: usize, which: RunnerSource) -> Result<Vec<Vec<usize>>> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d" });
    }
    let l = shape.rows();
    let mut classes = vec![Vec::new(); d];
    for i in 0..l {
        let value = match which {
            RunnerSource::Lambda => shape.lambda().part(i),
            RunnerSource::Mu => shape.mu_rows()[i],
        };
        classes[(value + l - 1 - i) % d].push(i + 1);
    }
    Ok(classes)
}

/// One bead move `from -> to` on a beta-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripMove {
    pub from: usize,
    pub to: usize,
    /// Number of beads strictly between `to` and `from`.
    pub height: usize,
    pub result: Partition,
}

/// Every legal move `p -> p - size` on a strictly decreasing beta-set, in
/// decreasing order of `p`, as `(index of p, new beta-set, height)`.
pub(crate) fn bead_moves(beta: &[usize], size: usize) -> Vec<(usize, Vec<usize>, usize)> {
    let occupied: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (idx, &p) in beta.iter().enumerate() {
        if p < size || occupied.contains(&(p - size)) {
            continue;
        }
        let to = p - size;
        let height = occupied.range(to + 1..p).count();
        let mut next = beta.to_vec();
        next[idx] = to;
        next.sort_unstable_by(|a, b| b.cmp(a));
        out.push((idx, next, height));
    }
    out
}

/// Whether the `d`-quotient of `outer/inner` exists, both given as beta-sets
/// of equal length.
pub(crate) fn beta_quotient_exists(outer: &[usize], inner: &[usize], d: usize) -> bool {
    debug_assert_eq!(outer.len(), inner.len());
    (0..d).all(|i| {
        let mut o: Vec<usize> = outer.iter().filter(|&&p| p % d == i).copied().collect();
        let mut n: Vec<usize> = inner.iter().filter(|&&p| p % d == i).copied().collect();
        o.sort_unstable();
        n.sort_unstable();
        o.len() == n.len() && o.iter().zip(&n).all(|(a, b)| a >= b)
    })
}

/// The size-`d` strip removals available at `lambda` whose result still
/// contains `target_mu`. Requires the `d`-quotient of `lambda/target_mu` to
/// exist.
pub fn remove_strip_moves(lambda: &Partition, d: usize, target_mu: &Partition) -> Result<Vec<StripMove>> {
    let shape = SkewShape::new(lambda.clone(), target_mu.clone())?;
    if !skew_quotient(&shape, d)?.exists() {
        return Err(Error::NoRemovalSequence {
            shape: shape.to_string(),
            d,
        });
    }
    let beta = lambda.beta_set(lambda.len())?;
    Ok(bead_moves(&beta, d)
        .into_iter()
        .filter_map(|(idx, next, height)| {
            let result = Partition::from_beta_set(&next);
            result.contains(target_mu).then(|| StripMove {
                from: beta[idx],
                to: beta[idx] - d,
                height,
                result,
            })
        })
        .collect())
}
