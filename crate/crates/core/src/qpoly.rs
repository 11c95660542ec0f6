//! Exact polynomials in `q`, reduction modulo `q^m - 1`, and the divisor basis
//! `B_d = (q^m - 1)/(q^{m/d} - 1)`, `d | m`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients; `coeffs[e]` is the
/// coefficient of `q^e`. The zero polynomial has no coefficients and the last
/// stored coefficient is never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly { coeffs: vec![c.into()] }.normalize()
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        QPoly { coeffs }.normalize()
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        QPoly { coeffs }.normalize()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e` (zero past the degree).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `q^i * self`.
    pub fn shift(&self, i: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); i];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Substitutes `q -> q^s`.
    pub fn substitute_power(&self, s: usize) -> QPoly {
        assert!(s >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * s] = c.clone();
        }
        QPoly { coeffs }
    }

    /// Folds exponents into residues modulo `m`, so the result has degree `< m`
    /// and represents `self` modulo `q^m - 1`.
    pub fn reduce_mod(&self, m: usize) -> QPoly {
        assert!(m >= 1, "modulus must be positive");
        if self.coeffs.len() <= m {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e % m] += c;
        }
        QPoly { coeffs }.normalize()
    }

    /// Product modulo `q^m - 1` of two polynomials (each reduced first).
    pub fn mul_mod(&self, other: &QPoly, m: usize) -> QPoly {
        let a = self.reduce_mod(m);
        let b = other.reduce_mod(m);
        if a.is_zero() || b.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[(i + j) % m] += x * y;
                }
            }
        }
        QPoly { coeffs }.normalize()
    }

    /// Coefficient of `q^j` for `j` in `0..m` after reduction modulo `q^m - 1`.
    fn residues(&self, m: usize) -> Vec<BigInt> {
        let r = self.reduce_mod(m);
        (0..m).map(|j| r.coeff(j)).collect()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly { coeffs }.normalize()
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        QPoly { coeffs }.normalize()
    }
}

impl fmt::Display for QPoly {
    /// Sparse ascending form, e.g. `1 + 3*q - q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Minimal commutative-ring interface used by the determinant routines.
pub trait Ring {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// `Z[q]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = QPoly;

    fn zero(&self) -> QPoly {
        QPoly::zero()
    }
    fn one(&self) -> QPoly {
        QPoly::one()
    }
    fn is_zero(&self, x: &QPoly) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x + y
    }
    fn sub(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x - y
    }
    fn mul(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x * y
    }
}

/// `Z[q]/(q^m - 1)`, elements kept reduced.
#[derive(Clone, Copy, Debug)]
pub struct CyclicRing {
    pub m: usize,
}

impl Ring for CyclicRing {
    type Elem = QPoly;

    fn zero(&self) -> QPoly {
        QPoly::zero()
    }
    fn one(&self) -> QPoly {
        QPoly::one()
    }
    fn is_zero(&self, x: &QPoly) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x + y
    }
    fn sub(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x - y
    }
    fn mul(&self, x: &QPoly, y: &QPoly) -> QPoly {
        x.mul_mod(y, self.m)
    }
}

/// `Z`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x - y
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The Moebius function.
pub fn mobius(n: usize) -> i32 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `B_d = (q^m - 1)/(q^{m/d} - 1) = sum_{0 <= i < d} q^{i m / d}` for `d | m`.
pub fn divisor_basis(m: usize, d: usize) -> QPoly {
    assert!(d >= 1 && m.is_multiple_of(d), "{d} must divide {m}");
    let step = m / d;
    let mut coeffs = vec![BigInt::zero(); (d - 1) * step + 1];
    for i in 0..d {
        coeffs[i * step] = BigInt::one();
    }
    QPoly::from_coeffs(coeffs)
}

/// Outcome of a divisor-basis decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    NotPreCsp,
    PreCsp,
    Csp,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotPreCsp => "NotPreCsp",
            Verdict::PreCsp => "PreCsp",
            Verdict::Csp => "Csp",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `f = sum_{d | m} a_d B_d (mod q^m - 1)`, or the verdict that no such
/// integers exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspDecomposition {
    m: usize,
    verdict: Verdict,
    coefficients: Option<BTreeMap<usize, BigInt>>,
}

impl CspDecomposition {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    /// `d -> a_d` for every divisor `d` of `m`; `None` when not pre-CSP.
    pub fn coefficients(&self) -> Option<&BTreeMap<usize, BigInt>> {
        self.coefficients.as_ref()
    }

    /// `a_d`, if the decomposition exists and `d | m`.
    pub fn coefficient(&self, d: usize) -> Option<&BigInt> {
        self.coefficients.as_ref()?.get(&d)
    }

    /// `sum a_d B_d`, the canonical representative modulo `q^m - 1`.
    pub fn recompose(&self) -> Option<QPoly> {
        let coeffs = self.coefficients.as_ref()?;
        let mut total = QPoly::zero();
        for (&d, a) in coeffs {
            total = &total + &(&divisor_basis(self.m, d) * &QPoly::constant(a.clone()));
        }
        Some(total)
    }

    /// `{"m": m, "verdict": "...", "a": {"d": a_d, ...}}`, keys ascending; `a`
    /// is omitted for `NotPreCsp`.
    pub fn to_json(&self) -> Value {
        let mut out = json!({ "m": self.m, "verdict": self.verdict.as_str() });
        if let Some(coeffs) = &self.coefficients {
            let map: serde_json::Map<String, Value> =
                coeffs.iter().map(|(d, a)| (d.to_string(), bigint_json(a))).collect();
            out["a"] = Value::Object(map);
        }
        out
    }
}

/// JSON number carrying an arbitrary-precision integer.
pub fn bigint_json(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("integer literal is a valid JSON number"))
}

/// Decomposes `f` modulo `q^m - 1` in the divisor basis.
///
/// Since `B_d` is supported on the multiples of `m/d`, the residue coefficient
/// `r_j` equals `sum_{h | d | m} a_d` with `h = m / gcd(j, m)`. A decomposition
/// exists iff `r_j` depends only on `gcd(j, m)`; the `a_d` then follow by
/// Moebius inversion over the divisor lattice.
pub fn csp_decompose(f: &QPoly, m: usize) -> CspDecomposition {
    assert!(m >= 1, "modulus must be positive");
    let r = f.residues(m);
    let mut class_value: HashMap<usize, &BigInt> = HashMap::new();
    for (j, rj) in r.iter().enumerate() {
        let g = j.gcd(&m);
        match class_value.get(&g) {
            Some(v) if *v != rj => {
                return CspDecomposition {
                    m,
                    verdict: Verdict::NotPreCsp,
                    coefficients: None,
                };
            }
            Some(_) => {}
            None => {
                class_value.insert(g, rj);
            }
        }
    }
    let divs = divisors(m);
    // U_h = r at j = m/h (j = 0 for h = 1).
    let upper = |h: usize| &r[(m / h) % m];
    let mut coeffs = BTreeMap::new();
    for &h in &divs {
        let mut a = BigInt::zero();
        for &d in divs.iter().filter(|&&d| d % h == 0) {
            match mobius(d / h) {
                1 => a += upper(d),
                -1 => a -= upper(d),
                _ => {}
            }
        }
        coeffs.insert(h, a);
    }
    let verdict = if coeffs.values().all(|a| !a.is_negative()) {
        Verdict::Csp
    } else {
        Verdict::PreCsp
    };
    CspDecomposition {
        m,
        verdict,
        coefficients: Some(coeffs),
    }
}

/// `f(w^j)` for `w` a primitive `m`-th root of unity, computed from the
/// decomposition as `sum_{d | gcd(j, m)} d a_d`.
pub fn eval_at_primitive_root(f: &QPoly, m: usize, j: usize) -> Result<BigInt> {
    let dec = csp_decompose(f, m);
    eval_decomposition(&dec, j)
}

/// As [`eval_at_primitive_root`], reusing an existing decomposition.
pub fn eval_decomposition(dec: &CspDecomposition, j: usize) -> Result<BigInt> {
    let coeffs = dec.coefficients().ok_or(Error::NoDecomposition { m: dec.m })?;
    let g = j.gcd(&dec.m);
    Ok(coeffs
        .iter()
        .filter(|(d, _)| g.is_multiple_of(**d))
        .map(|(d, a)| a * BigInt::from(*d))
        .sum())
}

type GaussCache = RwLock<HashMap<(usize, usize), QPoly>>;

fn gauss_cache() -> &'static GaussCache {
    static CACHE: OnceLock<GaussCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `h_n(1, q, ..., q^{k-1}) = [n+k-1 choose n]_q`; zero for negative `n`.
///
/// Uses `G(n, k) = G(n, k-1) + q^{k-1} G(n-1, k)` (split on whether the letter
/// `k` occurs), filling and caching the whole table up to `(n, k)`.
pub fn gaussian_binomial(n: i64, k: usize) -> QPoly {
    assert!(k >= 1, "need at least one variable");
    if n < 0 {
        return QPoly::zero();
    }
    let n = n as usize;
    if n == 0 || k == 1 {
        return QPoly::one();
    }
    if let Some(hit) = gauss_cache().read().expect("cache poisoned").get(&(n, k)) {
        return hit.clone();
    }
    // prev[nn] = G(nn, kk - 1)
    let mut prev: Vec<QPoly> = vec![QPoly::one(); n + 1];
    let mut fresh = Vec::new();
    for kk in 2..=k {
        let mut cur: Vec<QPoly> = Vec::with_capacity(n + 1);
        cur.push(QPoly::one());
        for nn in 1..=n {
            let next = &prev[nn] + &cur[nn - 1].shift(kk - 1);
            cur.push(next);
        }
        for (nn, g) in cur.iter().enumerate().skip(1) {
            fresh.push(((nn, kk), g.clone()));
        }
        prev = cur;
    }
    let result = prev[n].clone();
    let mut cache = gauss_cache().write().expect("cache poisoned");
    for (key, g) in fresh {
        cache.entry(key).or_insert(g);
    }
    result
}

/// Coefficient of `q^l` in `[n+k-1 choose n]_q mod (q^k - 1)`; `l` is read
/// modulo `k`.
pub fn a_coefficient(l: i64, k: usize, n: usize) -> BigInt {
    assert!(k >= 1);
    let l = l.rem_euclid(k as i64) as usize;
    gaussian_binomial(n as i64, k).reduce_mod(k).coeff(l)
}

/// The same coefficient through `A_l(k, n) = sum_{d | n, k, l} A_1(k/d, n/d)`,
/// with `A_1(1, n) = 1`.
pub fn a_coefficient_by_recurrence(l: i64, k: usize, n: usize) -> BigInt {
    assert!(k >= 1);
    let l = l.rem_euclid(k as i64) as usize;
    let g = k.gcd(&n).gcd(&l);
    divisors(g)
        .into_iter()
        .map(|d| {
            let (kk, nn) = (k / d, n / d);
            if kk == 1 {
                BigInt::one()
            } else {
                a_coefficient(1, kk, nn)
            }
        })
        .sum()
}
