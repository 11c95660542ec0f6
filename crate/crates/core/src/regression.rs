//! Built-in regression suite over the worked examples, exposed through the
//! CLI's `verify` subcommand.

use num_bigint::BigInt;

use crate::abacus::{runner_classes, skew_quotient, RunnerSource};
use crate::analysis::{analyze, analyze_shifted};
use crate::characters::{perm, skew_char_rect};
use crate::qpoly::Verdict;
use crate::schur::jt_matrix;
use crate::shapes::SkewShape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

fn shape(s: &str) -> SkewShape {
    s.parse().expect("built-in shape literal parses")
}

fn expect_coefficients(s: &str, k: usize, m: usize, verdict: Verdict, want: &[(usize, i64)]) -> Result<String, String> {
    let report = analyze(&shape(s), k, m).map_err(|e| e.to_string())?;
    let dec = &report.decomposition;
    if dec.verdict() != verdict {
        return Err(format!("verdict {} (want {verdict})", dec.verdict()));
    }
    let coeffs = dec.coefficients().ok_or("no coefficients")?;
    for &(d, a) in want {
        if coeffs.get(&d) != Some(&BigInt::from(a)) {
            return Err(format!("a_{d} = {:?} (want {a})", coeffs.get(&d)));
        }
    }
    if coeffs
        .iter()
        .any(|(d, a)| !want.iter().any(|(wd, _)| wd == d) && *a != BigInt::from(0))
    {
        return Err(format!("unexpected extra coefficients {coeffs:?}"));
    }
    Ok(dec.to_json().to_string())
}

fn nine_fold() -> Result<String, String> {
    expect_coefficients(
        "27,27,18,9/18,9",
        4,
        9,
        Verdict::PreCsp,
        &[(1, 1), (3, -3), (9, 54665112)],
    )
}

fn four_fold() -> Result<String, String> {
    expect_coefficients("12,12,4/8,4", 6, 4, Verdict::Csp, &[(1, 12), (2, 264), (4, 1576440)])
}

fn shifted_nine_fold() -> Result<String, String> {
    let s = shape("27,27,18,9/18,9");
    for i in 1..9 {
        let dec = analyze_shifted(&s, 4, 9, i).map_err(|e| e.to_string())?;
        if dec.verdict() != Verdict::NotPreCsp {
            return Err(format!("shift {i}: {}", dec.verdict()));
        }
    }
    Ok("shifts 1..=8 all NotPreCsp".into())
}

fn three_quotient() -> Result<String, String> {
    let q = skew_quotient(&shape("9,9,6,6,6,4,1/2,1,1,1"), 3).map_err(|e| e.to_string())?;
    let comps = q.components().ok_or("quotient does not exist")?;
    let want = [shape("4,3/1"), shape("2"), shape("2,1,1")];
    if comps != want {
        return Err(format!("components {comps:?}"));
    }
    let text: Vec<String> = comps.iter().map(ToString::to_string).collect();
    Ok(text.join(" ; "))
}

fn perm_sign() -> Result<String, String> {
    let s = shape("9,9,6,6,6,4,1/2,1,1,1");
    let w = perm(&s, 3).map_err(|e| e.to_string())?;
    if w.to_string() != "2147356" {
        return Err(format!("perm = {w}"));
    }
    let chi = skew_char_rect(&s, 3).map_err(|e| e.to_string())?;
    if w.sign() != chi.epsilon || w.sign() != -1 {
        return Err(format!("sgn(perm) = {}, epsilon = {}", w.sign(), chi.epsilon));
    }
    Ok(format!(
        "perm = {w}, sign = -1, epsilon = -1, |BST| = {}",
        chi.bst_count
    ))
}

fn jt_and_classes() -> Result<String, String> {
    let s = shape("13,10,10,10,6/7,4,4,4");
    let m = jt_matrix(&s);
    if !(1..=5).all(|i| m.get(i, i) == 6) || m.get(5, 1) != -5 || m.get(1, 5) != 17 {
        return Err(format!("matrix {:?}", m.rows()));
    }
    let classes = runner_classes(&s, 3, RunnerSource::Lambda).map_err(|e| e.to_string())?;
    if classes != vec![vec![3, 5], vec![2], vec![1, 4]] {
        return Err(format!("classes {classes:?}"));
    }
    Ok(format!("classes {classes:?}"))
}

const CHECKS: [(&str, Check); 6] = [
    ("stretched (3,3,2,1)/(2,1) by 9, k=4, m=9 is pre-CSP", nine_fold),
    ("stretched (3,3,1)/(2,1) by 4, k=6, m=4 is CSP", four_fold),
    ("shifted nine-fold stretch is never pre-CSP", shifted_nine_fold),
    ("3-quotient of (9,9,6,6,6,4,1)/(2,1,1,1)", three_quotient),
    ("perm and character sign of (9,9,6,6,6,4,1)/(2,1,1,1)", perm_sign),
    (
        "Jacobi-Trudi indices and runner classes of (13,10,10,10,6)/(7,4,4,4)",
        jt_and_classes,
    ),
];

/// Runs every built-in check in order.
pub fn builtin_checks() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                id: i + 1,
                name,
                passed,
                detail,
            }
        })
        .collect()
}
