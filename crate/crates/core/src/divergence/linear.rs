//! Linear forms, region constraints and Farkas-style witnesses.

use std::collections::BTreeMap;

use crate::rational::Rational;
use num_traits::{Signed, Zero};

/// Coefficients of a linear form in the original node values.
pub type LinearForm = Vec<Rational>;

/// The inequality `coeffs · λ > 0` when strict, `≥ 0` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: LinearForm,
    pub strict: bool,
}

impl Constraint {
    pub fn new(coeffs: LinearForm, strict: bool) -> Self {
        Self { coeffs, strict }
    }

    pub fn from_ints(coeffs: &[i64], strict: bool) -> Self {
        Self::new(crate::rational::ints(coeffs), strict)
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let v = dot(&self.coeffs, x);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }
}

/// Nonnegative weights on region constraints, keyed by constraint index.
pub type Witness = BTreeMap<usize, Rational>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |s, (x, y)| s + x * y)
}

/// Σ w_k · c_k over the witness entries.
pub fn combine(region: &[Constraint], witness: &Witness, dim: usize) -> LinearForm {
    let mut out = vec![Rational::zero(); dim];
    for (&k, w) in witness {
        if let Some(c) = region.get(k) {
            for (o, x) in out.iter_mut().zip(&c.coeffs) {
                *o += w * x;
            }
        }
    }
    out
}

/// Whether the witness puts positive weight on some strict constraint.
pub fn has_strict_weight(region: &[Constraint], witness: &Witness) -> bool {
    witness
        .iter()
        .any(|(&k, w)| w.is_positive() && region.get(k).is_some_and(|c| c.strict))
}

/// Unique exact solution of Σ y_k · columns[k] = target, if one exists.
fn solve_unique(columns: &[&LinearForm], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            columns
                .iter()
                .map(|c| c[r].clone())
                .chain([target[r].clone()])
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return None;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=cols {
                    let delta = &f * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][cols].clone()).collect())
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            go(k + 1, m, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, size, &mut Vec::new(), &mut out);
    out
}

/// Searches supports of increasing size for nonnegative weights reproducing
/// `target` exactly. With `need_strict` the weights must also touch a strict
/// constraint.
pub fn find_witness(
    region: &[Constraint],
    target: &[Rational],
    need_strict: bool,
) -> Option<Witness> {
    if !need_strict && target.iter().all(Zero::is_zero) {
        return Some(Witness::new());
    }
    for size in 1..=region.len() {
        for support in subsets(region.len(), size) {
            let columns: Vec<&LinearForm> = support.iter().map(|&k| &region[k].coeffs).collect();
            let Some(y) = solve_unique(&columns, target) else {
                continue;
            };
            if y.iter().any(Signed::is_negative) {
                continue;
            }
            let witness: Witness = support
                .iter()
                .zip(y)
                .filter(|(_, w)| !w.is_zero())
                .map(|(&k, w)| (k, w))
                .collect();
            if need_strict && !has_strict_weight(region, &witness) {
                continue;
            }
            return Some(witness);
        }
    }
    None
}
