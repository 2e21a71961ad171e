//! Exact rational linear algebra at desk scale.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Scalar::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse of a square matrix.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::DimensionMismatch {
            expected: n,
            got: row.len(),
        });
    }
    let mut a: Matrix = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                a[r][j] -= x;
                inv[r][j] -= y;
            }
        }
    }
    Ok(inv)
}

/// Row space of sparse vectors, kept fully reduced so that membership is a
/// single elimination pass.
#[derive(Clone, Debug, Default)]
pub struct SparseSpan<K: Ord + Clone> {
    rows: Vec<(K, BTreeMap<K, Scalar>)>,
}

fn axpy<K: Ord + Clone>(v: &mut BTreeMap<K, Scalar>, row: &BTreeMap<K, Scalar>, c: &Scalar) {
    for (k, x) in row {
        let e = v.entry(k.clone()).or_insert_with(Scalar::zero);
        *e -= x * c;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

impl<K: Ord + Clone> SparseSpan<K> {
    pub fn new() -> Self {
        SparseSpan { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` modulo the span.
    pub fn reduce(&self, mut v: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
        v.retain(|_, c| !c.is_zero());
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, row, &c);
            }
        }
        v
    }

    pub fn contains(&self, v: BTreeMap<K, Scalar>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: BTreeMap<K, Scalar>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        for c in r.values_mut() {
            *c /= &lead;
        }
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &r, &c);
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn inverse_of_diagonal() {
        let m = vec![vec![int(2), int(0)], vec![int(0), int(3)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![ratio(1, 2), int(0)], vec![int(0), ratio(1, 3)]]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(3));
    }

    #[test]
    fn singular_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(invert(&m), Err(AlgebraError::Singular));
    }

    #[test]
    fn span_membership() {
        let v = |pairs: &[(u8, i64)]| pairs.iter().map(|&(k, c)| (k, int(c))).collect::<BTreeMap<_, _>>();
        let mut s = SparseSpan::new();
        assert!(s.insert(v(&[(0, 1), (1, 1)])));
        assert!(s.insert(v(&[(1, 1), (2, -1)])));
        assert!(!s.insert(v(&[(0, 2), (1, 4), (2, -2)])));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(v(&[(0, 1), (2, 1)])));
        assert!(!s.contains(v(&[(2, 1)])));
    }
}
