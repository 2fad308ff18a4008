#![allow(dead_code)]

use kleene::linalg::Matrix;
use proptest::prelude::*;

pub const INF: f64 = f64::INFINITY;
pub const NINF: f64 = f64::NEG_INFINITY;

/// Equal, or within `rel * scale + 1e-15`.
pub fn close(x: f64, y: f64, rel: f64, scale: f64) -> bool {
    x == y || (x - y).abs() <= rel * scale + 1e-15
}

/// Largest finite magnitude among `xs` (at least 1).
pub fn scale(xs: &[f64]) -> f64 {
    xs.iter().filter(|x| x.is_finite()).fold(1.0, |m, x| m.max(x.abs()))
}

/// Integer weight, or the given zero with probability about `1/zero_weight`.
pub fn weight(lo: i32, hi: i32, zero: f64, zero_weight: u32) -> BoxedStrategy<f64> {
    prop_oneof![
        1 => Just(zero),
        zero_weight => (lo..=hi).prop_map(f64::from),
    ]
    .boxed()
}

/// Nonnegative min-plus weights: convergent for every matrix.
pub fn minplus_weight() -> BoxedStrategy<f64> {
    weight(0, 9, INF, 2)
}

/// Max-plus weights `⪯ 0`: convergent for every matrix.
pub fn maxplus_weight() -> BoxedStrategy<f64> {
    weight(-9, 0, NINF, 2)
}

/// Elements of `maxmin:0:10`.
pub fn maxmin_weight() -> BoxedStrategy<f64> {
    (0..=10).prop_map(f64::from).boxed()
}

pub fn square(elem: BoxedStrategy<f64>, max_n: usize) -> impl Strategy<Value = Matrix<f64>> {
    (1..=max_n).prop_flat_map(move |n| matrix(elem.clone(), n, n))
}

pub fn matrix(elem: BoxedStrategy<f64>, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<f64>> {
    proptest::collection::vec(elem, rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

/// Two square matrices of the same size.
pub fn square_pair(elem: BoxedStrategy<f64>, max_n: usize) -> impl Strategy<Value = (Matrix<f64>, Matrix<f64>)> {
    (1..=max_n).prop_flat_map(move |n| (matrix(elem.clone(), n, n), matrix(elem.clone(), n, n)))
}

/// Inverse by textbook Gauss–Jordan elimination with partial pivoting.
pub fn gauss_jordan_inverse(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        let p = a[col][col];
        assert!(p.abs() > 1e-300, "singular matrix");
        for v in a[col].iter_mut() {
            *v /= p;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            let f = row[col];
            if r != col && f != 0.0 {
                row.iter_mut().zip(&prow).for_each(|(v, p)| *v -= f * p);
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
