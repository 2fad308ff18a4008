//! Dense matrix algebra over any [`Semiring`]: sums, products, powers, the
//! canonical order, three closure algorithms and the Bellman solver.

mod bellman;
mod closure;
mod matrix;

use crate::error::{Error, Result};
use crate::par::{for_each_row, Execution};
use crate::semiring::Semiring;

pub use bellman::{bellman_iteration, solve_bellman, solve_bellman_with, BellmanIteration};
pub use closure::{
    closure, closure_with, star_block, star_elimination, star_elimination_with, star_series,
    ClosureAlgorithm, SeriesResult,
};
pub use matrix::Matrix;

fn same_shape<E>(op: &'static str, a: &Matrix<E>, b: &Matrix<E>) -> Result<()> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::dims(
            op,
            format!("{}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        ));
    }
    Ok(())
}

/// Elementwise `A ⊕ B`.
pub fn mat_add<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    same_shape("matrix sum", a, b)?;
    let data = a.data().iter().zip(b.data()).map(|(x, y)| s.add(*x, *y)).collect();
    Matrix::new(a.rows(), a.cols(), data)
}

/// `(AB)ᵢⱼ = ⊕ₖ aᵢₖ ⊙ bₖⱼ`, accumulated with `k` ascending.
pub fn mat_mul<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    mat_mul_with(s, a, b, Execution::Auto)
}

pub fn mat_mul_with<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    exec: Execution,
) -> Result<Matrix<S::Elem>> {
    if a.cols() != b.rows() {
        return Err(Error::dims(
            "matrix product",
            format!("{}x{} times {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        ));
    }
    let (inner, cols) = (a.cols(), b.cols());
    let mut out = Matrix::zeros(s, a.rows(), cols);
    let parallel = exec.is_parallel(a.rows() * inner * cols);
    for_each_row(out.data_mut(), cols, parallel, |i, row| {
        let arow = a.row(i);
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = *cell;
            for (k, &aik) in arow.iter().enumerate() {
                acc = s.add(acc, s.mul(aik, b[(k, j)]));
            }
            *cell = acc;
        }
    });
    Ok(out)
}

/// `A ⪯ B` entrywise.
pub fn mat_leq<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<bool> {
    same_shape("matrix order", a, b)?;
    Ok(a.data().iter().zip(b.data()).all(|(x, y)| s.leq(*x, *y)))
}

/// `A⁰ = I`, `Aᵏ = A·Aᵏ⁻¹`.
pub fn mat_pow<S: Semiring>(s: &S, a: &Matrix<S::Elem>, k: usize) -> Result<Matrix<S::Elem>> {
    if !a.is_square() {
        return Err(Error::dims("matrix power", format!("{}x{} is not square", a.rows(), a.cols())));
    }
    if k == 0 {
        return Ok(Matrix::identity(s, a.rows()));
    }
    let mut p = a.clone();
    for _ in 1..k {
        p = mat_mul(s, a, &p)?;
    }
    Ok(p)
}
