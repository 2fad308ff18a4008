//! Matrix closure `A* = I ⊕ A ⊕ A² ⊕ …`.
//!
//! Three independent routes are provided. [`star_elimination`] is the
//! default; [`star_block`] and [`star_series`] serve as cross-checks.

use std::fmt;
use std::str::FromStr;

use super::{mat_add, mat_mul, Matrix};
use crate::error::{Error, Result};
use crate::par::{for_each_row, Execution};
use crate::semiring::Semiring;

fn require_square<E>(op: &'static str, a: &Matrix<E>) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::dims(op, format!("{}x{} is not square", a.rows(), a.cols())))
    }
}

/// Gauss–Jordan style closure.
///
/// For each pivot `k`, every entry is updated as
/// `aᵢⱼ ← aᵢⱼ ⊕ aᵢₖ ⊙ aₖₖ* ⊙ aₖⱼ` using the pivot row and column from before
/// the update, which yields `A⁺ = AA*`; the diagonal is then joined with `1`.
///
/// Exact cost: `n` stars, `n³ + n²` multiplications and `n³ + n` additions.
pub fn star_elimination<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    star_elimination_with(s, a, Execution::Auto)
}

pub fn star_elimination_with<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    exec: Execution,
) -> Result<Matrix<S::Elem>> {
    require_square("closure", a)?;
    let n = a.rows();
    let parallel = exec.is_parallel(n * n);
    let mut m = a.clone();
    for k in 0..n {
        let pivot = s.star(m[(k, k)])?;
        let left: Vec<S::Elem> = (0..n).map(|i| s.mul(m[(i, k)], pivot)).collect();
        let right: Vec<S::Elem> = m.row(k).to_vec();
        for_each_row(m.data_mut(), n, parallel, |i, row| {
            let l = left[i];
            for (cell, &r) in row.iter_mut().zip(&right) {
                *cell = s.add(*cell, s.mul(l, r));
            }
        });
    }
    let one = s.one();
    for i in 0..n {
        m[(i, i)] = s.add(m[(i, i)], one);
    }
    Ok(m)
}

/// Recursive 2×2 block closure, splitting at `k = ⌊n/2⌋`:
///
/// ```text
/// A* = | A₁₁* ⊕ A₁₁*A₁₂ D* A₂₁A₁₁*   A₁₁*A₁₂ D* |     D = A₂₂ ⊕ A₂₁A₁₁*A₁₂
///      | D* A₂₁A₁₁*                 D*         |
/// ```
pub fn star_block<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    require_square("closure", a)?;
    let n = a.rows();
    match n {
        0 => return Ok(a.clone()),
        1 => return Ok(Matrix::filled(1, 1, s.star(a[(0, 0)])?)),
        _ => {}
    }
    let k = n / 2;
    let r = n - k;
    let a11 = a.block(0, 0, k, k);
    let a12 = a.block(0, k, k, r);
    let a21 = a.block(k, 0, r, k);
    let a22 = a.block(k, k, r, r);

    let s11 = star_block(s, &a11)?;
    let u = mat_mul(s, &s11, &a12)?; // A₁₁* A₁₂
    let v = mat_mul(s, &a21, &s11)?; // A₂₁ A₁₁*
    let d = mat_add(s, &a22, &mat_mul(s, &v, &a12)?)?;
    let ds = star_block(s, &d)?;

    let top_right = mat_mul(s, &u, &ds)?;
    let bottom_left = mat_mul(s, &ds, &v)?;
    let top_left = mat_add(s, &s11, &mat_mul(s, &top_right, &v)?)?;

    let mut out = Matrix::zeros(s, n, n);
    out.put_block(0, 0, &top_left);
    out.put_block(0, k, &top_right);
    out.put_block(k, 0, &bottom_left);
    out.put_block(k, k, &ds);
    Ok(out)
}

/// Outcome of a truncated closure series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult<E> {
    /// The last partial sum computed.
    pub sum: Matrix<E>,
    /// Number of powers past `I` in `sum`.
    pub terms: usize,
    /// Whether `Sₖ = Sₖ₊₁` was observed, i.e. `sum` is the full closure.
    pub stabilized: bool,
}

/// Partial sums `Sₖ = I ⊕ A ⊕ … ⊕ Aᵏ` for `k ≤ max_terms`, stopping at the
/// first `k` with `Sₖ = Sₖ₊₁`.
pub fn star_series<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    max_terms: usize,
) -> Result<SeriesResult<S::Elem>> {
    require_square("closure", a)?;
    let mut power = Matrix::identity(s, a.rows());
    let mut sum = power.clone();
    for k in 1..=max_terms {
        power = mat_mul(s, &power, a)?;
        let next = mat_add(s, &sum, &power)?;
        if next == sum {
            return Ok(SeriesResult { sum, terms: k - 1, stabilized: true });
        }
        sum = next;
    }
    Ok(SeriesResult { sum, terms: max_terms, stabilized: false })
}

/// Which closure algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosureAlgorithm {
    #[default]
    Elimination,
    Block,
    /// Truncated series; `None` means `n` terms.
    Series(Option<usize>),
}

impl FromStr for ClosureAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elimination" => Ok(ClosureAlgorithm::Elimination),
            "block" => Ok(ClosureAlgorithm::Block),
            "series" => Ok(ClosureAlgorithm::Series(None)),
            other => Err(Error::InvalidParameter(format!("unknown closure algorithm '{other}'"))),
        }
    }
}

impl fmt::Display for ClosureAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureAlgorithm::Elimination => "elimination",
            ClosureAlgorithm::Block => "block",
            ClosureAlgorithm::Series(_) => "series",
        })
    }
}

/// Closure by the default algorithm.
pub fn closure<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    closure_with(s, a, ClosureAlgorithm::Elimination)
}

/// Closure by the given algorithm. A series that does not stabilize returns
/// its last partial sum.
pub fn closure_with<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    alg: ClosureAlgorithm,
) -> Result<Matrix<S::Elem>> {
    match alg {
        ClosureAlgorithm::Elimination => star_elimination(s, a),
        ClosureAlgorithm::Block => star_block(s, a),
        ClosureAlgorithm::Series(terms) => {
            Ok(star_series(s, a, terms.unwrap_or(a.rows()))?.sum)
        }
    }
}
