//! The discrete stationary Bellman equation `X = AX ⊕ B`.

use super::{closure_with, mat_add, mat_mul, ClosureAlgorithm, Matrix};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// `X = A*B`, a solution of `X = AX ⊕ B` (the least one in convergent
/// idempotent instances).
pub fn solve_bellman<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
) -> Result<Matrix<S::Elem>> {
    solve_bellman_with(s, a, b, ClosureAlgorithm::Elimination)
}

pub fn solve_bellman_with<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    alg: ClosureAlgorithm,
) -> Result<Matrix<S::Elem>> {
    check_shapes(a, b)?;
    mat_mul(s, &closure_with(s, a, alg)?, b)
}

fn check_shapes<E>(a: &Matrix<E>, b: &Matrix<E>) -> Result<()> {
    if !a.is_square() || a.rows() != b.rows() {
        return Err(Error::dims(
            "bellman equation",
            format!("A is {}x{}, B is {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        ));
    }
    Ok(())
}

/// Result of value iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct BellmanIteration<E> {
    pub x: Matrix<E>,
    /// Number of updates performed.
    pub steps: usize,
    /// Whether a fixed point `X = AX ⊕ B` was reached.
    pub stabilized: bool,
}

/// Value iteration `X₀ = B`, `Xₖ₊₁ = AXₖ ⊕ B`, so that `Xₖ = ⊕_{i≤k} AⁱB`.
pub fn bellman_iteration<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    max_steps: usize,
) -> Result<BellmanIteration<S::Elem>> {
    check_shapes(a, b)?;
    let mut x = b.clone();
    for step in 1..=max_steps {
        let next = mat_add(s, &mat_mul(s, a, &x)?, b)?;
        if next == x {
            return Ok(BellmanIteration { x, steps: step - 1, stabilized: true });
        }
        x = next;
    }
    Ok(BellmanIteration { x, steps: max_steps, stabilized: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::MaxPlus;

    const NINF: f64 = f64::NEG_INFINITY;

    fn profit() -> (Matrix<f64>, Matrix<f64>) {
        let a = Matrix::from_rows(vec![vec![NINF, 3.0], vec![NINF, NINF]]).unwrap();
        let b = Matrix::from_rows(vec![vec![0.0], vec![10.0]]).unwrap();
        (a, b)
    }

    #[test]
    fn zero_operator_returns_rhs() {
        let (_, b) = profit();
        let o = Matrix::zeros(&MaxPlus, 2, 2);
        assert_eq!(solve_bellman(&MaxPlus, &o, &b).unwrap(), b);
    }

    #[test]
    fn two_node_profit() {
        let (a, b) = profit();
        let x = solve_bellman(&MaxPlus, &a, &b).unwrap();
        // (A*B)_1 = max(b_1, a_12 + b_2)
        assert_eq!(x.data(), &[13.0, 10.0]);
        let back = mat_add(&MaxPlus, &mat_mul(&MaxPlus, &a, &x).unwrap(), &b).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn iteration_reaches_solution() {
        let (a, b) = profit();
        let it = bellman_iteration(&MaxPlus, &a, &b, 2).unwrap();
        assert!(it.stabilized);
        assert_eq!(it.x, solve_bellman(&MaxPlus, &a, &b).unwrap());
    }

    #[test]
    fn shape_errors() {
        let (a, _) = profit();
        let bad = Matrix::filled(3, 1, 0.0);
        assert!(solve_bellman(&MaxPlus, &a, &bad).is_err());
        assert!(bellman_iteration(&MaxPlus, &a, &bad, 3).is_err());
    }
}
