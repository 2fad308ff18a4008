//! Interval versions of elementary algorithms and their exactness check.
//!
//! An [`ElementaryAlgorithm`] is written once, generically over
//! [`Semiring`], using only basic operations. Running it at
//! [`IntervalSemiring`] gives its interval version ([`interval_lift`]);
//! running it at the base semiring on the lower and upper endpoint inputs
//! gives the same bounds by a separate route ([`endpoint_bounds`]).
//! [`exactness_check`] samples points of the input box and confirms every
//! output lies within the lifted bounds and that both bounds are attained.
//!
//! Inputs and outputs are flat vectors of elements; matrices are laid out
//! row-major.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Interpolate, Interval, IntervalSemiring};
use crate::error::{Error, Result};
use crate::linalg::{closure_with, mat_mul, solve_bellman_with, ClosureAlgorithm, Matrix};
use crate::par::{map_indices, Execution};
use crate::semiring::{scalar_product, Semiring};

/// An algorithm composed of basic semiring operations only.
///
/// `run` must not branch on element values: the same sequence of basic
/// operations has to be executed for every input of the right length, so
/// that the induced mapping is monotone and its interval version is exact.
pub trait ElementaryAlgorithm: Sync {
    fn name(&self) -> String;
    fn input_len(&self) -> usize;
    fn output_len(&self) -> usize;
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>>;
}

fn check_len(name: &str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::dims("elementary algorithm", format!("{name} expects {expected} inputs, got {got}")))
    }
}

/// `A ↦ A*` for an `n × n` matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureTask {
    n: usize,
    algorithm: ClosureAlgorithm,
}

impl ClosureTask {
    /// The truncated series stops on a value comparison, so it is rejected.
    pub fn new(n: usize, algorithm: ClosureAlgorithm) -> Result<Self> {
        if let ClosureAlgorithm::Series(_) = algorithm {
            return Err(Error::Unsupported {
                op: "interval lift of the stabilizing series",
                carrier: "any".into(),
            });
        }
        Ok(ClosureTask { n, algorithm })
    }
}

impl ElementaryAlgorithm for ClosureTask {
    fn name(&self) -> String {
        format!("closure[{}]({n}x{n})", self.algorithm, n = self.n)
    }
    fn input_len(&self) -> usize {
        self.n * self.n
    }
    fn output_len(&self) -> usize {
        self.n * self.n
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        check_len(&self.name(), self.input_len(), input.len())?;
        let a = Matrix::new(self.n, self.n, input.to_vec())?;
        Ok(closure_with(s, &a, self.algorithm)?.into_data())
    }
}

/// `(A, B) ↦ A*B` for `A` of size `n × n` and `B` of size `n × cols`.
/// Input is `A` followed by `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BellmanTask {
    pub n: usize,
    pub cols: usize,
}

impl ElementaryAlgorithm for BellmanTask {
    fn name(&self) -> String {
        format!("bellman({}x{}, {}x{})", self.n, self.n, self.n, self.cols)
    }
    fn input_len(&self) -> usize {
        self.n * self.n + self.n * self.cols
    }
    fn output_len(&self) -> usize {
        self.n * self.cols
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        check_len(&self.name(), self.input_len(), input.len())?;
        let (a, b) = input.split_at(self.n * self.n);
        let a = Matrix::new(self.n, self.n, a.to_vec())?;
        let b = Matrix::new(self.n, self.cols, b.to_vec())?;
        Ok(solve_bellman_with(s, &a, &b, ClosureAlgorithm::Elimination)?.into_data())
    }
}

/// Scalar product of two vectors of length `len`, given one after the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotTask {
    pub len: usize,
}

impl ElementaryAlgorithm for DotTask {
    fn name(&self) -> String {
        format!("dot({})", self.len)
    }
    fn input_len(&self) -> usize {
        2 * self.len
    }
    fn output_len(&self) -> usize {
        1
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        check_len(&self.name(), self.input_len(), input.len())?;
        let (x, y) = input.split_at(self.len);
        Ok(vec![scalar_product(s, x, y)?])
    }
}

/// Matrix product `(A, B) ↦ AB` of `l × m` and `m × n` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductTask {
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl ElementaryAlgorithm for ProductTask {
    fn name(&self) -> String {
        format!("product({}x{}, {}x{})", self.l, self.m, self.m, self.n)
    }
    fn input_len(&self) -> usize {
        self.l * self.m + self.m * self.n
    }
    fn output_len(&self) -> usize {
        self.l * self.n
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        check_len(&self.name(), self.input_len(), input.len())?;
        let (a, b) = input.split_at(self.l * self.m);
        let a = Matrix::new(self.l, self.m, a.to_vec())?;
        let b = Matrix::new(self.m, self.n, b.to_vec())?;
        Ok(mat_mul(s, &a, &b)?.into_data())
    }
}

/// `second ∘ first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Compose<A, B> {
    first: A,
    second: B,
}

impl<A: ElementaryAlgorithm, B: ElementaryAlgorithm> Compose<A, B> {
    pub fn new(first: A, second: B) -> Result<Self> {
        check_len("composition", second.input_len(), first.output_len())?;
        Ok(Compose { first, second })
    }
}

impl<A: ElementaryAlgorithm, B: ElementaryAlgorithm> ElementaryAlgorithm for Compose<A, B> {
    fn name(&self) -> String {
        format!("{} . {}", self.second.name(), self.first.name())
    }
    fn input_len(&self) -> usize {
        self.first.input_len()
    }
    fn output_len(&self) -> usize {
        self.second.output_len()
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        let mid = self.first.run(s, input)?;
        self.second.run(s, &mid)
    }
}

/// Cartesian product: runs both on their own slices of the input and
/// concatenates the outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: ElementaryAlgorithm, B: ElementaryAlgorithm> ElementaryAlgorithm for Pair<A, B> {
    fn name(&self) -> String {
        format!("({} x {})", self.left.name(), self.right.name())
    }
    fn input_len(&self) -> usize {
        self.left.input_len() + self.right.input_len()
    }
    fn output_len(&self) -> usize {
        self.left.output_len() + self.right.output_len()
    }
    fn run<T: Semiring>(&self, s: &T, input: &[T::Elem]) -> Result<Vec<T::Elem>> {
        check_len(&self.name(), self.input_len(), input.len())?;
        let (x, y) = input.split_at(self.left.input_len());
        let mut out = self.left.run(s, x)?;
        out.extend(self.right.run(s, y)?);
        Ok(out)
    }
}

/// The algorithm run over `I(S)`.
pub fn interval_lift<A, S>(alg: &A, base: &S, input: &[Interval<S::Elem>]) -> Result<Vec<Interval<S::Elem>>>
where
    A: ElementaryAlgorithm,
    S: Semiring,
{
    let isr = IntervalSemiring::new(base);
    for &x in input {
        isr.check(x)?;
    }
    alg.run(&isr, input)
}

/// Bounds obtained by running the algorithm over `S` at the lower and upper
/// endpoint inputs.
pub fn endpoint_bounds<A, S>(alg: &A, base: &S, input: &[Interval<S::Elem>]) -> Result<Vec<Interval<S::Elem>>>
where
    A: ElementaryAlgorithm,
    S: Semiring,
{
    let lows: Vec<_> = input.iter().map(Interval::lo).collect();
    let highs: Vec<_> = input.iter().map(Interval::hi).collect();
    let lo = alg.run(base, &lows)?;
    let hi = alg.run(base, &highs)?;
    lo.into_iter().zip(hi).map(|(l, h)| Interval::new(base, l, h)).collect()
}

/// A sampled output outside the lifted bounds, or a sample whose scalar run
/// failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub sample: usize,
    /// Output component, or `None` when the run itself failed.
    pub component: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactnessReport<E> {
    /// The interval version's output.
    pub lifted: Vec<Interval<E>>,
    pub samples: usize,
    pub violations: Vec<Violation>,
    /// The scalar run at the lower endpoints equals the lifted lower bounds.
    pub lower_attained: bool,
    /// The scalar run at the upper endpoints equals the lifted upper bounds.
    pub upper_attained: bool,
}

impl<E> ExactnessReport<E> {
    pub fn is_exact(&self) -> bool {
        self.violations.is_empty() && self.lower_attained && self.upper_attained
    }
}

/// Draws `n_samples` points of the input box (the two endpoint inputs
/// first, then random points), runs the scalar algorithm at each and
/// compares with the interval version.
///
/// Deterministic for a given `seed`, whatever the thread count. Errors only
/// if the interval version itself fails.
pub fn exactness_check<A, S>(
    alg: &A,
    base: &S,
    input: &[Interval<S::Elem>],
    n_samples: usize,
    seed: u64,
) -> Result<ExactnessReport<S::Elem>>
where
    A: ElementaryAlgorithm,
    S: Interpolate,
{
    exactness_check_with(alg, base, input, n_samples, seed, Execution::Auto)
}

pub fn exactness_check_with<A, S>(
    alg: &A,
    base: &S,
    input: &[Interval<S::Elem>],
    n_samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<ExactnessReport<S::Elem>>
where
    A: ElementaryAlgorithm,
    S: Interpolate,
{
    let lifted = interval_lift(alg, base, input)?;

    let draw = |index: usize| -> Vec<S::Elem> {
        match index {
            0 => input.iter().map(Interval::lo).collect(),
            1 => input.iter().map(Interval::hi).collect(),
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index as u64);
                input
                    .iter()
                    .map(|x| {
                        // one point in five sits on a face of the box
                        let t = match rng.random_range(0..10u8) {
                            0 => 0.0,
                            1 => 1.0,
                            _ => rng.random::<f64>(),
                        };
                        base.interpolate(x.lo(), x.hi(), t)
                    })
                    .collect()
            }
        }
    };

    let check = |index: usize| -> (Vec<Violation>, Option<Vec<S::Elem>>) {
        let point = draw(index);
        let out = match alg.run(base, &point) {
            Ok(out) => out,
            Err(e) => {
                let v = Violation { sample: index, component: None, detail: e.to_string() };
                return (vec![v], None);
            }
        };
        let violations = out
            .iter()
            .zip(&lifted)
            .enumerate()
            .filter(|(_, (y, b))| !(base.leq(b.lo(), **y) && base.leq(**y, b.hi())))
            .map(|(c, (y, b))| Violation {
                sample: index,
                component: Some(c),
                detail: format!("{y:?} outside [{:?}, {:?}]", b.lo(), b.hi()),
            })
            .collect();
        (violations, (index < 2).then_some(out))
    };

    let work = n_samples.saturating_mul(alg.input_len().max(1));
    let results = map_indices(n_samples, exec.is_parallel(work), check);

    let mut violations = Vec::new();
    let mut endpoint_outputs: [Option<Vec<S::Elem>>; 2] = [None, None];
    for (i, (v, out)) in results.into_iter().enumerate() {
        violations.extend(v);
        if i < 2 {
            endpoint_outputs[i] = out;
        }
    }
    let [lo_out, hi_out] = endpoint_outputs;
    let lower_attained = lo_out.is_some_and(|o| o.iter().zip(&lifted).all(|(y, b)| *y == b.lo()));
    let upper_attained = hi_out.is_some_and(|o| o.iter().zip(&lifted).all(|(y, b)| *y == b.hi()));

    Ok(ExactnessReport { lifted, samples: n_samples, violations, lower_attained, upper_attained })
}
