mod common;

use common::*;
use kleene::interval::{
    endpoint_bounds, exactness_check, interval_lift, BellmanTask, ClosureTask, Compose, DotTask,
    ElementaryAlgorithm, Interpolate, Interval, IntervalSemiring, Pair,
};
use kleene::linalg::{mat_mul, ClosureAlgorithm, Matrix};
use kleene::semiring::{Counting, MaxMin, MaxPlus, MinPlus, PlusTimes, Semiring};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

fn interval_of<S: Semiring<Elem = f64> + Clone + 'static>(
    s: S,
    elem: BoxedStrategy<f64>,
) -> BoxedStrategy<Interval<f64>> {
    (elem.clone(), elem)
        .prop_map(move |(a, b)| Interval::new(&s, s.inf(a, b), s.sup(a, b)).unwrap())
        .boxed()
}

fn intervals<S: Semiring<Elem = f64> + Clone + 'static>(
    s: S,
    elem: BoxedStrategy<f64>,
    len: usize,
) -> impl Strategy<Value = Vec<Interval<f64>>> {
    proptest::collection::vec(interval_of(s, elem), len)
}

fn interval_laws<S: Semiring<Elem = f64>>(
    base: &S,
    x: Interval<f64>,
    y: Interval<f64>,
    z: Interval<f64>,
) -> Result<(), TestCaseError> {
    let s = IntervalSemiring::new(base);
    let (zero, one) = (s.zero(), s.one());
    prop_assert_eq!(zero, Interval::point(base.zero()));
    prop_assert_eq!(one, Interval::point(base.one()));
    prop_assert_eq!(s.add(s.add(x, y), z), s.add(x, s.add(y, z)));
    prop_assert_eq!(s.add(x, y), s.add(y, x));
    prop_assert_eq!(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z)));
    prop_assert_eq!(s.mul(s.add(x, y), z), s.add(s.mul(x, z), s.mul(y, z)));
    prop_assert_eq!(s.mul(z, s.add(x, y)), s.add(s.mul(z, x), s.mul(z, y)));
    prop_assert_eq!(s.add(zero, x), x);
    prop_assert_eq!(s.mul(one, x), x);
    prop_assert_eq!(s.mul(x, one), x);
    prop_assert_eq!(s.mul(zero, x), zero);
    prop_assert_eq!(s.add(x, x), x);
    prop_assert!(s.descriptor().is_idempotent);
    // order is boundwise
    prop_assert_eq!(s.leq(x, y), base.leq(x.lo(), y.lo()) && base.leq(x.hi(), y.hi()));
    prop_assert_eq!(s.leq(x, y), s.add(x, y) == y);
    // results stay valid intervals
    prop_assert!(s.check(s.add(x, y)).is_ok() && s.check(s.mul(x, y)).is_ok());
    Ok(())
}

fn exact<A, S>(alg: &A, s: &S, input: &[Interval<f64>], samples: usize, seed: u64) -> Result<(), TestCaseError>
where
    A: ElementaryAlgorithm,
    S: Interpolate<Elem = f64>,
{
    let report = exactness_check(alg, s, input, samples, seed).unwrap();
    prop_assert!(report.is_exact(), "{:?}", report.violations.first());
    prop_assert_eq!(&report.lifted, &endpoint_bounds(alg, s, input).unwrap());
    Ok(())
}

/// Basic operations executed by `alg` over `S` and over `I(S)`, both
/// measured in operations of `S`.
fn op_counts<A: ElementaryAlgorithm, S: Semiring<Elem = f64> + Clone>(
    alg: &A,
    base: S,
    input: &[Interval<f64>],
) -> (u64, u64) {
    let scalar = Counting::new(base.clone());
    let lows: Vec<f64> = input.iter().map(Interval::lo).collect();
    alg.run(&scalar, &lows).unwrap();
    let lifted = Counting::new(base);
    interval_lift(alg, &lifted, input).unwrap();
    (scalar.counts().total(), lifted.counts().total())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn laws_minplus(v in intervals(MinPlus, minplus_weight(), 3)) {
        interval_laws(&MinPlus, v[0], v[1], v[2])?;
    }

    #[test]
    fn laws_maxplus(v in intervals(MaxPlus, weight(-9, 9, NINF, 4), 3)) {
        interval_laws(&MaxPlus, v[0], v[1], v[2])?;
    }

    #[test]
    fn laws_maxmin(v in intervals(MaxMin::new(0.0, 10.0).unwrap(), maxmin_weight(), 3)) {
        interval_laws(&MaxMin::new(0.0, 10.0).unwrap(), v[0], v[1], v[2])?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn interval_matrix_product_is_associative(
        n in 1..=4usize,
        v in intervals(MaxPlus, weight(-9, 9, NINF, 4), 48),
    ) {
        let s = IntervalSemiring::new(MaxPlus);
        let m = |k: usize| Matrix::new(n, n, v[k * 16..k * 16 + n * n].to_vec()).unwrap();
        let (a, b, c) = (m(0), m(1), m(2));
        prop_assert_eq!(
            mat_mul(&s, &mat_mul(&s, &a, &b).unwrap(), &c).unwrap(),
            mat_mul(&s, &a, &mat_mul(&s, &b, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn closure_lift_is_exact_minplus(n in 1..=5usize, v in intervals(MinPlus, minplus_weight(), 25), seed: u64) {
        let task = ClosureTask::new(n, ClosureAlgorithm::Elimination).unwrap();
        exact(&task, &MinPlus, &v[..n * n], 200, seed)?;
    }

    #[test]
    fn closure_lift_is_exact_maxplus(n in 1..=5usize, v in intervals(MaxPlus, maxplus_weight(), 25), seed: u64) {
        let task = ClosureTask::new(n, ClosureAlgorithm::Block).unwrap();
        exact(&task, &MaxPlus, &v[..n * n], 200, seed)?;
    }

    #[test]
    fn bellman_lift_is_exact(
        n in 1..=5usize,
        a in intervals(MaxPlus, maxplus_weight(), 25),
        b in intervals(MaxPlus, weight(-9, 9, NINF, 4), 10),
        seed: u64,
    ) {
        let task = BellmanTask { n, cols: 2 };
        let input = [&a[..n * n], &b[..2 * n]].concat();
        exact(&task, &MaxPlus, &input, 200, seed)?;
    }

    #[test]
    fn plustimes_closure_lift_is_exact(n in 1..=4usize, raw in proptest::collection::vec((0.0..0.2f64, 0.0..0.05f64), 16), seed: u64) {
        let s = PlusTimes::completed();
        let v: Vec<_> = raw[..n * n].iter().map(|&(lo, w)| Interval::new(&s, lo, lo + w).unwrap()).collect();
        let task = ClosureTask::new(n, ClosureAlgorithm::Elimination).unwrap();
        // rounding is monotone, so even the float pipeline is exact
        exact(&task, &s, &v, 200, seed)?;
    }

    #[test]
    fn composed_pipelines_stay_exact_and_cheap(
        half in 1..=2usize,
        v in intervals(MinPlus, minplus_weight(), 16),
        w in intervals(MinPlus, minplus_weight(), 16),
        seed: u64,
    ) {
        let n = 2 * half;
        let closure = ClosureTask::new(n, ClosureAlgorithm::Elimination).unwrap();
        let twice = Compose::new(closure, ClosureTask::new(n, ClosureAlgorithm::Block).unwrap()).unwrap();
        let then_dot = Compose::new(closure, DotTask { len: n * n / 2 }).unwrap();
        let both = Pair { left: twice, right: DotTask { len: 8 } };

        exact(&twice, &MinPlus, &v[..n * n], 100, seed)?;
        exact(&then_dot, &MinPlus, &v[..n * n], 100, seed)?;
        let input = [&v[..n * n], &w[..]].concat();
        exact(&both, &MinPlus, &input, 100, seed)?;

        let (scalar, lifted) = op_counts(&both, MinPlus, &input);
        prop_assert!(lifted as f64 <= 2.5 * scalar as f64);
    }

    #[test]
    fn dot_product_lift_is_exact(v in intervals(MaxPlus, weight(-9, 9, NINF, 4), 12), seed: u64) {
        exact(&DotTask { len: 6 }, &MaxPlus, &v, 300, seed)?;
    }

    #[test]
    fn inversion_is_an_involution_and_covers_the_range(lo in 0.01..100.0f64, w in 0.0..100.0f64, t in 0.0..=1.0f64) {
        let base = PlusTimes::completed();
        let s = IntervalSemiring::new(base);
        let x = Interval::new(&base, lo, lo + w).unwrap();
        let ix = s.inv(x).unwrap();
        let back = s.inv(ix).unwrap();
        prop_assert!(close(back.lo(), x.lo(), 1e-12, x.lo()) && close(back.hi(), x.hi(), 1e-12, x.hi()));
        let z = base.interpolate(x.lo(), x.hi(), t);
        let iz = base.inv(z).unwrap();
        prop_assert!(ix.lo() <= iz && iz <= ix.hi());
    }
}

#[test]
fn point_intervals_embed_the_scalar_computation() {
    let a = Matrix::from_rows(vec![vec![INF, 1.0, 5.0], vec![INF, INF, 2.0], vec![INF, INF, INF]]).unwrap();
    let input: Vec<_> = a.data().iter().map(|&x| Interval::point(x)).collect();
    let task = ClosureTask::new(3, ClosureAlgorithm::Elimination).unwrap();
    let lifted = interval_lift(&task, &MinPlus, &input).unwrap();
    let scalar = task.run(&MinPlus, a.data()).unwrap();
    assert_eq!(lifted, scalar.into_iter().map(Interval::point).collect::<Vec<_>>());
}

#[test]
fn four_by_four_minplus_closure_thousand_samples() {
    let s = MinPlus;
    let iv = |lo: f64, hi: f64| Interval::new(&s, lo, hi).unwrap();
    // entries given as [numeric max, numeric min]
    let v = [
        iv(INF, INF), iv(3.0, 1.0), iv(INF, 4.0), iv(9.0, 7.0),
        iv(INF, INF), iv(INF, INF), iv(2.0, 2.0), iv(INF, 6.0),
        iv(5.0, 0.0), iv(INF, INF), iv(INF, INF), iv(1.0, 1.0),
        iv(INF, 3.0), iv(8.0, 2.0), iv(INF, INF), iv(INF, INF),
    ];
    let task = ClosureTask::new(4, ClosureAlgorithm::Elimination).unwrap();
    let report = exactness_check(&task, &s, &v, 1000, 2024).unwrap();
    assert!(report.is_exact(), "{:?}", report.violations);
}

#[test]
fn lifted_op_count_doubles() {
    let s = MaxPlus;
    for n in [8usize, 16, 32] {
        let v: Vec<_> = (0..n * n)
            .map(|k| {
                let x = -((k * 7 % 11) as f64);
                Interval::new(&s, x - 1.0, x).unwrap()
            })
            .collect();
        let task = ClosureTask::new(n, ClosureAlgorithm::Elimination).unwrap();
        let (scalar, lifted) = op_counts(&task, s, &v);
        assert_eq!(lifted, 2 * scalar);
    }
}

#[test]
fn non_monotone_step_breaks_attainment() {
    // x ↦ x⁻¹ applied inside an otherwise elementary pipeline is not
    // positive: the scalar run at the lower endpoints does not give the
    // lower bound.
    struct InvThenAdd;
    impl ElementaryAlgorithm for InvThenAdd {
        fn name(&self) -> String {
            "inv+add".into()
        }
        fn input_len(&self) -> usize {
            2
        }
        fn output_len(&self) -> usize {
            1
        }
        fn run<T: Semiring>(&self, s: &T, x: &[T::Elem]) -> kleene::Result<Vec<T::Elem>> {
            Ok(vec![s.add(s.inv(x[0])?, x[1])])
        }
    }
    let s = PlusTimes::completed();
    let v = [Interval::new(&s, 1.0, 2.0).unwrap(), Interval::new(&s, 0.0, 1.0).unwrap()];
    let report = exactness_check(&InvThenAdd, &s, &v, 100, 5).unwrap();
    assert!(!report.lower_attained);
}
