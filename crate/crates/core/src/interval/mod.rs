//! The weak interval extension `I(S)` of a positive semiring.
//!
//! An interval `[lo, hi]` is the set `{t : lo ⪯ t ⪯ hi}` in the canonical
//! order of the base semiring. Sum, product and star act on the two bounds
//! independently, which makes [`IntervalSemiring`] itself a positive semiring
//! (idempotent when the base is). Any algorithm written against
//! [`Semiring`] therefore runs unchanged on intervals, and for algorithms
//! built from monotone operations the resulting bounds are exact: they are
//! the outputs at the lower and upper endpoint inputs.
//!
//! Inversion swaps the bounds. It is not monotone, but the image of an
//! interval is still exactly an interval.

mod lift;
mod sample;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::semiring::{Semiring, SemiringDescriptor};
use crate::text::{format_scalar, parse_scalar, TextValue};

pub use lift::{
    endpoint_bounds, exactness_check, exactness_check_with, interval_lift, BellmanTask, ClosureTask,
    Compose, DotTask, ElementaryAlgorithm, ExactnessReport, Pair, ProductTask, Violation,
};
pub use sample::Interpolate;

/// Closed interval `[lo, hi]` with `lo ⪯ hi`.
///
/// The ordering invariant is enforced by [`Interval::new`] and by
/// [`IntervalSemiring::check`]; results of interval operations preserve it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<E> {
    lo: E,
    hi: E,
}

impl<E: Copy> Interval<E> {
    /// Fails with [`Error::InvalidInterval`] unless `lo ⪯ hi` in `s`.
    pub fn new<S: Semiring<Elem = E>>(s: &S, lo: E, hi: E) -> Result<Self> {
        IntervalSemiring::new(s).check(Interval { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: E) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn lo(&self) -> E {
        self.lo
    }

    pub fn hi(&self) -> E {
        self.hi
    }
}

impl<E: Copy + PartialEq> Interval<E> {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// `I(S)`: intervals over `S` with boundwise operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalSemiring<S> {
    base: S,
}

impl<S: Semiring> IntervalSemiring<S> {
    pub fn new(base: S) -> Self {
        IntervalSemiring { base }
    }

    pub fn base(&self) -> &S {
        &self.base
    }
}

fn on_bound(which: &str, e: Error) -> Error {
    match e {
        Error::Divergence(m) => Error::Divergence(format!("{which} bound: {m}")),
        other => other,
    }
}

impl<S: Semiring> Semiring for IntervalSemiring<S> {
    type Elem = Interval<S::Elem>;

    fn descriptor(&self) -> SemiringDescriptor {
        let b = self.base.descriptor();
        SemiringDescriptor {
            carrier_name: format!("I({})", b.carrier_name),
            is_idempotent: b.is_idempotent,
            is_complete: b.is_complete,
            is_semifield: false,
        }
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.base.contains(&x.lo) && self.base.contains(&x.hi) && self.base.leq(x.lo, x.hi)
    }

    fn check(&self, x: Self::Elem) -> Result<Self::Elem> {
        self.base.check(x.lo)?;
        self.base.check(x.hi)?;
        if self.base.leq(x.lo, x.hi) {
            Ok(x)
        } else {
            Err(Error::InvalidInterval {
                lo: format!("{:?}", x.lo),
                hi: format!("{:?}", x.hi),
            })
        }
    }

    fn zero(&self) -> Self::Elem {
        Interval::point(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        Interval::point(self.base.one())
    }
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        Interval { lo: self.base.add(a.lo, b.lo), hi: self.base.add(a.hi, b.hi) }
    }
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        Interval { lo: self.base.mul(a.lo, b.lo), hi: self.base.mul(a.hi, b.hi) }
    }
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool {
        self.base.leq(a.lo, b.lo) && self.base.leq(a.hi, b.hi)
    }
    fn sup(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        Interval { lo: self.base.sup(a.lo, b.lo), hi: self.base.sup(a.hi, b.hi) }
    }
    fn inf(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        Interval { lo: self.base.inf(a.lo, b.lo), hi: self.base.inf(a.hi, b.hi) }
    }
    fn star(&self, a: Self::Elem) -> Result<Self::Elem> {
        let lo = self.base.star(a.lo).map_err(|e| on_bound("lower", e))?;
        let hi = self.base.star(a.hi).map_err(|e| on_bound("upper", e))?;
        Ok(Interval { lo, hi })
    }
    /// `[a, b] ↦ [b⁻¹, a⁻¹]`.
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem> {
        Ok(Interval { lo: self.base.inv(a.hi)?, hi: self.base.inv(a.lo)? })
    }
}

/// Builds an interval matrix from its bound matrices.
pub fn interval_matrix<S: Semiring>(
    s: &S,
    lo: &Matrix<S::Elem>,
    hi: &Matrix<S::Elem>,
) -> Result<Matrix<Interval<S::Elem>>> {
    if lo.rows() != hi.rows() || lo.cols() != hi.cols() {
        return Err(Error::dims("interval matrix", "bound matrices differ in shape"));
    }
    let data = lo
        .data()
        .iter()
        .zip(hi.data())
        .map(|(&l, &h)| Interval::new(s, l, h))
        .collect::<Result<_>>()?;
    Matrix::new(lo.rows(), lo.cols(), data)
}

/// Splits an interval matrix into its lower and upper bound matrices.
pub fn bound_matrices<E: Copy>(m: &Matrix<Interval<E>>) -> (Matrix<E>, Matrix<E>) {
    (m.map(|x| x.lo), m.map(|x| x.hi))
}

impl TextValue for Interval<f64> {
    /// `lo..hi`, or a bare scalar for a point interval.
    fn parse_token(token: &str) -> std::result::Result<Self, String> {
        match token.split_once("..") {
            Some((lo, hi)) => Ok(Interval { lo: parse_scalar(lo)?, hi: parse_scalar(hi)? }),
            None => parse_scalar(token).map(Interval::point),
        }
    }

    fn format_token(&self) -> String {
        if self.is_point() {
            format_scalar(self.lo)
        } else {
            format!("{}..{}", format_scalar(self.lo), format_scalar(self.hi))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{MaxPlus, MinPlus, PlusTimes};
    use crate::text::parse_matrix;

    const INF: f64 = f64::INFINITY;

    fn iv<S: Semiring<Elem = f64>>(s: &S, lo: f64, hi: f64) -> Interval<f64> {
        Interval::new(s, lo, hi).unwrap()
    }

    #[test]
    fn construction_rejects_reversed_bounds() {
        assert!(matches!(Interval::new(&MaxPlus, 3.0, 1.0), Err(Error::InvalidInterval { .. })));
        // min-plus order is reversed: [5, 2] is a valid interval
        assert!(Interval::new(&MinPlus, 5.0, 2.0).is_ok());
        assert!(Interval::new(&MinPlus, 2.0, 5.0).is_err());
        assert!(matches!(Interval::new(&MaxPlus, 1.0, INF), Err(Error::NotInCarrier { .. })));
    }

    #[test]
    fn add_examples() {
        let s = IntervalSemiring::new(MaxPlus);
        assert_eq!(s.add(iv(&MaxPlus, 1.0, 2.0), iv(&MaxPlus, 0.0, 3.0)), iv(&MaxPlus, 1.0, 3.0));
        let x = iv(&MaxPlus, -1.0, 4.0);
        assert_eq!(s.add(x, s.zero()), x);
        assert_eq!(s.add(Interval::point(2.0), Interval::point(5.0)), Interval::point(5.0));
    }

    #[test]
    fn mul_examples() {
        let s = IntervalSemiring::new(MaxPlus);
        assert_eq!(s.mul(iv(&MaxPlus, 1.0, 2.0), iv(&MaxPlus, 0.0, 3.0)), iv(&MaxPlus, 1.0, 5.0));
        let x = iv(&MaxPlus, -1.0, 4.0);
        assert_eq!(s.mul(x, s.one()), x);
        let r = PlusTimes::completed();
        let p = IntervalSemiring::new(r);
        let prod = p.mul(iv(&r, 0.1, 0.2), iv(&r, 2.0, 3.0));
        assert!((prod.lo() - 0.2).abs() < 1e-15 && (prod.hi() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn star_examples() {
        let s = IntervalSemiring::new(MaxPlus);
        assert_eq!(s.star(iv(&MaxPlus, -2.0, -1.0)).unwrap(), Interval::point(0.0));
        assert_eq!(s.star(s.zero()).unwrap(), s.one());
        let r = PlusTimes::completed();
        let st = IntervalSemiring::new(r).star(iv(&r, 0.25, 0.5)).unwrap();
        assert!((st.lo() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(st.hi(), 2.0);
    }

    #[test]
    fn star_divergence_names_the_bound() {
        let s = IntervalSemiring::new(MaxPlus);
        let e = s.star(iv(&MaxPlus, -1.0, 2.0)).unwrap_err();
        assert!(e.to_string().contains("upper bound"), "{e}");
        let e = s.star(iv(&MaxPlus, 1.0, 2.0)).unwrap_err();
        assert!(e.to_string().contains("lower bound"), "{e}");
    }

    #[test]
    fn inv_examples() {
        let r = PlusTimes::completed();
        let s = IntervalSemiring::new(r);
        assert_eq!(s.inv(iv(&r, 2.0, 4.0)).unwrap(), iv(&r, 0.25, 0.5));
        assert_eq!(s.inv(iv(&r, 0.0, INF)).unwrap(), iv(&r, 0.0, INF));
        let m = IntervalSemiring::new(MaxPlus);
        assert_eq!(m.inv(iv(&MaxPlus, 1.0, 3.0)).unwrap(), iv(&MaxPlus, -3.0, -1.0));
        let mm = IntervalSemiring::new(crate::semiring::MaxMin::default());
        assert!(matches!(mm.inv(Interval::point(0.5)), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn order_is_boundwise() {
        let s = IntervalSemiring::new(MaxPlus);
        assert!(s.leq(iv(&MaxPlus, 0.0, 2.0), iv(&MaxPlus, 1.0, 2.0)));
        assert!(!s.leq(iv(&MaxPlus, 0.0, 3.0), iv(&MaxPlus, 1.0, 2.0)));
        assert_eq!(s.descriptor().carrier_name, "I(maxplus)");
        assert!(s.descriptor().is_idempotent);
        assert!(!IntervalSemiring::new(PlusTimes::completed()).descriptor().is_idempotent);
    }

    #[test]
    fn literals() {
        let x = Interval::<f64>::parse_token("-inf..2").unwrap();
        assert_eq!((x.lo(), x.hi()), (f64::NEG_INFINITY, 2.0));
        assert_eq!(Interval::<f64>::parse_token("4").unwrap(), Interval::point(4.0));
        assert_eq!(x.format_token(), "-inf..2");
        assert_eq!(Interval::point(0.5).format_token(), "0.5");
        assert!(Interval::<f64>::parse_token("1..x").is_err());
        assert!(Interval::<f64>::parse_token("1..2..3").is_err());
    }

    #[test]
    fn interval_matrix_text_validates_order() {
        let s = IntervalSemiring::new(MaxPlus);
        let m = parse_matrix(&s, "1 2\n1..3 4\n").unwrap();
        assert_eq!(m[(0, 0)], iv(&MaxPlus, 1.0, 3.0));
        let e = parse_matrix(&s, "1 2\n3..1 4\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }));
        assert!(e.to_string().contains("invalid interval"));
    }

    #[test]
    fn bound_matrix_round_trip() {
        let lo = Matrix::from_rows(vec![vec![1.0, 2.0]]).unwrap();
        let hi = Matrix::from_rows(vec![vec![1.5, 2.0]]).unwrap();
        let m = interval_matrix(&MaxPlus, &lo, &hi).unwrap();
        assert_eq!(bound_matrices(&m), (lo.clone(), hi.clone()));
        assert!(interval_matrix(&MaxPlus, &hi, &lo).is_err());
    }
}
