use crate::semiring::{
    Counting, MaxMin, MaxPlus, MaxPlusComplete, MinPlus, NumericSemiring, PlusTimes, Semiring, Subtropical,
};

/// Distance from the finite endpoint used in place of an infinite one.
const PROXY_SPAN: f64 = 1e6;

/// Points inside an interval, for sampling-based checks.
pub trait Interpolate: Semiring {
    /// A point of `[lo, hi]`; `t = 0` gives `lo` and `t = 1` gives `hi` exactly.
    fn interpolate(&self, lo: Self::Elem, hi: Self::Elem, t: f64) -> Self::Elem;
}

/// Linear interpolation on the extended real line, with infinite endpoints
/// replaced by a large-magnitude proxy for interior points.
fn lerp_extended(lo: f64, hi: f64, t: f64) -> f64 {
    if t <= 0.0 || lo == hi {
        return lo;
    }
    if t >= 1.0 {
        return hi;
    }
    let (a, b) = match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (lo, hi),
        (false, true) => (hi + PROXY_SPAN * lo.signum(), hi),
        (true, false) => (lo, lo + PROXY_SPAN * hi.signum()),
        (false, false) => (PROXY_SPAN * lo.signum(), PROXY_SPAN * hi.signum()),
    };
    // rounding must not push the point outside the interval
    (a + t * (b - a)).clamp(a.min(b), a.max(b))
}

macro_rules! numeric_interpolate {
    ($($ty:ty),*) => {$(
        impl Interpolate for $ty {
            fn interpolate(&self, lo: f64, hi: f64, t: f64) -> f64 {
                lerp_extended(lo, hi, t)
            }
        }
    )*};
}

numeric_interpolate!(MaxPlus, MaxPlusComplete, MinPlus, MaxMin, PlusTimes, Subtropical, NumericSemiring);

impl<S: Interpolate> Interpolate for Counting<S> {
    fn interpolate(&self, lo: S::Elem, hi: S::Elem, t: f64) -> S::Elem {
        self.inner().interpolate(lo, hi, t)
    }
}

impl<S: Interpolate + ?Sized> Interpolate for &S {
    fn interpolate(&self, lo: S::Elem, hi: S::Elem, t: f64) -> S::Elem {
        (**self).interpolate(lo, hi, t)
    }
}
