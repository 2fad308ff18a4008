//! The logarithmic deformation of the nonnegative reals.
//!
//! Under `x ↦ h·log x` ordinary addition becomes
//! `u ⊕_h v = h·log(e^{u/h} + e^{v/h})` and multiplication becomes `+`.
//! As `h → 0`, `⊕_h` tends to `max`, recovering max-plus.

use super::{Semiring, SemiringDescriptor};
use crate::error::{Error, Result};
use crate::text::format_scalar;

fn check_h(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "deformation parameter h must be positive and finite, got {}",
            format_scalar(h)
        )))
    }
}

/// `h·log(e^{u/h} + e^{v/h})`, evaluated as
/// `max(u, v) + h·log(1 + e^{-|u-v|/h})` so that it never overflows.
///
/// `-∞` is neutral.
pub fn maslov_add(u: f64, v: f64, h: f64) -> Result<f64> {
    check_h(h)?;
    Ok(maslov_add_unchecked(u, v, h))
}

fn maslov_add_unchecked(u: f64, v: f64, h: f64) -> f64 {
    if u == f64::NEG_INFINITY {
        return v;
    }
    if v == f64::NEG_INFINITY {
        return u;
    }
    let m = u.max(v);
    let d = (u - v).abs();
    m + h * (-d / h).exp().ln_1p()
}

/// The subtropical semifield `R ∪ {-∞}` with `⊕_h` and `⊙ = +`.
///
/// Ordered numerically. It has no closure operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Subtropical {
    h: f64,
}

impl Subtropical {
    pub fn new(h: f64) -> Result<Self> {
        check_h(h)?;
        Ok(Subtropical { h })
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

impl Semiring for Subtropical {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: format!("subtropical:{}", format_scalar(self.h)),
            is_idempotent: false,
            is_complete: false,
            is_semifield: true,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        x.is_finite() || *x == f64::NEG_INFINITY
    }
    fn zero(&self) -> f64 {
        f64::NEG_INFINITY
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        maslov_add_unchecked(a, b, self.h)
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        a + b
    }
    fn leq(&self, a: f64, b: f64) -> bool {
        a <= b
    }
    fn sup(&self, a: f64, b: f64) -> f64 {
        a.max(b)
    }
    fn inf(&self, a: f64, b: f64) -> f64 {
        a.min(b)
    }
    fn star(&self, _a: f64) -> Result<f64> {
        Err(Error::Unsupported {
            op: "star",
            carrier: self.descriptor().carrier_name,
        })
    }
    fn inv(&self, a: f64) -> Result<f64> {
        if a.is_finite() {
            Ok(-a)
        } else {
            Err(Error::Undefined {
                op: "inv",
                carrier: self.descriptor().carrier_name,
                value: format_scalar(a),
            })
        }
    }
}
