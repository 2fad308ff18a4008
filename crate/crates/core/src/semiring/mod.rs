//! The positive-semiring abstraction and its concrete numeric instances.
//!
//! Every algorithm in this crate is written once against [`Semiring`] and is
//! instantiated for max-plus, min-plus, max-min, the nonnegative reals, the
//! subtropical deformation and, through [`crate::interval::IntervalSemiring`],
//! for intervals over any of these.
//!
//! A semiring is a *value*, not just a type: `MaxMin` carries its bounds and
//! `Subtropical` its deformation parameter. Elements are passed by value.

mod count;
mod integral;
mod maslov;
mod numeric;

use std::fmt;

use crate::error::{Error, Result};

pub use count::{Counting, OpCount};
pub use integral::{idempotent_integral, idempotent_measure_integral, scalar_product};
pub use maslov::{maslov_add, Subtropical};
pub use numeric::{MaxMin, MaxPlus, MaxPlusComplete, MinPlus, NumericSemiring, PlusTimes};

/// Static properties of a semiring instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemiringDescriptor {
    /// Stable identifier, e.g. `maxplus` or `maxmin:0:1`.
    pub carrier_name: String,
    pub is_idempotent: bool,
    pub is_complete: bool,
    pub is_semifield: bool,
}

/// A positive semiring with canonical order, lattice operations, a partial
/// Kleene star and (for semifields) inversion.
///
/// Implementations must satisfy the semiring axioms, make `zero` the least
/// element, and keep `add` and `mul` monotone in each argument with respect
/// to `leq`. For idempotent instances `leq(a, b)` holds iff `add(a, b) == b`.
pub trait Semiring: Send + Sync {
    type Elem: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> SemiringDescriptor;

    /// Whether `x` belongs to the carrier set.
    fn contains(&self, x: &Self::Elem) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// Canonical (or, for non-idempotent instances, numeric) order.
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool;

    /// Least upper bound in the canonical order.
    fn sup(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Greatest lower bound in the canonical order.
    fn inf(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// Kleene star, `a* = 1 ⊕ a ⊙ a*`.
    fn star(&self, a: Self::Elem) -> Result<Self::Elem>;

    /// Multiplicative inverse in a semifield or completed semifield.
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    /// Fails with [`Error::NotInCarrier`] unless `x` is a carrier element.
    fn check(&self, x: Self::Elem) -> Result<Self::Elem> {
        if self.contains(&x) {
            Ok(x)
        } else {
            Err(Error::NotInCarrier {
                carrier: self.descriptor().carrier_name,
                value: format!("{x:?}"),
            })
        }
    }

    /// `add` with carrier validation of both operands.
    fn try_add(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    /// `mul` with carrier validation of both operands.
    fn try_mul(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }
}

impl<S: Semiring + ?Sized> Semiring for &S {
    type Elem = S::Elem;

    fn descriptor(&self) -> SemiringDescriptor {
        (**self).descriptor()
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        (**self).contains(x)
    }
    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool {
        (**self).leq(a, b)
    }
    fn sup(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        (**self).sup(a, b)
    }
    fn inf(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        (**self).inf(a, b)
    }
    fn star(&self, a: Self::Elem) -> Result<Self::Elem> {
        (**self).star(a)
    }
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem> {
        (**self).inv(a)
    }
}
