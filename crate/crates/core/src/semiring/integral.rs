//! Discrete idempotent integration: `∫⊕ φ = ⊕ₓ φ(x)` over a finite domain.

use std::collections::BTreeMap;

use super::Semiring;
use crate::error::{Error, Result};

/// `⊕`-fold of the table values; the supremum in idempotent instances.
///
/// An empty table integrates to `0` in complete carriers and is an error
/// otherwise.
pub fn idempotent_integral<S: Semiring, K>(s: &S, f: &BTreeMap<K, S::Elem>) -> Result<S::Elem> {
    let mut values = f.values().copied();
    let Some(first) = values.next() else {
        return if s.descriptor().is_complete {
            Ok(s.zero())
        } else {
            Err(Error::InvalidParameter(
                "integral over an empty domain in a non-complete carrier".into(),
            ))
        };
    };
    Ok(values.fold(first, |acc, v| s.add(acc, v)))
}

/// `⊕ₓ φ(x) ⊙ ψ(x)` over the common domain of the two tables.
pub fn idempotent_measure_integral<S: Semiring, K: Ord>(
    s: &S,
    phi: &BTreeMap<K, S::Elem>,
    psi: &BTreeMap<K, S::Elem>,
) -> Result<S::Elem> {
    if phi.len() != psi.len() || phi.keys().zip(psi.keys()).any(|(a, b)| a != b) {
        return Err(Error::dims("measure integral", "tables have different domains"));
    }
    let mut acc = s.zero();
    for (p, q) in phi.values().zip(psi.values()) {
        acc = s.add(acc, s.mul(*p, *q));
    }
    Ok(acc)
}

/// Semiring scalar product `x₁⊙y₁ ⊕ … ⊕ xₙ⊙yₙ`.
pub fn scalar_product<S: Semiring>(s: &S, x: &[S::Elem], y: &[S::Elem]) -> Result<S::Elem> {
    if x.len() != y.len() {
        return Err(Error::dims(
            "scalar product",
            format!("lengths {} and {}", x.len(), y.len()),
        ));
    }
    Ok(x
        .iter()
        .zip(y)
        .fold(s.zero(), |acc, (a, b)| s.add(acc, s.mul(*a, *b))))
}
