use std::fmt;
use std::str::FromStr;

use super::{Semiring, SemiringDescriptor, Subtropical};
use crate::error::{Error, Result};
use crate::text::format_scalar;

const NEG_INF: f64 = f64::NEG_INFINITY;
const POS_INF: f64 = f64::INFINITY;

fn finite_or(x: f64, allowed: f64) -> bool {
    x.is_finite() || x == allowed
}

fn undefined(op: &'static str, s: &impl Semiring, x: f64) -> Error {
    Error::Undefined {
        op,
        carrier: s.descriptor().carrier_name,
        value: format_scalar(x),
    }
}

fn diverges(s: &impl Semiring, x: f64) -> Error {
    Error::Divergence(format!(
        "star({}) does not exist in {}",
        format_scalar(x),
        s.descriptor().carrier_name
    ))
}

/// `R ∪ {-∞}` with `⊕ = max`, `⊙ = +`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MaxPlus;

impl Semiring for MaxPlus {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: "maxplus".into(),
            is_idempotent: true,
            is_complete: false,
            is_semifield: true,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        finite_or(*x, NEG_INF)
    }
    fn zero(&self) -> f64 {
        NEG_INF
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a.max(b)
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
    fn star(&self, a: f64) -> Result<f64> {
        if a <= 0.0 {
            Ok(0.0)
        } else {
            Err(diverges(self, a))
        }
    }
    fn inv(&self, a: f64) -> Result<f64> {
        if a.is_finite() {
            Ok(-a)
        } else {
            Err(undefined("inv", self, a))
        }
    }
}

/// `R ∪ {-∞, +∞}` with `⊕ = max`, `⊙ = +` and `-∞ ⊙ +∞ = -∞`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MaxPlusComplete;

impl Semiring for MaxPlusComplete {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: "maxplus-complete".into(),
            is_idempotent: true,
            is_complete: true,
            is_semifield: true,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        !x.is_nan()
    }
    fn zero(&self) -> f64 {
        NEG_INF
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a.max(b)
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        // zero absorbs, including against +inf
        if a == NEG_INF || b == NEG_INF {
            NEG_INF
        } else {
            a + b
        }
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
    fn star(&self, a: f64) -> Result<f64> {
        Ok(if a <= 0.0 { 0.0 } else { POS_INF })
    }
    fn inv(&self, a: f64) -> Result<f64> {
        Ok(-a)
    }
}

/// `R ∪ {+∞}` with `⊕ = min`, `⊙ = +`. The canonical order is the reverse
/// of the numeric one.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MinPlus;

impl Semiring for MinPlus {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: "minplus".into(),
            is_idempotent: true,
            is_complete: false,
            is_semifield: true,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        finite_or(*x, POS_INF)
    }
    fn zero(&self) -> f64 {
        POS_INF
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a.min(b)
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        a + b
    }
    fn leq(&self, a: f64, b: f64) -> bool {
        a >= b
    }
    fn sup(&self, a: f64, b: f64) -> f64 {
        a.min(b)
    }
    fn inf(&self, a: f64, b: f64) -> f64 {
        a.max(b)
    }
    fn star(&self, a: f64) -> Result<f64> {
        if a >= 0.0 {
            Ok(0.0)
        } else {
            Err(diverges(self, a))
        }
    }
    fn inv(&self, a: f64) -> Result<f64> {
        if a.is_finite() {
            Ok(-a)
        } else {
            Err(undefined("inv", self, a))
        }
    }
}

/// The interval `[lo, hi]` with `⊕ = max`, `⊙ = min`, `0 = lo`, `1 = hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxMin {
    lo: f64,
    hi: f64,
}

impl MaxMin {
    /// Requires `-∞ <= lo < hi <= +∞`.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "maxmin bounds must satisfy lo < hi, got {}:{}",
                format_scalar(lo),
                format_scalar(hi)
            )));
        }
        Ok(MaxMin { lo, hi })
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }
}

impl Default for MaxMin {
    fn default() -> Self {
        MaxMin { lo: 0.0, hi: 1.0 }
    }
}

impl Semiring for MaxMin {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: format!("maxmin:{}:{}", format_scalar(self.lo), format_scalar(self.hi)),
            is_idempotent: true,
            is_complete: true,
            is_semifield: false,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        self.lo <= *x && *x <= self.hi
    }
    fn zero(&self) -> f64 {
        self.lo
    }
    fn one(&self) -> f64 {
        self.hi
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a.max(b)
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        a.min(b)
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
        Ok(self.hi)
    }
    fn inv(&self, _a: f64) -> Result<f64> {
        Err(Error::Unsupported {
            op: "inv",
            carrier: self.descriptor().carrier_name,
        })
    }
}

/// Nonnegative reals with ordinary `+` and `×`.
///
/// The completed form adds `∞` (with `0 × ∞ = 0`), where `x* = ∞` for
/// `x >= 1` and `0⁻¹ = ∞`, `∞⁻¹ = 0`. The plain form reports those cases as
/// divergence or undefined instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlusTimes {
    completed: bool,
}

impl PlusTimes {
    pub fn completed() -> Self {
        PlusTimes { completed: true }
    }

    pub fn plain() -> Self {
        PlusTimes { completed: false }
    }

    pub fn is_completed(&self) -> bool {
        self.completed
    }
}

impl Default for PlusTimes {
    fn default() -> Self {
        PlusTimes::completed()
    }
}

impl Semiring for PlusTimes {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        SemiringDescriptor {
            carrier_name: "plustimes".into(),
            is_idempotent: false,
            is_complete: self.completed,
            is_semifield: true,
        }
    }
    fn contains(&self, x: &f64) -> bool {
        *x >= 0.0 && (x.is_finite() || self.completed)
    }
    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a + b
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        if a == 0.0 || b == 0.0 {
            0.0
        } else {
            a * b
        }
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
    fn star(&self, a: f64) -> Result<f64> {
        if a < 1.0 {
            Ok(1.0 / (1.0 - a))
        } else if self.completed {
            Ok(POS_INF)
        } else {
            Err(diverges(self, a))
        }
    }
    fn inv(&self, a: f64) -> Result<f64> {
        if a > 0.0 && a.is_finite() {
            Ok(1.0 / a)
        } else if self.completed {
            Ok(if a == 0.0 { POS_INF } else { 0.0 })
        } else {
            Err(undefined("inv", self, a))
        }
    }
}

/// Runtime choice among the numeric instances, addressed by the stable
/// identifiers `maxplus`, `maxplus-complete`, `minplus`, `maxmin:<a>:<b>`,
/// `plustimes` and `subtropical:<h>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NumericSemiring {
    MaxPlus(MaxPlus),
    MaxPlusComplete(MaxPlusComplete),
    MinPlus(MinPlus),
    MaxMin(MaxMin),
    PlusTimes(PlusTimes),
    Subtropical(Subtropical),
}

impl NumericSemiring {
    /// Swaps in the completed carrier where one exists (`maxplus` becomes
    /// `maxplus-complete`, plain `plustimes` becomes completed), or the
    /// strict one when `completed` is false.
    pub fn with_completion(self, completed: bool) -> Self {
        use NumericSemiring as N;
        match (self, completed) {
            (N::MaxPlus(_), true) => N::MaxPlusComplete(MaxPlusComplete),
            (N::MaxPlusComplete(_), false) => N::MaxPlus(MaxPlus),
            (N::PlusTimes(_), true) => N::PlusTimes(PlusTimes::completed()),
            (N::PlusTimes(_), false) => N::PlusTimes(PlusTimes::plain()),
            (other, _) => other,
        }
    }
}

impl fmt::Display for NumericSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor().carrier_name)
    }
}

impl FromStr for NumericSemiring {
    type Err = Error;

    fn from_str(id: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown semiring identifier '{id}'"));
        let num = |t: &str| crate::text::parse_scalar(t).map_err(|_| bad());
        let mut parts = id.split(':');
        let head = parts.next().unwrap_or_default();
        let rest: Vec<&str> = parts.collect();
        let s = match (head, rest.as_slice()) {
            ("maxplus", []) => NumericSemiring::MaxPlus(MaxPlus),
            ("maxplus-complete", []) => NumericSemiring::MaxPlusComplete(MaxPlusComplete),
            ("minplus", []) => NumericSemiring::MinPlus(MinPlus),
            ("maxmin", []) => NumericSemiring::MaxMin(MaxMin::default()),
            ("maxmin", [a, b]) => NumericSemiring::MaxMin(MaxMin::new(num(a)?, num(b)?)?),
            ("plustimes", []) => NumericSemiring::PlusTimes(PlusTimes::completed()),
            ("subtropical", [h]) => NumericSemiring::Subtropical(Subtropical::new(num(h)?)?),
            _ => return Err(bad()),
        };
        Ok(s)
    }
}

macro_rules! dispatch {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            NumericSemiring::MaxPlus($s) => $body,
            NumericSemiring::MaxPlusComplete($s) => $body,
            NumericSemiring::MinPlus($s) => $body,
            NumericSemiring::MaxMin($s) => $body,
            NumericSemiring::PlusTimes($s) => $body,
            NumericSemiring::Subtropical($s) => $body,
        }
    };
}

impl Semiring for NumericSemiring {
    type Elem = f64;

    fn descriptor(&self) -> SemiringDescriptor {
        dispatch!(self, s => s.descriptor())
    }
    fn contains(&self, x: &f64) -> bool {
        dispatch!(self, s => s.contains(x))
    }
    fn zero(&self) -> f64 {
        dispatch!(self, s => s.zero())
    }
    fn one(&self) -> f64 {
        dispatch!(self, s => s.one())
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        dispatch!(self, s => s.add(a, b))
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        dispatch!(self, s => s.mul(a, b))
    }
    fn leq(&self, a: f64, b: f64) -> bool {
        dispatch!(self, s => s.leq(a, b))
    }
    fn sup(&self, a: f64, b: f64) -> f64 {
        dispatch!(self, s => s.sup(a, b))
    }
    fn inf(&self, a: f64, b: f64) -> f64 {
        dispatch!(self, s => s.inf(a, b))
    }
    fn star(&self, a: f64) -> Result<f64> {
        dispatch!(self, s => s.star(a))
    }
    fn inv(&self, a: f64) -> Result<f64> {
        dispatch!(self, s => s.inv(a))
    }
}
