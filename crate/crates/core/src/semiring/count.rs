use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{Semiring, SemiringDescriptor};
use crate::error::Result;

/// Tally of basic operations executed by a computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCount {
    pub adds: u64,
    pub muls: u64,
    pub stars: u64,
    pub sups: u64,
    pub infs: u64,
    pub invs: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.adds + self.muls + self.stars + self.sups + self.infs + self.invs
    }

    /// Merges counts gathered by independent tasks.
    pub fn merge(self, other: OpCount) -> OpCount {
        self + other
    }
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, o: OpCount) -> OpCount {
        OpCount {
            adds: self.adds + o.adds,
            muls: self.muls + o.muls,
            stars: self.stars + o.stars,
            sups: self.sups + o.sups,
            infs: self.infs + o.infs,
            invs: self.invs + o.invs,
        }
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, o: OpCount) {
        *self = *self + o;
    }
}

impl fmt::Display for OpCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "adds={} muls={} stars={} sups={} infs={} invs={}",
            self.adds, self.muls, self.stars, self.sups, self.infs, self.invs
        )
    }
}

#[derive(Default)]
struct Counters {
    adds: AtomicU64,
    muls: AtomicU64,
    stars: AtomicU64,
    sups: AtomicU64,
    infs: AtomicU64,
    invs: AtomicU64,
}

fn bump(c: &AtomicU64) {
    c.fetch_add(1, Ordering::Relaxed);
}

/// Instrumented wrapper: behaves exactly like the inner semiring and counts
/// every basic operation it performs.
///
/// Counting is opt-in. Uninstrumented code paths use the inner semiring
/// directly and pay nothing. Counters are atomic so the wrapper can be used
/// with the parallel kernels; the totals are exact either way.
pub struct Counting<S> {
    inner: S,
    counters: Counters,
}

impl<S: Semiring> Counting<S> {
    pub fn new(inner: S) -> Self {
        Counting {
            inner,
            counters: Counters::default(),
        }
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    /// Snapshot of the operations counted so far.
    pub fn counts(&self) -> OpCount {
        let c = &self.counters;
        OpCount {
            adds: c.adds.load(Ordering::Relaxed),
            muls: c.muls.load(Ordering::Relaxed),
            stars: c.stars.load(Ordering::Relaxed),
            sups: c.sups.load(Ordering::Relaxed),
            infs: c.infs.load(Ordering::Relaxed),
            invs: c.invs.load(Ordering::Relaxed),
        }
    }

    pub fn reset(&self) {
        let c = &self.counters;
        for a in [&c.adds, &c.muls, &c.stars, &c.sups, &c.infs, &c.invs] {
            a.store(0, Ordering::Relaxed);
        }
    }
}

impl<S: Semiring> Semiring for Counting<S> {
    type Elem = S::Elem;

    fn descriptor(&self) -> SemiringDescriptor {
        self.inner.descriptor()
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        self.inner.contains(x)
    }
    fn zero(&self) -> Self::Elem {
        self.inner.zero()
    }
    fn one(&self) -> Self::Elem {
        self.inner.one()
    }
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        bump(&self.counters.adds);
        self.inner.add(a, b)
    }
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        bump(&self.counters.muls);
        self.inner.mul(a, b)
    }
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool {
        self.inner.leq(a, b)
    }
    fn sup(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        bump(&self.counters.sups);
        self.inner.sup(a, b)
    }
    fn inf(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        bump(&self.counters.infs);
        self.inner.inf(a, b)
    }
    fn star(&self, a: Self::Elem) -> Result<Self::Elem> {
        bump(&self.counters.stars);
        self.inner.star(a)
    }
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem> {
        bump(&self.counters.invs);
        self.inner.inv(a)
    }
}
