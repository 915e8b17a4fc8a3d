//! The algebraic contract every algorithm in the crate is generic over, and
//! the concrete numeric instances.
//!
//! | Instance           | ⊕   | ⊙   | 0    | 1   | a*                          |
//! |--------------------|-----|-----|------|-----|-----------------------------|
//! | `real`             | +   | ×   | 0    | 1   | 1/(1-a) for a < 1           |
//! | `real-complete`    | +   | ×   | 0    | 1   | 1/(1-a), or +∞ for a ≥ 1    |
//! | `max-plus`         | max | +   | -∞   | 0   | 0 for a ≤ 0                 |
//! | `max-plus-complete`| max | +   | -∞   | 0   | 0, or +∞ for a > 0          |
//! | `min-plus`         | min | +   | +∞   | 0   | 0 for a ≥ 0                 |
//! | `min-plus-complete`| min | +   | +∞   | 0   | 0, or -∞ for a < 0          |
//! | `max-times`        | max | ×   | 0    | 1   | 1 for a ≤ 1                 |
//! | `max-min:a,b`      | max | min | a    | b   | b                           |
//! | `boolean`          | ∨   | ∧   | 0    | 1   | 1                           |
//!
//! Where no rule applies the closure does not exist and [`Semiring::star`]
//! returns [`Error::NoClosure`].

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::io::{format_g17, format_shortest, parse_f64_token};

/// A semiring instance together with its closure, canonical order and
/// text representation of elements.
///
/// Instances are values rather than marker types so that parametrised
/// families (`max-min:a,b`, interval extensions, instrumented wrappers)
/// can carry their parameters.
pub trait Semiring: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    /// Name as accepted by the command line.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Closure `a* = 1 ⊕ a ⊕ a² ⊕ …`, the least solution of `x = ax ⊕ 1`.
    fn star(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Partial order. Idempotent instances use the canonical order
    /// `a ⪯ b ⇔ a ⊕ b = b`.
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.add(a, b) == *b
    }

    /// Multiplicative inverse; only semifield instances provide one.
    fn try_inverse(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn is_idempotent(&self) -> bool;
    fn is_complete(&self) -> bool;

    fn is_commutative(&self) -> bool {
        true
    }

    /// Equality up to `tol`. Exact for instances without rounding.
    fn approx_eq(&self, a: &Self::Elem, b: &Self::Elem, _tol: f64) -> bool {
        a == b
    }

    /// Whether `a` is the infinite top element of a completed instance.
    fn is_top(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Size of a finite element, used by divergence probes. Instances
    /// without a numeric reading report 0.
    fn magnitude(&self, _a: &Self::Elem) -> f64 {
        0.0
    }

    fn parse_elem(&self, token: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

fn no_closure<S: Semiring + ?Sized>(s: &S, a: &S::Elem) -> Error {
    Error::NoClosure { semiring: s.name(), value: s.format_elem(a) }
}

/// Maps `-0.0` onto `0.0` so that every element has a single bit pattern.
#[inline]
fn canon(x: f64) -> f64 {
    x + 0.0
}

fn f64_approx_eq(a: f64, b: f64, tol: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

fn f64_magnitude(a: f64) -> f64 {
    if a.is_finite() {
        a.abs()
    } else {
        0.0
    }
}

/// Nonnegative reals with ordinary arithmetic.
///
/// The plain instance has no closure for `a ≥ 1`; the completed instance
/// adds `+∞` and maps such elements to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real {
    complete: bool,
}

impl Real {
    pub const fn nonneg() -> Self {
        Real { complete: false }
    }

    pub const fn completed() -> Self {
        Real { complete: true }
    }
}

impl Semiring for Real {
    type Elem = f64;

    fn name(&self) -> String {
        if self.complete { "real-complete" } else { "real" }.to_string()
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        canon(a + b)
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        // 0 ⊙ ∞ = 0
        if *a == 0.0 || *b == 0.0 {
            0.0
        } else {
            a * b
        }
    }

    fn star(&self, a: &f64) -> Result<f64> {
        if *a < 1.0 {
            Ok(1.0 / (1.0 - a))
        } else if self.complete {
            Ok(f64::INFINITY)
        } else {
            Err(no_closure(self, a))
        }
    }

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a <= b
    }

    fn try_inverse(&self, a: &f64) -> Option<f64> {
        (*a != 0.0 && a.is_finite()).then(|| 1.0 / a)
    }

    fn is_idempotent(&self) -> bool {
        false
    }

    fn is_complete(&self) -> bool {
        self.complete
    }

    fn approx_eq(&self, a: &f64, b: &f64, tol: f64) -> bool {
        f64_approx_eq(*a, *b, tol)
    }

    fn is_top(&self, a: &f64) -> bool {
        self.complete && *a == f64::INFINITY
    }

    fn magnitude(&self, a: &f64) -> f64 {
        f64_magnitude(*a)
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = parse_f64_token(token)?;
        if x < 0.0 || (x.is_infinite() && !self.complete) {
            return Err(Error::Parse(format!("`{token}` is not an element of {}", self.name())));
        }
        Ok(canon(x))
    }

    fn format_elem(&self, a: &f64) -> String {
        format_g17(*a)
    }
}

/// `(ℝ ∪ {-∞}, max, +)`, optionally completed with `+∞`.
///
/// In the completed instance `-∞ ⊙ +∞ = -∞`: the zero stays absorbing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxPlus {
    complete: bool,
}

impl MaxPlus {
    pub const fn new() -> Self {
        MaxPlus { complete: false }
    }

    pub const fn completed() -> Self {
        MaxPlus { complete: true }
    }
}

impl Default for MaxPlus {
    fn default() -> Self {
        Self::new()
    }
}

impl Semiring for MaxPlus {
    type Elem = f64;

    fn name(&self) -> String {
        if self.complete { "max-plus-complete" } else { "max-plus" }.to_string()
    }

    fn zero(&self) -> f64 {
        f64::NEG_INFINITY
    }

    fn one(&self) -> f64 {
        0.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a.max(*b)
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        if *a == f64::NEG_INFINITY || *b == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            canon(a + b)
        }
    }

    fn star(&self, a: &f64) -> Result<f64> {
        if *a <= 0.0 {
            Ok(0.0)
        } else if self.complete {
            Ok(f64::INFINITY)
        } else {
            Err(no_closure(self, a))
        }
    }

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a <= b
    }

    fn try_inverse(&self, a: &f64) -> Option<f64> {
        a.is_finite().then(|| canon(-a))
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_complete(&self) -> bool {
        self.complete
    }

    fn approx_eq(&self, a: &f64, b: &f64, tol: f64) -> bool {
        f64_approx_eq(*a, *b, tol)
    }

    fn is_top(&self, a: &f64) -> bool {
        self.complete && *a == f64::INFINITY
    }

    fn magnitude(&self, a: &f64) -> f64 {
        f64_magnitude(*a)
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = parse_f64_token(token)?;
        if x == f64::INFINITY && !self.complete {
            return Err(Error::Parse(format!("`{token}` is not an element of max-plus")));
        }
        Ok(canon(x))
    }

    fn format_elem(&self, a: &f64) -> String {
        format_shortest(*a)
    }
}

/// `(ℝ ∪ {+∞}, min, +)`, optionally completed with `-∞`. Isomorphic to
/// max-plus under negation; the canonical order is reversed numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinPlus {
    complete: bool,
}

impl MinPlus {
    pub const fn new() -> Self {
        MinPlus { complete: false }
    }

    pub const fn completed() -> Self {
        MinPlus { complete: true }
    }
}

impl Default for MinPlus {
    fn default() -> Self {
        Self::new()
    }
}

impl Semiring for MinPlus {
    type Elem = f64;

    fn name(&self) -> String {
        if self.complete { "min-plus-complete" } else { "min-plus" }.to_string()
    }

    fn zero(&self) -> f64 {
        f64::INFINITY
    }

    fn one(&self) -> f64 {
        0.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        if *a == f64::INFINITY || *b == f64::INFINITY {
            f64::INFINITY
        } else {
            canon(a + b)
        }
    }

    fn star(&self, a: &f64) -> Result<f64> {
        if *a >= 0.0 {
            Ok(0.0)
        } else if self.complete {
            Ok(f64::NEG_INFINITY)
        } else {
            Err(no_closure(self, a))
        }
    }

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a >= b
    }

    fn try_inverse(&self, a: &f64) -> Option<f64> {
        a.is_finite().then(|| canon(-a))
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_complete(&self) -> bool {
        self.complete
    }

    fn approx_eq(&self, a: &f64, b: &f64, tol: f64) -> bool {
        f64_approx_eq(*a, *b, tol)
    }

    fn is_top(&self, a: &f64) -> bool {
        self.complete && *a == f64::NEG_INFINITY
    }

    fn magnitude(&self, a: &f64) -> f64 {
        f64_magnitude(*a)
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = parse_f64_token(token)?;
        if x == f64::NEG_INFINITY && !self.complete {
            return Err(Error::Parse(format!("`{token}` is not an element of min-plus")));
        }
        Ok(canon(x))
    }

    fn format_elem(&self, a: &f64) -> String {
        format_shortest(*a)
    }
}

/// `([0, ∞), max, ×)`. Closure is 1 on `[0, 1]` and undefined above.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MaxTimes;

impl Semiring for MaxTimes {
    type Elem = f64;

    fn name(&self) -> String {
        "max-times".to_string()
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a.max(*b)
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        canon(a * b)
    }

    fn star(&self, a: &f64) -> Result<f64> {
        if *a <= 1.0 {
            Ok(1.0)
        } else {
            Err(no_closure(self, a))
        }
    }

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a <= b
    }

    fn try_inverse(&self, a: &f64) -> Option<f64> {
        (*a > 0.0).then(|| 1.0 / a)
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_complete(&self) -> bool {
        false
    }

    fn approx_eq(&self, a: &f64, b: &f64, tol: f64) -> bool {
        f64_approx_eq(*a, *b, tol)
    }

    fn magnitude(&self, a: &f64) -> f64 {
        f64_magnitude(*a)
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = parse_f64_token(token)?;
        if !(x >= 0.0 && x.is_finite()) {
            return Err(Error::Parse(format!("`{token}` is not an element of max-times")));
        }
        Ok(canon(x))
    }

    fn format_elem(&self, a: &f64) -> String {
        format_shortest(*a)
    }
}

/// `([lo, hi], max, min)`: the bottleneck (maximal path width) semiring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxMin {
    lo: f64,
    hi: f64,
}

impl MaxMin {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::Parse(format!("max-min bounds need lo < hi, got [{lo}, {hi}]")));
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

    fn name(&self) -> String {
        format!("max-min:{},{}", format_shortest(self.lo), format_shortest(self.hi))
    }

    fn zero(&self) -> f64 {
        self.lo
    }

    fn one(&self) -> f64 {
        self.hi
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a.max(*b)
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }

    fn star(&self, _a: &f64) -> Result<f64> {
        Ok(self.hi)
    }

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a <= b
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_complete(&self) -> bool {
        true
    }

    fn magnitude(&self, a: &f64) -> f64 {
        f64_magnitude(*a)
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = canon(parse_f64_token(token)?);
        if x < self.lo || x > self.hi {
            return Err(Error::Parse(format!("`{token}` lies outside [{}, {}]", self.lo, self.hi)));
        }
        Ok(x)
    }

    fn format_elem(&self, a: &f64) -> String {
        format_shortest(*a)
    }
}

/// `({0, 1}, ∨, ∧)`: reachability.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Boolean;

impl Semiring for Boolean {
    type Elem = bool;

    fn name(&self) -> String {
        "boolean".to_string()
    }

    fn zero(&self) -> bool {
        false
    }

    fn one(&self) -> bool {
        true
    }

    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn star(&self, _a: &bool) -> Result<bool> {
        Ok(true)
    }

    fn leq(&self, a: &bool, b: &bool) -> bool {
        !*a || *b
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_complete(&self) -> bool {
        true
    }

    fn parse_elem(&self, token: &str) -> Result<bool> {
        match token {
            "0" | "false" => Ok(false),
            "1" | "true" => Ok(true),
            _ => Err(Error::Parse(format!("`{token}` is not a boolean"))),
        }
    }

    fn format_elem(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }
}

/// Snapshot of the operations performed through a [`Counting`] wrapper.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OpCounts {
    pub add: u64,
    pub mul: u64,
    pub star: u64,
    pub inverse: u64,
}

#[derive(Debug, Default)]
struct Counters {
    add: AtomicU64,
    mul: AtomicU64,
    star: AtomicU64,
    inverse: AtomicU64,
}

/// Delegating wrapper that counts ⊕, ⊙, closures and inversions.
///
/// Clones share the same counters.
#[derive(Debug, Clone)]
pub struct Counting<S> {
    inner: S,
    counters: Arc<Counters>,
}

/// Wraps `s` in a fresh [`Counting`] instance.
pub fn make_counting<S: Semiring>(s: S) -> Counting<S> {
    Counting { inner: s, counters: Arc::new(Counters::default()) }
}

impl<S> Counting<S> {
    pub fn inner(&self) -> &S {
        &self.inner
    }

    pub fn counts(&self) -> OpCounts {
        OpCounts {
            add: self.counters.add.load(Ordering::Relaxed),
            mul: self.counters.mul.load(Ordering::Relaxed),
            star: self.counters.star.load(Ordering::Relaxed),
            inverse: self.counters.inverse.load(Ordering::Relaxed),
        }
    }

    pub fn reset(&self) {
        self.counters.add.store(0, Ordering::Relaxed);
        self.counters.mul.store(0, Ordering::Relaxed);
        self.counters.star.store(0, Ordering::Relaxed);
        self.counters.inverse.store(0, Ordering::Relaxed);
    }
}

impl<S: Semiring> Semiring for Counting<S> {
    type Elem = S::Elem;

    fn name(&self) -> String {
        self.inner.name()
    }

    fn zero(&self) -> S::Elem {
        self.inner.zero()
    }

    fn one(&self) -> S::Elem {
        self.inner.one()
    }

    fn add(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.counters.add.fetch_add(1, Ordering::Relaxed);
        self.inner.add(a, b)
    }

    fn mul(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.counters.mul.fetch_add(1, Ordering::Relaxed);
        self.inner.mul(a, b)
    }

    fn star(&self, a: &S::Elem) -> Result<S::Elem> {
        self.counters.star.fetch_add(1, Ordering::Relaxed);
        self.inner.star(a)
    }

    fn leq(&self, a: &S::Elem, b: &S::Elem) -> bool {
        self.inner.leq(a, b)
    }

    fn try_inverse(&self, a: &S::Elem) -> Option<S::Elem> {
        self.counters.inverse.fetch_add(1, Ordering::Relaxed);
        self.inner.try_inverse(a)
    }

    fn is_idempotent(&self) -> bool {
        self.inner.is_idempotent()
    }

    fn is_complete(&self) -> bool {
        self.inner.is_complete()
    }

    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }

    fn approx_eq(&self, a: &S::Elem, b: &S::Elem, tol: f64) -> bool {
        self.inner.approx_eq(a, b, tol)
    }

    fn is_top(&self, a: &S::Elem) -> bool {
        self.inner.is_top(a)
    }

    fn magnitude(&self, a: &S::Elem) -> f64 {
        self.inner.magnitude(a)
    }

    fn parse_elem(&self, token: &str) -> Result<S::Elem> {
        self.inner.parse_elem(token)
    }

    fn format_elem(&self, a: &S::Elem) -> String {
        self.inner.format_elem(a)
    }
}
