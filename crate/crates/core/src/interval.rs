//! Weak interval extension `I(S)` of a positive semiring.
//!
//! Bounds are taken in the base semiring's order, so over min-plus the
//! lower bound is numerically the larger one.

use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// A closed interval `[lower, upper]` with `lower ⪯ upper` in the base order.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval<E> {
    lower: E,
    upper: E,
}

impl<E: Clone> Interval<E> {
    pub fn lower(&self) -> &E {
        &self.lower
    }

    pub fn upper(&self) -> &E {
        &self.upper
    }

    /// `[x, x]`, the embedding of a point.
    pub fn point(x: E) -> Self {
        Interval { lower: x.clone(), upper: x }
    }
}

/// `I(S)` with componentwise ⊕, ⊙ and closure.
#[derive(Debug, Clone, PartialEq)]
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

    pub fn interval(&self, lower: S::Elem, upper: S::Elem) -> Result<Interval<S::Elem>> {
        if !self.base.leq(&lower, &upper) {
            return Err(Error::InvalidInterval {
                lower: self.base.format_elem(&lower),
                upper: self.base.format_elem(&upper),
            });
        }
        Ok(Interval { lower, upper })
    }

    /// Whether `x` lies in `iv`.
    pub fn contains(&self, iv: &Interval<S::Elem>, x: &S::Elem) -> bool {
        self.base.leq(&iv.lower, x) && self.base.leq(x, &iv.upper)
    }
}

impl<S: Semiring> Semiring for IntervalSemiring<S> {
    type Elem = Interval<S::Elem>;

    fn name(&self) -> String {
        format!("interval:{}", self.base.name())
    }

    fn zero(&self) -> Self::Elem {
        Interval::point(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        Interval::point(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Interval { lower: self.base.add(&a.lower, &b.lower), upper: self.base.add(&a.upper, &b.upper) }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Interval { lower: self.base.mul(&a.lower, &b.lower), upper: self.base.mul(&a.upper, &b.upper) }
    }

    fn star(&self, a: &Self::Elem) -> Result<Self::Elem> {
        Ok(Interval { lower: self.base.star(&a.lower)?, upper: self.base.star(&a.upper)? })
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.base.leq(&a.lower, &b.lower) && self.base.leq(&a.upper, &b.upper)
    }

    fn is_idempotent(&self) -> bool {
        self.base.is_idempotent()
    }

    fn is_complete(&self) -> bool {
        self.base.is_complete()
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn approx_eq(&self, a: &Self::Elem, b: &Self::Elem, tol: f64) -> bool {
        self.base.approx_eq(&a.lower, &b.lower, tol) && self.base.approx_eq(&a.upper, &b.upper, tol)
    }

    fn is_top(&self, a: &Self::Elem) -> bool {
        self.base.is_top(&a.lower) || self.base.is_top(&a.upper)
    }

    fn magnitude(&self, a: &Self::Elem) -> f64 {
        self.base.magnitude(&a.lower).max(self.base.magnitude(&a.upper))
    }

    /// `lo..hi`, or a single token for a degenerate interval.
    fn parse_elem(&self, token: &str) -> Result<Self::Elem> {
        match token.split_once("..") {
            Some((lo, hi)) => self.interval(self.base.parse_elem(lo)?, self.base.parse_elem(hi)?),
            None => Ok(Interval::point(self.base.parse_elem(token)?)),
        }
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        format!("{}..{}", self.base.format_elem(&a.lower), self.base.format_elem(&a.upper))
    }
}
