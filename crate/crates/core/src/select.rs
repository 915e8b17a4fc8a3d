//! Choosing a semiring instance at run time from its name.
//!
//! Code that works for any instance implements [`SemiringVisitor`] and is
//! handed the concrete instance by [`SemiringKind::visit`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::IntervalSemiring;
use crate::io::parse_f64_token;
use crate::random::RandomWeights;
use crate::semiring::{Boolean, MaxMin, MaxPlus, MaxTimes, MinPlus, Real};

#[derive(Debug, Clone, PartialEq)]
pub enum SemiringKind {
    Real,
    RealComplete,
    MaxPlus,
    MaxPlusComplete,
    MinPlus,
    MinPlusComplete,
    MaxTimes,
    MaxMin {
        lo: f64,
        hi: f64,
    },
    Boolean,
    /// Interval extension of a non-interval instance.
    Interval(Box<SemiringKind>),
}

pub trait SemiringVisitor {
    type Output;

    fn visit<S: RandomWeights + Clone + 'static>(self, s: S) -> Self::Output;
}

impl SemiringKind {
    pub fn visit<V: SemiringVisitor>(&self, v: V) -> Result<V::Output> {
        Ok(match self {
            SemiringKind::Interval(base) => return visit_interval(base, v),
            SemiringKind::Real => v.visit(Real::nonneg()),
            SemiringKind::RealComplete => v.visit(Real::completed()),
            SemiringKind::MaxPlus => v.visit(MaxPlus::new()),
            SemiringKind::MaxPlusComplete => v.visit(MaxPlus::completed()),
            SemiringKind::MinPlus => v.visit(MinPlus::new()),
            SemiringKind::MinPlusComplete => v.visit(MinPlus::completed()),
            SemiringKind::MaxTimes => v.visit(MaxTimes),
            SemiringKind::MaxMin { lo, hi } => v.visit(MaxMin::new(*lo, *hi)?),
            SemiringKind::Boolean => v.visit(Boolean),
        })
    }

    /// Every plain instance name, `max-min` with its default range.
    pub fn names() -> &'static [&'static str] {
        &[
            "real",
            "real-complete",
            "max-plus",
            "max-plus-complete",
            "min-plus",
            "min-plus-complete",
            "max-times",
            "max-min",
            "boolean",
        ]
    }
}

fn visit_interval<V: SemiringVisitor>(base: &SemiringKind, v: V) -> Result<V::Output> {
    Ok(match base {
        SemiringKind::Real => v.visit(IntervalSemiring::new(Real::nonneg())),
        SemiringKind::RealComplete => v.visit(IntervalSemiring::new(Real::completed())),
        SemiringKind::MaxPlus => v.visit(IntervalSemiring::new(MaxPlus::new())),
        SemiringKind::MaxPlusComplete => v.visit(IntervalSemiring::new(MaxPlus::completed())),
        SemiringKind::MinPlus => v.visit(IntervalSemiring::new(MinPlus::new())),
        SemiringKind::MinPlusComplete => v.visit(IntervalSemiring::new(MinPlus::completed())),
        SemiringKind::MaxTimes => v.visit(IntervalSemiring::new(MaxTimes)),
        SemiringKind::MaxMin { lo, hi } => v.visit(IntervalSemiring::new(MaxMin::new(*lo, *hi)?)),
        SemiringKind::Boolean => v.visit(IntervalSemiring::new(Boolean)),
        SemiringKind::Interval(_) => return Err(Error::UnknownSemiring("nested interval extension".into())),
    })
}

impl FromStr for SemiringKind {
    type Err = Error;

    /// Accepts the names listed in [`SemiringKind::names`], `max-min:lo,hi`
    /// and `interval:<name>`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(base) = s.strip_prefix("interval:") {
            let base: SemiringKind = base.parse()?;
            if matches!(base, SemiringKind::Interval(_)) {
                return Err(Error::UnknownSemiring(format!("`{s}`: nested interval extension")));
            }
            return Ok(SemiringKind::Interval(Box::new(base)));
        }
        if let Some(range) = s.strip_prefix("max-min:") {
            let bad = || Error::UnknownSemiring(format!("`{s}`: expected max-min:lo,hi"));
            let (lo, hi) = range.split_once(',').ok_or_else(bad)?;
            let lo = parse_f64_token(lo.trim()).map_err(|_| bad())?;
            let hi = parse_f64_token(hi.trim()).map_err(|_| bad())?;
            MaxMin::new(lo, hi)?;
            return Ok(SemiringKind::MaxMin { lo, hi });
        }
        Ok(match s {
            "real" => SemiringKind::Real,
            "real-complete" => SemiringKind::RealComplete,
            "max-plus" => SemiringKind::MaxPlus,
            "max-plus-complete" => SemiringKind::MaxPlusComplete,
            "min-plus" => SemiringKind::MinPlus,
            "min-plus-complete" => SemiringKind::MinPlusComplete,
            "max-times" => SemiringKind::MaxTimes,
            "max-min" => SemiringKind::MaxMin { lo: 0.0, hi: 1.0 },
            "boolean" => SemiringKind::Boolean,
            _ => {
                return Err(Error::UnknownSemiring(format!(
                    "`{s}` (known: {}, max-min:lo,hi, interval:<name>)",
                    Self::names().join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Name;
        impl SemiringVisitor for Name {
            type Output = String;
            fn visit<S: RandomWeights + Clone + 'static>(self, s: S) -> String {
                s.name()
            }
        }
        match self.visit(Name) {
            Ok(name) => f.write_str(&name),
            Err(_) => f.write_str("<invalid>"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in SemiringKind::names() {
            let k: SemiringKind = name.parse().unwrap();
            let shown = k.to_string();
            assert_eq!(shown.parse::<SemiringKind>().unwrap(), k);
            let iv: SemiringKind = format!("interval:{name}").parse().unwrap();
            assert_eq!(iv.to_string(), format!("interval:{shown}"));
        }
        assert_eq!("max-min".parse::<SemiringKind>().unwrap().to_string(), "max-min:0,1");
        assert_eq!("max-min:-1,2.5".parse::<SemiringKind>().unwrap(), SemiringKind::MaxMin { lo: -1.0, hi: 2.5 });
    }

    #[test]
    fn rejects_unknown_names() {
        for bad in ["tropical", "max-min:2,1", "max-min:1", "interval:interval:boolean", "interval:"] {
            assert!(bad.parse::<SemiringKind>().is_err(), "{bad}");
        }
    }
}
