//! Rational valuations normalized so that `v(p) = 1`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

/// Exact rational used for valuations, slopes and Herbrand breakpoints.
pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// Formats a rational as `"a/b"` (or `"a"` when integral).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Stand-in for the precision of an exact zero; large enough to clear any
/// bound used here and small enough that rational arithmetic never overflows.
pub const INFINITE_PRECISION: i64 = 1 << 40;

pub fn infinite_precision() -> Q {
    Ratio::from_integer(INFINITE_PRECISION)
}

/// A valuation with `v(p) = 1`, or the marker for an element that is zero
/// at its stored precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(Q),
    /// Indistinguishable from zero; `precision` is the absolute precision
    /// (same normalization) at which it was observed.
    Bottom {
        precision: Q,
    },
}

impl Valuation {
    pub fn finite(self) -> Option<Q> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Bottom { .. } => None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Valuation::Bottom { .. })
    }

    /// Whether the element is known to have valuation strictly above `bound`.
    /// `None` when precision does not decide it.
    pub fn exceeds(&self, bound: Q) -> Option<bool> {
        match *self {
            Valuation::Finite(v) => Some(v > bound),
            Valuation::Bottom { precision } if precision > bound => Some(true),
            Valuation::Bottom { .. } => None,
        }
    }

    /// Rescales to the integer normalization of a field with absolute
    /// ramification index `e` (so that its uniformizer has valuation 1).
    pub fn rescaled(&self, e: i64) -> Valuation {
        match *self {
            Valuation::Finite(v) => Valuation::Finite(v * e),
            Valuation::Bottom { precision } => Valuation::Bottom {
                precision: precision * e,
            },
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", fmt_q(v)),
            Valuation::Bottom { precision } => write!(f, "O({})", fmt_q(precision)),
        }
    }
}

/// A valuation in both normalizations, as emitted in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualValuation {
    /// `v(p) = 1`.
    pub v_p: String,
    /// Integer normalization of the named level.
    pub v_level: String,
    pub level: String,
}

impl DualValuation {
    pub fn new(v: Q, level: &str, e: i64) -> Self {
        DualValuation {
            v_p: fmt_q(&v),
            v_level: fmt_q(&(v * e)),
            level: level.to_string(),
        }
    }
}

/// Serde helpers writing rationals as `"a/b"` strings.
pub mod as_string {
    use super::{fmt_q, Q};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn opt<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&fmt_q(v)),
            None => s.serialize_none(),
        }
    }

    pub fn vec<S: Serializer>(x: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(fmt_q))
    }
}
