//! Neutrosophic criterion values.
//!
//! Two value kinds are supported. [`SvnValue`] is a triple of truth,
//! indeterminacy and falsity degrees, each an independent number in
//! `[0, 1]`. [`InValue`] widens each degree to a closed subinterval of
//! `[0, 1]`. Values are checked on construction and immutable afterwards,
//! so every operation on them is pure and freely shareable across threads.
//!
//! Interval bounds are normally required to be ascending ([`ValidationPolicy::Strict`]).
//! [`ValidationPolicy::Lenient`] stores bound pairs exactly as written, which
//! is occasionally needed to reproduce published tables whose interval
//! entries appear in descending order.

use thiserror::Error;

/// Absolute tolerance for componentwise value equality.
///
/// Criterion values are human-entered decimals; 1e-9 sits far below data
/// precision and well above accumulated rounding.
pub const EQ_EPSILON: f64 = 1e-9;

/// How interval bounds are checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValidationPolicy {
    /// Require `lo <= hi` for every interval.
    #[default]
    Strict,
    /// Store bound pairs exactly as given, without an ordering check.
    Lenient,
}

/// Rejected value construction or a value operation outside its domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValueError {
    #[error("{field} degree {value} is outside [0, 1]")]
    OutOfRange { field: &'static str, value: f64 },
    #[error("{field} interval [{lo}, {hi}] is descending under strict validation")]
    DescendingInterval { field: &'static str, lo: f64, hi: f64 },
    #[error("complement is undefined for a descending indeterminacy interval [{lo}, {hi}]")]
    ComplementOfDescending { lo: f64, hi: f64 },
}

fn check_degree(field: &'static str, value: f64) -> Result<f64, ValueError> {
    // NaN fails the range test and is rejected with it.
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(ValueError::OutOfRange { field, value })
    }
}

/// A single-valued neutrosophic value: truth, indeterminacy and falsity
/// degrees, independent of one another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvnValue {
    t: f64,
    i: f64,
    f: f64,
}

impl SvnValue {
    pub fn new(truth: f64, indeterminacy: f64, falsity: f64) -> Result<Self, ValueError> {
        Ok(Self {
            t: check_degree("truth", truth)?,
            i: check_degree("indeterminacy", indeterminacy)?,
            f: check_degree("falsity", falsity)?,
        })
    }

    /// `(1, 0, 0)`: full truth, no indeterminacy, no falsity. Contains every
    /// valid value and uniquely maximizes the score function.
    pub const fn absolute() -> Self {
        Self { t: 1.0, i: 0.0, f: 0.0 }
    }

    /// `(0, 1, 1)`: the order-theoretic bottom, contained in every valid
    /// value and uniquely minimizing the score function.
    pub const fn null() -> Self {
        Self { t: 0.0, i: 1.0, f: 1.0 }
    }

    pub fn truth(&self) -> f64 {
        self.t
    }

    pub fn indeterminacy(&self) -> f64 {
        self.i
    }

    pub fn falsity(&self) -> f64 {
        self.f
    }

    /// Swaps truth with falsity and reflects indeterminacy: `(f, 1 - i, t)`.
    pub fn complement(&self) -> Self {
        Self {
            t: self.f,
            i: 1.0 - self.i,
            f: self.t,
        }
    }

    /// Componentwise containment: no more truth, at least as much
    /// indeterminacy and falsity.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.t <= other.t && self.i >= other.i && self.f >= other.f
    }

    /// Componentwise equality within [`EQ_EPSILON`]; equivalent to mutual
    /// containment up to the same tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        (self.t - other.t).abs() <= EQ_EPSILON
            && (self.i - other.i).abs() <= EQ_EPSILON
            && (self.f - other.f).abs() <= EQ_EPSILON
    }
}

/// A closed subinterval of `[0, 1]`.
///
/// Under [`ValidationPolicy::Lenient`] the pair may be descending; the
/// bounds are then kept exactly as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    /// Strictly validated interval (`lo <= hi`, both in `[0, 1]`).
    pub fn new(lo: f64, hi: f64) -> Result<Self, ValueError> {
        Self::with_policy("interval", lo, hi, ValidationPolicy::Strict)
    }

    /// The single-point interval `[x, x]`, which makes the interval
    /// machinery behave exactly like the single-valued one.
    pub fn degenerate(x: f64) -> Result<Self, ValueError> {
        Self::new(x, x)
    }

    pub(crate) fn with_policy(
        field: &'static str,
        lo: f64,
        hi: f64,
        policy: ValidationPolicy,
    ) -> Result<Self, ValueError> {
        let lo = check_degree(field, lo)?;
        let hi = check_degree(field, hi)?;
        if policy == ValidationPolicy::Strict && lo > hi {
            return Err(ValueError::DescendingInterval { field, lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// Bounds already known to lie in `[0, 1]`.
    pub(crate) fn raw(lo: f64, hi: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        Self { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_ascending(&self) -> bool {
        self.lo <= self.hi
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.lo - other.lo).abs() <= EQ_EPSILON && (self.hi - other.hi).abs() <= EQ_EPSILON
    }
}

/// An interval neutrosophic value: truth, indeterminacy and falsity
/// intervals over `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InValue {
    t: UnitInterval,
    i: UnitInterval,
    f: UnitInterval,
}

impl InValue {
    /// Strictly validated value; each `[lo, hi]` pair must be ascending.
    pub fn new(truth: [f64; 2], indeterminacy: [f64; 2], falsity: [f64; 2]) -> Result<Self, ValueError> {
        Self::with_policy(truth, indeterminacy, falsity, ValidationPolicy::Strict)
    }

    pub fn with_policy(
        truth: [f64; 2],
        indeterminacy: [f64; 2],
        falsity: [f64; 2],
        policy: ValidationPolicy,
    ) -> Result<Self, ValueError> {
        Ok(Self {
            t: UnitInterval::with_policy("truth", truth[0], truth[1], policy)?,
            i: UnitInterval::with_policy("indeterminacy", indeterminacy[0], indeterminacy[1], policy)?,
            f: UnitInterval::with_policy("falsity", falsity[0], falsity[1], policy)?,
        })
    }

    pub fn from_intervals(truth: UnitInterval, indeterminacy: UnitInterval, falsity: UnitInterval) -> Self {
        Self {
            t: truth,
            i: indeterminacy,
            f: falsity,
        }
    }

    /// `([1,1], [0,0], [0,0])`.
    pub const fn absolute() -> Self {
        Self {
            t: UnitInterval { lo: 1.0, hi: 1.0 },
            i: UnitInterval { lo: 0.0, hi: 0.0 },
            f: UnitInterval { lo: 0.0, hi: 0.0 },
        }
    }

    /// `([0,0], [1,1], [1,1])`.
    pub const fn null() -> Self {
        Self {
            t: UnitInterval { lo: 0.0, hi: 0.0 },
            i: UnitInterval { lo: 1.0, hi: 1.0 },
            f: UnitInterval { lo: 1.0, hi: 1.0 },
        }
    }

    pub fn truth(&self) -> UnitInterval {
        self.t
    }

    pub fn indeterminacy(&self) -> UnitInterval {
        self.i
    }

    pub fn falsity(&self) -> UnitInterval {
        self.f
    }

    /// All three bound pairs ascending, i.e. the value is valid under
    /// [`ValidationPolicy::Strict`].
    pub fn is_ascending(&self) -> bool {
        self.t.is_ascending() && self.i.is_ascending() && self.f.is_ascending()
    }

    /// Swaps the truth and falsity intervals and reflects the indeterminacy
    /// interval to `[1 - hi, 1 - lo]`.
    ///
    /// Rejects values whose indeterminacy pair is descending: reflecting it
    /// would silently turn a verbatim-stored pair into an ascending one.
    pub fn complement(&self) -> Result<Self, ValueError> {
        if !self.i.is_ascending() {
            return Err(ValueError::ComplementOfDescending {
                lo: self.i.lo,
                hi: self.i.hi,
            });
        }
        Ok(Self {
            t: self.f,
            i: UnitInterval::raw(1.0 - self.i.hi, 1.0 - self.i.lo),
            f: self.t,
        })
    }

    /// Boundwise containment: both truth bounds no larger, both
    /// indeterminacy and falsity bounds no smaller.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.t.lo <= other.t.lo
            && self.t.hi <= other.t.hi
            && self.i.lo >= other.i.lo
            && self.i.hi >= other.i.hi
            && self.f.lo >= other.f.lo
            && self.f.hi >= other.f.hi
    }

    /// Boundwise equality within [`EQ_EPSILON`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.t.approx_eq(&other.t) && self.i.approx_eq(&other.i) && self.f.approx_eq(&other.f)
    }
}
