//! Scalars of the max-plus semiring and of its extension with ghost elements.
//!
//! [`Weight`] is an element of `R_max = Z ∪ {-inf}` with `max` as addition and
//! `+` as multiplication. [`ExtNumber`] is an element of the extended tropical
//! semiring, which additionally records whether a maximum was attained once
//! (real) or at least twice (ghost).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A max-plus scalar: an exact integer or `-inf`.
///
/// Finite values are stored as `i128`; parsed inputs are capped well below
/// that range so sums along iterations stay exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Weight {
    Bottom,
    Finite(i128),
}

impl Weight {
    pub const BOTTOM: Weight = Weight::Bottom;
    pub const ZERO: Weight = Weight::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn is_bottom(self) -> bool {
        matches!(self, Weight::Bottom)
    }

    pub fn finite(self) -> Option<i128> {
        match self {
            Weight::Finite(v) => Some(v),
            Weight::Bottom => None,
        }
    }

    /// Tropical sum, `max(self, other)`.
    pub fn add(self, other: Weight) -> Weight {
        self.max(other)
    }

    /// Tropical product with overflow detection.
    pub fn checked_mul(self, other: Weight) -> Option<Weight> {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) => a.checked_add(b).map(Weight::Finite),
            _ => Some(Weight::Bottom),
        }
    }

    /// Tropical product, `self + other`.
    ///
    /// Panics on `i128` overflow, which cannot occur for inputs within the
    /// parser's magnitude cap.
    pub fn mul(self, other: Weight) -> Weight {
        self.checked_mul(other).expect("max-plus weight overflow")
    }

    /// Adds an ordinary integer to a finite weight; `-inf` stays `-inf`.
    pub fn shift(self, by: i128) -> Weight {
        self.mul(Weight::Finite(by))
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::Bottom
    }
}

impl From<i128> for Weight {
    fn from(v: i128) -> Self {
        Weight::Finite(v)
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Self {
        Weight::Finite(v as i128)
    }
}

impl From<i32> for Weight {
    fn from(v: i32) -> Self {
        Weight::Finite(v as i128)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Bottom => f.write_str("-inf"),
            Weight::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Largest magnitude accepted by the token parser.
pub const MAGNITUDE_CAP: i128 = 1_000_000_000_000;

pub(crate) fn parse_integer(tok: &str) -> Result<i128, String> {
    let v: i128 = tok
        .parse()
        .map_err(|_| format!("invalid scalar token `{tok}`"))?;
    if v.abs() > MAGNITUDE_CAP {
        return Err(format!("scalar `{tok}` exceeds the magnitude cap 1e12"));
    }
    Ok(v)
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "-inf" {
            return Ok(Weight::Bottom);
        }
        parse_integer(s).map(Weight::Finite).map_err(Error::Token)
    }
}

/// `max(a, b)`.
pub fn tmax_add(a: Weight, b: Weight) -> Weight {
    a.add(b)
}

/// `a + b`, with `-inf` absorbing.
pub fn tmax_mul(a: Weight, b: Weight) -> Weight {
    a.mul(b)
}

/// Multiplicity tag of an [`ExtNumber`], valued in `{0, 1, ≥2}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Multiplicity {
    Zero,
    Real,
    Ghost,
}

impl Multiplicity {
    fn plus(self, other: Multiplicity) -> Multiplicity {
        use Multiplicity::*;
        match (self, other) {
            (Zero, x) | (x, Zero) => x,
            _ => Ghost,
        }
    }

    fn times(self, other: Multiplicity) -> Multiplicity {
        use Multiplicity::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Real, Real) => Real,
            _ => Ghost,
        }
    }
}

/// Element of the extended tropical semiring.
///
/// The zero element is the only value with `-inf` magnitude; constructors
/// normalize any other combination onto it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExtNumber {
    magnitude: Weight,
    multiplicity: Multiplicity,
}

impl ExtNumber {
    pub const ZERO: ExtNumber = ExtNumber {
        magnitude: Weight::Bottom,
        multiplicity: Multiplicity::Zero,
    };
    pub const ONE: ExtNumber = ExtNumber {
        magnitude: Weight::ZERO,
        multiplicity: Multiplicity::Real,
    };

    pub fn new(magnitude: Weight, multiplicity: Multiplicity) -> ExtNumber {
        match (magnitude, multiplicity) {
            (Weight::Bottom, _) | (_, Multiplicity::Zero) => ExtNumber::ZERO,
            _ => ExtNumber {
                magnitude,
                multiplicity,
            },
        }
    }

    /// `k^∨`.
    pub fn real(k: i128) -> ExtNumber {
        inject(Weight::Finite(k))
    }

    /// `k^∘`.
    pub fn ghost_of(k: i128) -> ExtNumber {
        ghost(Weight::Finite(k))
    }

    pub fn magnitude(self) -> Weight {
        self.magnitude
    }

    pub fn multiplicity(self) -> Multiplicity {
        self.multiplicity
    }

    pub fn is_zero(self) -> bool {
        self.multiplicity == Multiplicity::Zero
    }

    /// Real type: `k^∨` or zero.
    pub fn is_real(self) -> bool {
        self.multiplicity != Multiplicity::Ghost
    }

    /// Ghost type: `k^∘` or zero.
    pub fn is_ghost(self) -> bool {
        self.multiplicity != Multiplicity::Real
    }

    /// Invertible elements are the non-zero real ones.
    pub fn is_invertible(self) -> bool {
        self.multiplicity == Multiplicity::Real
    }

    pub fn inverse(self) -> Option<ExtNumber> {
        match (self.multiplicity, self.magnitude) {
            (Multiplicity::Real, Weight::Finite(v)) => Some(ExtNumber::real(-v)),
            _ => None,
        }
    }

    pub fn add(self, other: ExtNumber) -> ExtNumber {
        ext_add(self, other)
    }

    pub fn mul(self, other: ExtNumber) -> ExtNumber {
        ext_mul(self, other)
    }

    /// Natural order of the semiring: `self ≤ other` iff `self ⊕ z = other`
    /// for some `z`.
    pub fn natural_le(self, other: ExtNumber) -> bool {
        match self.magnitude.cmp(&other.magnitude) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self == other || other.multiplicity != Multiplicity::Real,
        }
    }

    /// Least upper bound for the natural order (which is total).
    pub fn join(self, other: ExtNumber) -> ExtNumber {
        if self.natural_le(other) {
            other
        } else {
            self
        }
    }
}

impl Default for ExtNumber {
    fn default() -> Self {
        ExtNumber::ZERO
    }
}

impl PartialOrd for ExtNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.natural_le(*other), other.natural_le(*self)) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => unreachable!("natural order is total"),
        }
    }
}

impl fmt::Display for ExtNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.multiplicity, self.magnitude) {
            (Multiplicity::Ghost, Weight::Finite(v)) => write!(f, "{v}g"),
            _ => write!(f, "{}", self.magnitude),
        }
    }
}

impl FromStr for ExtNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_suffix('g') {
            Some(body) if body != "-inf" => parse_integer(body)
                .map(ExtNumber::ghost_of)
                .map_err(|_| Error::Token(format!("invalid scalar token `{s}`"))),
            Some(_) => Err(Error::Token(format!("invalid scalar token `{s}`"))),
            None => s.parse::<Weight>().map(inject),
        }
    }
}

pub fn ext_add(a: ExtNumber, b: ExtNumber) -> ExtNumber {
    match a.magnitude.cmp(&b.magnitude) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal => ExtNumber::new(a.magnitude, a.multiplicity.plus(b.multiplicity)),
    }
}

pub fn ext_mul(a: ExtNumber, b: ExtNumber) -> ExtNumber {
    ExtNumber::new(
        a.magnitude.mul(b.magnitude),
        a.multiplicity.times(b.multiplicity),
    )
}

/// Canonical injection `b ↦ b^∨`.
pub fn inject(b: Weight) -> ExtNumber {
    ExtNumber::new(b, Multiplicity::Real)
}

/// `b ↦ b^∘`.
pub fn ghost(b: Weight) -> ExtNumber {
    ExtNumber::new(b, Multiplicity::Ghost)
}

/// Projection onto the magnitude.
pub fn project(e: ExtNumber) -> Weight {
    e.magnitude
}

/// Balance relation: `a ⊕ b` is ghost-typed (or zero).
pub fn balances(a: ExtNumber, b: ExtNumber) -> bool {
    ext_add(a, b).is_ghost()
}
