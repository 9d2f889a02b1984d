use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedSub};

use crate::error::Error;

/// An exact fraction in lowest terms, or the distinguished value `Infinite`
/// that compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinite,
}

impl Rational {
    pub const ZERO: Rational = Rational::Finite(Ratio::new_raw(0, 1));

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational::Finite(Ratio::new(numer, denom))
    }

    pub fn integer(v: i64) -> Self {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinite)
    }

    pub fn numer(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.numer()),
            Rational::Infinite => None,
        }
    }

    pub fn denom(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.denom()),
            Rational::Infinite => None,
        }
    }

    /// `self * count <= bound`, evaluated by cross-multiplication.
    pub fn times_le(&self, count: usize, bound: usize) -> bool {
        match self {
            Rational::Infinite => count == 0,
            Rational::Finite(r) => (*r.numer() as i128) * (count as i128) <= (*r.denom() as i128) * (bound as i128),
        }
    }

    pub fn checked_add(&self, other: &Rational) -> Option<Rational> {
        match (self, other) {
            (Rational::Finite(a), Rational::Finite(b)) => a.checked_add(b).map(Rational::Finite),
            _ => Some(Rational::Infinite),
        }
    }

    pub fn checked_sub(&self, other: &Rational) -> Option<Rational> {
        match (self, other) {
            (Rational::Finite(a), Rational::Finite(b)) => a.checked_sub(b).map(Rational::Finite),
            (Rational::Infinite, Rational::Finite(_)) => Some(Rational::Infinite),
            _ => None,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Infinite, Rational::Infinite) => Ordering::Equal,
            (Rational::Infinite, _) => Ordering::Greater,
            (_, Rational::Infinite) => Ordering::Less,
            (Rational::Finite(a), Rational::Finite(b)) => {
                let lhs = *a.numer() as i128 * *b.denom() as i128;
                let rhs = *b.numer() as i128 * *a.denom() as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Infinite => f.write_str("inf"),
            Rational::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinite") {
            return Ok(Rational::Infinite);
        }
        let bad = |offset: usize| Error::parse(offset, format!("not a fraction: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad(0))?;
        let q: i64 = q.parse().map_err(|_| bad(s.find('/').map_or(0, |i| i + 1)))?;
        if q <= 0 {
            return Err(bad(s.find('/').map_or(0, |i| i + 1)));
        }
        Ok(Rational::new(p, q))
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational::Finite(r)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
