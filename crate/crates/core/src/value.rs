use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::scalar::Scalar;

/// A function value that may be `+inf` (used to encode effective domains).
/// There is no `-inf`: the functions under study are bounded below on finite
/// domains, and allowing it would break the inequality calculus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value<T> {
    Finite(T),
    Infinite,
}

pub use Value::{Finite, Infinite};

impl<T: Scalar> Value<T> {
    pub fn zero() -> Self {
        Finite(T::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Finite(T::from_int(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }

    /// multiplies by a finite nonnegative factor; `0 * inf = inf` so that
    /// scaling preserves the effective domain
    pub fn scale(&self, a: &T) -> Self {
        match self {
            Finite(v) => Finite(a.clone() * v.clone()),
            Infinite => Infinite,
        }
    }

    pub fn map<U, F: FnOnce(&T) -> U>(&self, f: F) -> Value<U> {
        match self {
            Finite(v) => Finite(f(v)),
            Infinite => Infinite,
        }
    }
}

impl<T: Scalar> Add for Value<T> {
    type Output = Value<T>;

    fn add(self, rhs: Value<T>) -> Value<T> {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl<'a, T: Scalar> Add for &'a Value<T> {
    type Output = Value<T>;

    fn add(self, rhs: &'a Value<T>) -> Value<T> {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a.clone() + b.clone()),
            _ => Infinite,
        }
    }
}

impl<T: Ord> PartialOrd for Value<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Value<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl<T: Scalar> fmt::Display for Value<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => write!(f, "inf"),
        }
    }
}
