use std::fmt;

use crate::lattice::{ceil_avg, floor_avg, join, meet, Point};
use crate::scalar::{Rat, Scalar};
use crate::value::Value;

/// Which inequality a witness violates. The `points` field of [`Witness`] is
/// interpreted per kind; see [`Witness::points`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// points = [z, d, d']: f(z+d) + f(z+d') >= f(z) + f(z+d+d')
    Multimodular,
    /// points = [x, y]: f(x) + f(y) >= f(max(x,y)) + f(min(x,y))
    Submodular,
    /// points = [p, q]: g(p) + g(q) >= g(ceil((p+q)/2)) + g(floor((p+q)/2))
    Midpoint,
    /// points = [[i, j]] (row/column labels, first row = 1, with zero padding
    /// outside the matrix): a[i][j] - a[i][j+1] - a[i+1][j] + a[i+1][j+1] <= 0
    QuadraticCriterion,
    /// points = [[i, j]]: off-diagonal b[i][j] <= 0 if i != j, else row
    /// dominance b[i][i] >= sum of |b[i][j]| over j != i
    LClass,
    /// points = [q_ref, q]: the all-ones step g(q+1) - g(q) must not depend
    /// on q; lhs is the increment at q, rhs the increment at q_ref
    Translation,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Multimodular => "multimodular",
            WitnessKind::Submodular => "submodular",
            WitnessKind::Midpoint => "midpoint",
            WitnessKind::QuadraticCriterion => "quadratic-criterion",
            WitnessKind::LClass => "L-class",
            WitnessKind::Translation => "translation",
        }
    }
}

/// A certificate of one violated inequality. Except for `Translation`
/// (an equality constraint), `lhs < rhs` is the violation of `lhs >= rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness<T = Rat> {
    pub kind: WitnessKind,
    pub points: Vec<Point>,
    pub lhs: Value<T>,
    pub rhs: Value<T>,
}

impl<T: Scalar> Witness<T> {
    /// true when the stored sides actually violate the cited inequality
    pub fn is_violation(&self) -> bool {
        match self.kind {
            WitnessKind::Translation => self.lhs != self.rhs,
            _ => self.lhs < self.rhs,
        }
    }
}

fn fmt_point(p: &[i64]) -> String {
    let inner: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    format!("({})", inner.join(","))
}

impl<T: Scalar> fmt::Display for Witness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WitnessKind::Multimodular => {
                let (z, d, dp) = (&self.points[0], &self.points[1], &self.points[2]);
                write!(
                    f,
                    "f(z+d) + f(z+d') = {} < {} = f(z) + f(z+d+d') at z={}, d={}, d'={}",
                    self.lhs,
                    self.rhs,
                    fmt_point(z),
                    fmt_point(d),
                    fmt_point(dp)
                )
            }
            WitnessKind::Submodular => {
                let (x, y) = (&self.points[0], &self.points[1]);
                write!(
                    f,
                    "f(x) + f(y) = {} < {} = f(max(x,y)) + f(min(x,y)) at x={}, y={}, max={}, min={}",
                    self.lhs,
                    self.rhs,
                    fmt_point(x),
                    fmt_point(y),
                    fmt_point(&join(x, y)),
                    fmt_point(&meet(x, y))
                )
            }
            WitnessKind::Midpoint => {
                let (p, q) = (&self.points[0], &self.points[1]);
                write!(
                    f,
                    "g(p) + g(q) = {} < {} = g(ceil((p+q)/2)) + g(floor((p+q)/2)) at p={}, q={}, ceil={}, floor={}",
                    self.lhs,
                    self.rhs,
                    fmt_point(p),
                    fmt_point(q),
                    fmt_point(&ceil_avg(p, q)),
                    fmt_point(&floor_avg(p, q))
                )
            }
            WitnessKind::QuadraticCriterion => {
                let ij = &self.points[0];
                write!(
                    f,
                    "a[i][j] - a[i][j+1] - a[i+1][j] + a[i+1][j+1] = {} > 0 at (i,j)=({},{})",
                    self.rhs, ij[0], ij[1]
                )
            }
            WitnessKind::LClass => {
                let ij = &self.points[0];
                if ij[0] == ij[1] {
                    write!(
                        f,
                        "row {} fails dominance: b[i][i] = {} < {} = sum of |b[i][j]|, j != i",
                        ij[0], self.lhs, self.rhs
                    )
                } else {
                    write!(
                        f,
                        "off-diagonal entry b[{}][{}] = {} > 0",
                        ij[0], ij[1], self.rhs
                    )
                }
            }
            WitnessKind::Translation => {
                let (qr, q) = (&self.points[0], &self.points[1]);
                write!(
                    f,
                    "all-ones increment is not constant: g(q+1) - g(q) = {} at q={} but {} at q={}",
                    self.lhs,
                    fmt_point(q),
                    self.rhs,
                    fmt_point(qr)
                )
            }
        }
    }
}

/// Outcome of a checker sweep: either the property holds, or a witness of one
/// violated inequality is attached. `checked` counts evaluated inequalities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict<T = Rat> {
    pub holds: bool,
    pub witness: Option<Witness<T>>,
    pub checked: u64,
}

impl<T: Scalar> Verdict<T> {
    pub fn pass(checked: u64) -> Self {
        Verdict {
            holds: true,
            witness: None,
            checked,
        }
    }

    pub fn fail(witness: Witness<T>, checked: u64) -> Self {
        debug_assert!(witness.is_violation());
        Verdict {
            holds: false,
            witness: Some(witness),
            checked,
        }
    }
}
