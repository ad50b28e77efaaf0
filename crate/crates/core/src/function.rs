use crate::error::{Error, Result};
use crate::lattice::{IntBox, Point};
use crate::scalar::{Rat, Scalar};
use crate::value::{Finite, Infinite, Value};

/// Anything that can be evaluated at a lattice point.
pub trait Evaluate<T: Scalar> {
    fn dim(&self) -> usize;

    /// value at `x`; panics if `x` has the wrong length
    fn eval(&self, x: &[i64]) -> Value<T>;
}

/// Dense extended values on a box, implicitly `+inf` outside. The universal
/// representation: every other function kind materializes into one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableFunction<T = Rat> {
    domain: IntBox,
    values: Vec<Value<T>>,
}

impl<T: Scalar> TableFunction<T> {
    /// `values` in the box's lexicographic point order; at least one must be
    /// finite
    pub fn new(domain: IntBox, values: Vec<Value<T>>) -> Result<Self> {
        let expected = domain.len()?;
        if values.len() != expected {
            return Err(Error::TableSize {
                expected,
                got: values.len(),
            });
        }
        if !values.iter().any(Value::is_finite) {
            return Err(Error::EmptyDomain);
        }
        Ok(TableFunction { domain, values })
    }

    pub fn from_fn(domain: IntBox, mut f: impl FnMut(&[i64]) -> Value<T>) -> Result<Self> {
        let mut values = Vec::with_capacity(domain.len()?);
        for p in domain.points() {
            values.push(f(&p));
        }
        TableFunction::new(domain, values)
    }

    pub fn domain(&self) -> &IntBox {
        &self.domain
    }

    pub fn values(&self) -> &[Value<T>] {
        &self.values
    }

    /// in-box points with finite value, lexicographic order
    pub fn effective_domain(&self) -> Vec<Point> {
        self.domain
            .points()
            .zip(&self.values)
            .filter(|(_, v)| v.is_finite())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn map_values(&self, f: impl Fn(&Value<T>) -> Value<T>) -> Result<Self> {
        TableFunction::new(self.domain.clone(), self.values.iter().map(f).collect())
    }
}

impl<T: Scalar> Evaluate<T> for TableFunction<T> {
    fn dim(&self) -> usize {
        self.domain.dim()
    }

    fn eval(&self, x: &[i64]) -> Value<T> {
        assert_eq!(x.len(), self.dim(), "point dimension mismatch");
        if self.domain.contains(x) {
            self.values[self.domain.index_of(x)].clone()
        } else {
            Infinite
        }
    }
}

/// `x' A x + c' x` with a symmetric exact-rational matrix. Asymmetric input
/// is symmetrized to `(A + A')/2`, which leaves the quadratic form unchanged;
/// `was_symmetrized` lets callers surface a warning.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticFunction<T = Rat> {
    matrix: Vec<Vec<T>>,
    linear: Option<Vec<T>>,
    was_symmetrized: bool,
}

impl<T: Scalar> QuadraticFunction<T> {
    pub fn new(matrix: Vec<Vec<T>>, linear: Option<Vec<T>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::NonSquareMatrix);
        }
        if let Some(c) = &linear {
            if c.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
        }
        let mut symmetric = true;
        'scan: for i in 0..n {
            for j in i + 1..n {
                if matrix[i][j] != matrix[j][i] {
                    symmetric = false;
                    break 'scan;
                }
            }
        }
        if symmetric {
            return Ok(QuadraticFunction {
                matrix,
                linear,
                was_symmetrized: false,
            });
        }
        let mut sym = matrix.clone();
        for i in 0..n {
            for j in 0..n {
                sym[i][j] = (matrix[i][j].clone() + matrix[j][i].clone()).half();
            }
        }
        Ok(QuadraticFunction {
            matrix: sym,
            linear,
            was_symmetrized: true,
        })
    }

    pub fn from_int_matrix(entries: &[Vec<i64>], linear: Option<Vec<i64>>) -> Result<Self> {
        QuadraticFunction::new(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
            linear.map(|c| c.into_iter().map(T::from_int).collect()),
        )
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<T>] {
        &self.matrix
    }

    pub fn linear(&self) -> Option<&[T]> {
        self.linear.as_deref()
    }

    pub fn was_symmetrized(&self) -> bool {
        self.was_symmetrized
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.matrix[i][j]
    }

    pub fn has_linear_term(&self) -> bool {
        match &self.linear {
            Some(c) => c.iter().any(|v| !v.is_zero()),
            None => false,
        }
    }

    /// the quadratic form at a rational point (used by value identities)
    pub fn eval_rational(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.n(), "point dimension mismatch");
        let mut acc = T::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                acc = acc + a.clone() * x[i].clone() * x[j].clone();
            }
        }
        if let Some(c) = &self.linear {
            for (ci, xi) in c.iter().zip(x) {
                acc = acc + ci.clone() * xi.clone();
            }
        }
        acc
    }
}

impl<T: Scalar> Evaluate<T> for QuadraticFunction<T> {
    fn dim(&self) -> usize {
        self.n()
    }

    fn eval(&self, x: &[i64]) -> Value<T> {
        let xr: Vec<T> = x.iter().map(|&v| T::from_int(v)).collect();
        Finite(self.eval_rational(&xr))
    }
}

/// One univariate finite-interval table: finite values on
/// `[start, start + values.len() - 1]`, `+inf` outside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece<T = Rat> {
    pub start: i64,
    pub values: Vec<T>,
}

/// A sum of univariate discretely convex functions, one per coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparableFunction<T = Rat> {
    pieces: Vec<Piece<T>>,
}

impl<T: Scalar> SeparableFunction<T> {
    /// each piece must be nonempty and discretely convex:
    /// `v[t-1] + v[t+1] >= 2 v[t]` at every interior t
    pub fn new(pieces: Vec<Piece<T>>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::EmptyDomain);
        }
        for (k, piece) in pieces.iter().enumerate() {
            if piece.values.is_empty() {
                return Err(Error::EmptyDomain);
            }
            for t in 1..piece.values.len().saturating_sub(1) {
                let lhs = piece.values[t - 1].clone() + piece.values[t + 1].clone();
                let rhs = piece.values[t].clone() + piece.values[t].clone();
                if lhs < rhs {
                    return Err(Error::NonConvexPiece {
                        piece: k,
                        t: piece.start + t as i64,
                    });
                }
            }
        }
        Ok(SeparableFunction { pieces })
    }

    pub fn pieces(&self) -> &[Piece<T>] {
        &self.pieces
    }
}

impl<T: Scalar> Evaluate<T> for SeparableFunction<T> {
    fn dim(&self) -> usize {
        self.pieces.len()
    }

    fn eval(&self, x: &[i64]) -> Value<T> {
        assert_eq!(x.len(), self.dim(), "point dimension mismatch");
        let mut acc = T::zero();
        for (piece, &xi) in self.pieces.iter().zip(x) {
            let offset = xi - piece.start;
            if offset < 0 || offset >= piece.values.len() as i64 {
                return Infinite;
            }
            acc = acc + piece.values[offset as usize].clone();
        }
        Finite(acc)
    }
}

/// A finite point set, evaluated as its indicator: 0 on the set, `+inf` off
/// it. Points are kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndicatorSet {
    points: Vec<Point>,
}

impl IndicatorSet {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptySet)?;
        let n = first.len();
        if n == 0 {
            return Err(Error::EmptyBox);
        }
        for p in &points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
        }
        points.sort();
        points.dedup();
        Ok(IndicatorSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    pub fn bounding_box(&self) -> IntBox {
        IntBox::bounding(&self.points).expect("sets are nonempty")
    }
}

impl<T: Scalar> Evaluate<T> for IndicatorSet {
    fn dim(&self) -> usize {
        self.points[0].len()
    }

    fn eval(&self, x: &[i64]) -> Value<T> {
        assert_eq!(x.len(), Evaluate::<T>::dim(self), "point dimension mismatch");
        if self.contains(x) {
            Value::zero()
        } else {
            Infinite
        }
    }
}

/// pointwise evaluation of `f` over `domain`
pub fn materialize<T: Scalar>(f: &impl Evaluate<T>, domain: &IntBox) -> Result<TableFunction<T>> {
    if f.dim() != domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: domain.dim(),
        });
    }
    TableFunction::from_fn(domain.clone(), |p| f.eval(p))
}
