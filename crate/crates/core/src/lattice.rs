use crate::error::{Error, Result};

/// A lattice point. All domain geometry is integral; only function values are
/// rational.
pub type Point = Vec<i64>;

pub fn add(a: &[i64], b: &[i64]) -> Point {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Point {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[i64]) -> Point {
    a.iter().map(|x| -x).collect()
}

/// componentwise maximum
pub fn join(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// componentwise minimum
pub fn meet(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn linf_dist(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).max().unwrap_or(0)
}

/// componentwise ceil((a+b)/2); `div_euclid` floors, so shift by one first
pub fn ceil_avg(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| (x + y + 1).div_euclid(2)).collect()
}

/// componentwise floor((a+b)/2)
pub fn floor_avg(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| (x + y).div_euclid(2)).collect()
}

/// y with y_i = x_1 + ... + x_i
pub fn prefix_sums(x: &[i64]) -> Point {
    let mut acc = 0;
    x.iter()
        .map(|v| {
            acc += v;
            acc
        })
        .collect()
}

/// inverse of `prefix_sums`: x_1 = y_1, x_i = y_i - y_{i-1}
pub fn diffs(y: &[i64]) -> Point {
    let mut prev = 0;
    y.iter()
        .map(|v| {
            let d = v - prev;
            prev = *v;
            d
        })
        .collect()
}

/// An axis-aligned integer box `[lower_1, upper_1] x ... x [lower_n, upper_n]`.
/// Points inside are enumerated and indexed lexicographically with the first
/// coordinate most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntBox {
    lower: Point,
    upper: Point,
}

impl IntBox {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::EmptyBox);
        }
        for (i, (l, u)) in lower.iter().zip(&upper).enumerate() {
            if l > u {
                return Err(Error::InvalidBox {
                    coord: i,
                    lower: *l,
                    upper: *u,
                });
            }
        }
        Ok(IntBox { lower, upper })
    }

    /// the cube `[lo, hi]^n`
    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        IntBox::new(vec![lo; n], vec![hi; n])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn side(&self, i: usize) -> i64 {
        self.upper[i] - self.lower[i] + 1
    }

    /// number of lattice points, or an error if it overflows usize
    pub fn len(&self) -> Result<usize> {
        let mut total: usize = 1;
        for i in 0..self.dim() {
            let side = usize::try_from(self.side(i)).map_err(|_| Error::BoxTooLarge)?;
            total = total.checked_mul(side).ok_or(Error::BoxTooLarge)?;
        }
        Ok(total)
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim() && leq(&self.lower, p) && leq(p, &self.upper)
    }

    /// lexicographic rank of `p`; requires `contains(p)`
    pub fn index_of(&self, p: &[i64]) -> usize {
        debug_assert!(self.contains(p));
        let mut idx: usize = 0;
        for i in 0..self.dim() {
            idx = idx * self.side(i) as usize + (p[i] - self.lower[i]) as usize;
        }
        idx
    }

    /// inverse of `index_of`
    pub fn point_at(&self, mut idx: usize) -> Point {
        let n = self.dim();
        let mut p = vec![0; n];
        for i in (0..n).rev() {
            let side = self.side(i) as usize;
            p[i] = self.lower[i] + (idx % side) as i64;
            idx /= side;
        }
        debug_assert_eq!(idx, 0, "index out of range");
        p
    }

    /// all points in lexicographic order
    pub fn points(&self) -> PointIter<'_> {
        PointIter {
            boxx: self,
            next: Some(self.lower.clone()),
        }
    }

    /// the box grown by `r` in every direction
    pub fn inflate(&self, r: i64) -> Self {
        IntBox {
            lower: self.lower.iter().map(|l| l - r).collect(),
            upper: self.upper.iter().map(|u| u + r).collect(),
        }
    }

    pub fn intersect(&self, other: &IntBox) -> Option<IntBox> {
        if self.dim() != other.dim() {
            return None;
        }
        let lower = join(&self.lower, &other.lower);
        let upper = meet(&self.upper, &other.upper);
        if leq(&lower, &upper) {
            Some(IntBox { lower, upper })
        } else {
            None
        }
    }

    /// `{a + b : a in self, b in other}`
    pub fn minkowski(&self, other: &IntBox) -> Result<IntBox> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(IntBox {
            lower: add(&self.lower, &other.lower),
            upper: add(&self.upper, &other.upper),
        })
    }

    /// the smallest box containing every given point
    pub fn bounding(points: &[Point]) -> Result<IntBox> {
        let first = points.first().ok_or(Error::EmptySet)?;
        let mut lower = first.clone();
        let mut upper = first.clone();
        for p in &points[1..] {
            if p.len() != first.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    got: p.len(),
                });
            }
            lower = meet(&lower, p);
            upper = join(&upper, p);
        }
        Ok(IntBox { lower, upper })
    }
}

pub struct PointIter<'a> {
    boxx: &'a IntBox,
    next: Option<Point>,
}

impl Iterator for PointIter<'_> {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        // advance like an odometer, last coordinate fastest
        let mut succ = current.clone();
        let mut i = self.boxx.dim();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if succ[i] < self.boxx.upper[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.boxx.lower[i];
        }
        Some(current)
    }
}
