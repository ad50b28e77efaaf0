use crate::error::Result;
use crate::function::{materialize, Evaluate, QuadraticFunction, TableFunction};
use crate::lattice::{diffs, prefix_sums, IntBox, Point};
use crate::scalar::Scalar;

/// A small dense integer matrix; just enough linear algebra for the
/// unimodular changes of variables used here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    /// ones on the anti-diagonal: applying it reverses a vector
    pub fn anti_identity(n: usize) -> Self {
        IntMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i + j == n - 1)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n();
        assert_eq!(n, other.n(), "matrix dimension mismatch");
        IntMatrix {
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n();
        IntMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    pub fn apply(&self, x: &[i64]) -> Point {
        assert_eq!(x.len(), self.n(), "vector dimension mismatch");
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, v)| a * v).sum())
            .collect()
    }
}

/// ones on the diagonal, minus ones just below it
pub fn bidiagonal_d(n: usize) -> IntMatrix {
    assert!(n >= 1);
    IntMatrix {
        entries: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            1
                        } else if i == j + 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// lower-triangular all-ones; the integral inverse of [`bidiagonal_d`]
pub fn inverse_d(n: usize) -> IntMatrix {
    assert!(n >= 1);
    IntMatrix {
        entries: (0..n)
            .map(|i| (0..n).map(|j| i64::from(j <= i)).collect())
            .collect(),
    }
}

/// the variable-reversal map conjugated through the triangular change of
/// variables: ones in the last column, minus ones on the second anti-diagonal
pub fn reversal_t(n: usize) -> IntMatrix {
    assert!(n >= 1);
    IntMatrix {
        entries: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j == n - 1 {
                            1
                        } else if i + j == n - 2 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Change of variables from the difference side to the cumulative side:
/// g(p) = f(p_1, p_2 - p_1, ..., p_n - p_{n-1}). The result box is the exact
/// bounding box of the image of box(f), which here is the componentwise
/// prefix-sum interval; non-image points evaluate to +inf automatically.
pub fn to_lnat<T: Scalar>(f: &TableFunction<T>) -> Result<TableFunction<T>> {
    let lower = prefix_sums(f.domain().lower());
    let upper = prefix_sums(f.domain().upper());
    TableFunction::from_fn(IntBox::new(lower, upper)?, |p| f.eval(&diffs(p)))
}

/// Inverse of [`to_lnat`]: f(x) = g(x_1, x_1 + x_2, ..., x_1 + ... + x_n).
/// The result box bounds the preimage; on box(f) the round trip is exact.
pub fn from_lnat<T: Scalar>(g: &TableFunction<T>) -> Result<TableFunction<T>> {
    let gl = g.domain().lower();
    let gu = g.domain().upper();
    let n = g.dim();
    let mut lower = vec![gl[0]];
    let mut upper = vec![gu[0]];
    for i in 1..n {
        lower.push(gl[i] - gu[i - 1]);
        upper.push(gu[i] - gl[i - 1]);
    }
    TableFunction::from_fn(IntBox::new(lower, upper)?, |x| g.eval(&prefix_sums(x)))
}

/// consecutive differences of (x_0, x_1, ..., x_n)
fn step_diffs(y: &[i64]) -> Point {
    y.windows(2).map(|w| w[1] - w[0]).collect()
}

fn with_leading(x0_lo: i64, x0_hi: i64, inner: &IntBox) -> Result<IntBox> {
    let mut lower = vec![x0_lo];
    lower.extend_from_slice(inner.lower());
    let mut upper = vec![x0_hi];
    upper.extend_from_slice(inner.upper());
    IntBox::new(lower, upper)
}

/// One-variable-up lifting on the difference side, on an explicit window:
/// lifted(x_0, x) = f(x_1 - x_0, x_2 - x_1, ..., x_n - x_{n-1}).
pub fn lift_multimodular_window<T: Scalar>(
    f: &TableFunction<T>,
    window: &IntBox,
) -> Result<TableFunction<T>> {
    assert_eq!(window.dim(), f.dim() + 1, "window needs one extra coordinate");
    TableFunction::from_fn(window.clone(), |y| f.eval(&step_diffs(y)))
}

/// [`lift_multimodular_window`] on the default window: x_0 in [-1,1] and the
/// cumulative coordinates covering every difference pattern of box(f) with
/// that slack, so each defining inequality of f has all its lifted points
/// inside the window.
pub fn lift_multimodular<T: Scalar>(f: &TableFunction<T>) -> Result<TableFunction<T>> {
    let lower = prefix_sums(f.domain().lower());
    let upper = prefix_sums(f.domain().upper());
    let inner = IntBox::new(lower, upper)?.inflate(1);
    lift_multimodular_window(f, &with_leading(-1, 1, &inner)?)
}

/// One-variable-up lifting on the cumulative side, on an explicit window:
/// lifted(p_0, p) = g(p - p_0 * allones).
pub fn lift_lnat_window<T: Scalar>(
    g: &TableFunction<T>,
    window: &IntBox,
) -> Result<TableFunction<T>> {
    assert_eq!(window.dim(), g.dim() + 1, "window needs one extra coordinate");
    TableFunction::from_fn(window.clone(), |y| {
        let shifted: Point = y[1..].iter().map(|v| v - y[0]).collect();
        g.eval(&shifted)
    })
}

/// [`lift_lnat_window`] with p_0 in [-1,1] and box(g) grown by the same slack
pub fn lift_lnat<T: Scalar>(g: &TableFunction<T>) -> Result<TableFunction<T>> {
    lift_lnat_window(g, &with_leading(-1, 1, &g.domain().inflate(1))?)
}

/// The quadratic form seen through the change of variables: x = Dp turns
/// x'Ax + c'x into p'(D'AD)p + (D'c)'p.
pub fn conjugate_quadratic<T: Scalar>(a: &QuadraticFunction<T>) -> QuadraticFunction<T> {
    let n = a.n();
    let d = bidiagonal_d(n);
    let mut out = vec![vec![T::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut acc = T::zero();
            for k in 0..n {
                for l in 0..n {
                    let coeff = d.entries[k][i] * d.entries[l][j];
                    if coeff != 0 {
                        let term = a.entry(k, l).clone() * T::from_int(coeff);
                        acc = acc + term;
                    }
                }
            }
            *entry = acc;
        }
    }
    let linear = a.linear().map(|c| {
        (0..n)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..n {
                    if d.entries[k][i] != 0 {
                        acc = acc + c[k].clone() * T::from_int(d.entries[k][i]);
                    }
                }
                acc
            })
            .collect()
    });
    QuadraticFunction::new(out, linear).expect("conjugation preserves shape")
}

/// Inverse of [`conjugate_quadratic`]: given B, the matrix A with D'AD = B.
/// Because the inverse change of variables is lower-triangular all-ones,
/// A_ij is the corner sum of B over rows >= i and columns >= j.
pub fn inverse_conjugate_quadratic<T: Scalar>(b: &QuadraticFunction<T>) -> QuadraticFunction<T> {
    let n = b.n();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = T::zero();
            for k in i..n {
                for l in j..n {
                    acc = acc + b.entry(k, l).clone();
                }
            }
            out[i][j] = acc;
        }
    }
    let linear = b
        .linear()
        .map(|c| (0..n).map(|i| c[i..].iter().cloned().fold(T::zero(), |a, v| a + v)).collect());
    QuadraticFunction::new(out, linear).expect("conjugation preserves shape")
}

/// materialized quadratic on a box, as a convenience for the table checkers
pub fn quadratic_table<T: Scalar>(
    a: &QuadraticFunction<T>,
    boxx: &IntBox,
) -> Result<TableFunction<T>> {
    materialize(a, boxx)
}
