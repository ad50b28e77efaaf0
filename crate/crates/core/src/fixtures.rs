//! Frozen example data shared by tests, the reproduction scenarios, and the
//! campaign reports. Values are written out literally so they can serve as
//! oracles for the code that recomputes them.

use crate::function::{IndicatorSet, Piece, QuadraticFunction, SeparableFunction, TableFunction};
use crate::lattice::IntBox;
use crate::scalar::{Rat, Scalar};

fn int_quad(entries: &[[i64; 3]; 3]) -> QuadraticFunction {
    QuadraticFunction::from_int_matrix(
        &entries.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        None,
    )
    .expect("literal matrices are square")
}

fn half_quad(entries: &[[i64; 3]; 3]) -> QuadraticFunction {
    QuadraticFunction::new(
        entries
            .iter()
            .map(|r| r.iter().map(|&v| Rat::from_fraction(v, 2)).collect())
            .collect(),
        None,
    )
    .expect("literal matrices are square")
}

/// a 3x3 integer quadratic that is multimodular; its form expands to
/// (x1 + x2)^2 + (x2 + x3)^2
pub fn quad3() -> QuadraticFunction {
    int_quad(&[[1, 1, 0], [1, 2, 1], [0, 1, 1]])
}

/// quad3 with the first two variables transposed; no longer multimodular
pub fn quad3_swapped() -> QuadraticFunction {
    int_quad(&[[2, 1, 1], [1, 1, 0], [1, 0, 1]])
}

/// the conjugate D'AD of quad3: nonpositive off-diagonals, dominant rows
pub fn conj3() -> QuadraticFunction {
    int_quad(&[[1, 0, -1], [0, 1, 0], [-1, 0, 1]])
}

/// the conjugate of quad3_swapped; the +1 entries at (1,3) and (3,1) break
/// class membership
pub fn conj3_swapped() -> QuadraticFunction {
    int_quad(&[[1, -1, 1], [-1, 2, -1], [1, -1, 1]])
}

/// a 4x4 multimodular integer quadratic with positive third pivot
pub fn quad4() -> QuadraticFunction {
    QuadraticFunction::from_int_matrix(
        &[
            vec![3, 2, 1, 0],
            vec![2, 3, 2, 1],
            vec![1, 2, 2, 1],
            vec![0, 1, 1, 1],
        ],
        None,
    )
    .expect("literal matrices are square")
}

/// the exact elimination of quad4's third variable, in halves; its
/// criterion fails at labels (1,2)
pub fn quad4_swept() -> QuadraticFunction {
    half_quad(&[[5, 2, -1], [2, 2, 0], [-1, 0, 1]])
}

/// the conjugate D'AD of quad4
pub fn conj4() -> QuadraticFunction {
    QuadraticFunction::from_int_matrix(
        &[
            vec![2, 0, 0, -1],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![-1, 0, 0, 1],
        ],
        None,
    )
    .expect("literal matrices are square")
}

/// the conjugate of quad4_swept; the +1/2 off-diagonal at (1,2) breaks
/// class membership
pub fn conj4_swept() -> QuadraticFunction {
    half_quad(&[[3, 1, -1], [1, 3, -1], [-1, -1, 1]])
}

/// a two-point multimodular set on the difference side
pub fn s1() -> IndicatorSet {
    IndicatorSet::new(vec![vec![0, 0, 0], vec![1, 0, -1]]).expect("literal points")
}

/// a second two-point multimodular set
pub fn s2() -> IndicatorSet {
    IndicatorSet::new(vec![vec![0, 0, 0], vec![0, 1, 0]]).expect("literal points")
}

/// the Minkowski sum s1 + s2; not multimodular
pub fn s1_plus_s2() -> IndicatorSet {
    IndicatorSet::new(vec![
        vec![0, 0, 0],
        vec![1, 0, -1],
        vec![0, 1, 0],
        vec![1, 1, -1],
    ])
    .expect("literal points")
}

/// the cumulative-side image of s1; midpoint convex
pub fn t1() -> IndicatorSet {
    IndicatorSet::new(vec![vec![0, 0, 0], vec![1, 1, 0]]).expect("literal points")
}

/// the cumulative-side image of s2; midpoint convex
pub fn t2() -> IndicatorSet {
    IndicatorSet::new(vec![vec![0, 0, 0], vec![0, 1, 1]]).expect("literal points")
}

/// the Minkowski sum t1 + t2; not midpoint convex
pub fn t1_plus_t2() -> IndicatorSet {
    IndicatorSet::new(vec![
        vec![0, 0, 0],
        vec![0, 1, 1],
        vec![1, 1, 0],
        vec![1, 2, 1],
    ])
    .expect("literal points")
}

/// x1^2 + x2^2 as a separable function on [-2,2]^2
pub fn sep_squares() -> SeparableFunction {
    let square: Vec<Rat> = (-2i64..=2).map(|t| Rat::from_int(t * t)).collect();
    SeparableFunction::new(vec![
        Piece { start: -2, values: square.clone() },
        Piece { start: -2, values: square },
    ])
    .expect("squares are convex")
}

/// the dense table of sep_squares on its natural box
pub fn sep_squares_table() -> TableFunction {
    crate::function::materialize(&sep_squares(), &IntBox::cube(2, -2, 2).expect("literal box"))
        .expect("everywhere finite")
}
