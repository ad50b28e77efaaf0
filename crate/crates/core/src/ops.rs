use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::function::{Evaluate, IndicatorSet, QuadraticFunction, TableFunction};
use crate::lattice::{sub, IntBox, Point};
use crate::scalar::Scalar;
use crate::value::{Finite, Infinite, Value};

/// result(x) = f(x + b), on the box translated by -b
pub fn shift<T: Scalar>(f: &TableFunction<T>, b: &[i64]) -> Result<TableFunction<T>> {
    if b.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: b.len(),
        });
    }
    // translation preserves lexicographic order, so values carry over as-is
    let boxx = IntBox::new(sub(f.domain().lower(), b), sub(f.domain().upper(), b))?;
    TableFunction::new(boxx, f.values().to_vec())
}

/// result(x) = f(-x)
pub fn negate_vars<T: Scalar>(f: &TableFunction<T>) -> Result<TableFunction<T>> {
    let lower: Point = f.domain().upper().iter().map(|v| -v).collect();
    let upper: Point = f.domain().lower().iter().map(|v| -v).collect();
    TableFunction::from_fn(IntBox::new(lower, upper)?, |x| {
        f.eval(&x.iter().map(|v| -v).collect::<Point>())
    })
}

/// result(x_1, ..., x_n) = f(x_n, ..., x_1)
pub fn reverse_vars<T: Scalar>(f: &TableFunction<T>) -> Result<TableFunction<T>> {
    let mut lower = f.domain().lower().to_vec();
    let mut upper = f.domain().upper().to_vec();
    lower.reverse();
    upper.reverse();
    TableFunction::from_fn(IntBox::new(lower, upper)?, |x| {
        let mut y = x.to_vec();
        y.reverse();
        f.eval(&y)
    })
}

fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(sigma.to_vec()));
    }
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::InvalidPermutation(sigma.to_vec()));
        }
        seen[s] = true;
    }
    Ok(())
}

/// result(x_1, ..., x_n) = f(x_{sigma(1)}, ..., x_{sigma(n)}), sigma 0-based
pub fn permute_vars<T: Scalar>(f: &TableFunction<T>, sigma: &[usize]) -> Result<TableFunction<T>> {
    let n = f.dim();
    check_permutation(sigma, n)?;
    let mut lower = vec![0i64; n];
    let mut upper = vec![0i64; n];
    for (i, &s) in sigma.iter().enumerate() {
        // coordinate s of the argument feeds slot i of f
        lower[s] = f.domain().lower()[i];
        upper[s] = f.domain().upper()[i];
    }
    TableFunction::from_fn(IntBox::new(lower, upper)?, |x| {
        let y: Point = sigma.iter().map(|&s| x[s]).collect();
        f.eval(&y)
    })
}

/// result(x) = f(s * x); the box keeps exactly the points with s*x in box(f)
pub fn scale_vars<T: Scalar>(f: &TableFunction<T>, s: i64) -> Result<TableFunction<T>> {
    if s < 1 {
        return Err(Error::BadVarScale(s));
    }
    let div_ceil = |a: i64| (a + s - 1).div_euclid(s);
    let div_floor = |a: i64| a.div_euclid(s);
    let lower: Point = f.domain().lower().iter().map(|&v| div_ceil(v)).collect();
    let upper: Point = f.domain().upper().iter().map(|&v| div_floor(v)).collect();
    let boxx = IntBox::new(lower, upper).map_err(|_| Error::EmptyDomain)?;
    TableFunction::from_fn(boxx, |x| {
        f.eval(&x.iter().map(|v| v * s).collect::<Point>())
    })
}

/// pointwise a * f with a >= 0; infinities stay infinite, so a = 0 keeps the
/// effective domain instead of flattening it to all of the box
pub fn scale_values<T: Scalar>(f: &TableFunction<T>, a: &T) -> Result<TableFunction<T>> {
    if *a < T::zero() {
        return Err(Error::NegativeValueScale);
    }
    f.map_values(|v| v.scale(a))
}

fn dot<T: Scalar>(c: &[T], x: &[i64]) -> T {
    c.iter()
        .zip(x)
        .fold(T::zero(), |acc, (ci, &xi)| acc + ci.clone() * T::from_int(xi))
}

/// pointwise f(x) + <c, x>
pub fn add_linear<T: Scalar>(f: &TableFunction<T>, c: &[T]) -> Result<TableFunction<T>> {
    if c.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: c.len(),
        });
    }
    TableFunction::from_fn(f.domain().clone(), |x| f.eval(x) + Finite(dot(c, x)))
}

/// pointwise extended sum on the box intersection
pub fn add<T: Scalar>(f1: &TableFunction<T>, f2: &TableFunction<T>) -> Result<TableFunction<T>> {
    if f1.dim() != f2.dim() {
        return Err(Error::DimensionMismatch {
            expected: f1.dim(),
            got: f2.dim(),
        });
    }
    let boxx = f1
        .domain()
        .intersect(f2.domain())
        .ok_or(Error::EmptyDomain)?;
    TableFunction::from_fn(boxx, |x| f1.eval(x) + f2.eval(x))
}

/// `kept` must be strictly increasing and within range
fn check_subset(kept: &[usize], n: usize) -> Result<()> {
    if kept.is_empty() {
        return Err(Error::EmptySubset);
    }
    for (pos, &k) in kept.iter().enumerate() {
        if k >= n || (pos > 0 && kept[pos - 1] >= k) {
            return Err(Error::BadSubset { index: k, n });
        }
    }
    Ok(())
}

/// Restriction to the coordinates in `kept` (0-based, strictly increasing):
/// the other coordinates are pinned to zero, so
/// result(y) = f(x) with x[kept[i]] = y[i] and x = 0 elsewhere.
pub fn restrict<T: Scalar>(f: &TableFunction<T>, kept: &[usize]) -> Result<TableFunction<T>> {
    let n = f.dim();
    check_subset(kept, n)?;
    let lower: Point = kept.iter().map(|&k| f.domain().lower()[k]).collect();
    let upper: Point = kept.iter().map(|&k| f.domain().upper()[k]).collect();
    TableFunction::from_fn(IntBox::new(lower, upper)?, |y| {
        let mut x = vec![0i64; n];
        for (i, &k) in kept.iter().enumerate() {
            x[k] = y[i];
        }
        f.eval(&x)
    })
}

/// Projection (partial minimization) onto the coordinates in `kept`:
/// result(y) = min over the dropped coordinates z of f at the interleaved
/// point. The minimum ranges over box(f), which matches the unrestricted
/// definition whenever the true minimizers lie inside the box.
pub fn project<T: Scalar>(f: &TableFunction<T>, kept: &[usize]) -> Result<TableFunction<T>> {
    let n = f.dim();
    check_subset(kept, n)?;
    if kept.len() == n {
        return Err(Error::SubsetNotProper);
    }
    let lower: Point = kept.iter().map(|&k| f.domain().lower()[k]).collect();
    let upper: Point = kept.iter().map(|&k| f.domain().upper()[k]).collect();
    let out_box = IntBox::new(lower, upper)?;
    let mut out: Vec<Value<T>> = vec![Infinite; out_box.len()?];
    for (p, v) in f.domain().points().zip(f.values()) {
        if !v.is_finite() {
            continue;
        }
        let y: Point = kept.iter().map(|&k| p[k]).collect();
        let slot = &mut out[out_box.index_of(&y)];
        if *v < *slot {
            *slot = v.clone();
        }
    }
    TableFunction::new(out_box, out)
}

/// Exact one-variable elimination of a pure quadratic: for pivot a_kk > 0,
/// result_ij = a_ij - a_ik * a_kj / a_kk over the remaining coordinates.
/// This is continuous partial minimization over coordinate k; the lattice
/// projection of the materialized table can differ on points whose
/// continuous minimizer is half-integral.
pub fn sweep_out<T: Scalar>(a: &QuadraticFunction<T>, k: usize) -> Result<QuadraticFunction<T>> {
    let n = a.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    if n == 1 {
        return Err(Error::SweepOutOnlyVariable);
    }
    if a.has_linear_term() {
        return Err(Error::SweepOutLinear);
    }
    let pivot = a.entry(k, k).clone();
    if pivot <= T::zero() {
        return Err(Error::NonPositivePivot {
            k,
            value: pivot.to_string(),
        });
    }
    let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let entries: Vec<Vec<T>> = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    a.entry(i, j).clone()
                        - a.entry(i, k).clone() * a.entry(k, j).clone() / pivot.clone()
                })
                .collect()
        })
        .collect();
    QuadraticFunction::new(entries, None)
}

/// Infimal convolution: result(x) = min { f1(y) + f2(x - y) }, computed by
/// forward accumulation over the two effective domains; the result box is
/// the sum of the input boxes, so every attainable x is covered.
pub fn convolve<T: Scalar>(
    f1: &TableFunction<T>,
    f2: &TableFunction<T>,
) -> Result<TableFunction<T>> {
    if f1.dim() != f2.dim() {
        return Err(Error::DimensionMismatch {
            expected: f1.dim(),
            got: f2.dim(),
        });
    }
    let out_box = f1.domain().minkowski(f2.domain())?;
    let mut out: Vec<Value<T>> = vec![Infinite; out_box.len()?];
    for (y, vy) in f1.domain().points().zip(f1.values()) {
        let vy = match vy {
            Finite(v) => v,
            Infinite => continue,
        };
        for (z, vz) in f2.domain().points().zip(f2.values()) {
            let vz = match vz {
                Finite(v) => v,
                Infinite => continue,
            };
            let x: Point = y.iter().zip(&z).map(|(a, b)| a + b).collect();
            let cand = Finite(vy.clone() + vz.clone());
            let slot = &mut out[out_box.index_of(&x)];
            if cand < *slot {
                *slot = cand;
            }
        }
    }
    TableFunction::new(out_box, out)
}

/// {y + z : y in s1, z in s2}, deduplicated
pub fn minkowski_sum(s1: &IndicatorSet, s2: &IndicatorSet) -> Result<IndicatorSet> {
    let n = s1.points()[0].len();
    if n != s2.points()[0].len() {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: s2.points()[0].len(),
        });
    }
    let mut sums: BTreeSet<Point> = BTreeSet::new();
    for y in s1.points() {
        for z in s2.points() {
            sums.insert(y.iter().zip(z).map(|(a, b)| a + b).collect());
        }
    }
    IndicatorSet::new(sums.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::is_multimodular;
    use crate::function::materialize;
    use crate::scalar::Rat;

    fn sep2() -> TableFunction {
        TableFunction::from_fn(IntBox::cube(2, -2, 2).unwrap(), |p| {
            Value::from_int(p[0] * p[0] + p[1] * p[1])
        })
        .unwrap()
    }

    fn quad3_table(bound: i64) -> TableFunction {
        let a = QuadraticFunction::<Rat>::from_int_matrix(
            &[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]],
            None,
        )
        .unwrap();
        materialize(&a, &IntBox::cube(3, -bound, bound).unwrap()).unwrap()
    }

    #[test]
    fn shift_moves_the_argument() {
        let f = sep2();
        let g = shift(&f, &[1, 0]).unwrap();
        assert_eq!(g.eval(&[0, 0]), Value::from_int(1));
        assert_eq!(g.domain().lower(), &[-3, -2]);
        assert_eq!(shift(&f, &[0, 0]).unwrap(), f);
        let h = shift(&quad3_table(2), &[1, 1, 1]).unwrap();
        assert!(is_multimodular(&h).holds);
    }

    #[test]
    fn negate_and_reverse_are_involutions() {
        let f = sep2();
        // even and coordinate-symmetric, so both operations fix it
        assert_eq!(negate_vars(&f).unwrap(), f);
        assert_eq!(reverse_vars(&f).unwrap(), f);
        let g = shift(&f, &[1, 0]).unwrap();
        assert_eq!(negate_vars(&negate_vars(&g).unwrap()).unwrap(), g);
        assert_eq!(reverse_vars(&reverse_vars(&g).unwrap()).unwrap(), g);
        assert!(is_multimodular(&negate_vars(&quad3_table(2)).unwrap()).holds);
        assert!(is_multimodular(&reverse_vars(&quad3_table(2)).unwrap()).holds);
    }

    #[test]
    fn transposition_matches_the_swapped_matrix() {
        let t = quad3_table(2);
        let swapped = permute_vars(&t, &[1, 0, 2]).unwrap();
        let direct = materialize(
            &QuadraticFunction::<Rat>::from_int_matrix(
                &[vec![2, 1, 1], vec![1, 1, 0], vec![1, 0, 1]],
                None,
            )
            .unwrap(),
            &IntBox::cube(3, -2, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(swapped, direct);
        assert!(!is_multimodular(&swapped).holds);
        let cycled = permute_vars(&t, &[2, 0, 1]).unwrap();
        assert!(!is_multimodular(&cycled).holds);
        assert_eq!(permute_vars(&t, &[0, 1, 2]).unwrap(), t);
        assert!(matches!(
            permute_vars(&t, &[0, 0, 1]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn permutation_feeds_slots_in_order() {
        // f depends only on its first slot; after sigma = (1,0) the result
        // must depend only on x2
        let f = TableFunction::<Rat>::from_fn(IntBox::new(vec![0, 5], vec![2, 6]).unwrap(), |p| {
            Value::from_int(10 * p[0])
        })
        .unwrap();
        let g = permute_vars(&f, &[1, 0]).unwrap();
        assert_eq!(g.domain().lower(), &[5, 0]);
        assert_eq!(g.eval(&[5, 2]), Value::from_int(20));
        assert_eq!(g.eval(&[6, 0]), Value::zero());
    }

    #[test]
    fn scaling_variables_divides_the_box() {
        let f = sep2();
        assert_eq!(scale_vars(&f, 1).unwrap(), f);
        let g = scale_vars(&f, 2).unwrap();
        assert_eq!(g.domain().lower(), &[-1, -1]);
        assert_eq!(g.eval(&[1, 1]), Value::from_int(8));
        let big = materialize(
            &QuadraticFunction::<Rat>::from_int_matrix(
                &[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]],
                None,
            )
            .unwrap(),
            &IntBox::cube(3, -4, 4).unwrap(),
        )
        .unwrap();
        assert!(is_multimodular(&scale_vars(&big, 2).unwrap()).holds);
        assert!(matches!(scale_vars(&f, 0), Err(Error::BadVarScale(0))));
        // shifted box is [1,5] per coordinate, which holds no multiple of 7
        let off = shift(&f, &[-3, -3]).unwrap();
        assert!(matches!(scale_vars(&off, 7), Err(Error::EmptyDomain)));
    }

    #[test]
    fn scaling_values_keeps_the_domain() {
        let f = sep2();
        let zero = scale_values(&f, &Rat::from_int(0)).unwrap();
        assert!(zero.values().iter().all(|v| *v == Value::zero()));
        let twice = scale_values(&f, &Rat::from_int(2)).unwrap();
        assert_eq!(twice.eval(&[1, 1]), Value::from_int(4));
        let half = scale_values(&quad3_table(2), &Rat::from_fraction(1, 2)).unwrap();
        assert!(is_multimodular(&half).holds);
        assert!(matches!(
            scale_values(&f, &Rat::from_int(-1)),
            Err(Error::NegativeValueScale)
        ));
        // 0 * inf = inf: the infinite points of an indicator stay infinite
        let s = IndicatorSet::new(vec![vec![0, 0]]).unwrap();
        let t = materialize::<Rat>(&s, &IntBox::cube(2, -1, 1).unwrap()).unwrap();
        let z = scale_values(&t, &Rat::from_int(0)).unwrap();
        assert_eq!(z.effective_domain(), vec![vec![0, 0]]);
    }

    #[test]
    fn linear_terms_add_pointwise() {
        let f = sep2();
        assert_eq!(add_linear(&f, &[Rat::from_int(0), Rat::from_int(0)]).unwrap(), f);
        let g = add_linear(&f, &[Rat::from_int(1), Rat::from_int(-1)]).unwrap();
        assert_eq!(g.eval(&[1, 1]), Value::from_int(2));
        let h = add_linear(&quad3_table(2), &[
            Rat::from_fraction(1, 2),
            Rat::from_int(-1),
            Rat::from_int(2),
        ])
        .unwrap();
        assert!(is_multimodular(&h).holds);
    }

    #[test]
    fn sums_intersect_domains() {
        let f = sep2();
        let zero = TableFunction::<Rat>::from_fn(IntBox::cube(2, -2, 2).unwrap(), |_| {
            Value::zero()
        })
        .unwrap();
        assert_eq!(add(&f, &zero).unwrap(), f);
        let s1 = IndicatorSet::new(vec![vec![0, 0, 0], vec![1, 0, -1]]).unwrap();
        let s2 = IndicatorSet::new(vec![vec![0, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = IntBox::cube(3, -1, 1).unwrap();
        let sum = add(
            &materialize::<Rat>(&s1, &b).unwrap(),
            &materialize::<Rat>(&s2, &b).unwrap(),
        )
        .unwrap();
        assert_eq!(sum.effective_domain(), vec![vec![0, 0, 0]]);
        let mm = add(&quad3_table(2), &shift(&quad3_table(2), &[1, 0, 0]).unwrap()).unwrap();
        assert!(is_multimodular(&mm).holds);
    }

    #[test]
    fn restriction_pins_dropped_coordinates_to_zero() {
        let f = sep2();
        assert_eq!(restrict(&f, &[0, 1]).unwrap(), f);
        let r = restrict(&f, &[0]).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.eval(&[2]), Value::from_int(4));
        let a4 = QuadraticFunction::<Rat>::from_int_matrix(
            &[
                vec![3, 2, 1, 0],
                vec![2, 3, 2, 1],
                vec![1, 2, 2, 1],
                vec![0, 1, 1, 1],
            ],
            None,
        )
        .unwrap();
        let t = materialize(&a4, &IntBox::cube(4, -2, 2).unwrap()).unwrap();
        let r = restrict(&t, &[0, 1, 3]).unwrap();
        // (y1, y2, 0, y4) against direct evaluation
        assert_eq!(r.eval(&[1, -1, 2]), a4.eval(&[1, -1, 0, 2]));
        assert!(is_multimodular(&r).holds);
        assert!(matches!(restrict(&f, &[]), Err(Error::EmptySubset)));
        assert!(matches!(
            restrict(&f, &[1, 0]),
            Err(Error::BadSubset { .. })
        ));
    }

    #[test]
    fn projection_minimizes_dropped_coordinates() {
        let f = sep2();
        let p = project(&f, &[0]).unwrap();
        // the inner minimum of x2^2 over [-2,2] is 0
        assert_eq!(p.eval(&[2]), Value::from_int(4));
        assert_eq!(p.eval(&[0]), Value::zero());
        let t = quad3_table(2);
        let interval = project(&t, &[0, 1]).unwrap();
        assert!(is_multimodular(&interval).holds);
        for y in interval.domain().points() {
            for z in -2..=2 {
                assert!(interval.eval(&y) <= t.eval(&[y[0], y[1], z]));
            }
        }
        assert!(matches!(project(&f, &[0, 1]), Err(Error::SubsetNotProper)));
    }

    #[test]
    fn sweep_out_eliminates_one_variable_exactly() {
        let a4 = QuadraticFunction::<Rat>::from_int_matrix(
            &[
                vec![3, 2, 1, 0],
                vec![2, 3, 2, 1],
                vec![1, 2, 2, 1],
                vec![0, 1, 1, 1],
            ],
            None,
        )
        .unwrap();
        let swept = sweep_out(&a4, 2).unwrap();
        let expected: Vec<Vec<Rat>> = [[5i64, 2, -1], [2, 2, 0], [-1, 0, 1]]
            .iter()
            .map(|row| row.iter().map(|&v| Rat::from_fraction(v, 2)).collect())
            .collect();
        assert_eq!(swept.matrix(), &expected[..]);

        // value identity at sampled rational y: plugging the closed-form
        // continuous minimizer of the eliminated coordinate into the original
        // form reproduces the swept form
        let pivot = Rat::from_int(2);
        for (y1, y2, y4) in [(1i64, 0i64, 0i64), (0, 1, 0), (1, 2, -3), (-2, 1, 1), (3, -1, 2)] {
            for den in [1i64, 2, 3, 7] {
                let y: Vec<Rat> = [y1, y2, y4]
                    .iter()
                    .map(|&v| Rat::from_fraction(v, den))
                    .collect();
                let zstar = -(Rat::from_int(1) * y[0].clone()
                    + Rat::from_int(2) * y[1].clone()
                    + Rat::from_int(1) * y[2].clone())
                    / pivot.clone();
                let full = [y[0].clone(), y[1].clone(), zstar, y[2].clone()];
                assert_eq!(a4.eval_rational(&full), swept.eval_rational(&y));
            }
        }

        let diag = QuadraticFunction::<Rat>::from_int_matrix(
            &[vec![2, 0], vec![0, 5]],
            None,
        )
        .unwrap();
        let d = sweep_out(&diag, 1).unwrap();
        assert_eq!(d.matrix(), &[vec![Rat::from_int(2)]]);

        let indefinite = QuadraticFunction::<Rat>::from_int_matrix(
            &[vec![0, 1], vec![1, 0]],
            None,
        )
        .unwrap();
        assert!(matches!(
            sweep_out(&indefinite, 0),
            Err(Error::NonPositivePivot { k: 0, .. })
        ));
        let linear = QuadraticFunction::<Rat>::from_int_matrix(
            &[vec![1, 0], vec![0, 1]],
            Some(vec![1, 0]),
        )
        .unwrap();
        assert!(matches!(sweep_out(&linear, 0), Err(Error::SweepOutLinear)));
    }

    #[test]
    fn convolution_with_a_point_is_the_identity() {
        let f = sep2();
        let delta = materialize::<Rat>(
            &IndicatorSet::new(vec![vec![0, 0]]).unwrap(),
            &IntBox::cube(2, 0, 0).unwrap(),
        )
        .unwrap();
        let c = convolve(&f, &delta).unwrap();
        for p in f.domain().points() {
            assert_eq!(c.eval(&p), f.eval(&p));
        }
    }

    #[test]
    fn indicator_convolution_is_the_sum_set() {
        let s1 = IndicatorSet::new(vec![vec![0, 0, 0], vec![1, 0, -1]]).unwrap();
        let s2 = IndicatorSet::new(vec![vec![0, 0, 0], vec![0, 1, 0]]).unwrap();
        let sum = minkowski_sum(&s1, &s2).unwrap();
        assert_eq!(
            sum.points(),
            &[
                vec![0, 0, 0],
                vec![0, 1, 0],
                vec![1, 0, -1],
                vec![1, 1, -1],
            ]
        );
        let d1 = materialize::<Rat>(&s1, &s1.bounding_box()).unwrap();
        let d2 = materialize::<Rat>(&s2, &s2.bounding_box()).unwrap();
        let conv = convolve(&d1, &d2).unwrap();
        for p in conv.domain().points() {
            let expected = if sum.contains(&p) { Value::zero() } else { Infinite };
            assert_eq!(conv.eval(&p), expected);
        }
        assert!(!is_multimodular(&conv).holds);
    }

    #[test]
    fn minkowski_fixtures_and_identity() {
        let t1 = IndicatorSet::new(vec![vec![0, 0, 0], vec![1, 1, 0]]).unwrap();
        let t2 = IndicatorSet::new(vec![vec![0, 0, 0], vec![0, 1, 1]]).unwrap();
        let sum = minkowski_sum(&t1, &t2).unwrap();
        assert_eq!(
            sum.points(),
            &[
                vec![0, 0, 0],
                vec![0, 1, 1],
                vec![1, 1, 0],
                vec![1, 2, 1],
            ]
        );
        let origin = IndicatorSet::new(vec![vec![0, 0, 0]]).unwrap();
        assert_eq!(minkowski_sum(&t1, &origin).unwrap(), t1);
    }
}
