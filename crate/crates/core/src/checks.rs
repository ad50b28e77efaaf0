use crate::function::{materialize, Evaluate, IndicatorSet, QuadraticFunction, TableFunction};
use crate::lattice::{add, ceil_avg, floor_avg, join, linf_dist, meet, Point};
use crate::scalar::{Rat, Scalar};
use crate::value::{Finite, Value};
use crate::witness::{Verdict, Witness, WitnessKind};

/// The n+1 test directions of multimodularity, in the fixed order
/// -e1, e1-e2, ..., e_{n-1}-e_n, e_n.
pub fn direction_set_f(n: usize) -> Vec<Point> {
    assert!(n >= 1);
    let mut dirs = Vec::with_capacity(n + 1);
    let mut d = vec![0i64; n];
    d[0] = -1;
    dirs.push(d);
    for i in 0..n {
        let mut d = vec![0i64; n];
        d[i] = 1;
        if i + 1 < n {
            d[i + 1] = -1;
        }
        dirs.push(d);
    }
    dirs
}

/// Definition-level multimodularity sweep. The base point z runs over the
/// whole stored box, not just the effective domain: a violation can sit at an
/// infinite z (both right-hand values infinite never violates, but a finite
/// left side against an infinite right side does). Any violation over all of
/// Z^n has both z+d and z+d' in the box, and for each coordinate exactly one
/// direction moves +1 and one moves -1 there, so z itself lies in the box;
/// the box sweep is therefore exhaustive for the +inf-extended function.
pub fn is_multimodular<T: Scalar>(f: &TableFunction<T>) -> Verdict<T> {
    let dirs = direction_set_f(f.dim());
    let mut checked = 0u64;
    for z in f.domain().points() {
        for a in 0..dirs.len() {
            for b in a + 1..dirs.len() {
                checked += 1;
                let d = &dirs[a];
                let dp = &dirs[b];
                let lhs = f.eval(&add(&z, d)) + f.eval(&add(&z, dp));
                if !lhs.is_finite() {
                    continue;
                }
                let rhs = f.eval(&z) + f.eval(&add(&add(&z, d), dp));
                if lhs < rhs {
                    return Verdict::fail(
                        Witness {
                            kind: WitnessKind::Multimodular,
                            points: vec![z, d.clone(), dp.clone()],
                            lhs,
                            rhs,
                        },
                        checked,
                    );
                }
            }
        }
    }
    Verdict::pass(checked)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubmodularMode {
    /// every unordered pair of finite points (the definition; other pairs
    /// have an infinite left side and cannot violate)
    AllPairs,
    /// unit squares only: x against x+e_i, x+e_j. Equivalent to the
    /// definition when the effective domain is a full box; weaker on
    /// scattered domains.
    UnitSquares,
}

pub fn is_submodular<T: Scalar>(f: &TableFunction<T>) -> Verdict<T> {
    is_submodular_mode(f, SubmodularMode::AllPairs)
}

pub fn is_submodular_mode<T: Scalar>(f: &TableFunction<T>, mode: SubmodularMode) -> Verdict<T> {
    match mode {
        SubmodularMode::AllPairs => {
            let dom = f.effective_domain();
            let mut checked = 0u64;
            for i in 0..dom.len() {
                for j in i + 1..dom.len() {
                    let x = &dom[i];
                    let y = &dom[j];
                    let up = join(x, y);
                    // comparable pairs reduce to an identity
                    if &up == x || &up == y {
                        continue;
                    }
                    checked += 1;
                    let lhs = f.eval(x) + f.eval(y);
                    let rhs = f.eval(&up) + f.eval(&meet(x, y));
                    if lhs < rhs {
                        return Verdict::fail(
                            Witness {
                                kind: WitnessKind::Submodular,
                                points: vec![x.clone(), y.clone()],
                                lhs,
                                rhs,
                            },
                            checked,
                        );
                    }
                }
            }
            Verdict::pass(checked)
        }
        SubmodularMode::UnitSquares => {
            let n = f.dim();
            let upper = f.domain().upper().to_vec();
            let mut checked = 0u64;
            for x in f.domain().points() {
                for i in 0..n {
                    if x[i] == upper[i] {
                        continue;
                    }
                    for j in i + 1..n {
                        if x[j] == upper[j] {
                            continue;
                        }
                        checked += 1;
                        let mut xi = x.clone();
                        xi[i] += 1;
                        let mut xj = x.clone();
                        xj[j] += 1;
                        let lhs = f.eval(&xi) + f.eval(&xj);
                        if !lhs.is_finite() {
                            continue;
                        }
                        let mut xij = xi.clone();
                        xij[j] += 1;
                        let rhs = f.eval(&x) + f.eval(&xij);
                        if lhs < rhs {
                            return Verdict::fail(
                                Witness {
                                    kind: WitnessKind::Submodular,
                                    points: vec![xi, xj],
                                    lhs,
                                    rhs,
                                },
                                checked,
                            );
                        }
                    }
                }
            }
            Verdict::pass(checked)
        }
    }
}

/// Discrete midpoint convexity over all pairs of finite points. Pairs are
/// scanned by increasing Chebyshev distance, then lexicographically, so the
/// reported witness is the nearest violating pair.
pub fn is_lnat<T: Scalar>(g: &TableFunction<T>) -> Verdict<T> {
    let dom = g.effective_domain();
    let mut buckets: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..dom.len() {
        for j in i + 1..dom.len() {
            let dist = linf_dist(&dom[i], &dom[j]) as usize;
            if buckets.len() <= dist {
                buckets.resize(dist + 1, Vec::new());
            }
            buckets[dist].push((i, j));
        }
    }
    let mut checked = 0u64;
    for bucket in &buckets {
        for &(i, j) in bucket {
            let p = &dom[i];
            let q = &dom[j];
            checked += 1;
            let lhs = g.eval(p) + g.eval(q);
            let rhs = g.eval(&ceil_avg(p, q)) + g.eval(&floor_avg(p, q));
            if lhs < rhs {
                return Verdict::fail(
                    Witness {
                        kind: WitnessKind::Midpoint,
                        points: vec![p.clone(), q.clone()],
                        lhs,
                        rhs,
                    },
                    checked,
                );
            }
        }
    }
    Verdict::pass(checked)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LConvexVerdict<T = Rat> {
    pub verdict: Verdict<T>,
    /// the common all-ones increment, when at least one q, q+1 pair is finite
    pub increment: Option<T>,
    /// no q, q+1 pair was finite, so linearity in the all-ones direction
    /// could not be tested
    pub translation_untestable: bool,
}

/// Submodularity plus a constant increment along the all-ones direction,
/// inferred from the first finite q, q+1 pair.
pub fn is_l_convex<T: Scalar>(h: &TableFunction<T>) -> LConvexVerdict<T> {
    let sub = is_submodular(h);
    if !sub.holds {
        return LConvexVerdict {
            verdict: sub,
            increment: None,
            translation_untestable: false,
        };
    }
    let ones = vec![1i64; h.dim()];
    let mut checked = sub.checked;
    let mut reference: Option<(Point, T)> = None;
    for q in h.domain().points() {
        let hq = match f_finite(h, &q) {
            Some(v) => v,
            None => continue,
        };
        let hq1 = match f_finite(h, &add(&q, &ones)) {
            Some(v) => v,
            None => continue,
        };
        checked += 1;
        let r = hq1 - hq;
        match &reference {
            None => reference = Some((q, r)),
            Some((q_ref, r_ref)) => {
                if r != *r_ref {
                    return LConvexVerdict {
                        verdict: Verdict::fail(
                            Witness {
                                kind: WitnessKind::Translation,
                                points: vec![q_ref.clone(), q],
                                lhs: Finite(r),
                                rhs: Finite(r_ref.clone()),
                            },
                            checked,
                        ),
                        increment: Some(r_ref.clone()),
                        translation_untestable: false,
                    };
                }
            }
        }
    }
    let untestable = reference.is_none();
    LConvexVerdict {
        verdict: Verdict::pass(checked),
        increment: reference.map(|(_, r)| r),
        translation_untestable: untestable,
    }
}

fn f_finite<T: Scalar>(f: &TableFunction<T>, p: &[i64]) -> Option<T> {
    match f.eval(p) {
        Finite(v) => Some(v),
        Value::Infinite => None,
    }
}

/// One term of the quadratic multimodularity criterion,
/// a[i][j] - a[i][j+1] - a[i+1][j] + a[i+1][j+1], for 0 <= i < j <= n with
/// row/column labels starting at 1 and zero padding at row 0 and column n+1.
/// The quadratic form is multimodular exactly when every term is <= 0.
pub fn quadratic_criterion_value<T: Scalar>(a: &QuadraticFunction<T>, i: usize, j: usize) -> T {
    let n = a.n();
    assert!(i < j && j <= n, "criterion labels need 0 <= i < j <= n");
    let entry = |r: usize, c: usize| -> T {
        if r == 0 || c == n + 1 {
            T::zero()
        } else {
            a.entry(r - 1, c - 1).clone()
        }
    };
    entry(i, j) - entry(i, j + 1) - entry(i + 1, j) + entry(i + 1, j + 1)
}

/// Criterion sweep over all label pairs, scanning by column then row so the
/// witness names the violating pair with the smallest j.
pub fn is_quadratic_multimodular<T: Scalar>(a: &QuadraticFunction<T>) -> Verdict<T> {
    let n = a.n();
    let mut checked = 0u64;
    for j in 1..=n {
        for i in 0..j {
            checked += 1;
            let v = quadratic_criterion_value(a, i, j);
            if v > T::zero() {
                return Verdict::fail(
                    Witness {
                        kind: WitnessKind::QuadraticCriterion,
                        points: vec![vec![i as i64, j as i64]],
                        lhs: Value::zero(),
                        rhs: Finite(v),
                    },
                    checked,
                );
            }
        }
    }
    Verdict::pass(checked)
}

/// Membership in the class of symmetric matrices with nonpositive
/// off-diagonal entries and diagonally dominant rows (the quadratic forms
/// that are midpoint convex). Off-diagonal signs are checked first, then row
/// dominance; labels in witnesses start at 1.
pub fn is_l_class<T: Scalar>(b: &QuadraticFunction<T>) -> Verdict<T> {
    let n = b.n();
    let mut checked = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let v = b.entry(i, j);
            if *v > T::zero() {
                return Verdict::fail(
                    Witness {
                        kind: WitnessKind::LClass,
                        points: vec![vec![(i + 1) as i64, (j + 1) as i64]],
                        lhs: Value::zero(),
                        rhs: Finite(v.clone()),
                    },
                    checked,
                );
            }
        }
    }
    for i in 0..n {
        checked += 1;
        let mut off = T::zero();
        for j in 0..n {
            if j != i {
                off = off + b.entry(i, j).abs();
            }
        }
        if *b.entry(i, i) < off {
            return Verdict::fail(
                Witness {
                    kind: WitnessKind::LClass,
                    points: vec![vec![(i + 1) as i64, (i + 1) as i64]],
                    lhs: Finite(b.entry(i, i).clone()),
                    rhs: Finite(off),
                },
                checked,
            );
        }
    }
    Verdict::pass(checked)
}

/// A set is multimodular when its indicator is. The indicator is
/// materialized on the bounding box grown by 1, which is exact: every
/// defining inequality of the extended indicator touches points at most one
/// step outside the bounding box.
pub fn is_multimodular_set<T: Scalar>(s: &IndicatorSet) -> Verdict<T> {
    let table = materialize::<T>(s, &s.bounding_box().inflate(1))
        .expect("indicator tables contain their set");
    is_multimodular(&table)
}

/// Midpoint convexity of a set through its materialized indicator.
pub fn is_lnat_set<T: Scalar>(s: &IndicatorSet) -> Verdict<T> {
    let table = materialize::<T>(s, &s.bounding_box().inflate(1))
        .expect("indicator tables contain their set");
    is_lnat(&table)
}

/// Recomputes a table-function witness from its stored points and confirms
/// it is a genuine strict violation with the stored sides.
pub fn validate_table_witness<T: Scalar>(w: &Witness<T>, f: &TableFunction<T>) -> bool {
    if !w.is_violation() {
        return false;
    }
    match w.kind {
        WitnessKind::Multimodular => {
            let (z, d, dp) = (&w.points[0], &w.points[1], &w.points[2]);
            let lhs = f.eval(&add(z, d)) + f.eval(&add(z, dp));
            let rhs = f.eval(z) + f.eval(&add(&add(z, d), dp));
            lhs == w.lhs && rhs == w.rhs
        }
        WitnessKind::Submodular => {
            let (x, y) = (&w.points[0], &w.points[1]);
            let lhs = f.eval(x) + f.eval(y);
            let rhs = f.eval(&join(x, y)) + f.eval(&meet(x, y));
            lhs == w.lhs && rhs == w.rhs
        }
        WitnessKind::Midpoint => {
            let (p, q) = (&w.points[0], &w.points[1]);
            let lhs = f.eval(p) + f.eval(q);
            let rhs = f.eval(&ceil_avg(p, q)) + f.eval(&floor_avg(p, q));
            lhs == w.lhs && rhs == w.rhs
        }
        WitnessKind::Translation => {
            let (q_ref, q) = (&w.points[0], &w.points[1]);
            let ones = vec![1i64; f.dim()];
            let inc = |p: &Point| -> Option<T> {
                Some(f_finite(f, &add(p, &ones))? - f_finite(f, p)?)
            };
            // both increments must be finite and reproduce the stored sides
            match (inc(q), inc(q_ref)) {
                (Some(a), Some(b)) => Finite(a) == w.lhs && Finite(b) == w.rhs,
                _ => false,
            }
        }
        _ => false,
    }
}

/// Matrix-side counterpart of [`validate_table_witness`] for criterion and
/// class-membership witnesses.
pub fn validate_matrix_witness<T: Scalar>(w: &Witness<T>, a: &QuadraticFunction<T>) -> bool {
    if !w.is_violation() {
        return false;
    }
    let ij = &w.points[0];
    let (i, j) = (ij[0] as usize, ij[1] as usize);
    match w.kind {
        WitnessKind::QuadraticCriterion => {
            w.lhs == Value::zero() && w.rhs == Finite(quadratic_criterion_value(a, i, j))
        }
        WitnessKind::LClass => {
            if i == j {
                let mut off = T::zero();
                for k in 0..a.n() {
                    if k != i - 1 {
                        off = off + a.entry(i - 1, k).abs();
                    }
                }
                w.lhs == Finite(a.entry(i - 1, i - 1).clone()) && w.rhs == Finite(off)
            } else {
                w.lhs == Value::zero() && w.rhs == Finite(a.entry(i - 1, j - 1).clone())
            }
        }
        _ => false,
    }
}
