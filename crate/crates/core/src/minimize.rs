use crate::error::{Error, Result};
use crate::function::{Evaluate, TableFunction};
use crate::lattice::{add, sub, Point};
use crate::scalar::Scalar;
use crate::value::Value;

/// cap on the dimension for direction enumeration (2^n - 1 vectors)
pub const MAX_DIRECTION_DIM: usize = 20;

/// The 2^n - 1 alternating descent directions: for every increasing index
/// sequence i_1 < ... < i_k, the vector e_{i_1} - e_{i_2} + e_{i_3} - ...
/// Ordered lexicographically by index sequence. A point that cannot improve
/// by a step along any of these (in either orientation) is a global
/// minimizer whenever the function is multimodular.
pub fn directions_t(n: usize) -> Result<Vec<Point>> {
    assert!(n >= 1);
    if n > MAX_DIRECTION_DIM {
        return Err(Error::DimensionLimit {
            n,
            limit: MAX_DIRECTION_DIM,
        });
    }
    let mut out = Vec::with_capacity((1usize << n) - 1);
    let mut current = vec![0i64; n];
    fn visit(n: usize, start: usize, sign: i64, current: &mut Point, out: &mut Vec<Point>) {
        for i in start..n {
            current[i] = sign;
            out.push(current.clone());
            visit(n, i + 1, -sign, current, out);
            current[i] = 0;
        }
    }
    visit(n, 0, 1, &mut current, &mut out);
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimizeResult<T> {
    pub point: Point,
    pub value: Value<T>,
    /// number of strictly improving moves taken
    pub steps: u64,
}

/// Local search over the alternating directions: scan +d then -d in
/// direction order, move to the first strict improvement, restart; stop when
/// no step improves. Every move strictly decreases a value bounded below on
/// the box, so this terminates. Out-of-box neighbors evaluate to +inf and
/// never attract a move.
pub fn local_minimize<T: Scalar>(
    f: &TableFunction<T>,
    start: &[i64],
) -> Result<MinimizeResult<T>> {
    if start.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: start.len(),
        });
    }
    let mut value = f.eval(start);
    if !value.is_finite() {
        return Err(Error::InfiniteStart);
    }
    let dirs = directions_t(f.dim())?;
    let mut point = start.to_vec();
    let mut steps = 0u64;
    'improve: loop {
        for d in &dirs {
            for cand in [add(&point, d), sub(&point, d)] {
                let v = f.eval(&cand);
                if v < value {
                    point = cand;
                    value = v;
                    steps += 1;
                    continue 'improve;
                }
            }
        }
        return Ok(MinimizeResult { point, value, steps });
    }
}

/// exhaustive minimum; ties break to the lexicographically first point
pub fn brute_min<T: Scalar>(f: &TableFunction<T>) -> (Point, Value<T>) {
    let mut best: Option<(Point, Value<T>)> = None;
    for (p, v) in f.domain().points().zip(f.values()) {
        match &best {
            Some((_, bv)) if v >= bv => {}
            _ => best = Some((p, v.clone())),
        }
    }
    best.expect("tables are nonempty")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalGlobalReport<T> {
    /// every direction-local minimizer attains the global minimum
    pub agrees: bool,
    pub local_minimizers: u64,
    pub global_value: Value<T>,
    /// a direction-local minimizer with a worse value, if any
    pub counterexample: Option<(Point, Value<T>)>,
}

/// Full sweep of the effective domain: classify each point as
/// direction-local or not, and compare every local minimizer's value with
/// the exhaustive minimum.
pub fn check_local_global<T: Scalar>(f: &TableFunction<T>) -> Result<LocalGlobalReport<T>> {
    let dirs = directions_t(f.dim())?;
    let (_, global_value) = brute_min(f);
    let mut local_minimizers = 0u64;
    let mut counterexample = None;
    'points: for (p, v) in f.domain().points().zip(f.values()) {
        if !v.is_finite() {
            continue;
        }
        for d in &dirs {
            if f.eval(&add(&p, d)) < *v || f.eval(&sub(&p, d)) < *v {
                continue 'points;
            }
        }
        local_minimizers += 1;
        if *v > global_value && counterexample.is_none() {
            counterexample = Some((p, v.clone()));
        }
    }
    Ok(LocalGlobalReport {
        agrees: counterexample.is_none(),
        local_minimizers,
        global_value,
        counterexample,
    })
}
