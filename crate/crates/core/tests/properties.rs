//! Randomized invariants that hold for arbitrary inputs, not just the
//! curated fixtures: serialization round trips, change-of-variables
//! identities, witness self-validation, and operation symmetries. Domain
//! sizes stay tiny so each property runs its full case budget in seconds.

use proptest::collection::vec;
use proptest::prelude::*;

use dca_core::checks::{
    is_lnat, is_multimodular, is_quadratic_multimodular, is_submodular, validate_table_witness,
};
use dca_core::io::{encode_function, parse_function, FunctionData};
use dca_core::ops::{convolve, minkowski_sum};
use dca_core::transforms::{
    bidiagonal_d, conjugate_quadratic, from_lnat, inverse_conjugate_quadratic, inverse_d,
    reversal_t, to_lnat, IntMatrix,
};
use dca_core::{
    materialize, Evaluate, Finite, IndicatorSet, Infinite, IntBox, Piece, QuadraticFunction, Rat,
    Scalar, SeparableFunction, TableFunction, Value,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| Rat::from_fraction(p, q))
}

fn small_value() -> impl Strategy<Value = Value<Rat>> {
    prop_oneof![
        4 => small_rat().prop_map(Finite),
        1 => Just(Infinite),
    ]
}

fn small_box(max_dim: usize) -> impl Strategy<Value = IntBox> {
    (1..=max_dim).prop_flat_map(|n| {
        vec((-2i64..=0, 0i64..=2), n).prop_map(|ranges| {
            let lower: Vec<i64> = ranges.iter().map(|r| r.0).collect();
            let upper: Vec<i64> = ranges.iter().map(|r| r.0 + r.1).collect();
            IntBox::new(lower, upper).unwrap()
        })
    })
}

/// Arbitrary table, possibly with infinite entries; entry 0 is forced finite
/// so the effective domain is never empty.
fn sparse_table(max_dim: usize) -> impl Strategy<Value = TableFunction> {
    small_box(max_dim).prop_flat_map(|boxx| {
        let len = boxx.len().unwrap();
        vec(small_value(), len).prop_map(move |mut values| {
            if !values.iter().any(Value::is_finite) {
                values[0] = Finite(Rat::from_int(0));
            }
            TableFunction::new(boxx.clone(), values).unwrap()
        })
    })
}

/// Finite everywhere and at least two points wide in every coordinate. A box
/// pinched to width one satisfies the pairwise inequalities vacuously (no
/// two distinct directions keep the pinned coordinate fixed), so only this
/// shape supports the cross-check against the cumulative side.
fn dense_table(max_dim: usize) -> impl Strategy<Value = TableFunction> {
    (1..=max_dim).prop_flat_map(|n| {
        vec((-2i64..=0, 1i64..=2), n).prop_flat_map(|ranges| {
            let lower: Vec<i64> = ranges.iter().map(|r| r.0).collect();
            let upper: Vec<i64> = ranges.iter().map(|r| r.0 + r.1).collect();
            let boxx = IntBox::new(lower, upper).unwrap();
            let len = boxx.len().unwrap();
            vec(small_rat(), len).prop_map(move |values| {
                TableFunction::new(boxx.clone(), values.into_iter().map(Finite).collect()).unwrap()
            })
        })
    })
}

fn symmetric_quadratic(max_dim: usize) -> impl Strategy<Value = QuadraticFunction> {
    (1..=max_dim).prop_flat_map(|n| {
        let upper = vec(small_rat(), n * (n + 1) / 2);
        let linear = proptest::option::of(vec(small_rat(), n));
        (upper, linear).prop_map(move |(tri, linear)| {
            let mut m = vec![vec![Rat::from_int(0); n]; n];
            let mut it = tri.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = it.next().unwrap();
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            QuadraticFunction::new(m, linear).unwrap()
        })
    })
}

fn convex_piece() -> impl Strategy<Value = Piece<Rat>> {
    (
        -2i64..=0,
        small_rat(),
        small_rat(),
        vec((0i64..=6, 1i64..=2), 0..4),
    )
        .prop_map(|(start, base, slope0, bumps)| {
            let mut values = vec![base.clone()];
            let mut slope = slope0;
            for (num, den) in bumps {
                let last = values.last().unwrap().clone();
                values.push(last + slope.clone());
                slope = slope + Rat::from_fraction(num, den);
            }
            Piece { start, values }
        })
}

fn separable(max_dim: usize) -> impl Strategy<Value = SeparableFunction> {
    vec(convex_piece(), 1..=max_dim).prop_map(|pieces| SeparableFunction::new(pieces).unwrap())
}

fn point_set(max_dim: usize) -> impl Strategy<Value = IndicatorSet> {
    (1..=max_dim).prop_flat_map(|n| {
        vec(vec(-2i64..=2, n), 1..=5).prop_map(|points| IndicatorSet::new(points).unwrap())
    })
}

fn cases() -> ProptestConfig {
    // default kept small for routine runs; PROPTEST_CASES still wins when set
    let n = std::env::var("PROPTEST_CASES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(64);
    ProptestConfig::with_cases(n)
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn table_json_round_trip(f in sparse_table(3)) {
        let parsed = parse_function(&encode_function(&FunctionData::Table(f.clone()))).unwrap();
        prop_assert_eq!(parsed, FunctionData::Table(f));
    }

    #[test]
    fn quadratic_json_round_trip(a in symmetric_quadratic(3)) {
        let parsed = parse_function(&encode_function(&FunctionData::Quadratic(a.clone()))).unwrap();
        prop_assert_eq!(parsed, FunctionData::Quadratic(a));
    }

    #[test]
    fn separable_json_round_trip(s in separable(3)) {
        let parsed = parse_function(&encode_function(&FunctionData::Separable(s.clone()))).unwrap();
        prop_assert_eq!(parsed, FunctionData::Separable(s));
    }

    #[test]
    fn set_json_round_trip(s in point_set(3)) {
        let parsed: FunctionData = parse_function(&encode_function::<Rat>(&FunctionData::Set(s.clone()))).unwrap();
        prop_assert_eq!(parsed, FunctionData::Set(s));
    }

    #[test]
    fn difference_matrices_invert(n in 1usize..=6) {
        let d = bidiagonal_d(n);
        let dinv = inverse_d(n);
        prop_assert_eq!(d.mul(&dinv).entries, IntMatrix::identity(n).entries);
        prop_assert_eq!(dinv.mul(&d).entries, IntMatrix::identity(n).entries);
        let t = dinv.mul(&IntMatrix::anti_identity(n)).mul(&d);
        prop_assert_eq!(t.entries, reversal_t(n).entries);
    }

    #[test]
    fn cumulative_map_round_trips(f in sparse_table(3)) {
        let g = to_lnat(&f).unwrap();
        let back = from_lnat(&g).unwrap();
        for p in f.domain().points() {
            prop_assert_eq!(back.eval(&p), f.eval(&p));
        }
    }

    #[test]
    fn reversal_acts_by_the_closed_form_matrix(f in sparse_table(3)) {
        let g = to_lnat(&f).unwrap();
        let g_rev = to_lnat(&dca_core::ops::reverse_vars(&f).unwrap()).unwrap();
        let t = reversal_t(f.dim());
        for p in g_rev.domain().points() {
            prop_assert_eq!(g_rev.eval(&p), g.eval(&t.apply(&p)));
        }
    }

    #[test]
    fn conjugation_round_trips(a in symmetric_quadratic(4)) {
        let b = conjugate_quadratic(&a);
        prop_assert_eq!(inverse_conjugate_quadratic(&b), a.clone());
        prop_assert_eq!(conjugate_quadratic(&inverse_conjugate_quadratic(&a)), a);
    }

    #[test]
    fn failed_checks_carry_valid_witnesses(f in sparse_table(3)) {
        for verdict in [is_multimodular(&f), is_lnat(&f), is_submodular(&f)] {
            if !verdict.holds {
                let w = verdict.witness.expect("failing verdict must attach a witness");
                prop_assert!(validate_table_witness(&w, &f));
            } else {
                prop_assert!(verdict.witness.is_none());
            }
        }
    }

    #[test]
    fn criterion_agrees_with_dense_sweep(a in symmetric_quadratic(2)) {
        let boxx = IntBox::cube(a.dim(), -2, 2).unwrap();
        let table = materialize(&a, &boxx).unwrap();
        prop_assert_eq!(is_quadratic_multimodular(&a).holds, is_multimodular(&table).holds);
    }

    #[test]
    fn bridge_agrees_on_dense_tables(f in dense_table(3)) {
        let g = to_lnat(&f).unwrap();
        prop_assert_eq!(is_multimodular(&f).holds, is_lnat(&g).holds);
    }

    #[test]
    fn convolution_commutes(pair in (1usize..=2).prop_flat_map(|n| {
        (fixed_dim_table(n), fixed_dim_table(n))
    })) {
        let (f, g) = pair;
        prop_assert_eq!(convolve(&f, &g).unwrap(), convolve(&g, &f).unwrap());
    }

    #[test]
    fn minkowski_matches_indicator_convolution(pair in (1usize..=2).prop_flat_map(|n| {
        (fixed_dim_set(n), fixed_dim_set(n))
    })) {
        let (s1, s2) = pair;
        let sum = minkowski_sum(&s1, &s2).unwrap();
        prop_assert_eq!(minkowski_sum(&s2, &s1).unwrap(), sum.clone());
        let d1: TableFunction = materialize(&s1, &s1.bounding_box()).unwrap();
        let d2: TableFunction = materialize(&s2, &s2.bounding_box()).unwrap();
        let direct: TableFunction = materialize(&sum, &sum.bounding_box()).unwrap();
        prop_assert_eq!(convolve(&d1, &d2).unwrap(), direct);
    }
}

fn fixed_dim_table(n: usize) -> impl Strategy<Value = TableFunction> {
    vec((-1i64..=0, 0i64..=1), n).prop_flat_map(|ranges| {
        let lower: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        let upper: Vec<i64> = ranges.iter().map(|r| r.0 + r.1).collect();
        let boxx = IntBox::new(lower, upper).unwrap();
        let len = boxx.len().unwrap();
        vec(small_value(), len).prop_map(move |mut values| {
            if !values.iter().any(Value::is_finite) {
                values[0] = Finite(Rat::from_int(0));
            }
            TableFunction::new(boxx.clone(), values).unwrap()
        })
    })
}

fn fixed_dim_set(n: usize) -> impl Strategy<Value = IndicatorSet> {
    vec(vec(-2i64..=2, n), 1..=4).prop_map(|points| IndicatorSet::new(points).unwrap())
}
