//! Seeded generators for randomized campaigns.
//!
//! Every generator is deterministic in its seed, so a failing trial can be
//! replayed from the (seed, index) pair alone. Multimodular instances are
//! built by construction on the cumulative side and conjugated back, then
//! re-checked; a generator bug therefore surfaces as an error, never as a
//! silently wrong campaign.

pub mod closure;
pub mod repro;

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::is_multimodular;
use crate::error::{Error, Result};
use crate::function::{QuadraticFunction, TableFunction};
use crate::lattice::{prefix_sums, IntBox, Point};
use crate::scalar::{Rat, Scalar};
use crate::transforms::inverse_conjugate_quadratic;
use crate::value::{Finite, Infinite, Value};

/// Splits one campaign seed into independent per-trial seeds (splitmix64
/// finalizer over an additive golden-ratio sequence).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// How a random multimodular instance is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// quadratic whose cumulative-side matrix is drawn from the diagonally
    /// dominant class, plus a random linear term
    QuadraticDominant,
    /// sum of convex functions of the prefix sums x1+..+xi
    PrefixSeparable,
    /// pointwise sum of the two above (closed under addition)
    MixedSum,
}

impl GeneratorKind {
    pub fn cycle(i: u64) -> GeneratorKind {
        match i % 3 {
            0 => GeneratorKind::QuadraticDominant,
            1 => GeneratorKind::PrefixSeparable,
            _ => GeneratorKind::MixedSum,
        }
    }
}

/// A reproducible request for one random multimodular table.
#[derive(Debug, Clone)]
pub struct GeneratorRecipe {
    pub kind: GeneratorKind,
    pub bounds: IntBox,
    pub seed: u64,
}

/// Random symmetric matrix in the dominant class: nonpositive off-diagonal,
/// each diagonal entry at least the absolute row sum off the diagonal.
pub fn random_dominant_matrix(rng: &mut ChaCha8Rng, n: usize) -> QuadraticFunction<Rat> {
    let mut m = vec![vec![Rat::from_int(0); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let off = Rat::from_fraction(-rng.gen_range(0..=4), 2);
            m[i][j] = off.clone();
            m[j][i] = off;
        }
    }
    for i in 0..n {
        let mut row = Rat::from_int(0);
        for j in 0..n {
            if j != i {
                row = row + m[i][j].abs();
            }
        }
        m[i][i] = row + Rat::from_fraction(rng.gen_range(0..=3), 2);
    }
    QuadraticFunction::new(m, None).expect("square by construction")
}

/// Random symmetric matrix with no sign structure, for negative-side fuzzing.
pub fn random_symmetric_quadratic(
    rng: &mut ChaCha8Rng,
    n: usize,
    with_linear: bool,
) -> QuadraticFunction<Rat> {
    let mut m = vec![vec![Rat::from_int(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = Rat::from_fraction(rng.gen_range(-6..=6), 2);
            m[i][j] = e.clone();
            m[j][i] = e;
        }
    }
    let linear = with_linear.then(|| {
        (0..n)
            .map(|_| Rat::from_fraction(rng.gen_range(-4..=4), 2))
            .collect()
    });
    QuadraticFunction::new(m, linear).expect("square by construction")
}

/// Random multimodular quadratic, built as the pullback of a dominant-class
/// matrix (plus linear term) through the cumulative change of variables.
pub fn random_quadratic_mm(rng: &mut ChaCha8Rng, n: usize) -> QuadraticFunction<Rat> {
    let b = random_dominant_matrix(rng, n);
    let linear: Vec<Rat> = (0..n)
        .map(|_| Rat::from_fraction(rng.gen_range(-4..=4), 2))
        .collect();
    let b = QuadraticFunction::new(b.matrix().to_vec(), Some(linear)).expect("square");
    inverse_conjugate_quadratic(&b)
}

/// Convex sequence of the given length: second differences are nonnegative.
fn convex_values(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    let mut v = Rat::from_fraction(rng.gen_range(-8..=8), 2);
    let mut slope = Rat::from_fraction(rng.gen_range(-6..=6), 2);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v.clone());
        v = v + slope.clone();
        slope = slope + Rat::from_fraction(rng.gen_range(0..=4), 2);
    }
    out
}

/// Sum of independent convex functions of each coordinate, tabulated on the
/// box. Such sums satisfy every pairwise exchange inequality, so they are
/// safe "add a separable convex function" operands.
pub fn separable_convex_table(rng: &mut ChaCha8Rng, bounds: &IntBox) -> Result<TableFunction<Rat>> {
    let n = bounds.dim();
    let tables: Vec<Vec<Rat>> = (0..n)
        .map(|i| convex_values(rng, (bounds.upper()[i] - bounds.lower()[i] + 1) as usize))
        .collect();
    let lower = bounds.lower().to_vec();
    TableFunction::from_fn(bounds.clone(), |x| {
        let mut acc = Rat::from_int(0);
        for i in 0..n {
            acc = acc + tables[i][(x[i] - lower[i]) as usize].clone();
        }
        Finite(acc)
    })
}

/// Sum of convex functions of the prefix sums x1+..+xi, tabulated on the box.
fn prefix_separable_table(rng: &mut ChaCha8Rng, bounds: &IntBox) -> Result<TableFunction<Rat>> {
    let n = bounds.dim();
    let plo = prefix_sums(bounds.lower());
    let phi = prefix_sums(bounds.upper());
    let tables: Vec<Vec<Rat>> = (0..n)
        .map(|i| convex_values(rng, (phi[i] - plo[i] + 1) as usize))
        .collect();
    TableFunction::from_fn(bounds.clone(), |x| {
        let p = prefix_sums(x);
        let mut acc = Rat::from_int(0);
        for i in 0..n {
            acc = acc + tables[i][(p[i] - plo[i]) as usize].clone();
        }
        Finite(acc)
    })
}

fn assemble(recipe: &GeneratorRecipe) -> Result<TableFunction<Rat>> {
    let n = recipe.bounds.dim();
    match recipe.kind {
        GeneratorKind::QuadraticDominant => {
            let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
            let a = random_quadratic_mm(&mut rng, n);
            crate::function::materialize(&a, &recipe.bounds)
        }
        GeneratorKind::PrefixSeparable => {
            let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
            prefix_separable_table(&mut rng, &recipe.bounds)
        }
        GeneratorKind::MixedSum => {
            let quad = assemble(&GeneratorRecipe {
                kind: GeneratorKind::QuadraticDominant,
                bounds: recipe.bounds.clone(),
                seed: derive_seed(recipe.seed, 101),
            })?;
            let sep = assemble(&GeneratorRecipe {
                kind: GeneratorKind::PrefixSeparable,
                bounds: recipe.bounds.clone(),
                seed: derive_seed(recipe.seed, 202),
            })?;
            crate::ops::add(&quad, &sep)
        }
    }
}

/// Largest dimension the generators accept; tables beyond this get slow.
pub const MAX_GENERATOR_DIM: usize = 5;
/// Largest box side length the generators accept.
pub const MAX_GENERATOR_SIDE: i64 = 9;

/// Builds the requested random instance and re-checks it before handing it
/// out. A `GeneratorLimit` error means the recipe box is too big; an
/// `Internal` error means the generator itself is broken.
pub fn random_multimodular(recipe: &GeneratorRecipe) -> Result<TableFunction<Rat>> {
    let dim = recipe.bounds.dim();
    let side = (0..dim)
        .map(|i| recipe.bounds.upper()[i] - recipe.bounds.lower()[i] + 1)
        .max()
        .unwrap_or(0);
    if dim > MAX_GENERATOR_DIM || side > MAX_GENERATOR_SIDE {
        return Err(Error::GeneratorLimit {
            dim,
            side,
            max_dim: MAX_GENERATOR_DIM,
            max_side: MAX_GENERATOR_SIDE,
        });
    }
    let f = assemble(recipe)?;
    let verdict = is_multimodular(&f);
    if !verdict.holds {
        return Err(Error::Internal(format!(
            "generator {:?} (seed {}) produced a bad instance: {}",
            recipe.kind,
            recipe.seed,
            verdict
                .witness
                .map(|w| w.to_string())
                .unwrap_or_else(|| "no witness".to_string())
        )));
    }
    Ok(f)
}

/// Unconstrained random table; `inf_per_mille` entries per thousand are
/// infinite, with at least one entry forced finite.
pub fn random_table(
    rng: &mut ChaCha8Rng,
    bounds: &IntBox,
    inf_per_mille: u32,
) -> Result<TableFunction<Rat>> {
    let len = bounds.len()?;
    let mut values: Vec<Value<Rat>> = (0..len)
        .map(|_| {
            if rng.gen_range(0..1000) < inf_per_mille {
                Infinite
            } else {
                Finite(Rat::from_fraction(rng.gen_range(-8..=8), 2))
            }
        })
        .collect();
    if values.iter().all(|v| !v.is_finite()) {
        values[0] = Finite(Rat::from_int(0));
    }
    TableFunction::new(bounds.clone(), values)
}

/// Adds random noise to `hits` finite entries. The result usually leaves the
/// multimodular cone, which makes it a cheap near-miss negative.
pub fn perturb(
    f: &TableFunction<Rat>,
    rng: &mut ChaCha8Rng,
    hits: usize,
) -> Result<TableFunction<Rat>> {
    let mut values = f.values().to_vec();
    let mut finite: Vec<usize> = (0..values.len())
        .filter(|&i| matches!(values[i], Finite(_)))
        .collect();
    finite.shuffle(rng);
    for &idx in finite.iter().take(hits) {
        let noise = Rat::from_fraction(rng.gen_range(1..=6) * if rng.gen() { 1 } else { -1 }, 2);
        if let Finite(v) = &values[idx] {
            values[idx] = Finite(v.clone() + noise);
        }
    }
    TableFunction::new(f.domain().clone(), values)
}

/// Uniform point of the box.
pub fn random_point(rng: &mut ChaCha8Rng, bounds: &IntBox) -> Point {
    (0..bounds.dim())
        .map(|i| rng.gen_range(bounds.lower()[i]..=bounds.upper()[i]))
        .collect()
}
