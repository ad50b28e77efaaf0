//! Deterministic reproduction scenarios.
//!
//! Each scenario replays a fixed pipeline against the frozen fixtures and
//! compares every intermediate artifact: matrix entries, verdicts, offending
//! index pairs, violation points. The scenario tokens are part of the command
//! line contract and must stay stable for scripting.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::closure::{row_pattern, table1_row, render_table1, TABLE1_EXPECTED};
use crate::checks::{
    is_l_class, is_lnat, is_lnat_set, is_multimodular, is_multimodular_set,
    is_quadratic_multimodular, validate_table_witness,
};
use crate::error::Result;
use crate::fixtures;
use crate::function::{materialize, Evaluate, IndicatorSet, QuadraticFunction, TableFunction};
use crate::lattice::{ceil_avg, floor_avg, IntBox, Point};
use crate::ops;
use crate::scalar::{Rat, Scalar};
use crate::transforms::{bidiagonal_d, inverse_d, reversal_t, to_lnat, conjugate_quadratic, IntMatrix};
use crate::witness::Verdict;

/// The replayable scenarios, each with a stable command line token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReproId {
    /// a variable transposition breaks an otherwise multimodular quadratic
    Transposition,
    /// sweeping out a variable versus integer projection on a 4-variable
    /// quadratic
    SweepProjection,
    /// a sum of two well-behaved sets that is not well-behaved
    SumOfSets,
    /// the variable-reversal map on the cumulative side
    ReversalMatrix,
    /// the operation summary row with certified non-closure columns
    OperationTable,
}

impl ReproId {
    pub const ALL: [ReproId; 5] = [
        ReproId::Transposition,
        ReproId::SweepProjection,
        ReproId::SumOfSets,
        ReproId::ReversalMatrix,
        ReproId::OperationTable,
    ];

    /// stable catalog token used on the command line
    pub fn token(self) -> &'static str {
        match self {
            ReproId::Transposition => "3.1",
            ReproId::SweepProjection => "4.1",
            ReproId::SumOfSets => "4.2",
            ReproId::ReversalMatrix => "T-n4",
            ReproId::OperationTable => "table-1",
        }
    }

    pub fn parse(s: &str) -> Option<ReproId> {
        ReproId::ALL.into_iter().find(|id| id.token() == s)
    }

    pub fn describe(self) -> &'static str {
        match self {
            ReproId::Transposition => {
                "transposing two variables of a multimodular quadratic breaks it"
            }
            ReproId::SweepProjection => {
                "sweep-out keeps a quadratic multimodular, integer projection does not"
            }
            ReproId::SumOfSets => "a sum of two multimodular sets need not be multimodular",
            ReproId::ReversalMatrix => "the reversal map conjugated to the cumulative side",
            ReproId::OperationTable => "operation summary row with certified failures",
        }
    }
}

/// One named comparison inside a scenario.
#[derive(Debug, Clone)]
pub struct ReproCheck {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// A scenario outcome; `ok` only when every check passed.
#[derive(Debug, Clone)]
pub struct ReproReport {
    pub id: ReproId,
    pub checks: Vec<ReproCheck>,
    pub ok: bool,
}

impl ReproReport {
    pub fn render(&self) -> String {
        let mut out = format!("scenario {}: {}\n", self.id.token(), self.id.describe());
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if c.ok { "ok" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(if self.ok { "result: match\n" } else { "result: MISMATCH\n" });
        out
    }
}

struct Checks(Vec<ReproCheck>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn push(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.0.push(ReproCheck {
            name: name.to_string(),
            ok,
            detail: detail.into(),
        });
    }

    fn into_report(self, id: ReproId) -> ReproReport {
        let ok = self.0.iter().all(|c| c.ok);
        ReproReport {
            id,
            checks: self.0,
            ok,
        }
    }
}

fn format_quad(a: &QuadraticFunction) -> String {
    let rows: Vec<String> = a
        .matrix()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn format_set(s: &IndicatorSet) -> String {
    let pts: Vec<String> = s
        .points()
        .iter()
        .map(|p| {
            let cells: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            format!("({})", cells.join(","))
        })
        .collect();
    format!("{{{}}}", pts.join(", "))
}

fn describe_verdict(v: &Verdict) -> String {
    match &v.witness {
        Some(w) => w.to_string(),
        None => format!("no violation in {} checks", v.checked),
    }
}

/// first witness point read as a 1-based label pair (i, j)
fn witness_labels(v: &Verdict) -> Option<(i64, i64)> {
    let w = v.witness.as_ref()?;
    let p = w.points.first()?;
    Some((p[0], p[1]))
}

fn validated_fail(v: &Verdict, table: &TableFunction) -> bool {
    !v.holds
        && v.witness
            .as_ref()
            .is_some_and(|w| validate_table_witness(w, table))
}

fn transposition() -> Result<ReproReport> {
    let mut c = Checks::new();
    let base = fixtures::quad3();
    let swapped = fixtures::quad3_swapped();

    let v = is_quadratic_multimodular(&base);
    c.push(
        "base quadratic satisfies the entry criterion",
        v.holds,
        describe_verdict(&v),
    );

    let v = is_quadratic_multimodular(&swapped);
    c.push(
        "swapped quadratic fails the criterion at (1,3)",
        !v.holds && witness_labels(&v) == Some((1, 3)),
        describe_verdict(&v),
    );

    let b = conjugate_quadratic(&base);
    c.push(
        "conjugate of the base equals the expected matrix",
        b == fixtures::conj3(),
        format_quad(&b),
    );
    let v = is_l_class(&b);
    c.push(
        "conjugate of the base passes the class check",
        v.holds,
        describe_verdict(&v),
    );

    let bs = conjugate_quadratic(&swapped);
    c.push(
        "conjugate of the swapped matrix equals the expected matrix",
        bs == fixtures::conj3_swapped(),
        format_quad(&bs),
    );
    let v = is_l_class(&bs);
    let one = Rat::from_int(1);
    c.push(
        "conjugate of the swapped matrix leaves the class at (1,3), entries +1",
        !v.holds
            && witness_labels(&v) == Some((1, 3))
            && *bs.entry(0, 2) == one
            && *bs.entry(2, 0) == one,
        describe_verdict(&v),
    );

    let boxx = IntBox::cube(3, -2, 2)?;
    let table = materialize(&base, &boxx)?;
    let v = is_multimodular(&table);
    c.push(
        "table check on [-2,2]^3 agrees for the base",
        v.holds,
        describe_verdict(&v),
    );

    let transposed = ops::permute_vars(&table, &[1, 0, 2])?;
    let v = is_multimodular(&transposed);
    c.push(
        "table check on [-2,2]^3 rejects the transposed table",
        validated_fail(&v, &transposed),
        describe_verdict(&v),
    );

    Ok(c.into_report(ReproId::Transposition))
}

fn sweep_projection() -> Result<ReproReport> {
    let mut c = Checks::new();
    let base = fixtures::quad4();

    let v = is_quadratic_multimodular(&base);
    c.push(
        "base quadratic satisfies the entry criterion",
        v.holds,
        describe_verdict(&v),
    );

    let table = materialize(&base, &IntBox::cube(4, -2, 2)?)?;
    let v = is_multimodular(&table);
    c.push(
        "table check on [-2,2]^4 agrees",
        v.holds,
        describe_verdict(&v),
    );

    let swept = ops::sweep_out(&base, 2)?;
    c.push(
        "sweeping out the third variable gives the expected matrix",
        swept == fixtures::quad4_swept(),
        format_quad(&swept),
    );

    let v = is_quadratic_multimodular(&swept);
    c.push(
        "swept matrix fails the criterion at (1,2)",
        !v.holds && witness_labels(&v) == Some((1, 2)),
        describe_verdict(&v),
    );

    let b = conjugate_quadratic(&base);
    let vb = is_l_class(&b);
    c.push(
        "conjugate of the base equals the expected matrix and passes the class check",
        b == fixtures::conj4() && vb.holds,
        format_quad(&b),
    );

    let bs = conjugate_quadratic(&swept);
    let vs = is_l_class(&bs);
    c.push(
        "conjugate of the swept matrix equals the expected matrix and fails at (1,2)",
        bs == fixtures::conj4_swept() && !vs.holds && witness_labels(&vs) == Some((1, 2)),
        format!("{}; {}", format_quad(&bs), describe_verdict(&vs)),
    );

    let big = materialize(&base, &IntBox::cube(4, -3, 3)?)?;
    let projected = ops::project(&big, &[0, 1, 3])?;
    let v = is_multimodular(&projected);
    c.push(
        "integer projection keeping variables 1,2,4 is not multimodular",
        validated_fail(&v, &projected),
        describe_verdict(&v),
    );

    Ok(c.into_report(ReproId::SweepProjection))
}

fn sum_of_sets() -> Result<ReproReport> {
    let mut c = Checks::new();

    let sum_s = ops::minkowski_sum(&fixtures::s1(), &fixtures::s2())?;
    c.push(
        "first sum of sets matches",
        sum_s == fixtures::s1_plus_s2(),
        format_set(&sum_s),
    );

    let sum_t = ops::minkowski_sum(&fixtures::t1(), &fixtures::t2())?;
    c.push(
        "second sum of sets matches",
        sum_t == fixtures::t1_plus_t2(),
        format_set(&sum_t),
    );

    let cumulative = |s: &IndicatorSet| -> Result<IndicatorSet> {
        let m = inverse_d(3);
        IndicatorSet::new(s.points().iter().map(|p| m.apply(p)).collect())
    };
    c.push(
        "running sums carry the difference-side sets to the cumulative ones",
        cumulative(&fixtures::s1())? == fixtures::t1()
            && cumulative(&fixtures::s2())? == fixtures::t2()
            && cumulative(&sum_s)? == fixtures::t1_plus_t2(),
        "p = (x1, x1+x2, x1+x2+x3) pointwise".to_string(),
    );

    let v1: Verdict = is_multimodular_set(&fixtures::s1());
    let v2: Verdict = is_multimodular_set(&fixtures::s2());
    c.push(
        "both summand indicators are multimodular",
        v1.holds && v2.holds,
        format!("{} and {} checks", v1.checked, v2.checked),
    );

    let sum_table = materialize(
        &fixtures::s1_plus_s2(),
        &fixtures::s1_plus_s2().bounding_box().inflate(1),
    )?;
    let v = is_multimodular(&sum_table);
    c.push(
        "the sum indicator is not multimodular",
        validated_fail(&v, &sum_table),
        describe_verdict(&v),
    );

    let v1: Verdict = is_lnat_set(&fixtures::t1());
    let v2: Verdict = is_lnat_set(&fixtures::t2());
    c.push(
        "both cumulative summands pass the midpoint check",
        v1.holds && v2.holds,
        format!("{} and {} checks", v1.checked, v2.checked),
    );

    let cum_table = materialize(
        &fixtures::t1_plus_t2(),
        &fixtures::t1_plus_t2().bounding_box().inflate(1),
    )?;
    let v = is_lnat(&cum_table);
    let expected_pair = v.witness.as_ref().is_some_and(|w| {
        w.points == vec![vec![0, 1, 1], vec![1, 1, 0]]
            && ceil_avg(&w.points[0], &w.points[1]) == vec![1, 1, 1]
            && floor_avg(&w.points[0], &w.points[1]) == vec![0, 1, 0]
    });
    c.push(
        "the cumulative sum fails the midpoint check at the expected pair",
        !v.holds && expected_pair,
        describe_verdict(&v),
    );

    let a: TableFunction = materialize(&fixtures::s1(), &fixtures::s1().bounding_box())?;
    let b = materialize(&fixtures::s2(), &fixtures::s2().bounding_box())?;
    let conv = ops::convolve(&a, &b)?;
    let direct = materialize(&fixtures::s1_plus_s2(), conv.domain())?;
    c.push(
        "indicator convolution equals the sum indicator",
        conv == direct,
        format!("compared on {:?}..{:?}", conv.domain().lower(), conv.domain().upper()),
    );

    Ok(c.into_report(ReproId::SumOfSets))
}

fn reversal_matrix() -> Result<ReproReport> {
    let mut c = Checks::new();

    let t4 = reversal_t(4);
    let expected4 = vec![
        vec![0, 0, -1, 1],
        vec![0, -1, 0, 1],
        vec![-1, 0, 0, 1],
        vec![0, 0, 0, 1],
    ];
    c.push(
        "4-variable reversal matrix equals the expected literal",
        t4.entries == expected4,
        format!("{:?}", t4.entries),
    );

    let factors = (1..=8).all(|n| {
        let product = inverse_d(n)
            .mul(&IntMatrix::anti_identity(n))
            .mul(&bidiagonal_d(n));
        reversal_t(n) == product
    });
    c.push(
        "closed form factors through the triangular change of variables",
        factors,
        "checked for 1 through 8 variables",
    );

    c.push(
        "small cases match",
        reversal_t(3).entries == vec![vec![0, -1, 1], vec![-1, 0, 1], vec![0, 0, 1]]
            && reversal_t(1).entries == vec![vec![1]],
        format!("{:?}", reversal_t(3).entries),
    );

    let f = materialize(&fixtures::quad3(), &IntBox::cube(3, -2, 2)?)?;
    let g = to_lnat(&f)?;
    let g_rev = to_lnat(&ops::reverse_vars(&f)?)?;
    let t3 = reversal_t(3);
    let window = g_rev.domain().inflate(1);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let agreed = (0..20).all(|_| {
        let p: Point = (0..3)
            .map(|i| rng.gen_range(window.lower()[i]..=window.upper()[i]))
            .collect();
        g_rev.eval(&p) == g.eval(&t3.apply(&p))
    });
    c.push(
        "reversed cumulative values equal the original composed with the map",
        agreed,
        "20 sampled points, including out-of-window ones",
    );

    Ok(c.into_report(ReproId::ReversalMatrix))
}

fn operation_table() -> Result<ReproReport> {
    let mut c = Checks::new();
    // fixed trial count and seed keep this scenario byte-reproducible
    let reports = table1_row(10, 1)?;
    c.push(
        "summary row matches the expected pattern",
        row_pattern(&reports) == TABLE1_EXPECTED.to_vec(),
        row_pattern(&reports).join(" "),
    );
    c.push(
        "preserving columns saw no violations, failing columns are certified",
        reports.iter().all(|r| r.matches_expectation()),
        render_table1(&reports),
    );
    Ok(c.into_report(ReproId::OperationTable))
}

/// Replays the scenario and reports every comparison.
pub fn repro(id: ReproId) -> Result<ReproReport> {
    match id {
        ReproId::Transposition => transposition(),
        ReproId::SweepProjection => sweep_projection(),
        ReproId::SumOfSets => sum_of_sets(),
        ReproId::ReversalMatrix => reversal_matrix(),
        ReproId::OperationTable => operation_table(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        let tokens: Vec<&str> = ReproId::ALL.iter().map(|id| id.token()).collect();
        assert_eq!(tokens, vec!["3.1", "4.1", "4.2", "T-n4", "table-1"]);
        for id in ReproId::ALL {
            assert_eq!(ReproId::parse(id.token()), Some(id));
        }
        assert_eq!(ReproId::parse("9.9"), None);
    }

    #[test]
    fn transposition_scenario_matches() {
        let report = repro(ReproId::Transposition).unwrap();
        assert!(report.ok, "{}", report.render());
        assert_eq!(report.checks.len(), 8);
    }

    #[test]
    fn sum_of_sets_scenario_matches() {
        let report = repro(ReproId::SumOfSets).unwrap();
        assert!(report.ok, "{}", report.render());
        assert_eq!(report.checks.len(), 8);
    }

    #[test]
    fn reversal_scenario_matches() {
        let report = repro(ReproId::ReversalMatrix).unwrap();
        assert!(report.ok, "{}", report.render());
    }

    #[test]
    fn sweep_projection_scenario_matches() {
        let report = repro(ReproId::SweepProjection).unwrap();
        assert!(report.ok, "{}", report.render());
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn operation_table_scenario_matches() {
        let report = repro(ReproId::OperationTable).unwrap();
        assert!(report.ok, "{}", report.render());
    }

    #[test]
    fn rendering_marks_failures() {
        let mut c = Checks::new();
        c.push("always", false, "detail");
        let r = c.into_report(ReproId::Transposition);
        assert!(!r.ok);
        assert!(r.render().contains("FAIL"));
        assert!(r.render().contains("MISMATCH"));
    }
}
