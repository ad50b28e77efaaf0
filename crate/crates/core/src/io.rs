//! JSON serialization of functions and reports.
//!
//! The function dialect is exact: integers are bare JSON numbers, all other
//! rationals are "p/q" strings, and "inf" marks the infinite value. Floats
//! are rejected on input so a round trip never loses information.

use serde_json::{Map, Value as Json};

use crate::checks::LConvexVerdict;
use crate::error::{Error, Result};
use crate::function::{
    Evaluate, IndicatorSet, Piece, QuadraticFunction, SeparableFunction, TableFunction,
};
use crate::harness::closure::{row_pattern, ClosureReport, TABLE1_EXPECTED};
use crate::harness::repro::ReproReport;
use crate::lattice::IntBox;
use crate::minimize::MinimizeResult;
use crate::scalar::{parse_scalar, Rat, Scalar};
use crate::value::{Finite, Infinite, Value};
use crate::witness::{Verdict, Witness};

/// Any of the four function representations the dialect can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionData<T = Rat> {
    Table(TableFunction<T>),
    Quadratic(QuadraticFunction<T>),
    Separable(SeparableFunction<T>),
    Set(IndicatorSet),
}

impl<T: Scalar> FunctionData<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            FunctionData::Table(_) => "table",
            FunctionData::Quadratic(_) => "quadratic",
            FunctionData::Separable(_) => "separable",
            FunctionData::Set(_) => "set",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FunctionData::Table(f) => f.dim(),
            FunctionData::Quadratic(f) => f.dim(),
            FunctionData::Separable(f) => f.dim(),
            FunctionData::Set(s) => Evaluate::<T>::dim(s),
        }
    }
}

pub fn scalar_to_json<T: Scalar>(v: &T) -> Json {
    match v.as_exact_i64() {
        Some(i) => Json::from(i),
        None => Json::from(v.to_string()),
    }
}

pub fn value_to_json<T: Scalar>(v: &Value<T>) -> Json {
    match v {
        Finite(x) => scalar_to_json(x),
        Infinite => Json::from("inf"),
    }
}

fn scalar_from_json<T: Scalar>(j: &Json) -> Result<T> {
    match j {
        Json::Number(num) => num
            .as_i64()
            .map(T::from_int)
            .ok_or_else(|| Error::Parse(format!("non-integer number {num}; write rationals as \"p/q\" strings"))),
        Json::String(s) => parse_scalar(s).map_err(Error::Parse),
        other => Err(Error::Parse(format!("expected a number or \"p/q\" string, got {other}"))),
    }
}

fn value_from_json<T: Scalar>(j: &Json) -> Result<Value<T>> {
    if j.as_str() == Some("inf") {
        return Ok(Infinite);
    }
    scalar_from_json(j).map(Finite)
}

fn as_object<'a>(j: &'a Json, what: &str) -> Result<&'a Map<String, Json>> {
    j.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON object")))
}

fn field<'a>(m: &'a Map<String, Json>, key: &str) -> Result<&'a Json> {
    m.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn int_from_json(j: &Json, what: &str) -> Result<i64> {
    j.as_i64()
        .ok_or_else(|| Error::Parse(format!("{what} must be an integer")))
}

fn int_array(j: &Json, what: &str) -> Result<Vec<i64>> {
    j.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?
        .iter()
        .map(|v| int_from_json(v, what))
        .collect()
}

fn scalar_array<T: Scalar>(j: &Json, what: &str) -> Result<Vec<T>> {
    j.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

/// Parses one function object in the dialect.
pub fn parse_function<T: Scalar>(j: &Json) -> Result<FunctionData<T>> {
    let m = as_object(j, "a function")?;
    let kind = field(m, "kind")?
        .as_str()
        .ok_or_else(|| Error::Parse("\"kind\" must be a string".to_string()))?;
    match kind {
        "table" => {
            let lower = int_array(field(m, "lower")?, "\"lower\"")?;
            let upper = int_array(field(m, "upper")?, "\"upper\"")?;
            let values = field(m, "values")?
                .as_array()
                .ok_or_else(|| Error::Parse("\"values\" must be an array".to_string()))?
                .iter()
                .map(value_from_json)
                .collect::<Result<Vec<Value<T>>>>()?;
            Ok(FunctionData::Table(TableFunction::new(
                IntBox::new(lower, upper)?,
                values,
            )?))
        }
        "quadratic" => {
            let rows = field(m, "matrix")?
                .as_array()
                .ok_or_else(|| Error::Parse("\"matrix\" must be an array of rows".to_string()))?
                .iter()
                .map(|row| scalar_array(row, "a matrix row"))
                .collect::<Result<Vec<Vec<T>>>>()?;
            let linear = match m.get("linear") {
                Some(j) => Some(scalar_array(j, "\"linear\"")?),
                None => None,
            };
            Ok(FunctionData::Quadratic(QuadraticFunction::new(rows, linear)?))
        }
        "separable" => {
            let pieces = field(m, "pieces")?
                .as_array()
                .ok_or_else(|| Error::Parse("\"pieces\" must be an array".to_string()))?
                .iter()
                .map(|p| {
                    let pm = as_object(p, "a piece")?;
                    Ok(Piece {
                        start: int_from_json(field(pm, "start")?, "\"start\"")?,
                        values: scalar_array(field(pm, "values")?, "piece \"values\"")?,
                    })
                })
                .collect::<Result<Vec<Piece<T>>>>()?;
            Ok(FunctionData::Separable(SeparableFunction::new(pieces)?))
        }
        "set" => {
            let points = field(m, "points")?
                .as_array()
                .ok_or_else(|| Error::Parse("\"points\" must be an array".to_string()))?
                .iter()
                .map(|p| int_array(p, "a point"))
                .collect::<Result<Vec<Vec<i64>>>>()?;
            Ok(FunctionData::Set(IndicatorSet::new(points)?))
        }
        other => Err(Error::Parse(format!(
            "unknown kind {other:?}; expected table, quadratic, separable, or set"
        ))),
    }
}

pub fn parse_function_str<T: Scalar>(s: &str) -> Result<FunctionData<T>> {
    let j: Json =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    parse_function(&j)
}

pub fn encode_table<T: Scalar>(f: &TableFunction<T>) -> Json {
    let mut m = Map::new();
    m.insert("kind".into(), Json::from("table"));
    m.insert("lower".into(), Json::from(f.domain().lower().to_vec()));
    m.insert("upper".into(), Json::from(f.domain().upper().to_vec()));
    m.insert(
        "values".into(),
        Json::Array(f.values().iter().map(value_to_json).collect()),
    );
    Json::Object(m)
}

pub fn encode_quadratic<T: Scalar>(a: &QuadraticFunction<T>) -> Json {
    let mut m = Map::new();
    m.insert("kind".into(), Json::from("quadratic"));
    m.insert(
        "matrix".into(),
        Json::Array(
            a.matrix()
                .iter()
                .map(|row| Json::Array(row.iter().map(scalar_to_json).collect()))
                .collect(),
        ),
    );
    if let Some(c) = a.linear() {
        m.insert(
            "linear".into(),
            Json::Array(c.iter().map(scalar_to_json).collect()),
        );
    }
    Json::Object(m)
}

pub fn encode_separable<T: Scalar>(f: &SeparableFunction<T>) -> Json {
    let mut m = Map::new();
    m.insert("kind".into(), Json::from("separable"));
    m.insert(
        "pieces".into(),
        Json::Array(
            f.pieces()
                .iter()
                .map(|p| {
                    let mut pm = Map::new();
                    pm.insert("start".into(), Json::from(p.start));
                    pm.insert(
                        "values".into(),
                        Json::Array(p.values.iter().map(scalar_to_json).collect()),
                    );
                    Json::Object(pm)
                })
                .collect(),
        ),
    );
    Json::Object(m)
}

pub fn encode_set(s: &IndicatorSet) -> Json {
    let mut m = Map::new();
    m.insert("kind".into(), Json::from("set"));
    m.insert(
        "points".into(),
        Json::Array(s.points().iter().map(|p| Json::from(p.clone())).collect()),
    );
    Json::Object(m)
}

pub fn encode_function<T: Scalar>(f: &FunctionData<T>) -> Json {
    match f {
        FunctionData::Table(t) => encode_table(t),
        FunctionData::Quadratic(q) => encode_quadratic(q),
        FunctionData::Separable(s) => encode_separable(s),
        FunctionData::Set(s) => encode_set(s),
    }
}

pub fn to_pretty_string(j: &Json) -> String {
    let mut s = serde_json::to_string_pretty(j).expect("report values are valid JSON");
    s.push('\n');
    s
}

pub fn encode_witness<T: Scalar>(w: &Witness<T>) -> Json {
    let mut m = Map::new();
    m.insert("kind".into(), Json::from(w.kind.name()));
    m.insert(
        "points".into(),
        Json::Array(w.points.iter().map(|p| Json::from(p.clone())).collect()),
    );
    m.insert("lhs".into(), value_to_json(&w.lhs));
    m.insert("rhs".into(), value_to_json(&w.rhs));
    m.insert("description".into(), Json::from(w.to_string()));
    Json::Object(m)
}

pub fn encode_verdict<T: Scalar>(v: &Verdict<T>) -> Json {
    let mut m = Map::new();
    m.insert("holds".into(), Json::from(v.holds));
    m.insert("checked".into(), Json::from(v.checked));
    m.insert(
        "witness".into(),
        v.witness.as_ref().map_or(Json::Null, encode_witness),
    );
    Json::Object(m)
}

pub fn encode_l_convex_verdict<T: Scalar>(v: &LConvexVerdict<T>) -> Json {
    let mut m = match encode_verdict(&v.verdict) {
        Json::Object(m) => m,
        _ => unreachable!(),
    };
    m.insert(
        "increment".into(),
        v.increment.as_ref().map_or(Json::Null, scalar_to_json),
    );
    m.insert(
        "translation_untestable".into(),
        Json::from(v.translation_untestable),
    );
    Json::Object(m)
}

pub fn encode_minimize<T: Scalar>(
    r: &MinimizeResult<T>,
    boxx: &IntBox,
    verified: Option<bool>,
) -> Json {
    let mut m = Map::new();
    m.insert("point".into(), Json::from(r.point.clone()));
    m.insert("value".into(), value_to_json(&r.value));
    m.insert("steps".into(), Json::from(r.steps));
    m.insert("lower".into(), Json::from(boxx.lower().to_vec()));
    m.insert("upper".into(), Json::from(boxx.upper().to_vec()));
    m.insert("verified".into(), verified.map_or(Json::Null, Json::from));
    Json::Object(m)
}

pub fn encode_closure_report(r: &ClosureReport) -> Json {
    let mut m = Map::new();
    m.insert("op".into(), Json::from(r.op.name()));
    m.insert(
        "expected".into(),
        Json::from(if r.expected_preserved() { "Y" } else { "N" }),
    );
    m.insert("observed".into(), Json::from(r.letter()));
    m.insert("trials".into(), Json::from(r.trials));
    m.insert("preserved".into(), Json::from(r.preserved));
    m.insert("violated".into(), Json::from(r.violated));
    m.insert(
        "matches_expectation".into(),
        Json::from(r.matches_expectation()),
    );
    m.insert(
        "sample_witnesses".into(),
        Json::Array(
            r.sample_witnesses
                .iter()
                .map(|(t, w)| {
                    let mut wm = match encode_witness(w) {
                        Json::Object(wm) => wm,
                        _ => unreachable!(),
                    };
                    wm.insert("trial".into(), Json::from(*t));
                    Json::Object(wm)
                })
                .collect(),
        ),
    );
    m.insert(
        "fixture_witness".into(),
        r.fixture_witness.as_ref().map_or(Json::Null, encode_witness),
    );
    Json::Object(m)
}

pub fn encode_table1(reports: &[ClosureReport]) -> Json {
    let mut m = Map::new();
    m.insert(
        "columns".into(),
        Json::Array(reports.iter().map(encode_closure_report).collect()),
    );
    m.insert(
        "row".into(),
        Json::Array(row_pattern(reports).iter().map(|s| Json::from(*s)).collect()),
    );
    m.insert(
        "expected".into(),
        Json::Array(TABLE1_EXPECTED.iter().map(|s| Json::from(*s)).collect()),
    );
    m.insert(
        "match".into(),
        Json::from(
            row_pattern(reports) == TABLE1_EXPECTED.to_vec()
                && reports.iter().all(|r| r.matches_expectation()),
        ),
    );
    Json::Object(m)
}

pub fn encode_repro(r: &ReproReport) -> Json {
    let mut m = Map::new();
    m.insert("id".into(), Json::from(r.id.token()));
    m.insert("description".into(), Json::from(r.id.describe()));
    m.insert("ok".into(), Json::from(r.ok));
    m.insert(
        "checks".into(),
        Json::Array(
            r.checks
                .iter()
                .map(|c| {
                    let mut cm = Map::new();
                    cm.insert("name".into(), Json::from(c.name.clone()));
                    cm.insert("ok".into(), Json::from(c.ok));
                    cm.insert("detail".into(), Json::from(c.detail.clone()));
                    Json::Object(cm)
                })
                .collect(),
        ),
    );
    Json::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::is_multimodular;
    use crate::fixtures;
    use crate::function::materialize;

    fn round_trip(f: &FunctionData) -> FunctionData {
        let s = to_pretty_string(&encode_function(f));
        parse_function_str(&s).unwrap()
    }

    #[test]
    fn every_kind_round_trips_exactly() {
        let table = FunctionData::Table(fixtures::sep_squares_table());
        assert_eq!(round_trip(&table), table);
        let quad = FunctionData::Quadratic(fixtures::quad4_swept());
        assert_eq!(round_trip(&quad), quad);
        let sep = FunctionData::Separable(fixtures::sep_squares());
        assert_eq!(round_trip(&sep), sep);
        let set = FunctionData::Set(fixtures::s1_plus_s2());
        assert_eq!(round_trip(&set), set);
    }

    #[test]
    fn halves_serialize_as_fraction_strings() {
        let j = encode_quadratic(&fixtures::quad4_swept());
        assert_eq!(j["matrix"][0][0], Json::from("5/2"));
        // integer entries stay bare numbers
        assert_eq!(j["matrix"][1][1], Json::from(1));
    }

    #[test]
    fn infinity_round_trips_in_tables() {
        let t = materialize::<Rat>(
            &fixtures::s1(),
            &fixtures::s1().bounding_box().inflate(1),
        )
        .unwrap();
        let data = FunctionData::Table(t.clone());
        let j = encode_function(&data);
        assert!(j["values"].as_array().unwrap().contains(&Json::from("inf")));
        assert_eq!(round_trip(&data), data);
    }

    #[test]
    fn floats_and_junk_are_rejected() {
        assert!(matches!(
            parse_function_str::<Rat>(r#"{"kind":"table","lower":[0],"upper":[0],"values":[0.5]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_function_str::<Rat>(r#"{"kind":"quadratic","matrix":[["1/0"]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_function_str::<Rat>(r#"{"kind":"mystery"}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_function_str::<Rat>(r#"[1,2,3]"#),
            Err(Error::Parse(_))
        ));
        let e = parse_function_str::<Rat>(r#"{"kind":"table","lower":[0]}"#).unwrap_err();
        assert!(e.to_string().contains("upper"), "{e}");
    }

    #[test]
    fn structural_validation_still_applies() {
        // right shape, wrong count: the table constructor catches it
        assert!(matches!(
            parse_function_str::<Rat>(
                r#"{"kind":"table","lower":[0,0],"upper":[1,1],"values":[1,2,3]}"#
            ),
            Err(Error::TableSize { expected: 4, got: 3 })
        ));
        // concave piece: the separable constructor catches it
        assert!(matches!(
            parse_function_str::<Rat>(
                r#"{"kind":"separable","pieces":[{"start":0,"values":[0,2,2]}]}"#
            ),
            Err(Error::NonConvexPiece { piece: 0, t: 1 })
        ));
    }

    #[test]
    fn verdict_encoding_carries_the_witness() {
        let table = materialize::<Rat>(
            &fixtures::s1_plus_s2(),
            &fixtures::s1_plus_s2().bounding_box().inflate(1),
        )
        .unwrap();
        let v = is_multimodular(&table);
        let j = encode_verdict(&v);
        assert_eq!(j["holds"], Json::from(false));
        let w = v.witness.unwrap();
        assert_eq!(j["witness"]["description"], Json::from(w.to_string()));
        assert_eq!(j["witness"]["kind"], Json::from("multimodular"));

        let ok = Verdict::<Rat>::pass(7);
        let j = encode_verdict(&ok);
        assert_eq!(j["witness"], Json::Null);
        assert_eq!(j["checked"], Json::from(7u64));
    }
}
