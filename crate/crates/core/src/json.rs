//! JSON encodings of the data types.
//!
//! Integers are written as decimal strings inside matrices and wherever they
//! may be large; readers accept either strings or plain JSON integers.
//! Invariant factors of groups are written as numbers when they fit in a
//! `u64` and as strings otherwise.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::abgroups::{FgAbGroup, GradedAbGroup};
use crate::error::{Error, Result};
use crate::intlinalg::{Int, IntMatrix};
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::repmod::{BaseRing, RModule};

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| invalid(format!("missing field \"{key}\"")))
}

fn count(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| invalid(format!("\"{key}\" must be a non-negative integer")))
}

pub fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Int>()
            .map_err(|_| invalid(format!("not an integer: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Int::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Int::from(u))
            } else {
                Err(invalid(format!(
                    "not an integer: {n} (write large values as strings)"
                )))
            }
        }
        other => Err(invalid(format!("expected an integer, got {other}"))),
    }
}

pub fn int_to_json(x: &Int) -> Value {
    Value::String(x.to_string())
}

/// A number when it fits in a `u64`, else a string.
fn compact_int(x: &Int) -> Value {
    match x.to_u64() {
        Some(u) => json!(u),
        None => int_to_json(x),
    }
}

pub fn ints_from_json(v: &Value) -> Result<Vec<Int>> {
    v.as_array()
        .ok_or_else(|| invalid("expected an array of integers"))?
        .iter()
        .map(int_from_json)
        .collect()
}

pub fn ints_to_json(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

/// `{"rows", "cols", "data": [[...], ...]}`; `rows`/`cols` may be omitted when
/// `data` is nonempty.
pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let data = field(v, "data")?
        .as_array()
        .ok_or_else(|| invalid("\"data\" must be an array of rows"))?;
    let rows = match v.get("rows") {
        Some(_) => count(v, "rows")?,
        None => data.len(),
    };
    if data.len() != rows {
        return Err(invalid(format!(
            "declared {rows} rows, found {}",
            data.len()
        )));
    }
    let parsed: Vec<Vec<Int>> = data.iter().map(ints_from_json).collect::<Result<_>>()?;
    let cols = match v.get("cols") {
        Some(_) => count(v, "cols")?,
        None => parsed
            .first()
            .map(Vec::len)
            .ok_or_else(|| invalid("\"cols\" is required for a matrix without rows"))?,
    };
    if let Some(bad) = parsed.iter().position(|r| r.len() != cols) {
        return Err(invalid(format!("row {bad} does not have {cols} entries")));
    }
    IntMatrix::new(rows, cols, parsed.into_iter().flatten().collect())
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    let data: Vec<Value> = (0..m.rows()).map(|i| ints_to_json(m.row(i))).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "data": data})
}

/// `{"rank", "torsion"}` or `{"presentation": matrix}`.
pub fn group_from_json(v: &Value) -> Result<FgAbGroup> {
    if let Some(p) = v.get("presentation") {
        return Ok(FgAbGroup::from_presentation(matrix_from_json(p)?));
    }
    let rank = count(v, "rank")?;
    let torsion = match v.get("torsion") {
        Some(t) => ints_from_json(t)?,
        None => Vec::new(),
    };
    FgAbGroup::from_invariants(rank, &torsion)
}

pub fn group_to_json(g: &FgAbGroup) -> Value {
    let torsion: Vec<Value> = g.torsion().iter().map(compact_int).collect();
    json!({"rank": g.rank(), "torsion": torsion})
}

pub fn graded_from_json(v: &Value) -> Result<GradedAbGroup> {
    Ok(GradedAbGroup::new(
        group_from_json(field(v, "even")?)?,
        group_from_json(field(v, "odd")?)?,
    ))
}

pub fn graded_to_json(g: &GradedAbGroup) -> Value {
    json!({"even": group_to_json(&g.even), "odd": group_to_json(&g.odd)})
}

fn sized_matrix(v: &Value, key: &str, rows: usize, cols: usize) -> Result<IntMatrix> {
    let m = match field(v, key)? {
        // empty blocks may be given as bare `[]`
        Value::Array(a) if a.is_empty() => IntMatrix::zeros(rows, cols),
        other => matrix_from_json(other)?,
    };
    if m.shape() != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "\"{key}\" is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// `{"even_rank", "odd_rank", "d", "e"}`.
pub fn complex_from_json(v: &Value) -> Result<PeriodicComplex> {
    let n0 = count(v, "even_rank")?;
    let n1 = count(v, "odd_rank")?;
    let d = sized_matrix(v, "d", n1, n0)?;
    let e = sized_matrix(v, "e", n0, n1)?;
    PeriodicComplex::new(d, e)
}

pub fn complex_to_json(x: &PeriodicComplex) -> Value {
    json!({
        "even_rank": x.even_rank(),
        "odd_rank": x.odd_rank(),
        "d": matrix_to_json(x.d()),
        "e": matrix_to_json(x.e()),
    })
}

/// `{"f_even", "f_odd"}` between the given complexes.
pub fn chain_map_from_json(
    v: &Value,
    source: &PeriodicComplex,
    target: &PeriodicComplex,
) -> Result<ChainMap> {
    let f0 = sized_matrix(v, "f_even", target.even_rank(), source.even_rank())?;
    let f1 = sized_matrix(v, "f_odd", target.odd_rank(), source.odd_rank())?;
    ChainMap::new(source.clone(), target.clone(), f0, f1)
}

/// A chain map document that carries its own ends:
/// `{"source": complex, "target": complex, "f_even", "f_odd"}`.
pub fn standalone_chain_map_from_json(v: &Value) -> Result<ChainMap> {
    let source = complex_from_json(field(v, "source")?)?;
    let target = complex_from_json(field(v, "target")?)?;
    chain_map_from_json(v, &source, &target)
}

pub fn chain_map_to_json(f: &ChainMap) -> Value {
    json!({"f_even": matrix_to_json(f.f_even()), "f_odd": matrix_to_json(f.f_odd())})
}

pub fn ring_from_json(v: &Value) -> Result<BaseRing> {
    let kind = field(v, "kind")?
        .as_str()
        .ok_or_else(|| invalid("\"kind\" must be a string"))?;
    match kind {
        "quotient" => BaseRing::quotient(ints_from_json(field(v, "poly")?)?),
        "laurent" => Ok(BaseRing::Laurent),
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

pub fn ring_to_json(r: &BaseRing) -> Value {
    match r {
        BaseRing::Quotient { poly } => json!({"kind": "quotient", "poly": ints_to_json(poly)}),
        BaseRing::Laurent => json!({"kind": "laurent"}),
    }
}

/// `{"ring", "generators", "relations", "t_action"}`.
pub fn module_from_json(v: &Value) -> Result<RModule> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let n = count(v, "generators")?;
    let relations = match field(v, "relations")? {
        Value::Array(a) if a.is_empty() => IntMatrix::zeros(n, 0),
        other => matrix_from_json(other)?,
    };
    if relations.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "relations have {} rows for {n} generators",
            relations.rows()
        )));
    }
    let t = sized_matrix(v, "t_action", n, n)?;
    RModule::new(ring, FgAbGroup::from_presentation(relations), t)
}

pub fn module_to_json(m: &RModule) -> Value {
    let mut o = Map::new();
    o.insert("ring".into(), ring_to_json(m.ring()));
    o.insert("generators".into(), json!(m.group().num_generators()));
    o.insert("relations".into(), matrix_to_json(m.group().presentation()));
    o.insert("t_action".into(), matrix_to_json(m.t_action()));
    Value::Object(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_round_trip() {
        let m = IntMatrix::from_rows(&[[1, -2], [0, 3]]);
        let v = matrix_to_json(&m);
        assert_eq!(v["data"][0][1], json!("-2"));
        assert_eq!(matrix_from_json(&v).unwrap(), m);
        let numeric = json!({"data": [[1, -2], [0, 3]]});
        assert_eq!(matrix_from_json(&numeric).unwrap(), m);
        let big = json!({"rows": 1, "cols": 1, "data": [["123456789012345678901234567890"]]});
        assert_eq!(
            matrix_from_json(&big).unwrap()[(0, 0)].to_string(),
            "123456789012345678901234567890"
        );
        assert!(matrix_from_json(&json!({"rows": 2, "cols": 1, "data": [["1"]]})).is_err());
        assert!(matrix_from_json(&json!({"data": [["x"]]})).is_err());
        let empty = matrix_from_json(&json!({"rows": 0, "cols": 3, "data": []})).unwrap();
        assert_eq!(empty.shape(), (0, 3));
    }

    #[test]
    fn groups_round_trip() {
        let g = group_from_json(&json!({"rank": 1, "torsion": [6, "4"]})).unwrap();
        assert_eq!(group_to_json(&g), json!({"rank": 1, "torsion": [2, 12]}));
        let p =
            group_from_json(&json!({"presentation": {"data": [["2", "4"], ["6", "8"]]}})).unwrap();
        assert_eq!(group_to_json(&p), json!({"rank": 0, "torsion": [2, 4]}));
        assert!(group_from_json(&json!({"rank": -1})).is_err());
        let huge =
            FgAbGroup::from_invariants(0, &["100000000000000000000".parse().unwrap()]).unwrap();
        assert_eq!(
            group_to_json(&huge)["torsion"][0],
            json!("100000000000000000000")
        );
        assert!(group_from_json(&group_to_json(&huge))
            .unwrap()
            .is_isomorphic(&huge));
    }

    #[test]
    fn complexes_and_modules() {
        let v =
            json!({"even_rank": 1, "odd_rank": 1, "d": {"data": [["0"]]}, "e": {"data": [["2"]]}});
        let x = complex_from_json(&v).unwrap();
        assert!(x
            .homology_groups()
            .even
            .is_isomorphic(&FgAbGroup::cyclic(2)));
        assert_eq!(complex_from_json(&complex_to_json(&x)).unwrap(), x);
        let bad =
            json!({"even_rank": 1, "odd_rank": 1, "d": {"data": [["1"]]}, "e": {"data": [["2"]]}});
        assert!(matches!(
            complex_from_json(&bad),
            Err(Error::NotAComplex(_))
        ));

        let m = json!({
            "ring": {"kind": "quotient", "poly": ["-1", "0", "1"]},
            "generators": 1,
            "relations": [],
            "t_action": {"data": [["1"]]}
        });
        let module = module_from_json(&m).unwrap();
        let again = module_from_json(&module_to_json(&module)).unwrap();
        assert_eq!(again.ring(), module.ring());
        let laurent = json!({"ring": {"kind": "laurent"}, "generators": 1, "relations": [], "t_action": {"data": [["2"]]}});
        assert!(matches!(
            module_from_json(&laurent),
            Err(Error::InvalidModule(_))
        ));
    }
}
