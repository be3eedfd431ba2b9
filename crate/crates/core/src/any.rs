//! Model-tagged elements, the JSON interchange format of the command line
//! front end.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CrystalError, Result};
use crate::gt::GtPattern;
use crate::matrix::BitMatrix;
use crate::tableau::Ssyt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Tableau,
    Matrix,
    Tensor,
    Gt,
}

impl FromStr for Model {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tableau" => Ok(Model::Tableau),
            "matrix" => Ok(Model::Matrix),
            "tensor" => Ok(Model::Tensor),
            "gt" => Ok(Model::Gt),
            _ => Err(CrystalError::Precondition(format!("unknown model {s:?}"))),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Model::Tableau => "tableau",
            Model::Matrix => "matrix",
            Model::Tensor => "tensor",
            Model::Gt => "gt",
        };
        f.write_str(name)
    }
}

/// An element of one of the shipped models. A tensor element is a list of
/// tableaux of a common rank, leftmost factor first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum AnyElement {
    Tableau(Ssyt),
    Matrix(BitMatrix),
    Tensor { factors: Vec<Ssyt> },
    Gt(GtPattern),
}

impl AnyElement {
    pub fn model(&self) -> Model {
        match self {
            AnyElement::Tableau(_) => Model::Tableau,
            AnyElement::Matrix(_) => Model::Matrix,
            AnyElement::Tensor { .. } => Model::Tensor,
            AnyElement::Gt(_) => Model::Gt,
        }
    }

    /// Reads an element. Besides the tagged form, the untagged schema of the
    /// expected model is accepted, and so are bare row lists: `[[0,1],[1,0]]`
    /// for a matrix, or `[[1,1],[2]]` for a tableau when `rank` is given.
    pub fn from_json(value: Value, expected: Option<Model>, rank: Option<usize>) -> Result<Self> {
        let bad = |e: serde_json::Error| CrystalError::InvalidInput(e.to_string());
        if value.get("model").is_some() {
            let x: AnyElement = serde_json::from_value(value).map_err(bad)?;
            if let Some(model) = expected.filter(|&m| m != x.model()) {
                return Err(CrystalError::InvalidInput(format!(
                    "expected a {model} element, found a {}",
                    x.model()
                )));
            }
            return Ok(x);
        }
        let model = expected.ok_or_else(|| {
            CrystalError::InvalidInput("untagged input needs an explicit model".into())
        })?;
        let need_rank = || {
            rank.ok_or_else(|| CrystalError::InvalidInput(format!("a bare {model} needs a rank")))
        };
        match (model, value) {
            (Model::Matrix, Value::Array(rows)) => {
                let rows: Vec<Vec<u8>> =
                    serde_json::from_value(Value::Array(rows)).map_err(bad)?;
                let m = rows.first().map_or(0, Vec::len);
                Ok(AnyElement::Matrix(BitMatrix::new(rows.len(), m, &rows)?))
            }
            (Model::Tableau, Value::Array(rows)) => {
                let rows: Vec<Vec<usize>> =
                    serde_json::from_value(Value::Array(rows)).map_err(bad)?;
                Ok(AnyElement::Tableau(Ssyt::new(need_rank()?, rows)?))
            }
            (Model::Gt, Value::Array(rows)) => {
                let rows: Vec<Vec<usize>> =
                    serde_json::from_value(Value::Array(rows)).map_err(bad)?;
                Ok(AnyElement::Gt(GtPattern::new(rows.len(), rows)?))
            }
            (Model::Tensor, Value::Array(factors)) => {
                let rank = need_rank()?;
                let factors = factors
                    .into_iter()
                    .map(|f| {
                        let rows: Vec<Vec<usize>> = serde_json::from_value(f).map_err(bad)?;
                        Ssyt::new(rank, rows)
                    })
                    .collect::<Result<_>>()?;
                Ok(AnyElement::Tensor { factors })
            }
            (Model::Tableau, v) => Ok(AnyElement::Tableau(serde_json::from_value(v).map_err(bad)?)),
            (Model::Matrix, v) => Ok(AnyElement::Matrix(serde_json::from_value(v).map_err(bad)?)),
            (Model::Gt, v) => Ok(AnyElement::Gt(serde_json::from_value(v).map_err(bad)?)),
            (Model::Tensor, v) => {
                let mut tagged = v;
                if let Value::Object(map) = &mut tagged {
                    map.insert("model".into(), Value::String("tensor".into()));
                }
                serde_json::from_value(tagged).map_err(bad)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("elements serialize")
    }
}

impl fmt::Display for AnyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyElement::Tableau(t) => write!(f, "{t}"),
            AnyElement::Matrix(x) => write!(f, "{x}"),
            AnyElement::Gt(x) => write!(f, "{x}"),
            AnyElement::Tensor { factors } => {
                let parts: Vec<String> = factors.iter().map(Ssyt::label).collect();
                write!(f, "{}", parts.join(" ⊗ "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tagged_and_bare_forms() {
        let tagged = json!({ "model": "matrix", "n": 1, "m": 2, "rows": [[0, 1]] });
        let x = AnyElement::from_json(tagged, None, None).unwrap();
        let bare = AnyElement::from_json(json!([[0, 1]]), Some(Model::Matrix), None).unwrap();
        assert_eq!(x, bare);
        assert_eq!(
            AnyElement::from_json(x.to_json(), Some(Model::Matrix), None).unwrap(),
            x
        );
        let t = AnyElement::from_json(json!([[1, 1], [2]]), Some(Model::Tableau), Some(2)).unwrap();
        assert_eq!(t.to_json(), json!({ "model": "tableau", "rank": 2, "rows": [[1, 1], [2]] }));
        let tensor =
            AnyElement::from_json(json!([[[1]], [[2]]]), Some(Model::Tensor), Some(2)).unwrap();
        assert_eq!(tensor.to_string(), "[[1]] ⊗ [[2]]");
    }

    #[test]
    fn rejects_mismatches() {
        let tagged = json!({ "model": "matrix", "n": 1, "m": 2, "rows": [[0, 1]] });
        assert!(AnyElement::from_json(tagged, Some(Model::Tableau), None).is_err());
        assert!(AnyElement::from_json(json!([[1]]), Some(Model::Tableau), None).is_err());
        assert!(AnyElement::from_json(json!([[2, 1]]), Some(Model::Matrix), None).is_err());
        assert!(AnyElement::from_json(json!([[1]]), None, None).is_err());
        assert!("heap".parse::<Model>().is_err());
    }
}
