//! JSON instance and result files.
//!
//! ```text
//! {"type":"points","d":2,"coords":[[["3","1"],["1","2"]],…]}
//! {"type":"integers","values":["1","2",…]}
//! {"type":"sympoly","field":"Q","degree":2,"coeffs":[[2,0,"1"],[0,2,"1"]]}
//! {"type":"sympoly","field":{"GF":101},…}
//! ```
//!
//! Files are written as compact JSON followed by a newline, so re-serializing
//! a parsed file reproduces it byte for byte.

use std::fs;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldElem, IntegerInstance, SymPoly};
use crate::engine::{RainbowResult, RunStats};
use crate::error::{Error, Result};
use crate::geometry::{PointInstance, RationalPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceFile {
    Points {
        d: usize,
        coords: Vec<Vec<(String, String)>>,
    },
    Integers {
        values: Vec<String>,
    },
    Sympoly {
        field: FieldJson,
        degree: usize,
        coeffs: Vec<(usize, usize, String)>,
    },
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Points { .. } => "points",
            InstanceFile::Integers { .. } => "integers",
            InstanceFile::Sympoly { .. } => "sympoly",
        }
    }
}

fn rational_to_json(q: &BigRational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

fn rational_from_json((num, den): &(String, String)) -> Result<BigRational> {
    let num: BigInt = crate::colour::parse_bigint(num)?;
    let den: BigInt = crate::colour::parse_bigint(den)?;
    if den.is_zero() {
        return Err(Error::Parameter("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

pub fn points_to_file(inst: &PointInstance) -> InstanceFile {
    InstanceFile::Points {
        d: inst.d(),
        coords: inst
            .points()
            .iter()
            .map(|p| p.coords.iter().map(rational_to_json).collect())
            .collect(),
    }
}

pub fn points_from_file(file: &InstanceFile) -> Result<PointInstance> {
    let InstanceFile::Points { d, coords } = file else {
        return Err(Error::Parameter(format!("expected a points instance, got {}", file.kind())));
    };
    let points = coords
        .iter()
        .map(|p| {
            p.iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()
                .and_then(RationalPoint::new)
        })
        .collect::<Result<Vec<_>>>()?;
    PointInstance::new(*d, points)
}

pub fn integers_to_file(inst: &IntegerInstance) -> InstanceFile {
    InstanceFile::Integers {
        values: inst.values().iter().map(BigUint::to_string).collect(),
    }
}

pub fn integers_from_file(file: &InstanceFile) -> Result<IntegerInstance> {
    let InstanceFile::Integers { values } = file else {
        return Err(Error::Parameter(format!("expected an integers instance, got {}", file.kind())));
    };
    let parsed = values
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigUint>()
                .map_err(|_| Error::Parameter(format!("not a positive integer: {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    IntegerInstance::new(parsed)
}

fn elem_to_string(e: &FieldElem) -> String {
    match e {
        FieldElem::Rational(q) if q.is_integer() => q.numer().to_string(),
        FieldElem::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
        FieldElem::Residue(r) => r.to_string(),
    }
}

pub fn sympoly_to_file(poly: &SymPoly) -> InstanceFile {
    InstanceFile::Sympoly {
        field: match poly.field() {
            Field::Rationals => FieldJson::Named("Q".into()),
            Field::Prime(p) => FieldJson::Prime { gf: p },
        },
        degree: poly.degree(),
        coeffs: poly
            .terms()
            .into_iter()
            .map(|(i, j, c)| (i, j, elem_to_string(&c)))
            .collect(),
    }
}

pub fn sympoly_from_file(file: &InstanceFile) -> Result<SymPoly> {
    let InstanceFile::Sympoly { field, degree, coeffs } = file else {
        return Err(Error::Parameter(format!("expected a sympoly, got {}", file.kind())));
    };
    let field = match field {
        FieldJson::Named(name) if name == "Q" => Field::Rationals,
        FieldJson::Named(name) => return Err(Error::Parameter(format!("unknown field {name:?}"))),
        FieldJson::Prime { gf } => Field::prime(*gf)?,
    };
    let terms = coeffs
        .iter()
        .map(|(i, j, c)| Ok((*i, *j, field.parse(c)?)))
        .collect::<Result<Vec<_>>>()?;
    SymPoly::new(field, *degree, terms)
}

/// Result file of a `find` run, reporting domain values rather than vertex ids.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub subset: Vec<serde_json::Value>,
    pub size: usize,
    pub algorithm: String,
    pub seed: Option<u64>,
    pub verified: bool,
    pub stats: RunStats,
}

impl ResultFile {
    pub fn new(result: &RainbowResult, domain_value: impl Fn(usize) -> serde_json::Value) -> Self {
        ResultFile {
            subset: result.subset.iter().map(|&v| domain_value(v)).collect(),
            size: result.subset.len(),
            algorithm: result.algorithm.as_str().to_string(),
            seed: result.seed,
            verified: result.verified,
            stats: result.stats.clone(),
        }
    }
}

/// JSON value of a point: `[["num","den"],…]`.
pub fn point_value(p: &RationalPoint) -> serde_json::Value {
    serde_json::to_value(p.coords.iter().map(rational_to_json).collect::<Vec<_>>()).expect("strings serialize")
}

pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json_line(value)?)?;
    Ok(())
}

pub fn read_instance(path: &Path) -> Result<InstanceFile> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))
}
