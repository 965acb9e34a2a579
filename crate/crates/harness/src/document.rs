//! JSON algebra documents: exact parsing with path-annotated errors, and canonical emission.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use gradelie_core::grading::{subgraded_from_components, FinAbGroup, SubgradedAlgebra};
use gradelie_core::lie::lie_closure;
use gradelie_core::structures::MatSubspace;
use gradelie_core::{GaussianRational as Q, LieAlgebra, Mat, Subspace};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::HarnessError;

pub const MAX_AMBIENT_DIM: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Lie,
    Subgraded,
    Triple,
    Jordan,
}

impl Structure {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "lie" => Self::Lie,
            "subgraded" => Self::Subgraded,
            "triple" => Self::Triple,
            "jordan" => Self::Jordan,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Lie => "lie",
            Self::Subgraded => "subgraded",
            Self::Triple => "triple",
            Self::Jordan => "jordan",
        }
    }
}

/// `Exact` rejects floating literals; `Float` converts them to the rational they denote.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScalarMode {
    #[default]
    Exact,
    Float,
}

/// Either generator matrices (plain, triple, Jordan) or a component map (subgraded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Generators(Vec<Mat>),
    Components(BTreeMap<String, Vec<Mat>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub ambient_dim: usize,
    pub structure: Structure,
    pub mode: ScalarMode,
    pub group: Option<Vec<u64>>,
    pub payload: Payload,
}

/// A parse or validation failure at a JSON path (and, for syntax errors, a line and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError {
    pub path: String,
    pub line: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some((l, c)) => write!(f, "line {l}, column {c}: {}", self.message),
            None => write!(f, "at {}: {}", self.path, self.message),
        }
    }
}

impl std::error::Error for DocError {}

impl Serialize for AlgebraDocument {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.raw().serialize(serializer)
    }
}

fn err(path: &str, message: impl Into<String>) -> DocError {
    DocError {
        path: path.to_string(),
        line: None,
        message: message.into(),
    }
}

/// A parsed document turned into the structure its tag names.
#[derive(Clone, Debug)]
pub enum Instance {
    Lie(LieAlgebra),
    Subgraded(SubgradedAlgebra),
    Triple(MatSubspace),
    Jordan(MatSubspace),
}

#[derive(Serialize)]
struct RawGroup<'a> {
    moduli: &'a [u64],
}

#[derive(Serialize)]
struct RawDoc<'a> {
    ambient_dim: usize,
    structure: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<RawGroup<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<BTreeMap<String, Vec<Vec<Vec<String>>>>>,
}

fn raw_mat(m: &Mat) -> Vec<Vec<String>> {
    (0..m.n_rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect()
}

impl AlgebraDocument {
    pub fn lie(n: usize, generators: Vec<Mat>) -> Self {
        Self::with_generators(n, Structure::Lie, generators)
    }

    pub fn triple(m: &MatSubspace) -> Self {
        Self::with_generators(m.n(), Structure::Triple, m.basis_mats().to_vec())
    }

    pub fn jordan(j: &MatSubspace) -> Self {
        Self::with_generators(j.n(), Structure::Jordan, j.basis_mats().to_vec())
    }

    fn with_generators(n: usize, structure: Structure, generators: Vec<Mat>) -> Self {
        Self {
            ambient_dim: n,
            structure,
            mode: ScalarMode::Exact,
            group: None,
            payload: Payload::Generators(generators),
        }
    }

    /// Components are written with their canonical bases; zero components are omitted.
    pub fn subgraded(s: &SubgradedAlgebra) -> Self {
        let components = s
            .components()
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (g.key(), c.basis_mats().expect("component of square matrices")))
            .collect();
        Self {
            ambient_dim: s.n(),
            structure: Structure::Subgraded,
            mode: ScalarMode::Exact,
            group: Some(s.group().moduli().to_vec()),
            payload: Payload::Components(components),
        }
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        Self::lie(l.n(), l.basis().to_vec())
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let value: Value = serde_json::from_str(text).map_err(|e| DocError {
            path: "$".into(),
            line: Some((e.line(), e.column())),
            message: e.to_string(),
        })?;
        Self::from_value(&value)
    }

    pub fn from_value(v: &Value) -> Result<Self, DocError> {
        let obj = v.as_object().ok_or_else(|| err("$", "top level must be an object"))?;
        for key in obj.keys() {
            if !["ambient_dim", "structure", "mode", "group", "generators", "components"].contains(&key.as_str()) {
                return Err(err(&format!("$.{key}"), "unknown field"));
            }
        }
        let n = obj
            .get("ambient_dim")
            .ok_or_else(|| err("$", "missing `ambient_dim`"))?
            .as_u64()
            .filter(|&n| n >= 1 && n as usize <= MAX_AMBIENT_DIM)
            .ok_or_else(|| err("$.ambient_dim", format!("must be an integer in 1..={MAX_AMBIENT_DIM}")))?
            as usize;
        let structure = obj
            .get("structure")
            .ok_or_else(|| err("$", "missing `structure`"))?
            .as_str()
            .and_then(Structure::parse)
            .ok_or_else(|| err("$.structure", "must be one of \"lie\", \"subgraded\", \"triple\", \"jordan\""))?;
        let mode = match obj.get("mode") {
            None => ScalarMode::Exact,
            Some(Value::String(s)) if s == "exact" => ScalarMode::Exact,
            Some(Value::String(s)) if s == "float" => ScalarMode::Float,
            Some(_) => return Err(err("$.mode", "must be \"exact\" or \"float\"")),
        };
        let group = match obj.get("group") {
            None => None,
            Some(g) => Some(parse_group(g)?),
        };
        if structure == Structure::Subgraded && group.is_none() {
            return Err(err("$", "a subgraded document needs `group`"));
        }
        if structure != Structure::Subgraded && group.is_some() {
            return Err(err("$.group", "only subgraded documents carry a group"));
        }
        let payload = match (structure, obj.get("generators"), obj.get("components")) {
            (_, Some(_), Some(_)) => return Err(err("$", "give either `generators` or `components`, not both")),
            (Structure::Subgraded, Some(_), None) => {
                return Err(err("$.generators", "a subgraded document uses `components`"))
            }
            (Structure::Subgraded, None, Some(c)) => {
                let moduli = group.as_ref().expect("checked above");
                Payload::Components(parse_components(c, n, moduli, mode)?)
            }
            (_, None, Some(_)) => return Err(err("$.components", "only subgraded documents have components")),
            (_, Some(g), None) => Payload::Generators(parse_mat_list(g, n, mode, "$.generators")?),
            (_, None, None) => return Err(err("$", "missing `generators` or `components`")),
        };
        Ok(Self {
            ambient_dim: n,
            structure,
            mode,
            group,
            payload,
        })
    }

    fn raw(&self) -> RawDoc<'_> {
        let (generators, components) = match &self.payload {
            Payload::Generators(g) => (Some(g.iter().map(raw_mat).collect()), None),
            Payload::Components(c) => (
                None,
                Some(c.iter().map(|(k, ms)| (k.clone(), ms.iter().map(raw_mat).collect())).collect()),
            ),
        };
        RawDoc {
            ambient_dim: self.ambient_dim,
            structure: self.structure.as_str(),
            mode: match self.mode {
                ScalarMode::Exact => None,
                ScalarMode::Float => Some("float"),
            },
            group: self.group.as_deref().map(|moduli| RawGroup { moduli }),
            generators,
            components,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self.raw()).expect("document serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.raw()).expect("document serializes")
    }

    pub fn to_json_compact(&self) -> String {
        serde_json::to_string(&self.raw()).expect("document serializes")
    }

    /// SHA-256 of the compact canonical JSON, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_json_compact().as_bytes()))
    }

    pub fn instance(&self) -> Result<Instance, HarnessError> {
        let n = self.ambient_dim;
        Ok(match (&self.structure, &self.payload) {
            (Structure::Lie, Payload::Generators(g)) => Instance::Lie(lie_closure(n, g)?),
            (Structure::Triple, Payload::Generators(g)) => Instance::Triple(MatSubspace::from_mats(n, g)?),
            (Structure::Jordan, Payload::Generators(g)) => Instance::Jordan(MatSubspace::from_mats(n, g)?),
            (Structure::Subgraded, Payload::Components(c)) => {
                let group = FinAbGroup::new(self.group.clone().unwrap_or_default())?;
                let mut comps = BTreeMap::new();
                for (key, mats) in c {
                    let residues: Vec<u64> = key.split(',').map(|r| r.parse().unwrap_or(u64::MAX)).collect();
                    comps.insert(group.elem(&residues)?, Subspace::from_mats(n, mats)?);
                }
                Instance::Subgraded(subgraded_from_components(n, &group, &comps)?)
            }
            _ => return Err(HarnessError::Structure("structure tag does not match the payload".into())),
        })
    }
}

fn parse_group(g: &Value) -> Result<Vec<u64>, DocError> {
    let moduli = g
        .get("moduli")
        .and_then(Value::as_array)
        .ok_or_else(|| err("$.group", "expected {\"moduli\": [ints]}"))?;
    if moduli.is_empty() {
        return Err(err("$.group.moduli", "needs at least one modulus"));
    }
    moduli
        .iter()
        .enumerate()
        .map(|(k, m)| {
            m.as_u64()
                .filter(|&m| (1..=64).contains(&m))
                .ok_or_else(|| err(&format!("$.group.moduli[{k}]"), "must be an integer in 1..=64"))
        })
        .collect()
}

fn parse_components(
    c: &Value,
    n: usize,
    moduli: &[u64],
    mode: ScalarMode,
) -> Result<BTreeMap<String, Vec<Mat>>, DocError> {
    let obj = c
        .as_object()
        .ok_or_else(|| err("$.components", "expected an object keyed by group elements"))?;
    let mut out = BTreeMap::new();
    for (key, mats) in obj {
        let path = format!("$.components[{key:?}]");
        let residues: Vec<&str> = key.split(',').collect();
        if residues.len() != moduli.len() {
            return Err(err(&path, format!("key needs {} comma-separated residues", moduli.len())));
        }
        let mut canon = Vec::with_capacity(residues.len());
        for (r, m) in residues.iter().zip(moduli) {
            match r.parse::<u64>() {
                Ok(v) if v < *m && r.trim() == *r => canon.push(v.to_string()),
                _ => return Err(err(&path, format!("residue `{r}` is not in 0..{m}"))),
            }
        }
        let canon = canon.join(",");
        if out.contains_key(&canon) {
            return Err(err(&path, "duplicate group element"));
        }
        out.insert(canon, parse_mat_list(mats, n, mode, &path)?);
    }
    Ok(out)
}

fn parse_mat_list(v: &Value, n: usize, mode: ScalarMode, path: &str) -> Result<Vec<Mat>, DocError> {
    let list = v.as_array().ok_or_else(|| err(path, "expected an array of matrices"))?;
    list.iter()
        .enumerate()
        .map(|(k, m)| parse_mat(m, n, mode, &format!("{path}[{k}]")))
        .collect()
}

fn parse_mat(v: &Value, n: usize, mode: ScalarMode, path: &str) -> Result<Mat, DocError> {
    let rows = v.as_array().ok_or_else(|| err(path, "expected a matrix (array of rows)"))?;
    if rows.len() != n {
        return Err(err(path, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let entries = row.as_array().ok_or_else(|| err(&rpath, "expected a row (array of entries)"))?;
        if entries.len() != n {
            return Err(err(&rpath, format!("expected {n} entries, found {}", entries.len())));
        }
        out.push(
            entries
                .iter()
                .enumerate()
                .map(|(j, e)| parse_entry(e, mode, &format!("{rpath}[{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(Mat::from_rows(out).expect("rows checked square"))
}

fn parse_entry(v: &Value, mode: ScalarMode, path: &str) -> Result<Q, DocError> {
    match v {
        Value::String(s) => Q::from_str(s).map_err(|e| err(path, e.to_string())),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                return Ok(Q::from_int(i));
            }
            match (mode, num.as_f64()) {
                (ScalarMode::Float, Some(x)) => BigRational::from_float(x)
                    .map(|r| Q::new(r, BigRational::from_integer(0.into())))
                    .ok_or_else(|| err(path, "non-finite number")),
                _ => Err(err(path, format!("floating literal {num} rejected in exact mode"))),
            }
        }
        _ => Err(err(path, "entry must be a string like \"1/2\", \"3i\" or \"1-2/3i\"")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"ambient_dim": 2, "structure": "subgraded", "group": {"moduli": [2, 2]},
            "components": {"0,1": [[["0", "1"], ["-1", "0"]]], "1,0": [[["0", "-1i"], ["-1i", "0"]]],
                           "1,1": [[["-1i", "0"], ["0", "1i"]]]}}"#;
        let doc = AlgebraDocument::parse(text).unwrap();
        let again = AlgebraDocument::parse(&doc.to_json_pretty()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.digest(), again.digest());
        match doc.instance().unwrap() {
            Instance::Subgraded(s) => assert!(s.is_direct()),
            _ => panic!("wrong structure"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = AlgebraDocument::parse(r#"{"ambient_dim": 2, "structure": "lie", "generators": [[["1", "0"], ["0", 0.5]]]}"#)
            .unwrap_err();
        assert_eq!(e.path, "$.generators[0][1][1]");
        assert!(e.message.contains("floating literal"));
        let e = AlgebraDocument::parse(r#"{"ambient_dim": 2, "structure": "lie", "generators": [[["2/4", "0"], ["0", "1"]]]}"#)
            .unwrap_err();
        assert_eq!(e.path, "$.generators[0][0][0]");
        let e = AlgebraDocument::parse("{\"ambient_dim\": 2,\n \"structure\": }").unwrap_err();
        assert_eq!(e.line.map(|(l, _)| l), Some(2));
        let e = AlgebraDocument::parse(
            r#"{"ambient_dim": 1, "structure": "subgraded", "group": {"moduli": [2]}, "components": {"2": [[["1"]]]}}"#,
        )
        .unwrap_err();
        assert!(e.path.starts_with("$.components"));
    }

    #[test]
    fn float_mode_is_exact_conversion() {
        let doc = AlgebraDocument::parse(
            r#"{"ambient_dim": 1, "structure": "lie", "mode": "float", "generators": [[[0.5]]]}"#,
        )
        .unwrap();
        match doc.payload {
            Payload::Generators(g) => assert_eq!(g[0][(0, 0)], Q::from_frac(1, 2)),
            _ => panic!(),
        }
    }
}
