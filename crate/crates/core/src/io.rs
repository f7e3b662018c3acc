//! JSON file formats for algebras, quivers, modules and morphisms.
//!
//! Rational scalars are written as strings `"n/d"` (`"n"` when the
//! denominator is 1); prime-field scalars as decimal integers. Readers accept
//! either spelling for either field.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Vector};
use crate::modrep::{Module, Morphism};
use crate::quiver::{bound_quiver_algebra, Arrow, Quiver, Relation, Term, DEFAULT_DEGREE_CAP};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    #[serde(default)]
    pub basis_labels: Option<Vec<String>>,
    pub unit: Vec<Value>,
    pub structure_constants: Vec<(usize, usize, usize, Value)>,
    pub idempotents: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_basis: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowFile {
    pub label: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coeff: Value,
    pub path: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<Vec<TermFile>>,
    pub field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    /// A path (relative to the module file) or an inline algebra description.
    #[serde(default)]
    pub algebra: Value,
    pub dim: usize,
    /// One matrix per algebra basis element, as nested rows or a flat row-major list.
    pub action: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: Value,
    pub target: Value,
    pub matrix: Value,
}

/// serde_json's message already ends with "at line L column C".
fn json_error(origin: &str, e: &serde_json::Error) -> Error {
    Error::Parse(format!("{origin}: {e}"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_value(origin: &str, text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| json_error(origin, &e))
}

fn parse_typed<T: for<'de> Deserialize<'de>>(origin: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| json_error(origin, &e))
}

fn from_value<T: for<'de> Deserialize<'de>>(origin: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{origin}: {e}")))
}

pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    let parsed = match v {
        Value::String(s) => field.parse(s.trim()),
        Value::Number(n) => n.as_i64().map(|i| field.int(i)),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Parse(format!("{v} is not a scalar of {field}")))
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Q(r) => Value::String(r.to_string()),
        Scalar::F(v, _) => json!(v),
    }
}

fn vector_from_json(field: Field, vs: &[Value]) -> Result<Vector> {
    vs.iter().map(|v| scalar_from_json(field, v)).collect()
}

fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

/// Reads a `rows × cols` matrix given as nested rows or a flat row-major list.
pub fn matrix_from_json(field: Field, rows: usize, cols: usize, v: &Value) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array".into()))?;
    let flat: Vec<Value> = if arr.iter().all(Value::is_array) && !arr.is_empty() {
        if arr.len() != rows {
            return Err(Error::Parse(format!("matrix has {} rows, expected {rows}", arr.len())));
        }
        let mut out = Vec::with_capacity(rows * cols);
        for r in arr {
            let r = r.as_array().expect("checked");
            if r.len() != cols {
                return Err(Error::Parse(format!("matrix row has {} entries, expected {cols}", r.len())));
            }
            out.extend(r.iter().cloned());
        }
        out
    } else {
        arr.clone()
    };
    if flat.len() != rows * cols {
        return Err(Error::Parse(format!("matrix has {} entries, expected {}", flat.len(), rows * cols)));
    }
    Ok(Matrix::from_vector(field, rows, cols, vector_from_json(field, &flat)?))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector_to_json(r)).collect())
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        let f = self.field;
        let labels = match &self.basis_labels {
            Some(l) if l.len() != self.dim => {
                return Err(Error::Parse(format!("{} basis labels for dimension {}", l.len(), self.dim)))
            }
            Some(l) => l.clone(),
            None => (0..self.dim).map(|i| format!("b{i}")).collect(),
        };
        let constants = self
            .structure_constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, scalar_from_json(f, c)?)))
            .collect::<Result<Vec<_>>>()?;
        let idem = self.idempotents.iter().map(|v| vector_from_json(f, v)).collect::<Result<Vec<_>>>()?;
        let rad = match &self.radical_basis {
            Some(r) => Some(r.iter().map(|v| vector_from_json(f, v)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Algebra::new(f, labels, constants, vector_from_json(f, &self.unit)?, idem, rad)
    }

    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        AlgebraFile {
            field: a.field(),
            dim: a.dim(),
            basis_labels: Some(a.labels().to_vec()),
            unit: a.unit().iter().map(scalar_to_json).collect(),
            structure_constants: a.constants().iter().map(|(i, j, k, c)| (*i, *j, *k, scalar_to_json(c))).collect(),
            idempotents: a.idempotents().iter().map(|v| v.iter().map(scalar_to_json).collect()).collect(),
            radical_basis: a.supplied_radical().map(|r| r.iter().map(|v| v.iter().map(scalar_to_json).collect()).collect()),
        }
    }
}

impl QuiverFile {
    pub fn quiver(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), src: a.src.clone(), tgt: a.tgt.clone() })
                .collect(),
        }
    }

    pub fn relations(&self) -> Result<Vec<Relation>> {
        self.relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| Ok(Term { coeff: scalar_from_json(self.field, &t.coeff)?, path: t.path.clone() }))
                    .collect()
            })
            .collect()
    }

    pub fn build(&self) -> Result<Arc<Algebra>> {
        bound_quiver_algebra(self.field, &self.quiver(), &self.relations()?, self.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP))
    }
}

/// Builds an algebra from a parsed JSON value in either the structure-constant
/// or the quiver format (told apart by the `vertices` key).
pub fn algebra_from_value(origin: &str, v: Value) -> Result<Arc<Algebra>> {
    if v.get("vertices").is_some() {
        from_value::<QuiverFile>(origin, v)?.build()
    } else {
        from_value::<AlgebraFile>(origin, v)?.build()
    }
}

pub fn parse_algebra(origin: &str, text: &str) -> Result<Arc<Algebra>> {
    if parse_value(origin, text)?.get("vertices").is_some() {
        parse_typed::<QuiverFile>(origin, text)?.build()
    } else {
        parse_typed::<AlgebraFile>(origin, text)?.build()
    }
}

pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>> {
    parse_algebra(&path.display().to_string(), &read(path)?)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    serde_json::to_value(AlgebraFile::from_algebra(a)).expect("serializable")
}

fn resolve_algebra(origin: &str, v: &Value, base: Option<&Path>) -> Result<Arc<Algebra>> {
    match v {
        Value::String(p) => {
            let mut path = PathBuf::from(p);
            if path.is_relative() {
                if let Some(b) = base {
                    path = b.join(path);
                }
            }
            load_algebra(&path)
        }
        Value::Object(_) => algebra_from_value(origin, v.clone()),
        _ => Err(Error::Parse(format!("{origin}: \"algebra\" must be a path or an object"))),
    }
}

fn module_over(origin: &str, file: &ModuleFile, a: &Arc<Algebra>) -> Result<Module> {
    if file.action.len() != a.dim() {
        return Err(Error::Parse(format!("{origin}: {} action matrices, expected {}", file.action.len(), a.dim())));
    }
    let action = file
        .action
        .iter()
        .map(|m| matrix_from_json(a.field(), file.dim, file.dim, m))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Parse(format!("{origin}: {e}")))?;
    Module::new(a, action)
}

/// Parses a module. When `algebra` is given it is used and the file's own
/// `algebra` entry must describe the same algebra.
pub fn parse_module(origin: &str, text: &str, base: Option<&Path>, algebra: Option<&Arc<Algebra>>) -> Result<Module> {
    let file: ModuleFile = parse_typed(origin, text)?;
    let own = if file.algebra.is_null() { None } else { Some(resolve_algebra(origin, &file.algebra, base)?) };
    let a = match (algebra, own) {
        (Some(a), Some(o)) if !a.same_as(&o) => {
            return Err(Error::Parse(format!("{origin}: module is over a different algebra")))
        }
        (Some(a), _) => a.clone(),
        (None, Some(o)) => o,
        (None, None) => return Err(Error::Parse(format!("{origin}: no algebra given"))),
    };
    module_over(origin, &file, &a)
}

pub fn load_module(path: &Path, algebra: Option<&Arc<Algebra>>) -> Result<Module> {
    parse_module(&path.display().to_string(), &read(path)?, path.parent(), algebra)
}

/// The module in file form; `algebra` is written as given (a path or an inline object).
pub fn module_to_json(m: &Module, algebra: Value) -> Value {
    json!({
        "algebra": algebra,
        "dim": m.dim(),
        "action": m.actions().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

fn module_value(origin: &str, v: &Value, base: Option<&Path>, a: &Arc<Algebra>) -> Result<Module> {
    match v {
        Value::String(p) => {
            let mut path = PathBuf::from(p);
            if path.is_relative() {
                if let Some(b) = base {
                    path = b.join(path);
                }
            }
            load_module(&path, Some(a))
        }
        _ => module_over(origin, &from_value(origin, v.clone())?, a),
    }
}

/// Parses a morphism whose `source` and `target` are module paths or inline modules over `algebra`.
pub fn parse_morphism(origin: &str, text: &str, base: Option<&Path>, algebra: &Arc<Algebra>) -> Result<Morphism> {
    let file: MorphismFile = parse_typed(origin, text)?;
    let s = module_value(origin, &file.source, base, algebra)?;
    let t = module_value(origin, &file.target, base, algebra)?;
    let m = matrix_from_json(algebra.field(), t.dim(), s.dim(), &file.matrix)?;
    Morphism::new(&s, &t, m)
}

pub fn morphism_to_json(f: &Morphism, source: Value, target: Value) -> Value {
    json!({ "source": source, "target": target, "matrix": matrix_to_json(&f.matrix) })
}
