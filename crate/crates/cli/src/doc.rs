//! Input documents and their canonical JSON serialization.
//!
//! Every file is `{"kind": ..., "field": "Q" | "Fp:<p>", "payload": {...}}`.
//! Scalars are strings (`"3/2"`), tensors are sparse `[i, j, k, "c"]`
//! triples with zero entries omitted, and the antipode is a dense list of
//! matrix rows. Keys come out sorted because `serde_json::Map` is ordered.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use weakhopf::exactlin::{Field, Matrix, Scalar, Vector};
use weakhopf::groupoid::{FiniteGroupoid, Morphism};
use weakhopf::report::Witness;
use weakhopf::smash::ActionPresentation;
use weakhopf::wha::{AlgebraPresentation, CoalgebraPresentation, WeakHopfPresentation};

use crate::CliError;

type Triple = (usize, usize, usize, String);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: String,
    #[serde(default)]
    field: Option<String>,
    payload: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraPayload {
    dim: usize,
    mult: Vec<Triple>,
    unit: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeakHopfPayload {
    dim: usize,
    mult: Vec<Triple>,
    unit: Vec<String>,
    comult: Vec<Triple>,
    counit: Vec<String>,
    antipode: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismPayload {
    name: String,
    src: String,
    dst: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidPayload {
    objects: Vec<String>,
    morphisms: Vec<MorphismPayload>,
    compose: Vec<(String, String, String)>,
    inverses: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionPayload {
    hopf: Value,
    algebra: AlgebraPayload,
    action: Vec<Triple>,
}

#[derive(Clone, Debug)]
pub enum Document {
    Groupoid(FiniteGroupoid),
    WeakHopf(WeakHopfPresentation),
    Action(ActionPresentation),
    Algebra(AlgebraPresentation),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Groupoid(_) => "groupoid",
            Document::WeakHopf(_) => "weak_hopf",
            Document::Action(_) => "action",
            Document::Algebra(_) => "algebra",
        }
    }
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub path: PathBuf,
    /// `sha256:<hex>` of the raw bytes.
    pub digest: String,
    pub field: Field,
    pub doc: Document,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn load(path: &Path, field_override: Option<Field>) -> Result<Loaded, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Schema { path: path.to_path_buf(), message: "file is not UTF-8".into() })?;
    let base = path.parent().unwrap_or(Path::new("."));
    let (field, doc) = parse_document(&text, path, base, field_override)?;
    Ok(Loaded { path: path.to_path_buf(), digest: digest(&bytes), field, doc })
}

/// Parses document text; `path` is used in messages and `base` resolves
/// relative references.
pub fn parse_document(
    text: &str,
    path: &Path,
    base: &Path,
    field_override: Option<Field>,
) -> Result<(Field, Document), CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let ctx = Ctx { path };
    let field = match (field_override, &raw.field) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse::<Field>().map_err(|e| ctx.schema("field", e))?,
        (None, None) => Field::Rationals,
    };
    let doc = ctx.document(&raw.kind, raw.payload, field, base, field_override)?;
    Ok((field, doc))
}

struct Ctx<'a> {
    path: &'a Path,
}

impl Ctx<'_> {
    fn schema(&self, at: &str, message: impl ToString) -> CliError {
        CliError::Schema { path: self.path.to_path_buf(), message: format!("{at}: {}", message.to_string()) }
    }

    fn payload<T: for<'de> Deserialize<'de>>(&self, at: &str, v: Value) -> Result<T, CliError> {
        serde_json::from_value(v).map_err(|e| self.schema(at, e))
    }

    fn document(
        &self,
        kind: &str,
        payload: Value,
        field: Field,
        base: &Path,
        field_override: Option<Field>,
    ) -> Result<Document, CliError> {
        match kind {
            "groupoid" => self.groupoid(self.payload("payload", payload)?).map(Document::Groupoid),
            "weak_hopf" => self.weak_hopf("payload", self.payload("payload", payload)?, field).map(Document::WeakHopf),
            "algebra" => self.algebra("payload", self.payload("payload", payload)?, field).map(Document::Algebra),
            "action" => self.action(self.payload("payload", payload)?, field, base, field_override).map(Document::Action),
            other => Err(self.schema("kind", format!("unknown kind {other:?}"))),
        }
    }

    fn scalar(&self, at: &str, field: Field, s: &str) -> Result<Scalar, CliError> {
        field.parse(s).map_err(|e| self.schema(at, e))
    }

    fn vector(&self, at: &str, field: Field, dim: usize, v: &[String]) -> Result<Vector, CliError> {
        if v.len() != dim {
            return Err(self.schema(at, format!("expected {dim} entries, found {}", v.len())));
        }
        v.iter().enumerate().map(|(i, s)| self.scalar(&format!("{at}[{i}]"), field, s)).collect()
    }

    fn tensor(&self, at: &str, field: Field, dims: [usize; 3], triples: &[Triple]) -> Result<Vec<Scalar>, CliError> {
        let mut out = vec![field.zero(); dims[0] * dims[1] * dims[2]];
        let mut seen = vec![false; out.len()];
        for (n, (i, j, k, c)) in triples.iter().enumerate() {
            let here = format!("{at}[{n}]");
            if *i >= dims[0] || *j >= dims[1] || *k >= dims[2] {
                return Err(self.schema(&here, format!("index ({i}, {j}, {k}) out of range {dims:?}")));
            }
            let idx = (i * dims[1] + j) * dims[2] + k;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(self.schema(&here, format!("duplicate entry ({i}, {j}, {k})")));
            }
            out[idx] = self.scalar(&here, field, c)?;
        }
        Ok(out)
    }

    fn math<T>(&self, at: &str, r: weakhopf::Result<T>) -> Result<T, CliError> {
        r.map_err(|e| self.schema(at, e))
    }

    fn algebra(&self, at: &str, p: AlgebraPayload, field: Field) -> Result<AlgebraPresentation, CliError> {
        let mult = self.tensor(&format!("{at}.mult"), field, [p.dim; 3], &p.mult)?;
        let unit = self.vector(&format!("{at}.unit"), field, p.dim, &p.unit)?;
        self.math(at, AlgebraPresentation::new(field, p.dim, mult, unit))
    }

    fn weak_hopf(&self, at: &str, p: WeakHopfPayload, field: Field) -> Result<WeakHopfPresentation, CliError> {
        let n = p.dim;
        let algebra = self.algebra(at, AlgebraPayload { dim: n, mult: p.mult, unit: p.unit }, field)?;
        let comult = self.tensor(&format!("{at}.comult"), field, [n; 3], &p.comult)?;
        let counit = self.vector(&format!("{at}.counit"), field, n, &p.counit)?;
        let coalgebra = self.math(at, CoalgebraPresentation::new(field, n, comult, counit))?;
        if p.antipode.len() != n {
            return Err(self.schema(&format!("{at}.antipode"), format!("expected {n} rows, found {}", p.antipode.len())));
        }
        let rows = p
            .antipode
            .iter()
            .enumerate()
            .map(|(i, r)| self.vector(&format!("{at}.antipode[{i}]"), field, n, r))
            .collect::<Result<Vec<_>, _>>()?;
        let antipode = Matrix::from_rows_with_cols(field, rows, n);
        self.math(at, WeakHopfPresentation::new(algebra, coalgebra, antipode))
    }

    fn groupoid(&self, p: GroupoidPayload) -> Result<FiniteGroupoid, CliError> {
        let morphisms = p
            .morphisms
            .into_iter()
            .map(|m| Morphism { name: m.name, source: m.src, target: m.dst })
            .collect();
        self.math("payload", FiniteGroupoid::new(p.objects, morphisms, &p.compose, &p.inverses))
    }

    fn action(
        &self,
        p: ActionPayload,
        field: Field,
        base: &Path,
        field_override: Option<Field>,
    ) -> Result<ActionPresentation, CliError> {
        let hopf = match p.hopf {
            Value::String(rel) => {
                let loaded = load(&base.join(&rel), field_override)?;
                if loaded.field != field {
                    return Err(self.schema("payload.hopf", format!("{rel} uses field {}, expected {field}", loaded.field)));
                }
                hopf_of(&loaded.doc, field).map_err(|m| self.schema("payload.hopf", m))?
            }
            Value::Object(ref obj) if obj.contains_key("kind") => {
                let text = p.hopf.to_string();
                let (inner_field, doc) = parse_document(&text, self.path, base, field_override)?;
                if inner_field != field {
                    return Err(self.schema("payload.hopf", format!("inline document uses field {inner_field}, expected {field}")));
                }
                hopf_of(&doc, field).map_err(|m| self.schema("payload.hopf", m))?
            }
            other => self.weak_hopf("payload.hopf", self.payload("payload.hopf", other)?, field)?,
        };
        let algebra = self.algebra("payload.algebra", p.algebra, field)?;
        let dims = [hopf.dim(), algebra.dim(), algebra.dim()];
        let action = self.tensor("payload.action", field, dims, &p.action)?;
        self.math("payload", ActionPresentation::new(hopf, algebra, action))
    }
}

/// The weak Hopf algebra described by a groupoid or weak_hopf document.
pub fn hopf_of(doc: &Document, field: Field) -> Result<WeakHopfPresentation, String> {
    match doc {
        Document::WeakHopf(h) => Ok(h.clone()),
        Document::Groupoid(g) => weakhopf::groupoid::groupoid_algebra(g, field).map_err(|e| e.to_string()),
        other => Err(format!("expected a weak_hopf or groupoid document, found {}", other.kind())),
    }
}

fn literal(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(literal).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

fn triples_json(dims: [usize; 3], entry: impl Fn(usize, usize, usize) -> Scalar) -> Value {
    let mut out = Vec::new();
    for i in 0..dims[0] {
        for j in 0..dims[1] {
            for k in 0..dims[2] {
                let c = entry(i, j, k);
                if !c.is_zero() {
                    out.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    Value::Array(out)
}

pub fn witness_json(w: &Witness) -> Value {
    json!({ "indices": w.indices, "lhs": vector_json(&w.lhs), "rhs": vector_json(&w.rhs) })
}

fn envelope(kind: &str, field: Field, payload: Value) -> Value {
    json!({ "kind": kind, "field": field.to_string(), "payload": payload })
}

fn algebra_payload(a: &AlgebraPresentation) -> Value {
    let n = a.dim();
    json!({
        "dim": n,
        "mult": triples_json([n; 3], |i, j, k| a.coeff(i, j, k).clone()),
        "unit": vector_json(a.unit()),
    })
}

fn weak_hopf_payload(p: &WeakHopfPresentation) -> Value {
    let n = p.dim();
    json!({
        "dim": n,
        "mult": triples_json([n; 3], |i, j, k| p.algebra.coeff(i, j, k).clone()),
        "unit": vector_json(p.unit()),
        "comult": triples_json([n; 3], |k, i, j| p.coalgebra.coeff(k, i, j).clone()),
        "counit": vector_json(p.counit()),
        "antipode": matrix_json(&p.antipode),
    })
}

pub fn algebra_document(a: &AlgebraPresentation) -> Value {
    envelope("algebra", a.field(), algebra_payload(a))
}

pub fn weak_hopf_document(p: &WeakHopfPresentation) -> Value {
    envelope("weak_hopf", p.field(), weak_hopf_payload(p))
}

pub fn action_document(a: &ActionPresentation) -> Value {
    let (dh, da) = (a.hopf.dim(), a.algebra.dim());
    let tensor = a.action_tensor();
    let payload = json!({
        "hopf": weak_hopf_payload(&a.hopf),
        "algebra": algebra_payload(&a.algebra),
        "action": triples_json([dh, da, da], |i, j, k| tensor[(i * da + j) * da + k].clone()),
    });
    envelope("action", a.hopf.field(), payload)
}

pub fn groupoid_document(g: &FiniteGroupoid) -> Value {
    let morphisms: Vec<Value> = g
        .morphisms()
        .iter()
        .map(|m| json!({ "name": m.name, "src": m.source, "dst": m.target }))
        .collect();
    let compose: Vec<Value> = g.compose_table().into_iter().map(|(a, b, c)| json!([a, b, c])).collect();
    let inverses: Vec<Value> = g.inverse_table().into_iter().map(|(a, b)| json!([a, b])).collect();
    let payload = json!({
        "objects": g.objects(),
        "morphisms": morphisms,
        "compose": compose,
        "inverses": inverses,
    });
    // Groupoids carry no scalars; the field is recorded for uniformity.
    envelope("groupoid", Field::Rationals, payload)
}

/// Canonical text: objects one key per line with sorted keys, arrays of
/// scalars on a single line, and a trailing newline.
pub fn canonical(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, val, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_leaf) => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, val, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}
