//! JSON documents describing an algebra (with optional form, named maps,
//! weight and ξ) or a truncated deformation.
//!
//! Rational literals are always strings (`"3"`, `"-3/2"`). Structure constants
//! are sparse `{"i", "j", "k", "c"}` entries meaning `e_i·e_j` has coefficient
//! `c` on `e_k`. Matrices are lists of rows and act on column vectors.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "parity": [0, 1],
//!   "mul": [
//!     {"i": 0, "j": 0, "k": 0, "c": "1"},
//!     {"i": 0, "j": 1, "k": 1, "c": "1"},
//!     {"i": 1, "j": 0, "k": 1, "c": "1"}
//!   ],
//!   "alpha": [["1", "0"], ["0", "1"]],
//!   "maps": {"D": [["0", "0"], ["0", "1"]]}
//! }
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Zero;
use serde::Deserialize;

use crate::cohomology::Cochain;
use crate::deformation::TruncatedDeformation;
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, GradedSpace, Matrix, Parity, Scalar};
use crate::superalgebra::{BilinearForm, EvenMap, SuperAlgebra};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    parity: Vec<u8>,
    #[serde(default)]
    mul: Vec<RawEntry>,
    alpha: Option<Vec<Vec<String>>>,
    form: Option<Vec<Vec<String>>>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<String>>>,
    weight: Option<String>,
    xi: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    order: usize,
    terms: Vec<Vec<RawEntry>>,
}

/// An algebra together with the optional data that constructions and checks read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: SuperAlgebra,
    pub form: Option<BilinearForm>,
    pub maps: BTreeMap<String, Matrix>,
    pub weight: Option<Scalar>,
    pub xi: Option<Scalar>,
}

/// Sparse terms `G₁, …, G_N` of a truncated deformation, not yet bound to a base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationDocument {
    pub order: usize,
    pub terms: Vec<Vec<(usize, usize, usize, Scalar)>>,
}

/// Either kind of document, told apart by its top-level fields.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Algebra(AlgebraDocument),
    Deformation(DeformationDocument),
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(format!("line {}, column {}", e.line(), e.column()), strip_position(&e.to_string()))
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn scalar_at(text: &str, location: impl Into<String>) -> Result<Scalar> {
    let location = location.into();
    parse_scalar(text).map_err(|e| Error::parse(location, e.to_string()))
}

fn matrix_at(rows: &[Vec<String>], dim: usize, field: &str) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(Error::parse(field, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::parse(format!("{field}[{r}]"), format!("expected {dim} entries, found {}", row.len())));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, t)| scalar_at(t, format!("{field}[{r}][{c}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push(parsed);
    }
    if dim == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(out)
}

fn entries_at(raw: &[RawEntry], space: &GradedSpace, field: &str) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    let dim = space.dim();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(raw.len());
    for (n, e) in raw.iter().enumerate() {
        let loc = format!("{field}[{n}]");
        for (name, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if v >= dim {
                return Err(Error::parse(format!("{loc}.{name}"), format!("index {v} out of range for dimension {dim}")));
            }
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::parse(&loc, format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k)));
        }
        let c = scalar_at(&e.c, format!("{loc}.c"))?;
        out.push((e.i, e.j, e.k, c));
    }
    Ok(out)
}

fn space_from(parity: &[u8], dim: usize) -> Result<GradedSpace> {
    if parity.len() != dim {
        return Err(Error::parse("parity", format!("expected {dim} entries, found {}", parity.len())));
    }
    let parities = parity
        .iter()
        .enumerate()
        .map(|(i, &b)| Parity::from_bit(b).ok_or_else(|| Error::parse(format!("parity[{i}]"), format!("parity must be 0 or 1, got {b}"))))
        .collect::<Result<Vec<_>>>()?;
    GradedSpace::new(parities).map_err(|e| Error::parse("parity", strip_kind(&e)))
}

fn strip_kind(e: &Error) -> String {
    match e {
        Error::Input(m) | Error::Dimension(m) | Error::Invariant(m) => m.clone(),
        other => other.to_string(),
    }
}

impl AlgebraDocument {
    pub fn new(algebra: SuperAlgebra) -> Self {
        AlgebraDocument { algebra, form: None, maps: BTreeMap::new(), weight: None, xi: None }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawAlgebra = serde_json::from_str(text).map_err(json_error)?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawAlgebra) -> Result<Self> {
        let space = space_from(&raw.parity, raw.dim)?;
        let dim = raw.dim;
        let entries = entries_at(&raw.mul, &space, "mul")?;
        for (n, (i, j, k, c)) in entries.iter().enumerate() {
            if !c.is_zero() && space.parity(*k) != space.parity(*i) + space.parity(*j) {
                return Err(Error::parse(
                    format!("mul[{n}]"),
                    format!(
                        "e{i}·e{j} has parity {} but e{k} is {}",
                        space.parity(*i) + space.parity(*j),
                        space.parity(*k)
                    ),
                ));
            }
        }
        let alpha = match &raw.alpha {
            Some(rows) => matrix_at(rows, dim, "alpha")?,
            None => Matrix::identity(dim),
        };
        let algebra = SuperAlgebra::from_entries(space.clone(), entries, alpha).map_err(|e| Error::parse("alpha", strip_kind(&e)))?;
        let form = match &raw.form {
            Some(rows) => Some(BilinearForm::new(space.clone(), matrix_at(rows, dim, "form")?)?),
            None => None,
        };
        let mut maps = BTreeMap::new();
        for (name, rows) in &raw.maps {
            maps.insert(name.clone(), matrix_at(rows, dim, &format!("maps.{name}"))?);
        }
        let weight = raw.weight.as_deref().map(|t| scalar_at(t, "weight")).transpose()?;
        let xi = raw.xi.as_deref().map(|t| scalar_at(t, "xi")).transpose()?;
        Ok(AlgebraDocument { algebra, form, maps, weight, xi })
    }

    /// The named map as an even map on the algebra's space.
    pub fn map(&self, name: &str) -> Result<EvenMap> {
        let m = self
            .maps
            .get(name)
            .ok_or_else(|| Error::Input(format!("document has no map named \"{name}\"")))?;
        EvenMap::new(self.algebra.space().clone(), m.clone()).map_err(|_| Error::Input(format!("map \"{name}\" is not even")))
    }

    /// Canonical text: nonzero structure constants in `(i, j, k)` order, one per line.
    pub fn emit(&self) -> String {
        let a = &self.algebra;
        let n = a.dim();
        let mut out = String::from("{\n");
        let parity: Vec<String> = a.space().parities().iter().map(|p| p.bit().to_string()).collect();
        let _ = writeln!(out, "  \"dim\": {n},");
        let _ = write!(out, "  \"parity\": [{}],\n  \"mul\": [", parity.join(", "));
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = a.structure_constant(i, j, k);
                    if !c.is_zero() {
                        entries.push(format!("    {{\"i\": {i}, \"j\": {j}, \"k\": {k}, \"c\": {}}}", quoted(c)));
                    }
                }
            }
        }
        if entries.is_empty() {
            out.push_str("],\n");
        } else {
            let _ = write!(out, "\n{}\n  ],\n", entries.join(",\n"));
        }
        let _ = write!(out, "  \"alpha\": {}", matrix_text(a.alpha(), "  "));
        if let Some(form) = &self.form {
            let _ = write!(out, ",\n  \"form\": {}", matrix_text(form.gram(), "  "));
        }
        if !self.maps.is_empty() {
            out.push_str(",\n  \"maps\": {");
            let items: Vec<String> = self
                .maps
                .iter()
                .map(|(name, m)| format!("\n    {}: {}", serde_json::to_string(name).expect("string"), matrix_text(m, "    ")))
                .collect();
            let _ = write!(out, "{}\n  }}", items.join(","));
        }
        if let Some(w) = &self.weight {
            let _ = write!(out, ",\n  \"weight\": {}", quoted(w));
        }
        if let Some(x) = &self.xi {
            let _ = write!(out, ",\n  \"xi\": {}", quoted(x));
        }
        out.push_str("\n}\n");
        out
    }
}

fn quoted(c: &Scalar) -> String {
    format!("\"{}\"", format_scalar(c))
}

fn matrix_text(m: &Matrix, indent: &str) -> String {
    if m.rows() == 0 {
        return "[]".into();
    }
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("{indent}  [{}]", r.iter().map(quoted).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[\n{}\n{indent}]", rows.join(",\n"))
}

impl DeformationDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDeformation = serde_json::from_str(text).map_err(json_error)?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawDeformation) -> Result<Self> {
        if raw.order == 0 {
            return Err(Error::parse("order", "order must be at least 1"));
        }
        if raw.terms.len() != raw.order {
            return Err(Error::parse("terms", format!("order is {} but {} terms are given", raw.order, raw.terms.len())));
        }
        let mut terms = Vec::with_capacity(raw.order);
        for (t, entries) in raw.terms.iter().enumerate() {
            let mut seen = HashSet::new();
            let mut parsed = Vec::with_capacity(entries.len());
            for (n, e) in entries.iter().enumerate() {
                let loc = format!("terms[{t}][{n}]");
                if !seen.insert((e.i, e.j, e.k)) {
                    return Err(Error::parse(&loc, format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k)));
                }
                parsed.push((e.i, e.j, e.k, scalar_at(&e.c, format!("{loc}.c"))?));
            }
            terms.push(parsed);
        }
        Ok(DeformationDocument { order: raw.order, terms })
    }

    /// Binds the terms to `base`, checking indices and that every term is even.
    pub fn bind(&self, base: &Arc<SuperAlgebra>) -> Result<TruncatedDeformation> {
        let dim = base.dim();
        let mut cochains = Vec::with_capacity(self.order);
        for (t, entries) in self.terms.iter().enumerate() {
            for (n, &(i, j, k, _)) in entries.iter().enumerate() {
                if i >= dim || j >= dim || k >= dim {
                    return Err(Error::parse(format!("terms[{t}][{n}]"), format!("index out of range for dimension {dim}")));
                }
            }
            let g = Cochain::from_entries(
                base.clone(),
                2,
                Parity::Even,
                entries.iter().map(|(i, j, k, c)| (vec![*i, *j], *k, c.clone())),
            )
            .map_err(|e| Error::parse(format!("terms[{t}]"), format!("G{} is not even: {}", t + 1, strip_kind(&e))))?;
            cochains.push(g);
        }
        TruncatedDeformation::new(base.clone(), cochains)
    }

    pub fn from_deformation(d: &TruncatedDeformation) -> Self {
        let n = d.base().dim();
        let terms = d
            .terms()
            .iter()
            .map(|g| {
                let mut entries = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        for (k, c) in g.eval_basis(&[i, j]).iter().enumerate() {
                            if !c.is_zero() {
                                entries.push((i, j, k, c.clone()));
                            }
                        }
                    }
                }
                entries
            })
            .collect();
        DeformationDocument { order: d.order(), terms }
    }

    pub fn emit(&self) -> String {
        let mut out = format!("{{\n  \"order\": {},\n  \"terms\": [", self.order);
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|entries| {
                if entries.is_empty() {
                    return "\n    []".to_string();
                }
                let lines: Vec<String> = entries
                    .iter()
                    .map(|(i, j, k, c)| format!("      {{\"i\": {i}, \"j\": {j}, \"k\": {k}, \"c\": {}}}", quoted(c)))
                    .collect();
                format!("\n    [\n{}\n    ]", lines.join(",\n"))
            })
            .collect();
        let _ = write!(out, "{}\n  ]\n}}\n", terms.join(","));
        out
    }
}

impl Document {
    /// Parses either document kind; a top-level `terms` field marks a deformation.
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse("line 1, column 1", "document must be a JSON object"))?;
        if obj.contains_key("terms") {
            Ok(Document::Deformation(DeformationDocument::parse(text)?))
        } else {
            Ok(Document::Algebra(AlgebraDocument::parse(text)?))
        }
    }
}
