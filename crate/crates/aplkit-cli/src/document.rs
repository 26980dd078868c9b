//! The on-disk workspace format: one TOML document holding named algebras,
//! linear maps, bilinear forms, two-tensors and coproducts.
//!
//! Structure constants are sparse triplet lines `"i j k  p/q"` (product
//! entry `(i, j, k)`), matrices are `"row col  p/q"`, coproducts are
//! `"k i j  p/q"`. Scalars are exact rational strings. `format_version`
//! is mandatory.

use aplkit::{
    AlgebraPresentation, BilinearForm, Coproduct, LinearMap, ProductName, Scalar, Tensor, TwoTensor,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug)]
pub struct DocumentError(pub String);

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DocumentError {}

fn err(msg: impl Into<String>) -> DocumentError {
    DocumentError(msg.into())
}

#[derive(Serialize, Deserialize, Clone, Debug, Default, PartialEq)]
pub struct Provenance {
    pub recipe: String,
    #[serde(default)]
    pub inputs: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
struct RawAlgebra {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default)]
    products: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Provenance>,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    #[serde(default)]
    entries: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Provenance>,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
struct RawCube {
    dim: usize,
    #[serde(default)]
    entries: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Provenance>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
struct RawDocument {
    format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    linear_maps: BTreeMap<String, RawMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    forms: BTreeMap<String, RawMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    two_tensors: BTreeMap<String, RawMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    coproducts: BTreeMap<String, RawCube>,
}

/// Parsed workspace: kernel objects by name plus provenance.
#[derive(Clone, Debug, Default)]
pub struct WorkspaceDocument {
    pub algebras: BTreeMap<String, (AlgebraPresentation, Option<Provenance>)>,
    pub linear_maps: BTreeMap<String, (LinearMap, Option<Provenance>)>,
    pub forms: BTreeMap<String, (BilinearForm, Option<Provenance>)>,
    pub two_tensors: BTreeMap<String, (TwoTensor, Option<Provenance>)>,
    pub coproducts: BTreeMap<String, (Coproduct, Option<Provenance>)>,
}

fn parse_scalar(tok: &str, context: &str) -> Result<Scalar, DocumentError> {
    tok.parse::<Scalar>()
        .map_err(|e| err(format!("{context}: {e}")))
}

fn parse_line(
    line: &str,
    indices: usize,
    context: &str,
) -> Result<(Vec<usize>, Scalar), DocumentError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != indices + 1 {
        return Err(err(format!(
            "{context}: entry {line:?} needs {indices} indices and a value"
        )));
    }
    let mut idx = Vec::with_capacity(indices);
    for t in &toks[..indices] {
        idx.push(
            t.parse::<usize>()
                .map_err(|e| err(format!("{context}: bad index {t:?}: {e}")))?,
        );
    }
    let value = parse_scalar(toks[indices], context)?;
    Ok((idx, value))
}

fn format_entry(idx: &[usize], value: &Scalar) -> String {
    let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
    format!("{}  {}", idx.join(" "), value)
}

impl WorkspaceDocument {
    pub fn parse(text: &str) -> Result<WorkspaceDocument, DocumentError> {
        let raw: RawDocument =
            toml::from_str(text).map_err(|e| err(format!("parse error: {e}")))?;
        if raw.format_version != FORMAT_VERSION {
            return Err(err(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                raw.format_version
            )));
        }
        let mut doc = WorkspaceDocument::default();
        for (name, a) in raw.algebras {
            let ctx = format!("algebra {name:?}");
            let mut alg = AlgebraPresentation::new(a.dim, a.basis.clone())
                .map_err(|e| err(format!("{ctx}: {e}")))?;
            for (pname, lines) in &a.products {
                let product = ProductName::parse(pname)
                    .ok_or_else(|| err(format!("{ctx}: unknown product {pname:?}")))?;
                let mut t = Tensor::zeros(&[a.dim, a.dim, a.dim]);
                for line in lines {
                    let (idx, value) = parse_line(line, 3, &ctx)?;
                    if idx.iter().any(|&i| i >= a.dim) {
                        return Err(err(format!("{ctx}: index out of range in {line:?}")));
                    }
                    t.set(&idx, value);
                }
                alg.set_product(product, t)
                    .map_err(|e| err(format!("{ctx}: {e}")))?;
            }
            doc.algebras.insert(name, (alg, a.meta));
        }
        for (name, m) in raw.linear_maps {
            let ctx = format!("linear map {name:?}");
            let mut map = LinearMap::zeros(m.rows, m.cols);
            for line in &m.entries {
                let (idx, value) = parse_line(line, 2, &ctx)?;
                if idx[0] >= m.rows || idx[1] >= m.cols {
                    return Err(err(format!("{ctx}: index out of range in {line:?}")));
                }
                map.set(idx[0], idx[1], value);
            }
            doc.linear_maps.insert(name, (map, m.meta));
        }
        for (name, m) in raw.forms {
            let ctx = format!("form {name:?}");
            if m.rows != m.cols {
                return Err(err(format!(
                    "{ctx}: must be square, got {}x{}",
                    m.rows, m.cols
                )));
            }
            let mut map = LinearMap::zeros(m.rows, m.cols);
            for line in &m.entries {
                let (idx, value) = parse_line(line, 2, &ctx)?;
                if idx[0] >= m.rows || idx[1] >= m.cols {
                    return Err(err(format!("{ctx}: index out of range in {line:?}")));
                }
                map.set(idx[0], idx[1], value);
            }
            doc.forms.insert(name, (BilinearForm::new(map), m.meta));
        }
        for (name, m) in raw.two_tensors {
            let ctx = format!("two-tensor {name:?}");
            if m.rows != m.cols {
                return Err(err(format!(
                    "{ctx}: must be square, got {}x{}",
                    m.rows, m.cols
                )));
            }
            let mut t = Tensor::zeros(&[m.rows, m.cols]);
            for line in &m.entries {
                let (idx, value) = parse_line(line, 2, &ctx)?;
                if idx[0] >= m.rows || idx[1] >= m.cols {
                    return Err(err(format!("{ctx}: index out of range in {line:?}")));
                }
                t.set(&idx, value);
            }
            let tt = TwoTensor::from_tensor(t).map_err(|e| err(format!("{ctx}: {e}")))?;
            doc.two_tensors.insert(name, (tt, m.meta));
        }
        for (name, c) in raw.coproducts {
            let ctx = format!("coproduct {name:?}");
            let mut cop = Coproduct::zero(c.dim);
            for line in &c.entries {
                let (idx, value) = parse_line(line, 3, &ctx)?;
                if idx.iter().any(|&i| i >= c.dim) {
                    return Err(err(format!("{ctx}: index out of range in {line:?}")));
                }
                cop.set(idx[0], idx[1], idx[2], value);
            }
            doc.coproducts.insert(name, (cop, c.meta));
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<WorkspaceDocument, DocumentError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
        WorkspaceDocument::parse(&text)
    }

    pub fn to_toml_string(&self) -> String {
        let mut raw = RawDocument {
            format_version: FORMAT_VERSION,
            algebras: BTreeMap::new(),
            linear_maps: BTreeMap::new(),
            forms: BTreeMap::new(),
            two_tensors: BTreeMap::new(),
            coproducts: BTreeMap::new(),
        };
        for (name, (alg, meta)) in &self.algebras {
            let dim = alg.dim();
            let mut products = BTreeMap::new();
            for pname in alg.product_names() {
                let t = alg.product(pname).unwrap();
                let mut lines = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        for k in 0..dim {
                            let v = t.get(&[i, j, k]);
                            if !v.is_zero() {
                                lines.push(format_entry(&[i, j, k], v));
                            }
                        }
                    }
                }
                products.insert(pname.as_str().to_string(), lines);
            }
            raw.algebras.insert(
                name.clone(),
                RawAlgebra {
                    dim,
                    basis: Some(alg.basis_labels().to_vec()),
                    products,
                    meta: meta.clone(),
                },
            );
        }
        let matrix_lines = |m: &LinearMap| -> Vec<String> {
            let mut lines = Vec::new();
            for r in 0..m.codomain_dim() {
                for c in 0..m.domain_dim() {
                    let v = m.get(r, c);
                    if !v.is_zero() {
                        lines.push(format_entry(&[r, c], v));
                    }
                }
            }
            lines
        };
        for (name, (m, meta)) in &self.linear_maps {
            raw.linear_maps.insert(
                name.clone(),
                RawMatrix {
                    rows: m.codomain_dim(),
                    cols: m.domain_dim(),
                    entries: matrix_lines(m),
                    meta: meta.clone(),
                },
            );
        }
        for (name, (b, meta)) in &self.forms {
            raw.forms.insert(
                name.clone(),
                RawMatrix {
                    rows: b.dim(),
                    cols: b.dim(),
                    entries: matrix_lines(b.matrix()),
                    meta: meta.clone(),
                },
            );
        }
        for (name, (t, meta)) in &self.two_tensors {
            let mut entries = Vec::new();
            for i in 0..t.dim() {
                for j in 0..t.dim() {
                    let v = t.get(i, j);
                    if !v.is_zero() {
                        entries.push(format_entry(&[i, j], v));
                    }
                }
            }
            raw.two_tensors.insert(
                name.clone(),
                RawMatrix {
                    rows: t.dim(),
                    cols: t.dim(),
                    entries,
                    meta: meta.clone(),
                },
            );
        }
        for (name, (c, meta)) in &self.coproducts {
            let mut entries = Vec::new();
            for k in 0..c.dim() {
                for i in 0..c.dim() {
                    for j in 0..c.dim() {
                        let v = c.get(k, i, j);
                        if !v.is_zero() {
                            entries.push(format_entry(&[k, i, j], v));
                        }
                    }
                }
            }
            raw.coproducts.insert(
                name.clone(),
                RawCube {
                    dim: c.dim(),
                    entries,
                    meta: meta.clone(),
                },
            );
        }
        toml::to_string_pretty(&raw).expect("serializable document")
    }

    pub fn save(&self, path: &Path) -> Result<(), DocumentError> {
        std::fs::write(path, self.to_toml_string())
            .map_err(|e| err(format!("cannot write {}: {e}", path.display())))
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraPresentation, DocumentError> {
        self.algebras
            .get(name)
            .map(|(a, _)| a)
            .ok_or_else(|| err(format!("no algebra named {name:?}")))
    }

    pub fn linear_map(&self, name: &str) -> Result<&LinearMap, DocumentError> {
        self.linear_maps
            .get(name)
            .map(|(m, _)| m)
            .ok_or_else(|| err(format!("no linear map named {name:?}")))
    }

    pub fn form(&self, name: &str) -> Result<&BilinearForm, DocumentError> {
        self.forms
            .get(name)
            .map(|(b, _)| b)
            .ok_or_else(|| err(format!("no form named {name:?}")))
    }

    pub fn two_tensor(&self, name: &str) -> Result<&TwoTensor, DocumentError> {
        self.two_tensors
            .get(name)
            .map(|(t, _)| t)
            .ok_or_else(|| err(format!("no two-tensor named {name:?}")))
    }

    pub fn coproduct(&self, name: &str) -> Result<&Coproduct, DocumentError> {
        self.coproducts
            .get(name)
            .map(|(c, _)| c)
            .ok_or_else(|| err(format!("no coproduct named {name:?}")))
    }

    /// Summary lines for the `report` command.
    pub fn inventory(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, (a, meta)) in &self.algebras {
            let products: Vec<&str> = a.product_names().map(|p| p.as_str()).collect();
            let mut line = format!(
                "algebra {name}: dim {}, products [{}]",
                a.dim(),
                products.join(", ")
            );
            if let Some(m) = meta {
                line.push_str(&format!(" (from {})", m.recipe));
            }
            out.push(line);
        }
        for (name, (m, _)) in &self.linear_maps {
            out.push(format!(
                "linear map {name}: {}x{}",
                m.codomain_dim(),
                m.domain_dim()
            ));
        }
        for (name, (b, _)) in &self.forms {
            out.push(format!("form {name}: dim {}", b.dim()));
        }
        for (name, (t, _)) in &self.two_tensors {
            out.push(format!(
                "two-tensor {name}: dim {}, skew: {}",
                t.dim(),
                t.is_skew()
            ));
        }
        for (name, (c, _)) in &self.coproducts {
            out.push(format!("coproduct {name}: dim {}", c.dim()));
        }
        out
    }
}
