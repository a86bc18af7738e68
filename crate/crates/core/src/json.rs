//! JSON schemas for algebras, Heisenberg algebras and representations, and
//! canonical (sorted-key) output.
//!
//! Indices are 0-based; only brackets with `i < j` are listed and the rest
//! follow by skew-symmetry. Scalars are canonical strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::heisenberg::{heisenberg_labels, HeisenbergAlgebra};
use crate::homlie::{default_labels, BracketEntry, HomLieAlgebra};
use crate::representations::Representation;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub k: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<CoeffJson>,
}

/// The generic algebra schema; `m`, `lambda` and `P` together select the
/// Heisenberg schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
    pub alpha: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
    #[serde(default, rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Matrix>,
}

/// A validated algebra read from JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedAlgebra {
    Plain(HomLieAlgebra),
    Heisenberg(HeisenbergAlgebra),
}

impl ParsedAlgebra {
    pub fn algebra(&self) -> &HomLieAlgebra {
        match self {
            ParsedAlgebra::Plain(l) => l,
            ParsedAlgebra::Heisenberg(h) => h.algebra(),
        }
    }

    pub fn heisenberg(&self) -> Option<&HeisenbergAlgebra> {
        match self {
            ParsedAlgebra::Plain(_) => None,
            ParsedAlgebra::Heisenberg(h) => Some(h),
        }
    }

    pub fn to_json(&self) -> AlgebraJson {
        match self {
            ParsedAlgebra::Plain(l) => AlgebraJson::from_algebra(l),
            ParsedAlgebra::Heisenberg(h) => AlgebraJson::from_heisenberg(h),
        }
    }
}

impl AlgebraJson {
    pub fn from_algebra(l: &HomLieAlgebra) -> Self {
        AlgebraJson {
            dim: l.dim(),
            labels: l.labels().to_vec(),
            brackets: l
                .entries()
                .into_iter()
                .map(|e| BracketJson {
                    i: e.i,
                    j: e.j,
                    coeffs: e.coeffs.into_iter().map(|(k, c)| CoeffJson { k, c }).collect(),
                })
                .collect(),
            alpha: l.alpha().clone(),
            m: None,
            lambda: None,
            p: None,
        }
    }

    pub fn from_heisenberg(h: &HeisenbergAlgebra) -> Self {
        AlgebraJson {
            m: Some(h.m()),
            lambda: Some(h.lambda().clone()),
            p: Some(h.p().clone()),
            ..AlgebraJson::from_algebra(h.algebra())
        }
    }

    pub fn is_heisenberg(&self) -> bool {
        self.m.is_some() || self.lambda.is_some() || self.p.is_some()
    }

    /// The algebra as written, with shapes checked but no axioms.
    pub fn to_algebra(&self) -> Result<HomLieAlgebra> {
        let labels = if self.labels.is_empty() {
            match self.m {
                Some(m) if 2 * m + 1 == self.dim => heisenberg_labels(m),
                _ => default_labels(self.dim),
            }
        } else {
            self.labels.clone()
        };
        if labels.len() != self.dim {
            return Err(Error::Shape(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        let entries: Vec<BracketEntry> = self
            .brackets
            .iter()
            .map(|b| BracketEntry {
                i: b.i,
                j: b.j,
                coeffs: b.coeffs.iter().map(|c| (c.k, c.c.clone())).collect(),
            })
            .collect();
        HomLieAlgebra::from_entries(labels, &entries, self.alpha.clone())
    }

    /// The validated algebra: axioms for the generic schema, every defining
    /// condition for the Heisenberg schema.
    pub fn validate(&self) -> Result<ParsedAlgebra> {
        let l = self.to_algebra()?;
        if !self.is_heisenberg() {
            let report = l.validate();
            if !report.all_ok() {
                return Err(Error::InvalidAlgebra(
                    report
                        .witnesses
                        .iter()
                        .map(|w| format!("{} {:?}: {}", w.class, w.labels, w.detail))
                        .collect(),
                ));
            }
            return Ok(ParsedAlgebra::Plain(l));
        }
        let (Some(m), Some(lambda)) = (self.m, self.lambda.clone()) else {
            return Err(Error::Input("the Heisenberg schema needs both \"m\" and \"lambda\"".into()));
        };
        if self.dim != 2 * m + 1 {
            return Err(Error::Shape(format!("dim is {}, expected 2m + 1 = {}", self.dim, 2 * m + 1)));
        }
        let p = self.p.clone().unwrap_or_else(|| self.alpha.clone());
        if p != self.alpha {
            return Err(Error::Input("\"P\" and \"alpha\" differ".into()));
        }
        let h = HeisenbergAlgebra::build(m, lambda, p)?;
        if l.structure_constants() != h.algebra().structure_constants() {
            return Err(Error::Input("brackets are not [x_k, y_k] = z".into()));
        }
        if l.labels() != h.algebra().labels() {
            return Err(Error::Input(format!(
                "labels must be {:?}",
                h.algebra().labels()
            )));
        }
        Ok(ParsedAlgebra::Heisenberg(h))
    }
}

fn input_error(e: serde_json::Error) -> Error {
    Error::Input(e.to_string())
}

/// Parse without validating the axioms, enforcing `dim <= max_dim`.
pub fn parse_algebra_json(text: &str, max_dim: usize) -> Result<AlgebraJson> {
    let a: AlgebraJson = serde_json::from_str(text).map_err(input_error)?;
    if a.dim > max_dim {
        return Err(Error::TooLarge { dim: a.dim, max: max_dim });
    }
    Ok(a)
}

/// Parse and validate.
pub fn parse_algebra(text: &str, max_dim: usize) -> Result<ParsedAlgebra> {
    parse_algebra_json(text, max_dim)?.validate()
}

/// Parse a representation, checking that its matrices have consistent sizes.
pub fn parse_representation(text: &str) -> Result<Representation> {
    let r: Representation = serde_json::from_str(text).map_err(input_error)?;
    let checked = Representation::new(r.beta, r.action)?;
    if checked.module_dim != r.module_dim {
        return Err(Error::RepresentationShape(format!(
            "module_dim is {}, beta is {}x{}",
            r.module_dim, checked.module_dim, checked.module_dim
        )));
    }
    Ok(checked)
}

/// Pretty JSON with object keys sorted at every level.
pub fn canonical<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Internal(e.to_string()))?;
    serde_json::to_string_pretty(&v).map_err(|e| Error::Internal(e.to_string()))
}
