//! JSON document format for polynomial systems and instances.
//!
//! ```json
//! {
//!   "modulus": 101,
//!   "numVars": 4,
//!   "degreeVector": [2, 2],
//!   "polys": [
//!     [{"c": 1, "e": [1, 0, 0, 0]}, {"c": 3, "e": [0, 0, 1, 1]}],
//!     [{"c": 1, "e": [0, 1, 0, 0]}, {"c": -1, "e": [0, 0, 2, 0]}]
//!   ]
//! }
//! ```
//!
//! `c` is any integer and is reduced mod `modulus`; repeated exponent vectors
//! in one polynomial are summed. `degreeVector` is optional for plain
//! polynomial lists and required when the document describes an instance.
//! Serialization writes coefficients in `1..p` and terms in descending
//! grevlex order, so a parsed and re-serialized document is canonical.

use std::fmt::Display;

use serde::Deserialize;

use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::poly::field::PrimeField;
use crate::poly::instance::CIInstance;
use crate::poly::monomial::Monomial;
use crate::poly::sparse::SparsePoly;

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawDocument {
    modulus: u64,
    num_vars: usize,
    #[serde(default)]
    degree_vector: Option<Vec<u32>>,
    polys: Vec<Vec<RawTerm>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    c: i64,
    e: Vec<u16>,
}

/// A parsed polynomial document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDocument {
    pub field: PrimeField,
    pub num_vars: usize,
    pub degree_vector: Option<DegreeVector>,
    pub polys: Vec<SparsePoly>,
}

impl PolyDocument {
    pub fn from_instance(inst: &CIInstance) -> Self {
        Self {
            field: inst.field(),
            num_vars: inst.num_vars(),
            degree_vector: Some(inst.degrees().clone()),
            polys: inst.polys().to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let field = PrimeField::new(raw.modulus)?;
        let degree_vector = raw
            .degree_vector
            .as_deref()
            .map(DegreeVector::new)
            .transpose()?;
        let mut polys = Vec::with_capacity(raw.polys.len());
        for (i, terms) in raw.polys.iter().enumerate() {
            let mut p = SparsePoly::zero(field, raw.num_vars);
            for (j, t) in terms.iter().enumerate() {
                if t.e.len() != raw.num_vars {
                    return Err(Error::Parse(format!(
                        "polys[{i}][{j}]: exponent vector has length {}, numVars is {}",
                        t.e.len(),
                        raw.num_vars
                    )));
                }
                p.add_term(Monomial::new(t.e.clone()), field.from_i64(t.c));
            }
            polys.push(p);
        }
        Ok(Self {
            field,
            num_vars: raw.num_vars,
            degree_vector,
            polys,
        })
    }

    /// Canonical text: one term per line, terms in descending grevlex order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"modulus\": {},\n", self.field.modulus()));
        out.push_str(&format!("  \"numVars\": {},\n", self.num_vars));
        if let Some(d) = &self.degree_vector {
            out.push_str(&format!("  \"degreeVector\": {},\n", list(d.degrees())));
        }
        out.push_str("  \"polys\": [");
        for (i, p) in self.polys.iter().enumerate() {
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            for (j, (m, c)) in p.terms().rev().enumerate() {
                out.push_str(if j == 0 { "\n" } else { ",\n" });
                out.push_str(&format!("      {{\"c\": {c}, \"e\": {}}}", list(m.exps())));
            }
            out.push_str(if p.is_empty() { "]" } else { "\n    ]" });
        }
        out.push_str(if self.polys.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        out
    }

    pub fn into_instance(self) -> Result<CIInstance> {
        let degrees = self
            .degree_vector
            .ok_or_else(|| Error::Parse("instance documents need a degreeVector".into()))?;
        if self.num_vars != degrees.size() as usize {
            return Err(Error::InvalidInstance(format!(
                "numVars is {} but M + k = {}",
                self.num_vars,
                degrees.size()
            )));
        }
        CIInstance::new(self.field, degrees, self.polys)
    }
}

fn list<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn parse_instance(text: &str) -> Result<CIInstance> {
    PolyDocument::parse(text)?.into_instance()
}

pub fn instance_to_json(inst: &CIInstance) -> String {
    PolyDocument::from_instance(inst).to_json()
}
