use serde::{Deserialize, Serialize};

use crate::arcs::Surface;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

use super::Complex;

/// On-disk form of a complex. Field names and facet order are stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub surface: Option<Surface>,
    pub vertices: Vec<VertexEntry>,
    pub facets: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: usize,
    pub label: String,
}

impl From<&Complex> for ComplexFile {
    fn from(c: &Complex) -> Self {
        ComplexFile {
            surface: c.surface(),
            vertices: c
                .vertices()
                .iter()
                .map(|id| VertexEntry {
                    id,
                    label: c.label(id).to_string(),
                })
                .collect(),
            facets: c.facets().to_vec(),
        }
    }
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<Complex> {
        let schema = |path: String, message: String| Error::Schema { path, message };
        let table_len = self.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0);
        if table_len > MAX_VERTICES {
            return Err(schema("vertices".into(), format!("vertex ids must be below {MAX_VERTICES}")));
        }
        let mut labels: Vec<Option<String>> = vec![None; table_len];
        for (k, entry) in self.vertices.iter().enumerate() {
            if labels[entry.id].replace(entry.label.clone()).is_some() {
                return Err(schema(format!("vertices[{k}].id"), format!("duplicate vertex id {}", entry.id)));
            }
        }
        let declared: Face = self.vertices.iter().map(|v| v.id).collect();
        let mut used = Face::EMPTY;
        for (k, facet) in self.facets.iter().enumerate() {
            if facet.is_empty() {
                return Err(schema(format!("facets[{k}]"), "empty facet".into()));
            }
            if let Some((pos, v)) = facet.iter().enumerate().find(|(_, v)| !declared.contains(*v)) {
                return Err(schema(format!("facets[{k}][{pos}]"), format!("unknown vertex id {v}")));
            }
            used = used | *facet;
        }
        if let Some(v) = (declared - used).min_vertex() {
            return Err(schema("vertices".into(), format!("vertex {v} lies in no facet")));
        }
        if let Some(s) = &self.surface {
            s.validate().map_err(|e| schema("surface".into(), e.to_string()))?;
        }
        let labels = labels.into_iter().map(Option::unwrap_or_default).collect();
        let complex = Complex::new(labels, self.facets.clone())?.with_surface(self.surface);
        if complex.facets().len() != self.facets.len() {
            return Err(schema("facets".into(), "facets must be maximal and distinct".into()));
        }
        Ok(complex)
    }
}

impl Complex {
    /// Canonical pretty-printed JSON; byte-identical for equal complexes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&ComplexFile::from(self)).expect("complex serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Complex> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        file.into_complex()
    }
}
